#include "symq/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "symq/error.hpp"

namespace symq {

Partition normalize_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int c = 1; c <= p.front(); ++c) {
    int h = 0;
    for (int part : p)
      if (part >= c) ++h;
    out.push_back(h);
  }
  return out;
}

std::vector<Partition> partitions(int size, int max_rows, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(size, max_part);
  return out;
}

namespace {

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (part(outer, i) < inner[i]) return false;
  return true;
}

bool weakly_decreasing(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return false;
  return true;
}

// Fills nu/lambda row by row, each row right to left, which is the reading order of the
// lattice-word condition.
std::int64_t count_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const std::size_t rows = nu.size();
  const int letters = static_cast<int>(mu.size());
  std::vector<std::vector<int>> t(rows);
  for (std::size_t r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(nu[r]), 0);
  std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
  std::int64_t count = 0;

  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    if (c < part(lambda, r)) {
      rec(r + 1, r + 1 < rows ? nu[r + 1] - 1 : 0);
      return;
    }
    const int right = c + 1 < nu[r] ? t[r][static_cast<std::size_t>(c + 1)] : letters;
    int above = 0;
    if (r > 0 && c >= part(lambda, r - 1)) above = t[r - 1][static_cast<std::size_t>(c)];
    const int hi = std::min({right, letters, static_cast<int>(r) + 1});
    for (int v = above + 1; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used[vi] == mu[vi - 1]) continue;
      if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
      ++used[vi];
      t[r][static_cast<std::size_t>(c)] = v;
      if (c == 0) rec(r + 1, r + 1 < rows ? nu[r + 1] - 1 : 0);
      else rec(r, c - 1);
      --used[vi];
    }
  };
  if (rows == 0) return 1;
  rec(0, nu[0] - 1);
  return count;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  const Partition lambda = normalize_partition(lambda_in), mu = normalize_partition(mu_in),
                  nu = normalize_partition(nu_in);
  for (const auto* p : {&lambda, &mu, &nu})
    if (!weakly_decreasing(*p) || std::any_of(p->begin(), p->end(), [](int v) { return v < 0; }))
      fail(ErrorCode::InvalidArgument, "not a partition");
  if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;

  static std::mutex m;
  static std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> cache;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::int64_t c = count_lr(lambda, mu, nu);
  std::lock_guard<std::mutex> lock(m);
  cache.emplace(std::move(key), c);
  return c;
}

std::vector<WeightedPartition> lr_product(const Partition& lambda_in, const Partition& mu_in, int max_rows) {
  const Partition lambda = normalize_partition(lambda_in), mu = normalize_partition(mu_in);
  std::vector<WeightedPartition> out;
  if (static_cast<int>(lambda.size()) > max_rows || static_cast<int>(mu.size()) > max_rows) return out;
  const int total = partition_size(lambda) + partition_size(mu);
  const int rows = std::min<int>(max_rows, static_cast<int>(lambda.size() + mu.size()));
  Partition nu;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    const auto i = nu.size();
    if (left == 0) {
      if (contains(nu, lambda) && contains(nu, mu)) {
        auto c = lr_coefficient(lambda, mu, nu);
        if (c > 0) out.push_back({nu, c});
      }
      return;
    }
    if (static_cast<int>(i) == rows) return;
    const int lo = std::max(part(lambda, i), part(mu, i));
    const int hi = std::min({cap, left, part(lambda, i) + part(mu, 0)});
    for (int v = hi; v >= std::max(lo, 1); --v) {
      nu.push_back(v);
      rec(left - v, v);
      nu.pop_back();
    }
  };
  rec(total, total);
  return out;
}

std::vector<WeightedPartition> lr_product(const std::vector<Partition>& factors, int max_rows) {
  std::vector<WeightedPartition> acc{{Partition{}, 1}};
  for (const auto& f : factors) {
    std::map<Partition, std::int64_t> next;
    for (const auto& [shape, mult] : acc)
      for (const auto& term : lr_product(shape, f, max_rows)) next[term.shape] += mult * term.mult;
    acc.clear();
    for (auto& [shape, mult] : next) acc.push_back({shape, mult});
  }
  return acc;
}

std::vector<Partition> rectangle_tensor(int l, int s, int m, int t) {
  if (l <= 0 || s <= 0) return {normalize_partition(Partition(static_cast<std::size_t>(std::max(t, 0)), m))};
  if (m <= 0 || t <= 0) return {Partition(static_cast<std::size_t>(s), l)};
  if (s < t) {
    std::swap(l, m);
    std::swap(s, t);
  }
  std::vector<Partition> out;
  std::vector<int> c(static_cast<std::size_t>(t));
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == t) {
      if (l + c.back() < m) return;
      Partition nu(static_cast<std::size_t>(s + t), l);
      for (int k = 0; k < t; ++k) nu[static_cast<std::size_t>(k)] = l + c[static_cast<std::size_t>(k)];
      for (int k = 1; k <= t; ++k) nu[static_cast<std::size_t>(s + k - 1)] = m - c[static_cast<std::size_t>(t - k)];
      out.push_back(normalize_partition(nu));
      return;
    }
    for (int v = cap; v >= 0; --v) {
      c[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

int classical_invariant_dim(const Partition& lambda_in, ClassicalGroup g, int n) {
  const Partition lambda = normalize_partition(lambda_in);
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  if (static_cast<int>(lambda.size()) > n) return 0;
  switch (g) {
    case ClassicalGroup::SL:
      if (lambda.empty()) return 1;
      return static_cast<int>(lambda.size()) == n &&
                     std::all_of(lambda.begin(), lambda.end(), [&](int v) { return v == lambda.front(); })
                 ? 1
                 : 0;
    case ClassicalGroup::O:
      return std::all_of(lambda.begin(), lambda.end(), [](int v) { return v % 2 == 0; }) ? 1 : 0;
    case ClassicalGroup::SO: {
      // lambda = 2 mu + (k^n): all n parts, zeros included, share one parity.
      const int parity = part(lambda, static_cast<std::size_t>(n - 1)) % 2;
      for (int i = 0; i < n; ++i)
        if (part(lambda, static_cast<std::size_t>(i)) % 2 != parity) return 0;
      return 1;
    }
    case ClassicalGroup::Sp: {
      if (n % 2 != 0) fail(ErrorCode::OddSymplecticDimension, "symplectic space of odd dimension");
      const Partition c = conjugate(lambda);
      return std::all_of(c.begin(), c.end(), [](int v) { return v % 2 == 0; }) ? 1 : 0;
    }
  }
  return 0;
}

int pair_semiinvariant_dim(const Partition& lambda, const Partition& mu, int n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "rank must be positive");
  if (static_cast<int>(lambda.size()) > n || static_cast<int>(mu.size()) > n)
    fail(ErrorCode::InvalidArgument, "weight longer than the rank");
  if (!weakly_decreasing(lambda) || !weakly_decreasing(mu)) fail(ErrorCode::InvalidArgument, "weight not dominant");
  // Pad with the last entry semantics of a GL weight: missing entries are zero.
  auto at = [](const Partition& p, int i) { return part(p, static_cast<std::size_t>(i - 1)); };
  for (int i = 1; i < n; ++i)
    if (at(lambda, i) - at(lambda, i + 1) != at(mu, n - i) - at(mu, n - i + 1)) return 0;
  return 1;
}

namespace {

enum class Slot { Plain, Dual, Fixed };

struct Attachment {
  std::size_t vertex;
  Slot slot;
};

struct ArrowOrbit {
  std::size_t arrow;
  bool fixed;
  int max_rows;  // bound on the rows of the parameter partition
  int max_part;
  std::vector<Attachment> ends;
};

}  // namespace

std::int64_t weight_space_dim(const SymmetricQuiver& sq, Flavor flavor, const DimVec& beta, const RationalVector& chi) {
  const Quiver& q = sq.quiver();
  const std::size_t nv = q.num_vertices();
  if (beta.size() != nv || chi.size() != nv) fail(ErrorCode::DomainMismatch, "vectors do not match the quiver");
  try {
    (void)analyze_layout(sq);
  } catch (const Error&) {
    fail(ErrorCode::UnsupportedQuiver, "weight spaces are computed for finite and tame symmetric quivers only");
  }
  if (nv > 10) fail(ErrorCode::UnsupportedQuiver, "quiver too large for the weight-space oracle");
  if (!is_symmetric(sq, beta)) fail(ErrorCode::AsymmetricDimension, "dimension vector is not symmetric");
  for (auto b : beta)
    if (b < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  for (std::size_t x = 0; x < nv; ++x) {
    if (sq.vertex_fixed(x) && chi[x] != 0) fail(ErrorCode::AsymmetricWeight, "weight is nonzero on a fixed vertex");
    if (sq.vertex_fixed(x) && flavor == Flavor::Symplectic && beta[x] % 2 != 0)
      fail(ErrorCode::OddSymplecticDimension, "odd dimension at a fixed vertex");
  }

  // One representative per vertex pair; V(sigma x) is the dual of V(x).
  std::vector<std::size_t> rep(nv);
  std::vector<bool> is_rep(nv, false);
  std::vector<int> k(nv, 0);
  int kmax = 0;
  for (std::size_t x = 0; x < nv; ++x) {
    const std::size_t s = sq.sigma_vertex(x);
    rep[x] = std::min(x, s);
    if (x == rep[x] && !sq.vertex_fixed(x)) {
      is_rep[x] = true;
      Rational w = chi[x] - chi[s];
      if (w.get_den() != 1) fail(ErrorCode::AsymmetricWeight, "weight is not integral on a vertex pair");
      k[x] = static_cast<int>(w.get_num().get_si());
      kmax = std::max(kmax, std::abs(k[x]));
    }
  }

  auto attach = [&](std::size_t v, bool dual) -> Attachment {
    if (sq.vertex_fixed(v)) return {v, Slot::Fixed};
    if (v == rep[v]) return {v, dual ? Slot::Dual : Slot::Plain};
    return {rep[v], dual ? Slot::Plain : Slot::Dual};
  };

  std::vector<ArrowOrbit> orbits;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const std::size_t s = sq.sigma_arrow(a);
    if (s < a) continue;
    ArrowOrbit o{a, s == a, 0, 0, {}};
    const std::size_t t = q.tail(a), h = q.head(a);
    if (o.fixed) {
      const int n = static_cast<int>(beta[t]);
      o.ends.push_back(attach(t, false));
      if (flavor == Flavor::Symplectic) {
        o.max_rows = n;
        o.max_part = 1 << 20;
      } else {
        o.max_rows = 1 << 20;
        o.max_part = n / 2;
      }
    } else {
      o.ends.push_back(attach(t, false));
      o.ends.push_back(attach(h, true));
      o.max_rows = static_cast<int>(std::min(beta[t], beta[h]));
      o.max_part = 1 << 20;
    }
    orbits.push_back(o);
  }
  if (orbits.size() > 8) fail(ErrorCode::UnsupportedQuiver, "too many arrows for the weight-space oracle");

  // Degree bound on each parameter partition.
  std::int64_t bsum = 0;
  for (auto b : beta) bsum += b;
  const int bound = static_cast<int>(bsum * kmax * static_cast<std::int64_t>(nv));

  // Schur functor attached to an endpoint for a parameter partition.
  auto shape_of = [&](const ArrowOrbit& o, const Partition& p) -> Partition {
    if (!o.fixed) return p;
    Partition doubled = p;
    for (auto& v : doubled) v *= 2;
    return flavor == Flavor::Symplectic ? doubled : conjugate(doubled);
  };

  // Size equations at the non-fixed representatives: sum plain - sum dual = k n.
  std::vector<std::vector<std::pair<std::size_t, int>>> incid(nv);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const auto& e : orbits[i].ends)
      if (e.slot != Slot::Fixed) incid[e.vertex].push_back({i, (e.slot == Slot::Plain ? 1 : -1) * (orbits[i].fixed ? 2 : 1)});
  std::vector<std::size_t> closes_at(nv, 0);
  for (std::size_t x = 0; x < nv; ++x)
    for (auto& [i, c] : incid[x]) closes_at[x] = std::max(closes_at[x], i);

  std::vector<int> sizes(orbits.size(), 0);
  std::vector<std::vector<int>> feasible;
  std::function<void(std::size_t)> enum_sizes = [&](std::size_t i) {
    if (i > 0) {
      for (std::size_t x = 0; x < nv; ++x) {
        if (!is_rep[x] || incid[x].empty() || closes_at[x] != i - 1) continue;
        std::int64_t lhs = 0;
        for (auto& [j, c] : incid[x]) lhs += static_cast<std::int64_t>(c) * sizes[j];
        if (lhs != static_cast<std::int64_t>(k[x]) * beta[x]) return;
      }
    }
    if (i == orbits.size()) {
      for (std::size_t x = 0; x < nv; ++x)
        if (is_rep[x] && incid[x].empty() && k[x] * beta[x] != 0) return;
      feasible.push_back(sizes);
      return;
    }
    // A vertex whose last incident arrow is i determines sizes[i].
    for (std::size_t x = 0; x < nv; ++x) {
      if (!is_rep[x] || incid[x].empty() || closes_at[x] != i) continue;
      std::int64_t rest = static_cast<std::int64_t>(k[x]) * beta[x];
      int coeff = 0;
      for (auto& [j, c] : incid[x]) {
        if (j == i) coeff += c;
        else rest -= static_cast<std::int64_t>(c) * sizes[j];
      }
      if (coeff == 0) continue;
      if (rest % coeff != 0 || rest / coeff < 0 || rest / coeff > bound) return;
      sizes[i] = static_cast<int>(rest / coeff);
      enum_sizes(i + 1);
      return;
    }
    for (int s = 0; s <= bound; ++s) {
      sizes[i] = s;
      enum_sizes(i + 1);
    }
  };
  enum_sizes(0);

  std::int64_t total = 0;
  std::vector<Partition> chosen(orbits.size());
  for (const auto& sz : feasible) {
    std::vector<std::vector<Partition>> options(orbits.size());
    bool empty = false;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      options[i] = partitions(sz[i], orbits[i].max_rows, orbits[i].max_part);
      if (options[i].empty()) empty = true;
    }
    if (empty) continue;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i < orbits.size()) {
        for (const auto& p : options[i]) {
          chosen[i] = p;
          rec(i + 1);
        }
        return;
      }
      std::int64_t prod = 1;
      for (std::size_t x = 0; x < nv && prod != 0; ++x) {
        if (!(is_rep[x] || sq.vertex_fixed(x))) continue;
        const int n = static_cast<int>(beta[x]);
        std::vector<Partition> plain, dual;
        for (std::size_t j = 0; j < orbits.size(); ++j)
          for (const auto& e : orbits[j].ends)
            if (e.vertex == x) (e.slot == Slot::Dual ? dual : plain).push_back(shape_of(orbits[j], chosen[j]));
        if (sq.vertex_fixed(x)) {
          std::int64_t m = 0;
          for (const auto& term : lr_product(plain, n))
            m += term.mult * classical_invariant_dim(term.shape, flavor == Flavor::Symplectic ? ClassicalGroup::Sp
                                                                                              : ClassicalGroup::SO,
                                                     n);
          prod *= m;
          continue;
        }
        auto pp = lr_product(plain, n), dd = lr_product(dual, n);
        std::int64_t m = 0;
        for (const auto& a : pp)
          for (const auto& b : dd) {
            bool match = true;
            for (int r = 0; r < n && match; ++r)
              match = part(a.shape, static_cast<std::size_t>(r)) == part(b.shape, static_cast<std::size_t>(r)) + k[x];
            if (match) m += a.mult * b.mult;
          }
        prod *= m;
      }
      total += prod;
    };
    rec(0);
  }
  return total;
}

}  // namespace symq
