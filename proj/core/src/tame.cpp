#include "symq/tame.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symq/error.hpp"
#include "symq/matrix.hpp"
#include "symq/reflection.hpp"

namespace symq {

namespace {

constexpr std::size_t kEnumerationCap = std::size_t{1} << 22;

int mod(int a, int r) { return ((a % r) + r) % r; }

std::vector<DimVec> regular_real_roots_below(const Quiver& q, const DimVec& h) {
  std::size_t total = 1;
  for (auto v : h) {
    total *= static_cast<std::size_t>(v + 1);
    if (total > kEnumerationCap) fail(ErrorCode::UnsupportedQuiver, "null root too large to enumerate simple regulars");
  }
  std::vector<DimVec> out;
  DimVec a(h.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    for (std::size_t i = 0; i < h.size(); ++i) {
      auto base = static_cast<std::size_t>(h[i] + 1);
      a[i] = static_cast<std::int64_t>(rest % base);
      rest /= base;
    }
    if (is_zero(a) || a == h) continue;
    if (tits_form(q, a) == 1 && defect(q, a) == 0) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool vertex_type(const SymmetricQuiver& sq, const DimVec& e) {
  for (std::size_t x = 0; x < e.size(); ++x)
    if (sq.vertex_fixed(x) && e[x] != 0) return true;
  return false;
}

std::optional<std::size_t> fixed_arrow_at(const SymmetricQuiver& sq, const DimVec& e) {
  const Quiver& q = sq.quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (sq.arrow_fixed(a) && e[q.tail(a)] != 0) return a;
  return std::nullopt;
}

const char* orbit_prefix(int o) {
  static const char* names[] = {"e", "e'", "e''"};
  return names[std::min(o, 2)];
}

}  // namespace

TauOrbits tau_orbits(const SymmetricQuiver& sq) {
  auto type = classify_symmetric(sq);
  if (!type.tame()) fail(ErrorCode::UnsupportedSymmetricType, "tau orbits need a tame symmetric quiver");
  const Quiver& q = sq.quiver();
  TauOrbits out;
  out.sq = sq;
  out.h = null_root(q);

  auto roots = regular_real_roots_below(q, out.h);
  std::set<DimVec> seen;
  std::vector<std::vector<DimVec>> cycles;
  for (const auto& r : roots) {
    if (seen.count(r)) continue;
    std::vector<DimVec> cyc{r};
    seen.insert(r);
    for (;;) {
      DimVec nxt = coxeter_dim(q, cyc.back(), Direction::Plus);
      if (nxt == r) break;
      if (seen.count(nxt) || cyc.size() > roots.size()) fail(ErrorCode::UnsupportedQuiver, "tau does not permute regular roots");
      seen.insert(nxt);
      cyc.push_back(nxt);
    }
    DimVec sum = q.zero_dim();
    for (const auto& c : cyc) sum = add(sum, c);
    if (sum == out.h) cycles.push_back(std::move(cyc));
  }

  auto find_in = [&](const DimVec& v) -> OrbitRef {
    for (std::size_t o = 0; o < cycles.size(); ++o)
      for (std::size_t i = 0; i < cycles[o].size(); ++i)
        if (cycles[o][i] == v) return {static_cast<int>(o), static_cast<int>(i)};
    fail(ErrorCode::UnsupportedQuiver, "delta does not preserve the simple regulars");
  };

  // Rotate each cycle so index 0 is its anchor, then order the polygons.
  struct Candidate {
    std::vector<DimVec> e;
    int partner = -1;
    int fixed_count = 0;
  };
  std::vector<Candidate> cands(cycles.size());
  for (std::size_t o = 0; o < cycles.size(); ++o) {
    const auto& cyc = cycles[o];
    const int r = static_cast<int>(cyc.size());
    int partner = find_in(delta(sq, cyc[0])).orbit;
    int anchor = 0;
    if (partner == static_cast<int>(o)) {
      std::vector<int> fixed_idx, edge_idx;
      for (int i = 0; i < r; ++i) {
        auto s = find_in(delta(sq, cyc[static_cast<std::size_t>(i)])).index;
        if (s == i) fixed_idx.push_back(i);
        if (s == mod(i + 1, r)) edge_idx.push_back(i);
      }
      auto better = [&](int a, int b) {
        bool va = vertex_type(sq, cyc[static_cast<std::size_t>(a)]);
        bool vb = vertex_type(sq, cyc[static_cast<std::size_t>(b)]);
        if (va != vb) return !va;
        return cyc[static_cast<std::size_t>(a)] < cyc[static_cast<std::size_t>(b)];
      };
      const auto& pool = fixed_idx.empty() ? edge_idx : fixed_idx;
      if (pool.empty()) fail(ErrorCode::UnsupportedQuiver, "sigma acts on a polygon without a fixed vertex or edge");
      anchor = *std::min_element(pool.begin(), pool.end(), better);
      cands[o].fixed_count = static_cast<int>(fixed_idx.size());
    } else {
      anchor = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    }
    cands[o].partner = partner;
    for (int i = 0; i < r; ++i) cands[o].e.push_back(cyc[static_cast<std::size_t>(mod(anchor + i, r))]);
  }
  // Swapped partner polygons are indexed so that e'_0 = delta e_0.
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &ca = cands[a], &cb = cands[b];
    if (ca.e.size() != cb.e.size()) return ca.e.size() > cb.e.size();
    bool sa = ca.partner == static_cast<int>(a), sb = cb.partner == static_cast<int>(b);
    if (sa != sb) return sa;
    if (ca.fixed_count != cb.fixed_count) return ca.fixed_count > cb.fixed_count;
    return ca.e.front() < cb.e.front();
  });
  std::vector<bool> placed(cands.size(), false);
  std::vector<std::vector<DimVec>> final_cycles;
  for (auto o : order) {
    if (placed[o]) continue;
    placed[o] = true;
    final_cycles.push_back(cands[o].e);
    auto p = static_cast<std::size_t>(cands[o].partner);
    if (p != o && !placed[p]) {
      placed[p] = true;
      const auto& base = cands[o].e;
      const int r = static_cast<int>(base.size());
      std::vector<DimVec> e;
      DimVec start = delta(sq, base[0]);
      e.push_back(start);
      for (int i = 1; i < r; ++i) e.push_back(coxeter_dim(q, e.back(), Direction::Plus));
      final_cycles.push_back(std::move(e));
    }
  }

  static const char* names[] = {"delta", "delta_prime", "delta_second"};
  cycles = final_cycles;
  for (std::size_t o = 0; o < cycles.size(); ++o) {
    TauOrbit orb;
    orb.name = o < 3 ? names[o] : "delta_" + std::to_string(o);
    orb.e = cycles[o];
    for (const auto& e : orb.e) orb.sigma.push_back(find_in(delta(sq, e)));
    for (std::size_t i = 0; i < orb.e.size(); ++i) {
      const auto& s = orb.sigma[i];
      if (s.orbit == static_cast<int>(o) && s.index == static_cast<int>(i)) orb.part.push_back(IndexPart::Delta);
      else if (s.orbit > static_cast<int>(o) || (s.orbit == static_cast<int>(o) && s.index > static_cast<int>(i)))
        orb.part.push_back(IndexPart::Plus);
      else
        orb.part.push_back(IndexPart::Minus);
    }
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

CanonicalDecomposition canonical_decomposition(const TauOrbits& t, const DimVec& d) {
  const Quiver& q = t.sq.quiver();
  if (d.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!is_nonneg(d)) fail(ErrorCode::InvalidArgument, "dimension vector has a negative entry");
  if (!is_symmetric(t.sq, d)) fail(ErrorCode::NotSymmetric, "dimension vector is not symmetric");
  if (defect(q, d) != 0) fail(ErrorCode::NotRegular, "dimension vector has nonzero defect");

  std::vector<RationalVector> cols;
  auto push = [&](const DimVec& v) {
    RationalVector c;
    for (auto x : v) c.emplace_back(x);
    cols.push_back(std::move(c));
  };
  push(t.h);
  for (const auto& o : t.orbits)
    for (std::size_t i = 0; i + 1 < o.rank(); ++i) push(o.e[i]);
  Matrix a(q.num_vertices(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < q.num_vertices(); ++r) a(r, c) = cols[c][r];
  RationalVector b;
  for (auto x : d) b.emplace_back(x);
  auto sol = solve(a, b);
  if (!sol) fail(ErrorCode::NotRegular, "dimension vector is not in the span of the regular simples");
  auto to_int = [](const Rational& r) {
    if (r.get_den() != 1) fail(ErrorCode::NotRegular, "non-integral regular coordinates");
    return static_cast<std::int64_t>(r.get_num().get_si());
  };
  CanonicalDecomposition out;
  out.p = to_int((*sol)[0]);
  std::size_t k = 1;
  for (const auto& o : t.orbits) {
    std::vector<std::int64_t> lab;
    for (std::size_t i = 0; i + 1 < o.rank(); ++i) lab.push_back(to_int((*sol)[k++]));
    lab.push_back(0);
    auto m = *std::min_element(lab.begin(), lab.end());
    for (auto& x : lab) x -= m;
    out.p += m;
    out.labels.push_back(std::move(lab));
  }
  if (out.p < 0) fail(ErrorCode::NotRegular, "dimension vector is not a sum of regular simples");
  return out;
}

CanonicalDecomposition canonical_decomposition(const TauOrbits& t, const DimVec& d, Flavor flavor) {
  auto c = canonical_decomposition(t, d);
  if (flavor == Flavor::Symplectic)
    for (std::size_t x = 0; x < d.size(); ++x)
      if (t.sq.vertex_fixed(x) && d[x] % 2 != 0)
        fail(ErrorCode::ParityViolation, "symplectic decomposition needs even labels through fixed vertices");
  return c;
}

int Arc::end(const TauOrbits& t) const {
  return mod(start + length - 1, static_cast<int>(t.orbits[static_cast<std::size_t>(orbit)].rank()));
}

Arc sigma_arc(const TauOrbits& t, const Arc& a) {
  const auto& o = t.orbits[static_cast<std::size_t>(a.orbit)];
  const auto img = o.sigma[static_cast<std::size_t>(a.end(t))];
  Arc s = a;
  s.orbit = img.orbit;
  s.start = img.index;
  if (a.length == static_cast<int>(o.rank())) s.start = o.sigma[static_cast<std::size_t>(a.start)].index;
  return s;
}

bool is_symmetric_arc(const TauOrbits& t, const Arc& a) {
  const int r = static_cast<int>(t.orbits[static_cast<std::size_t>(a.orbit)].rank());
  if (a.length == r) return t.orbits[static_cast<std::size_t>(a.orbit)].sigma[0].orbit == a.orbit;
  return sigma_arc(t, a) == a;
}

DimVec arc_dim(const TauOrbits& t, const Arc& a) {
  const auto& o = t.orbits[static_cast<std::size_t>(a.orbit)];
  const int r = static_cast<int>(o.rank());
  DimVec v = t.sq.quiver().zero_dim();
  for (int k = 0; k < a.length; ++k) v = add(v, o.e[static_cast<std::size_t>(mod(a.start + k, r))]);
  return v;
}

namespace {

bool arc_contains(const TauOrbits& t, const Arc& outer, const Arc& inner) {
  if (outer.orbit != inner.orbit || outer.length < inner.length) return false;
  const int r = static_cast<int>(t.orbits[static_cast<std::size_t>(outer.orbit)].rank());
  if (outer.length == r) return true;
  int off = mod(inner.start - outer.start, r);
  return off + inner.length <= outer.length;
}

void assign_q(const TauOrbits& t, std::vector<Arc>& arcs) {
  for (auto& a : arcs) {
    std::int64_t parent = 0;
    for (const auto& b : arcs)
      if (!(b == a) && arc_contains(t, b, a)) parent = std::max(parent, b.ind);
    a.q = a.ind - parent;
  }
}

bool arc_less(const Arc& a, const Arc& b) {
  if (a.orbit != b.orbit) return a.orbit < b.orbit;
  if (a.start != b.start) return a.start < b.start;
  return a.length < b.length;
}

}  // namespace

std::vector<Arc> admissible_arcs(const TauOrbits& t, const CanonicalDecomposition& c) {
  std::vector<Arc> out;
  for (std::size_t o = 0; o < t.orbits.size(); ++o) {
    const auto& lab = c.labels[o];
    const int r = static_cast<int>(lab.size());
    for (int i = 0; i < r; ++i)
      for (int len = 2; len <= r + 1; ++len) {
        const int j = mod(i + len - 1, r);
        if (lab[static_cast<std::size_t>(i)] != lab[static_cast<std::size_t>(j)]) continue;
        bool ok = true;
        for (int k = 1; k + 1 < len && ok; ++k) ok = lab[static_cast<std::size_t>(mod(i + k, r))] > lab[static_cast<std::size_t>(i)];
        if (!ok) continue;
        // [i, j] indexes the uniserial with composition factors e_i .. e_{j-1}.
        out.push_back({static_cast<int>(o), i, len - 1, lab[static_cast<std::size_t>(i)], 0});
      }
  }
  std::sort(out.begin(), out.end(), arc_less);
  assign_q(t, out);
  return out;
}

std::vector<Arc> decomposition_arcs(const TauOrbits& t, const CanonicalDecomposition& c) {
  std::vector<Arc> out;
  for (std::size_t o = 0; o < t.orbits.size(); ++o) {
    const auto& lab = c.labels[o];
    const int r = static_cast<int>(lab.size());
    const std::int64_t top = *std::max_element(lab.begin(), lab.end());
    for (std::int64_t level = 1; level <= top; ++level) {
      for (int i = 0; i < r; ++i) {
        if (lab[static_cast<std::size_t>(i)] < level || lab[static_cast<std::size_t>(mod(i - 1, r))] >= level) continue;
        int len = 0;
        std::int64_t low = lab[static_cast<std::size_t>(i)];
        while (len < r && lab[static_cast<std::size_t>(mod(i + len, r))] >= level) {
          low = std::min(low, lab[static_cast<std::size_t>(mod(i + len, r))]);
          ++len;
        }
        Arc a{static_cast<int>(o), i, len, low, 0};
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
    }
  }
  std::sort(out.begin(), out.end(), arc_less);
  assign_q(t, out);
  return out;
}

std::string mode_name(DecompositionMode m) {
  switch (m) {
    case DecompositionMode::Plain: return "plain";
    case DecompositionMode::Symplectic: return "sp";
    case DecompositionMode::Orthogonal: return "o";
  }
  return "?";
}

std::string summand_kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::Homogeneous: return "homogeneous";
    case SummandKind::Pair: return "pair";
    case SummandKind::Symmetric: return "symmetric";
    case SummandKind::PairedSymmetric: return "paired_symmetric";
    case SummandKind::HomogeneousExtended: return "homogeneous_extended";
  }
  return "?";
}

std::string format_orbit_vector(const TauOrbits& t, int orbit, const std::vector<std::int64_t>& coeffs) {
  const auto& o = t.orbits[static_cast<std::size_t>(orbit)];
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    if (o.part[i] == IndexPart::Minus) {
      const auto& s = o.sigma[i];
      out += "δ" + std::string(orbit_prefix(s.orbit)) + std::to_string(s.index + 1);
    } else {
      out += orbit_prefix(orbit) + std::to_string(i + 1);
    }
  }
  return out;
}

namespace {

std::string summand_label(const TauOrbits& t, const std::vector<Uniserial>& parts) {
  std::vector<std::vector<std::int64_t>> coeffs;
  for (const auto& o : t.orbits) coeffs.emplace_back(o.rank(), 0);
  int homogeneous = 0;
  for (const auto& u : parts) {
    if (u.orbit < 0) {
      ++homogeneous;
      continue;
    }
    const int r = static_cast<int>(t.orbits[static_cast<std::size_t>(u.orbit)].rank());
    homogeneous += u.length / r;
    for (int k = (u.length / r) * r; k < u.length; ++k)
      ++coeffs[static_cast<std::size_t>(u.orbit)][static_cast<std::size_t>(mod(u.start + k, r))];
  }
  std::string out;
  if (homogeneous) out = homogeneous == 1 ? "h" : std::to_string(homogeneous) + "h";
  for (std::size_t o = 0; o < coeffs.size(); ++o) {
    auto s = format_orbit_vector(t, static_cast<int>(o), coeffs[o]);
    if (s.empty()) continue;
    if (!out.empty()) out += "+";
    out += s;
  }
  return out;
}

DimVec uniserial_dim(const TauOrbits& t, const Uniserial& u) {
  if (u.orbit < 0) return t.h;
  return arc_dim(t, Arc{u.orbit, u.start, u.length, 0, 0});
}

Summand make_summand(const TauOrbits& t, SummandKind kind, std::vector<Uniserial> parts, std::int64_t mult) {
  Summand s;
  s.kind = kind;
  s.parts = std::move(parts);
  s.multiplicity = mult;
  s.dim = t.sq.quiver().zero_dim();
  for (const auto& u : s.parts) s.dim = add(s.dim, uniserial_dim(t, u));
  s.label = summand_label(t, s.parts);
  return s;
}

void push_merged(std::vector<Summand>& out, Summand s) {
  for (auto& o : out)
    if (o.kind == s.kind && o.parts == s.parts) {
      o.multiplicity += s.multiplicity;
      return;
    }
  out.push_back(std::move(s));
}

}  // namespace

std::vector<Summand> generic_decomposition(const TauOrbits& t, const DimVec& d, DecompositionMode mode) {
  CanonicalDecomposition c = mode == DecompositionMode::Symplectic ? canonical_decomposition(t, d, Flavor::Symplectic)
                                                                   : canonical_decomposition(t, d);
  auto arcs = decomposition_arcs(t, c);
  std::vector<Summand> out;
  std::int64_t homogeneous = c.p;
  std::vector<Summand> body;

  std::vector<bool> used(arcs.size(), false);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (used[i]) continue;
    const Arc& a = arcs[i];
    if (is_symmetric_arc(t, a)) continue;
    Arc s = sigma_arc(t, a);
    used[i] = true;
    for (std::size_t j = 0; j < arcs.size(); ++j)
      if (arcs[j] == s) used[j] = true;
    push_merged(body, make_summand(t, SummandKind::Pair, {{a.orbit, a.start, a.length}, {s.orbit, s.start, s.length}}, a.q));
  }

  // Symmetric arcs grouped by the sigma-fixed vertex or edge they pass through.
  for (std::size_t o = 0; o < t.orbits.size(); ++o) {
    const auto& orb = t.orbits[o];
    const int r = static_cast<int>(orb.rank());
    if (orb.sigma[0].orbit != static_cast<int>(o)) continue;
    DimVec dbar = t.sq.quiver().zero_dim();
    for (int i = 0; i < r; ++i) dbar = add(dbar, scale(c.labels[o][static_cast<std::size_t>(i)], orb.e[static_cast<std::size_t>(i)]));
    for (int n = 0; n < r; ++n) {
      const int sn = orb.sigma[static_cast<std::size_t>(n)].index;
      const bool is_vertex = sn == n;
      const bool is_edge = sn == mod(n + 1, r) && r > 1 && !is_vertex;
      if (!is_vertex && !is_edge) continue;
      std::vector<Arc> chain;
      for (const auto& a : arcs) {
        if (a.orbit != static_cast<int>(o) || !is_symmetric_arc(t, a)) continue;
        Arc center{static_cast<int>(o), n, is_vertex ? 1 : 2, 0, 0};
        if (arc_contains(t, a, center)) chain.push_back(a);
      }
      if (chain.empty()) continue;
      std::sort(chain.begin(), chain.end(), [](const Arc& x, const Arc& y) { return x.length > y.length; });
      std::vector<Arc> expanded;
      for (const auto& a : chain)
        for (std::int64_t k = 0; k < a.q; ++k) expanded.push_back(a);

      bool pair_up = false;
      const DimVec& en = orb.e[static_cast<std::size_t>(n)];
      const bool through_vertex = is_vertex && vertex_type(t.sq, en);
      if (mode == DecompositionMode::Symplectic) {
        pair_up = through_vertex;
      } else if (mode == DecompositionMode::Orthogonal && !through_vertex) {
        auto fa = fixed_arrow_at(t.sq, en);
        if (!fa && is_edge) fa = fixed_arrow_at(t.sq, orb.e[static_cast<std::size_t>(sn)]);
        if (fa) pair_up = dbar[t.sq.quiver().tail(*fa)] % 2 == 0;
      }
      if (!pair_up) {
        for (const auto& a : chain) push_merged(body, make_summand(t, SummandKind::Symmetric, {{a.orbit, a.start, a.length}}, a.q));
        continue;
      }
      std::size_t k = 0;
      for (; k + 1 < expanded.size(); k += 2) {
        const Arc& outer = expanded[k];
        const Arc& inner = expanded[k + 1];
        // [inner start, sigma(outer start)] and [outer start, sigma(inner start)].
        Uniserial u1{inner.orbit, inner.start, mod(outer.end(t) - inner.start, r) + 1};
        Uniserial u2{outer.orbit, outer.start, mod(inner.end(t) - outer.start, r) + 1};
        push_merged(body, make_summand(t, SummandKind::PairedSymmetric, {u1, u2}, 1));
      }
      if (k < expanded.size()) {
        const Arc& last = expanded[k];
        if (homogeneous > 0 && homogeneous % 2 == 1) {
          --homogeneous;
          push_merged(body, make_summand(t, SummandKind::HomogeneousExtended, {{last.orbit, last.start, last.length + r}}, 1));
        } else {
          push_merged(body, make_summand(t, SummandKind::Symmetric, {{last.orbit, last.start, last.length}}, 1));
        }
      }
    }
  }
  if (homogeneous > 0) out.push_back(make_summand(t, SummandKind::Homogeneous, {{-1, 0, 0}}, homogeneous));
  for (auto& s : body) out.push_back(std::move(s));
  return out;
}

Representation brick(const Quiver& q, const DimVec& e, std::uint64_t seed) {
  for (std::uint64_t k = 0; k < 32; ++k) {
    auto v = random_representation(q, e, seed + k * 0x632be59bd9b4e019ULL, -3, 3);
    if (dvw_and_homext(v, v).hom_dim == 1) return v;
  }
  fail(ErrorCode::Singular, "no brick found for the requested dimension vector");
}

namespace {

// Brick of dimension h that admits no map from a quasi-simple of an exceptional tube.
Representation homogeneous_brick(const TauOrbits& t, std::uint64_t seed) {
  const Quiver& q = t.sq.quiver();
  std::vector<Representation> quasi_simples;
  for (const auto& orb : t.orbits)
    for (const auto& e : orb.e) quasi_simples.push_back(brick(q, e, seed));
  for (std::uint64_t k = 0; k < 32; ++k) {
    auto v = brick(q, t.h, seed + 7919 * k);
    if (std::all_of(quasi_simples.begin(), quasi_simples.end(),
                    [&](const Representation& e) { return dvw_and_homext(e, v).hom_dim == 0; }))
      return v;
  }
  fail(ErrorCode::Singular, "no brick of dimension h outside the exceptional tubes");
}

}  // namespace

Representation uniserial_module(const TauOrbits& t, const Uniserial& u, std::uint64_t seed) {
  const Quiver& q = t.sq.quiver();
  if (u.orbit < 0) return homogeneous_brick(t, seed);
  const auto& orb = t.orbits[static_cast<std::size_t>(u.orbit)];
  const int r = static_cast<int>(orb.rank());
  std::vector<Representation> simples;
  for (int i = 0; i < r; ++i) simples.push_back(brick(q, orb.e[static_cast<std::size_t>(i)], seed + static_cast<std::uint64_t>(i)));
  Representation m = simples[static_cast<std::size_t>(mod(u.start, r))];
  for (int k = 1; k < u.length; ++k) {
    const Representation& s = simples[static_cast<std::size_t>(mod(u.start + k, r))];
    auto he = dvw_and_homext(m, s);
    if (he.ext_dim != 1) fail(ErrorCode::Singular, "extension space of a uniserial step is not one-dimensional");
    auto comp = cokernel_complement(he.matrix);
    const std::size_t coord = comp[0];
    Representation next = Representation::zero(q, add(s.dim, m.dim));
    std::size_t off = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const auto ta = q.tail(a), ha = q.head(a);
      const auto rows = static_cast<std::size_t>(s.dim[ha]), cols = static_cast<std::size_t>(m.dim[ta]);
      Matrix block(rows, cols);
      if (coord >= off && coord < off + rows * cols) block((coord - off) / cols, (coord - off) % cols) = 1;
      off += rows * cols;
      Matrix big(static_cast<std::size_t>(next.dim[ha]), static_cast<std::size_t>(next.dim[ta]));
      big.set_block(0, 0, s.maps[a]);
      big.set_block(0, static_cast<std::size_t>(s.dim[ta]), block);
      big.set_block(rows, static_cast<std::size_t>(s.dim[ta]), m.maps[a]);
      next.maps[a] = std::move(big);
    }
    m = std::move(next);
  }
  return m;
}

namespace {

// Line i of the four lines (1:0), (0:1), (1:1), (phi:psi) in a 2-dimensional space.
std::pair<Rational, Rational> leaf_line(std::size_t i, const Rational& phi, const Rational& psi) {
  switch (i) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {1, 1};
    default: return {phi, psi};
  }
}

Representation homogeneous_module(const Quiver& q, const DimVec& h, const Rational& phi, const Rational& psi) {
  Representation v = Representation::zero(q, h);
  const bool cycle = std::all_of(h.begin(), h.end(), [](std::int64_t x) { return x == 1; });
  if (cycle) {
    for (auto& m : v.maps) m(0, 0) = 1;
    for (std::size_t x = 0; x < q.num_vertices(); ++x) {
      if (!q.is_source(x)) continue;
      auto out = q.out_arrows(x);
      v.maps[out[0]](0, 0) = phi;
      v.maps[out[1]](0, 0) = psi;
      return v;
    }
  }
  std::vector<std::size_t> leaves;
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    if (h[x] == 1) leaves.push_back(x);
    else if (h[x] != 2) fail(ErrorCode::UnsupportedQuiver, "homogeneous modules are built for types A and D only");
  }
  if (leaves.size() != 4) fail(ErrorCode::UnsupportedQuiver, "expected four leaves");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto ta = q.tail(a), ha = q.head(a);
    if (h[ta] == 2 && h[ha] == 2) {
      v.maps[a] = Matrix::identity(2);
      continue;
    }
    const std::size_t leaf = h[ta] == 1 ? ta : ha;
    const auto k = static_cast<std::size_t>(std::find(leaves.begin(), leaves.end(), leaf) - leaves.begin());
    auto [x, y] = leaf_line(k, phi, psi);
    if (leaf == ta) {
      v.maps[a](0, 0) = x;
      v.maps[a](1, 0) = y;
    } else {
      v.maps[a](0, 0) = -y;
      v.maps[a](0, 1) = x;
    }
  }
  return v;
}

}  // namespace

Representation tame_regular_module(const TauOrbits& t, const RegularModuleSpec& spec, std::uint64_t seed) {
  if (spec.family == RegularFamily::Homogeneous) {
    if (spec.phi == 0 && spec.psi == 0) fail(ErrorCode::InvalidArgument, "(0 : 0) is not a point of the projective line");
    return homogeneous_module(t.sq.quiver(), t.h, spec.phi, spec.psi);
  }
  const char* names[] = {"delta", "delta_prime", "delta_second"};
  const std::string name = names[static_cast<int>(spec.family)];
  for (std::size_t o = 0; o < t.orbits.size(); ++o) {
    if (t.orbits[o].name != name) continue;
    const int r = static_cast<int>(t.orbits[o].rank());
    if (spec.i < 1 || spec.i > r || spec.j < 1 || spec.j > r)
      fail(ErrorCode::IndexOutOfOrbit, name + " has indices 1.." + std::to_string(r));
    int len = mod(spec.j - spec.i, r);
    if (len == 0) len = r;
    return uniserial_module(t, {static_cast<int>(o), spec.i - 1, len}, seed);
  }
  fail(ErrorCode::IndexOutOfOrbit, "no polygon named " + name);
}

Representation realize_summand(const TauOrbits& t, const Summand& s, std::uint64_t seed) {
  Representation out = Representation::zero(t.sq.quiver(), t.sq.quiver().zero_dim());
  std::uint64_t k = 0;
  for (const auto& u : s.parts) out = direct_sum(out, uniserial_module(t, u, seed + 1000 * k++));
  return out;
}

std::vector<Representation> realize_summand_copies(const TauOrbits& t, const Summand& s, std::uint64_t seed) {
  std::vector<Representation> out;
  std::uint64_t next = seed;
  for (std::int64_t c = 0; c < s.multiplicity; ++c) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 64) fail(ErrorCode::Singular, "no further homogeneous tube found");
      auto v = realize_summand(t, s, next++);
      const bool fresh = s.kind != SummandKind::Homogeneous ||
                         std::all_of(out.begin(), out.end(), [&](const Representation& w) { return dvw_and_homext(w, v).hom_dim == 0; });
      if (fresh) {
        out.push_back(std::move(v));
        break;
      }
    }
  }
  return out;
}

}  // namespace symq
