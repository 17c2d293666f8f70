#include "symq/symmetric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "symq/error.hpp"

namespace symq {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

std::string flavor_name(Flavor f) { return f == Flavor::Symplectic ? "sp" : "o"; }

SymmetricQuiver SymmetricQuiver::build(const Quiver& q, const VertexPairs& vertex_pairs,
                                       const ArrowPairs& arrow_pairs) {
  SymmetricQuiver sq;
  sq.q_ = q;
  const std::size_t nv = q.num_vertices(), na = q.num_arrows();
  sq.sv_.assign(nv, npos);
  sq.sa_.assign(na, npos);
  auto assign = [](std::vector<std::size_t>& map, std::size_t x, std::size_t y, const std::string& what) {
    if (map[x] != npos && map[x] != y) fail(ErrorCode::NotInvolutive, "conflicting sigma on " + what);
    map[x] = y;
  };
  for (const auto& [i, j] : vertex_pairs) {
    if (!q.has_vertex(i) || !q.has_vertex(j)) fail(ErrorCode::InvalidArgument, "sigma references unknown vertex");
    auto vi = q.vertex_index(i), vj = q.vertex_index(j);
    assign(sq.sv_, vi, vj, "vertex " + std::to_string(i));
    assign(sq.sv_, vj, vi, "vertex " + std::to_string(j));
  }
  for (const auto& [a, b] : arrow_pairs) {
    auto ai = q.find_arrow(a), bi = q.find_arrow(b);
    if (!ai || !bi) fail(ErrorCode::InvalidArgument, "sigma references unknown arrow");
    assign(sq.sa_, *ai, *bi, "arrow " + a);
    assign(sq.sa_, *bi, *ai, "arrow " + b);
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (sq.sv_[v] == npos) fail(ErrorCode::NotInvolutive, "sigma undefined on vertex " + std::to_string(q.vertices()[v]));
  for (std::size_t a = 0; a < na; ++a)
    if (sq.sa_[a] == npos) fail(ErrorCode::NotInvolutive, "sigma undefined on arrow " + q.arrows()[a].name);

  for (std::size_t a = 0; a < na; ++a) {
    std::size_t b = sq.sa_[a];
    if (q.tail(b) != sq.sv_[q.head(a)] || q.head(b) != sq.sv_[q.tail(a)])
      fail(ErrorCode::NotContravariant, "sigma does not reverse arrow " + q.arrows()[a].name);
    if (sq.sv_[q.tail(a)] == q.head(a) && b != a)
      fail(ErrorCode::NotContravariant, "arrow " + q.arrows()[a].name + " joins x and sigma(x) but is not fixed");
  }

  // Sides: arrows with both endpoints non-fixed keep a side, sigma flips it.
  std::vector<int> val(nv, 0);
  bool feasible = true;
  for (std::size_t a = 0; a < na; ++a) {
    if (sq.sa_[a] == a) continue;
    if (sq.sv_[q.tail(a)] == q.tail(a) && sq.sv_[q.head(a)] == q.head(a))
      fail(ErrorCode::PartitionViolation, "arrow " + q.arrows()[a].name + " joins two fixed vertices");
  }
  for (std::size_t start = 0; start < nv && feasible; ++start) {
    if (sq.sv_[start] == start || val[start] != 0) continue;
    val[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && feasible) {
      auto u = queue.front();
      queue.pop_front();
      auto set = [&](std::size_t w, int s) {
        if (val[w] == 0) {
          val[w] = s;
          queue.push_back(w);
        } else if (val[w] != s) {
          feasible = false;
        }
      };
      set(sq.sv_[u], -val[u]);
      for (std::size_t a = 0; a < na; ++a) {
        if (sq.sa_[a] == a) continue;
        std::size_t t = q.tail(a), h = q.head(a);
        if (sq.sv_[t] == t || sq.sv_[h] == h) continue;
        if (t == u) set(h, val[u]);
        if (h == u) set(t, val[u]);
      }
    }
  }
  if (!feasible) {
    bool any_fixed = false;
    for (std::size_t v = 0; v < nv; ++v) any_fixed |= sq.sv_[v] == v;
    for (std::size_t a = 0; a < na; ++a) any_fixed |= sq.sa_[a] == a;
    if (any_fixed) fail(ErrorCode::PartitionViolation, "no positive part satisfies the partition property");
    sq.mixed_ = true;
    for (std::size_t v = 0; v < nv; ++v) val[v] = v < sq.sv_[v] ? 1 : -1;
  }
  sq.vside_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) sq.vside_[v] = static_cast<Side>(sq.sv_[v] == v ? 0 : val[v]);
  sq.aside_.assign(na, Side::Fixed);
  for (std::size_t a = 0; a < na; ++a) {
    std::size_t b = sq.sa_[a];
    if (b == a) continue;
    if (!sq.mixed_) {
      bool plus = sq.vside_[q.tail(a)] == Side::Plus || sq.vside_[q.head(a)] == Side::Plus;
      sq.aside_[a] = plus ? Side::Plus : Side::Minus;
      continue;
    }
    bool ta = sq.vside_[q.tail(a)] == Side::Plus, tb = sq.vside_[q.tail(b)] == Side::Plus;
    bool choose_a = ta != tb ? ta : a < b;
    sq.aside_[a] = choose_a ? Side::Plus : Side::Minus;
  }
  return sq;
}

std::vector<std::size_t> SymmetricQuiver::vertices_on(Side s) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vside_.size(); ++v)
    if (vside_[v] == s) out.push_back(v);
  return out;
}

std::vector<std::size_t> SymmetricQuiver::arrows_on(Side s) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < aside_.size(); ++a)
    if (aside_[a] == s) out.push_back(a);
  return out;
}

VertexPairs SymmetricQuiver::vertex_pairs() const {
  VertexPairs out;
  for (std::size_t v = 0; v < sv_.size(); ++v)
    if (v <= sv_[v]) out.emplace_back(q_.vertices()[v], q_.vertices()[sv_[v]]);
  return out;
}

ArrowPairs SymmetricQuiver::arrow_pairs() const {
  ArrowPairs out;
  for (std::size_t a = 0; a < sa_.size(); ++a)
    if (a <= sa_[a]) out.emplace_back(q_.arrows()[a].name, q_.arrows()[sa_[a]].name);
  return out;
}

SymmetricQuiver SymmetricQuiver::reflected_pair(std::size_t x) const {
  Quiver r = q_.reflected_at(x);
  if (sv_[x] != x) r = r.reflected_at(sv_[x]);
  return build(r, vertex_pairs(), arrow_pairs());
}

DimVec delta(const SymmetricQuiver& sq, const DimVec& a) {
  if (a.size() != sq.quiver().num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  DimVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[sq.sigma_vertex(i)];
  return d;
}

bool is_symmetric(const SymmetricQuiver& sq, const DimVec& a) { return delta(sq, a) == a; }

std::string SymmetricType::tag_name() const {
  switch (tag) {
    case SymTag::FiniteA: return "FiniteA";
    case SymTag::A201: return "A201";
    case SymTag::A202: return "A202";
    case SymTag::A02: return "A02";
    case SymTag::A11: return "A11";
    case SymTag::A00: return "A00";
    case SymTag::D10: return "D10";
    case SymTag::D01: return "D01";
  }
  return "?";
}

std::string SymmetricType::to_string() const {
  if (type_a_tilde()) return tag_name() + " k=" + std::to_string(k) + " l=" + std::to_string(l);
  return tag_name() + " n=" + std::to_string(n);
}

namespace {

[[noreturn]] void unsupported(const std::string& what) { fail(ErrorCode::UnsupportedSymmetricType, what); }

std::vector<std::size_t> incident(const Quiver& q, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (q.tail(a) == v || q.head(a) == v) out.push_back(a);
  return out;
}

std::size_t other_end(const Quiver& q, std::size_t a, std::size_t v) { return q.tail(a) == v ? q.head(a) : q.tail(a); }

// Component of v after deleting the given vertices and arrows.
std::set<std::size_t> component(const Quiver& q, std::size_t v, const std::set<std::size_t>& cut_vertices,
                                const std::set<std::size_t>& cut_arrows) {
  std::set<std::size_t> seen{v};
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto a : incident(q, u)) {
      if (cut_arrows.count(a)) continue;
      auto w = other_end(q, a, u);
      if (cut_vertices.count(w) || seen.count(w)) continue;
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen;
}

void walk_cycle(const Quiver& q, std::vector<std::size_t>& verts, std::vector<std::size_t>& arrows) {
  const std::size_t n = q.num_vertices();
  verts = {0};
  arrows.clear();
  std::size_t prev = npos, cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t next_arrow = npos;
    for (auto a : incident(q, cur))
      if (a != prev) {
        next_arrow = a;
        break;
      }
    arrows.push_back(next_arrow);
    cur = other_end(q, next_arrow, cur);
    prev = next_arrow;
    if (step + 1 < n) verts.push_back(cur);
  }
}

bool points_toward(const Quiver& q, std::size_t a, std::size_t v) { return q.head(a) == v; }

void layout_cycle(const SymmetricQuiver& sq, Layout& L) {
  const Quiver& q = sq.quiver();
  std::vector<std::size_t> v, e;
  walk_cycle(q, v, e);
  const std::size_t n = v.size();
  std::vector<std::size_t> fixed_v, fixed_a;
  for (std::size_t x = 0; x < q.num_vertices(); ++x)
    if (sq.vertex_fixed(x)) fixed_v.push_back(x);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (sq.arrow_fixed(a)) fixed_a.push_back(a);
  const int s = static_cast<int>(fixed_a.size()), t = static_cast<int>(fixed_v.size());
  L.type.s = s;
  L.type.t = t;
  if (s == 0 && t == 0) {
    L.type.tag = SymTag::A00;
    L.type.k = L.type.l = static_cast<int>(n / 2);
    L.cycle = v;
    L.cycle_arrows = e;
    return;
  }
  std::set<std::size_t> cut_v(fixed_v.begin(), fixed_v.end()), cut_a(fixed_a.begin(), fixed_a.end());
  std::size_t seed = npos;
  if (s == 2 && t == 0) {
    L.top_arrow = fixed_a[0];
    L.bottom_arrow = fixed_a[1];
    seed = q.tail(fixed_a[0]);
  } else if (s == 0 && t == 2) {
    L.type.tag = SymTag::A02;
    L.top_vertex = fixed_v[0];
    L.bottom_vertex = fixed_v[1];
    for (std::size_t x = 0; x < q.num_vertices() && seed == npos; ++x)
      if (!sq.vertex_fixed(x)) seed = x;
  } else if (s == 1 && t == 1) {
    L.type.tag = SymTag::A11;
    L.top_vertex = fixed_v[0];
    L.bottom_arrow = fixed_a[0];
    seed = q.tail(fixed_a[0]);
  } else {
    unsupported("Euclidean A with " + std::to_string(s) + " fixed arrows and " + std::to_string(t) + " fixed vertices");
  }
  auto left = component(q, seed, cut_v, cut_a);
  if (s == 2) L.type.tag = left.count(q.tail(fixed_a[1])) ? SymTag::A201 : SymTag::A202;

  const std::size_t m = left.size();
  auto at = [&](long long i) { return static_cast<std::size_t>(((i % (long long)n) + (long long)n) % (long long)n); };
  for (std::size_t i = 0; i < n; ++i) {
    if (!left.count(v[i])) continue;
    for (int d : {1, -1}) {
      auto vat = [&](long long k) { return v[at((long long)i + d * k)]; };
      auto eat = [&](long long k) { return d == 1 ? e[at((long long)i + k)] : e[at((long long)i - k - 1)]; };
      bool ok = true;
      for (std::size_t k = 0; k < m && ok; ++k) ok = left.count(vat((long long)k)) > 0;
      if (!ok) continue;
      if (L.top_vertex && vat((long long)m) != *L.top_vertex) continue;
      if (L.top_arrow && eat((long long)m - 1) != *L.top_arrow) continue;
      if (L.bottom_vertex && vat(-1) != *L.bottom_vertex) continue;
      if (L.bottom_arrow && eat(-1) != *L.bottom_arrow) continue;
      L.cycle.clear();
      L.cycle_arrows.clear();
      for (std::size_t k = 0; k < n; ++k) {
        L.cycle.push_back(vat((long long)k));
        L.cycle_arrows.push_back(eat((long long)k));
      }
      L.left.assign(L.cycle.begin(), L.cycle.begin() + (long long)m);
      int up = 0, down = 0;
      auto count = [&](std::size_t a, std::size_t upper) { (points_toward(q, a, upper) ? up : down)++; };
      for (std::size_t k = 0; k + 1 < m; ++k) count(L.cycle_arrows[k], L.cycle[k + 1]);
      if (L.top_vertex) count(L.cycle_arrows[m - 1], *L.top_vertex);
      if (L.bottom_vertex) count(L.cycle_arrows[n - 1], L.cycle[0]);
      L.type.k = 2 * down;
      L.type.l = 2 * up;
      return;
    }
  }
  unsupported("cannot place anchors on the cycle");
}

void layout_path(const SymmetricQuiver& sq, Layout& L) {
  const Quiver& q = sq.quiver();
  const std::size_t n = q.num_vertices();
  L.type.tag = SymTag::FiniteA;
  L.type.n = static_cast<int>(n);
  std::size_t end = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (incident(q, x).size() <= 1) {
      end = x;
      break;
    }
  std::vector<std::size_t> path{end}, arrows;
  std::size_t prev = npos;
  while (path.size() < n) {
    for (auto a : incident(q, path.back()))
      if (a != prev) {
        prev = a;
        arrows.push_back(a);
        path.push_back(other_end(q, a, path.back()));
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (sq.vertex_side(path[i]) != Side::Fixed && sq.sigma_vertex(path[i]) != path[n - 1 - i])
      unsupported("sigma does not reverse the path");
  bool flip = false;
  if (n % 2 == 0 && n > 0) {
    std::size_t mid = arrows[n / 2 - 1];
    if (!sq.arrow_fixed(mid)) unsupported("middle arrow not fixed");
    flip = q.tail(mid) != path[n / 2 - 1];
  } else if (n > 1) {
    std::size_t smallest = npos;
    for (std::size_t x = 0; x < n; ++x)
      if (!sq.vertex_fixed(x)) {
        smallest = x;
        break;
      }
    flip = std::find(path.begin(), path.begin() + (long long)(n / 2), smallest) == path.begin() + (long long)(n / 2);
  }
  if (flip) std::reverse(path.begin(), path.end());
  L.path = path;
  L.left.assign(path.begin(), path.begin() + (long long)(n / 2));
}

void layout_d(const SymmetricQuiver& sq, Layout& L) {
  const Quiver& q = sq.quiver();
  std::vector<std::size_t> fixed_v, fixed_a;
  for (std::size_t x = 0; x < q.num_vertices(); ++x)
    if (sq.vertex_fixed(x)) fixed_v.push_back(x);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (sq.arrow_fixed(a)) fixed_a.push_back(a);
  const std::size_t nv = q.num_vertices();
  L.type.s = static_cast<int>(fixed_a.size());
  L.type.t = static_cast<int>(fixed_v.size());
  std::set<std::size_t> left;
  std::size_t center_end = npos;  // spine vertex adjacent to the center
  if (fixed_a.size() == 1 && fixed_v.empty()) {
    L.type.tag = SymTag::D10;
    L.type.n = static_cast<int>(nv / 2);
    L.center_arrow = fixed_a[0];
    center_end = q.tail(fixed_a[0]);
    left = component(q, center_end, {}, {fixed_a[0]});
  } else if (fixed_v.size() == 1 && fixed_a.empty()) {
    L.type.tag = SymTag::D01;
    L.type.n = static_cast<int>((nv + 1) / 2);
    std::size_t z = fixed_v[0];
    L.center_vertex = z;
    if (incident(q, z).size() == 4) {
      for (auto a : incident(q, z))
        if (q.head(a) == z) left.insert(q.tail(a));
      center_end = z;
    } else {
      std::size_t smallest = npos;
      for (std::size_t x = 0; x < nv && smallest == npos; ++x)
        if (x != z) smallest = x;
      left = component(q, smallest, {z}, {});
      for (auto a : incident(q, z))
        if (left.count(other_end(q, a, z))) center_end = other_end(q, a, z);
    }
  } else {
    unsupported("Euclidean D needs exactly one fixed vertex or one fixed arrow");
  }
  std::size_t hub = npos;
  if (center_end == L.center_vertex.value_or(npos)) {
    hub = center_end;
  } else {
    for (auto x : left) {
      std::size_t deg = 0;
      for (auto a : incident(q, x))
        if (left.count(other_end(q, a, x))) ++deg;
      if (deg == 3 || (deg == 2 && x == center_end && left.size() == 3)) hub = x;
    }
  }
  if (hub == npos) unsupported("Euclidean D without a branch vertex on the left");
  std::vector<std::size_t> leaf_arrows;
  for (auto a : incident(q, hub)) {
    auto w = other_end(q, a, hub);
    if (left.count(w) && incident(q, w).size() == 1) leaf_arrows.push_back(a);
  }
  if (leaf_arrows.size() != 2) unsupported("Euclidean D hub without two leaves");
  std::sort(leaf_arrows.begin(), leaf_arrows.end());
  L.arrow_a = leaf_arrows[0];
  L.arrow_b = leaf_arrows[1];
  L.leaf_a = other_end(q, L.arrow_a, hub);
  L.leaf_b = other_end(q, L.arrow_b, hub);
  L.spine = {hub};
  if (hub != center_end) {
    std::size_t prev_v = npos;
    while (L.spine.back() != center_end) {
      std::size_t cur = L.spine.back(), next = npos;
      for (auto a : incident(q, cur)) {
        auto w = other_end(q, a, cur);
        if (left.count(w) && w != prev_v && w != L.leaf_a && w != L.leaf_b) next = w;
      }
      if (next == npos) unsupported("broken spine");
      prev_v = cur;
      L.spine.push_back(next);
    }
  }
  L.left.assign(left.begin(), left.end());
}

std::optional<std::size_t> arrow_between(const Quiver& q, std::size_t x, std::size_t y) {
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if ((q.tail(a) == x && q.head(a) == y) || (q.tail(a) == y && q.head(a) == x)) return a;
  return std::nullopt;
}

}  // namespace

Layout analyze_layout(const SymmetricQuiver& sq) {
  const Quiver& q = sq.quiver();
  auto cls = validate_and_classify(q);
  Layout L;
  switch (cls.type) {
    case GraphType::DynkinA:
      layout_path(sq, L);
      break;
    case GraphType::EuclideanA:
      layout_cycle(sq, L);
      break;
    case GraphType::EuclideanD:
      layout_d(sq, L);
      break;
    default:
      unsupported("underlying graph " + cls.to_string() + " has no symmetric finite/tame type");
  }
  return L;
}

SymmetricType classify_symmetric(const SymmetricQuiver& sq) { return analyze_layout(sq).type; }

bool is_canonical(const SymmetricQuiver& sq, const Layout& L) {
  const Quiver& q = sq.quiver();
  switch (L.type.tag) {
    case SymTag::FiniteA:
      for (std::size_t i = 0; i + 1 < L.path.size(); ++i) {
        auto a = arrow_between(q, L.path[i], L.path[i + 1]);
        if (!a || q.tail(*a) != L.path[i]) return false;
      }
      return true;
    case SymTag::A00: {
      int sources = 0;
      for (std::size_t x = 0; x < q.num_vertices(); ++x) sources += q.is_source(x) ? 1 : 0;
      return sources == 1;
    }
    case SymTag::D10:
    case SymTag::D01: {
      if (q.head(L.arrow_a) != L.spine[0] || q.head(L.arrow_b) != L.spine[0]) return false;
      std::vector<std::size_t> chain = L.spine;
      if (L.center_vertex && chain.back() != *L.center_vertex) chain.push_back(*L.center_vertex);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        auto a = arrow_between(q, chain[i], chain[i + 1]);
        if (!a || q.tail(*a) != chain[i]) return false;
      }
      return true;
    }
    default: {
      const std::size_t m = L.left.size(), n = L.cycle.size();
      for (std::size_t j = 0; j < m; ++j) {
        std::optional<std::size_t> below, above;
        if (j > 0) below = L.cycle_arrows[j - 1];
        else if (L.bottom_vertex) below = L.cycle_arrows[n - 1];
        if (j + 1 < m || L.top_vertex) above = L.cycle_arrows[j];
        if (below && above && q.head(*below) == L.left[j] && q.head(*above) == L.left[j]) return false;
      }
      return true;
    }
  }
}

bool is_admissible_sink(const SymmetricQuiver& sq, std::size_t x) {
  const Quiver& q = sq.quiver();
  if (sq.vertex_fixed(x) || !q.is_sink(x)) return false;
  return !arrow_between(q, x, sq.sigma_vertex(x)).has_value();
}

std::vector<std::size_t> admissible_sinks(const SymmetricQuiver& sq) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < sq.quiver().num_vertices(); ++x)
    if (is_admissible_sink(sq, x)) out.push_back(x);
  return out;
}

Normalization normalize_orientation(const SymmetricQuiver& sq) {
  const std::size_t cap = 200000;
  auto key = [](const SymmetricQuiver& s) {
    std::vector<bool> k;
    for (const auto& a : s.quiver().arrows()) k.push_back(a.tail < a.head);
    return k;
  };
  auto layout0 = analyze_layout(sq);
  if (is_canonical(sq, layout0)) return {{}, sq};
  struct Node {
    SymmetricQuiver s;
    std::vector<std::pair<int, int>> word;
  };
  std::deque<Node> queue{{sq, {}}};
  std::set<std::vector<bool>> seen{key(sq)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (auto x : admissible_sinks(node.s)) {
      SymmetricQuiver next = node.s.reflected_pair(x);
      auto k = key(next);
      if (seen.count(k)) continue;
      seen.insert(k);
      auto word = node.word;
      const auto& ids = sq.quiver().vertices();
      word.emplace_back(ids[x], ids[sq.sigma_vertex(x)]);
      if (is_canonical(next, analyze_layout(next))) return {word, next};
      if (seen.size() > cap) fail(ErrorCode::UnsupportedSymmetricType, "orientation search exceeded its budget");
      queue.push_back({std::move(next), std::move(word)});
    }
  }
  fail(ErrorCode::UnsupportedSymmetricType, "no canonical orientation reachable by admissible reflections");
}

}  // namespace symq
