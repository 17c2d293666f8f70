#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "symq/error.hpp"
#include "symq/semiinvariant.hpp"
#include "symq/tame.hpp"

namespace symq {

namespace {

constexpr int kWitnesses = 3;
constexpr std::uint64_t kWitnessSeed = 60013;

struct Context {
  const SymmetricQuiver& sq;
  const Quiver& q;
  Flavor flavor;
  DimVec dim;
  std::vector<StructuredRepresentation> witnesses;

  Context(const SymmetricQuiver& s, Flavor f, DimVec d) : sq(s), q(s.quiver()), flavor(f), dim(std::move(d)) {
    for (int i = 0; i < kWitnesses; ++i)
      witnesses.push_back(random_structured(sq, flavor, dim, kWitnessSeed + static_cast<std::uint64_t>(i)));
  }

  std::string tag(const std::string& family) const {
    return family + " " + (flavor == Flavor::Symplectic ? "sp" : "o");
  }
  int id(std::size_t v) const { return q.vertices()[v]; }
  std::size_t size_of(const PathMatrix& t) const {
    std::size_t n = 0;
    for (int c : t.cols) n += static_cast<std::size_t>(dim[q.vertex_index(c)]);
    return n;
  }
};

Weight halved(Weight w) {
  for (auto& v : w) v /= 2;
  return w;
}

PathMatrix path_template(const Path& p) {
  PathMatrix t = PathMatrix::zero({p.to}, {p.from});
  t.add(0, 0, 1, p);
  return t;
}

PathMatrix arrow_template(const Context& c, std::size_t a) {
  return path_template(make_path(c.q, {c.q.arrows()[a].name}));
}

GeneratorDescriptor make_det(const Context& c, PathMatrix t, std::string provenance) {
  GeneratorDescriptor g;
  g.kind = GeneratorKind::Det;
  g.weight = template_weight(c.sq, t);
  g.tmpl = std::move(t);
  g.provenance = std::move(provenance);
  return g;
}

std::optional<GeneratorDescriptor> make_pf(const Context& c, const PathMatrix& t, std::string provenance) {
  auto norm = skew_normalize(t, c.sq, c.flavor, c.dim);
  if (!norm) return std::nullopt;
  GeneratorDescriptor g;
  g.kind = GeneratorKind::Pf;
  g.weight = halved(template_weight(c.sq, *norm));
  g.tmpl = std::move(*norm);
  g.provenance = std::move(provenance);
  return g;
}

// Pf when the template is skew on the flavor, Det otherwise; nothing when a Pfaffian would have odd size.
std::optional<GeneratorDescriptor> make_auto(const Context& c, const PathMatrix& t, const std::string& provenance) {
  if (t.rows.size() == t.cols.size() && is_pfaffian_type(t, c.sq, c.flavor, c.dim)) {
    if (c.size_of(t) % 2 != 0) return std::nullopt;
    return make_pf(c, t, provenance + " pf");
  }
  return make_det(c, t, provenance + " det");
}

PathMatrix sum_template(const Pencil& p) {
  PathMatrix s = p.psi_part;
  for (const auto* part : {&p.phi_part, &p.const_part})
    for (std::size_t r = 0; r < s.rows.size(); ++r)
      for (std::size_t k = 0; k < s.cols.size(); ++k)
        for (const auto& term : part->entries[r][k]) s.entries[r][k].push_back(term);
  return s;
}

bool skew_on_witnesses(const Context& c, const PathMatrix& t) {
  for (const auto& w : c.witnesses)
    if (!paired_template(t, w).is_skew_symmetric()) return false;
  return true;
}

// Coefficient family of a pencil; indices follow the homogeneous convention (psi exponent) when the
// constant part is empty and the phi exponent otherwise.
std::vector<GeneratorDescriptor> pencil_family(const Context& c, Pencil p, const std::string& provenance) {
  p.kind = PencilKind::Det;
  const PathMatrix sum = sum_template(p);
  if (auto norm = skew_normalization(sum, c.sq, c.flavor, c.dim)) {
    Pencil n{norm->apply(p.psi_part), norm->apply(p.phi_part), norm->apply(p.const_part), PencilKind::Pf};
    if (skew_on_witnesses(c, n.psi_part) && skew_on_witnesses(c, n.phi_part) && skew_on_witnesses(c, n.const_part)) {
      if (c.size_of(sum) % 2 != 0) return {};
      p = std::move(n);
    }
  }
  bool homogeneous = true;
  for (const auto& row : p.const_part.entries)
    for (const auto& e : row)
      if (!e.empty()) homogeneous = false;

  const int t = pencil_degree(p, c.dim, c.q);
  std::vector<bool> live(static_cast<std::size_t>(t) + 1, false);
  for (const auto& w : c.witnesses) {
    auto coeffs = pencil_coefficients(p, w);
    for (int e = 0; e <= t; ++e)
      if (coeffs[static_cast<std::size_t>(t - e)] != 0) live[static_cast<std::size_t>(e)] = true;
  }
  Weight weight = template_weight(c.sq, sum_template(p));
  const bool pf = p.kind == PencilKind::Pf;
  if (pf) weight = halved(weight);

  std::vector<GeneratorDescriptor> out;
  int low = t + 1, high = -1;
  for (int e = 0; e <= t; ++e)
    if (live[static_cast<std::size_t>(e)]) {
      low = std::min(low, e);
      high = std::max(high, e);
    }
  for (int e = 0; e <= t; ++e) {
    if (!live[static_cast<std::size_t>(e)]) continue;
    GeneratorDescriptor g;
    g.kind = pf ? GeneratorKind::PencilPfCoeff : GeneratorKind::PencilDetCoeff;
    g.phi_exponent = e;
    g.index = homogeneous ? high - e : e - low;
    g.weight = weight;
    g.pencil = p;
    g.provenance = provenance + (pf ? " pf pencil c" : " det pencil c") + std::to_string(g.index);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

// Drops descriptors that vanish on every witness or agree up to sign with an earlier one.
std::vector<GeneratorDescriptor> prune(const Context& c, std::vector<GeneratorDescriptor> in) {
  std::vector<GeneratorDescriptor> out;
  std::vector<std::vector<Rational>> seen;
  for (auto& g : in) {
    std::vector<Rational> vals;
    bool nonzero = false;
    for (const auto& w : c.witnesses) {
      vals.push_back(evaluate_generator(g, w));
      if (vals.back() != 0) nonzero = true;
    }
    if (!nonzero) continue;
    bool duplicate = false;
    for (const auto& s : seen) {
      bool same = true, opposite = true;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        same = same && vals[i] == s[i];
        opposite = opposite && vals[i] == -s[i];
      }
      if (same || opposite) duplicate = true;
    }
    if (duplicate) continue;
    seen.push_back(vals);
    out.push_back(std::move(g));
  }
  return out;
}

bool path_contains(const Context& c, const Path& p, std::optional<std::size_t> arrow, std::optional<std::size_t> vertex) {
  if (arrow) {
    const auto& name = c.q.arrows()[*arrow].name;
    if (std::find(p.arrows.begin(), p.arrows.end(), name) != p.arrows.end()) return true;
  }
  if (vertex) {
    for (const auto& name : p.arrows) {
      const auto a = c.q.arrow_index(name);
      if (c.q.head(a) == *vertex) return true;
    }
  }
  return false;
}

std::vector<std::size_t> sources(const Context& c) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < c.q.num_vertices(); ++v)
    if (c.q.in_arrows(v).empty()) out.push_back(v);
  return out;
}

// Homogeneous pencil on the cycle: one row per sink sigma(s), one column per source s.
Pencil cycle_pencil(const Context& c, const Layout& L) {
  auto src = sources(c);
  std::stable_sort(src.begin(), src.end(), [&](std::size_t a, std::size_t b) {
    const bool la = std::find(L.left.begin(), L.left.end(), a) != L.left.end();
    const bool lb = std::find(L.left.begin(), L.left.end(), b) != L.left.end();
    return la && !lb;
  });
  std::vector<int> cols, rows;
  for (auto s : src) {
    cols.push_back(c.id(s));
    rows.push_back(c.id(c.sq.sigma_vertex(s)));
  }
  Pencil p{PathMatrix::zero(rows, cols), PathMatrix::zero(rows, cols), PathMatrix::zero(rows, cols), PencilKind::Det};
  const bool anchored = L.top_arrow || L.top_vertex || L.bottom_arrow || L.bottom_vertex;
  if (src.size() == 1) {
    auto paths = paths_between(c.q, cols[0], rows[0]);
    if (paths.size() != 2) fail(ErrorCode::UnsupportedSymmetricType, "expected two paths around the cycle");
    std::size_t top = 0;
    if (anchored) {
      top = path_contains(c, paths[0], L.top_arrow, L.top_vertex) ? 0 : 1;
    } else {
      const auto first = [&](const Path& p) { return c.q.arrow_index(p.arrows.front()); };
      top = first(paths[0]) < first(paths[1]) ? 0 : 1;
    }
    p.psi_part.add(0, 0, 1, paths[top]);
    p.phi_part.add(0, 0, 1, paths[1 - top]);
    return p;
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (const auto& path : paths_between(c.q, cols[k], rows[r])) {
        if (path_contains(c, path, L.top_arrow, L.top_vertex)) p.phi_part.add(r, k, 1, path);
        else if (path_contains(c, path, L.bottom_arrow, L.bottom_vertex)) p.psi_part.add(r, k, 1, path);
        else p.const_part.add(r, k, 1, path);
      }
  return p;
}

Pencil tree_pencil(const Context& c, const Layout& L) {
  const std::vector<int> cols{c.id(L.leaf_a), c.id(L.leaf_b)};
  const std::vector<int> rows{c.id(c.sq.sigma_vertex(L.leaf_a)), c.id(c.sq.sigma_vertex(L.leaf_b))};
  Pencil p{PathMatrix::zero(rows, cols), PathMatrix::zero(rows, cols), PathMatrix::zero(rows, cols), PencilKind::Det};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 2; ++k)
      for (const auto& path : paths_between(c.q, cols[k], rows[r])) {
        PathMatrix& part = r != k ? p.const_part : r == 0 ? p.phi_part : p.psi_part;
        part.add(r, k, 1, path);
      }
  return p;
}

Pencil family_pencil(const Context& c, const Layout& L) {
  return L.type.type_a_tilde() ? cycle_pencil(c, L) : tree_pencil(c, L);
}

// One arrow per sigma-orbit, positive side first.
std::vector<std::size_t> arrow_representatives(const Context& c) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < c.q.num_arrows(); ++a) {
    const std::size_t s = c.sq.sigma_arrow(a);
    if (s == a) {
      out.push_back(a);
      continue;
    }
    const bool a_plus = c.sq.arrow_side(a) == Side::Plus, s_plus = c.sq.arrow_side(s) == Side::Plus;
    if (a_plus || (!s_plus && a < s)) out.push_back(a);
  }
  return out;
}

std::string arrow_name(const Context& c, std::size_t a) { return c.q.arrows()[a].name; }

std::vector<GeneratorDescriptor> cycle_family(const Context& c, const Layout& L) {
  const std::string tag = c.tag(L.type.tag_name());
  std::vector<GeneratorDescriptor> out;
  for (auto a : arrow_representatives(c)) {
    if (c.sq.arrow_fixed(a)) {
      if (auto g = make_auto(c, arrow_template(c, a), tag + " fixed " + arrow_name(c, a))) out.push_back(*g);
    } else {
      out.push_back(make_det(c, arrow_template(c, a), tag + " arrow " + arrow_name(c, a) + " det"));
    }
  }
  Pencil p = cycle_pencil(c, L);
  if (L.type.tag == SymTag::A00) {
    for (int sign : {1, -1}) {
      PathMatrix t = p.psi_part;
      for (const auto& term : p.phi_part.entries[0][0]) t.add(0, 0, Rational(sign) * term.coeff, term.path);
      if (!is_pfaffian_type(t, c.sq, c.flavor, c.dim)) continue;
      if (c.size_of(t) % 2 == 0)
        if (auto g = make_pf(c, t, tag + " pf sum " + (sign > 0 ? "plus" : "minus"))) out.push_back(*g);
      break;
    }
  }
  for (auto& g : pencil_family(c, p, tag)) out.push_back(std::move(g));
  return out;
}

std::vector<GeneratorDescriptor> tree_family(const Context& c, const Layout& L) {
  const std::string tag = c.tag(L.type.tag_name());
  std::vector<GeneratorDescriptor> out;
  const std::size_t sa = c.sq.sigma_arrow(L.arrow_a), sb = c.sq.sigma_arrow(L.arrow_b);
  for (auto a : arrow_representatives(c)) {
    if (a == L.arrow_a || a == L.arrow_b || a == sa || a == sb) continue;
    if (c.sq.arrow_fixed(a)) {
      if (auto g = make_auto(c, arrow_template(c, a), tag + " spine " + arrow_name(c, a))) out.push_back(*g);
    } else {
      out.push_back(make_det(c, arrow_template(c, a), tag + " spine " + arrow_name(c, a) + " det"));
    }
  }
  const int la = c.id(L.leaf_a), lb = c.id(L.leaf_b);
  const int sla = c.id(c.sq.sigma_vertex(L.leaf_a)), slb = c.id(c.sq.sigma_vertex(L.leaf_b));
  {
    PathMatrix t = PathMatrix::zero({c.id(L.spine.front())}, {la, lb});
    t.add(0, 0, 1, make_path(c.q, {arrow_name(c, L.arrow_a)}));
    t.add(0, 1, 1, make_path(c.q, {arrow_name(c, L.arrow_b)}));
    out.push_back(make_det(c, t, tag + " leaves det"));
  }
  auto through = [&](int from, int to) {
    auto paths = paths_between(c.q, from, to);
    if (paths.size() != 1) fail(ErrorCode::UnsupportedSymmetricType, "expected a unique path through the spine");
    return path_template(paths.front());
  };
  if (auto g = make_auto(c, through(la, sla), tag + " loop a")) out.push_back(*g);
  if (auto g = make_auto(c, through(lb, slb), tag + " loop b")) out.push_back(*g);
  if (!(L.type.tag == SymTag::D10 && c.flavor == Flavor::Orthogonal))
    out.push_back(make_det(c, through(la, slb), tag + " cross det"));
  for (auto& g : pencil_family(c, tree_pencil(c, L), tag)) out.push_back(std::move(g));
  return out;
}

std::string arc_label(const TauOrbits& t, const Arc& a) {
  const auto& o = t.orbits[static_cast<std::size_t>(a.orbit)];
  return o.name + "[" + std::to_string(a.start + 1) + "," + std::to_string(a.start + a.length) + "]";
}

}  // namespace

std::vector<GeneratorDescriptor> generators_finite(const SymmetricQuiver& sq, const DimVec& beta, Flavor flavor) {
  const Quiver& q = sq.quiver();
  Layout L;
  try {
    L = analyze_layout(sq);
  } catch (const Error&) {
    fail(ErrorCode::NotFiniteType, "quiver is not of finite symmetric type");
  }
  if (L.type.tag != SymTag::FiniteA) fail(ErrorCode::NotFiniteType, "quiver is not of type A");
  if (beta.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!is_symmetric(sq, beta)) fail(ErrorCode::AsymmetricDimension, "dimension vector is not symmetric");
  check_structured_dim(sq, flavor, beta);

  // Order the path from its source end and require every arrow to point forward.
  std::vector<std::size_t> path = L.path;
  const std::size_t n = path.size();
  if (n > 1 && !q.is_source(path.front())) std::reverse(path.begin(), path.end());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[path[i]] = i;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (pos[q.head(a)] != pos[q.tail(a)] + 1)
      fail(ErrorCode::UnsupportedQuiver, "generators are listed for the equioriented orientation only");

  Context c(sq, flavor, beta);
  auto vid = [&](std::size_t k) { return q.vertices()[path[k - 1]]; };  // 1-based position
  auto b = [&](std::size_t k) { return beta[path[k - 1]]; };
  auto interval = [&](std::size_t j, std::size_t i) {
    auto paths = paths_between(q, vid(j), vid(i + 1));
    return path_template(paths.front());
  };
  auto name = [](std::size_t j, std::size_t i) { return "V(" + std::to_string(j) + "," + std::to_string(i) + ")"; };

  std::vector<GeneratorDescriptor> out;
  const std::size_t m = n / 2;
  const bool even = n % 2 == 0;
  const std::string tag = std::string("A") + std::to_string(n) + " " + (flavor == Flavor::Symplectic ? "sp" : "o");
  // Intervals inside the positive half, orthogonal to beta.
  const std::size_t top = even ? m - 1 : m;
  for (std::size_t i = 1; i <= top && m >= 1; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      if (b(j) == b(i + 1)) out.push_back(make_det(c, interval(j, i), tag + " " + name(j, i) + " det"));
  // Intervals from i to sigma(i) - 1.
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t last = n - i;  // sigma(i) = n + 1 - i
    PathMatrix t = interval(i, last);
    const bool pf = even ? flavor == Flavor::Orthogonal : flavor == Flavor::Symplectic;
    if (!pf) {
      out.push_back(make_det(c, t, tag + " " + name(i, last) + " det"));
    } else if (b(i) % 2 == 0) {
      auto g = make_pf(c, t, tag + " " + name(i, last) + " pf");
      if (!g) fail(ErrorCode::Singular, "interval template is not skew on this flavor");
      out.push_back(*g);
    }
  }
  return prune(c, std::move(out));
}

std::vector<GeneratorDescriptor> generators_tame(const SymmetricQuiver& sq, const DimVec& d, Flavor flavor) {
  const Quiver& q = sq.quiver();
  Layout L;
  try {
    L = analyze_layout(sq);
  } catch (const Error&) {
    fail(ErrorCode::NotTame, "quiver is not of tame symmetric type");
  }
  if (!L.type.tame()) fail(ErrorCode::NotTame, "quiver is of finite type");
  if (!is_canonical(sq, L)) fail(ErrorCode::NotCanonical, "quiver is not in canonical orientation");
  if (d.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!is_symmetric(sq, d)) fail(ErrorCode::NotSymmetric, "dimension vector is not symmetric");
  if (flavor == Flavor::Symplectic)
    for (std::size_t x = 0; x < q.num_vertices(); ++x)
      if (sq.vertex_fixed(x) && d[x] % 2 != 0) return {};

  TauOrbits t = tau_orbits(sq);
  CanonicalDecomposition cd = canonical_decomposition(t, d, flavor);
  Context c(sq, flavor, d);

  bool plain = true;
  for (const auto& lab : cd.labels)
    for (auto v : lab)
      if (v != 0) plain = false;
  if (plain) return prune(c, L.type.type_a_tilde() ? cycle_family(c, L) : tree_family(c, L));

  std::vector<GeneratorDescriptor> out;
  const std::string tag = c.tag(L.type.tag_name());
  if (cd.p > 0)
    for (auto& g : pencil_family(c, family_pencil(c, L), tag)) out.push_back(std::move(g));
  for (const auto& arc : admissible_arcs(t, cd)) {
    Representation e = uniserial_module(t, {arc.orbit, arc.start, arc.length}, kWitnessSeed);
    if (euler_form(q, e.dim, d) != 0) fail(ErrorCode::Singular, "arc module is not orthogonal to d");
    PathMatrix tm = minimal_presentation(e);
    if (auto g = make_auto(c, tm, tag + " arc " + arc_label(t, arc))) out.push_back(*g);
  }
  return prune(c, std::move(out));
}

}  // namespace symq
