#include "symq/semiinvariant.hpp"

#include <algorithm>
#include <set>

#include "symq/error.hpp"

namespace symq {

Weight weight_of_cV(const SymmetricQuiver& sq, const DimVec& alpha, Flavor) {
  const Quiver& q = sq.quiver();
  if (alpha.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  Weight w(q.num_vertices(), 0);
  for (std::size_t y = 0; y < q.num_vertices(); ++y) w[y] = Rational(static_cast<long>(alpha[y]));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) w[q.head(a)] -= Rational(static_cast<long>(alpha[q.tail(a)]));
  for (std::size_t y = 0; y < q.num_vertices(); ++y)
    if (sq.vertex_fixed(y)) w[y] = 0;
  return w;
}

Weight template_weight(const SymmetricQuiver& sq, const PathMatrix& t) {
  const Quiver& q = sq.quiver();
  Weight w(q.num_vertices(), 0);
  for (int c : t.cols) w[q.vertex_index(c)] += 1;
  for (int r : t.rows) w[q.vertex_index(r)] -= 1;
  for (std::size_t y = 0; y < q.num_vertices(); ++y)
    if (sq.vertex_fixed(y)) w[y] = 0;
  return w;
}

Weight gamma(const SymmetricQuiver& sq, const Weight& chi) {
  if (chi.size() != sq.quiver().num_vertices()) fail(ErrorCode::DomainMismatch, "weight does not match quiver");
  Weight out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) out[i] = -chi[sq.sigma_vertex(i)];
  return out;
}

Rational evaluate_cV(const Representation& v, const StructuredRepresentation& w) { return evaluate_cV(v, w.full()); }

Rational evaluate_cV(const Representation& v, const Representation& full) {
  if (!v.quiver.same_shape(full.quiver)) fail(ErrorCode::QuiverMismatch, "representations live on different quivers");
  if (euler_form(v.quiver, v.dim, full.dim) != 0)
    fail(ErrorCode::NonOrthogonalDimensions, "<dim V, dim W> is not zero");
  return determinant(dvw_and_homext(v, full).matrix);
}

bool is_pfaffian_type(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim) {
  if (t.rows.size() != t.cols.size()) fail(ErrorCode::NotSquare, "template has different numbers of rows and columns");
  return skew_normalization(t, sq, flavor, dim).has_value();
}

namespace {

void require_same_shape(const Pencil& p) {
  for (const auto* part : {&p.phi_part, &p.const_part})
    if (part->rows != p.psi_part.rows || part->cols != p.psi_part.cols)
      fail(ErrorCode::ShapeMismatch, "pencil parts have different shapes");
}

std::size_t template_size(const PathMatrix& t, const DimVec& dim, const Quiver& q) {
  std::size_t n = 0;
  for (int c : t.cols) n += static_cast<std::size_t>(dim[q.vertex_index(c)]);
  return n;
}

}  // namespace

int pencil_degree(const Pencil& p, const DimVec& dim, const Quiver& q) {
  const auto n = static_cast<int>(template_size(p.psi_part, dim, q));
  return p.kind == PencilKind::Det ? n : n / 2;
}

std::vector<Rational> pencil_coefficients(const Pencil& p, const StructuredRepresentation& w) {
  require_same_shape(p);
  const Quiver& q = w.sq.quiver();
  Matrix a, b, c;
  if (p.kind == PencilKind::Det) {
    Representation full = w.full();
    a = evaluate_template(p.psi_part, full);
    b = evaluate_template(p.phi_part, full);
    c = evaluate_template(p.const_part, full);
  } else {
    a = paired_template(p.psi_part, w);
    b = paired_template(p.phi_part, w);
    c = paired_template(p.const_part, w);
  }
  if (!a.is_square()) fail(ErrorCode::NotSquare, "pencil is not square");
  const int t = pencil_degree(p, w.dim, q);
  std::vector<Rational> samples;
  for (int k = 0; k <= t; ++k) {
    Matrix m = a + Rational(k) * b + c;
    samples.push_back(p.kind == PencilKind::Det ? determinant(m) : pfaffian(m));
  }
  return interpolate_bihomogeneous(samples);
}

std::vector<Rational> pencil_coefficients(const PathMatrix& a, const PathMatrix& b, const StructuredRepresentation& w,
                                          PencilKind kind) {
  if (a.rows != b.rows || a.cols != b.cols) fail(ErrorCode::ShapeMismatch, "pencil parts have different shapes");
  return pencil_coefficients(Pencil{a, b, PathMatrix::zero(a.rows, a.cols), kind}, w);
}

std::string generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Det: return "det";
    case GeneratorKind::Pf: return "pf";
    case GeneratorKind::PencilDetCoeff: return "pencil_det";
    case GeneratorKind::PencilPfCoeff: return "pencil_pf";
  }
  return "?";
}

Rational evaluate_generator(const GeneratorDescriptor& g, const StructuredRepresentation& w) {
  switch (g.kind) {
    case GeneratorKind::Det: return evaluate_det(g.tmpl, w.full());
    case GeneratorKind::Pf: return evaluate_pf(g.tmpl, w);
    case GeneratorKind::PencilDetCoeff:
    case GeneratorKind::PencilPfCoeff: {
      auto c = pencil_coefficients(g.pencil, w);
      const int t = static_cast<int>(c.size()) - 1;
      if (g.phi_exponent < 0 || g.phi_exponent > t) fail(ErrorCode::InvalidArgument, "pencil exponent out of range");
      return c[static_cast<std::size_t>(t - g.phi_exponent)];
    }
  }
  return 0;
}

Rational evaluate_generator_det(const GeneratorDescriptor& g, const StructuredRepresentation& w) {
  switch (g.kind) {
    case GeneratorKind::Det: return evaluate_det(g.tmpl, w.full());
    case GeneratorKind::Pf: return determinant(paired_template(g.tmpl, w));
    default: fail(ErrorCode::InvalidArgument, "pencil coefficients have no determinant form");
  }
}

Rational weight_character(const SymmetricQuiver& sq, const Weight& w, const GroupElement& g) {
  Rational out = 1;
  for (std::size_t x = 0; x < w.size(); ++x) {
    const std::size_t s = sq.sigma_vertex(x);
    if (s <= x) continue;
    Rational e = w[x] - w[s];
    if (e.get_den() != 1) fail(ErrorCode::AsymmetricWeight, "weight is not integral on a vertex pair");
    long k = e.get_num().get_si();
    Rational d = determinant(g.blocks[x]);
    Rational f = 1;
    for (long i = 0; i < std::labs(k); ++i) f *= d;
    out *= k > 0 ? Rational(1) / f : f;
  }
  return out;
}

namespace {

GeneratorDescriptor det_descriptor(const SymmetricQuiver& sq, PathMatrix t, std::string provenance) {
  GeneratorDescriptor g;
  g.kind = GeneratorKind::Det;
  g.weight = template_weight(sq, t);
  g.tmpl = std::move(t);
  g.provenance = std::move(provenance);
  return g;
}

PathMatrix arrow_template(const Quiver& q, std::size_t a) {
  PathMatrix t = PathMatrix::zero({q.arrows()[a].head}, {q.arrows()[a].tail});
  t.add(0, 0, 1, make_path(q, {q.arrows()[a].name}));
  return t;
}

std::string vertex_label(const Quiver& q, std::size_t v) { return std::to_string(q.vertices()[v]); }

std::string fresh_name(const Quiver& q, std::string base) {
  while (q.find_arrow(base)) base += "'";
  return base;
}

}  // namespace

Contraction reduce_composition(const SymmetricQuiver& sq, const DimVec& alpha, Flavor flavor, std::optional<int> vertex) {
  const Quiver& q = sq.quiver();
  if (alpha.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!is_symmetric(sq, alpha)) fail(ErrorCode::AsymmetricDimension, "dimension vector is not symmetric");
  if (vertex && !q.has_vertex(*vertex)) fail(ErrorCode::DomainMismatch, "unknown vertex " + std::to_string(*vertex));

  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    if (vertex && q.vertices()[x] != *vertex) continue;
    if (sq.vertex_side(x) != Side::Plus) continue;
    auto ins = q.in_arrows(x), outs = q.out_arrows(x);
    if (ins.size() != 1 || outs.size() != 1) continue;
    const std::size_t a = ins[0], b = outs[0];
    const std::size_t y = q.tail(a), z = q.head(b), sx = sq.sigma_vertex(x);
    if (sq.arrow_fixed(a) || y == sx || sq.vertex_side(y) == Side::Minus) continue;
    const bool fixed_b = sq.arrow_fixed(b);
    if (!fixed_b && (z == sx || sq.vertex_side(z) == Side::Minus)) continue;
    if (alpha[x] < alpha[y] || (!fixed_b && alpha[x] < alpha[z])) continue;

    Contraction out;
    out.vertex = q.vertices()[x];
    const std::string an = q.arrows()[a].name, bn = q.arrows()[b].name;
    const std::string san = q.arrows()[sq.sigma_arrow(a)].name, sbn = q.arrows()[sq.sigma_arrow(b)].name;
    const std::string tag = "contraction at " + vertex_label(q, x);

    if (!fixed_b) {
      const bool eq_y = alpha[x] == alpha[y], eq_z = alpha[x] == alpha[z];
      out.rule = eq_y && eq_z ? "cl-c" : eq_y ? "cl-b" : eq_z ? "cl-b'" : "cl-a";
      if (eq_y) out.extracted.push_back(det_descriptor(sq, arrow_template(q, a), tag + " " + out.rule + " det " + an));
      if (eq_z) out.extracted.push_back(det_descriptor(sq, arrow_template(q, b), tag + " " + out.rule + " det " + bn));
    } else {
      if (alpha[x] == alpha[y]) {
        out.rule = "cls-ii";
        out.extracted.push_back(det_descriptor(sq, arrow_template(q, a), tag + " cls-ii det " + an));
      } else {
        out.rule = "cls-i";
        PathMatrix t = arrow_template(q, b);
        if (flavor == Flavor::Symplectic) {
          out.extracted.push_back(det_descriptor(sq, t, tag + " cls-i det " + bn));
        } else if (alpha[x] % 2 == 0) {
          auto norm = skew_normalize(t, sq, flavor, alpha);
          if (!norm) fail(ErrorCode::Singular, "fixed arrow is not skew on orthogonal representations");
          GeneratorDescriptor g;
          g.kind = GeneratorKind::Pf;
          g.weight = template_weight(sq, *norm);
          for (auto& v : g.weight) v /= 2;
          g.tmpl = *norm;
          g.provenance = tag + " cls-i pf " + bn;
          out.extracted.push_back(std::move(g));
        }
      }
    }

    // Contracted quiver: drop x, sigma x and their arrows, add the composites.
    std::vector<int> verts;
    DimVec a2;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      if (v != x && v != sx) {
        verts.push_back(q.vertices()[v]);
        a2.push_back(alpha[v]);
      }
    std::set<std::size_t> gone{a, b, sq.sigma_arrow(a), sq.sigma_arrow(b)};
    std::vector<Arrow> arrows;
    ArrowPairs apairs;
    for (const auto& [l, r] : sq.arrow_pairs())
      if (!gone.count(q.arrow_index(l))) apairs.push_back({l, r});
    for (std::size_t e = 0; e < q.num_arrows(); ++e)
      if (!gone.count(e)) arrows.push_back(q.arrows()[e]);
    if (!fixed_b) {
      const std::string n1 = fresh_name(q, an + "_" + bn), n2 = fresh_name(q, sbn + "_" + san);
      arrows.push_back({n1, q.vertices()[y], q.vertices()[z]});
      arrows.push_back({n2, q.vertices()[sq.sigma_vertex(z)], q.vertices()[sq.sigma_vertex(y)]});
      apairs.push_back({n1, n2});
    } else {
      const std::string n1 = fresh_name(q, an + "_" + bn + "_" + san);
      arrows.push_back({n1, q.vertices()[y], q.vertices()[sq.sigma_vertex(y)]});
      apairs.push_back({n1, n1});
    }
    VertexPairs vpairs;
    for (const auto& [l, r] : sq.vertex_pairs())
      if (l != q.vertices()[x] && l != q.vertices()[sx]) vpairs.push_back({l, r});
    out.sq = SymmetricQuiver::build(Quiver(q.name(), verts, arrows), vpairs, apairs);
    out.alpha = out.sq.quiver().zero_dim();
    for (std::size_t v = 0; v < verts.size(); ++v) out.alpha[out.sq.quiver().vertex_index(verts[v])] = a2[v];
    return out;
  }
  fail(ErrorCode::PatternNotFound, vertex ? "vertex " + std::to_string(*vertex) + " does not match a contraction pattern"
                                          : "no vertex matches a contraction pattern");
}

}  // namespace symq
