#include "symq/representation.hpp"

#include <random>

#include "symq/error.hpp"

namespace symq {

Representation Representation::zero(const Quiver& q, const DimVec& dim) {
  if (dim.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  for (auto d : dim)
    if (d < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  Representation r{q, dim, {}};
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    r.maps.emplace_back(static_cast<std::size_t>(dim[q.head(a)]), static_cast<std::size_t>(dim[q.tail(a)]));
  return r;
}

void Representation::validate() const {
  if (dim.size() != quiver.num_vertices() || maps.size() != quiver.num_arrows())
    fail(ErrorCode::ShapeMismatch, "representation does not match its quiver");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    if (maps[a].rows() != static_cast<std::size_t>(dim[quiver.head(a)]) ||
        maps[a].cols() != static_cast<std::size_t>(dim[quiver.tail(a)]))
      fail(ErrorCode::ShapeMismatch, "arrow " + quiver.arrows()[a].name + " has the wrong shape");
  }
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!a.quiver.same_shape(b.quiver)) fail(ErrorCode::QuiverMismatch, "direct sum over different quivers");
  Representation r = Representation::zero(a.quiver, add(a.dim, b.dim));
  for (std::size_t i = 0; i < r.maps.size(); ++i) r.maps[i] = block_diagonal({a.maps[i], b.maps[i]});
  return r;
}

Representation thin_module(const Quiver& q, const std::vector<int>& support) {
  DimVec dim = q.zero_dim();
  for (int id : support) dim[q.vertex_index(id)] = 1;
  Representation r = Representation::zero(q, dim);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (dim[q.tail(a)] == 1 && dim[q.head(a)] == 1) r.maps[a] = Matrix::identity(1);
  return r;
}

Quiver equioriented_a(int n) {
  std::vector<int> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  for (int i = 1; i < n; ++i) as.push_back({"a" + std::to_string(i), i, i + 1});
  return Quiver("A" + std::to_string(n), vs, as);
}

Representation interval_module(int n, int j, int i) {
  if (!(1 <= j && j <= i && i <= n)) fail(ErrorCode::BadInterval, "need 1 <= j <= i <= n");
  std::vector<int> support;
  for (int k = j; k <= i; ++k) support.push_back(k);
  return thin_module(equioriented_a(n), support);
}

namespace {
Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}
}  // namespace

Representation random_representation(const Quiver& q, const DimVec& dim, std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  Representation r = Representation::zero(q, dim);
  for (auto& m : r.maps) m = random_matrix(rng, m.rows(), m.cols(), lo, hi);
  return r;
}

HomExt dvw_and_homext(const Representation& v, const Representation& w) {
  const Quiver& q = v.quiver;
  if (!q.same_shape(w.quiver)) fail(ErrorCode::QuiverMismatch, "representations live on different quivers");
  const std::size_t nv = q.num_vertices(), na = q.num_arrows();
  std::vector<std::size_t> voff(nv + 1, 0), aoff(na + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) voff[x + 1] = voff[x] + static_cast<std::size_t>(w.dim[x] * v.dim[x]);
  for (std::size_t a = 0; a < na; ++a)
    aoff[a + 1] = aoff[a] + static_cast<std::size_t>(w.dim[q.head(a)] * v.dim[q.tail(a)]);
  Matrix d(aoff[na], voff[nv]);
  for (std::size_t a = 0; a < na; ++a) {
    const std::size_t t = q.tail(a), h = q.head(a);
    const std::size_t rows = static_cast<std::size_t>(w.dim[h]), cols = static_cast<std::size_t>(v.dim[t]);
    const std::size_t vh = static_cast<std::size_t>(v.dim[h]), vt = static_cast<std::size_t>(v.dim[t]);
    const std::size_t wt = static_cast<std::size_t>(w.dim[t]);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        std::size_t row = aoff[a] + r * cols + c;
        for (std::size_t k = 0; k < vh; ++k) d(row, voff[h] + r * vh + k) += v.maps[a](k, c);
        for (std::size_t k = 0; k < wt; ++k) d(row, voff[t] + k * vt + c) -= w.maps[a](r, k);
      }
  }
  std::size_t rk = rank(d);
  return {d, d.cols() - rk, d.rows() - rk};
}

Matrix standard_j(std::size_t n) {
  if (n % 2) fail(ErrorCode::OddDimension, "symplectic form needs even size");
  Matrix j(n, n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    j(i, n / 2 + i) = 1;
    j(n / 2 + i, i) = -1;
  }
  return j;
}

Matrix gram_matrix(const SymmetricQuiver& sq, Flavor flavor, std::size_t x, std::int64_t n) {
  const auto size = static_cast<std::size_t>(n);
  switch (sq.vertex_side(x)) {
    case Side::Plus: return Matrix::identity(size);
    case Side::Minus: return flavor == Flavor::Symplectic ? -Matrix::identity(size) : Matrix::identity(size);
    case Side::Fixed: return flavor == Flavor::Symplectic ? standard_j(size) : Matrix::identity(size);
  }
  return {};
}

Representation StructuredRepresentation::full() const {
  const Quiver& q = sq.quiver();
  Representation r = Representation::zero(q, dim);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (sq.arrow_side(a) != Side::Minus) {
      r.maps[a] = maps[a];
      continue;
    }
    std::size_t b = sq.sigma_arrow(a);
    Matrix mt = gram_matrix(sq, flavor, q.tail(b), dim[q.tail(b)]);
    Matrix mh = gram_matrix(sq, flavor, q.head(b), dim[q.head(b)]);
    r.maps[a] = -(inverse(mt) * maps[b].transpose() * mh);
  }
  return r;
}

void check_structured_dim(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim) {
  if (dim.size() != sq.quiver().num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!is_symmetric(sq, dim)) fail(ErrorCode::AsymmetricDimension, "dimension vector is not sigma-symmetric");
  for (std::size_t x = 0; x < dim.size(); ++x) {
    if (dim[x] < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
    if (flavor == Flavor::Symplectic && sq.vertex_fixed(x) && dim[x] % 2)
      fail(ErrorCode::OddSymplecticDimension, "odd dimension at a fixed vertex");
  }
}

void check_structured(const StructuredRepresentation& sr) {
  check_structured_dim(sr.sq, sr.flavor, sr.dim);
  const Quiver& q = sr.sq.quiver();
  if (sr.maps.size() != q.num_arrows()) fail(ErrorCode::ShapeMismatch, "wrong number of arrow matrices");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (sr.sq.arrow_side(a) == Side::Minus) continue;
    const Matrix& m = sr.maps[a];
    if (m.rows() != static_cast<std::size_t>(sr.dim[q.head(a)]) || m.cols() != static_cast<std::size_t>(sr.dim[q.tail(a)]))
      fail(ErrorCode::ShapeMismatch, "arrow " + q.arrows()[a].name + " has the wrong shape");
    if (!sr.sq.arrow_fixed(a)) continue;
    if (sr.flavor == Flavor::Symplectic && !m.is_symmetric())
      fail(ErrorCode::NotSymmetric, "fixed arrow " + q.arrows()[a].name + " needs a symmetric matrix");
    if (sr.flavor == Flavor::Orthogonal && !m.is_skew_symmetric())
      fail(ErrorCode::NotSkewSymmetric, "fixed arrow " + q.arrows()[a].name + " needs a skew-symmetric matrix");
  }
}

StructuredRepresentation zero_structured(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim) {
  check_structured_dim(sq, flavor, dim);
  StructuredRepresentation sr{sq, flavor, dim, Representation::zero(sq.quiver(), dim).maps};
  return sr;
}

StructuredRepresentation random_structured(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim,
                                           std::uint64_t seed, int lo, int hi) {
  StructuredRepresentation sr = zero_structured(sq, flavor, dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (std::size_t a = 0; a < sr.maps.size(); ++a) {
    Matrix& m = sr.maps[a];
    if (sq.arrow_side(a) == Side::Minus) continue;
    if (!sq.arrow_fixed(a)) {
      m = random_matrix(rng, m.rows(), m.cols(), lo, hi);
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j) {
        if (flavor == Flavor::Orthogonal && i == j) continue;
        Rational val = dist(rng);
        m(i, j) = val;
        m(j, i) = flavor == Flavor::Symplectic ? val : Rational(-val);
      }
  }
  return sr;
}

StructuredRepresentation structured_from_full(const SymmetricQuiver& sq, Flavor flavor, const Representation& v) {
  v.validate();
  StructuredRepresentation sr{sq, flavor, v.dim, v.maps};
  check_structured(sr);
  if (!(sr.full() == v)) fail(ErrorCode::NotSymmetric, "representation is not compatible with the form");
  return sr;
}

GroupElement identity_element(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim) {
  check_structured_dim(sq, flavor, dim);
  GroupElement g{sq, flavor, dim, {}};
  for (auto d : dim) g.blocks.push_back(Matrix::identity(static_cast<std::size_t>(d)));
  return g;
}

Matrix partner_block(const SymmetricQuiver& sq, Flavor flavor, std::size_t x, const Matrix& g) {
  Matrix m = gram_matrix(sq, flavor, x, static_cast<std::int64_t>(g.rows()));
  return inverse(m) * inverse(g).transpose() * m;
}

GroupElement group_element_from(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim,
                                const std::vector<Matrix>& blocks) {
  if (blocks.size() != dim.size()) fail(ErrorCode::ShapeMismatch, "one block per vertex expected");
  GroupElement g = identity_element(sq, flavor, dim);
  for (std::size_t x = 0; x < dim.size(); ++x)
    if (sq.vertex_side(x) != Side::Minus) g.blocks[x] = blocks[x];
  for (std::size_t x = 0; x < dim.size(); ++x)
    if (sq.vertex_side(x) == Side::Plus) g.blocks[sq.sigma_vertex(x)] = partner_block(sq, flavor, x, g.blocks[x]);
  return g;
}

GroupElement random_group_element(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim, std::uint64_t seed) {
  GroupElement g = identity_element(sq, flavor, dim);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t x = 0; x < dim.size(); ++x) {
    const auto n = static_cast<std::size_t>(dim[x]);
    Matrix& b = g.blocks[x];
    if (n == 0) continue;
    switch (sq.vertex_side(x)) {
      case Side::Minus: break;
      case Side::Plus: {
        if (n < 2) break;
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        for (std::size_t step = 0; step < 3 * n; ++step) {
          std::size_t i = idx(rng), j = idx(rng);
          if (i == j) continue;
          Matrix t = Matrix::identity(n);
          t(i, j) = coef(rng);
          b = b * t;
        }
        break;
      }
      case Side::Fixed: {
        if (flavor == Flavor::Symplectic) {
          Matrix j = standard_j(n);
          for (int step = 0; step < 4; ++step) {
            Matrix v = Matrix(n, 1);
            for (std::size_t i = 0; i < n; ++i) v(i, 0) = coef(rng);
            b = b * (Matrix::identity(n) + Rational(coef(rng)) * (v * v.transpose() * j));
          }
        } else {
          for (int step = 0; step < 4; ++step) {
            Matrix v = Matrix(n, 1);
            for (std::size_t i = 0; i < n; ++i) v(i, 0) = coef(rng);
            if (v.is_zero()) v(0, 0) = 1;
            Rational norm = (v.transpose() * v)(0, 0);
            b = b * (Matrix::identity(n) - Rational(2) / norm * (v * v.transpose()));
          }
        }
        break;
      }
    }
  }
  for (std::size_t x = 0; x < dim.size(); ++x)
    if (sq.vertex_side(x) == Side::Plus) g.blocks[sq.sigma_vertex(x)] = partner_block(sq, flavor, x, g.blocks[x]);
  return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.dim != h.dim) fail(ErrorCode::ShapeMismatch, "group elements of different dimension");
  GroupElement r = g;
  for (std::size_t x = 0; x < r.blocks.size(); ++x) r.blocks[x] = g.blocks[x] * h.blocks[x];
  return r;
}

bool preserves_form(const GroupElement& g) {
  for (std::size_t x = 0; x < g.dim.size(); ++x) {
    Matrix m = gram_matrix(g.sq, g.flavor, x, g.dim[x]);
    if (!(g.blocks[x].transpose() * m * g.blocks[g.sq.sigma_vertex(x)] == m)) return false;
  }
  return true;
}

Representation act_full(const GroupElement& g, const Representation& v) {
  if (g.dim != v.dim) fail(ErrorCode::ShapeMismatch, "group element and representation differ in dimension");
  std::vector<Matrix> inv;
  for (const auto& b : g.blocks) inv.push_back(inverse(b));
  Representation r = v;
  for (std::size_t a = 0; a < r.maps.size(); ++a)
    r.maps[a] = g.blocks[v.quiver.head(a)] * v.maps[a] * inv[v.quiver.tail(a)];
  return r;
}

StructuredRepresentation act(const GroupElement& g, const StructuredRepresentation& sr) {
  if (g.dim != sr.dim || !(g.sq == sr.sq)) fail(ErrorCode::ShapeMismatch, "group element and representation differ");
  const Quiver& q = sr.sq.quiver();
  std::vector<Matrix> inv;
  for (const auto& b : g.blocks) inv.push_back(inverse(b));
  StructuredRepresentation r = sr;
  for (std::size_t a = 0; a < r.maps.size(); ++a)
    if (sr.sq.arrow_side(a) != Side::Minus) r.maps[a] = g.blocks[q.head(a)] * sr.maps[a] * inv[q.tail(a)];
  return r;
}

}  // namespace symq
