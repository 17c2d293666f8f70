#include "symq/reflection.hpp"

#include <algorithm>

#include "symq/error.hpp"

namespace symq {

ReflectedDim reflect_dim(const Quiver& q, std::size_t x, const DimVec& alpha) {
  if (alpha.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  if (!q.is_sink(x) && !q.is_source(x))
    fail(ErrorCode::NotSinkOrSource, "vertex " + std::to_string(q.vertices()[x]) + " is neither a sink nor a source");
  DimVec out = alpha;
  std::int64_t sum = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.head(a) == x) sum += alpha[q.tail(a)];
    if (q.tail(a) == x) sum += alpha[q.head(a)];
  }
  out[x] = sum - alpha[x];
  return {q.reflected_at(x), out};
}

bool is_admissible(const SymmetricQuiver& sq, std::size_t x) {
  const Quiver& q = sq.quiver();
  if (sq.vertex_fixed(x) || (!q.is_sink(x) && !q.is_source(x))) return false;
  const std::size_t s = sq.sigma_vertex(x);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if ((q.tail(a) == x && q.head(a) == s) || (q.tail(a) == s && q.head(a) == x)) return false;
  return true;
}

namespace {
void require_admissible(const SymmetricQuiver& sq, std::size_t x) {
  if (!is_admissible(sq, x))
    fail(ErrorCode::NotAdmissible,
         "vertex " + std::to_string(sq.quiver().vertices()[x]) + " is not an admissible sink or source");
}
}  // namespace

DimVec reflect_pair_dim(const SymmetricQuiver& sq, std::size_t x, const DimVec& alpha) {
  require_admissible(sq, x);
  auto first = reflect_dim(sq.quiver(), x, alpha);
  return reflect_dim(first.quiver, sq.sigma_vertex(x), first.dim).dim;
}

RationalVector reflect_weight(const SymmetricQuiver& sq, std::size_t x, const RationalVector& chi) {
  require_admissible(sq, x);
  const Quiver& q = sq.quiver();
  if (chi.size() != q.num_vertices()) fail(ErrorCode::DomainMismatch, "weight does not match quiver");
  for (std::size_t y = 0; y < chi.size(); ++y)
    if (sq.vertex_fixed(y) && chi[y] != 0) fail(ErrorCode::NonzeroOnFixedVertex, "weight is nonzero on a fixed vertex");
  const std::size_t s = sq.sigma_vertex(x);
  RationalVector out = chi;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    for (std::size_t end : {x, s}) {
      std::size_t other;
      if (q.tail(a) == end) other = q.head(a);
      else if (q.head(a) == end) other = q.tail(a);
      else continue;
      out[other] += chi[end];
    }
  }
  out[x] = -chi[x];
  out[s] = -chi[s];
  for (std::size_t y = 0; y < out.size(); ++y)
    if (sq.vertex_fixed(y)) out[y] = 0;
  return out;
}

Representation reflect_rep(std::size_t x, Direction dir, const Representation& v, bool unimodular) {
  const Quiver& q = v.quiver;
  v.validate();
  const bool sink = q.is_sink(x), source = q.is_source(x);
  if ((dir == Direction::Plus && !sink) || (dir == Direction::Minus && !source))
    fail(ErrorCode::NotSinkOrSource, "vertex " + std::to_string(q.vertices()[x]) +
                                         (dir == Direction::Plus ? " is not a sink" : " is not a source"));
  const auto nx = static_cast<std::size_t>(v.dim[x]);
  Representation r = v;
  r.quiver = q.reflected_at(x);
  if (dir == Direction::Plus) {
    auto ins = q.in_arrows(x);
    std::vector<Matrix> blocks;
    for (auto a : ins) blocks.push_back(v.maps[a]);
    Matrix h = hstack(blocks, nx);
    Matrix k = kernel_matrix(h);
    if (unimodular && k.cols() > 0 && rank(h) == nx) {
      // det [K | R] with h R = I does not depend on the right inverse R
      Matrix ht = h.transpose();
      Matrix right = ht * inverse(h * ht);
      Matrix both = hstack({k, right}, h.cols());
      Rational scale = Rational(1) / determinant(both);
      for (std::size_t i = 0; i < k.rows(); ++i) k(i, 0) *= scale;
    }
    r.dim[x] = static_cast<std::int64_t>(k.cols());
    std::size_t off = 0;
    for (auto a : ins) {
      std::size_t n = v.maps[a].cols();
      r.maps[a] = k.block(off, 0, n, k.cols());
      off += n;
    }
  } else {
    auto outs = q.out_arrows(x);
    std::vector<Matrix> blocks;
    for (auto a : outs) blocks.push_back(v.maps[a]);
    Matrix h = vstack(blocks, nx);
    auto comp = cokernel_complement(h);
    Matrix p = cokernel_projection(h, comp);
    if (unimodular && p.rows() > 0 && rank(h) == nx) {
      Matrix ht = h.transpose();
      Matrix left = inverse(ht * h) * ht;
      Matrix both = vstack({p, left}, h.rows());
      Rational scale = Rational(1) / determinant(both);
      for (std::size_t j = 0; j < p.cols(); ++j) p(0, j) *= scale;
    }
    r.dim[x] = static_cast<std::int64_t>(comp.size());
    std::size_t off = 0;
    for (auto a : outs) {
      std::size_t n = v.maps[a].rows();
      r.maps[a] = p.block(0, off, comp.size(), n);
      off += n;
    }
  }
  return r;
}

std::vector<std::size_t> coxeter_order(const Quiver& q, Direction dir) {
  auto order = q.topological_order();
  if (dir == Direction::Plus) std::reverse(order.begin(), order.end());
  return order;
}

DimVec coxeter_dim(const Quiver& q, const DimVec& alpha, Direction dir) {
  Quiver cur = q;
  DimVec d = alpha;
  for (auto x : coxeter_order(q, dir)) {
    auto r = reflect_dim(cur, x, d);
    cur = std::move(r.quiver);
    d = std::move(r.dim);
  }
  return d;
}

Representation coxeter_rep(const Representation& v, Direction dir, bool unimodular) {
  Representation cur = v;
  for (auto x : coxeter_order(v.quiver, dir)) cur = reflect_rep(x, dir, cur, unimodular);
  return cur;
}

Representation dual_rep(const SymmetricQuiver& sq, const Representation& v) {
  const Quiver& q = sq.quiver();
  if (!q.same_shape(v.quiver)) fail(ErrorCode::QuiverMismatch, "representation is not on this quiver");
  Representation r = Representation::zero(q, delta(sq, v.dim));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) r.maps[a] = -v.maps[sq.sigma_arrow(a)].transpose();
  return r;
}

StructuredRepresentation reflect_pair_structured(const StructuredRepresentation& sr, std::size_t x) {
  const SymmetricQuiver& sq = sr.sq;
  require_admissible(sq, x);
  const Quiver& q = sq.quiver();
  if (!q.is_sink(x)) x = sq.sigma_vertex(x);
  const std::size_t s = sq.sigma_vertex(x);
  Representation v = sr.full();

  auto ins = q.in_arrows(x);
  auto outs = q.out_arrows(s);
  std::vector<Matrix> in_blocks, out_blocks;
  std::vector<std::size_t> in_off{0}, out_off{0};
  for (auto a : ins) {
    in_blocks.push_back(v.maps[a]);
    in_off.push_back(in_off.back() + v.maps[a].cols());
  }
  for (auto b : outs) {
    out_blocks.push_back(v.maps[b]);
    out_off.push_back(out_off.back() + v.maps[b].rows());
  }
  Matrix k = kernel_matrix(hstack(in_blocks, static_cast<std::size_t>(v.dim[x])));
  Matrix h = vstack(out_blocks, static_cast<std::size_t>(v.dim[s]));
  auto comp = cokernel_complement(h);
  Matrix p = cokernel_projection(h, comp);

  // Pairing between the sum over tails of arrows into x and the sum over heads of arrows out of sigma x.
  Matrix pairing(in_off.back(), out_off.back());
  for (std::size_t i = 0; i < ins.size(); ++i) {
    auto partner = std::find(outs.begin(), outs.end(), sq.sigma_arrow(ins[i])) - outs.begin();
    std::size_t t = q.tail(ins[i]);
    pairing.set_block(in_off[i], out_off[static_cast<std::size_t>(partner)], gram_matrix(sq, sr.flavor, t, v.dim[t]));
  }
  Matrix kp = k.transpose() * pairing;
  Matrix g0(k.cols(), comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j)
    for (std::size_t i = 0; i < k.cols(); ++i) g0(i, j) = -kp(i, comp[j]);

  SymmetricQuiver nsq = sq.reflected_pair(x);
  Matrix target = gram_matrix(nsq, sr.flavor, x, static_cast<std::int64_t>(k.cols()));
  Matrix kt = k * (inverse(g0).transpose() * target.transpose());

  Representation r = v;
  r.quiver = nsq.quiver();
  r.dim[x] = r.dim[s] = static_cast<std::int64_t>(k.cols());
  for (std::size_t i = 0; i < ins.size(); ++i)
    r.maps[ins[i]] = kt.block(in_off[i], 0, in_off[i + 1] - in_off[i], kt.cols());
  for (std::size_t j = 0; j < outs.size(); ++j)
    r.maps[outs[j]] = p.block(0, out_off[j], comp.size(), out_off[j + 1] - out_off[j]);
  return structured_from_full(nsq, sr.flavor, r);
}

}  // namespace symq
