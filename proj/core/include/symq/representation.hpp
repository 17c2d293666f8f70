#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symq/matrix.hpp"
#include "symq/quiver.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// Matrices aligned with quiver.arrows(); maps[a] is dim(head) x dim(tail).
struct Representation {
  Quiver quiver;
  DimVec dim;
  std::vector<Matrix> maps;

  static Representation zero(const Quiver& q, const DimVec& dim);
  const Matrix& at(const std::string& arrow) const { return maps[quiver.arrow_index(arrow)]; }
  Matrix& at(const std::string& arrow) { return maps[quiver.arrow_index(arrow)]; }
  /// Throws ShapeMismatch.
  void validate() const;
  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver.same_shape(b.quiver) && a.dim == b.dim && a.maps == b.maps;
  }
};

Representation direct_sum(const Representation& a, const Representation& b);
/// Dimension 1 on the support, identity on arrows inside it.
Representation thin_module(const Quiver& q, const std::vector<int>& support);
/// Equioriented A_n with vertices 1..n and arrows a1..a(n-1), a_i: i -> i+1.
Quiver equioriented_a(int n);
/// V_{j,i} on equioriented_a(n). Throws BadInterval.
Representation interval_module(int n, int j, int i);
Representation random_representation(const Quiver& q, const DimVec& dim, std::uint64_t seed, int lo = -9, int hi = 9);

struct HomExt {
  Matrix matrix;
  std::size_t hom_dim = 0;
  std::size_t ext_dim = 0;
};

/// d^V_W : sum_x Hom(V(x), W(x)) -> sum_a Hom(V(ta), W(ha)), f -> f(ha)V(a) - W(a)f(ta).
/// Coordinates: vertices (resp. arrows) ascending, each Hom block row-major. Throws QuiverMismatch.
HomExt dvw_and_homext(const Representation& v, const Representation& w);

/// Representation with a compatible nondegenerate form. Arrow data is stored on the
/// positive and fixed arrows; negative arrows are derived.
struct StructuredRepresentation {
  SymmetricQuiver sq;
  Flavor flavor = Flavor::Symplectic;
  DimVec dim;
  std::vector<Matrix> maps;  // aligned with arrows; entries on negative arrows are ignored

  /// Induced representation of the underlying quiver.
  Representation full() const;
};

/// Gram matrix pairing V(x) with V(sigma x): I on the positive side, epsilon*I on the
/// negative side, and I (orthogonal) or the standard J (symplectic) at fixed vertices.
Matrix gram_matrix(const SymmetricQuiver& sq, Flavor flavor, std::size_t x, std::int64_t n);
Matrix standard_j(std::size_t n);

/// Throws AsymmetricDimension, OddSymplecticDimension, ShapeMismatch, NotSymmetric or NotSkewSymmetric.
void check_structured(const StructuredRepresentation& sr);
void check_structured_dim(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim);
StructuredRepresentation zero_structured(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim);
StructuredRepresentation random_structured(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim,
                                           std::uint64_t seed, int lo = -9, int hi = 9);
/// Reads the positive and fixed arrows of a full representation. Throws NotSymmetric if
/// the negative arrows are not the derived ones.
StructuredRepresentation structured_from_full(const SymmetricQuiver& sq, Flavor flavor, const Representation& v);

/// One block per vertex; blocks on the negative side are determined by their partners.
struct GroupElement {
  SymmetricQuiver sq;
  Flavor flavor = Flavor::Symplectic;
  DimVec dim;
  std::vector<Matrix> blocks;
};

GroupElement identity_element(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim);
/// Derived partner block for x on the positive side: M_x^{-1} g^{-t} M_x.
Matrix partner_block(const SymmetricQuiver& sq, Flavor flavor, std::size_t x, const Matrix& g);
GroupElement random_group_element(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim, std::uint64_t seed);
/// Blocks aligned with the vertices: any invertible matrices on the positive side, form-preserving
/// ones at fixed vertices; entries on the negative side are ignored. Throws ShapeMismatch.
GroupElement group_element_from(const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim,
                                const std::vector<Matrix>& blocks);
GroupElement compose(const GroupElement& g, const GroupElement& h);
bool preserves_form(const GroupElement& g);
/// g.V = {g_ha V(a) g_ta^{-1}}. Throws ShapeMismatch.
StructuredRepresentation act(const GroupElement& g, const StructuredRepresentation& sr);
Representation act_full(const GroupElement& g, const Representation& v);

}  // namespace symq
