#pragma once

#include <vector>

#include "symq/quiver.hpp"
#include "symq/representation.hpp"
#include "symq/symmetric.hpp"

namespace symq {

enum class Direction { Plus, Minus };

struct ReflectedDim {
  Quiver quiver;
  DimVec dim;
};

/// c_x on dimension vectors. Throws NotSinkOrSource.
ReflectedDim reflect_dim(const Quiver& q, std::size_t x, const DimVec& alpha);
bool is_admissible(const SymmetricQuiver& sq, std::size_t x);
/// c_{sigma x} c_x. Throws NotAdmissible.
DimVec reflect_pair_dim(const SymmetricQuiver& sq, std::size_t x, const DimVec& alpha);
/// Weight of the reflected semi-invariant. Throws NotAdmissible or NonzeroOnFixedVertex.
RationalVector reflect_weight(const SymmetricQuiver& sq, std::size_t x, const RationalVector& chi);

/// BGP functor: kernel construction at a sink (Plus) or cokernel at a source (Minus).
/// With `unimodular`, the new basis at x is rescaled so that it completes to a determinant-one
/// basis together with any splitting of the map at x (only when that map has full rank), which
/// makes c^{C V}(C W) a well-defined function of W. Throws NotSinkOrSource.
Representation reflect_rep(std::size_t x, Direction dir, const Representation& v, bool unimodular = false);

/// Sinks (Plus) or sources (Minus) in the order the Coxeter functor applies them.
std::vector<std::size_t> coxeter_order(const Quiver& q, Direction dir);
DimVec coxeter_dim(const Quiver& q, const DimVec& alpha, Direction dir);
Representation coxeter_rep(const Representation& v, Direction dir, bool unimodular = false);

/// (dual V)(x) = V(sigma x)^*, (dual V)(a) = -V(sigma a)^t.
Representation dual_rep(const SymmetricQuiver& sq, const Representation& v);

/// C^+_{(x, sigma x)} on a structured representation, x an admissible sink or source.
/// The new bases are chosen so that the result is again structured for the same flavor.
StructuredRepresentation reflect_pair_structured(const StructuredRepresentation& sr, std::size_t x);

}  // namespace symq
