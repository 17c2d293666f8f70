#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symq/quiver.hpp"
#include "symq/representation.hpp"
#include "symq/symmetric.hpp"

namespace symq {

enum class IndexPart { Plus, Delta, Minus };

/// Position in one of the polygons; indices are 0-based internally and printed 1-based.
struct OrbitRef {
  int orbit = 0;
  int index = 0;
  friend bool operator==(const OrbitRef&, const OrbitRef&) = default;
};

/// Non-homogeneous simple regular dimension vectors, one cyclic list per tube,
/// with coxeter_dim(plus, e[i]) = e[i + 1].
struct TauOrbit {
  std::string name;  // "delta", "delta_prime", "delta_second"
  std::vector<DimVec> e;
  std::vector<OrbitRef> sigma;  // e[sigma[i]] = delta(e[i])
  std::vector<IndexPart> part;
  std::size_t rank() const { return e.size(); }
};

struct TauOrbits {
  SymmetricQuiver sq;
  DimVec h;
  std::vector<TauOrbit> orbits;
};

/// Throws UnsupportedSymmetricType unless the quiver is of tame symmetric type.
TauOrbits tau_orbits(const SymmetricQuiver& sq);

/// d = p h + sum over polygons of labels[o][i] e_{o,i}, with a zero label in every polygon.
struct CanonicalDecomposition {
  std::int64_t p = 0;
  std::vector<std::vector<std::int64_t>> labels;
};

/// Throws NotRegular, NotSymmetric, or ParityViolation (symplectic with an odd fixed-vertex dimension).
CanonicalDecomposition canonical_decomposition(const TauOrbits& t, const DimVec& d);
CanonicalDecomposition canonical_decomposition(const TauOrbits& t, const DimVec& d, Flavor flavor);

/// Cyclic interval start, start+1, ..., start+length-1 of a polygon.
struct Arc {
  int orbit = 0;
  int start = 0;
  int length = 0;
  std::int64_t ind = 0;
  std::int64_t q = 0;
  int end(const TauOrbits& t) const;
  friend bool operator==(const Arc& a, const Arc& b) {
    return a.orbit == b.orbit && a.start == b.start && a.length == b.length;
  }
};

/// Arcs [i, j] with p_i = p_j below every interior label; a full turn [i, i] has length equal to the rank.
/// q is ind minus the largest ind of an enclosing admissible arc.
std::vector<Arc> admissible_arcs(const TauOrbits& t, const CanonicalDecomposition& c);
/// Maximal runs of labels >= k for k = 1..max, with ind the minimal label and q the nesting multiplicity.
std::vector<Arc> decomposition_arcs(const TauOrbits& t, const CanonicalDecomposition& c);

Arc sigma_arc(const TauOrbits& t, const Arc& a);
bool is_symmetric_arc(const TauOrbits& t, const Arc& a);
DimVec arc_dim(const TauOrbits& t, const Arc& a);

enum class DecompositionMode { Plain, Symplectic, Orthogonal };
std::string mode_name(DecompositionMode m);

enum class SummandKind { Homogeneous, Pair, Symmetric, PairedSymmetric, HomogeneousExtended };
std::string summand_kind_name(SummandKind k);

/// Uniserial regular module with top e_{orbit, start} of the given length; orbit -1 is a brick of dimension h in a homogeneous tube.
struct Uniserial {
  int orbit = -1;
  int start = 0;
  int length = 0;
  friend bool operator==(const Uniserial&, const Uniserial&) = default;
};

struct Summand {
  SummandKind kind = SummandKind::Homogeneous;
  DimVec dim;
  std::int64_t multiplicity = 1;
  std::vector<Uniserial> parts;
  std::string label;
};

std::vector<Summand> generic_decomposition(const TauOrbits& t, const DimVec& d, DecompositionMode mode);

/// Brick of dimension e (a real Schur root or h) from seeded random matrices. Throws Singular if
/// no seed in a short range gives End = k.
Representation brick(const Quiver& q, const DimVec& e, std::uint64_t seed);
/// Iterated nonsplit extension of simple regulars, socle e_{start+length-1}.
Representation uniserial_module(const TauOrbits& t, const Uniserial& u, std::uint64_t seed);
enum class RegularFamily { E, EPrime, ESecond, Homogeneous };

/// E(i, j), E'(i, j), E''(i, j): uniserial with composition factors e_i .. e_{j-1} of the polygon
/// named delta, delta_prime, delta_second (1-based, cyclic; j = i is a full turn).
/// Homogeneous: dimension h with parameter (phi : psi).
struct RegularModuleSpec {
  RegularFamily family = RegularFamily::Homogeneous;
  int i = 1, j = 1;
  Rational phi = 1, psi = 1;
};

/// Throws IndexOutOfOrbit for a missing polygon or an index outside 1..rank, InvalidArgument for (0 : 0).
Representation tame_regular_module(const TauOrbits& t, const RegularModuleSpec& spec, std::uint64_t seed = 0);

/// Direct sum of the parts of a summand.
Representation realize_summand(const TauOrbits& t, const Summand& s, std::uint64_t seed);
/// The multiplicity copies of a summand; copies of homogeneous summands lie in distinct tubes.
std::vector<Representation> realize_summand_copies(const TauOrbits& t, const Summand& s, std::uint64_t seed);

/// Writes c_0 e_1 + ... in polygon notation, using delta e_j for indices on the minus side.
std::string format_orbit_vector(const TauOrbits& t, int orbit, const std::vector<std::int64_t>& coeffs);

}  // namespace symq
