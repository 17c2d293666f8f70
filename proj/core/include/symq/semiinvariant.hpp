#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symq/matrix.hpp"
#include "symq/path_matrix.hpp"
#include "symq/representation.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// Values per vertex, aligned with the vertex order of the quiver.
using Weight = RationalVector;

/// Euler row <alpha, .> with the fixed coordinates set to zero.
Weight weight_of_cV(const SymmetricQuiver& sq, const DimVec& alpha, Flavor flavor);
/// Weight of det Hom(T, .): +1 per column summand, -1 per row summand, fixed coordinates zeroed.
Weight template_weight(const SymmetricQuiver& sq, const PathMatrix& t);
/// (gamma chi)(i) = -chi(sigma i).
Weight gamma(const SymmetricQuiver& sq, const Weight& chi);

/// det d^V_W on the full representation underlying W. Throws NonOrthogonalDimensions.
Rational evaluate_cV(const Representation& v, const StructuredRepresentation& w);
/// Same determinant against an arbitrary representation W of the underlying quiver.
Rational evaluate_cV(const Representation& v, const Representation& w);

/// True when some row reordering and rescaling makes Hom(T, W) skew-symmetric on the flavor. Throws NotSquare.
bool is_pfaffian_type(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor, const DimVec& dim);

enum class PencilKind { Det, Pf };

/// Template psi A + phi B + C. For the Pf kind the parts are already skew-normalized.
struct Pencil {
  PathMatrix psi_part, phi_part, const_part;
  PencilKind kind = PencilKind::Det;
};

/// Degree in phi of the sampled polynomial: the matrix size for det, half of it for pf.
int pencil_degree(const Pencil& p, const DimVec& dim, const Quiver& q);
/// c_0..c_t with c_i the coefficient of phi^{t-i} in f(phi, 1), t = pencil_degree. For a
/// homogeneous pencil this is the coefficient of phi^{t-i} psi^i. Throws ShapeMismatch.
std::vector<Rational> pencil_coefficients(const Pencil& p, const StructuredRepresentation& w);
std::vector<Rational> pencil_coefficients(const PathMatrix& a, const PathMatrix& b, const StructuredRepresentation& w,
                                          PencilKind kind);

enum class GeneratorKind { Det, Pf, PencilDetCoeff, PencilPfCoeff };
std::string generator_kind_name(GeneratorKind k);

struct GeneratorDescriptor {
  GeneratorKind kind = GeneratorKind::Det;
  int index = 0;         // pencil family index
  int phi_exponent = 0;  // pencil kinds: value is the coefficient of phi^phi_exponent in f(phi, 1)
  Weight weight;
  PathMatrix tmpl;  // Det and Pf kinds
  Pencil pencil;    // pencil kinds
  std::string provenance;
};

Rational evaluate_generator(const GeneratorDescriptor& g, const StructuredRepresentation& w);
/// Same template read as a determinant; for Pf kinds this is (up to sign) the square of the value.
Rational evaluate_generator_det(const GeneratorDescriptor& g, const StructuredRepresentation& w);

/// Factor by which the value scales under g: prod over non-fixed x of det(g_x)^{-weight(x)}.
Rational weight_character(const SymmetricQuiver& sq, const Weight& w, const GroupElement& g);

/// Equioriented finite type A. Throws NotFiniteType, UnsupportedQuiver (other orientations), AsymmetricDimension.
std::vector<GeneratorDescriptor> generators_finite(const SymmetricQuiver& sq, const DimVec& beta, Flavor flavor);

/// Canonical tame type with a regular symmetric dimension vector. Throws NotTame, NotCanonical,
/// NotRegular, NotSymmetric, ParityViolation.
std::vector<GeneratorDescriptor> generators_tame(const SymmetricQuiver& sq, const DimVec& d, Flavor flavor);

struct Contraction {
  SymmetricQuiver sq;
  DimVec alpha;
  int vertex = 0;  // id of the contracted vertex x
  std::string rule;  // "cl-a", "cl-b", "cl-b'", "cl-c", "cls-i", "cls-ii"
  std::vector<GeneratorDescriptor> extracted;  // on the original quiver
};

/// Contracts a vertex x with exactly two arrows through it (y -> x -> z, or y -> x -> sigma x with a
/// fixed second arrow) when alpha(x) is at least alpha at both neighbours. Uses the first matching
/// vertex unless one is given. Throws PatternNotFound.
Contraction reduce_composition(const SymmetricQuiver& sq, const DimVec& alpha, Flavor flavor,
                               std::optional<int> vertex = std::nullopt);

}  // namespace symq
