#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symq/matrix.hpp"
#include "symq/quiver.hpp"
#include "symq/representation.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// Arrows in traversal order; an empty list is the trivial path at `from`.
struct Path {
  int from = 0;
  int to = 0;
  std::vector<std::string> arrows;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Throws InvalidArgument if consecutive arrows do not compose.
Path make_path(const Quiver& q, const std::vector<std::string>& arrows);
Path trivial_path(int vertex);
Path concat(const Path& first, const Path& second);
/// All paths from `from` to `to`, shortest first, then by arrow names.
std::vector<Path> paths_between(const Quiver& q, int from, int to);
/// W(path) : W(from) -> W(to).
Matrix evaluate_path(const Representation& w, const Path& p);

struct PathTerm {
  Rational coeff;
  Path path;
};
using PathCombination = std::vector<PathTerm>;

/// Projective presentation template. Entry (r, c) combines paths from cols[c] to rows[r];
/// rows index the summands of P1 and cols those of P0.
struct PathMatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::vector<PathCombination>> entries;

  static PathMatrix zero(std::vector<int> rows, std::vector<int> cols);
  void add(std::size_t r, std::size_t c, const Rational& coeff, const Path& p);
  bool square_shape(const DimVec& dim, const Quiver& q) const;
};

/// Block matrix Hom(T, W) : sum_c W(cols[c]) -> sum_r W(rows[r]). Throws QuiverMismatch on bad paths.
Matrix evaluate_template(const PathMatrix& t, const Representation& w);
Rational evaluate_det(const PathMatrix& t, const Representation& w);

/// Pairs the row spaces with the column spaces through the form: F = diag(M_rows)^t Hom(T, W).
/// Requires rows[k] = sigma(cols[k]). Throws InvalidArgument otherwise.
Matrix paired_template(const PathMatrix& t, const StructuredRepresentation& w);
/// Pfaffian of paired_template. Throws NotSquare or NotSkewSymmetric.
Rational evaluate_pf(const PathMatrix& t, const StructuredRepresentation& w);

/// Module with the given presentation: V = coker(P1 -> P0).
Representation module_from_presentation(const Quiver& q, const PathMatrix& t);
/// Minimal projective presentation 0 -> P1 -> P0 -> V -> 0.
PathMatrix minimal_presentation(const Representation& v);

/// Row k of the normalized template is row source_row[k] of the input, scaled by scale[k].
struct SkewNormalization {
  std::vector<std::size_t> source_row;
  std::vector<Rational> scale;
  PathMatrix apply(const PathMatrix& t) const;
};

std::optional<SkewNormalization> skew_normalization(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor,
                                                    const DimVec& dim, int witnesses = 8);

/// Reorders rows so that rows[k] = sigma(cols[k]) and rescales them so the paired template
/// is skew-symmetric on structured representations of the flavor, checked on `witnesses`
/// seeded random points. Returns nullopt if no such rescaling exists.
std::optional<PathMatrix> skew_normalize(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor,
                                         const DimVec& dim, int witnesses = 8);

/// Coefficients c_0..c_t of a bihomogeneous polynomial f(phi, psi) of degree t, where c_i
/// multiplies phi^{t-i} psi^i, from samples at psi = 1, phi = 0..t.
std::vector<Rational> interpolate_bihomogeneous(const std::vector<Rational>& samples);

}  // namespace symq
