#pragma once

#include <cstdint>
#include <vector>

#include "symq/matrix.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// Weakly decreasing parts. Trailing zeros are trimmed by `normalize_partition`;
/// GL weights may carry negative parts and are kept at full length.
using Partition = std::vector<int>;

Partition normalize_partition(Partition p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
/// All partitions of `size` with at most `max_rows` rows and parts at most `max_part`.
std::vector<Partition> partitions(int size, int max_rows, int max_part);

/// Number of LR skew tableaux of shape nu/lambda and content mu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_lambda (x) S_mu = sum of c S_nu over nu with at most `max_rows` rows.
struct WeightedPartition {
  Partition shape;
  std::int64_t mult = 0;
};
std::vector<WeightedPartition> lr_product(const Partition& lambda, const Partition& mu, int max_rows);
/// Product of several Schur functors, truncated to `max_rows` rows.
std::vector<WeightedPartition> lr_product(const std::vector<Partition>& factors, int max_rows);

/// Constituents of (l^s) (x) (m^t), each with multiplicity one.
std::vector<Partition> rectangle_tensor(int l, int s, int m, int t);

enum class ClassicalGroup { SL, O, SO, Sp };

/// dim (S_lambda V)^G with dim V = n (n even for Sp).
int classical_invariant_dim(const Partition& lambda, ClassicalGroup g, int n);

/// 1 when S_lambda V (x) S_mu V contains a semi-invariant of GL(n), else 0.
int pair_semiinvariant_dim(const Partition& lambda, const Partition& mu, int n);

/// Dimension of the weight space of semi-invariants on structured representations of dimension beta,
/// computed from the Cauchy decomposition of the coordinate ring. The weight enters through
/// k(x) = chi(x) - chi(sigma x) at each non-fixed vertex.
/// Throws UnsupportedQuiver outside finite and tame types or beyond the size limits,
/// AsymmetricWeight if chi is nonzero on a fixed vertex or k is not integral.
std::int64_t weight_space_dim(const SymmetricQuiver& sq, Flavor flavor, const DimVec& beta, const RationalVector& chi);

}  // namespace symq
