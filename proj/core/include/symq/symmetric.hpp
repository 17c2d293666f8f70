#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symq/quiver.hpp"

namespace symq {

enum class Flavor { Symplectic, Orthogonal };
std::string flavor_name(Flavor f);

enum class Side : int { Minus = -1, Fixed = 0, Plus = 1 };

using VertexPairs = std::vector<std::pair<int, int>>;
using ArrowPairs = std::vector<std::pair<std::string, std::string>>;

/// Quiver with a contravariant involution on vertices and arrows.
class SymmetricQuiver {
 public:
  SymmetricQuiver() = default;

  /// Each pair (i, j) declares sigma(i) = j and sigma(j) = i; fixed points are (i, i).
  static SymmetricQuiver build(const Quiver& q, const VertexPairs& vertex_pairs, const ArrowPairs& arrow_pairs);

  const Quiver& quiver() const { return q_; }
  std::size_t sigma_vertex(std::size_t v) const { return sv_[v]; }
  std::size_t sigma_arrow(std::size_t a) const { return sa_[a]; }
  Side vertex_side(std::size_t v) const { return vside_[v]; }
  Side arrow_side(std::size_t a) const { return aside_[a]; }
  bool vertex_fixed(std::size_t v) const { return sv_[v] == v; }
  bool arrow_fixed(std::size_t a) const { return sa_[a] == a; }
  /// True when no positive part satisfies the partition property and arrows
  /// crossing between the positive and negative halves are allowed.
  bool mixed() const { return mixed_; }

  std::vector<std::size_t> vertices_on(Side s) const;
  std::vector<std::size_t> arrows_on(Side s) const;

  /// Canonical pair lists (smaller element first, ascending).
  VertexPairs vertex_pairs() const;
  ArrowPairs arrow_pairs() const;

  /// c_{sigma x} c_x: reverses every arrow at x and sigma(x).
  SymmetricQuiver reflected_pair(std::size_t x) const;

  friend bool operator==(const SymmetricQuiver& a, const SymmetricQuiver& b) {
    return a.q_.same_shape(b.q_) && a.sv_ == b.sv_ && a.sa_ == b.sa_;
  }

 private:
  Quiver q_;
  std::vector<std::size_t> sv_, sa_;
  std::vector<Side> vside_, aside_;
  bool mixed_ = false;
};

DimVec delta(const SymmetricQuiver& sq, const DimVec& a);
bool is_symmetric(const SymmetricQuiver& sq, const DimVec& a);

enum class SymTag { FiniteA, A201, A202, A02, A11, A00, D10, D01 };

struct SymmetricType {
  SymTag tag = SymTag::FiniteA;
  int n = 0;
  int k = 0, l = 0;
  int s = 0, t = 0;
  bool tame() const { return tag != SymTag::FiniteA; }
  bool type_a_tilde() const {
    return tag == SymTag::A201 || tag == SymTag::A202 || tag == SymTag::A02 || tag == SymTag::A11 || tag == SymTag::A00;
  }
  std::string tag_name() const;
  std::string to_string() const;
  friend bool operator==(const SymmetricType&, const SymmetricType&) = default;
};

/// Structural roles of the vertices and arrows of a finite or tame symmetric quiver.
struct Layout {
  SymmetricType type;
  // FiniteA: path from the left end to the right end.
  std::vector<std::size_t> path;
  // Euclidean A: cycle[i] and cycle[i+1] are joined by cycle_arrows[i]. For anchored
  // families the cycle reads: left half (bottom to top), top vertex anchor if any,
  // right half (top to bottom), bottom vertex anchor if any.
  std::vector<std::size_t> cycle, cycle_arrows;
  std::vector<std::size_t> left;
  std::optional<std::size_t> top_vertex, bottom_vertex, top_arrow, bottom_arrow;
  // Euclidean D: left leaves, their arrows, and the left spine from the hub toward the center.
  std::size_t leaf_a = 0, leaf_b = 0, arrow_a = 0, arrow_b = 0;
  std::vector<std::size_t> spine;
  std::optional<std::size_t> center_vertex, center_arrow;
};

/// Throws UnsupportedSymmetricType for shapes outside the finite/tame lists.
Layout analyze_layout(const SymmetricQuiver& sq);
SymmetricType classify_symmetric(const SymmetricQuiver& sq);
bool is_canonical(const SymmetricQuiver& sq, const Layout& layout);
inline bool is_canonical(const SymmetricQuiver& sq) { return is_canonical(sq, analyze_layout(sq)); }

std::vector<std::size_t> admissible_sinks(const SymmetricQuiver& sq);
bool is_admissible_sink(const SymmetricQuiver& sq, std::size_t x);

struct Normalization {
  /// Pairs (x, sigma x) by vertex id; x is the sink reflected first.
  std::vector<std::pair<int, int>> word;
  SymmetricQuiver result;
};

Normalization normalize_orientation(const SymmetricQuiver& sq);

}  // namespace symq
