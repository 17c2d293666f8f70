#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symq {

using DimVec = std::vector<std::int64_t>;

struct Arrow {
  std::string name;
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Acyclic multigraph. Vertices are kept sorted by id and arrows by name;
/// every DimVec is aligned with vertices().
class Quiver {
 public:
  Quiver() = default;
  /// Throws InvalidArgument on malformed input and CyclicQuiver on oriented cycles.
  Quiver(std::string name, std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::string& name() const { return name_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  /// Position of a vertex id; throws DomainMismatch.
  std::size_t vertex_index(int id) const;
  bool has_vertex(int id) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  std::size_t tail(std::size_t a) const { return tails_[a]; }
  std::size_t head(std::size_t a) const { return heads_[a]; }

  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;
  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;

  /// Kahn order with the smallest available id first.
  std::vector<std::size_t> topological_order() const;
  /// Reverses every arrow incident to v.
  Quiver reflected_at(std::size_t v) const;
  Quiver renamed(std::string name) const;

  /// Same vertices and arrows (names ignored).
  bool same_shape(const Quiver& other) const;

  DimVec zero_dim() const { return DimVec(vertices_.size(), 0); }
  DimVec unit(std::size_t v) const;

 private:
  std::string name_;
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> tails_;
  std::vector<std::size_t> heads_;
};

enum class GraphType { DynkinA, DynkinD, DynkinE, EuclideanA, EuclideanD, EuclideanE, Other };

struct Classification {
  GraphType type = GraphType::Other;
  int n = 0;
  std::string to_string() const;
  bool euclidean() const {
    return type == GraphType::EuclideanA || type == GraphType::EuclideanD || type == GraphType::EuclideanE;
  }
  bool dynkin() const {
    return type == GraphType::DynkinA || type == GraphType::DynkinD || type == GraphType::DynkinE;
  }
};

Classification validate_and_classify(const Quiver& q);

/// sum_x a(x)b(x) - sum_a a(ta)b(ha). Throws DomainMismatch on size mismatch.
std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b);
std::int64_t tits_form(const Quiver& q, const DimVec& a);
/// Minimal positive radical vector of the Tits form. Throws NotEuclidean.
DimVec null_root(const Quiver& q);
std::int64_t defect(const Quiver& q, const DimVec& d);

DimVec add(const DimVec& a, const DimVec& b);
DimVec sub(const DimVec& a, const DimVec& b);
DimVec scale(std::int64_t s, const DimVec& a);
bool is_nonneg(const DimVec& a);
bool is_zero(const DimVec& a);

}  // namespace symq
