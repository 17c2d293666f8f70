#include "symq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "symq/error.hpp"
#include "symq/matrix.hpp"

namespace symq {

Quiver::Quiver(std::string name, std::vector<int> vertices, std::vector<Arrow> arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] <= 0) fail(ErrorCode::InvalidArgument, "vertex ids must be positive");
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      fail(ErrorCode::InvalidArgument, "duplicate vertex " + std::to_string(vertices_[i]));
  }
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name.empty()) fail(ErrorCode::InvalidArgument, "empty arrow name");
    if (i > 0 && arrows_[i].name == arrows_[i - 1].name)
      fail(ErrorCode::InvalidArgument, "duplicate arrow " + arrows_[i].name);
    if (!has_vertex(arrows_[i].tail) || !has_vertex(arrows_[i].head))
      fail(ErrorCode::InvalidArgument, "arrow " + arrows_[i].name + " references unknown vertex");
    tails_.push_back(vertex_index(arrows_[i].tail));
    heads_.push_back(vertex_index(arrows_[i].head));
  }
  if (topological_order().size() != vertices_.size()) fail(ErrorCode::CyclicQuiver, "quiver has an oriented cycle");
}

bool Quiver::has_vertex(int id) const { return std::binary_search(vertices_.begin(), vertices_.end(), id); }

std::size_t Quiver::vertex_index(int id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) fail(ErrorCode::DomainMismatch, "unknown vertex " + std::to_string(id));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, const std::string& n) { return a.name < n; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) fail(ErrorCode::DomainMismatch, "unknown arrow " + name);
  return *a;
}

std::vector<std::size_t> Quiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (tails_[a] == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (heads_[a] == v) out.push_back(a);
  return out;
}

bool Quiver::is_sink(std::size_t v) const { return out_arrows(v).empty(); }
bool Quiver::is_source(std::size_t v) const { return in_arrows(v).empty(); }

std::vector<std::size_t> Quiver::topological_order() const {
  std::vector<int> indeg(vertices_.size(), 0);
  for (auto h : heads_) ++indeg[h];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (tails_[a] == v && --indeg[heads_[a]] == 0) ready.push(heads_[a]);
  }
  return order;
}

Quiver Quiver::reflected_at(std::size_t v) const {
  std::vector<Arrow> arrows = arrows_;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (tails_[a] == v || heads_[a] == v) std::swap(arrows[a].tail, arrows[a].head);
  return Quiver(name_, vertices_, arrows);
}

Quiver Quiver::renamed(std::string name) const {
  Quiver q = *this;
  q.name_ = std::move(name);
  return q;
}

bool Quiver::same_shape(const Quiver& other) const {
  return vertices_ == other.vertices_ && arrows_ == other.arrows_;
}

DimVec Quiver::unit(std::size_t v) const {
  DimVec d = zero_dim();
  d.at(v) = 1;
  return d;
}

std::string Classification::to_string() const {
  const char* base = "Other";
  switch (type) {
    case GraphType::DynkinA: base = "DynkinA"; break;
    case GraphType::DynkinD: base = "DynkinD"; break;
    case GraphType::DynkinE: base = "DynkinE"; break;
    case GraphType::EuclideanA: base = "EuclideanA"; break;
    case GraphType::EuclideanD: base = "EuclideanD"; break;
    case GraphType::EuclideanE: base = "EuclideanE"; break;
    case GraphType::Other: return "Other";
  }
  return std::string(base) + "(" + std::to_string(n) + ")";
}

namespace {

struct Undirected {
  std::vector<std::vector<std::size_t>> adj;  // with multiplicity
};

Undirected undirected(const Quiver& q) {
  Undirected g;
  g.adj.assign(q.num_vertices(), {});
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    g.adj[q.tail(a)].push_back(q.head(a));
    g.adj[q.head(a)].push_back(q.tail(a));
  }
  return g;
}

bool connected(const Undirected& g) {
  if (g.adj.empty()) return true;
  std::vector<bool> seen(g.adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.adj.size();
}

// Number of vertices on the arm leaving `from` through `first`, stopping at a leaf or branch point.
std::size_t arm_length(const Undirected& g, std::size_t from, std::size_t first) {
  std::size_t prev = from, cur = first, len = 1;
  while (g.adj[cur].size() == 2) {
    std::size_t next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return g.adj[cur].size() == 1 ? len : 0;
}

}  // namespace

Classification validate_and_classify(const Quiver& q) {
  if (q.topological_order().size() != q.num_vertices()) fail(ErrorCode::CyclicQuiver, "quiver has an oriented cycle");
  Classification c;
  const auto g = undirected(q);
  const std::size_t v = q.num_vertices(), e = q.num_arrows();
  if (v == 0 || !connected(g)) return c;
  std::vector<std::size_t> branch;
  std::size_t maxdeg = 0;
  for (std::size_t x = 0; x < v; ++x) {
    maxdeg = std::max(maxdeg, g.adj[x].size());
    if (g.adj[x].size() >= 3) branch.push_back(x);
  }
  if (e == v) {
    if (maxdeg == 2) c = {GraphType::EuclideanA, static_cast<int>(v) - 1};
    return c;
  }
  if (e + 1 != v) return c;
  const int n = static_cast<int>(v);
  if (branch.empty()) return {GraphType::DynkinA, n};
  if (branch.size() == 1) {
    std::size_t b = branch[0];
    std::vector<std::size_t> arms;
    for (auto w : g.adj[b]) arms.push_back(arm_length(g, b, w));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4 && arms == std::vector<std::size_t>{1, 1, 1, 1}) return {GraphType::EuclideanD, 4};
    if (arms.size() != 3) return c;
    if (arms[0] == 1 && arms[1] == 1) return {GraphType::DynkinD, n};
    if (arms == std::vector<std::size_t>{1, 2, 2}) return {GraphType::DynkinE, 6};
    if (arms == std::vector<std::size_t>{1, 2, 3}) return {GraphType::DynkinE, 7};
    if (arms == std::vector<std::size_t>{1, 2, 4}) return {GraphType::DynkinE, 8};
    if (arms == std::vector<std::size_t>{2, 2, 2}) return {GraphType::EuclideanE, 6};
    if (arms == std::vector<std::size_t>{1, 3, 3}) return {GraphType::EuclideanE, 7};
    if (arms == std::vector<std::size_t>{1, 2, 5}) return {GraphType::EuclideanE, 8};
    return c;
  }
  if (branch.size() == 2) {
    for (auto b : branch) {
      if (g.adj[b].size() != 3) return c;
      int leaves = 0;
      for (auto w : g.adj[b])
        if (g.adj[w].size() == 1) ++leaves;
      if (leaves != 2) return c;
    }
    return {GraphType::EuclideanD, n - 1};
  }
  return c;
}

std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
  if (a.size() != q.num_vertices() || b.size() != q.num_vertices())
    fail(ErrorCode::DomainMismatch, "dimension vector does not match quiver");
  std::int64_t s = 0;
  for (std::size_t x = 0; x < a.size(); ++x) s += a[x] * b[x];
  for (std::size_t e = 0; e < q.num_arrows(); ++e) s -= a[q.tail(e)] * b[q.head(e)];
  return s;
}

std::int64_t tits_form(const Quiver& q, const DimVec& a) { return euler_form(q, a, a); }

DimVec null_root(const Quiver& q) {
  if (!validate_and_classify(q).euclidean()) fail(ErrorCode::NotEuclidean, "quiver is not Euclidean");
  const std::size_t n = q.num_vertices();
  Matrix sym(n, n);
  for (std::size_t x = 0; x < n; ++x) sym(x, x) = 2;
  for (std::size_t e = 0; e < q.num_arrows(); ++e) {
    sym(q.tail(e), q.head(e)) -= 1;
    sym(q.head(e), q.tail(e)) -= 1;
  }
  auto ker = kernel_basis(sym);
  if (ker.size() != 1) fail(ErrorCode::NotEuclidean, "radical is not one-dimensional");
  mpz_class l = 1;
  for (const auto& x : ker[0]) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : ker[0]) {
    mpz_class v = mpz_class(x * l);
    ints.push_back(v);
    g = gcd(g, v);
  }
  DimVec h;
  int sign = ints[0] < 0 ? -1 : 1;
  for (const auto& v : ints) h.push_back(sign * mpz_class(v / g).get_si());
  return h;
}

std::int64_t defect(const Quiver& q, const DimVec& d) { return euler_form(q, null_root(q), d); }

DimVec add(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DomainMismatch, "dimension vector sizes differ");
  DimVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

DimVec sub(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DomainMismatch, "dimension vector sizes differ");
  DimVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

DimVec scale(std::int64_t s, const DimVec& a) {
  DimVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

bool is_nonneg(const DimVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_zero(const DimVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace symq
