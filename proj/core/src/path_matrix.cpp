#include "symq/path_matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "symq/error.hpp"

namespace symq {

Path make_path(const Quiver& q, const std::vector<std::string>& arrows) {
  if (arrows.empty()) fail(ErrorCode::InvalidArgument, "use trivial_path for empty paths");
  Path p;
  p.arrows = arrows;
  const auto& first = q.arrows()[q.arrow_index(arrows.front())];
  p.from = first.tail;
  int cur = first.head;
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    const auto& a = q.arrows()[q.arrow_index(arrows[i])];
    if (a.tail != cur) fail(ErrorCode::InvalidArgument, "arrows " + arrows[i - 1] + " and " + arrows[i] + " do not compose");
    cur = a.head;
  }
  p.to = cur;
  return p;
}

Path trivial_path(int vertex) { return {vertex, vertex, {}}; }

Path concat(const Path& first, const Path& second) {
  if (first.to != second.from) fail(ErrorCode::InvalidArgument, "paths do not compose");
  Path p{first.from, second.to, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

std::vector<Path> paths_between(const Quiver& q, int from, int to) {
  std::vector<Path> out;
  Path cur = trivial_path(from);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (q.vertices()[v] == to) out.push_back(cur);
    for (auto a : q.out_arrows(v)) {
      cur.arrows.push_back(q.arrows()[a].name);
      cur.to = q.arrows()[a].head;
      dfs(q.head(a));
      cur.arrows.pop_back();
      cur.to = q.vertices()[v];
    }
  };
  dfs(q.vertex_index(from));
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a.arrows < b.arrows;
  });
  return out;
}

Matrix evaluate_path(const Representation& w, const Path& p) {
  const Quiver& q = w.quiver;
  Matrix m = Matrix::identity(static_cast<std::size_t>(w.dim[q.vertex_index(p.from)]));
  int cur = p.from;
  for (const auto& name : p.arrows) {
    auto idx = q.find_arrow(name);
    if (!idx || q.arrows()[*idx].tail != cur) fail(ErrorCode::QuiverMismatch, "path does not fit the quiver at " + name);
    m = w.maps[*idx] * m;
    cur = q.arrows()[*idx].head;
  }
  if (cur != p.to) fail(ErrorCode::QuiverMismatch, "path ends at the wrong vertex");
  return m;
}

PathMatrix PathMatrix::zero(std::vector<int> rows, std::vector<int> cols) {
  PathMatrix t;
  t.entries.assign(rows.size(), std::vector<PathCombination>(cols.size()));
  t.rows = std::move(rows);
  t.cols = std::move(cols);
  return t;
}

void PathMatrix::add(std::size_t r, std::size_t c, const Rational& coeff, const Path& p) {
  if (p.from != cols[c] || p.to != rows[r]) fail(ErrorCode::InvalidArgument, "path endpoints do not match the entry");
  if (coeff == 0) return;
  for (auto& term : entries[r][c])
    if (term.path == p) {
      term.coeff += coeff;
      return;
    }
  entries[r][c].push_back({coeff, p});
}

bool PathMatrix::square_shape(const DimVec& dim, const Quiver& q) const {
  std::int64_t r = 0, c = 0;
  for (int v : rows) r += dim[q.vertex_index(v)];
  for (int v : cols) c += dim[q.vertex_index(v)];
  return r == c;
}

Matrix evaluate_template(const PathMatrix& t, const Representation& w) {
  const Quiver& q = w.quiver;
  std::vector<std::size_t> roff{0}, coff{0};
  for (int v : t.rows) roff.push_back(roff.back() + static_cast<std::size_t>(w.dim[q.vertex_index(v)]));
  for (int v : t.cols) coff.push_back(coff.back() + static_cast<std::size_t>(w.dim[q.vertex_index(v)]));
  Matrix m(roff.back(), coff.back());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
      if (t.entries[r][c].empty()) continue;
      Matrix block(roff[r + 1] - roff[r], coff[c + 1] - coff[c]);
      for (const auto& term : t.entries[r][c]) block += term.coeff * evaluate_path(w, term.path);
      m.set_block(roff[r], coff[c], block);
    }
  return m;
}

Rational evaluate_det(const PathMatrix& t, const Representation& w) { return determinant(evaluate_template(t, w)); }

Matrix paired_template(const PathMatrix& t, const StructuredRepresentation& w) {
  const SymmetricQuiver& sq = w.sq;
  const Quiver& q = sq.quiver();
  if (t.rows.size() != t.cols.size()) fail(ErrorCode::NotSquare, "template has different numbers of rows and columns");
  std::vector<Matrix> grams;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    std::size_t r = q.vertex_index(t.rows[k]);
    if (sq.sigma_vertex(r) != q.vertex_index(t.cols[k]))
      fail(ErrorCode::InvalidArgument, "row vertices are not the sigma images of the column vertices");
    grams.push_back(gram_matrix(sq, w.flavor, r, w.dim[r]));
  }
  return block_diagonal(grams).transpose() * evaluate_template(t, w.full());
}

Rational evaluate_pf(const PathMatrix& t, const StructuredRepresentation& w) { return pfaffian(paired_template(t, w)); }

namespace {

struct ProjectiveBasis {
  // For each vertex z: the paths from the generator vertex to z.
  std::vector<std::vector<Path>> at;
};

ProjectiveBasis projective(const Quiver& q, int x) {
  ProjectiveBasis p;
  for (int z : q.vertices()) p.at.push_back(paths_between(q, x, z));
  return p;
}

std::size_t path_position(const std::vector<Path>& basis, const Path& p) {
  auto it = std::find(basis.begin(), basis.end(), p);
  if (it == basis.end()) fail(ErrorCode::InvalidArgument, "path missing from projective basis");
  return static_cast<std::size_t>(it - basis.begin());
}

Path extend(const Quiver& q, const Path& p, std::size_t arrow) {
  Path r = p;
  r.arrows.push_back(q.arrows()[arrow].name);
  r.to = q.arrows()[arrow].head;
  return r;
}

// Offsets of the generator blocks inside P(z) = sum_g P_{x_g}(z).
std::vector<std::size_t> offsets(const std::vector<ProjectiveBasis>& gens, std::size_t z) {
  std::vector<std::size_t> off{0};
  for (const auto& g : gens) off.push_back(off.back() + g.at[z].size());
  return off;
}

// Map P(tb) -> P(hb) given by post-composition with the arrow b.
Matrix arrow_action(const Quiver& q, const std::vector<ProjectiveBasis>& gens, std::size_t b) {
  const std::size_t t = q.tail(b), h = q.head(b);
  auto ot = offsets(gens, t), oh = offsets(gens, h);
  Matrix m(oh.back(), ot.back());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < gens[g].at[t].size(); ++i)
      m(oh[g] + path_position(gens[g].at[h], extend(q, gens[g].at[t][i], b)), ot[g] + i) = 1;
  return m;
}

}  // namespace

Representation module_from_presentation(const Quiver& q, const PathMatrix& t) {
  const std::size_t nv = q.num_vertices();
  std::vector<ProjectiveBasis> p0, p1;
  for (int c : t.cols) p0.push_back(projective(q, c));
  for (int r : t.rows) p1.push_back(projective(q, r));
  std::vector<Matrix> proj(nv), section(nv);
  DimVec dim(nv, 0);
  for (std::size_t z = 0; z < nv; ++z) {
    auto o0 = offsets(p0, z), o1 = offsets(p1, z);
    Matrix a(o0.back(), o1.back());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (std::size_t i = 0; i < p1[r].at[z].size(); ++i) {
        const Path& tail_path = p1[r].at[z][i];
        for (std::size_t c = 0; c < t.cols.size(); ++c)
          for (const auto& term : t.entries[r][c])
            a(o0[c] + path_position(p0[c].at[z], concat(term.path, tail_path)), o1[r] + i) += term.coeff;
      }
    auto comp = cokernel_complement(a);
    proj[z] = cokernel_projection(a, comp);
    section[z] = Matrix(o0.back(), comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) section[z](comp[k], k) = 1;
    dim[z] = static_cast<std::int64_t>(comp.size());
  }
  Representation v = Representation::zero(q, dim);
  for (std::size_t b = 0; b < q.num_arrows(); ++b)
    v.maps[b] = proj[q.head(b)] * arrow_action(q, p0, b) * section[q.tail(b)];
  return v;
}

PathMatrix minimal_presentation(const Representation& v) {
  const Quiver& q = v.quiver;
  v.validate();
  const std::size_t nv = q.num_vertices();
  struct Generator {
    std::size_t vertex;
    std::size_t coord;
  };
  std::vector<Generator> gens;
  for (std::size_t x = 0; x < nv; ++x) {
    std::vector<Matrix> ins;
    for (auto a : q.in_arrows(x)) ins.push_back(v.maps[a]);
    for (auto k : cokernel_complement(hstack(ins, static_cast<std::size_t>(v.dim[x])))) gens.push_back({x, k});
  }
  std::vector<ProjectiveBasis> p0;
  std::vector<int> cols;
  for (const auto& g : gens) {
    p0.push_back(projective(q, q.vertices()[g.vertex]));
    cols.push_back(q.vertices()[g.vertex]);
  }
  // Kernel of P0 -> V at each vertex.
  std::vector<Matrix> kernel(nv);
  for (std::size_t z = 0; z < nv; ++z) {
    auto off = offsets(p0, z);
    Matrix pi(static_cast<std::size_t>(v.dim[z]), off.back());
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < p0[g].at[z].size(); ++i) {
        Matrix image = evaluate_path(v, p0[g].at[z][i]);
        for (std::size_t r = 0; r < pi.rows(); ++r) pi(r, off[g] + i) = image(r, gens[g].coord);
      }
    kernel[z] = kernel_matrix(pi);
  }
  std::vector<int> rows;
  std::vector<RationalVector> relations;
  std::vector<std::size_t> relation_vertex;
  for (std::size_t z = 0; z < nv; ++z) {
    auto off = offsets(p0, z);
    std::vector<Matrix> radical;
    for (auto b : q.in_arrows(z)) radical.push_back(arrow_action(q, p0, b) * kernel[q.tail(b)]);
    Matrix span = hstack(radical, off.back());
    std::size_t rk = rank(span);
    for (std::size_t k = 0; k < kernel[z].cols(); ++k) {
      Matrix candidate = hstack({span, kernel[z].block(0, k, off.back(), 1)}, off.back());
      std::size_t r2 = rank(candidate);
      if (r2 == rk) continue;
      span = candidate;
      rk = r2;
      relations.push_back(kernel[z].col(k));
      relation_vertex.push_back(z);
      rows.push_back(q.vertices()[z]);
    }
  }
  PathMatrix t = PathMatrix::zero(rows, cols);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    auto off = offsets(p0, relation_vertex[r]);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < p0[g].at[relation_vertex[r]].size(); ++i)
        t.add(r, g, relations[r][off[g] + i], p0[g].at[relation_vertex[r]][i]);
  }
  return t;
}

PathMatrix SkewNormalization::apply(const PathMatrix& t) const {
  PathMatrix s = PathMatrix::zero({}, t.cols);
  for (std::size_t r = 0; r < source_row.size(); ++r) {
    s.rows.push_back(t.rows[source_row[r]]);
    s.entries.push_back(t.entries[source_row[r]]);
    for (auto& entry : s.entries.back())
      for (auto& term : entry) term.coeff *= scale[r];
  }
  return s;
}

std::optional<SkewNormalization> skew_normalization(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor,
                                                    const DimVec& dim, int witnesses) {
  const Quiver& q = sq.quiver();
  const std::size_t n = t.cols.size();
  if (t.rows.size() != n) return std::nullopt;
  SkewNormalization norm;
  PathMatrix s = PathMatrix::zero({}, t.cols);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    int want = q.vertices()[sq.sigma_vertex(q.vertex_index(t.cols[k]))];
    std::size_t found = n;
    for (std::size_t r = 0; r < n && found == n; ++r)
      if (!used[r] && t.rows[r] == want) found = r;
    if (found == n) return std::nullopt;
    used[found] = true;
    norm.source_row.push_back(found);
    s.rows.push_back(want);
    s.entries.push_back(t.entries[found]);
  }
  std::vector<std::size_t> off{0};
  for (int c : s.cols) off.push_back(off.back() + static_cast<std::size_t>(dim[q.vertex_index(c)]));
  std::vector<Rational> scale(n, 0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    StructuredRepresentation w = random_structured(sq, flavor, dim, 7919u + static_cast<std::uint64_t>(attempt));
    Matrix f = paired_template(s, w);
    std::fill(scale.begin(), scale.end(), Rational(0));
    bool ok = true;
    for (std::size_t root = 0; root < n && ok; ++root) {
      if (scale[root] != 0) continue;
      scale[root] = 1;
      std::vector<std::size_t> stack{root};
      while (!stack.empty() && ok) {
        std::size_t k = stack.back();
        stack.pop_back();
        for (std::size_t l = 0; l < n && ok; ++l) {
          if (l == k) continue;
          Rational ratio = 0;
          bool linked = false;
          for (std::size_t i = off[k]; i < off[k + 1] && !linked; ++i)
            for (std::size_t j = off[l]; j < off[l + 1] && !linked; ++j)
              if (f(i, j) != 0 && f(j, i) != 0) {
                // scale_k f(i,j) = -scale_l f(j,i)
                ratio = -f(i, j) / f(j, i);
                linked = true;
              }
          if (!linked) continue;
          Rational want = scale[k] * ratio;
          if (scale[l] == 0) {
            scale[l] = want;
            stack.push_back(l);
          } else if (scale[l] != want) {
            ok = false;
          }
        }
      }
    }
    if (ok) break;
  }
  norm.scale = scale;
  s = norm.apply(t);
  for (int i = 0; i < witnesses; ++i) {
    StructuredRepresentation w = random_structured(sq, flavor, dim, 104729u + static_cast<std::uint64_t>(i));
    if (!paired_template(s, w).is_skew_symmetric()) return std::nullopt;
  }
  return norm;
}

std::optional<PathMatrix> skew_normalize(const PathMatrix& t, const SymmetricQuiver& sq, Flavor flavor,
                                         const DimVec& dim, int witnesses) {
  auto norm = skew_normalization(t, sq, flavor, dim, witnesses);
  if (!norm) return std::nullopt;
  return norm->apply(t);
}

std::vector<Rational> interpolate_bihomogeneous(const std::vector<Rational>& samples) {
  const std::size_t m = samples.size();
  if (m == 0) return {};
  const std::size_t t = m - 1;
  Matrix v(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    Rational pw = 1;
    // column i holds phi^{t-i}
    std::vector<Rational> powers(m);
    for (std::size_t e = 0; e < m; ++e) {
      powers[e] = pw;
      pw *= Rational(static_cast<long>(k));
    }
    for (std::size_t i = 0; i < m; ++i) v(k, i) = powers[t - i];
  }
  auto sol = solve(v, samples);
  if (!sol) fail(ErrorCode::Singular, "interpolation system is singular");
  return *sol;
}

}  // namespace symq
