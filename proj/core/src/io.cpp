#include "symq/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symq/error.hpp"
#include "symq/path_matrix.hpp"

namespace symq {

using json = nlohmann::json;

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_char(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Lines with comments removed, paired with 1-based line numbers; blank lines dropped.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto toks = split_ws(line);
    if (!toks.empty()) out.emplace_back(no, std::move(toks));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) parse_fail(line, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad integer '" + s + "'");
  }
}

Rational parse_rational_at(const std::string& s, int line) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    parse_fail(line, "bad rational '" + s + "'");
  }
}

std::string flavor_tag(Flavor f) { return f == Flavor::Symplectic ? "sp" : "o"; }

json path_json(const Path& p) { return json{{"arrows", p.arrows}, {"from", p.from}, {"to", p.to}}; }

json template_json(const PathMatrix& t) {
  json entries = json::array();
  for (const auto& row : t.entries) {
    json r = json::array();
    for (const auto& comb : row) {
      json terms = json::array();
      for (const auto& term : comb) terms.push_back(json{{"coeff", format_rational(term.coeff)}, {"path", path_json(term.path)}});
      r.push_back(terms);
    }
    entries.push_back(r);
  }
  return json{{"cols", t.cols}, {"entries", entries}, {"rows", t.rows}};
}

Path path_from_json(const json& j, const Quiver& q) {
  auto arrows = j.at("arrows").get<std::vector<std::string>>();
  Path p = arrows.empty() ? trivial_path(j.at("from").get<int>()) : make_path(q, arrows);
  if (p.from != j.at("from").get<int>() || p.to != j.at("to").get<int>())
    fail(ErrorCode::ParseError, "path endpoints do not match its arrows");
  return p;
}

PathMatrix template_from_json(const json& j, const Quiver& q) {
  PathMatrix t = PathMatrix::zero(j.at("rows").get<std::vector<int>>(), j.at("cols").get<std::vector<int>>());
  const auto& entries = j.at("entries");
  if (entries.size() != t.rows.size()) fail(ErrorCode::ParseError, "template row count mismatch");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (entries[r].size() != t.cols.size()) fail(ErrorCode::ParseError, "template column count mismatch");
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      for (const auto& term : entries[r][c])
        t.add(r, c, parse_rational(term.at("coeff").get<std::string>()), path_from_json(term.at("path"), q));
  }
  return t;
}

GeneratorKind kind_from_name(const std::string& s) {
  for (auto k : {GeneratorKind::Det, GeneratorKind::Pf, GeneratorKind::PencilDetCoeff, GeneratorKind::PencilPfCoeff})
    if (generator_kind_name(k) == s) return k;
  fail(ErrorCode::ParseError, "unknown generator kind '" + s + "'");
}

}  // namespace

const SymmetricQuiver& QuiverDocument::symmetric() const {
  if (!sym) fail(ErrorCode::InvalidArgument, "quiver '" + quiver.name() + "' has no sigma lines");
  return *sym;
}

QuiverDocument parse_quiver_document(const std::string& text) {
  std::optional<std::string> name;
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  VertexPairs vpairs;
  ArrowPairs apairs;
  for (const auto& [no, t] : tokenize(text)) {
    const auto& key = t[0];
    if (key == "quiver") {
      if (t.size() != 2) parse_fail(no, "expected 'quiver <name>'");
      if (name) parse_fail(no, "duplicate quiver line");
      name = t[1];
    } else if (key == "vertex") {
      if (t.size() < 2) parse_fail(no, "expected vertex ids");
      for (std::size_t i = 1; i < t.size(); ++i) vertices.push_back(static_cast<int>(parse_int(t[i], no)));
    } else if (key == "arrow") {
      if (t.size() != 4) parse_fail(no, "expected 'arrow <name> <tail> <head>'");
      arrows.push_back({t[1], static_cast<int>(parse_int(t[2], no)), static_cast<int>(parse_int(t[3], no))});
    } else if (key == "sigma") {
      if (t.size() != 4 || (t[1] != "v" && t[1] != "a")) parse_fail(no, "expected 'sigma v|a <x> <y>'");
      if (t[1] == "v")
        vpairs.emplace_back(static_cast<int>(parse_int(t[2], no)), static_cast<int>(parse_int(t[3], no)));
      else
        apairs.emplace_back(t[2], t[3]);
    } else {
      parse_fail(no, "unknown keyword '" + key + "'");
    }
  }
  if (!name) fail(ErrorCode::ParseError, "missing 'quiver <name>' line");
  QuiverDocument doc;
  doc.quiver = Quiver(*name, vertices, arrows);
  if (!vpairs.empty() || !apairs.empty()) doc.sym = SymmetricQuiver::build(doc.quiver, vpairs, apairs);
  return doc;
}

std::string serialize_quiver_document(const QuiverDocument& doc) {
  std::ostringstream out;
  const Quiver& q = doc.sym ? doc.sym->quiver() : doc.quiver;
  out << "quiver " << q.name() << "\n";
  out << "vertex";
  for (int v : q.vertices()) out << " " << v;
  out << "\n";
  for (const auto& a : q.arrows()) out << "arrow " << a.name << " " << a.tail << " " << a.head << "\n";
  if (doc.sym) {
    for (const auto& [i, j] : doc.sym->vertex_pairs()) out << "sigma v " << i << " " << j << "\n";
    for (const auto& [a, b] : doc.sym->arrow_pairs()) out << "sigma a " << a << " " << b << "\n";
  }
  return out.str();
}

Representation parse_rep_document(const std::string& text, const Quiver& q) {
  auto lines = tokenize(text);
  Representation v = Representation::zero(q, q.zero_dim());
  std::vector<bool> seen_dim(q.num_vertices(), false), seen_mat(q.num_arrows(), false);
  bool header = false;
  struct Block {
    std::size_t arrow;
    std::size_t rows, cols;
    int line;
    std::vector<RationalVector> data;
  };
  std::vector<Block> blocks;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& [no, t] = lines[li];
    if (t[0] == "rep") {
      if (t.size() != 2) parse_fail(no, "expected 'rep <quiver-name>'");
      if (header) parse_fail(no, "duplicate rep line");
      if (t[1] != q.name()) fail(ErrorCode::QuiverMismatch, "rep is for '" + t[1] + "', quiver is '" + q.name() + "'");
      header = true;
    } else if (t[0] == "dim") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto eq = t[i].find('=');
        if (eq == std::string::npos) parse_fail(no, "expected <vertex>=<n>");
        int id = static_cast<int>(parse_int(t[i].substr(0, eq), no));
        long long n = parse_int(t[i].substr(eq + 1), no);
        if (!q.has_vertex(id)) parse_fail(no, "unknown vertex " + std::to_string(id));
        if (n < 0) parse_fail(no, "negative dimension");
        auto x = q.vertex_index(id);
        if (seen_dim[x]) parse_fail(no, "duplicate dimension for vertex " + std::to_string(id));
        seen_dim[x] = true;
        v.dim[x] = n;
      }
    } else if (t[0] == "mat") {
      if (t.size() != 3) parse_fail(no, "expected 'mat <arrow> <r>x<c>'");
      auto a = q.find_arrow(t[1]);
      if (!a) parse_fail(no, "unknown arrow '" + t[1] + "'");
      if (seen_mat[*a]) parse_fail(no, "duplicate matrix for arrow '" + t[1] + "'");
      seen_mat[*a] = true;
      auto x = t[2].find('x');
      if (x == std::string::npos) parse_fail(no, "expected <r>x<c>");
      long long r = parse_int(t[2].substr(0, x), no), c = parse_int(t[2].substr(x + 1), no);
      if (r < 0 || c < 0) parse_fail(no, "negative matrix size");
      Block b{*a, static_cast<std::size_t>(r), static_cast<std::size_t>(c), no, {}};
      for (long long k = 0; k < r; ++k) {
        if (++li >= lines.size()) parse_fail(no, "matrix '" + t[1] + "' is missing rows");
        const auto& [rno, row] = lines[li];
        if (row.size() != b.cols) parse_fail(rno, "expected " + std::to_string(b.cols) + " entries");
        RationalVector vals;
        for (const auto& s : row) vals.push_back(parse_rational_at(s, rno));
        b.data.push_back(std::move(vals));
      }
      blocks.push_back(std::move(b));
    } else {
      parse_fail(no, "unknown keyword '" + t[0] + "'");
    }
  }
  if (!header) fail(ErrorCode::ParseError, "missing 'rep <quiver-name>' line");
  v = Representation::zero(q, v.dim);
  for (const auto& b : blocks) {
    auto& m = v.maps[b.arrow];
    if (b.rows != m.rows() || b.cols != m.cols())
      fail(ErrorCode::ShapeMismatch, "line " + std::to_string(b.line) + ": arrow '" + q.arrows()[b.arrow].name +
                                         "' needs " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c) m(r, c) = b.data[r][c];
  }
  return v;
}

std::string serialize_rep_document(const Representation& v) {
  std::ostringstream out;
  const Quiver& q = v.quiver;
  out << "rep " << q.name() << "\n";
  out << "dim";
  for (std::size_t x = 0; x < q.num_vertices(); ++x) out << " " << q.vertices()[x] << "=" << v.dim[x];
  out << "\n";
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Matrix& m = v.maps[a];
    out << "mat " << q.arrows()[a].name << " " << m.rows() << "x" << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_rational(m(r, c));
      out << "\n";
    }
  }
  return out.str();
}

Matrix parse_matrix_document(const std::string& text) {
  std::vector<RationalVector> rows;
  for (const auto& [no, t] : tokenize(text)) {
    RationalVector r;
    for (const auto& s : t) r.push_back(parse_rational_at(s, no));
    if (!rows.empty() && r.size() != rows.front().size()) parse_fail(no, "ragged matrix row");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

std::string serialize_matrix_document(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_rational(m(r, c));
    out << "\n";
  }
  return out.str();
}

namespace {

// Items of a comma list, either positional or keyed by vertex id.
std::vector<std::string> vertex_items(const std::string& text, const Quiver& q) {
  auto items = split_char(text, ',');
  bool keyed = text.find('=') != std::string::npos;
  std::vector<std::string> out(q.num_vertices(), "0");
  if (!keyed) {
    if (items.size() != q.num_vertices())
      fail(ErrorCode::DomainMismatch, "expected " + std::to_string(q.num_vertices()) + " values, got " +
                                          std::to_string(items.size()));
    return items;
  }
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected <vertex>=<value> in '" + it + "'");
    int id = static_cast<int>(parse_int(it.substr(0, eq), 0));
    out[q.vertex_index(id)] = it.substr(eq + 1);
  }
  return out;
}

}  // namespace

DimVec parse_dim(const std::string& text, const Quiver& q) {
  DimVec d;
  for (const auto& s : vertex_items(text, q)) {
    long long v = parse_int(s, 0);
    if (v < 0) fail(ErrorCode::ParseError, "negative dimension '" + s + "'");
    d.push_back(v);
  }
  return d;
}

RationalVector parse_weight(const std::string& text, const Quiver& q) {
  RationalVector w;
  for (const auto& s : vertex_items(text, q)) w.push_back(parse_rational(s));
  return w;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  if (text.empty()) return p;
  for (const auto& s : split_char(text, ',')) {
    long long v = parse_int(s, 0);
    if (v < 0) fail(ErrorCode::ParseError, "negative part '" + s + "'");
    p.push_back(static_cast<int>(v));
  }
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
  return normalize_partition(p);
}

std::string format_dim(const DimVec& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::string format_weight(const RationalVector& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + format_rational(w[i]);
  return s;
}

Flavor parse_flavor(const std::string& text) {
  if (text == "sp") return Flavor::Symplectic;
  if (text == "o") return Flavor::Orthogonal;
  fail(ErrorCode::InvalidArgument, "flavor must be 'sp' or 'o', got '" + text + "'");
}

std::string generator_record(const GeneratorDescriptor& g, const SymmetricQuiver& sq, Flavor flavor, std::size_t id) {
  json j;
  j["id"] = id;
  j["flavor"] = flavor_tag(flavor);
  j["kind"] = generator_kind_name(g.kind);
  j["index"] = g.index;
  j["phi_exponent"] = g.phi_exponent;
  j["provenance"] = g.provenance;
  const auto& ids = sq.quiver().vertices();
  json wv = json::array();
  for (std::size_t x = 0; x < g.weight.size(); ++x) wv.push_back(format_rational(g.weight[x]));
  j["weight"] = wv;
  j["vertices"] = ids;
  if (g.kind == GeneratorKind::Det || g.kind == GeneratorKind::Pf) {
    j["template"] = template_json(g.tmpl);
  } else {
    j["pencil"] = json{{"const", template_json(g.pencil.const_part)},
                       {"kind", g.pencil.kind == PencilKind::Pf ? "pf" : "det"},
                       {"phi", template_json(g.pencil.phi_part)},
                       {"psi", template_json(g.pencil.psi_part)}};
  }
  return j.dump();
}

std::vector<GeneratorRecord> parse_generator_file(const std::string& text, const SymmetricQuiver& sq) {
  std::vector<GeneratorRecord> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  const Quiver& q = sq.quiver();
  while (std::getline(in, line)) {
    ++no;
    if (split_ws(line).empty()) continue;
    try {
      json j = json::parse(line);
      GeneratorRecord rec;
      rec.id = j.at("id").get<std::size_t>();
      rec.flavor = parse_flavor(j.at("flavor").get<std::string>());
      auto& g = rec.descriptor;
      g.kind = kind_from_name(j.at("kind").get<std::string>());
      g.index = j.at("index").get<int>();
      g.phi_exponent = j.at("phi_exponent").get<int>();
      g.provenance = j.at("provenance").get<std::string>();
      if (j.at("vertices").get<std::vector<int>>() != q.vertices())
        fail(ErrorCode::QuiverMismatch, "generator vertices differ from the quiver");
      for (const auto& s : j.at("weight")) g.weight.push_back(parse_rational(s.get<std::string>()));
      if (g.weight.size() != q.num_vertices()) fail(ErrorCode::ParseError, "weight length mismatch");
      if (g.kind == GeneratorKind::Det || g.kind == GeneratorKind::Pf) {
        g.tmpl = template_from_json(j.at("template"), q);
      } else {
        const auto& p = j.at("pencil");
        g.pencil.kind = p.at("kind").get<std::string>() == "pf" ? PencilKind::Pf : PencilKind::Det;
        g.pencil.psi_part = template_from_json(p.at("psi"), q);
        g.pencil.phi_part = template_from_json(p.at("phi"), q);
        g.pencil.const_part = template_from_json(p.at("const"), q);
      }
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      parse_fail(no, e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::QuiverMismatch) throw;
      parse_fail(no, e.what());
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace symq
