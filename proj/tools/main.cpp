#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symq/error.hpp"
#include "symq/io.hpp"
#include "symq/reflection.hpp"
#include "symq/schur.hpp"
#include "symq/semiinvariant.hpp"
#include "symq/tame.hpp"

using namespace symq;
using json = nlohmann::json;

namespace {

QuiverDocument load_quiver(const std::string& path) { return parse_quiver_document(read_text_file(path)); }

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Validation: return 2;
    case ErrorClass::Unsupported: return 3;
    case ErrorClass::Precondition: return 4;
  }
  return 2;
}

DecompositionMode parse_mode(const std::string& s) {
  if (s == "plain") return DecompositionMode::Plain;
  if (s == "sp") return DecompositionMode::Symplectic;
  if (s == "o") return DecompositionMode::Orthogonal;
  fail(ErrorCode::InvalidArgument, "mode must be plain, sp or o, got '" + s + "'");
}

struct Options {
  std::string quiver, alpha, beta, dim, mode = "plain", flavor, weight, rep, gen_file, matrix, out;
  std::string lambda, mu, nu;
  int at = 0;
  bool json_lines = false;
  std::uint64_t seed = 0;
  int check_invariance = 0;
};

void cmd_classify(const Options& o) {
  auto doc = load_quiver(o.quiver);
  if (doc.sym)
    std::cout << classify_symmetric(*doc.sym).to_string() << "\n";
  else
    std::cout << validate_and_classify(doc.quiver).to_string() << "\n";
}

void cmd_euler(const Options& o) {
  auto doc = load_quiver(o.quiver);
  std::cout << euler_form(doc.quiver, parse_dim(o.alpha, doc.quiver), parse_dim(o.beta, doc.quiver)) << "\n";
}

Direction direction_at(const Quiver& q, std::size_t x) {
  if (q.is_sink(x)) return Direction::Plus;
  if (q.is_source(x)) return Direction::Minus;
  fail(ErrorCode::NotSinkOrSource, "vertex " + std::to_string(q.vertices()[x]) + " is neither a sink nor a source");
}

void cmd_reflect(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const Quiver& q = doc.quiver;
  const std::size_t x = q.vertex_index(o.at);
  QuiverDocument out_doc;
  std::optional<DimVec> out_dim;
  std::optional<Representation> out_rep;
  std::optional<Representation> in_rep;
  if (!o.rep.empty()) in_rep = parse_rep_document(read_text_file(o.rep), q);

  if (doc.sym) {
    const auto& sq = *doc.sym;
    if (!is_admissible(sq, x)) fail(ErrorCode::NotAdmissible, "vertex " + std::to_string(o.at) + " is not admissible");
    out_doc.sym = sq.reflected_pair(x);
    out_doc.quiver = out_doc.sym->quiver();
    if (!o.dim.empty()) out_dim = reflect_pair_dim(sq, x, parse_dim(o.dim, q));
    if (in_rep) {
      if (!o.flavor.empty()) {
        auto sr = structured_from_full(sq, parse_flavor(o.flavor), *in_rep);
        check_structured(sr);
        out_rep = reflect_pair_structured(sr, x).full();
      } else {
        Representation r = reflect_rep(x, direction_at(q, x), *in_rep);
        const std::size_t y = sq.sigma_vertex(x);
        if (y != x) r = reflect_rep(y, direction_at(r.quiver, y), r);
        out_rep = r;
      }
    }
  } else {
    direction_at(q, x);
    out_doc.quiver = q.reflected_at(x);
    if (!o.dim.empty()) out_dim = reflect_dim(q, x, parse_dim(o.dim, q)).dim;
    if (in_rep) out_rep = reflect_rep(x, direction_at(q, x), *in_rep);
  }

  const std::string qtext = serialize_quiver_document(out_doc);
  if (!o.out.empty()) {
    write_text_file(o.out + ".qv", qtext);
    if (out_rep) write_text_file(o.out + ".rep", serialize_rep_document(*out_rep));
    if (out_dim) std::cout << "dim " << format_dim(*out_dim) << "\n";
    return;
  }
  std::cout << qtext;
  if (out_dim) std::cout << "dim " << format_dim(*out_dim) << "\n";
  if (out_rep) std::cout << serialize_rep_document(*out_rep);
}

void cmd_decompose(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  auto t = tau_orbits(sq);
  auto d = parse_dim(o.dim, sq.quiver());
  for (const auto& s : generic_decomposition(t, d, parse_mode(o.mode))) {
    if (o.json_lines) {
      std::cout << json{{"dim", s.dim}, {"kind", summand_kind_name(s.kind)}, {"label", s.label},
                        {"multiplicity", s.multiplicity}}
                       .dump()
                << "\n";
    } else {
      std::cout << s.label << " x" << s.multiplicity << " " << summand_kind_name(s.kind) << " dim=" << format_dim(s.dim)
                << "\n";
    }
  }
}

void cmd_arcs(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  auto t = tau_orbits(sq);
  auto c = canonical_decomposition(t, parse_dim(o.dim, sq.quiver()));
  auto span = [&](const Arc& a, int shift) {
    const int r = static_cast<int>(t.orbits[static_cast<std::size_t>(a.orbit)].rank());
    return "[" + std::to_string(a.start + 1) + "," + std::to_string((a.start + a.length - 1 + shift) % r + 1) + "]";
  };
  if (o.json_lines) {
    std::cout << json{{"p", c.p}, {"type", "multiple_of_h"}}.dump() << "\n";
    for (std::size_t k = 0; k < t.orbits.size(); ++k)
      std::cout << json{{"labels", c.labels[k]}, {"polygon", t.orbits[k].name}, {"type", "polygon"}}.dump() << "\n";
    for (const auto& a : admissible_arcs(t, c))
      std::cout << json{{"arc", span(a, 1)}, {"ind", a.ind}, {"polygon", t.orbits[static_cast<std::size_t>(a.orbit)].name},
                        {"q", a.q}, {"type", "admissible"}}
                       .dump()
                << "\n";
    for (const auto& a : decomposition_arcs(t, c))
      std::cout << json{{"arc", span(a, 0)}, {"ind", a.ind}, {"polygon", t.orbits[static_cast<std::size_t>(a.orbit)].name},
                        {"q", a.q}, {"type", "segment"}}
                       .dump()
                << "\n";
    return;
  }
  std::cout << "p " << c.p << "\n";
  for (std::size_t k = 0; k < t.orbits.size(); ++k) {
    std::cout << "polygon " << t.orbits[k].name << " labels";
    for (auto v : c.labels[k]) std::cout << " " << v;
    std::cout << "\n";
  }
  for (const auto& a : admissible_arcs(t, c))
    std::cout << "admissible " << t.orbits[static_cast<std::size_t>(a.orbit)].name << " " << span(a, 1)
              << " ind=" << a.ind << " q=" << a.q << "\n";
  for (const auto& a : decomposition_arcs(t, c))
    std::cout << "segment " << t.orbits[static_cast<std::size_t>(a.orbit)].name << " " << span(a, 0) << " ind=" << a.ind
              << " q=" << a.q << "\n";
}

struct CheckResult {
  bool nonzero = false;
  bool invariant = true;
};

CheckResult check_generator(const GeneratorDescriptor& g, const SymmetricQuiver& sq, Flavor f, const DimVec& d,
                            std::uint64_t seed, int k) {
  CheckResult res;
  auto w = random_structured(sq, f, d, seed);
  Rational v = evaluate_generator(g, w);
  res.nonzero = v != 0;
  for (int i = 0; i < k && res.invariant; ++i) {
    auto h = random_group_element(sq, f, d, seed + 1 + static_cast<std::uint64_t>(i));
    res.invariant = evaluate_generator(g, act(h, w)) == v;
  }
  return res;
}

void cmd_generators(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  const Flavor f = parse_flavor(o.flavor);
  const DimVec d = parse_dim(o.dim, sq.quiver());
  const auto type = classify_symmetric(sq);
  auto gens = type.tame() ? generators_tame(sq, d, f) : generators_finite(sq, d, f);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    std::optional<CheckResult> chk;
    if (o.check_invariance > 0) chk = check_generator(g, sq, f, d, o.seed, o.check_invariance);
    if (o.json_lines) {
      json j = json::parse(generator_record(g, sq, f, i));
      if (chk) {
        j["invariant"] = chk->invariant;
        j["nonzero"] = chk->nonzero;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << i << " " << generator_kind_name(g.kind);
      if (g.kind == GeneratorKind::PencilDetCoeff || g.kind == GeneratorKind::PencilPfCoeff) std::cout << " c" << g.index;
      std::cout << " weight=(" << format_weight(g.weight) << ") " << g.provenance;
      if (chk) std::cout << " nonzero=" << (chk->nonzero ? "yes" : "no") << " invariant=" << (chk->invariant ? "yes" : "no");
      std::cout << "\n";
    }
  }
}

void cmd_evaluate(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  auto full = parse_rep_document(read_text_file(o.rep), sq.quiver());
  auto records = parse_generator_file(read_text_file(o.gen_file), sq);
  for (const auto& rec : records) {
    auto w = structured_from_full(sq, rec.flavor, full);
    check_structured(w);
    Rational v = evaluate_generator(rec.descriptor, w);
    if (o.json_lines)
      std::cout << json{{"id", rec.id}, {"value", format_rational(v)}}.dump() << "\n";
    else
      std::cout << format_rational(v) << "\n";
  }
}

void cmd_lr(const Options& o) {
  std::cout << lr_coefficient(parse_partition(o.lambda), parse_partition(o.mu), parse_partition(o.nu)) << "\n";
}

void cmd_oracle_dim(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  std::cout << weight_space_dim(sq, parse_flavor(o.flavor), parse_dim(o.dim, sq.quiver()), parse_weight(o.weight, sq.quiver()))
            << "\n";
}

void cmd_format(const Options& o) {
  auto doc = load_quiver(o.quiver);
  if (o.rep.empty())
    std::cout << serialize_quiver_document(doc);
  else
    std::cout << serialize_rep_document(parse_rep_document(read_text_file(o.rep), doc.quiver));
}

void cmd_weights(const Options& o) {
  auto doc = load_quiver(o.quiver);
  const auto& sq = doc.symmetric();
  auto w = weight_of_cV(sq, parse_dim(o.alpha, sq.quiver()), parse_flavor(o.flavor));
  std::cout << "weight " << format_weight(w) << "\n";
  std::cout << "gamma " << format_weight(gamma(sq, w)) << "\n";
}

void cmd_pfaffian(const Options& o) {
  std::cout << format_rational(pfaffian(parse_matrix_document(read_text_file(o.matrix)))) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric quiver semi-invariants"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Symmetric type of a quiver file");
  classify->add_option("-q,--quiver", o.quiver, "Quiver file")->required();

  auto* euler = app.add_subcommand("euler", "Euler form <alpha, beta>");
  euler->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  euler->add_option("--alpha", o.alpha)->required();
  euler->add_option("--beta", o.beta)->required();

  auto* reflect = app.add_subcommand("reflect", "Reflection at a sink or source (paired when sigma is present)");
  reflect->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  reflect->add_option("--at", o.at, "Vertex id")->required();
  reflect->add_option("--dim", o.dim);
  reflect->add_option("--rep", o.rep, "Representation file");
  reflect->add_option("--flavor", o.flavor, "sp or o: reflect as a structured representation");
  reflect->add_option("-o,--out", o.out, "Write <out>.qv and <out>.rep instead of printing");

  auto* decompose = app.add_subcommand("decompose", "Generic decomposition of a regular dimension vector");
  decompose->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  decompose->add_option("--dim", o.dim)->required();
  decompose->add_option("--mode", o.mode, "plain, sp or o");
  decompose->add_flag("--json-lines", o.json_lines);

  auto* arcs = app.add_subcommand("arcs", "Labelled polygons and arcs");
  arcs->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  arcs->add_option("--dim", o.dim)->required();
  arcs->add_flag("--json-lines", o.json_lines);

  auto* generators = app.add_subcommand("generators", "Generating semi-invariants");
  generators->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  generators->add_option("--dim", o.dim)->required();
  generators->add_option("--flavor", o.flavor, "sp or o")->required();
  generators->add_flag("--json-lines", o.json_lines);
  generators->add_option("--seed", o.seed, "Seed for randomized checks");
  generators->add_option("--check-invariance", o.check_invariance, "Number of random group elements to test");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate generators on a representation");
  evaluate->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  evaluate->add_option("--rep", o.rep, "Representation file")->required();
  evaluate->add_option("--gen-file", o.gen_file, "Generator records")->required();
  evaluate->add_flag("--json-lines", o.json_lines);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("--lambda", o.lambda)->required();
  lr->add_option("--mu", o.mu)->required();
  lr->add_option("--nu", o.nu)->required();

  auto* oracle = app.add_subcommand("oracle-dim", "Dimension of a weight space of semi-invariants");
  oracle->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  oracle->add_option("--dim", o.dim)->required();
  oracle->add_option("--flavor", o.flavor, "sp or o")->required();
  oracle->add_option("--weight", o.weight)->required();

  auto* format = app.add_subcommand("format", "Canonical form of a quiver file, or of a representation file with --rep");
  format->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  format->add_option("--rep", o.rep, "Representation file");

  auto* weights = app.add_subcommand("weights", "Weight of c^V and its gamma image");
  weights->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
  weights->add_option("--alpha", o.alpha, "Dimension vector of V")->required();
  weights->add_option("--flavor", o.flavor, "sp or o")->required();

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew-symmetric matrix file");
  pf->add_option("--matrix", o.matrix, "Matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*classify) cmd_classify(o);
    else if (*euler) cmd_euler(o);
    else if (*reflect) cmd_reflect(o);
    else if (*decompose) cmd_decompose(o);
    else if (*arcs) cmd_arcs(o);
    else if (*generators) cmd_generators(o);
    else if (*evaluate) cmd_evaluate(o);
    else if (*lr) cmd_lr(o);
    else if (*oracle) cmd_oracle_dim(o);
    else if (*format) cmd_format(o);
    else if (*weights) cmd_weights(o);
    else if (*pf) cmd_pfaffian(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(error_class(e.code()));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
