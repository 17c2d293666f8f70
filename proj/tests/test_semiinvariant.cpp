#include <functional>
#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symq/error.hpp"
#include "symq/reflection.hpp"
#include "symq/schur.hpp"
#include "symq/semiinvariant.hpp"
#include "symq/tame.hpp"

using namespace symq;

namespace {

struct Case {
  std::string fixture;
  DimVec dim;
  Flavor flavor;
};

std::vector<GeneratorDescriptor> generators_for(const SymmetricQuiver& sq, const DimVec& d, Flavor f) {
  if (!classify_symmetric(sq).tame()) return generators_finite(sq, d, f);
  return generators_tame(sq, d, f);
}

std::vector<Case> generator_cases() {
  std::vector<Case> cases = {
      {"a2_fixed.qv", {2, 2}, Flavor::Symplectic},       {"a2_fixed.qv", {2, 2}, Flavor::Orthogonal},
      {"a4_eq.qv", {1, 2, 2, 1}, Flavor::Symplectic},    {"a4_eq.qv", {2, 2, 2, 2}, Flavor::Orthogonal},
      {"a4_eq.qv", {2, 2, 2, 2}, Flavor::Symplectic},    {"a5_eq.qv", {2, 2, 2, 2, 2}, Flavor::Symplectic},
      {"a5_eq.qv", {1, 2, 2, 2, 1}, Flavor::Orthogonal}, {"a201_00.qv", {2, 2}, Flavor::Symplectic},
      {"a201_00.qv", {4, 4}, Flavor::Symplectic},        {"a201_00.qv", {4, 4}, Flavor::Orthogonal},
      {"d10_3.qv", {1, 1, 2, 2, 1, 1}, Flavor::Symplectic},
  };
  for (const char* name : {"a201_22.qv", "a202_00.qv", "a02_22.qv", "a11_02.qv", "a11_06.qv", "a00_22.qv", "d10_3.qv", "d01_3.qv"}) {
    auto t = tau_orbits(test::fixture(name).symmetric());
    for (auto f : {Flavor::Symplectic, Flavor::Orthogonal}) cases.push_back({name, scale(2, t.h), f});
  }
  return cases;
}

// t^e for e with denominator 1 or 2; t is a perfect square when e is a half-integer.
Rational rpow(const Rational& t, const Rational& e) {
  Rational base = t;
  mpz_class num = e.get_num();
  if (e.get_den() == 2) {
    mpz_class a = sqrt(base.get_num()), b = sqrt(base.get_den());
    REQUIRE(a * a == base.get_num());
    REQUIRE(b * b == base.get_den());
    base = Rational(a, b);
  } else {
    REQUIRE(e.get_den() == 1);
  }
  Rational out = 1;
  const bool neg = num < 0;
  for (mpz_class k = 0; k < abs(num); ++k) out *= base;
  return neg ? Rational(1) / out : out;
}

}  // namespace

TEST_SUITE("semiinvariant") {
  TEST_CASE("weights") {
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    CHECK(weight_of_cV(a4, {1, 1, 0, 0}, Flavor::Symplectic) == RationalVector{1, 0, -1, 0});
    auto a5 = test::fixture("a5_eq.qv").symmetric();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      DimVec a(5);
      for (auto& x : a) x = static_cast<std::int64_t>(rng() % 4);
      for (auto f : {Flavor::Symplectic, Flavor::Orthogonal}) {
        auto w = weight_of_cV(a5, a, f);
        CHECK(w[2] == 0);
        CHECK(w[0] == a[0] - 0);
        CHECK(w[1] == a[1] - a[0]);
      }
    }
  }

  TEST_CASE("gamma") {
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    RationalVector chi{1, 0, -1, 0};
    CHECK(gamma(a4, chi) == RationalVector{0, 1, 0, -1});
    CHECK(gamma(a4, chi) == weight_of_cV(a4, {0, 1, 1, 0}, Flavor::Symplectic));
    std::mt19937_64 rng(5);
    for (const char* name : {"a4_eq.qv", "a5_eq.qv", "a201_22.qv", "d10_3.qv"}) {
      auto sq = test::fixture(name).symmetric();
      const auto n = sq.quiver().num_vertices();
      for (int trial = 0; trial < 20; ++trial) {
        RationalVector w(n);
        for (auto& x : w) x = Rational(static_cast<long>(rng() % 7) - 3, 2);
        CHECK(gamma(sq, gamma(sq, w)) == w);
        RationalVector sym(n);
        for (std::size_t i = 0; i < n; ++i) sym[i] = w[i] + gamma(sq, w)[i];
        CHECK(gamma(sq, sym) == sym);
        for (std::size_t i = 0; i < n; ++i) CHECK(sym[i] == -sym[sq.sigma_vertex(i)]);
      }
    }
  }

  TEST_CASE("evaluate c^V") {
    auto a4q = equioriented_a(4);
    auto v = interval_module(4, 1, 3);
    REQUIRE(v.dim == DimVec{1, 1, 1, 0});
    auto w = Representation::zero(a4q, {1, 1, 1, 1});
    w.at("a1") = Matrix::from_ints({{2}});
    w.at("a2") = Matrix::from_ints({{3}});
    w.at("a3") = Matrix::from_ints({{5}});
    Rational c = evaluate_cV(v, w);
    CHECK((c == 30 || c == -30));
    w.at("a2") = Matrix::from_ints({{0}});
    CHECK(evaluate_cV(v, w) == 0);
    CHECK(dvw_and_homext(v, w).hom_dim > 0);
    try {
      evaluate_cV(v, Representation::zero(a4q, {1, 1, 1, 2}));
      FAIL("expected NonOrthogonalDimensions");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonOrthogonalDimensions);
    }

    // c^{V' + V''} = c^{V'} c^{V''} up to sign
    auto a5 = test::fixture("a5_eq.qv").symmetric();
    auto v1 = interval_module(5, 1, 2), v2 = interval_module(5, 4, 5);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto sw = random_structured(a5, Flavor::Orthogonal, {1, 1, 2, 1, 1}, seed);
      if (euler_form(a5.quiver(), v1.dim, sw.dim) != 0 || euler_form(a5.quiver(), v2.dim, sw.dim) != 0) continue;
      Rational prod = evaluate_cV(v1, sw) * evaluate_cV(v2, sw);
      Rational sum = evaluate_cV(direct_sum(v1, v2), sw);
      CHECK((sum == prod || sum == -prod));
    }
  }

  TEST_CASE("pfaffian type") {
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    const DimVec beta{2, 2, 2, 2};
    auto sp = generators_finite(a4, beta, Flavor::Symplectic);
    auto o = generators_finite(a4, beta, Flavor::Orthogonal);
    int pf_count = 0;
    for (const auto& g : o) {
      if (g.kind != GeneratorKind::Pf) continue;
      ++pf_count;
      CHECK(is_pfaffian_type(g.tmpl, a4, Flavor::Orthogonal, beta));
      CHECK_FALSE(is_pfaffian_type(g.tmpl, a4, Flavor::Symplectic, beta));
    }
    CHECK(pf_count == 2);
    for (const auto& g : sp) CHECK(g.kind == GeneratorKind::Det);
    CHECK_THROWS_AS(is_pfaffian_type(PathMatrix::zero({1}, {1, 2}), a4, Flavor::Orthogonal, beta), Error);
  }

  TEST_CASE("pencil coefficients") {
    auto k = test::fixture("a201_00.qv").symmetric();
    const auto& q = k.quiver();
    PathMatrix a = PathMatrix::zero({2}, {1}), b = PathMatrix::zero({2}, {1});
    a.add(0, 0, 1, make_path(q, {"a"}));
    b.add(0, 0, 1, make_path(q, {"b"}));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto w = random_structured(k, Flavor::Symplectic, {1, 1}, seed);
      auto c = pencil_coefficients(a, b, w, PencilKind::Det);
      auto full = w.full();
      REQUIRE(c.size() == 2);
      CHECK(c[0] == full.at("b")(0, 0));
      CHECK(c[1] == full.at("a")(0, 0));
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto w = random_structured(k, Flavor::Symplectic, {3, 3}, seed);
      auto c = pencil_coefficients(a, b, w, PencilKind::Det);
      auto full = w.full();
      REQUIRE(c.size() == 4);
      CHECK(c[0] == determinant(full.at("b")));
      CHECK(c[3] == determinant(full.at("a")));
      for (int phi = -3; phi <= 3; phi += 2) {
        Rational expect = 0, pw = 1;
        for (int i = 3; i >= 0; --i, pw *= phi) expect += c[static_cast<std::size_t>(i)] * pw;
        CHECK(determinant(full.at("a") + Rational(phi) * full.at("b")) == expect);
      }
    }
    PathMatrix wide = PathMatrix::zero({2, 2}, {1});
    CHECK_THROWS_AS(pencil_coefficients(a, wide, random_structured(k, Flavor::Symplectic, {1, 1}, 0), PencilKind::Det),
                    Error);
  }

  TEST_CASE("finite type generator sets") {
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    auto gs = generators_finite(a4, {1, 2, 2, 1}, Flavor::Symplectic);
    std::vector<RationalVector> weights;
    for (const auto& g : gs) weights.push_back(g.weight);
    std::sort(weights.begin(), weights.end());
    std::vector<RationalVector> want{weight_of_cV(a4, {0, 1, 0, 0}, Flavor::Symplectic),
                                     weight_of_cV(a4, {1, 1, 1, 0}, Flavor::Symplectic)};
    std::sort(want.begin(), want.end());
    CHECK(weights == want);

    auto o = generators_finite(a4, {2, 2, 2, 2}, Flavor::Orthogonal);
    for (const auto& g : o)
      if (g.kind == GeneratorKind::Pf)
        for (const auto& x : g.weight) CHECK(Rational(x * 2).get_den() == 1);

    auto a2 = test::fixture("a2_fixed.qv").symmetric();
    auto one = generators_finite(a2, {3, 3}, Flavor::Symplectic);
    REQUIRE(one.size() == 1);
    CHECK(one[0].weight == RationalVector{1, -1});
    CHECK(generators_finite(a2, {3, 3}, Flavor::Orthogonal).empty());

    try {
      generators_finite(a4, {1, 2, 1, 1}, Flavor::Symplectic);
      FAIL("expected AsymmetricDimension");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AsymmetricDimension);
    }
    try {
      generators_finite(test::fixture("a201_00.qv").symmetric(), {1, 1}, Flavor::Symplectic);
      FAIL("expected NotFiniteType");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFiniteType);
    }
  }

  TEST_CASE("tame generator sets") {
    auto k = test::fixture("a201_00.qv").symmetric();
    auto sp = generators_tame(k, {2, 2}, Flavor::Symplectic);
    REQUIRE(sp.size() == 3);
    CHECK(sp[0].kind == GeneratorKind::Det);
    CHECK(sp[1].kind == GeneratorKind::Det);
    CHECK(sp[2].kind == GeneratorKind::PencilDetCoeff);
    CHECK(generators_tame(k, {3, 3}, Flavor::Orthogonal).empty());

    // c_0 = det V(b) and c_p = det V(a)
    auto fam = generators_tame(k, {2, 2}, Flavor::Symplectic);
    const auto& pencil = fam[2].pencil;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto w = random_structured(k, Flavor::Symplectic, {2, 2}, seed);
      auto c = pencil_coefficients(pencil, w);
      auto full = w.full();
      REQUIRE(c.size() == 3);
      CHECK(c[0] == determinant(full.at("b")));
      CHECK(c[2] == determinant(full.at("a")));
    }

    auto d10 = test::fixture("d10_3.qv").symmetric();
    auto d = generators_tame(d10, {1, 1, 2, 2, 1, 1}, Flavor::Symplectic);
    std::set<std::string> clauses;
    for (const auto& g : d) clauses.insert(g.provenance);
    CHECK(d.size() == 7);
    CHECK(clauses.size() == 7);

    CHECK_THROWS_AS(generators_tame(test::fixture("a5_eq.qv").symmetric(), {1, 1, 1, 1, 1}, Flavor::Orthogonal), Error);
    try {
      generators_tame(d10, {1, 0, 1, 1, 1, 0}, Flavor::Orthogonal);
      FAIL("expected NotSymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
  }

  TEST_CASE("generators are nonzero and invariant") {
    for (const auto& cs : generator_cases()) {
      auto sq = test::fixture(cs.fixture).symmetric();
      CAPTURE(cs.fixture);
      CAPTURE(cs.dim);
      CAPTURE(flavor_name(cs.flavor));
      for (const auto& g : generators_for(sq, cs.dim, cs.flavor)) {
        CAPTURE(g.provenance);
        for (std::size_t x = 0; x < g.weight.size(); ++x)
          if (sq.vertex_fixed(x)) CHECK(g.weight[x] == 0);
        bool nonzero = false;
        for (std::uint64_t s = 0; s < 2; ++s) {
          auto w = random_structured(sq, cs.flavor, cs.dim, 100 + s);
          const Rational value = evaluate_generator(g, w);
          nonzero = nonzero || value != 0;
          if (g.kind == GeneratorKind::Pf) {
            const Rational det = evaluate_generator_det(g, w);
            CHECK((value * value == det || value * value == -det));
          }
          for (std::uint64_t h = 0; h < 20; ++h)
            CHECK(evaluate_generator(g, act(random_group_element(sq, cs.flavor, cs.dim, 1000 * s + h), w)) == value);
        }
        CHECK(nonzero);
      }
    }
  }

  TEST_CASE("generator weights match diagonal scaling") {
    std::mt19937_64 rng(11);
    const Rational scalars[] = {4, 9, Rational(1, 4), Rational(9, 4)};
    for (const auto& cs : generator_cases()) {
      auto sq = test::fixture(cs.fixture).symmetric();
      CAPTURE(cs.fixture);
      auto plus = sq.vertices_on(Side::Plus);
      std::vector<Rational> t(sq.quiver().num_vertices(), 1);
      std::vector<Matrix> blocks;
      for (std::size_t x = 0; x < cs.dim.size(); ++x) {
        if (sq.vertex_side(x) == Side::Plus) t[x] = scalars[rng() % 4];
        blocks.push_back(t[x] * Matrix::identity(static_cast<std::size_t>(cs.dim[x])));
      }
      auto g = group_element_from(sq, cs.flavor, cs.dim, blocks);
      auto w = random_structured(sq, cs.flavor, cs.dim, 7);
      for (const auto& gen : generators_for(sq, cs.dim, cs.flavor)) {
        Rational expect = 1;
        for (auto x : plus) {
          const Rational e = gen.weight[x] - gen.weight[sq.sigma_vertex(x)];
          expect *= rpow(t[x], -e * cs.dim[x]);
        }
        CHECK(weight_character(sq, gen.weight, g) == expect);
        CHECK(evaluate_generator(gen, act(g, w)) == expect * evaluate_generator(gen, w));
      }
    }
  }

  TEST_CASE("composition reduction") {
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    auto r = reduce_composition(a4, {1, 2, 2, 1}, Flavor::Symplectic);
    CHECK(r.vertex == 2);
    CHECK(r.alpha == DimVec{1, 1});
    CHECK(r.extracted.size() == 1);
    r = reduce_composition(a4, {1, 2, 2, 1}, Flavor::Orthogonal);
    REQUIRE(r.extracted.size() == 1);
    CHECK(r.extracted[0].kind == GeneratorKind::Pf);

    auto a5 = test::fixture("a5_eq.qv").symmetric();
    r = reduce_composition(a5, {1, 1, 1, 1, 1}, Flavor::Orthogonal);
    CHECK(r.rule == "cl-c");
    CHECK(r.extracted.size() == 2);
    CHECK(r.sq.quiver().num_vertices() == 3);
    try {
      reduce_composition(a5, {1, 1, 2, 1, 1}, Flavor::Symplectic);
      FAIL("expected PatternNotFound");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PatternNotFound);
    }

    auto a6q = equioriented_a(6);
    auto a6 = SymmetricQuiver::build(a6q, {{1, 6}, {2, 5}, {3, 4}}, {{"a1", "a5"}, {"a2", "a4"}, {"a3", "a3"}});
    r = reduce_composition(a6, {1, 2, 1, 1, 2, 1}, Flavor::Symplectic, 2);
    CHECK(r.rule == "cl-a");
    CHECK(r.extracted.empty());

    // extracted generators survive as semi-invariants of the original quiver
    for (auto f : {Flavor::Symplectic, Flavor::Orthogonal}) {
      const DimVec alpha{2, 2, 2, 2, 2};
      auto c = reduce_composition(a5, alpha, f);
      for (const auto& g : c.extracted) {
        auto w = random_structured(a5, f, alpha, 1);
        const Rational value = evaluate_generator(g, w);
        CHECK(value != 0);
        CHECK(evaluate_generator(g, act(random_group_element(a5, f, alpha, 2), w)) == value);
      }
    }
  }

  TEST_CASE("generated semigroup matches the weight space oracle") {
    const std::vector<Case> cases = {
        {"a2_fixed.qv", {2, 2}, Flavor::Symplectic},    {"a2_fixed.qv", {2, 2}, Flavor::Orthogonal},
        {"a4_eq.qv", {1, 2, 2, 1}, Flavor::Symplectic}, {"a4_eq.qv", {2, 2, 2, 2}, Flavor::Orthogonal},
        {"a201_00.qv", {2, 2}, Flavor::Symplectic},     {"a201_00.qv", {4, 4}, Flavor::Orthogonal},
    };
    for (const auto& cs : cases) {
      auto sq = test::fixture(cs.fixture).symmetric();
      CAPTURE(cs.fixture);
      CAPTURE(flavor_name(cs.flavor));
      auto gens = generators_for(sq, cs.dim, cs.flavor);
      REQUIRE_FALSE(gens.empty());
      const std::size_t samples = 24;
      std::vector<std::vector<Rational>> values(gens.size());
      for (std::size_t s = 0; s < samples; ++s) {
        auto w = random_structured(sq, cs.flavor, cs.dim, 300 + s);
        for (std::size_t i = 0; i < gens.size(); ++i) values[i].push_back(evaluate_generator(gens[i], w));
      }
      // all monomials of total degree <= 3, grouped by weight
      std::map<RationalVector, std::vector<std::vector<int>>> by_weight;
      std::vector<int> expo(gens.size(), 0);
      std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
        if (i == gens.size()) {
          RationalVector w(cs.dim.size(), 0);
          for (std::size_t k = 0; k < gens.size(); ++k)
            for (std::size_t x = 0; x < w.size(); ++x) w[x] += gens[k].weight[x] * expo[k];
          by_weight[w].push_back(expo);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          expo[i] = e;
          walk(i + 1, left - e);
        }
        expo[i] = 0;
      };
      walk(0, 3);
      for (const auto& [chi, monos] : by_weight) {
        CAPTURE(chi);
        Matrix m(monos.size(), samples);
        for (std::size_t r = 0; r < monos.size(); ++r)
          for (std::size_t s = 0; s < samples; ++s) {
            Rational v = 1;
            for (std::size_t k = 0; k < gens.size(); ++k)
              for (int e = 0; e < monos[r][k]; ++e) v *= values[k][s];
            m(r, s) = v;
          }
        const std::int64_t oracle = weight_space_dim(sq, cs.flavor, cs.dim, chi);
        CHECK(static_cast<std::int64_t>(rank(m)) == oracle);
      }
    }
  }
}
