#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symq/error.hpp"
#include "symq/reflection.hpp"
#include "symq/tame.hpp"

using namespace symq;

namespace {

const char* kTameFixtures[] = {"a201_00.qv", "a201_22.qv", "a202_00.qv", "a02_22.qv", "a11_02.qv",
                               "a11_06.qv",  "a00_22.qv",  "d10_3.qv",   "d01_3.qv"};

DimVec combine(const TauOrbits& t, std::int64_t p, const std::vector<std::vector<std::int64_t>>& labels) {
  DimVec d = scale(p, t.h);
  for (std::size_t o = 0; o < labels.size(); ++o)
    for (std::size_t i = 0; i < labels[o].size(); ++i) d = add(d, scale(labels[o][i], t.orbits[o].e[i]));
  return d;
}

DimVec random_regular_symmetric(const TauOrbits& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(0, 2);
  DimVec x = scale(small(rng), t.h);
  for (const auto& o : t.orbits)
    for (const auto& e : o.e) x = add(x, scale(small(rng), e));
  return add(x, delta(t.sq, x));
}

std::string arc_text(const TauOrbits& t, const Arc& a) {
  return "[" + std::to_string(a.start + 1) + "," + std::to_string(a.end(t) + 1) + "] q=" + std::to_string(a.q);
}

}  // namespace

TEST_SUITE("tame") {
  TEST_CASE("tau orbits") {
    for (const char* name : kTameFixtures) {
      CAPTURE(name);
      auto sq = test::fixture(name).symmetric();
      auto t = tau_orbits(sq);
      CHECK(is_symmetric(sq, t.h));
      for (const auto& o : t.orbits) {
        DimVec sum = sq.quiver().zero_dim();
        for (std::size_t i = 0; i < o.rank(); ++i) {
          CHECK(coxeter_dim(sq.quiver(), o.e[i], Direction::Plus) == o.e[(i + 1) % o.rank()]);
          const auto& s = o.sigma[i];
          CHECK(t.orbits[static_cast<std::size_t>(s.orbit)].e[static_cast<std::size_t>(s.index)] == delta(sq, o.e[i]));
          sum = add(sum, o.e[i]);
        }
        CHECK(sum == t.h);
      }
    }
    auto t = tau_orbits(test::fixture("a11_06.qv").symmetric());
    REQUIRE(t.orbits.size() == 1);
    CHECK(t.orbits[0].name == "delta");
    CHECK(t.orbits[0].rank() == 6);
    CHECK(tau_orbits(test::fixture("a201_00.qv").symmetric()).orbits.empty());
    auto d = tau_orbits(test::fixture("d10_3.qv").symmetric());
    REQUIRE(d.orbits.size() == 3);
    CHECK(d.orbits[1].name == "delta_prime");
    CHECK(d.orbits[2].name == "delta_second");
    CHECK_THROWS_AS(tau_orbits(test::fixture("a5_eq.qv").symmetric()), Error);
  }

  TEST_CASE("canonical decomposition") {
    auto t = tau_orbits(test::fixture("a11_06.qv").symmetric());
    auto c = canonical_decomposition(t, scale(3, t.h));
    CHECK(c.p == 3);
    CHECK(c.labels[0] == std::vector<std::int64_t>(6, 0));

    DimVec d = combine(t, 0, {{2, 3, 0, 2, 0, 3}});
    c = canonical_decomposition(t, d);
    CHECK(c.p == 0);
    CHECK(c.labels[0] == std::vector<std::int64_t>{2, 3, 0, 2, 0, 3});
    CHECK(combine(t, c.p, c.labels) == d);

    c = canonical_decomposition(t, combine(t, 2, {{1, 1, 0, 2, 0, 1}}));
    CHECK(c.p == 2);
    CHECK(c.labels[0] == std::vector<std::int64_t>{1, 1, 0, 2, 0, 1});

    DimVec bad = d;
    bad[0] += 1;
    CHECK_THROWS_AS(canonical_decomposition(t, bad), Error);
    try {
      canonical_decomposition(t, t.orbits[0].e[1]);
      FAIL("expected NotSymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
    auto k = tau_orbits(test::fixture("a02_22.qv").symmetric());
    try {
      canonical_decomposition(k, k.h, Flavor::Symplectic);
      FAIL("expected ParityViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParityViolation);
    }
    CHECK(canonical_decomposition(k, scale(2, k.h), Flavor::Symplectic).p == 2);
  }

  TEST_CASE("arcs") {
    auto t = tau_orbits(test::fixture("a11_06.qv").symmetric());
    auto zero = canonical_decomposition(t, scale(2, t.h));
    auto arcs = admissible_arcs(t, zero);
    CHECK(arcs.size() == 6);
    for (const auto& a : arcs) CHECK(a.length == 1);

    auto c = canonical_decomposition(t, combine(t, 0, {{2, 3, 0, 2, 0, 3}}));
    std::vector<std::string> adm;
    for (const auto& a : admissible_arcs(t, c)) adm.push_back("[" + std::to_string(a.start + 1) + "," +
                                                              std::to_string((a.end(t) + 1) % 6 + 1) + "]");
    std::sort(adm.begin(), adm.end());
    CHECK(adm == std::vector<std::string>{"[3,5]", "[5,3]"});

    std::vector<std::string> segs;
    for (const auto& a : decomposition_arcs(t, c)) segs.push_back(arc_text(t, a));
    std::sort(segs.begin(), segs.end());
    CHECK(segs == std::vector<std::string>{"[2,2] q=1", "[4,4] q=2", "[6,2] q=2", "[6,6] q=1"});
    for (const auto& a : decomposition_arcs(t, c)) {
      CHECK(is_symmetric_arc(t, a) == (sigma_arc(t, a) == a));
      CHECK(delta(t.sq, arc_dim(t, a)) == arc_dim(t, sigma_arc(t, a)));
    }
  }

  TEST_CASE("generic decomposition of the worked example") {
    auto t = tau_orbits(test::fixture("a11_06.qv").symmetric());
    DimVec d = combine(t, 0, {{2, 3, 0, 2, 0, 3}});
    auto render = [&](DecompositionMode m) {
      std::vector<std::string> out;
      for (const auto& s : generic_decomposition(t, d, m))
        out.push_back("(" + s.label + ")^" + std::to_string(s.multiplicity) + " " + summand_kind_name(s.kind));
      std::sort(out.begin(), out.end());
      return out;
    };
    auto plain = render(DecompositionMode::Plain);
    CHECK(std::count_if(plain.begin(), plain.end(), [](const std::string& s) { return s.find("(e4)^2") == 0; }) == 1);
    CHECK(plain.size() == 3);
    auto sp = render(DecompositionMode::Symplectic);
    CHECK(std::find_if(sp.begin(), sp.end(), [](const std::string& s) { return s.find("(2e4)^1") == 0; }) != sp.end());
    auto o = render(DecompositionMode::Orthogonal);
    CHECK(std::find_if(o.begin(), o.end(), [](const std::string& s) { return s.find("(e4)^2") == 0; }) != o.end());
  }

  TEST_CASE("generic decompositions add up to the dimension vector") {
    std::mt19937_64 rng(17);
    for (const char* name : kTameFixtures) {
      CAPTURE(name);
      auto t = tau_orbits(test::fixture(name).symmetric());
      for (int trial = 0; trial < 30; ++trial) {
        DimVec d = random_regular_symmetric(t, rng);
        CAPTURE(d);
        for (auto m : {DecompositionMode::Plain, DecompositionMode::Symplectic, DecompositionMode::Orthogonal}) {
          DimVec sum = t.sq.quiver().zero_dim();
          for (const auto& s : generic_decomposition(t, d, m)) {
            CHECK(s.multiplicity > 0);
            if (s.kind == SummandKind::Symmetric || s.kind == SummandKind::PairedSymmetric) CHECK(is_symmetric(t.sq, s.dim));
            sum = add(sum, scale(s.multiplicity, s.dim));
          }
          CHECK(sum == d);
        }
      }
    }
  }

  TEST_CASE("homogeneous copies lie in distinct homogeneous tubes") {
    for (const char* name : {"a201_22.qv", "a11_02.qv"}) {
      auto t = tau_orbits(test::fixture(name).symmetric());
      Summand s;
      s.dim = t.h;
      s.multiplicity = 4;
      s.parts = {Uniserial{-1, 0, 1}};
      auto copies = realize_summand_copies(t, s, 3);
      REQUIRE(copies.size() == 4);
      for (std::size_t i = 0; i < copies.size(); ++i) {
        for (const auto& orb : t.orbits)
          for (const auto& e : orb.e) CHECK(dvw_and_homext(brick(t.sq.quiver(), e, 1), copies[i]).hom_dim == 0);
        for (std::size_t j = 0; j < copies.size(); ++j)
          if (i != j) CHECK(dvw_and_homext(copies[i], copies[j]).ext_dim == 0);
      }
    }
  }
}
