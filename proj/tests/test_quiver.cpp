#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symq/error.hpp"
#include "symq/quiver.hpp"

using namespace symq;

namespace {

Quiver kronecker() { return Quiver("K", {1, 2}, {{"a", 1, 2}, {"b", 1, 2}}); }

Quiver d4_star() { return Quiver("D4", {1, 2, 3, 4, 5}, {{"a", 1, 5}, {"b", 2, 5}, {"c", 5, 3}, {"d", 5, 4}}); }

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("classification of underlying graphs") {
    auto a3 = validate_and_classify(Quiver("A3", {1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}}));
    CHECK(a3.type == GraphType::DynkinA);
    CHECK(a3.n == 3);
    auto c4 = validate_and_classify(Quiver("C4", {1, 2, 3, 4}, {{"a", 1, 2}, {"b", 3, 2}, {"c", 3, 4}, {"d", 1, 4}}));
    CHECK(c4.type == GraphType::EuclideanA);
    CHECK(c4.n == 3);
    auto k = validate_and_classify(kronecker());
    CHECK(k.type == GraphType::EuclideanA);
    CHECK(k.n == 1);
    CHECK(validate_and_classify(d4_star()).type == GraphType::EuclideanD);
    CHECK(validate_and_classify(test::fixture("d10_3.qv").quiver).to_string() == "EuclideanD(5)");
  }

  TEST_CASE("malformed quivers are rejected") {
    CHECK_THROWS_AS(Quiver("C", {1, 2}, {{"a", 1, 2}, {"b", 2, 1}}), Error);
    try {
      Quiver("C", {1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
      FAIL("expected a cycle error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CyclicQuiver);
    }
    CHECK_THROWS_AS(Quiver("D", {1, 1}, {}), Error);
    CHECK_THROWS_AS(Quiver("D", {1, 2}, {{"a", 1, 2}, {"a", 1, 2}}), Error);
    CHECK_THROWS_AS(Quiver("D", {1, 2}, {{"a", 1, 3}}), Error);
  }

  TEST_CASE("euler form") {
    Quiver a2("A2", {1, 2}, {{"a", 1, 2}});
    CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(a2, {1, 1}, {1, 1}) == 1);
    CHECK_THROWS_AS(euler_form(a2, {1}, {1, 1}), Error);
  }

  TEST_CASE("null roots and defect") {
    CHECK(null_root(kronecker()) == DimVec{1, 1});
    CHECK(null_root(test::fixture("a201_22.qv").quiver) == DimVec{1, 1, 1, 1, 1, 1});
    CHECK(null_root(test::fixture("d10_3.qv").quiver) == DimVec{1, 1, 2, 2, 1, 1});
    CHECK(null_root(d4_star()) == DimVec{1, 1, 1, 1, 2});
    CHECK_THROWS_AS(null_root(Quiver("A2", {1, 2}, {{"a", 1, 2}})), Error);
    CHECK(defect(kronecker(), {1, 2}) < 0);
    for (const char* f : {"a201_00.qv", "a201_22.qv", "a02_22.qv", "a11_02.qv", "a11_06.qv", "d10_3.qv"}) {
      const Quiver q = test::fixture(f).quiver;
      const DimVec h = null_root(q);
      CHECK(tits_form(q, h) == 0);
      CHECK(defect(q, h) == 0);
      for (std::size_t x = 0; x < q.num_vertices(); ++x) CHECK(tits_form(q, add(h, q.unit(x))) >= 0);
    }
  }

  TEST_CASE("Tits form is positive semidefinite on Euclidean quivers") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(0, 5);
    for (const char* f : {"a201_00.qv", "a201_22.qv", "a02_22.qv", "a11_06.qv", "d10_3.qv"}) {
      const Quiver q = test::fixture(f).quiver;
      for (int trial = 0; trial < 500; ++trial) {
        DimVec a(q.num_vertices());
        for (auto& x : a) x = d(rng);
        CHECK(tits_form(q, a) >= 0);
      }
    }
  }
}
