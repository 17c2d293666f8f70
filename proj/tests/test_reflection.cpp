#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symq/error.hpp"
#include "symq/reflection.hpp"
#include "symq/semiinvariant.hpp"

using namespace symq;

namespace {

DimVec random_symmetric(std::mt19937_64& rng, const SymmetricQuiver& sq, int hi = 4) {
  std::uniform_int_distribution<int> d(0, hi);
  DimVec a(sq.quiver().num_vertices());
  for (std::size_t x = 0; x < a.size(); ++x)
    if (sq.vertex_side(x) != Side::Minus) a[x] = d(rng);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (sq.vertex_side(x) == Side::Minus) a[x] = a[sq.sigma_vertex(x)];
  return a;
}

bool isomorphic_indecomposables(const Representation& a, const Representation& b) {
  return a.dim == b.dim && dvw_and_homext(a, b).hom_dim == 1 && dvw_and_homext(b, a).hom_dim == 1;
}

}  // namespace

TEST_SUITE("reflection") {
  TEST_CASE("reflect_dim examples") {
    Quiver a2("A2", {1, 2}, {{"a", 1, 2}});
    auto r = reflect_dim(a2, 1, {1, 1});
    CHECK(r.dim == DimVec{1, 0});
    CHECK(r.quiver.is_source(1));
    CHECK(reflect_dim(r.quiver, 1, r.dim).dim == DimVec{1, 1});
    CHECK_THROWS_AS(reflect_dim(test::fixture("a4_eq.qv").quiver, 1, {1, 1, 1, 1}), Error);

    const Quiver d = test::fixture("d10_3.qv").quiver;
    const DimVec h = null_root(d);
    CHECK(reflect_dim(d, d.vertex_index(1), h).dim == h);
  }

  TEST_CASE("paired reflections keep dimension vectors symmetric") {
    std::mt19937_64 rng(41);
    for (const char* f : {"a4_eq.qv", "a5_eq.qv", "a201_22.qv", "a02_22.qv", "a11_06.qv", "d10_3.qv"}) {
      auto sq = test::fixture(f).symmetric();
      for (auto x : admissible_sinks(sq))
        for (int trial = 0; trial < 20; ++trial) {
          DimVec a = random_symmetric(rng, sq);
          DimVec b = reflect_pair_dim(sq, x, a);
          CHECK(is_symmetric(sq.reflected_pair(x), b));
        }
    }
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    CHECK_THROWS_AS(reflect_pair_dim(a4, 1, {1, 1, 1, 1}), Error);
    CHECK(reflect_pair_dim(a4, 3, {1, 1, 1, 1}) == DimVec{0, 1, 1, 0});
  }

  TEST_CASE("reflect_weight") {
    auto a5 = test::fixture("a5_eq.qv").symmetric();
    CHECK(reflect_weight(a5, 4, RationalVector(5, 0)) == RationalVector(5, 0));
    CHECK_THROWS_AS(reflect_weight(a5, 4, RationalVector{0, 0, 1, 0, 0}), Error);
    RationalVector chi{0, 0, 0, 0, 1};
    auto r = reflect_weight(a5, 4, chi);
    CHECK(r[4] == -1);
    CHECK(r[3] == 1);

    std::mt19937_64 rng(42);
    for (const char* f : {"a4_eq.qv", "a5_eq.qv", "a201_22.qv", "a11_06.qv", "d10_3.qv"}) {
      auto sq = test::fixture(f).symmetric();
      for (auto x : admissible_sinks(sq))
        for (int trial = 0; trial < 100; ++trial) {
          DimVec a = random_symmetric(rng, sq);
          for (Flavor fl : {Flavor::Symplectic, Flavor::Orthogonal}) {
            auto lhs = reflect_weight(sq, x, weight_of_cV(sq, a, fl));
            auto rhs = weight_of_cV(sq.reflected_pair(x), reflect_pair_dim(sq, x, a), fl);
            CHECK(lhs == rhs);
          }
        }
    }
  }

  TEST_CASE("reflection functors on interval modules") {
    for (int n = 2; n <= 6; ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = j; i <= n; ++i) {
          auto v = interval_module(n, j, i);
          const std::size_t sink = static_cast<std::size_t>(n - 1);
          auto c = reflect_rep(sink, Direction::Plus, v);
          if (j == n) {
            CHECK(is_zero(c.dim));
            continue;
          }
          CHECK(c.dim == reflect_dim(v.quiver, sink, v.dim).dim);
          auto back = reflect_rep(sink, Direction::Minus, c);
          CHECK(isomorphic_indecomposables(back, v));
        }
    CHECK_THROWS_AS(reflect_rep(0, Direction::Plus, interval_module(3, 1, 2)), Error);
  }

  TEST_CASE("reflection functors are additive") {
    auto v1 = interval_module(4, 1, 3), v2 = interval_module(4, 2, 4);
    auto s = reflect_rep(3, Direction::Plus, direct_sum(v1, v2));
    CHECK(s.dim == add(reflect_rep(3, Direction::Plus, v1).dim, reflect_rep(3, Direction::Plus, v2).dim));
  }

  TEST_CASE("coxeter transformations") {
    for (const char* f : {"a201_00.qv", "a201_22.qv", "a02_22.qv", "a11_06.qv", "d10_3.qv"}) {
      const Quiver q = test::fixture(f).quiver;
      const DimVec h = null_root(q);
      CHECK(coxeter_dim(q, h, Direction::Plus) == h);
      CHECK(coxeter_dim(q, h, Direction::Minus) == h);
      CHECK(coxeter_dim(q, q.zero_dim(), Direction::Plus) == q.zero_dim());
    }
    auto a4 = test::fixture("a4_eq.qv").symmetric();
    CHECK(coxeter_dim(a4.quiver(), delta(a4, {1, 1, 0, 0}), Direction::Minus) == DimVec{0, 1, 1, 0});
    auto v = interval_module(4, 1, 2);
    auto tv = coxeter_rep(v, Direction::Plus);
    CHECK(tv.dim == coxeter_dim(v.quiver, v.dim, Direction::Plus));
  }

  TEST_CASE("duality") {
    std::mt19937_64 rng(43);
    for (const char* f : {"a4_eq.qv", "a5_eq.qv", "a201_22.qv", "d10_3.qv"}) {
      auto sq = test::fixture(f).symmetric();
      for (Flavor fl : {Flavor::Symplectic, Flavor::Orthogonal}) {
        DimVec a = scale(2, random_symmetric(rng, sq, 2));
        auto full = random_structured(sq, fl, a, 7).full();
        if (fl == Flavor::Orthogonal) CHECK(dual_rep(sq, full) == full);
        CHECK(dual_rep(sq, dual_rep(sq, full)) == full);
      }
      DimVec b(sq.quiver().num_vertices());
      for (auto& x : b) x = static_cast<std::int64_t>(rng() % 3);
      auto v = random_representation(sq.quiver(), b, 9);
      auto w = random_representation(sq.quiver(), b, 10);
      CHECK(dual_rep(sq, v).dim == delta(sq, v.dim));
      CHECK(dual_rep(sq, direct_sum(v, w)) == direct_sum(dual_rep(sq, v), dual_rep(sq, w)));
    }
  }

  TEST_CASE("paired reflection commutes with duality") {
    auto sq = test::fixture("a5_eq.qv").symmetric();
    const std::size_t x = 4, sx = sq.sigma_vertex(x);
    for (int j = 1; j <= 5; ++j)
      for (int i = j; i <= 5; ++i) {
        auto v = interval_module(5, j, i);
        v.quiver = sq.quiver();
        auto pair = [&](const Representation& r) {
          auto c = reflect_rep(x, Direction::Plus, r);
          return reflect_rep(sx, Direction::Minus, c);
        };
        auto lhs = dual_rep(sq.reflected_pair(x), pair(v));
        auto rhs = pair(dual_rep(sq, v));
        CHECK(lhs.dim == rhs.dim);
        if (!is_zero(lhs.dim)) CHECK(isomorphic_indecomposables(lhs, rhs));
      }
  }

  TEST_CASE("structured representations stay structured under paired reflections") {
    std::mt19937_64 rng(44);
    for (const char* f : {"a4_eq.qv", "a5_eq.qv", "a201_22.qv", "a11_06.qv", "d10_3.qv"}) {
      auto sq = test::fixture(f).symmetric();
      for (auto x : admissible_sinks(sq))
        for (Flavor fl : {Flavor::Symplectic, Flavor::Orthogonal})
          for (int trial = 0; trial < 5; ++trial) {
            DimVec a = scale(2, random_symmetric(rng, sq, 2));
            auto sr = random_structured(sq, fl, a, 100 + static_cast<std::uint64_t>(trial));
            auto r = reflect_pair_structured(sr, x);
            CHECK_NOTHROW(check_structured(r));
            CHECK(r.flavor == fl);
            CHECK(r.sq == sq.reflected_pair(x));
          }
    }
  }
}
