#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgv/errors.hpp"
#include "qgv/search.hpp"
#include "qgv/symplectic.hpp"

using namespace qgv;

namespace {

SympVector vec(std::vector<Element> a, std::vector<Element> b) { return SympVector(a, b); }

SympVector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  SympVector v(n);
  for (auto& x : v.coords()) x = static_cast<Element>(rng() % f.q());
  return v;
}

SympCode code(const Field& f, std::size_t n, std::vector<SympVector> rows) {
  return code_from_rows(f, n, std::span<const SympVector>(rows));
}

}  // namespace

TEST_SUITE("symplectic") {
  TEST_CASE("inner product examples") {
    const Field f2(2, 1), f3(3, 1);
    CHECK(symp_inner(f2, vec({1, 0}, {0, 0}), vec({0, 0}, {1, 0})) == 1);
    CHECK(symp_inner(f3, vec({1}, {0}), vec({0}, {2})) == 2);
    CHECK(symp_inner(f3, vec({0}, {2}), vec({1}, {0})) == 1);
    CHECK_THROWS_AS(symp_inner(f2, vec({1}, {0}), vec({1, 0}, {0, 0})), InvalidArgument);
  }

  TEST_CASE("inner product matches the reference formula") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {3u, 4u, 9u}) {
      const Field f = Field::of_order(q);
      oracle::RefField ref{f.p(), f.m(), f.modulus()};
      for (int s = 0; s < 500; ++s) {
        auto u = random_vector(f, 4, rng), v = random_vector(f, 4, rng);
        oracle::Vec cu(u.coords().begin(), u.coords().end()), cv(v.coords().begin(), v.coords().end());
        REQUIRE(symp_inner(f, u, v) == oracle::symp(ref, cu, cv));
      }
    }
  }

  TEST_CASE("every vector is orthogonal to itself") {
    std::mt19937_64 rng(1);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      const Field f = Field::of_order(q);
      for (int s = 0; s < 25000; ++s) {
        const auto u = random_vector(f, 1 + rng() % 6, rng);
        REQUIRE(symp_inner(f, u, u) == 0);
      }
    }
  }

  TEST_CASE("antisymmetry and bilinearity") {
    std::mt19937_64 rng(2);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
      const Field f = Field::of_order(q);
      for (int s = 0; s < 2000; ++s) {
        const std::size_t n = 1 + rng() % 5;
        auto u = random_vector(f, n, rng), v = random_vector(f, n, rng), w = random_vector(f, n, rng);
        const Element lambda = rng() % q;
        REQUIRE(symp_inner(f, u, v) == f.neg(symp_inner(f, v, u)));
        SympVector combo(n);
        for (std::size_t i = 0; i < 2 * n; ++i)
          combo.coords()[i] = f.add(u.coords()[i], f.mul(lambda, w.coords()[i]));
        REQUIRE(symp_inner(f, combo, v) == f.add(symp_inner(f, u, v), f.mul(lambda, symp_inner(f, w, v))));
      }
    }
  }

  TEST_CASE("weight and distance") {
    const Field f2(2, 1), f5(5, 1);
    CHECK(symp_weight(vec({1, 0, 1}, {0, 1, 1})) == 3);
    CHECK(symp_weight(SympVector(4)) == 0);
    CHECK(symp_weight(vec({1, 1, 0}, {0, 0, 0})) == 2);
    std::mt19937_64 rng(3);
    for (int s = 0; s < 2000; ++s) {
      const std::size_t n = 1 + rng() % 6;
      auto u = random_vector(f5, n, rng), v = random_vector(f5, n, rng), w = random_vector(f5, n, rng);
      REQUIRE((symp_weight(u) == 0) == u.is_zero());
      REQUIRE(symp_distance(f5, u, w) <= symp_distance(f5, u, v) + symp_distance(f5, v, w));
      REQUIRE(symp_distance(f5, u, v) == symp_distance(f5, v, u));
    }
  }

  TEST_CASE("code_from_rows canonicalizes") {
    const Field f2(2, 1);
    auto c1 = code(f2, 2, {vec({1, 1}, {0, 0}), vec({1, 1}, {0, 0})});
    CHECK(c1.k() == 1);
    CHECK(c1.generator(0) == vec({1, 1}, {0, 0}));
    auto c2 = code(f2, 2, {vec({0, 0}, {1, 1}), vec({1, 1}, {0, 0})});
    CHECK(c2.k() == 2);
    CHECK(c2.pivots() == std::vector<std::size_t>{0, 2});
    CHECK(c2.generator(0) == vec({1, 1}, {0, 0}));
    CHECK(c2.generator(1) == vec({0, 0}, {1, 1}));
    auto c0 = code(f2, 2, {});
    CHECK(c0.k() == 0);
    Matrix bad(1, 4);
    bad(0, 0) = 2;
    CHECK_THROWS_AS(code_from_rows(f2, 2, bad), InvalidArgument);
    CHECK_THROWS_AS(code_from_rows(f2, 3, Matrix(1, 4)), InvalidArgument);
  }

  TEST_CASE("dual examples") {
    const Field f2(2, 1);
    auto c = code(f2, 2, {vec({1, 0}, {0, 0})});
    auto dual = symp_dual(c);
    CHECK(dual.k() == 3);
    // dual = {(x|y) : y1 = 0}
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
      auto coords = oracle::unpack_vec(idx, 2, 4);
      std::vector<Element> e(coords.begin(), coords.end());
      CHECK(dual.contains(e) == (e[2] == 0));
    }
    CHECK(symp_dual(zero_code(f2, 3)).k() == 6);
    auto lag = code(f2, 2, {vec({1, 1}, {0, 0}), vec({0, 0}, {1, 1})});
    CHECK(symp_dual(lag) == lag);
  }

  TEST_CASE("dual matches brute force and is an involution") {
    std::mt19937_64 rng(4);
    for (std::uint32_t q : {2u, 3u, 4u}) {
      const Field f = Field::of_order(q);
      oracle::RefField ref{f.p(), f.m(), f.modulus()};
      const std::size_t n = 2;
      for (int s = 0; s < 40; ++s) {
        std::vector<SympVector> rows;
        const std::size_t r = rng() % 5;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(f, n, rng));
        auto c = code(f, n, rows);
        auto dual = symp_dual(c);
        REQUIRE(c.k() + dual.k() == 2 * n);
        REQUIRE(symp_dual(dual) == c);
        std::size_t members = 0;
        for (std::uint64_t idx = 0; idx < oracle::ipow(q, 2 * n); ++idx) {
          auto x = oracle::unpack_vec(idx, q, 2 * n);
          bool orth = true;
          for (std::size_t g = 0; g < c.k(); ++g) {
            auto row = c.generators().row(g);
            orth = orth && oracle::symp(ref, x, oracle::Vec(row.begin(), row.end())) == 0;
          }
          std::vector<Element> e(x.begin(), x.end());
          REQUIRE(dual.contains(e) == orth);
          members += orth;
        }
        REQUIRE(members == oracle::ipow(q, dual.k()));
      }
    }
  }

  TEST_CASE("self-orthogonality") {
    const Field f2(2, 1);
    CHECK(is_self_orthogonal(code(f2, 2, {vec({1, 0}, {0, 0}), vec({0, 1}, {0, 0})})));
    CHECK_FALSE(is_self_orthogonal(code(f2, 2, {vec({1, 0}, {0, 0}), vec({0, 0}, {1, 0})})));
    CHECK(is_self_orthogonal(zero_code(f2, 2)));
  }

  TEST_CASE("minimum weight") {
    const Field f2(2, 1);
    CHECK(min_symp_weight(code(f2, 2, {vec({1, 1}, {0, 0}), vec({0, 0}, {1, 1})})) == 2);
    CHECK(min_symp_weight(code(f2, 2, {vec({1, 0}, {0, 0})})) == 1);
    CHECK_THROWS_AS(min_symp_weight(zero_code(f2, 2)), InvalidArgument);
    // k = 30 over F_2 exceeds 2^24 codewords
    std::vector<SympVector> rows;
    for (std::size_t i = 0; i < 30; ++i) {
      SympVector e(15);
      e.coords()[i] = 1;
      rows.push_back(e);
    }
    CHECK_THROWS_AS(min_symp_weight(code(f2, 15, rows), std::uint64_t{1} << 24), CapExceeded);
  }

  TEST_CASE("minimum weight matches brute force and ignores thread count") {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 4u}) {
      const Field f = Field::of_order(q);
      oracle::RefField ref{f.p(), f.m(), f.modulus()};
      for (int s = 0; s < 30; ++s) {
        const std::size_t n = 3 + rng() % 2;
        std::vector<SympVector> rows;
        const std::size_t r = 1 + rng() % 4;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(f, n, rng));
        auto c = code(f, n, rows);
        if (c.k() == 0) continue;
        std::vector<oracle::Vec> gens;
        for (std::size_t g = 0; g < c.k(); ++g) {
          auto row = c.generators().row(g);
          gens.emplace_back(row.begin(), row.end());
        }
        std::size_t expected = 2 * n;
        for (const auto& w : oracle::span_of(ref, gens, 2 * n)) {
          if (oracle::weight(w) > 0) expected = std::min(expected, oracle::weight(w));
        }
        const auto one = min_symp_weight_witness(c, kDefaultEnumerationCap, 1);
        const auto four = min_symp_weight_witness(c, kDefaultEnumerationCap, 4);
        REQUIRE(one.weight == expected);
        REQUIRE(four.weight == expected);
        REQUIRE(one.witness == four.witness);
        REQUIRE(c.contains(one.witness));
        REQUIRE(symp_weight(one.witness) == expected);
      }
    }
  }

  TEST_CASE("Singleton check") {
    CHECK(singleton_check(2, 2, 2));
    CHECK_FALSE(singleton_check(2, 2, 3));
    CHECK(singleton_check(2, 1, 1));
  }

  TEST_CASE("dual involution and dimension identity on 1000 random codes") {
    std::mt19937_64 rng(6);
    for (int s = 0; s < 1000; ++s) {
      const Field f = Field::of_order(std::vector<std::uint32_t>{2, 3, 4, 5, 7}[s % 5]);
      const std::size_t n = 1 + rng() % 5;
      std::vector<SympVector> rows;
      const std::size_t r = rng() % (2 * n + 1);
      for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(f, n, rng));
      auto c = code(f, n, rows);
      auto d = symp_dual(c);
      REQUIRE(c.k() + d.k() == 2 * n);
      REQUIRE(symp_dual(d) == c);
    }
  }
}
