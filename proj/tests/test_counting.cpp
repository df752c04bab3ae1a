#include "doctest.h"
#include "oracles.hpp"
#include "qgv/counting.hpp"
#include "qgv/errors.hpp"

using namespace qgv;

namespace {

constexpr auto P = CountVariant::paper;
constexpr auto R = CountVariant::projective;

BigInt brute_sphere(std::uint32_t q, std::size_t n, std::size_t d) {
  BigInt count = 0;
  for (std::uint64_t idx = 1; idx < oracle::ipow(q, 2 * n); ++idx) {
    if (oracle::weight(oracle::unpack_vec(idx, q, 2 * n)) < d) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("count_A examples") {
    CHECK(count_A(2, 2, 1, P) == 15);
    CHECK(count_A(2, 2, 2, P) == 15);
    CHECK(count_A(3, 2, 2, P) == 80);
    CHECK(count_A(3, 2, 2, R) == 40);
    CHECK_THROWS_AS(count_A(2, 2, 3, P), InvalidArgument);
    CHECK_THROWS_AS(count_A(2, 2, 0, P), InvalidArgument);
    CHECK_THROWS_AS(count_A(6, 2, 1, P), InvalidArgument);
  }

  TEST_CASE("count_B examples") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
      CHECK(count_B(q, 3, 1, P) == 1);
      CHECK(count_B(q, 3, 1, R) == 1);
    }
    CHECK(count_B(2, 2, 2, P) == 3);
    CHECK(count_B(3, 2, 2, P) == 8);
    CHECK(count_B(3, 2, 2, R) == 4);
  }

  TEST_CASE("count_E examples") {
    CHECK(count_E(2, 2, 1, P) == 7);
    CHECK(count_E(2, 2, 1, R) == 7);
    CHECK(count_E(2, 2, 2, P) == 3);
    CHECK(count_E(2, 2, 2, R) == 3);
    CHECK(count_E(3, 2, 2, R) == 4);
  }

  TEST_CASE("count_E_upper examples") {
    CHECK(count_E_upper(2, 2, 1, P) == 7);
    CHECK(count_E_upper(2, 2, 2, P) == Rational(14, 3));
    CHECK(count_E_upper(2, 2, 2, P) >= count_E(2, 2, 2, P));
    CHECK(count_E_upper(3, 2, 2, R) >= 4);
  }

  TEST_CASE("sphere volume against brute force") {
    CHECK(sphere_volume(2, 2, 2) == 6);
    CHECK(sphere_volume(3, 2, 3) == 80);
    CHECK(sphere_volume(5, 4, 1) == 0);
    CHECK_THROWS_AS(sphere_volume(2, 2, 0), InvalidArgument);
    for (std::uint32_t q : {2u, 3u, 4u})
      for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t d = 1; d <= n + 2; ++d) {
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(d);
          REQUIRE(sphere_volume(q, n, d) == brute_sphere(q, n, d));
        }
  }

  TEST_CASE("sphere volume is strictly increasing up to n+1 and fills the space") {
    for (std::uint64_t q : {2u, 3u, 5u, 7u})
      for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t d = 1; d <= n; ++d) REQUIRE(sphere_volume(q, n, d) < sphere_volume(q, n, d + 1));
        REQUIRE(sphere_volume(q, n, n + 1) == big_pow(q, 2 * n) - 1);
      }
  }

  TEST_CASE("variant bridge, ratio invariance, q = 2 agreement") {
    for (std::uint64_t q = 2; q <= 5; ++q)
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(k);
          const BigInt scale = big_pow(q - 1, k - 1);
          REQUIRE(count_A(q, n, k, P) == scale * count_A(q, n, k, R));
          REQUIRE(count_B(q, n, k, P) == scale * count_B(q, n, k, R));
          REQUIRE(count_E_upper(q, n, k, P) == Rational(scale) * count_E_upper(q, n, k, R));
          REQUIRE(count_E(q, n, k, P) == Rational(scale) * count_E(q, n, k, R));
          const Rational ratio(big_pow(q, 2 * n) - 1, big_pow(q, k) - 1);
          REQUIRE(Rational(count_A(q, n, k, P), count_B(q, n, k, P)) == ratio);
          REQUIRE(Rational(count_A(q, n, k, R), count_B(q, n, k, R)) == ratio);
          if (q == 2) {
            REQUIRE(count_A(q, n, k, P) == count_A(q, n, k, R));
            REQUIRE(count_E(q, n, k, P) == count_E(q, n, k, R));
          }
        }
  }

  TEST_CASE("E stays below its upper bound") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t k = 1; k <= n; ++k)
          for (auto v : {P, R}) {
            CAPTURE(q);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(count_E(q, n, k, v) <= count_E_upper(q, n, k, v));
          }
  }

  TEST_CASE("closed forms agree with brute-force spaces") {
    // q = 3 exercises the projective variant; q = 2 both.
    struct P3 {
      std::uint32_t p, m;
      std::size_t n, k;
    };
    for (auto c : {P3{2, 1, 2, 1}, P3{2, 1, 2, 2}, P3{2, 1, 3, 2}, P3{2, 1, 3, 3}, P3{3, 1, 2, 1}, P3{3, 1, 2, 2},
                   P3{2, 2, 2, 2}}) {
      oracle::RefField ref{c.p, c.m, c.m == 1 ? oracle::Vec{} : oracle::Vec{1, 1, 1}};
      const std::uint32_t q = ref.q();
      CAPTURE(q);
      CAPTURE(c.n);
      CAPTURE(c.k);
      const auto spaces = oracle::brute_so_spaces(ref, c.n, c.k);
      REQUIRE(BigInt(spaces.size()) == count_A(q, c.n, c.k, R));
      // u = e_1 and u = (1..1 | 1..1)
      for (const oracle::Vec& u : {[&] {
                                     oracle::Vec e(2 * c.n, 0);
                                     e[0] = 1;
                                     return e;
                                   }(),
                                   oracle::Vec(2 * c.n, 1)}) {
        std::size_t containing = 0, dual_containing = 0;
        for (const auto& words : spaces) {
          containing += std::binary_search(words.begin(), words.end(), u);
          bool orth = true;
          for (const auto& w : words) orth = orth && oracle::symp(ref, u, w) == 0;
          dual_containing += orth;
        }
        REQUIRE(BigInt(containing) == count_B(q, c.n, c.k, R));
        REQUIRE(Rational(dual_containing) == count_E(q, c.n, c.k, R));
      }
    }
  }

  TEST_CASE("ratio condition verdicts") {
    auto v = thm34_holds(2, 2, 1, 2);
    CHECK(v.lhs == 6);
    CHECK(v.rhs == 15);
    CHECK(v.holds);
    CHECK(format_verdict(v) == "LHS=6 RHS=15/1 HOLDS=true");
    v = thm34_holds(2, 2, 2, 2);
    CHECK(v.lhs == 6);
    CHECK(v.rhs == 5);
    CHECK_FALSE(v.holds);
    for (std::uint64_t q : {2u, 3u, 4u})
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
          CHECK(thm34_holds(q, n, k, 1).holds);
          CHECK(cor37_holds(q, n, k, 1).holds);
        }
    CHECK_THROWS_AS(thm34_holds(2, 2, 1, 0), InvalidArgument);
  }

  TEST_CASE("product condition verdicts") {
    auto v = cor37_holds(2, 10, 8, 2);
    CHECK(v.lhs == 30);
    CHECK(v.holds);
    // Exact product, evaluated independently with Python fractions: 45495529118559929784375 / 1391865932174282933432.
    CHECK(v.rhs == Rational(BigInt("45495529118559929784375"), BigInt("1391865932174282933432")));
    CHECK(v.rhs > 32);
    CHECK(v.rhs < 33);
    v = cor37_holds(2, 2, 1, 2);
    CHECK(v.lhs == 6);
    CHECK(v.rhs == Rational(15, 7));
    CHECK_FALSE(v.holds);
  }

  TEST_CASE("gv_max_d") {
    CHECK(gv_max_d(2, 2, 1, Condition::thm34) == 2);
    CHECK(gv_max_d(2, 10, 8, Condition::cor37) >= 2);
    CHECK(gv_max_d(2, 2, 2, Condition::thm34) == 1);
    for (std::uint64_t q : {2u, 3u})
      for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 1; k <= n; ++k)
          for (auto which : {Condition::thm34, Condition::cor37}) {
            const std::size_t best = gv_max_d(q, n, k, which);
            for (std::size_t d = 1; d <= n + 1; ++d) {
              const bool holds = which == Condition::thm34 ? thm34_holds(q, n, k, d).holds : cor37_holds(q, n, k, d).holds;
              REQUIRE(holds == (d <= best));
            }
          }
  }
}
