#include <cmath>

#include "doctest.h"
#include "qgv/errors.hpp"
#include "qgv/quantum.hpp"
#include "qgv/search.hpp"

using namespace qgv;
using doctest::Approx;

namespace {

SympCode code(const Field& f, std::size_t n, std::vector<std::vector<Element>> rows) {
  Matrix m(0, 2 * n);
  for (const auto& r : rows) m.append_row(r);
  return code_from_rows(f, n, m);
}

}  // namespace

TEST_SUITE("quantum") {
  TEST_CASE("quantum parameters") {
    const Field f2(2, 1);
    auto lag = code(f2, 2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto p = to_quantum_params(lag);
    CHECK(p.n == 2);
    CHECK(p.logical == 0);
    CHECK(p.d == 2);
    CHECK(format_params(p) == "[[2,0,2]]_2");
    auto line = code(f2, 2, {{1, 1, 0, 0}});
    CHECK(to_quantum_params(line).d == 1);
    CHECK(to_quantum_params(line).logical == 1);
    CHECK_THROWS_AS(to_quantum_params(code(f2, 2, {{1, 0, 0, 0}, {0, 0, 1, 0}})), InvalidArgument);
  }

  TEST_CASE("stabilizer labels") {
    const Field f2(2, 1), f3(3, 1);
    CHECK(stabilizer_label(f2, SympVector(std::vector<Element>{1, 1}, std::vector<Element>{0, 1})) == "XY");
    CHECK(stabilizer_label(f2, SympVector(2)) == "II");
    CHECK(stabilizer_label(f3, SympVector(std::vector<Element>{1, 0}, std::vector<Element>{2, 2})) ==
          "X1Z2\xC2\xB7Z2");
    CHECK(stabilizer_label(f3, SympVector(std::vector<Element>{0, 2}, std::vector<Element>{0, 0})) ==
          "I\xC2\xB7X2");
    CHECK(stabilizer_labels(code(f2, 2, {{1, 1, 0, 0}, {0, 0, 1, 1}})) == std::vector<std::string>{"XX", "ZZ"});
    CHECK_THROWS_AS(stabilizer_labels(code(f2, 2, {{1, 0, 0, 0}, {0, 0, 1, 0}})), InvalidArgument);
  }

  TEST_CASE("label round trip, exhaustive over qubit positions") {
    const Field f2(2, 1);
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
      SympVector v(4);
      for (std::size_t i = 0; i < 4; ++i) {
        v.a(i) = (idx >> (2 * i)) & 1;
        v.b(i) = (idx >> (2 * i + 1)) & 1;
      }
      REQUIRE(parse_stabilizer_label(stabilizer_label(f2, v), f2, 4) == v);
    }
    for (std::uint32_t q : {3u, 4u, 5u}) {
      const Field f = Field::of_order(q);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto c = random_so_code(f, 3, 2, rng);
        for (std::size_t r = 0; r < c.k(); ++r) {
          REQUIRE(parse_stabilizer_label(stabilizer_label(f, c.generator(r)), f, 3) == c.generator(r));
        }
      }
    }
    CHECK_THROWS_AS(parse_stabilizer_label("XQ", f2, 2), ParseError);
    CHECK_THROWS_AS(parse_stabilizer_label("X", f2, 2), ParseError);
    CHECK_THROWS_AS(parse_stabilizer_label("X3", Field(3, 1), 1), ParseError);
  }

  TEST_CASE("stabilizers of a witness commute symplectically") {
    const Field f3(3, 1);
    SearchConfig cfg{.n = 4, .k = 2, .d = 2, .trials = 200, .seed = 1, .mode = DistanceMode::dual};
    auto out = search_witness(f3, cfg);
    REQUIRE(out.found);
    const auto labels = stabilizer_labels(*out.found);
    for (const auto& a : labels)
      for (const auto& b : labels)
        REQUIRE(symp_inner(f3, parse_stabilizer_label(a, f3, 4), parse_stabilizer_label(b, f3, 4)) == 0);
    auto p = to_quantum_params(*out.found);
    CHECK(p.logical == 2);
    CHECK(p.d == *out.certified_distance);
  }

  TEST_CASE("quantum verdicts mirror the classical ones") {
    auto v = cor43_holds(2, 10, 8, 2);
    CHECK(v.holds);
    CHECK(v.which == Condition::cor43);
    CHECK_FALSE(cor43_holds(2, 2, 1, 2).holds);
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
      for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 1; k <= n; ++k)
          for (std::size_t d = 1; d <= n + 1; ++d) {
            const auto a = cor43_holds(q, n, k, d), b = cor37_holds(q, n, k, d);
            REQUIRE(a.holds == b.holds);
            REQUIRE(a.lhs == b.lhs);
            REQUIRE(a.rhs == b.rhs);
          }
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t k = 1; k <= n; ++k) CHECK(cor43_holds(3, n, k, 1).holds);
  }

  TEST_CASE("entropy") {
    CHECK(entropy_hq(2, 0.5) == Approx(1.0).epsilon(1e-15));
    CHECK(entropy_hq(3, 0.0) == 0.0);
    CHECK(entropy_hq(2, 1.0) == 0.0);
    CHECK(entropy_hq(4, 1.0) == Approx(std::log(3.0) / std::log(4.0)));
    CHECK(std::abs(entropy_hq(2, 0.1) - 0.468996) < 1e-6);
    CHECK_THROWS_AS(entropy_hq(2, 1.5), InvalidArgument);
    CHECK_THROWS_AS(entropy_hq(2, -0.1), InvalidArgument);
  }

  TEST_CASE("entropy is concave with maximum 1 at (q-1)/q") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
      const double peak = static_cast<double>(q - 1) / static_cast<double>(q);
      CHECK(std::abs(entropy_hq(q, peak) - 1.0) < 1e-12);
      const int grid = 1000;
      for (int i = 1; i < grid; ++i) {
        const double x0 = (i - 1) / double(grid), x1 = i / double(grid), x2 = (i + 1) / double(grid);
        REQUIRE(entropy_hq(q, x1) >= 0.5 * (entropy_hq(q, x0) + entropy_hq(q, x2)) - 1e-12);
        REQUIRE(entropy_hq(q, x1) <= 1.0 + 1e-12);
      }
    }
  }

  TEST_CASE("asymptotic rate") {
    CHECK(asymptotic_rate(2, 0.0).rate == 1.0);
    CHECK(std::abs(asymptotic_rate(2, 0.1).rate - 0.372508) < 1e-5);
    CHECK(asymptotic_rate(2, 0.5).rate < 0.0);
    CHECK(std::abs(asymptotic_rate(2, 0.5).rate - (1.0 - 0.5 * std::log2(3.0) - 1.0)) < 1e-12);
    CHECK_THROWS_AS(asymptotic_rate(2, 1.2), InvalidArgument);
  }

  TEST_CASE("zero crossing") {
    const double z = delta_zero(2);
    CHECK(std::abs(z - 0.18929) < 1e-3);
    CHECK(asymptotic_rate(2, 0.185).rate > 0.0);
    CHECK(asymptotic_rate(2, 0.1893).rate < 0.0);
    double prev = 0.0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
      const double zq = delta_zero(q);
      CHECK(zq > prev);
      CHECK(std::abs(asymptotic_rate(q, zq).rate) < 1e-8);
      prev = zq;
    }
  }

  TEST_CASE("finite rate points") {
    auto p = finite_rate_point(2, 10, 0.2);
    REQUIRE(p);
    CHECK(p->d == 2);
    CHECK(p->k == 8);
    CHECK(p->rate == Approx(0.2));
    CHECK_FALSE(finite_rate_point(2, 5, 0.9).has_value());
    auto far = finite_rate_point(2, 200, 0.1);
    REQUIRE(far);
    CHECK(std::abs(far->rate - asymptotic_rate(2, 0.1).rate) < 0.05);
    CHECK_THROWS_AS(finite_rate_point(2, 5, 0.1), InvalidArgument);
    CHECK_THROWS_AS(finite_rate_point(2, 5, 0.0), InvalidArgument);
  }

  TEST_CASE("finite rates approach the asymptotic rate") {
    const double target = asymptotic_rate(2, 0.1).rate;
    double prev_gap = 1.0;
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
      auto p = finite_rate_point(2, n, 0.1);
      REQUIRE(p);
      const double gap = std::abs(p->rate - target);
      CHECK(gap <= prev_gap + 1.0 / static_cast<double>(n));
      prev_gap = gap;
    }
    CHECK(prev_gap < 0.01);
  }
}
