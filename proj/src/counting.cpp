#include "qgv/counting.hpp"

#include <sstream>

#include "qgv/errors.hpp"

namespace qgv {

namespace {

void check_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw InvalidArgument("q=" + std::to_string(q) + " is not a prime power");
}

void check_range(std::uint64_t q, std::size_t n, std::size_t k) {
  check_q(q);
  if (k < 1 || k > n) {
    throw InvalidArgument("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw InternalError(std::string("non-exact division in ") + what);
  return quot;
}

// q^e - 1
BigInt qm1(std::uint64_t q, std::size_t e) { return big_pow(q, e) - 1; }

BigInt variant_scale(std::uint64_t q, std::size_t k, CountVariant variant) {
  return variant == CountVariant::paper ? big_pow(q - 1, k - 1) : BigInt(1);
}

BoundVerdict make_verdict(BigInt lhs, Rational rhs, std::uint64_t q, std::size_t n, std::size_t k,
                          std::size_t d, Condition which) {
  const bool holds = Rational(lhs) < rhs;
  return {std::move(lhs), std::move(rhs), holds, q, n, k, d, which};
}

}  // namespace

const char* to_string(CountVariant v) { return v == CountVariant::paper ? "paper" : "projective"; }

const char* to_string(Condition c) {
  switch (c) {
    case Condition::thm34: return "thm34";
    case Condition::cor37: return "cor37";
    case Condition::cor43: return "cor43";
  }
  return "?";
}

std::string format_verdict(const BoundVerdict& v) {
  std::ostringstream os;
  os << "LHS=" << v.lhs << " RHS=" << numerator(v.rhs) << "/" << denominator(v.rhs)
     << " HOLDS=" << (v.holds ? "true" : "false");
  return os.str();
}

BigInt big_pow(std::uint64_t base, std::size_t e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

BigInt count_A(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant) {
  check_range(q, n, k);
  BigInt num = variant_scale(q, k, variant), den = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    num *= qm1(q, 2 * n - 2 * k + 2 * i);
    den *= qm1(q, i);
  }
  return exact_div(num, den, "count_A");
}

BigInt count_B(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant) {
  check_range(q, n, k);
  BigInt num = variant_scale(q, k, variant), den = 1;
  for (std::size_t i = 1; i < k; ++i) {
    num *= qm1(q, 2 * n - 2 * k + 2 * i);
    den *= qm1(q, i);
  }
  return exact_div(num, den, "count_B");
}

Rational count_E(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant) {
  check_range(q, n, k);
  const BigInt qq = q;
  Rational e(qm1(q, 2 * n - 1), qq - 1);
  for (std::size_t j = 2; j <= k; ++j) {
    const BigInt b_prev = count_B(q, n, j - 1, variant);
    const BigInt top = big_pow(q, 2 * n - 2 * j + 1);
    const BigInt den = qm1(q, j);
    if (variant == CountVariant::paper) {
      e = Rational((qq - 1) * (top - 1), den) * e + Rational((qq - 1) * (qq - 1) * top * b_prev, den);
    } else {
      e = (Rational(top - 1) * e + Rational((qq - 1) * top * b_prev)) / Rational(den);
    }
  }
  return e;
}

Rational count_E_upper(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant) {
  check_q(q);
  if (k < 1 || k > n) throw InvalidArgument("count_E_upper needs 1 <= k <= n");
  BigInt num = BigInt(k) * variant_scale(q, k, variant), den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= qm1(q, 2 * n - 2 * i - 1);
    den *= qm1(q, k - i);
  }
  return Rational(num, den);
}

BigInt sphere_volume(std::uint64_t q, std::size_t n, std::size_t d) {
  check_q(q);
  if (d < 1) throw InvalidArgument("sphere volume needs d >= 1");
  BigInt v = 0;
  const BigInt unit = BigInt(q) * q - 1;
  BigInt unit_pow = 1;
  for (std::size_t i = 1; i + 1 <= d && i <= n; ++i) {
    unit_pow *= unit;
    v += binomial(n, i) * unit_pow;
  }
  return v;
}

Rational cor37_rhs(std::uint64_t q, std::size_t n, std::size_t k) {
  check_range(q, n, k);
  BigInt num = 1, den = k;
  for (std::size_t i = 0; i < k; ++i) {
    num *= qm1(q, 2 * n - 2 * i);
    den *= qm1(q, 2 * n - 2 * i - 1);
  }
  return Rational(num, den);
}

BoundVerdict thm34_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d) {
  check_range(q, n, k);
  if (d < 1) throw InvalidArgument("d must be at least 1");
  Rational rhs(qm1(q, 2 * n), qm1(q, k));
  return make_verdict(sphere_volume(q, n, d), std::move(rhs), q, n, k, d, Condition::thm34);
}

BoundVerdict cor37_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d) {
  check_range(q, n, k);
  if (d < 1) throw InvalidArgument("d must be at least 1");
  return make_verdict(sphere_volume(q, n, d), cor37_rhs(q, n, k), q, n, k, d, Condition::cor37);
}

std::size_t gv_max_d(std::uint64_t q, std::size_t n, std::size_t k, Condition which) {
  check_range(q, n, k);
  const Rational rhs = which == Condition::thm34 ? Rational(qm1(q, 2 * n), qm1(q, k)) : cor37_rhs(q, n, k);
  std::size_t best = 0;
  for (std::size_t d = 1; d <= n + 1; ++d) {
    if (!(Rational(sphere_volume(q, n, d)) < rhs)) break;
    best = d;
  }
  return best;
}

}  // namespace qgv
