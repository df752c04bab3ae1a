#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// `paper` evaluates the printed closed forms, whose extension step counts
/// nonzero coset vectors. `projective` counts one-dimensional extensions
/// instead, i.e. divides each formula by (q-1)^(k-1); it is what exhaustive
/// enumeration produces. The two agree for q = 2.
enum class CountVariant { paper, projective };

enum class Condition { thm34, cor37, cor43 };

const char* to_string(CountVariant v);
const char* to_string(Condition c);

struct BoundVerdict {
  BigInt lhs;    // sphere volume V(2n, d)
  Rational rhs;
  bool holds;    // lhs < rhs
  std::uint64_t q;
  std::size_t n;
  std::size_t k;
  std::size_t d;
  Condition which;
};

/// "LHS=<int> RHS=<num>/<den> HOLDS=<true|false>"
std::string format_verdict(const BoundVerdict& v);

// All operations below require q to be a prime power and 1 <= k <= n
// (InvalidArgument otherwise). Integer-valued closed forms abort with
// InternalError if a division is not exact.

/// Number of symplectic self-orthogonal [2n, k] codes.
BigInt count_A(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant);

/// Number of those codes that contain a fixed nonzero vector.
BigInt count_B(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant);

/// Number of those codes whose symplectic dual contains a fixed nonzero
/// vector, from the two-term recursion seeded with (q^(2n-1) - 1)/(q - 1).
/// The paper variant passes through non-integral intermediate values.
Rational count_E(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant);

/// k (q-1)^(k-1) prod_{i<k} (q^(2n-2i-1) - 1) / prod_{i<k} (q^(k-i) - 1); not
/// necessarily integral. Requires only k >= 1.
Rational count_E_upper(std::uint64_t q, std::size_t n, std::size_t k, CountVariant variant);

/// Number of nonzero vectors of F_q^{2n} with symplectic weight < d:
/// sum_{i=1}^{d-1} C(n, i) (q^2 - 1)^i. Requires d >= 1.
BigInt sphere_volume(std::uint64_t q, std::size_t n, std::size_t d);

/// prod_{i<k} (q^(2n-2i) - 1) / (k prod_{i<k} (q^(2n-2i-1) - 1))
Rational cor37_rhs(std::uint64_t q, std::size_t n, std::size_t k);

/// V(2n, d) < (q^(2n) - 1)/(q^k - 1): a [2n, k, d] self-orthogonal code exists.
BoundVerdict thm34_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d);

/// V(2n, d) < cor37_rhs: a [2n, k] self-orthogonal code with dual distance >= d exists.
BoundVerdict cor37_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d);

/// Largest d >= 1 for which the condition holds, 0 if none. d ranges up to
/// n + 1, past which the sphere volume no longer grows.
std::size_t gv_max_d(std::uint64_t q, std::size_t n, std::size_t k, Condition which);

BigInt big_pow(std::uint64_t base, std::size_t e);
BigInt binomial(std::size_t n, std::size_t r);

}  // namespace qgv
