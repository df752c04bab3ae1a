#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgv/counting.hpp"
#include "qgv/symplectic.hpp"

namespace qgv {

/// [[n, logical, d]]_q with logical = n - k for a source [2n, k] code.
struct QuantumParams {
  std::size_t n;
  std::size_t logical;
  std::size_t d;
  std::uint64_t q;
};

/// "[[n,logical,d]]_q"
std::string format_params(const QuantumParams& p);

/// A self-orthogonal [2n, k] code gives [[n, n-k, d_S(C^{perp_S})]].
/// Throws InvalidArgument for codes that are not self-orthogonal or have
/// k = 2n, CapExceeded when the dual is too large to enumerate.
QuantumParams to_quantum_params(const SympCode& code, std::uint64_t cap = kDefaultEnumerationCap,
                                unsigned threads = 1);

/// One generalized-Pauli label per generator row. For q = 2 each position is
/// one of I, X, Z, Y; for q > 2 positions render as X<a>Z<b> (zero exponents
/// omitted, I when both vanish), separated by a middle dot.
std::vector<std::string> stabilizer_labels(const SympCode& code);
std::string stabilizer_label(const Field& f, const SympVector& row);

/// Inverse of stabilizer_label for a label on n qudits.
SympVector parse_stabilizer_label(const std::string& label, const Field& f, std::size_t n);

/// Same inequality as cor37_holds, labelled as the quantum [[n, n-k, d]] claim.
BoundVerdict cor43_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d);

/// q-ary entropy with 0 log 0 = 0. Throws InvalidArgument outside [0, 1].
double entropy_hq(std::uint64_t q, double x);

struct AsymptoticPoint {
  double delta;
  double rate;  // 1 - delta log_q(q+1) - H_q(delta), not clamped
};

AsymptoticPoint asymptotic_rate(std::uint64_t q, double delta);

/// Root of the asymptotic rate on (0, (q-1)/q) by bisection to 1e-10.
double delta_zero(std::uint64_t q);

struct FiniteRatePoint {
  std::size_t d;
  std::size_t k;
  double rate;  // (n - k) / n
};

/// d = floor(delta n) and the least k in 1..n with cor43_holds(q, n, k, d);
/// nullopt when no k qualifies. Requires 0 < delta < 1 and n >= 1/delta.
std::optional<FiniteRatePoint> finite_rate_point(std::uint64_t q, std::size_t n, double delta);

}  // namespace qgv
