#include "qgv/quantum.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qgv/errors.hpp"

namespace qgv {

namespace {

constexpr std::string_view kSeparator = "\xC2\xB7";  // U+00B7

void require_self_orthogonal(const SympCode& code) {
  if (!is_self_orthogonal(code)) throw InvalidArgument("code is not symplectic self-orthogonal");
}

Element parse_exponent(std::string_view s, const Field& f, const std::string& label) {
  Element v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0 || !f.contains(v)) {
    throw ParseError("bad exponent in stabilizer label '" + label + "'");
  }
  return v;
}

}  // namespace

std::string format_params(const QuantumParams& p) {
  std::ostringstream os;
  os << "[[" << p.n << "," << p.logical << "," << p.d << "]]_" << p.q;
  return os.str();
}

QuantumParams to_quantum_params(const SympCode& code, std::uint64_t cap, unsigned threads) {
  require_self_orthogonal(code);
  const SympCode dual = symp_dual(code);
  if (dual.k() == 0) throw InvalidArgument("dual code is zero; distance undefined");
  return {code.n(), code.n() - code.k(), min_symp_weight(dual, cap, threads), code.field().q()};
}

std::string stabilizer_label(const Field& f, const SympVector& row) {
  std::string out;
  for (std::size_t i = 0; i < row.n(); ++i) {
    const Element a = row.a()[i], b = row.b()[i];
    if (f.q() == 2) {
      out += "IXZY"[a + 2 * b];
      continue;
    }
    if (i) out += kSeparator;
    if (a == 0 && b == 0) {
      out += "I";
      continue;
    }
    if (a != 0) out += "X" + std::to_string(a);
    if (b != 0) out += "Z" + std::to_string(b);
  }
  return out;
}

std::vector<std::string> stabilizer_labels(const SympCode& code) {
  require_self_orthogonal(code);
  std::vector<std::string> out;
  for (std::size_t r = 0; r < code.k(); ++r) out.push_back(stabilizer_label(code.field(), code.generator(r)));
  return out;
}

SympVector parse_stabilizer_label(const std::string& label, const Field& f, std::size_t n) {
  SympVector v(n);
  if (f.q() == 2) {
    if (label.size() != n) throw ParseError("stabilizer label '" + label + "' does not have n symbols");
    for (std::size_t i = 0; i < n; ++i) {
      switch (label[i]) {
        case 'I': break;
        case 'X': v.a(i) = 1; break;
        case 'Z': v.b(i) = 1; break;
        case 'Y': v.a(i) = 1; v.b(i) = 1; break;
        default: throw ParseError("unknown Pauli symbol in '" + label + "'");
      }
    }
    return v;
  }
  std::vector<std::string_view> parts;
  std::string_view rest = label;
  while (true) {
    const auto pos = rest.find(kSeparator);
    parts.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + kSeparator.size());
  }
  if (parts.size() != n) throw ParseError("stabilizer label '" + label + "' does not have n positions");
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view s = parts[i];
    if (s == "I") continue;
    if (!s.empty() && s.front() == 'X') {
      const auto z = s.find('Z');
      v.a(i) = parse_exponent(s.substr(1, z == std::string_view::npos ? s.npos : z - 1), f, label);
      s = z == std::string_view::npos ? std::string_view{} : s.substr(z);
    }
    if (!s.empty()) {
      if (s.front() != 'Z') throw ParseError("malformed position in stabilizer label '" + label + "'");
      v.b(i) = parse_exponent(s.substr(1), f, label);
    }
    if (v.a(i) == 0 && v.b(i) == 0) throw ParseError("empty position in stabilizer label '" + label + "'");
  }
  return v;
}

BoundVerdict cor43_holds(std::uint64_t q, std::size_t n, std::size_t k, std::size_t d) {
  BoundVerdict v = cor37_holds(q, n, k, d);
  v.which = Condition::cor43;
  return v;
}

double entropy_hq(std::uint64_t q, double x) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("entropy argument outside [0, 1]");
  const double lq = std::log(static_cast<double>(q));
  auto xlogx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
  return (x * std::log(static_cast<double>(q - 1)) - xlogx(x) - xlogx(1.0 - x)) / lq;
}

AsymptoticPoint asymptotic_rate(std::uint64_t q, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("delta outside [0, 1]");
  const double qd = static_cast<double>(q);
  return {delta, 1.0 - delta * std::log(qd + 1.0) / std::log(qd) - entropy_hq(q, delta)};
}

double delta_zero(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
  double lo = 0.0, hi = static_cast<double>(q - 1) / static_cast<double>(q);
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (asymptotic_rate(q, mid).rate > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<FiniteRatePoint> finite_rate_point(std::uint64_t q, std::size_t n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  if (n < 1 || static_cast<double>(n) * delta < 1.0) throw InvalidArgument("need n >= 1/delta");
  // The nudge keeps products such as 0.7 * 10 from flooring to 6.
  const auto d = static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
  const BigInt lhs = sphere_volume(q, n, d);
  // Running products of the right-hand side, compared by cross-multiplication.
  BigInt num = 1, den = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    num *= big_pow(q, 2 * n - 2 * (k - 1)) - 1;
    den *= big_pow(q, 2 * n - 2 * (k - 1) - 1) - 1;
    if (lhs * den * k < num) {
      return FiniteRatePoint{d, k, static_cast<double>(n - k) / static_cast<double>(n)};
    }
  }
  return std::nullopt;
}

}  // namespace qgv
