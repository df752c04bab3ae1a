#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qgv {

/// Element of GF(q) encoded as an integer in [0, q): the base-p digits are the
/// coefficients of the residue polynomial, lowest degree first.
using Element = std::uint32_t;

/// The finite field GF(p^m). Immutable; copies share the precomputed tables.
///
/// For m > 1 the field is GF(p)[x] / (modulus), where modulus is monic and
/// irreducible of degree m. Construction validates both properties.
class Field {
 public:
  /// Throws InvalidArgument for a non-prime p, m < 1, a non-monic or reducible
  /// modulus, or m > 1 without a modulus and no built-in default.
  Field(std::uint32_t p, std::uint32_t m,
        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Factor q = p^m and build the field (default modulus when none is given).
  static Field of_order(std::uint32_t q,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c0..cm of the modulus, low degree first; empty when m = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  /// Throws DivisionByZero for x = 0.
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  Element pow(Element x, std::uint64_t e) const;

  bool contains(Element x) const { return x < q_; }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  Element add_slow(Element x, Element y) const;
  Element neg_slow(Element x) const;
  Element mul_slow(Element x, Element y) const;
  Element inv_slow(Element x) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);

/// Built-in modulus for a non-prime q in {4, 8, 9, 16, 25, 27, 32, 49, 64, 81}.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t q);

/// True when the monic polynomial (coefficients low degree first) has no
/// factor of degree 1..deg/2 over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace qgv
