#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgv/field.hpp"
#include "qgv/matrix.hpp"

namespace qgv {

/// Vector (a | b) of F_q^{2n}, stored contiguously as a_1..a_n b_1..b_n.
class SympVector {
 public:
  explicit SympVector(std::size_t n) : n_(n), coords_(2 * n, 0) {}
  SympVector(std::span<const Element> a, std::span<const Element> b);
  /// coords has length 2n, a-part first.
  static SympVector from_coords(std::span<const Element> coords);

  std::size_t n() const { return n_; }
  std::span<const Element> a() const { return {coords_.data(), n_}; }
  std::span<const Element> b() const { return {coords_.data() + n_, n_}; }
  std::span<const Element> coords() const { return coords_; }
  std::span<Element> coords() { return coords_; }

  Element& a(std::size_t i) { return coords_[i]; }
  Element& b(std::size_t i) { return coords_[n_ + i]; }

  bool is_zero() const;

  friend bool operator==(const SympVector&, const SympVector&) = default;
  friend auto operator<=>(const SympVector&, const SympVector&) = default;

 private:
  std::size_t n_;
  std::vector<Element> coords_;
};

/// <(a|b), (a'|b')>_S = <a, b'> - <b, a'>. Both spans have length 2n.
Element symp_inner(const Field& f, std::span<const Element> u, std::span<const Element> v);
/// Throws InvalidArgument on mismatched lengths.
Element symp_inner(const Field& f, const SympVector& u, const SympVector& v);

/// Number of positions i with (a_i, b_i) != (0, 0).
std::size_t symp_weight(std::span<const Element> coords);
inline std::size_t symp_weight(const SympVector& u) { return symp_weight(u.coords()); }

std::size_t symp_distance(const Field& f, const SympVector& u, const SympVector& v);

/// Linear code in F_q^{2n}, held by its RREF generator matrix. Two codes are
/// equal exactly when they are the same subspace.
class SympCode {
 public:
  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return generators_.rows(); }
  const Matrix& generators() const { return generators_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  SympVector generator(std::size_t i) const { return SympVector::from_coords(generators_.row(i)); }

  bool contains(std::span<const Element> coords) const;
  bool contains(const SympVector& v) const { return contains(v.coords()); }

  friend bool operator==(const SympCode& a, const SympCode& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.generators_ == b.generators_;
  }

 private:
  friend SympCode code_from_rows(const Field&, std::size_t, const Matrix&);
  SympCode(Field f, std::size_t n, Matrix g, std::vector<std::size_t> pivots)
      : field_(std::move(f)), n_(n), generators_(std::move(g)), pivots_(std::move(pivots)) {}

  Field field_;
  std::size_t n_;
  Matrix generators_;
  std::vector<std::size_t> pivots_;
};

/// Canonical code spanned by the rows (each of length 2n, entries in [0, q)).
/// An empty matrix yields the zero code.
SympCode code_from_rows(const Field& f, std::size_t n, const Matrix& rows);
SympCode code_from_rows(const Field& f, std::size_t n, std::span<const SympVector> rows);

SympCode zero_code(const Field& f, std::size_t n);

/// Symplectic dual; dim C + dim C^{perp_S} = 2n.
SympCode symp_dual(const SympCode& code);

bool is_self_orthogonal(const SympCode& code);

/// Caps the number of codewords (q^k) traversed by exhaustive searches.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct MinWeight {
  std::size_t weight;
  /// First codeword of that weight in lexicographic coefficient order.
  SympVector witness;
};

/// Minimum symplectic weight over the nonzero codewords by exhaustive
/// traversal. Throws InvalidArgument for k = 0 and CapExceeded when q^k > cap.
/// The result does not depend on threads.
MinWeight min_symp_weight_witness(const SympCode& code, std::uint64_t cap = kDefaultEnumerationCap,
                                  unsigned threads = 1);
std::size_t min_symp_weight(const SympCode& code, std::uint64_t cap = kDefaultEnumerationCap,
                            unsigned threads = 1);

/// k + 2d <= 2n + 2.
bool singleton_check(std::size_t n, std::size_t k, std::size_t d);
inline bool singleton_check(const SympCode& code, std::size_t d) {
  return singleton_check(code.n(), code.k(), d);
}

/// q^e saturated at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e);

}  // namespace qgv
