#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgv/field.hpp"

namespace qgv {

/// Dense row-major matrix of field elements. Arithmetic goes through free
/// functions taking the Field, since the element encoding alone does not
/// determine the field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values);
  /// Keep the first n rows.
  void truncate(std::size_t n);

  const std::vector<Element>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// In-place reduction to reduced row echelon form; zero rows are dropped.
/// Returns the pivot columns, strictly increasing.
std::vector<std::size_t> reduce_rref(Matrix& m, const Field& f);

/// Rank over the field (input left untouched).
std::size_t rank(Matrix m, const Field& f);

/// Basis (as rows) of {x : m x^T = 0}.
Matrix nullspace(const Matrix& m, const Field& f);

/// Membership of v in the row space of an RREF matrix with the given pivots.
bool in_row_space(const Matrix& rref, std::span<const std::size_t> pivots,
                  std::span<const Element> v, const Field& f);

/// dst += c * src, elementwise.
void axpy(std::span<Element> dst, Element c, std::span<const Element> src, const Field& f);

}  // namespace qgv
