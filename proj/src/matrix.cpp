#include "qgv/matrix.hpp"

#include <algorithm>

#include "qgv/errors.hpp"

namespace qgv {

void Matrix::append_row(std::span<const Element> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidArgument("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void axpy(std::span<Element> dst, Element c, std::span<const Element> src, const Field& f) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] = f.add(dst[i], f.mul(c, src[i]));
  }
}

std::vector<std::size_t> reduce_rref(Matrix& m, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      auto a = m.row(sel), b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Element scale = f.inv(m(lead, col));
    for (auto& x : m.row(lead)) x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead && m(r, col) != 0) axpy(m.row(r), f.neg(m(r, col)), m.row(lead), f);
    }
    pivots.push_back(col);
    ++lead;
  }
  m.truncate(lead);
  return pivots;
}

std::size_t rank(Matrix m, const Field& f) { return reduce_rref(m, f).size(); }

Matrix nullspace(const Matrix& m, const Field& f) {
  Matrix r = m;
  const auto pivots = reduce_rref(r, f);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, cols);
  std::vector<Element> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.append_row(v);
  }
  return basis;
}

bool in_row_space(const Matrix& rref, std::span<const std::size_t> pivots,
                  std::span<const Element> v, const Field& f) {
  std::vector<Element> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Element c = w[pivots[i]];
    if (c != 0) axpy(w, f.neg(c), rref.row(i), f);
  }
  return std::all_of(w.begin(), w.end(), [](Element x) { return x == 0; });
}

}  // namespace qgv
