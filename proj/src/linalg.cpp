#include "homconf/linalg.hpp"

#include <utility>

#include "homconf/errors.hpp"

namespace homconf {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvariantViolation("matrix product: shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_in_place(RatMatrix& m) {
  // Forward elimination only; enough for the rank.
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

std::size_t rank(RatMatrix m) { return rank_in_place(m); }

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  RatMatrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free);
    ++k;
  }
  return basis;
}

RatMatrix left_nullspace(const RatMatrix& m) {
  return nullspace(m.transposed()).transposed();
}

std::size_t integer_rank(std::vector<std::int64_t> a, std::size_t rows,
                         std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::int64_t prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(sel, c), at(row, c));
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        const __int128 v = static_cast<__int128>(at(row, col)) * at(r, c) -
                           static_cast<__int128>(at(r, col)) * at(row, c);
        at(r, c) = static_cast<std::int64_t>(v / prev);
      }
      at(r, col) = 0;
    }
    prev = at(row, col);
    ++row;
  }
  return row;
}

}  // namespace homconf
