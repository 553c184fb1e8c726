#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace homconf {

using Rational = mpq_class;

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatMatrix transposed() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Gaussian elimination. The argument is consumed as scratch space.
std::size_t rank_in_place(RatMatrix& m);
std::size_t rank(RatMatrix m);

/// Basis of {x : m x = 0}, returned as the columns of a cols() x k matrix.
RatMatrix nullspace(const RatMatrix& m);

/// Basis of {y : y m = 0}, returned as the rows of a k x rows() matrix.
RatMatrix left_nullspace(const RatMatrix& m);

/// Rank of an integer matrix, by fraction-free (Bareiss) elimination.
std::size_t integer_rank(std::vector<std::int64_t> data, std::size_t rows,
                         std::size_t cols);

}  // namespace homconf
