#pragma once

#include "polya/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polya {

/// Dense row-major matrix of exact rationals. Rectangular shapes are allowed;
/// the semiring operations below require square operands.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// s x t matrix with a single 1 at (i, j).
  static RationalMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static RationalMatrix diagonal(std::span<const Rational> diag);
  /// Throws InvalidArgument on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  Eigen::MatrixXd to_eigen() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block diagonal (A 0; 0 B).
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);
/// Standard Kronecker product, blocks a(i,j) * B.
RationalMatrix kronecker_product(const RationalMatrix& a, const RationalMatrix& b);
/// A (x) I_m + I_n (x) B. Both operands must be square.
RationalMatrix kronecker_sum(const RationalMatrix& a, const RationalMatrix& b);
/// A^n for square A (A^0 = I).
RationalMatrix power(const RationalMatrix& a, unsigned n);

/// Off-diagonal entries all nonnegative.
bool in_intmat(const RationalMatrix& a);

/// All pairwise sums a_i + b_j in lexicographic order of (i, j).
std::vector<Rational> vector_boxplus(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace polya
