#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypercert/field.hpp"

namespace hypercert {

/// Dense row-major matrix over one finite field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries);

  static Matrix zero(const FieldPtr& field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(const FieldPtr& field, std::size_t n);
  /// Builds a matrix from small integers reduced into the prime subfield.
  static Matrix from_ints(const FieldPtr& field, const std::vector<std::vector<long>>& rows);
  static Matrix column(const FieldPtr& field, std::vector<elem_t> entries);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  elem_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  elem_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }

  std::span<const elem_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<elem_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<elem_t>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix scaled(elem_t c) const;
  /// this += c * o
  void add_scaled(const Matrix& o, elem_t c);

  std::vector<elem_t> apply(std::span<const elem_t> v) const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;
  Matrix submatrix_cols(std::size_t first, std::size_t count) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  void require_compatible(const Matrix& o, const char* what) const;

  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<elem_t> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Flattens each matrix into one row of the result (all must share a shape).
Matrix flatten_rows(std::span<const Matrix> mats);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(const Matrix& a);
/// Columns of the result form a basis of {x : A x = 0}.
Matrix nullspace(const Matrix& a);
/// Some x with A x = b (b a column), or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Solves A X = B for several right-hand sides at once.
std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b);
bool rowspace_equal(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

/// Incremental row-space basis kept in reduced echelon form.
class RowSpan {
public:
  RowSpan(FieldPtr field, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces v against the basis; returns true if v was new (and adds it).
  bool insert(std::vector<elem_t> v);
  bool contains(std::vector<elem_t> v) const;
  Matrix basis() const;

private:
  void reduce(std::vector<elem_t>& v) const;

  FieldPtr field_;
  std::size_t dim_;
  std::vector<std::vector<elem_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hypercert
