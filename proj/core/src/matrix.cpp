#include "hypercert/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypercert {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix without field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!field_) throw std::invalid_argument("matrix without field");
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const FieldPtr& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const FieldPtr& field, std::vector<elem_t> entries) {
  const std::size_t n = entries.size();
  return {field, n, 1, std::move(entries)};
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](elem_t x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

void Matrix::require_compatible(const Matrix& o, const char* what) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw std::invalid_argument(std::string(what) + ": field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out += o;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(o, "matrix add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: dimension mismatch");
  const FieldSpec& f = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f.add(data_[i], o.data_[i]);
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out = *this;
  out.add_scaled(o, field_->neg(1));
  return out;
}

void Matrix::add_scaled(const Matrix& o, elem_t c) {
  require_compatible(o, "matrix add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: dimension mismatch");
  if (c == 0) return;
  const FieldSpec& f = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (o.data_[i]) data_[i] = f.add(data_[i], f.mul(c, o.data_[i]));
}

Matrix Matrix::scaled(elem_t c) const {
  Matrix out = *this;
  const FieldSpec& f = *field_;
  for (auto& x : out.data_) x = f.mul(x, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_compatible(o, "matrix multiply");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix multiply: dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  const FieldSpec& f = *field_;
  if (f.degree() == 1) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = (*this)(i, k);
        if (!a) continue;
        const elem_t* brow = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
        // Products are < 2^40, so flush well before overflow.
        if ((k & 0xfff) == 0xfff)
          for (auto& v : acc) v %= p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<elem_t>(acc[j] % p);
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    elem_t* crow = out.data_.data() + i * o.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const elem_t a = (*this)(i, k);
      if (!a) continue;
      const elem_t* brow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (brow[j]) crow[j] = f.add(crow[j], f.mul(a, brow[j]));
    }
  }
  return out;
}

std::vector<elem_t> Matrix::apply(std::span<const elem_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
  const FieldSpec& f = *field_;
  std::vector<elem_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    elem_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) && v[j]) acc = f.add(acc, f.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) throw std::invalid_argument("matrix power of non-square matrix");
  Matrix result = identity(field_, rows_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::submatrix_cols(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column range");
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) throw std::invalid_argument("kron: field mismatch");
  const FieldSpec& f = *a.field();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const elem_t x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  std::vector<elem_t> data = a.data();
  data.insert(data.end(), b.data().begin(), b.data().end());
  return {a.field(), a.rows() + b.rows(), a.cols(), std::move(data)};
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix flatten_rows(std::span<const Matrix> mats) {
  if (mats.empty()) throw std::invalid_argument("flatten_rows: empty input");
  const std::size_t width = mats[0].rows() * mats[0].cols();
  Matrix out(mats[0].field(), mats.size(), width);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() * mats[i].cols() != width) throw std::invalid_argument("flatten_rows: shape mismatch");
    std::copy(mats[i].data().begin(), mats[i].data().end(), out.row(i).begin());
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& a) {
  const FieldSpec& f = *a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const elem_t inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const elem_t factor = a(i, c);
      if (!factor) continue;
      const elem_t nf = f.neg(factor);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j)) a(i, j) = f.add(a(i, j), f.mul(nf, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& a) {
  // Row-by-row insertion keeps memory at O(min(rows, cols) * cols).
  RowSpan span(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows() && span.rank() < a.cols(); ++i) {
    auto r = a.row(i);
    span.insert(std::vector<elem_t>(r.begin(), r.end()));
  }
  return span.rank();
}

Matrix nullspace(const Matrix& a) {
  Matrix r = a;
  const auto pivots = rref(r);
  const FieldSpec& f = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.field(), a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(r(i, free_cols[k]));
  }
  return basis;
}

std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  if (a.field() != b.field() && !(*a.field() == *b.field())) throw std::invalid_argument("solve: field mismatch");
  Matrix aug = hstack(a, b);
  const auto pivots = rref(aug);
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw std::invalid_argument("solve: right-hand side must be a column");
  return solve_many(a, b);
}

bool rowspace_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_equal: column mismatch");
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  auto x = solve_many(a, Matrix::identity(a.field(), a.rows()));
  if (!x || rank(a) != a.rows()) return std::nullopt;
  return x;
}

RowSpan::RowSpan(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

void RowSpan::reduce(std::vector<elem_t>& v) const {
  const FieldSpec& f = *field_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const elem_t c = v[pivots_[k]];
    if (!c) continue;
    const elem_t nc = f.neg(c);
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      if (row[j]) v[j] = f.add(v[j], f.mul(nc, row[j]));
  }
}

bool RowSpan::insert(std::vector<elem_t> v) {
  if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](elem_t x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - v.begin());
  const FieldSpec& f = *field_;
  const elem_t inv = f.inv(v[piv]);
  for (auto& x : v) x = f.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool RowSpan::contains(std::vector<elem_t> v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
}

Matrix RowSpan::basis() const {
  Matrix out(field_, rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), out.row(i).begin());
  return out;
}

}  // namespace hypercert
