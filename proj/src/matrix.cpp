#include "liftcover/matrix.hpp"

#include "liftcover/errors.hpp"

namespace liftcover {

namespace {

void require_same_size(const QVector& a, const QVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace

QVector QVector::unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

QVector QVector::filled(std::size_t n, const Rational& value) {
  return QVector(std::vector<Rational>(n, value));
}

bool QVector::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

QVector QVector::slice(std::size_t from, std::size_t count) const {
  if (from + count > size()) throw DimensionError("slice out of range");
  return QVector(std::vector<Rational>(entries_.begin() + from, entries_.begin() + from + count));
}

QVector& QVector::operator+=(const QVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator-(QVector a) {
  for (auto& x : a) x = -x;
  return a;
}
QVector operator*(const Rational& s, QVector a) { return a *= s; }

Rational dot(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  return sum;
}

QVector concat(const QVector& a, const QVector& b) {
  std::vector<Rational> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return QVector(std::move(out));
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(v[i]);
  }
  return s + ")";
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  cells_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    cells_.insert(cells_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(std::vector<Rational>(cells_.begin() + i * cols_, cells_.begin() + (i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<QVector> QMatrix::row_list() const {
  std::vector<QVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<QVector> QMatrix::column_list() const {
  std::vector<QVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void QMatrix::set_row(std::size_t i, const QVector& v) {
  if (v.size() != cols_) throw DimensionError("row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void QMatrix::set_column(std::size_t j, const QVector& v) {
  if (v.size() != rows_) throw DimensionError("column length " + std::to_string(v.size()) + " != " + std::to_string(rows_));
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::columns(std::size_t from, std::size_t count) const {
  if (from + count > cols_) throw DimensionError("column range out of bounds");
  QMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, from + j);
  return out;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  QVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

QMatrix operator*(const Rational& s, QMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return m;
}

QMatrix outer(const QVector& a, const QVector& b) {
  QMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * b[j];
  return out;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  QMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  QMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace liftcover
