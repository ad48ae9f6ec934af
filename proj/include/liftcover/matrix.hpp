#ifndef LIFTCOVER_MATRIX_HPP
#define LIFTCOVER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "liftcover/rational.hpp"

namespace liftcover {

// Dense rational vector. The length is fixed at construction.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  QVector(std::initializer_list<Rational> init) : entries_(init) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static QVector zero(std::size_t n) { return QVector(n); }
  static QVector unit(std::size_t n, std::size_t i);
  static QVector filled(std::size_t n, const Rational& value);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  QVector slice(std::size_t from, std::size_t count) const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& s);

  friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
  // Lexicographic order; only meaningful for equal lengths.
  friend bool operator<(const QVector& a, const QVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator-(QVector a);
QVector operator*(const Rational& s, QVector a);
Rational dot(const QVector& a, const QVector& b);
QVector concat(const QVector& a, const QVector& b);
std::string to_string(const QVector& v);

// Dense row-major rational matrix with fixed shape.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  std::vector<QVector> row_list() const;
  std::vector<QVector> column_list() const;
  void set_row(std::size_t i, const QVector& v);
  void set_column(std::size_t j, const QVector& v);

  QMatrix transpose() const;
  QMatrix columns(std::size_t from, std::size_t count) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> cells_;
};

QVector operator*(const QMatrix& m, const QVector& v);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, QMatrix m);
QMatrix outer(const QVector& a, const QVector& b);
QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

}  // namespace liftcover

#endif
