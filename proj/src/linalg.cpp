#include "liftcover/linalg.hpp"

#include "liftcover/errors.hpp"

namespace liftcover {

EchelonForm row_reduce(QMatrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead, j));
    Rational p = m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(lead, j) != 0) m(i, j) -= f * m(lead, j);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::optional<QVector> solve(const QMatrix& A, const QVector& b) {
  if (A.rows() != b.size()) throw DimensionError("solve: right-hand side has wrong length");
  QMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  auto ech = row_reduce(std::move(aug));
  QVector x(A.cols());
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    std::size_t c = ech.pivot_columns[r];
    if (c == A.cols()) return std::nullopt;
    x[c] = ech.reduced(r, A.cols());
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = m.rows();
  auto ech = row_reduce(hstack(m, QMatrix::identity(n)));
  if (ech.pivot_columns.size() < n || (n > 0 && ech.pivot_columns[n - 1] >= n))
    throw PreconditionError("matrix is singular");
  return ech.reduced.columns(n, n);
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

QVector primitive_integer_vector(const QVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    Integer num = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer num = v[i].get_num() * (lcm_den / v[i].get_den());
    out[i] = Rational(Integer(num / g));
  }
  return out;
}

Subspace::Subspace(std::size_t ambient, std::vector<QVector> basis) : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_) throw DimensionError("subspace basis vector has wrong length");
  if (rank(QMatrix::from_rows(basis_, ambient_)) != basis_.size())
    throw PreconditionError("subspace basis is linearly dependent");
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionError("spanning vector has wrong length");
  Subspace s(ambient);
  auto ech = row_reduce(QMatrix::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
    s.basis_.push_back(primitive_integer_vector(ech.reduced.row(r)));
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(QVector::unit(ambient, i));
  return s;
}

QMatrix Subspace::basis_matrix() const { return QMatrix::from_columns(basis_, ambient_); }

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match subspace");
  if (v.is_zero()) return true;
  return solve(basis_matrix(), v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::orthogonal_complement() const {
  return nullspace(QMatrix::from_rows(basis_, ambient_));
}

Subspace nullspace(const QMatrix& A) {
  auto ech = row_reduce(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(A.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) v[ech.pivot_columns[r]] = -ech.reduced(r, f);
    basis.push_back(primitive_integer_vector(v));
  }
  return Subspace(A.cols(), std::move(basis));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace sum: ambient dimensions differ");
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), vectors);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace intersection: ambient dimensions differ");
  auto rows = a.orthogonal_complement().basis();
  auto more = b.orthogonal_complement().basis();
  rows.insert(rows.end(), more.begin(), more.end());
  return nullspace(QMatrix::from_rows(rows, a.ambient()));
}

}  // namespace liftcover
