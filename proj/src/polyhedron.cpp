#include "liftcover/polyhedron.hpp"

#include <algorithm>

#include "liftcover/errors.hpp"

namespace liftcover {

HPolyhedron::HPolyhedron(QMatrix A, QVector b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != b_.size()) throw DimensionError("polyhedron: A has " + std::to_string(A_.rows()) +
                                                   " rows but b has " + std::to_string(b_.size()) + " entries");
}

HPolyhedron HPolyhedron::empty(std::size_t dim) {
  QVector b(1);
  b[0] = -1;
  return HPolyhedron(QMatrix(1, dim), b);
}

HPolyhedron HPolyhedron::box(const QVector& lower, const QVector& upper) {
  if (lower.size() != upper.size()) throw DimensionError("box bounds differ in length");
  std::size_t n = lower.size();
  QMatrix A(2 * n, n);
  QVector b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    A(2 * i, i) = -1;
    b[2 * i] = -lower[i];
    A(2 * i + 1, i) = 1;
    b[2 * i + 1] = upper[i];
  }
  return HPolyhedron(std::move(A), std::move(b));
}

bool HPolyhedron::contains(const QVector& x) const {
  if (x.size() != dim()) throw DimensionError("point length does not match polyhedron");
  for (std::size_t i = 0; i < num_rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < dim(); ++j)
      if (A_(i, j) != 0) s += A_(i, j) * x[j];
    if (s > b_[i]) return false;
  }
  return true;
}

bool HPolyhedron::strictly_contains(const QVector& x) const {
  if (x.size() != dim()) throw DimensionError("point length does not match polyhedron");
  for (std::size_t i = 0; i < num_rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < dim(); ++j)
      if (A_(i, j) != 0) s += A_(i, j) * x[j];
    if (s >= b_[i]) return false;
  }
  return true;
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const {
  if (dim() != other.dim()) throw DimensionError("intersecting polyhedra of different dimension");
  return HPolyhedron(vstack(A_, other.A_), concat(b_, other.b_));
}

HPolyhedron HPolyhedron::with_row(const QVector& a, const Rational& rhs) const {
  QMatrix extra(1, dim());
  extra.set_row(0, a);
  return HPolyhedron(vstack(A_, extra), concat(b_, QVector{rhs}));
}

HPolyhedron HPolyhedron::translated(const QVector& v) const { return HPolyhedron(A_, b_ + A_ * v); }

HPolyhedron HPolyhedron::preimage(const QMatrix& T, const QVector& t) const {
  if (T.rows() != dim() || t.size() != dim()) throw DimensionError("preimage map has wrong shape");
  return HPolyhedron(A_ * T, b_ - A_ * t);
}

HPolyhedron HPolyhedron::product(const HPolyhedron& other) const {
  return HPolyhedron(block_diagonal(A_, other.A_), concat(b_, other.b_));
}

LpResult maximize(const HPolyhedron& P, const QVector& c) { return maximize(P.A(), P.b(), c); }

std::optional<QVector> feasible_point(const HPolyhedron& P) {
  auto r = maximize(P, QVector(P.dim()));
  if (r.status == LpStatus::infeasible) return std::nullopt;
  return r.point;
}

bool is_empty(const HPolyhedron& P) { return !feasible_point(P).has_value(); }

std::optional<QVector> interior_point(const HPolyhedron& P) {
  std::size_t n = P.dim();
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    QVector a = P.normal(i);
    if (a.is_zero()) {
      if (P.b()[i] < 0) return std::nullopt;
      continue;  // vacuous row
    }
    rows.push_back(concat(a, QVector{1}));
    rhs.push_back(P.b()[i]);
  }
  QVector cap(n + 1);
  cap[n] = 1;
  rows.push_back(cap);
  rhs.push_back(1);
  auto r = maximize(QMatrix::from_rows(rows, n + 1), QVector(std::move(rhs)), QVector::unit(n + 1, n));
  if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
  return r.point.slice(0, n);
}

Subspace lineality_space(const HPolyhedron& P) { return nullspace(P.A()); }

HPolyhedron recession_cone(const HPolyhedron& P) { return HPolyhedron(P.A(), QVector(P.num_rows())); }

Subspace cone_span(const HPolyhedron& cone) {
  std::size_t n = cone.dim();
  HPolyhedron boxed = HPolyhedron(cone.A(), QVector(cone.num_rows()))
                          .intersect(HPolyhedron::box(QVector::filled(n, -1), QVector::filled(n, 1)));
  std::vector<QVector> equalities;
  for (std::size_t i = 0; i < cone.num_rows(); ++i) {
    QVector a = cone.normal(i);
    if (a.is_zero()) continue;
    auto r = maximize(boxed, -a);
    if (r.status == LpStatus::optimal && r.value == 0) equalities.push_back(a);
  }
  return nullspace(QMatrix::from_rows(equalities, n));
}

namespace {

// Scales (a, beta) by a positive factor so that all entries are coprime
// integers.
std::pair<QVector, Rational> normalized_row(const QVector& a, const Rational& beta) {
  QVector full = primitive_integer_vector(concat(a, QVector{beta}));
  if (full.is_zero()) return {a, beta};
  return {full.slice(0, a.size()), full[a.size()]};
}

}  // namespace

HPolyhedron normalize_rows(const HPolyhedron& P) {
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    auto [a, beta] = normalized_row(P.normal(i), P.b()[i]);
    bool duplicate = false;
    for (std::size_t k = 0; k < rows.size() && !duplicate; ++k) duplicate = rows[k] == a && rhs[k] == beta;
    if (duplicate) continue;
    rows.push_back(std::move(a));
    rhs.push_back(beta);
  }
  return HPolyhedron(QMatrix::from_rows(rows, P.dim()), QVector(std::move(rhs)));
}

HPolyhedron remove_redundant_rows(const HPolyhedron& P) {
  std::size_t n = P.dim();
  if (is_empty(P)) return HPolyhedron::empty(n);
  HPolyhedron N = normalize_rows(P);
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < N.num_rows(); ++i) {
    if (N.normal(i).is_zero()) continue;  // feasible, so 0 <= b holds
    rows.push_back(N.normal(i));
    rhs.push_back(N.b()[i]);
  }
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<QVector> others;
    std::vector<Rational> other_rhs;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i && keep[k]) {
        others.push_back(rows[k]);
        other_rhs.push_back(rhs[k]);
      }
    auto r = maximize(QMatrix::from_rows(others, n), QVector(std::move(other_rhs)), rows[i]);
    if (r.status == LpStatus::optimal && r.value <= rhs[i]) keep[i] = false;
  }
  std::vector<QVector> kept;
  std::vector<Rational> kept_rhs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) {
      kept.push_back(rows[i]);
      kept_rhs.push_back(rhs[i]);
    }
  return HPolyhedron(QMatrix::from_rows(kept, n), QVector(std::move(kept_rhs)));
}

bool is_subset(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw DimensionError("comparing polyhedra of different dimension");
  if (is_empty(P)) return true;
  for (std::size_t i = 0; i < Q.num_rows(); ++i) {
    auto r = maximize(P, Q.normal(i));
    if (r.status != LpStatus::optimal || r.value > Q.b()[i]) return false;
  }
  return true;
}

bool same_set(const HPolyhedron& P, const HPolyhedron& Q) { return is_subset(P, Q) && is_subset(Q, P); }

namespace {

// Fourier-Motzkin step removing the last variable.
HPolyhedron eliminate_last(const HPolyhedron& P) {
  std::size_t n = P.dim();
  std::size_t v = n - 1;
  std::vector<std::size_t> pos, neg;
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    const Rational& c = P.A()(i, v);
    if (c > 0) pos.push_back(i);
    else if (c < 0) neg.push_back(i);
    else {
      rows.push_back(P.normal(i).slice(0, v));
      rhs.push_back(P.b()[i]);
    }
  }
  for (auto p : pos)
    for (auto q : neg) {
      Rational cp = P.A()(p, v);
      Rational cq = -P.A()(q, v);
      QVector row = cq * P.normal(p) + cp * P.normal(q);
      rows.push_back(row.slice(0, v));
      rhs.push_back(cq * P.b()[p] + cp * P.b()[q]);
    }
  return HPolyhedron(QMatrix::from_rows(rows, v), QVector(std::move(rhs)));
}

}  // namespace

HPolyhedron project(const HPolyhedron& P, const Subspace& V) {
  if (V.ambient() != P.dim()) throw DimensionError("projection subspace lives in a different space");
  std::size_t k = V.dim();
  if (is_empty(P)) return HPolyhedron::empty(k);
  Subspace U = V.orthogonal_complement();
  QMatrix frame = hstack(V.basis_matrix(), U.basis_matrix());
  HPolyhedron lifted = remove_redundant_rows(HPolyhedron(P.A() * frame, P.b()));
  while (lifted.dim() > k) lifted = remove_redundant_rows(eliminate_last(lifted));
  return lifted;
}

std::vector<HPolyhedron> subtract_unchecked(const HPolyhedron& P, const HPolyhedron& Q) {
  if (!interior_point(P.intersect(Q))) return {P};
  std::vector<HPolyhedron> cells;
  HPolyhedron prefix = P;
  for (std::size_t i = 0; i < Q.num_rows(); ++i) {
    QVector q = Q.normal(i);
    if (q.is_zero()) continue;
    HPolyhedron cell = prefix.with_row(-q, -Q.b()[i]);
    if (interior_point(cell)) cells.push_back(remove_redundant_rows(cell));
    prefix = prefix.with_row(q, Q.b()[i]);
  }
  return cells;
}

std::vector<HPolyhedron> subtract(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw DimensionError("subtracting polyhedra of different dimension");
  if (!interior_point(P)) throw PreconditionError("subtract: P is not full-dimensional");
  if (!bounding_box(P).bounded()) throw PreconditionError("subtract: P is unbounded");
  return subtract_unchecked(P, Q);
}

BoundingBox bounding_box(const HPolyhedron& P) {
  std::size_t n = P.dim();
  BoundingBox box;
  if (is_empty(P)) return box;
  box.lower = QVector(n);
  box.upper = QVector(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto hi = maximize(P, QVector::unit(n, j));
    auto lo = maximize(P, -QVector::unit(n, j));
    if (hi.status != LpStatus::optimal || lo.status != LpStatus::optimal) {
      box.kind = BoundingBox::Kind::unbounded;
      box.lower = box.upper = QVector();
      return box;
    }
    box.upper[j] = hi.value;
    box.lower[j] = -lo.value;
  }
  box.kind = BoundingBox::Kind::bounded;
  return box;
}

}  // namespace liftcover
