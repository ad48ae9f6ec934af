#ifndef LIFTCOVER_LINALG_HPP
#define LIFTCOVER_LINALG_HPP

#include <optional>
#include <vector>

#include "liftcover/matrix.hpp"

namespace liftcover {

struct EchelonForm {
  QMatrix reduced;                         // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // one per nonzero row
};

EchelonForm row_reduce(QMatrix m);
std::size_t rank(const QMatrix& m);

// Some x with A x = b, or nullopt if the system is inconsistent.
// Free variables are set to zero, so the answer is deterministic.
std::optional<QVector> solve(const QMatrix& A, const QVector& b);

QMatrix inverse(const QMatrix& m);  // throws PreconditionError if singular
Rational determinant(QMatrix m);

// Positive multiple of v with coprime integer entries (v itself if zero).
QVector primitive_integer_vector(const QVector& v);

// Linear subspace of Q^n given by a basis. Bases produced by span() and
// nullspace() are canonical: primitive integer vectors derived from a
// reduced echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  // Keeps the given basis as is; throws if it is dependent.
  Subspace(std::size_t ambient, std::vector<QVector> basis);

  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  QMatrix basis_matrix() const;  // basis vectors as columns

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace orthogonal_complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  std::size_t ambient_;
  std::vector<QVector> basis_;
};

Subspace nullspace(const QMatrix& A);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

}  // namespace liftcover

#endif
