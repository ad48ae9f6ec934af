#ifndef LIFTCOVER_POLYHEDRON_HPP
#define LIFTCOVER_POLYHEDRON_HPP

#include <optional>
#include <vector>

#include "liftcover/linalg.hpp"
#include "liftcover/lp.hpp"

namespace liftcover {

// {x : A x <= b}. Redundant rows are tolerated; remove_redundant_rows()
// produces the canonical irredundant form.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dim) : A_(0, dim), b_(0) {}
  HPolyhedron(QMatrix A, QVector b);

  static HPolyhedron empty(std::size_t dim);  // the single row 0 <= -1
  static HPolyhedron box(const QVector& lower, const QVector& upper);

  std::size_t dim() const { return A_.cols(); }
  std::size_t num_rows() const { return A_.rows(); }
  const QMatrix& A() const { return A_; }
  const QVector& b() const { return b_; }
  QVector normal(std::size_t i) const { return A_.row(i); }

  bool contains(const QVector& x) const;
  bool strictly_contains(const QVector& x) const;

  HPolyhedron intersect(const HPolyhedron& other) const;
  HPolyhedron with_row(const QVector& a, const Rational& rhs) const;
  HPolyhedron translated(const QVector& v) const;  // P + v
  // {y : T y + t in P}
  HPolyhedron preimage(const QMatrix& T, const QVector& t) const;
  HPolyhedron product(const HPolyhedron& other) const;

 private:
  QMatrix A_;
  QVector b_;
};

LpResult maximize(const HPolyhedron& P, const QVector& c);
std::optional<QVector> feasible_point(const HPolyhedron& P);
bool is_empty(const HPolyhedron& P);

// A point of the interior, chosen to maximize the minimum row slack (rows
// are not rescaled). nullopt iff the interior is empty.
std::optional<QVector> interior_point(const HPolyhedron& P);

Subspace lineality_space(const HPolyhedron& P);
HPolyhedron recession_cone(const HPolyhedron& P);
// Linear span of a polyhedral cone {d : A d <= 0}.
Subspace cone_span(const HPolyhedron& cone);

// Rows scaled to coprime integers, duplicates and implied rows removed.
HPolyhedron remove_redundant_rows(const HPolyhedron& P);
HPolyhedron normalize_rows(const HPolyhedron& P);

bool is_subset(const HPolyhedron& P, const HPolyhedron& Q);
bool same_set(const HPolyhedron& P, const HPolyhedron& Q);

// Orthogonal projection onto V, in coordinates w.r.t. V's basis.
HPolyhedron project(const HPolyhedron& P, const Subspace& V);

// Closure of P \ Q as polyhedra with pairwise disjoint interiors.
// Requires P bounded and full-dimensional.
std::vector<HPolyhedron> subtract(const HPolyhedron& P, const HPolyhedron& Q);
// Same without the precondition checks; for inner loops.
std::vector<HPolyhedron> subtract_unchecked(const HPolyhedron& P, const HPolyhedron& Q);

struct BoundingBox {
  enum class Kind { bounded, unbounded, empty };
  Kind kind = Kind::empty;
  QVector lower, upper;
  bool bounded() const { return kind == Kind::bounded; }
};

BoundingBox bounding_box(const HPolyhedron& P);

}  // namespace liftcover

#endif
