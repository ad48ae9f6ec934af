#ifndef LIFTCOVER_LATTICE_HPP
#define LIFTCOVER_LATTICE_HPP

#include <optional>
#include <vector>

#include "liftcover/polyhedron.hpp"

namespace liftcover {

// Column-style Hermite normal form of a generator matrix G (generators as
// columns, possibly dependent, rational entries allowed):
//   G * unimodular = [hermite | 0]
// hermite is in column echelon form with positive pivots and the entries
// left of each pivot reduced modulo it. The trailing columns of
// `unimodular` span the integer kernel of G.
struct HermiteDecomposition {
  QMatrix hermite;     // n x rank
  QMatrix unimodular;  // m x m, integer, determinant +-1
  std::size_t rank = 0;
};

HermiteDecomposition column_hermite_form(const QMatrix& generators);

// Unimodular U such that basis * U is LLL-reduced (delta = 3/4) for the inner
// product x^T form y; `form` must be positive definite on the span.
QMatrix lll_transform(const QMatrix& basis, const QMatrix& form);

// Discrete subgroup of Q^n given by linearly independent basis columns.
class Lattice {
 public:
  explicit Lattice(QMatrix basis);
  static Lattice integer(std::size_t n);
  static Lattice trivial(std::size_t n);
  // Lattice generated by arbitrary (possibly dependent) columns.
  static Lattice generated_by(const QMatrix& generators);

  std::size_t ambient() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const QMatrix& basis() const { return basis_; }
  QMatrix hermite_basis() const { return column_hermite_form(basis_).hermite; }

  // Integer coordinates of x w.r.t. the basis, if x belongs to the lattice.
  std::optional<QVector> coordinates(const QVector& x) const;
  bool contains(const QVector& x) const { return coordinates(x).has_value(); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient() == b.ambient() && a.rank() == b.rank() && a.hermite_basis() == b.hermite_basis();
  }

 private:
  QMatrix basis_;
};

// S = (shift + lattice) intersected with hull, where hull is meant to be
// conv(S). The lattice has full rank and 0 is not in S.
class TruncatedAffineLattice {
 public:
  TruncatedAffineLattice(QVector shift, Lattice lattice, HPolyhedron hull);
  // Skips the 0-not-in-S and full-rank checks (used for derived objects
  // such as projections, where the checks are established elsewhere).
  static TruncatedAffineLattice unchecked(QVector shift, Lattice lattice, HPolyhedron hull);

  std::size_t dim() const { return shift_.size(); }
  const QVector& shift() const { return shift_; }
  const Lattice& lattice() const { return lattice_; }
  const HPolyhedron& hull() const { return hull_; }
  bool contains(const QVector& x) const;

 private:
  struct Unchecked {};
  TruncatedAffineLattice(QVector shift, Lattice lattice, HPolyhedron hull, Unchecked);

  QVector shift_;
  Lattice lattice_;
  HPolyhedron hull_;
};

// A lattice together with the subspace it spans, in which the fundamental
// domain is expressed.
struct WLattice {
  Lattice lattice;
  Subspace carrier;
};

// lin(conv S) intersected with the lattice.
WLattice translation_group(const TruncatedAffineLattice& S);

// Lattice of points of L lying in V; throws PreconditionError if that
// lattice does not span V.
Lattice subspace_lattice_basis(const Subspace& V, const Lattice& L);

// All points of S in the box [lower, upper], sorted lexicographically.
std::vector<QVector> enumerate_points(const TruncatedAffineLattice& S, const QVector& lower, const QVector& upper);
// All points of S in a bounded polyhedron, sorted lexicographically.
std::vector<QVector> enumerate_points(const TruncatedAffineLattice& S, const HPolyhedron& region);

// The parallelepiped spanned by the W basis, in coordinates of the
// carrier's basis.
HPolyhedron fundamental_domain(const WLattice& W);

TruncatedAffineLattice product(const TruncatedAffineLattice& a, const TruncatedAffineLattice& b);
// Image of S under x -> M x + m.
TruncatedAffineLattice transform_lattice(const TruncatedAffineLattice& S, const QMatrix& M, const QVector& m);

// Spot-check of hull = conv(S) on the window [-radius, radius]^n: S must
// meet the window, and every irredundant hull row must be tight at some
// point of S in the window.
struct WindowValidation {
  bool nonempty = false;
  std::vector<std::size_t> untouched_rows;  // indices into the irredundant hull
  bool passed() const { return nonempty && untouched_rows.empty(); }
};

WindowValidation validate_on_window(const TruncatedAffineLattice& S, long radius);

}  // namespace liftcover

#endif
