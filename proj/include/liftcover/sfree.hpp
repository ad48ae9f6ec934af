#ifndef LIFTCOVER_SFREE_HPP
#define LIFTCOVER_SFREE_HPP

#include <optional>
#include <vector>

#include "liftcover/lattice.hpp"

namespace liftcover {

// B = {r : a_i . r <= 1 for all i}. Facet indices follow input order.
class SFreeBody {
 public:
  explicit SFreeBody(std::vector<QVector> normals);
  // {x : A x <= b} with b > 0, rescaled to unit right-hand sides.
  static SFreeBody from_inequalities(const QMatrix& A, const QVector& b);

  std::size_t dim() const { return normals_.front().size(); }
  std::size_t num_facets() const { return normals_.size(); }
  const std::vector<QVector>& normals() const { return normals_; }
  const QVector& normal(std::size_t i) const { return normals_.at(i); }
  bool is_halfspace() const { return normals_.size() == 1; }

  HPolyhedron polyhedron() const;
  bool contains(const QVector& x) const;
  bool interior_contains(const QVector& x) const;

 private:
  std::vector<QVector> normals_;
};

struct PsiValue {
  Rational value;
  std::size_t argmax = 0;  // lowest index attaining the maximum
};

// Gauge psi_B(r) = max_i a_i . r.
PsiValue eval_psi(const SFreeBody& B, const QVector& r);

// Index of a facet normal that is implied by the others, if any.
std::optional<std::size_t> redundant_facet(const SFreeBody& B);

// L_B = {r : a_i . r = a_j . r for all i, j}.
Subspace facet_space(const SFreeBody& B);

enum class FreeVerdict { free, violated, free_on_window };

struct FreeReport {
  FreeVerdict verdict = FreeVerdict::free;
  std::optional<QVector> violation;  // point of S in int(B)
  bool reduced = false;              // decided on the reduced instance
  bool exact() const { return verdict != FreeVerdict::free_on_window; }
};

FreeReport is_s_free(const SFreeBody& B, const TruncatedAffineLattice& S, long window);

enum class MaximalVerdict { maximal, facet_without_point };

struct MaximalReport {
  MaximalVerdict verdict = MaximalVerdict::maximal;
  std::optional<std::size_t> facet;     // first facet lacking a point of S in its relative interior
  std::vector<QVector> witnesses;       // one point of S per facet when maximal
  bool exact = true;                    // false: the missing point was only searched in the window
  bool reduced = false;
};

MaximalReport is_maximal(const SFreeBody& B, const TruncatedAffineLattice& S, long window);

// Projection along N = span(rec(B intersect conv S)), valid when that cone
// lies in lin(B) and N is spanned by lattice points.
struct Reduction {
  Subspace removed;                // N
  QMatrix embedding;               // n x k; columns are a basis of the orthogonal complement of N
  QMatrix coordinates;             // k x n; y = coordinates * x
  Lattice removed_lattice;         // lattice points of N
  TruncatedAffineLattice lattice;  // reduced S
  SFreeBody body;                  // reduced B

  QVector reduce(const QVector& x) const { return coordinates * x; }
  QVector embed(const QVector& y) const { return embedding * y; }
};

// nullopt when B intersect conv(S) is already bounded. Throws
// PreconditionError when the interior of B intersect conv(S) is empty or the
// recession cone leaves lin(B) (B then cannot be maximal).
std::optional<Reduction> reduce_unbounded(const TruncatedAffineLattice& S, const SFreeBody& B);

// A point s of S with reduce(s) == y, for y in the reduced S.
QVector lift_point(const TruncatedAffineLattice& S, const Reduction& red, const QVector& y);

}  // namespace liftcover

#endif
