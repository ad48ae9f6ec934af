#ifndef LIFTCOVER_CUTGEN_HPP
#define LIFTCOVER_CUTGEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "liftcover/lifting.hpp"

namespace liftcover {

// Feasible set: R s + P y in S with s >= 0 real and y >= 0 integer. Columns
// of R are continuous rays, columns of P integer columns.
struct MixedIntegerInstance {
  QMatrix R;
  QMatrix P;

  MixedIntegerInstance(QMatrix R, QMatrix P);
  std::size_t dim() const { return R.rows(); }
  std::size_t continuous() const { return R.cols(); }
  std::size_t integer() const { return P.cols(); }
};

struct Cut {
  std::vector<Rational> psi;     // coefficient of s_i
  std::vector<Rational> pi;      // coefficient of y_j
  std::vector<QVector> witnesses;  // w attaining pi_j
  bool certified = true;           // pi is the unique minimal lifting
  std::string label;

  Rational lhs(const QVector& s, const QVector& y) const;
};

// psi_i = psi_B(r_i), pi_j = minimal lifting at p_j. Without covering the
// call is refused unless allow_uncertified is set; then pi_j is the best
// value of psi_B(p_j + w) over the window, which is still a valid lifting.
Cut generate_cut(const TruncatedAffineLattice& S, const SFreeBody& B, const MixedIntegerInstance& inst,
                 bool allow_uncertified = false, LiftingOptions options = {});

struct CutBounds {
  long y_max = 2;   // y ranges over {0, ..., y_max}^l
  long window = 3;  // targets are the points of S in [-window, window]^n
};

enum class CutVerdict { pass, violated, inconclusive };
std::string to_string(CutVerdict v);

struct CutValidation {
  CutVerdict verdict = CutVerdict::inconclusive;
  std::size_t feasible_points = 0;  // (target, y) pairs with a feasible s
  std::optional<Rational> min_lhs;
  std::optional<QVector> violation_s, violation_y;
};

// For each y in the box and each target t in the window, minimizes the cut
// over {s >= 0 : R s = t - P y} exactly and compares with 1.
CutValidation validate_cut(const TruncatedAffineLattice& S, const MixedIntegerInstance& inst, const Cut& cut,
                           CutBounds bounds = {});

bool is_feasible(const TruncatedAffineLattice& S, const MixedIntegerInstance& inst, const QVector& s, const QVector& y);

}  // namespace liftcover

#endif
