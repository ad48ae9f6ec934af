#ifndef LIFTCOVER_LP_HPP
#define LIFTCOVER_LP_HPP

#include "liftcover/matrix.hpp"

namespace liftcover {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;  // optimal value when status == optimal
  QVector point;   // optimal point when optimal, a feasible point when unbounded
};

// max c.x subject to A x <= b, x free. Exact simplex with Bland's rule,
// run on the dual (min b.y, A^T y = c, y >= 0) so the tableau has one row
// per variable rather than one per constraint.
LpResult maximize(const QMatrix& A, const QVector& b, const QVector& c);

}  // namespace liftcover

#endif
