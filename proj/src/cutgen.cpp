#include "liftcover/cutgen.hpp"

#include "liftcover/errors.hpp"

namespace liftcover {

MixedIntegerInstance::MixedIntegerInstance(QMatrix R_, QMatrix P_) : R(std::move(R_)), P(std::move(P_)) {
  if (R.rows() != P.rows()) throw DimensionError("R and P must have the same number of rows");
  if (R.cols() + P.cols() == 0) throw PreconditionError("instance needs at least one column");
}

Rational Cut::lhs(const QVector& s, const QVector& y) const {
  if (s.size() != psi.size() || y.size() != pi.size()) throw DimensionError("point does not match the cut");
  Rational total = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) total += psi[i] * s[i];
  for (std::size_t j = 0; j < pi.size(); ++j) total += pi[j] * y[j];
  return total;
}

Cut generate_cut(const TruncatedAffineLattice& S, const SFreeBody& B, const MixedIntegerInstance& inst,
                 bool allow_uncertified, LiftingOptions options) {
  if (inst.dim() != S.dim() || inst.dim() != B.dim()) throw DimensionError("instance dimension differs from S and B");
  LiftingContext ctx(S, B, options);
  Cut cut;
  for (std::size_t i = 0; i < inst.continuous(); ++i) cut.psi.push_back(eval_psi(B, inst.R.column(i)).value);
  bool covered = ctx.check_covering().covered();
  if (!covered && !allow_uncertified)
    throw PreconditionError("covering property fails; the lifting would not be certified minimal");
  cut.certified = covered;
  cut.label = covered ? "minimal lifting (covering certified)" : "valid, minimality uncertified";
  for (std::size_t j = 0; j < inst.integer(); ++j) {
    QVector p = inst.P.column(j);
    LiftingValue v = covered ? ctx.minimal_lifting(p) : ctx.lifting_upper_bound(p);
    cut.pi.push_back(v.value);
    cut.witnesses.push_back(v.w);
  }
  return cut;
}

std::string to_string(CutVerdict v) {
  switch (v) {
    case CutVerdict::pass: return "pass";
    case CutVerdict::violated: return "violated";
    case CutVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool is_feasible(const TruncatedAffineLattice& S, const MixedIntegerInstance& inst, const QVector& s, const QVector& y) {
  if (s.size() != inst.continuous() || y.size() != inst.integer()) throw DimensionError("point does not match the instance");
  for (const auto& v : s)
    if (v < 0) return false;
  for (const auto& v : y)
    if (v < 0 || !is_integral(v)) return false;
  return S.contains(inst.R * s + inst.P * y);
}

CutValidation validate_cut(const TruncatedAffineLattice& S, const MixedIntegerInstance& inst, const Cut& cut,
                           CutBounds bounds) {
  std::size_t n = inst.dim(), k = inst.continuous(), l = inst.integer();
  if (cut.psi.size() != k || cut.pi.size() != l) throw DimensionError("cut does not match the instance");
  if (bounds.y_max < 0 || bounds.window < 0) throw PreconditionError("enumeration bounds must be nonnegative");
  auto targets = enumerate_points(S, QVector::filled(n, -bounds.window), QVector::filled(n, bounds.window));

  // min psi.s over {s >= 0 : R s = v} as a maximization of -psi.s.
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(inst.R.row(i));
  for (std::size_t i = 0; i < n; ++i) rows.push_back(-1 * inst.R.row(i));
  for (std::size_t i = 0; i < k; ++i) rows.push_back(-1 * QVector::unit(k, i));
  QMatrix A = QMatrix::from_rows(rows, k);
  QVector objective(k);
  for (std::size_t i = 0; i < k; ++i) objective[i] = -cut.psi[i];

  CutValidation out;
  std::vector<long> y(l, 0);
  for (;;) {
    QVector yv(l);
    for (std::size_t j = 0; j < l; ++j) yv[j] = y[j];
    QVector Py = inst.P * yv;
    Rational ylhs = 0;
    for (std::size_t j = 0; j < l; ++j) ylhs += cut.pi[j] * yv[j];
    for (const auto& t : targets) {
      QVector v = t - Py;
      std::optional<QVector> s;
      Rational value;
      if (k == 0) {
        if (!v.is_zero()) continue;
        s = QVector(0);
        value = ylhs;
      } else {
        QVector b(2 * n + k);
        for (std::size_t i = 0; i < n; ++i) {
          b[i] = v[i];
          b[n + i] = -v[i];
        }
        auto r = maximize(A, b, objective);
        if (r.status == LpStatus::infeasible) continue;
        if (r.status == LpStatus::unbounded) {
          // The cut decreases without bound along a feasible ray.
          ++out.feasible_points;
          out.verdict = CutVerdict::violated;
          out.violation_s = feasible_point(HPolyhedron(A, b));
          out.violation_y = yv;
          return out;
        }
        s = r.point;
        value = ylhs - r.value;
      }
      ++out.feasible_points;
      if (!out.min_lhs || value < *out.min_lhs) out.min_lhs = value;
      if (value < 1) {
        out.verdict = CutVerdict::violated;
        out.violation_s = s;
        out.violation_y = yv;
        return out;
      }
    }
    std::size_t j = 0;
    while (j < l && y[j] == bounds.y_max) y[j++] = 0;
    if (j == l) break;
    ++y[j];
  }
  out.verdict = out.feasible_points ? CutVerdict::pass : CutVerdict::inconclusive;
  return out;
}

}  // namespace liftcover
