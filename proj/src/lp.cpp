#include "liftcover/lp.hpp"

#include <optional>

#include "liftcover/errors.hpp"

namespace liftcover {

namespace {

enum class Phase { one, two };

// Tableau for  min cost.y  s.t.  D y = rhs, y >= 0, where D = [A^T | I]
// (rows flipped so that rhs >= 0). Columns 0..m-1 are the dual variables,
// m..m+n-1 the artificials, and the last column is the right-hand side.
class DualTableau {
 public:
  DualTableau(const QMatrix& A, const QVector& c) : n_(A.cols()), m_(A.rows()), width_(m_ + n_ + 1) {
    cells_.resize(n_ * width_);
    sign_.assign(n_, 1);
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (c[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < m_; ++j) at(i, j) = sign_[i] * A(j, i);
      at(i, m_ + i) = 1;
      at(i, m_ + n_) = sign_[i] * c[i];
      basis_[i] = m_ + i;
    }
  }

  // Runs simplex on the given costs. Returns false if unbounded.
  bool run(const std::vector<Rational>& cost, Phase phase) {
    std::size_t allowed = phase == Phase::one ? m_ + n_ : m_;
    std::vector<bool> basic(m_ + n_, false);
    for (;;) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto b : basis_) basic[b] = true;
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (basic[j]) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < n_; ++i)
          if (at(i, j) != 0 && cost[basis_[i]] != 0) d -= cost[basis_[i]] * at(i, j);
        if (d < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, *entering) <= 0) continue;
        Rational ratio = at(i, m_ + n_) / at(i, *entering);
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < n_; ++i) v += cost[basis_[i]] * at(i, m_ + n_);
    return v;
  }

  // After a successful phase one, pivot zero-valued artificials out of the
  // basis wherever a structural column allows it.
  void expel_artificials() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (basis_[i] < m_) continue;
      for (std::size_t j = 0; j < m_; ++j)
        if (at(i, j) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  // Simplex multipliers for the original (unflipped) rows; these solve the
  // primal problem.
  QVector multipliers(const std::vector<Rational>& cost) const {
    QVector x(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (cost[basis_[i]] != 0 && at(i, m_ + k) != 0) s += cost[basis_[i]] * at(i, m_ + k);
      x[k] = sign_[k] * s;
    }
    return x;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t col) {
    Rational p = at(r, col);
    for (std::size_t j = 0; j < width_; ++j)
      if (at(r, j) != 0) at(r, j) /= p;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (std::size_t j = 0; j < width_; ++j)
        if (at(r, j) != 0) at(i, j) -= f * at(r, j);
    }
    basis_[r] = col;
  }

  std::size_t n_, m_, width_;
  std::vector<Rational> cells_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

enum class DualOutcome { optimal, infeasible, unbounded };

struct DualSolve {
  DualOutcome outcome;
  Rational value;
  QVector x;
};

DualSolve solve_dual(const QMatrix& A, const QVector& b, const QVector& c) {
  std::size_t n = A.cols(), m = A.rows();
  DualTableau t(A, c);
  std::vector<Rational> phase1(m + n, 0);
  for (std::size_t k = 0; k < n; ++k) phase1[m + k] = 1;
  t.run(phase1, Phase::one);  // bounded below by zero
  if (t.objective(phase1) > 0) return {DualOutcome::infeasible, 0, {}};
  t.expel_artificials();
  std::vector<Rational> phase2(m + n, 0);
  for (std::size_t j = 0; j < m; ++j) phase2[j] = b[j];
  if (!t.run(phase2, Phase::two)) return {DualOutcome::unbounded, 0, {}};
  return {DualOutcome::optimal, t.objective(phase2), t.multipliers(phase2)};
}

}  // namespace

LpResult maximize(const QMatrix& A, const QVector& b, const QVector& c) {
  if (A.rows() != b.size() || A.cols() != c.size()) throw DimensionError("LP data has inconsistent shapes");
  auto primary = solve_dual(A, b, c);
  LpResult r;
  if (primary.outcome == DualOutcome::optimal) {
    r.status = LpStatus::optimal;
    r.value = primary.value;
    r.point = std::move(primary.x);
    return r;
  }
  if (primary.outcome == DualOutcome::unbounded) {
    r.status = LpStatus::infeasible;
    return r;
  }
  // Dual infeasible: the primal is either infeasible or unbounded.
  auto feasibility = solve_dual(A, b, QVector(c.size()));
  if (feasibility.outcome == DualOutcome::optimal) {
    r.status = LpStatus::unbounded;
    r.point = std::move(feasibility.x);
  } else {
    r.status = LpStatus::infeasible;
  }
  return r;
}

}  // namespace liftcover
