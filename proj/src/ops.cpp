#include "liftcover/ops.hpp"

#include "liftcover/errors.hpp"

namespace liftcover {

AffineMap::AffineMap(QMatrix M_, QVector m_) : M(std::move(M_)), m(std::move(m_)) {
  if (M.rows() != M.cols() || M.rows() != m.size()) throw DimensionError("affine map needs a square matrix matching the offset");
  if (determinant(M) == 0) throw PreconditionError("affine map matrix is singular");
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap(QMatrix::identity(n), QVector(n)); }
AffineMap AffineMap::translation(const QVector& m) { return AffineMap(QMatrix::identity(m.size()), m); }

AffineMap AffineMap::inverse() const {
  QMatrix Minv = liftcover::inverse(M);
  return AffineMap(Minv, -(Minv * m));
}

SFreeBody affine_transform(const SFreeBody& B, const AffineMap& T) {
  if (B.dim() != T.dim()) throw DimensionError("affine map and body dimensions differ");
  QMatrix Minv = inverse(T.M);
  QMatrix MinvT = Minv.transpose();
  QVector shift = Minv * T.m;
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < B.num_facets(); ++i) {
    Rational denom = 1 + dot(B.normal(i), shift);
    if (denom <= 0)
      throw PreconditionError("T(B) does not contain the origin in its interior: facet " + std::to_string(i) +
                              " has a . M^-1 m = " + format_rational(denom - 1));
    normals.push_back(Rational(1 / denom) * (MinvT * B.normal(i)));
  }
  return SFreeBody(std::move(normals));
}

std::pair<TruncatedAffineLattice, SFreeBody> affine_transform(const TruncatedAffineLattice& S, const SFreeBody& B,
                                                              const AffineMap& T) {
  if (S.dim() != B.dim()) throw DimensionError("body and lattice dimensions differ");
  SFreeBody body = affine_transform(B, T);
  return {transform_lattice(S, T.M, T.m), std::move(body)};
}

QVector facet_map(const SFreeBody& B, const AffineMap& T, std::size_t i, const QVector& r) {
  if (i >= B.num_facets()) throw PreconditionError("facet index " + std::to_string(i) + " out of range");
  if (r.size() != B.dim() || T.dim() != B.dim()) throw DimensionError("facet map dimensions differ");
  return T.M * r + dot(B.normal(i), r) * T.m;
}

SFreeBody coproduct(const SFreeBody& B1, const SFreeBody& B2, const Rational& mu) {
  if (mu <= 0 || mu >= 1) throw PreconditionError("coproduct weight must lie strictly between 0 and 1");
  Rational nu = 1 - mu;
  std::vector<QVector> normals;
  for (const auto& a1 : B1.normals())
    for (const auto& a2 : B2.normals()) normals.push_back(concat(mu * a1, nu * a2));
  return SFreeBody(std::move(normals));
}

namespace {

LimitBodyReport examine(const TruncatedAffineLattice& S, const SFreeBody& B, const LiftingOptions& options) {
  LimitBodyReport r;
  r.facets = B.num_facets();
  r.polytope = bounding_box(B.polyhedron().intersect(S.hull())).kind != BoundingBox::Kind::unbounded;
  auto free = is_s_free(B, S, options.window);
  r.free = free.verdict != FreeVerdict::violated;
  r.exact = free.exact();
  if (!r.free) {
    r.verdict = "not S-free";
    return r;
  }
  auto maximal = is_maximal(B, S, options.window);
  r.maximal = maximal.verdict == MaximalVerdict::maximal;
  if (!r.maximal) {
    r.verdict = "not maximal";
    return r;
  }
  try {
    LiftingContext ctx(S, B, options);
    const auto& rep = ctx.check_covering();
    r.covered = rep.covered();
    r.verdict = to_string(rep.verdict);
  } catch (const PreconditionError& e) {
    r.verdict = e.what();
  } catch (const InconclusiveError& e) {
    r.verdict = e.what();
  }
  return r;
}

Rational l1_distance(const QVector& a, const QVector& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += abs(a[i] - b[i]);
  return d;
}

}  // namespace

LimitReport verify_limit(const LimitInstance& inst, LiftingOptions options) {
  if (inst.samples.empty()) throw PreconditionError("limit instance needs at least one sample");
  for (const auto& B : inst.samples)
    if (B.dim() != inst.S.dim()) throw DimensionError("sample body dimension differs from S");
  if (inst.limit.dim() != inst.S.dim()) throw DimensionError("limit body dimension differs from S");

  LimitReport report;
  report.hypotheses = true;
  report.all_samples_covered = true;
  for (const auto& B : inst.samples) {
    report.samples.push_back(examine(inst.S, B, options));
    const auto& r = report.samples.back();
    report.hypotheses = report.hypotheses && r.free && r.maximal;
    report.all_samples_covered = report.all_samples_covered && r.covered;
  }
  report.limit = examine(inst.S, inst.limit, options);
  report.hypotheses = report.hypotheses && report.limit.free && report.limit.maximal && report.limit.polytope;
  report.consistent = !(report.hypotheses && report.all_samples_covered) || report.limit.covered;

  report.approached = true;
  for (const auto& target : inst.limit.normals()) {
    std::optional<Rational> previous;
    for (const auto& B : inst.samples) {
      Rational best = l1_distance(B.normal(0), target);
      for (const auto& a : B.normals()) best = std::min(best, l1_distance(a, target));
      if (previous && best > *previous) report.approached = false;
      previous = best;
    }
  }
  return report;
}

}  // namespace liftcover
