#ifndef LIFTCOVER_OPS_HPP
#define LIFTCOVER_OPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "liftcover/lifting.hpp"

namespace liftcover {

// x -> M x + m with M invertible.
struct AffineMap {
  QMatrix M;
  QVector m;

  AffineMap(QMatrix M, QVector m);
  static AffineMap identity(std::size_t n);
  static AffineMap translation(const QVector& m);

  std::size_t dim() const { return m.size(); }
  QVector operator()(const QVector& x) const { return M * x + m; }
  AffineMap inverse() const;
};

// Image of (S, B) under T. The new normals are M^{-T} a / (1 + a . M^{-1} m);
// throws PreconditionError naming the first facet whose denominator is not
// positive, i.e. when T(B) does not contain the origin in its interior.
std::pair<TruncatedAffineLattice, SFreeBody> affine_transform(const TruncatedAffineLattice& S, const SFreeBody& B,
                                                              const AffineMap& T);
SFreeBody affine_transform(const SFreeBody& B, const AffineMap& T);

// T_i(r) = M r + (a_i . r) m.
QVector facet_map(const SFreeBody& B, const AffineMap& T, std::size_t i, const QVector& r);

// B1/mu <> B2/(1 - mu): normals (mu a1_i, (1 - mu) a2_j), i-major.
SFreeBody coproduct(const SFreeBody& B1, const SFreeBody& B2, const Rational& mu);

struct LimitInstance {
  TruncatedAffineLattice S;
  std::vector<SFreeBody> samples;
  SFreeBody limit;
};

struct LimitBodyReport {
  bool free = false;
  bool exact = false;  // freeness decided without window
  bool maximal = false;
  bool polytope = false;  // B intersect conv(S) bounded
  bool covered = false;
  std::string verdict;  // covering verdict, or the reason it was not computed
  std::size_t facets = 0;
};

struct LimitReport {
  std::vector<LimitBodyReport> samples;
  LimitBodyReport limit;
  bool hypotheses = false;   // every body maximal S-free; limit meets conv(S) in a polytope
  bool all_samples_covered = false;
  bool consistent = false;   // hypotheses and all samples covered imply limit covered
  bool approached = false;   // every limit normal is approached monotonically by sample normals
};

LimitReport verify_limit(const LimitInstance& inst, LiftingOptions options = {});

}  // namespace liftcover

#endif
