#ifndef LIFTCOVER_LIFTING_HPP
#define LIFTCOVER_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "liftcover/sfree.hpp"

namespace liftcover {

struct Spindle {
  QVector anchor;     // s in B intersect S
  std::size_t facet;  // lowest k with a_k . s = 1
  HPolyhedron region;
};

// R(s, B) = {r : (a_i - a_k) . r <= 0, (a_i - a_k) . (s - r) <= 0 for all i}.
Spindle spindle(const SFreeBody& B, const QVector& s);

struct LiftingRegion {
  std::vector<Spindle> spindles;  // by anchor, lexicographically; equal regions kept once
  bool contains(const QVector& r) const;
};

// Requires B intersect conv(S) bounded.
LiftingRegion lifting_region(const TruncatedAffineLattice& S, const SFreeBody& B);

enum class CoveringVerdict { covered, not_covered, covered_after_reduction };
std::string to_string(CoveringVerdict v);

// One translate (spindle with this anchor, shifted by w) used by the
// covering certificate. Both live in working coordinates, i.e. after the
// reduction when one was applied.
struct TranslatePair {
  QVector anchor;
  QVector w;
};

struct CoveringReport {
  CoveringVerdict verdict = CoveringVerdict::covered;
  bool halfspace = false;
  bool reduced = false;
  bool complementary = true;     // L_B + span(W) is the whole working space
  bool validation_exact = true;  // S-freeness was proved, not only checked on the window
  std::optional<QVector> witness;          // uncovered point, original coordinates
  std::optional<QVector> witness_working;  // same point, working coordinates
  std::vector<TranslatePair> certificate;
  std::size_t spindles = 0;
  std::size_t translates_examined = 0;
  std::vector<std::string> notes;

  bool covered() const { return verdict != CoveringVerdict::not_covered; }
};

struct LiftingValue {
  Rational value;
  QVector w;  // element of W_S attaining the value
  bool certified = true;
};

struct OracleResult {
  bool covered = true;  // no uncovered sample found
  std::size_t resolution = 0;
  std::size_t samples = 0;
  std::optional<QVector> uncovered;  // first uncovered sample, original coordinates
};

struct LiftingOptions {
  long window = 5;       // search window for window-relative checks
  unsigned threads = 0;  // 0: LIFTCOVER_THREADS, else hardware concurrency
};

// Everything derived from one (S, B) pair: validation, reduction, spindles,
// and the pieces M_j = R(s_j, B) intersect span(W) in W coordinates.
// Construction validates that B is maximal S-free and throws
// PreconditionError otherwise.
class LiftingContext {
 public:
  LiftingContext(TruncatedAffineLattice S, SFreeBody B, LiftingOptions options = {});

  const TruncatedAffineLattice& lattice() const { return S_; }
  const SFreeBody& body() const { return B_; }
  const std::optional<Reduction>& reduction() const { return reduction_; }
  const TruncatedAffineLattice& working_lattice() const { return reduction_ ? reduction_->lattice : S_; }
  const SFreeBody& working_body() const { return reduction_ ? reduction_->body : B_; }
  const LiftingRegion& working_region() const { return region_; }
  // Basis of the working translation lattice (columns) and matching
  // elements of W_S in original coordinates.
  const QMatrix& translations() const { return working_w_; }
  const QMatrix& translation_preimages() const { return preimage_w_; }
  const Lattice& translation_lattice() const { return w_lattice_; }
  bool complementary() const { return complementary_; }
  bool validation_exact() const { return validation_exact_; }

  const CoveringReport& check_covering() const;
  // Exact membership of x in R(S,B) + W_S.
  bool covers(const QVector& x) const;
  LiftingValue minimal_lifting(const QVector& p) const;
  // min psi(p + w) over a window of W_S; an upper bound on the minimal
  // lifting, usable when covering fails.
  LiftingValue lifting_upper_bound(const QVector& p) const;
  OracleResult grid_oracle(std::size_t resolution) const;

  QVector to_working(const QVector& x) const { return reduction_ ? reduction_->reduce(x) : x; }
  QVector from_working(const QVector& y) const { return reduction_ ? reduction_->embed(y) : y; }

 private:
  struct Piece {
    std::size_t spindle;
    HPolyhedron region;  // W coordinates
    QVector lower, upper;
    bool full;
  };

  std::optional<QVector> w_coordinates(const QVector& y) const;
  bool covers_working(const QVector& y) const;
  bool covers_generic(const QVector& y) const;
  std::optional<QVector> lifting_translate(const QVector& y) const;
  CoveringReport decide() const;
  QVector refine_witness(const HPolyhedron& cell) const;

  TruncatedAffineLattice S_;
  SFreeBody B_;
  LiftingOptions options_;
  bool validation_exact_ = true;
  std::optional<Reduction> reduction_;
  LiftingRegion region_;
  Lattice w_lattice_ = Lattice::trivial(0);
  QMatrix working_w_, preimage_w_;
  Subspace facet_space_{0};
  bool complementary_ = true;
  QMatrix decompose_;  // inverse of [L_B basis | W basis] when complementary
  std::vector<Piece> pieces_;
  mutable std::optional<CoveringReport> report_;
};

CoveringReport check_covering(const TruncatedAffineLattice& S, const SFreeBody& B, LiftingOptions options = {});
LiftingValue minimal_lifting(const TruncatedAffineLattice& S, const SFreeBody& B, const QVector& p);
OracleResult grid_oracle(const TruncatedAffineLattice& S, const SFreeBody& B, std::size_t resolution);

}  // namespace liftcover

#endif
