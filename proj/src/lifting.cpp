#include "liftcover/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>

#include "liftcover/errors.hpp"

namespace liftcover {

Spindle spindle(const SFreeBody& B, const QVector& s) {
  if (s.size() != B.dim()) throw DimensionError("spindle anchor has the wrong length");
  auto psi = eval_psi(B, s);
  if (psi.value != 1) throw PreconditionError("spindle anchor " + to_string(s) + " is not on the boundary of B");
  std::size_t k = psi.argmax;
  std::size_t n = B.dim();
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < B.num_facets(); ++i) {
    if (i == k) continue;
    QVector d = B.normal(i) - B.normal(k);
    Rational ds = dot(d, s);
    rows.push_back(d);
    rhs.push_back(0);
    rows.push_back(-d);
    rhs.push_back(-ds);
  }
  return Spindle{s, k, HPolyhedron(QMatrix::from_rows(rows, n), QVector(std::move(rhs)))};
}

bool LiftingRegion::contains(const QVector& r) const {
  return std::any_of(spindles.begin(), spindles.end(), [&](const Spindle& sp) { return sp.region.contains(r); });
}

namespace {

// Irredundant rows in lexicographic order; identifies full-dimensional
// polyhedra uniquely.
std::vector<QVector> canonical_rows(const HPolyhedron& P) {
  HPolyhedron R = remove_redundant_rows(P);
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < R.num_rows(); ++i) rows.push_back(concat(R.normal(i), QVector{R.b()[i]}));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

LiftingRegion lifting_region(const TruncatedAffineLattice& S, const SFreeBody& B) {
  if (S.dim() != B.dim()) throw DimensionError("body and lattice dimensions differ");
  HPolyhedron P = B.polyhedron().intersect(S.hull());
  BoundingBox box = bounding_box(P);
  if (box.kind == BoundingBox::Kind::unbounded)
    throw PreconditionError("B intersect conv(S) is unbounded; reduce it first");
  LiftingRegion region;
  if (box.kind == BoundingBox::Kind::empty) return region;
  std::vector<std::vector<QVector>> keys;
  std::vector<bool> full;
  for (const auto& s : enumerate_points(S, P)) {
    if (eval_psi(B, s).value != 1) continue;
    Spindle sp = spindle(B, s);
    auto key = canonical_rows(sp.region);
    bool is_full = interior_point(sp.region).has_value();
    bool seen = false;
    for (std::size_t j = 0; j < region.spindles.size() && !seen; ++j) {
      if (full[j] != is_full) continue;
      seen = is_full ? keys[j] == key : same_set(region.spindles[j].region, sp.region);
    }
    if (seen) continue;
    region.spindles.push_back(std::move(sp));
    keys.push_back(std::move(key));
    full.push_back(is_full);
  }
  return region;
}

std::string to_string(CoveringVerdict v) {
  switch (v) {
    case CoveringVerdict::covered: return "covered";
    case CoveringVerdict::not_covered: return "not-covered";
    case CoveringVerdict::covered_after_reduction: return "covered-after-reduction";
  }
  return "unknown";
}

namespace {

// Visits integer points of the box [lo, hi] in lexicographic order until
// fn returns false.
bool for_each_box_point(const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                        const std::function<bool(const QVector&)>& fn) {
  std::size_t k = lo.size();
  for (std::size_t i = 0; i < k; ++i)
    if (lo[i] > hi[i]) return true;
  std::vector<Integer> cur = lo;
  for (;;) {
    QVector z(k);
    for (std::size_t i = 0; i < k; ++i) z[i] = cur[i];
    if (!fn(z)) return false;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return true;
    }
    if (k == 0) return true;
  }
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("LIFTCOVER_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

LiftingContext::LiftingContext(TruncatedAffineLattice S, SFreeBody B, LiftingOptions options)
    : S_(std::move(S)), B_(std::move(B)), options_(options) {
  if (S_.dim() != B_.dim()) throw DimensionError("body and lattice dimensions differ");
  if (auto r = redundant_facet(B_)) throw PreconditionError("facet " + std::to_string(*r) + " of B is redundant");
  auto free = is_s_free(B_, S_, options_.window);
  if (free.verdict == FreeVerdict::violated)
    throw PreconditionError("B is not S-free: " + to_string(*free.violation) + " lies in its interior");
  validation_exact_ = free.exact();
  auto maximal = is_maximal(B_, S_, options_.window);
  if (maximal.verdict == MaximalVerdict::facet_without_point) {
    std::string msg = "B is not maximal: facet " + std::to_string(*maximal.facet) + " holds no point of S in its relative interior";
    if (maximal.exact) throw PreconditionError(msg);
    throw InconclusiveError(msg + " within the window");
  }
  w_lattice_ = translation_group(S_).lattice;
  if (B_.is_halfspace()) {
    working_w_ = preimage_w_ = w_lattice_.basis();
    return;
  }
  reduction_ = reduce_unbounded(S_, B_);
  if (reduction_) {
    auto h = column_hermite_form(reduction_->coordinates * w_lattice_.basis());
    working_w_ = h.hermite;
    preimage_w_ = w_lattice_.basis() * h.unimodular.columns(0, h.rank);
  } else {
    working_w_ = preimage_w_ = w_lattice_.basis();
  }
  const SFreeBody& WB = working_body();
  {
    // Reduce the W basis in the gauge metric of B so the pieces stay compact
    // in W coordinates after a skewing affine map.
    std::size_t n = WB.dim();
    QMatrix Q(n, n);
    for (const auto& a : WB.normals()) Q = Q + outer(a, a);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += Q(i, i);
    Q = Q + Rational(trace / Rational(static_cast<long>(100 * n))) * QMatrix::identity(n);
    QMatrix U = lll_transform(working_w_, Q);
    working_w_ = working_w_ * U;
    preimage_w_ = preimage_w_ * U;
  }
  std::size_t n = WB.dim(), k = working_w_.cols();
  region_ = lifting_region(working_lattice(), WB);
  facet_space_ = facet_space(WB);
  QMatrix D = hstack(facet_space_.basis_matrix(), working_w_);
  std::size_t r = rank(D);
  if (r != D.cols()) throw Error("internal: the facet space meets the span of W");
  complementary_ = r == n;
  if (!complementary_) return;
  decompose_ = inverse(D);
  for (std::size_t j = 0; j < region_.spindles.size(); ++j) {
    HPolyhedron piece = remove_redundant_rows(region_.spindles[j].region.preimage(working_w_, QVector(n)));
    auto box = bounding_box(piece);
    if (box.kind != BoundingBox::Kind::bounded) throw Error("internal: spindle slice is not a polytope");
    bool full = interior_point(piece).has_value();
    pieces_.push_back(Piece{j, std::move(piece), box.lower, box.upper, full});
  }
  (void)k;
}

std::optional<QVector> LiftingContext::w_coordinates(const QVector& y) const {
  if (!complementary_) return std::nullopt;
  QVector c = decompose_ * y;
  std::size_t k = working_w_.cols();
  return c.slice(c.size() - k, k);
}

std::optional<QVector> LiftingContext::lifting_translate(const QVector& y) const {
  auto u = w_coordinates(y);
  if (!u) return std::nullopt;
  std::size_t k = u->size();
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& piece : pieces_) {
      if (piece.full != (pass == 0)) continue;
      std::vector<Integer> lo(k), hi(k);
      for (std::size_t i = 0; i < k; ++i) {
        lo[i] = ceil_of(piece.lower[i] - (*u)[i]);
        hi[i] = floor_of(piece.upper[i] - (*u)[i]);
      }
      std::optional<QVector> found;
      for_each_box_point(lo, hi, [&](const QVector& z) {
        if (piece.region.contains(*u + z)) {
          found = z;
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  return std::nullopt;
}

bool LiftingContext::covers_generic(const QVector& y) const {
  std::size_t k = working_w_.cols();
  for (const auto& sp : region_.spindles) {
    if (k == 0) {
      if (sp.region.contains(y)) return true;
      continue;
    }
    HPolyhedron zs(-1 * (sp.region.A() * working_w_), sp.region.b() - sp.region.A() * y);
    auto Z = TruncatedAffineLattice::unchecked(QVector(k), Lattice::integer(k), HPolyhedron(k));
    if (!enumerate_points(Z, zs).empty()) return true;
  }
  return false;
}

bool LiftingContext::covers_working(const QVector& y) const {
  if (B_.is_halfspace()) return true;
  if (complementary_) return lifting_translate(y).has_value();
  return covers_generic(y);
}

bool LiftingContext::covers(const QVector& x) const {
  if (x.size() != S_.dim()) throw DimensionError("point has the wrong length");
  return covers_working(to_working(x));
}

const CoveringReport& LiftingContext::check_covering() const {
  if (!report_) report_ = decide();
  return *report_;
}

QVector LiftingContext::refine_witness(const HPolyhedron& start) const {
  HPolyhedron cell = start;
  std::size_t k = working_w_.cols();
  for (std::size_t round = 0; round < 1000; ++round) {
    auto u = interior_point(cell);
    if (!u) throw Error("internal: surviving cell lost its interior");
    const Piece* hit = nullptr;
    QVector shift;
    for (const auto& piece : pieces_) {
      std::vector<Integer> lo(k), hi(k);
      for (std::size_t i = 0; i < k; ++i) {
        lo[i] = ceil_of(piece.lower[i] - (*u)[i]);
        hi[i] = floor_of(piece.upper[i] - (*u)[i]);
      }
      for_each_box_point(lo, hi, [&](const QVector& z) {
        if (!piece.region.contains(*u + z)) return true;
        hit = &piece;
        shift = z;
        return false;
      });
      if (hit) break;
    }
    if (!hit) return *u;
    if (hit->full) throw Error("internal: surviving cell meets a full-dimensional translate");
    // The translate lies in a hyperplane; keep the side of the cell that
    // contains it, whose interior then avoids it.
    HPolyhedron Q = hit->region.translated(-shift);
    bool cut = false;
    for (std::size_t i = 0; i < Q.num_rows() && !cut; ++i) {
      auto r = maximize(Q, -Q.normal(i));
      if (r.status == LpStatus::optimal && -r.value == Q.b()[i]) {
        cell = cell.with_row(Q.normal(i), Q.b()[i]);
        cut = true;
      }
    }
    if (!cut) throw Error("internal: lower-dimensional piece without an implicit equality");
  }
  throw Error("internal: witness refinement did not terminate");
}

CoveringReport LiftingContext::decide() const {
  CoveringReport report;
  report.validation_exact = validation_exact_;
  if (B_.is_halfspace()) {
    report.halfspace = true;
    report.notes.push_back("single facet: the lifting region is the whole space");
    return report;
  }
  report.reduced = reduction_.has_value();
  report.complementary = complementary_;
  report.spindles = region_.spindles.size();
  const SFreeBody& WB = working_body();
  std::size_t n = WB.dim(), k = working_w_.cols();
  if (reduction_) report.notes.push_back("reduced along a " + std::to_string(reduction_->removed.dim()) + "-dimensional recession space");

  if (!complementary_) {
    std::vector<QVector> span = facet_space_.basis();
    for (std::size_t j = 0; j < k; ++j) span.push_back(working_w_.column(j));
    QVector z = Subspace::span(n, span).orthogonal_complement().basis().front();
    Rational sup = 0;
    for (const auto& sp : region_.spindles) {
      auto r = maximize(sp.region, z);
      if (r.status != LpStatus::optimal) throw Error("internal: spindle unbounded along the complement");
      if (r.value > sup) sup = r.value;
    }
    Rational t = (sup + 1) / dot(z, z);
    QVector y = t * z;
    if (covers_generic(y)) throw Error("internal: complement witness is covered");
    report.verdict = CoveringVerdict::not_covered;
    report.witness_working = y;
    report.witness = from_working(y);
    report.notes.push_back("L_B + span(W) is a proper subspace");
    return report;
  }

  struct Cell {
    HPolyhedron poly;
    QVector lower, upper;
  };
  QVector zero(k), one = QVector::filled(k, 1);
  std::vector<Cell> cells{Cell{HPolyhedron::box(zero, one), zero, one}};
  // Every full-dimensional translate that can meet the unit cube, nearest
  // to the cube centre first: central translates remove large chunks early
  // and keep the cell count low.
  struct Translate {
    std::size_t piece;
    QVector z;
    Rational distance;
  };
  std::vector<Translate> order;
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    const Piece& piece = pieces_[p];
    if (!piece.full) continue;
    std::vector<Integer> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = floor_of(-piece.upper[i]) + 1;
      hi[i] = ceil_of(1 - piece.lower[i]) - 1;
    }
    for_each_box_point(lo, hi, [&](const QVector& z) {
      QVector d = Rational(1, 2) * (piece.lower + piece.upper) + z - Rational(1, 2) * one;
      order.push_back(Translate{p, z, dot(d, d)});
      return true;
    });
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Translate& a, const Translate& b) { return a.distance < b.distance; });

  for (const auto& t : order) {
    if (cells.empty()) break;
    const Piece& piece = pieces_[t.piece];
    const QVector& z = t.z;
    ++report.translates_examined;
    HPolyhedron Q = piece.region.translated(z);
    QVector qlo = piece.lower + z, qhi = piece.upper + z;
    bool changed = false;
    std::vector<Cell> next;
    for (auto& cell : cells) {
      bool apart = false;
      for (std::size_t i = 0; i < k && !apart; ++i) apart = qhi[i] <= cell.lower[i] || cell.upper[i] <= qlo[i];
      if (apart || !interior_point(cell.poly.intersect(Q))) {
        next.push_back(std::move(cell));
        continue;
      }
      changed = true;
      // cell minus Q as disjoint pieces prefix & {q_i >= d_i}, each with a
      // tight box so later translates can be skipped cheaply.
      HPolyhedron prefix = cell.poly;
      for (std::size_t r = 0; r < Q.num_rows(); ++r) {
        HPolyhedron part = prefix.with_row(-Q.normal(r), -Q.b()[r]);
        if (interior_point(part)) {
          part = remove_redundant_rows(part);
          auto box = bounding_box(part);
          next.push_back(Cell{std::move(part), box.lower, box.upper});
        }
        prefix = prefix.with_row(Q.normal(r), Q.b()[r]);
      }
    }
    cells = std::move(next);
    if (changed) report.certificate.push_back(TranslatePair{region_.spindles[piece.spindle].anchor, working_w_ * z});
  }
  if (cells.empty()) {
    report.verdict = reduction_ ? CoveringVerdict::covered_after_reduction : CoveringVerdict::covered;
    return report;
  }
  // Lexicographically first surviving cell, ordered by interior point.
  std::size_t best = 0;
  QVector best_point;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    QVector p = *interior_point(cells[i].poly);
    if (i == 0 || p < best_point) {
      best = i;
      best_point = p;
    }
  }
  QVector u = refine_witness(cells[best].poly);
  QVector y = working_w_ * u;
  if (covers_working(y)) throw Error("internal: witness is covered");
  report.verdict = CoveringVerdict::not_covered;
  report.witness_working = y;
  report.witness = from_working(y);
  return report;
}

LiftingValue LiftingContext::minimal_lifting(const QVector& p) const {
  if (p.size() != S_.dim()) throw DimensionError("point has the wrong length");
  std::size_t n = S_.dim();
  if (B_.is_halfspace()) return LiftingValue{eval_psi(B_, p).value, QVector(n), true};
  if (!check_covering().covered())
    throw PreconditionError("covering property not established; the minimal lifting is not unique");
  auto z = lifting_translate(to_working(p));
  if (!z) throw Error("internal: covered point has no lifting translate");
  QVector w = preimage_w_ * *z;
  Rational value = eval_psi(B_, p + w).value;
  // Independent check on a small window of W_S around the chosen translate.
  const QMatrix& W = w_lattice_.basis();
  std::vector<Integer> lo(W.cols(), -2), hi(W.cols(), 2);
  for_each_box_point(lo, hi, [&](const QVector& c) {
    if (eval_psi(B_, p + w + W * c).value < value) throw Error("internal: lifting cross-check found a smaller value");
    return true;
  });
  return LiftingValue{value, w, true};
}

LiftingValue LiftingContext::lifting_upper_bound(const QVector& p) const {
  if (p.size() != S_.dim()) throw DimensionError("point has the wrong length");
  const QMatrix& W = w_lattice_.basis();
  std::vector<Integer> lo(W.cols(), -options_.window), hi(W.cols(), options_.window);
  LiftingValue best{eval_psi(B_, p).value, QVector(S_.dim()), false};
  for_each_box_point(lo, hi, [&](const QVector& c) {
    QVector w = W * c;
    Rational v = eval_psi(B_, p + w).value;
    if (v < best.value) best = LiftingValue{v, w, false};
    return true;
  });
  return best;
}

namespace {

// Piece rows scaled to integers for the sampling fast path:
// sample i/res + z lies in the piece iff a.i + res * a.z <= res * beta.
struct ScaledPiece {
  std::size_t rows = 0;
  std::vector<std::int64_t> a;     // rows x k
  std::vector<std::int64_t> rhs;   // res * beta
  std::vector<std::int64_t> zmin;  // k x res
  std::vector<std::int64_t> zmax;
};

bool fits(const Integer& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1ul << 40) < 0; }

}  // namespace

OracleResult LiftingContext::grid_oracle(std::size_t resolution) const {
  if (resolution == 0) throw PreconditionError("oracle resolution must be positive");
  OracleResult out;
  out.resolution = resolution;
  if (B_.is_halfspace()) return out;
  std::size_t k = working_w_.cols();

  if (!complementary_) {
    // Sample span(W) and the complement of L_B + span(W) on a coarse grid.
    std::size_t n = working_body().dim();
    std::vector<QVector> span = facet_space_.basis();
    for (std::size_t j = 0; j < k; ++j) span.push_back(working_w_.column(j));
    auto comp = Subspace::span(n, span).orthogonal_complement().basis();
    std::size_t res = std::min<std::size_t>(resolution, 8);
    std::vector<Rational> reach;
    for (const auto& z : comp) {
      Rational sup = 0;
      for (const auto& sp : region_.spindles) {
        auto hi = maximize(sp.region, z), lo = maximize(sp.region, -z);
        sup = std::max({sup, hi.value, lo.value});
      }
      reach.push_back(2 * (sup + 1) / dot(z, z));
    }
    std::size_t dims = k + comp.size();
    std::vector<Integer> lo(dims, 0), hi(dims, static_cast<long>(res) - 1);
    for_each_box_point(lo, hi, [&](const QVector& idx) {
      QVector y(n);
      for (std::size_t j = 0; j < k; ++j) y += Rational(idx[j] / Rational(static_cast<long>(res))) * working_w_.column(j);
      for (std::size_t c = 0; c < comp.size(); ++c) {
        Rational t = reach[c] * (2 * idx[k + c] / Rational(static_cast<long>(res - 1 ? res - 1 : 1)) - 1);
        y += t * comp[c];
      }
      ++out.samples;
      if (covers_generic(y)) return true;
      out.covered = false;
      out.uncovered = from_working(y);
      return false;
    });
    return out;
  }

  std::int64_t res = static_cast<std::int64_t>(resolution);
  std::vector<ScaledPiece> scaled;
  bool fast = true;
  for (const auto& piece : pieces_) {
    ScaledPiece sp;
    sp.rows = piece.region.num_rows();
    for (std::size_t r = 0; r < sp.rows && fast; ++r) {
      QVector row = primitive_integer_vector(concat(piece.region.normal(r), QVector{piece.region.b()[r]}));
      for (std::size_t c = 0; c <= k; ++c) fast = fast && fits(row[c].get_num());
      if (!fast) break;
      for (std::size_t c = 0; c < k; ++c) sp.a.push_back(row[c].get_num().get_si());
      sp.rhs.push_back(res * row[k].get_num().get_si());
    }
    for (std::size_t c = 0; c < k && fast; ++c)
      for (std::int64_t i = 0; i < res; ++i) {
        Rational u(i, res);
        u.canonicalize();
        Integer lo = ceil_of(piece.lower[c] - u), hi = floor_of(piece.upper[c] - u);
        fast = fast && fits(lo) && fits(hi);
        sp.zmin.push_back(lo.get_si());
        sp.zmax.push_back(hi.get_si());
      }
    scaled.push_back(std::move(sp));
  }

  std::size_t total = 1;
  for (std::size_t c = 0; c < k; ++c) total *= resolution;
  out.samples = total;

  auto sample_point = [&](std::size_t index) {
    QVector u(k);
    for (std::size_t c = k; c-- > 0;) {
      u[c] = Rational(static_cast<long>(index % resolution), static_cast<long>(resolution));
      u[c].canonicalize();
      index /= resolution;
    }
    return u;
  };

  auto covered_fast = [&](std::size_t index, std::vector<std::int64_t>& digits, std::vector<std::int64_t>& z) {
    for (std::size_t c = k; c-- > 0;) {
      digits[c] = static_cast<std::int64_t>(index % resolution);
      index /= resolution;
    }
    for (const auto& sp : scaled) {
      bool empty = false;
      for (std::size_t c = 0; c < k; ++c) {
        z[c] = sp.zmin[c * resolution + digits[c]];
        empty = empty || z[c] > sp.zmax[c * resolution + digits[c]];
      }
      if (empty) continue;
      for (;;) {
        bool inside = true;
        for (std::size_t r = 0; r < sp.rows && inside; ++r) {
          __int128 s = 0;
          for (std::size_t c = 0; c < k; ++c)
            s += static_cast<__int128>(sp.a[r * k + c]) * (digits[c] + static_cast<__int128>(res) * z[c]);
          inside = s <= sp.rhs[r];
        }
        if (inside) return true;
        std::size_t c = k;
        bool advanced = false;
        while (c-- > 0) {
          if (z[c] < sp.zmax[c * resolution + digits[c]]) {
            ++z[c];
            for (std::size_t d = c + 1; d < k; ++d) z[d] = sp.zmin[d * resolution + digits[d]];
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
    return false;
  };

  std::atomic<std::size_t> first_bad{total};
  unsigned workers = std::max(1u, std::min<unsigned>(thread_count(options_.threads), static_cast<unsigned>(total)));
  auto work = [&](unsigned id) {
    std::vector<std::int64_t> digits(k), z(k);
    std::size_t begin = total * id / workers, end = total * (id + 1) / workers;
    for (std::size_t idx = begin; idx < end; ++idx) {
      if (idx >= first_bad.load(std::memory_order_relaxed)) return;
      bool ok = fast ? covered_fast(idx, digits, z) : covers_working(working_w_ * sample_point(idx));
      if (!ok) {
        std::size_t cur = first_bad.load();
        while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  if (first_bad.load() < total) {
    out.covered = false;
    out.uncovered = from_working(working_w_ * sample_point(first_bad.load()));
  }
  return out;
}

CoveringReport check_covering(const TruncatedAffineLattice& S, const SFreeBody& B, LiftingOptions options) {
  return LiftingContext(S, B, options).check_covering();
}

LiftingValue minimal_lifting(const TruncatedAffineLattice& S, const SFreeBody& B, const QVector& p) {
  return LiftingContext(S, B).minimal_lifting(p);
}

OracleResult grid_oracle(const TruncatedAffineLattice& S, const SFreeBody& B, std::size_t resolution) {
  return LiftingContext(S, B).grid_oracle(resolution);
}

}  // namespace liftcover
