#include "liftcover/sfree.hpp"

#include <algorithm>

#include "liftcover/errors.hpp"

namespace liftcover {

SFreeBody::SFreeBody(std::vector<QVector> normals) : normals_(std::move(normals)) {
  if (normals_.empty()) throw PreconditionError("body needs at least one facet normal");
  std::size_t n = normals_.front().size();
  if (n == 0) throw DimensionError("body normals must have positive length");
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != n) throw DimensionError("normal " + std::to_string(i) + " has the wrong length");
    if (normals_[i].is_zero()) throw PreconditionError("normal " + std::to_string(i) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (normals_[j] == normals_[i])
        throw PreconditionError("normals " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
}

SFreeBody SFreeBody::from_inequalities(const QMatrix& A, const QVector& b) {
  if (A.rows() != b.size()) throw DimensionError("inequality system has inconsistent shapes");
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (b[i] <= 0) throw PreconditionError("origin must be interior: row " + std::to_string(i) + " has b <= 0");
    normals.push_back(Rational(1 / b[i]) * A.row(i));
  }
  return SFreeBody(std::move(normals));
}

HPolyhedron SFreeBody::polyhedron() const {
  return HPolyhedron(QMatrix::from_rows(normals_, dim()), QVector::filled(normals_.size(), 1));
}

bool SFreeBody::contains(const QVector& x) const { return eval_psi(*this, x).value <= 1; }
bool SFreeBody::interior_contains(const QVector& x) const { return eval_psi(*this, x).value < 1; }

PsiValue eval_psi(const SFreeBody& B, const QVector& r) {
  PsiValue out;
  out.value = dot(B.normal(0), r);
  for (std::size_t i = 1; i < B.num_facets(); ++i) {
    Rational v = dot(B.normal(i), r);
    if (v > out.value) {
      out.value = v;
      out.argmax = i;
    }
  }
  return out;
}

std::optional<std::size_t> redundant_facet(const SFreeBody& B) {
  for (std::size_t i = 0; i < B.num_facets(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < B.num_facets(); ++j)
      if (j != i) others.push_back(B.normal(j));
    auto r = maximize(QMatrix::from_rows(others, B.dim()), QVector::filled(others.size(), 1), B.normal(i));
    if (r.status == LpStatus::optimal && r.value <= 1) return i;
  }
  return std::nullopt;
}

Subspace facet_space(const SFreeBody& B) {
  std::vector<QVector> rows;
  for (std::size_t i = 1; i < B.num_facets(); ++i) rows.push_back(B.normal(i) - B.normal(0));
  return nullspace(QMatrix::from_rows(rows, B.dim()));
}

namespace {

void require_same_dim(const SFreeBody& B, const TruncatedAffineLattice& S) {
  if (B.dim() != S.dim())
    throw DimensionError("body lives in dimension " + std::to_string(B.dim()) + " but S in " + std::to_string(S.dim()));
}

// Builds the reduction if it applies. With strict set, inapplicability is
// an error; otherwise it yields nullopt.
std::optional<Reduction> try_reduce(const TruncatedAffineLattice& S, const SFreeBody& B, bool strict) {
  HPolyhedron P = B.polyhedron().intersect(S.hull());
  if (is_empty(P)) return std::nullopt;
  Subspace N = cone_span(recession_cone(P));
  if (N.dim() == 0) return std::nullopt;
  for (std::size_t i = 0; i < B.num_facets(); ++i)
    for (const auto& d : N.basis())
      if (dot(B.normal(i), d) != 0) {
        if (strict)
          throw PreconditionError("recession cone of B intersect conv(S) is not contained in lin(B); B is not maximal S-free");
        return std::nullopt;
      }
  std::optional<Lattice> removed_lattice;
  try {
    removed_lattice = subspace_lattice_basis(N, S.lattice());
  } catch (const PreconditionError&) {
    if (strict) throw;
    return std::nullopt;
  }
  Subspace complement = N.orthogonal_complement();
  QMatrix E = complement.basis_matrix();
  QMatrix coords = inverse(E.transpose() * E) * E.transpose();
  std::vector<QVector> normals;
  for (const auto& a : B.normals()) normals.push_back(E.transpose() * a);
  Lattice reduced_lattice = Lattice::generated_by(coords * S.lattice().basis());
  HPolyhedron reduced_hull = project(S.hull(), complement);
  return Reduction{N,
                   E,
                   coords,
                   *removed_lattice,
                   TruncatedAffineLattice::unchecked(coords * S.shift(), reduced_lattice, reduced_hull),
                   SFreeBody(std::move(normals))};
}

// First point of `pts` in the relative interior of facet i.
std::optional<QVector> facet_witness(const SFreeBody& B, std::size_t i, const std::vector<QVector>& pts) {
  for (const auto& s : pts) {
    if (dot(B.normal(i), s) != 1) continue;
    bool strict = true;
    for (std::size_t j = 0; j < B.num_facets() && strict; ++j)
      if (j != i) strict = dot(B.normal(j), s) < 1;
    if (strict) return s;
  }
  return std::nullopt;
}

std::vector<QVector> points_in(const TruncatedAffineLattice& S, const HPolyhedron& P, const BoundingBox& box,
                               long window) {
  if (box.kind == BoundingBox::Kind::empty) return {};
  if (box.bounded()) return enumerate_points(S, P);
  std::size_t n = S.dim();
  return enumerate_points(S, P.intersect(HPolyhedron::box(QVector::filled(n, -window), QVector::filled(n, window))));
}

}  // namespace

FreeReport is_s_free(const SFreeBody& B, const TruncatedAffineLattice& S, long window) {
  require_same_dim(B, S);
  HPolyhedron P = B.polyhedron().intersect(S.hull());
  BoundingBox box = bounding_box(P);
  FreeReport report;
  for (const auto& s : points_in(S, P, box, window))
    if (B.interior_contains(s)) {
      report.verdict = FreeVerdict::violated;
      report.violation = s;
      return report;
    }
  if (box.kind != BoundingBox::Kind::unbounded) return report;
  auto red = try_reduce(S, B, false);
  if (!red) {
    report.verdict = FreeVerdict::free_on_window;
    return report;
  }
  FreeReport sub = is_s_free(red->body, red->lattice, window);
  report.reduced = true;
  report.verdict = sub.verdict;
  if (sub.violation) report.violation = lift_point(S, *red, *sub.violation);
  return report;
}

MaximalReport is_maximal(const SFreeBody& B, const TruncatedAffineLattice& S, long window) {
  require_same_dim(B, S);
  HPolyhedron P = B.polyhedron().intersect(S.hull());
  BoundingBox box = bounding_box(P);
  auto pts = points_in(S, P, box, window);
  MaximalReport report;
  for (std::size_t i = 0; i < B.num_facets(); ++i) {
    auto w = facet_witness(B, i, pts);
    if (w) {
      report.witnesses.push_back(*w);
      continue;
    }
    if (box.kind != BoundingBox::Kind::unbounded) {
      report.verdict = MaximalVerdict::facet_without_point;
      report.facet = i;
      report.witnesses.clear();
      return report;
    }
    auto red = try_reduce(S, B, false);
    if (!red) {
      report.verdict = MaximalVerdict::facet_without_point;
      report.facet = i;
      report.exact = false;
      report.witnesses.clear();
      return report;
    }
    MaximalReport sub = is_maximal(red->body, red->lattice, window);
    sub.reduced = true;
    for (auto& wit : sub.witnesses) wit = lift_point(S, *red, wit);
    return sub;
  }
  return report;
}

std::optional<Reduction> reduce_unbounded(const TruncatedAffineLattice& S, const SFreeBody& B) {
  require_same_dim(B, S);
  if (!interior_point(B.polyhedron().intersect(S.hull())))
    throw PreconditionError("B intersect conv(S) has empty interior");
  return try_reduce(S, B, true);
}

QVector lift_point(const TruncatedAffineLattice& S, const Reduction& red, const QVector& y) {
  std::size_t k = red.embedding.cols();
  QMatrix G = red.coordinates * S.lattice().basis();
  auto h = column_hermite_form(G);
  auto t = solve(h.hermite, y - red.coordinates * S.shift());
  if (!t || h.rank != k) throw PreconditionError("point is not in the projected lattice");
  for (const auto& e : *t)
    if (!is_integral(e)) throw PreconditionError("point is not in the projected lattice");
  QVector c = h.unimodular.columns(0, k) * *t;
  QVector s0 = S.shift() + S.lattice().basis() * c;
  const QMatrix& Nb = red.removed_lattice.basis();
  std::size_t d = Nb.cols();
  HPolyhedron fiber(S.hull().A() * Nb, S.hull().b() - S.hull().A() * s0);
  if (d == 0) {
    if (fiber.contains(QVector(0))) return s0;
    throw PreconditionError("point has no preimage in S");
  }
  auto start = feasible_point(fiber);
  if (!start) throw PreconditionError("point has no preimage in S");
  HPolyhedron cone = recession_cone(fiber).intersect(HPolyhedron::box(QVector::filled(d, -1), QVector::filled(d, 1)));
  auto dir = interior_point(cone);
  if (!dir) throw PreconditionError("fiber of the reduction is not full-dimensional");
  // Far enough along an interior ray the fiber contains a unit ball around
  // the ray, so rounding lands inside.
  Rational step = 0;
  for (int iter = 0; iter < 64; ++iter) {
    QVector p = *start + step * *dir;
    QVector rounded(d);
    for (std::size_t i = 0; i < d; ++i) rounded[i] = round_of(p[i]);
    if (fiber.contains(rounded)) return s0 + Nb * rounded;
    step = step == 0 ? Rational(1) : Rational(2 * step);
  }
  throw Error("lift_point: no lattice point found along the recession ray");
}

}  // namespace liftcover
