#include "liftcover/gallery.hpp"

#include "liftcover/errors.hpp"

namespace liftcover::gallery {

namespace {

const std::vector<long> kSamples = {2, 4, 8, 16};

QVector halves(std::size_t n) { return QVector::filled(n, make_rational(1, 2)); }

TruncatedAffineLattice shifted_integers(const QVector& shift) {
  return TruncatedAffineLattice(shift, Lattice::integer(shift.size()), HPolyhedron(shift.size()));
}

// Crosspolytope normals without the constraint check: coproduct of the unit
// intervals [a_j, b_j] / (b_j - a_j) with accumulated weights.
SFreeBody cross_body(const QVector& a, const QVector& b) {
  auto interval = [&](std::size_t j) {
    Rational len = b[j] - a[j];
    return SFreeBody({QVector{Rational(len / b[j])}, QVector{Rational(len / a[j])}});
  };
  SFreeBody body = interval(0);
  Rational weight = 1 / (b[0] - a[0]);
  for (std::size_t j = 1; j < a.size(); ++j) {
    Rational next = weight + 1 / (b[j] - a[j]);
    body = coproduct(body, interval(j), weight / next);
    weight = next;
  }
  return body;
}

void check_cross_parameters(const QVector& a, const QVector& b) {
  if (a.size() != b.size() || a.size() == 0) throw DimensionError("crosspolytope parameters must have equal positive length");
  Rational sum = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] < 0 && 0 < b[j])) throw PreconditionError("crosspolytope needs a_j < 0 < b_j");
    sum += 1 / (b[j] - a[j]);
  }
  if (sum != 1) throw PreconditionError("crosspolytope needs sum 1/(b_j - a_j) = 1, got " + format_rational(sum));
}

}  // namespace

GalleryEntry split(std::size_t n, std::size_t axis) {
  if (n == 0 || axis >= n) throw PreconditionError("split needs n >= 1 and axis < n");
  QVector shift(n), e = QVector::unit(n, axis);
  shift[axis] = make_rational(1, 2);
  return {"split-" + std::to_string(n), shifted_integers(shift), SFreeBody({2 * e, -2 * e}), true,
          "split disjunction on one coordinate"};
}

GalleryEntry crosspolytope(const QVector& a, const QVector& b) {
  check_cross_parameters(a, b);
  QVector f(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) f[j] = b[j] / (b[j] - a[j]);
  return {"cross-" + std::to_string(a.size()), shifted_integers(f), cross_body(a, b), true,
          "iterated coproduct of intervals"};
}

GalleryEntry simplex_type1(const QVector& b) {
  std::size_t n = b.size();
  if (n == 0) throw DimensionError("simplex needs positive dimension");
  Rational sum = 0;
  for (const auto& bj : b) {
    if (bj <= 0) throw PreconditionError("simplex needs b_j > 0");
    sum += 1 / bj;
  }
  if (sum != 1) throw PreconditionError("simplex needs sum 1/b_j = 1, got " + format_rational(sum));
  std::vector<QVector> normals;
  for (std::size_t j = 0; j < n; ++j) normals.push_back(-2 * QVector::unit(n, j));
  QVector top(n);
  for (std::size_t j = 0; j < n; ++j) top[j] = 2 / b[j];
  normals.push_back(top);
  return {"simplex-" + std::to_string(n), shifted_integers(-1 * halves(n)), SFreeBody(std::move(normals)), true,
          "simplex with a vertex at an integer point, translated by -1/2"};
}

LimitInstance facet_family_limit(std::size_t k) {
  if (k < 2) throw PreconditionError("facet family needs k >= 2");
  Rational beta(static_cast<long>(k));
  std::vector<SFreeBody> samples;
  for (long t : kSamples) {
    Rational eps = make_rational(1, t);
    QVector a = QVector::filled(k, -beta / 2), b = QVector::filled(k, beta / 2);
    a[0] = -eps;
    b[0] = beta - eps;
    // Moves Z^k + b/(b - a) onto Z^k + 1/2.
    QVector u(k);
    u[0] = make_rational(1, 2) - eps / beta;
    samples.push_back(affine_transform(cross_body(a, b), AffineMap::translation(-1 * u)));
  }
  // Limit: x_1 >= 0 and the facets with positive first normal entry,
  // shifted by u = (1/2, 0, ..., 0).
  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  std::size_t m = k - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    QVector n(k);
    n[0] = 1 / beta;
    for (std::size_t j = 0; j < m; ++j) n[j + 1] = ((mask >> (m - 1 - j)) & 1 ? -2 : 2) / beta;
    rows.push_back(n);
    rhs.push_back(1 - n[0] / 2);
  }
  rows.push_back(-1 * QVector::unit(k, 0));
  rhs.push_back(make_rational(1, 2));
  SFreeBody limit = SFreeBody::from_inequalities(QMatrix::from_rows(rows, k), QVector(std::move(rhs)));
  return {shifted_integers(halves(k)), std::move(samples), std::move(limit)};
}

GalleryEntry facet_family(std::size_t k) {
  LimitInstance inst = facet_family_limit(k);
  return {"family-" + std::to_string(k), inst.S, inst.limit, true,
          "limit of crosspolytopes with one collapsing interval"};
}

LimitInstance simplex_limit(std::size_t n) {
  if (n < 2) throw PreconditionError("simplex limit needs n >= 2");
  Rational len(static_cast<long>(n));
  std::vector<SFreeBody> samples;
  for (long t : kSamples) {
    Rational eps = make_rational(1, t);
    QVector a = QVector::filled(n, -eps), b = QVector::filled(n, len - eps);
    QVector u = QVector::filled(n, make_rational(1, 2) - eps / len);
    samples.push_back(affine_transform(cross_body(a, b), AffineMap::translation(-1 * u)));
  }
  GalleryEntry limit = simplex_type1(QVector::filled(n, len));
  return {shifted_integers(halves(n)), std::move(samples), limit.B};
}

GalleryEntry cone2d(const QVector& apex, const QVector& r1, const QVector& r2, const TruncatedAffineLattice& S) {
  if (apex.size() != 2 || r1.size() != 2 || r2.size() != 2 || S.dim() != 2) throw DimensionError("cone2d lives in the plane");
  if (r1[0] * r2[1] - r1[1] * r2[0] == 0) throw PreconditionError("cone rays must be linearly independent");
  std::vector<QVector> normals;
  for (const auto* pair : {&r1, &r2}) {
    const QVector& r = *pair;
    const QVector& other = pair == &r1 ? r2 : r1;
    QVector n{-r[1], r[0]};
    if (dot(n, other) > 0) n = -1 * n;
    Rational level = dot(n, apex);
    if (level <= 0) throw PreconditionError("origin is not in the interior of the cone");
    normals.push_back(Rational(1 / level) * n);
  }
  SFreeBody B(std::move(normals));
  if (is_s_free(B, S, 5).verdict == FreeVerdict::violated) throw PreconditionError("cone is not S-free");
  if (is_maximal(B, S, 5).verdict != MaximalVerdict::maximal) throw PreconditionError("cone is not maximal S-free");
  return {"cone-2", S, std::move(B), true, "translated cone over a lattice cut by a halfspace"};
}

GalleryEntry cone2d() {
  TruncatedAffineLattice S(halves(2), Lattice::integer(2),
                           HPolyhedron(QMatrix::from_rows({QVector{0, -1}}, 2), QVector{make_rational(1, 2)}));
  return cone2d(QVector{0, make_rational(1, 2)}, QVector{-1, -2}, QVector{1, -2}, S);
}

std::vector<GalleryEntry> all() {
  std::vector<GalleryEntry> out;
  out.push_back(split(1));
  GalleryEntry slab = split(2, 0);
  out.push_back(slab);
  out.push_back(crosspolytope(QVector{-1, -1}, QVector{1, 1}));
  Rational h = make_rational(3, 2);
  out.push_back(crosspolytope(QVector{-h, -h, -h}, QVector{h, h, h}));
  out.push_back(simplex_type1(QVector{2, 2}));
  out.push_back(simplex_type1(QVector{3, 3, 3}));
  for (std::size_t k = 2; k <= 4; ++k) out.push_back(facet_family(k));
  GalleryEntry cone = cone2d();
  out.push_back(cone);
  GalleryEntry interval = split(1);
  out.push_back({"cone-split-3", product(cone.S, interval.S), coproduct(cone.B, interval.B, make_rational(1, 2)), true,
                 "coproduct of the cone with a split"});
  return out;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : all()) out.push_back(e.name);
  return out;
}

GalleryEntry named(const std::string& name) {
  for (auto& e : all())
    if (e.name == name) return e;
  throw PreconditionError("unknown gallery entry '" + name + "'");
}

}  // namespace liftcover::gallery
