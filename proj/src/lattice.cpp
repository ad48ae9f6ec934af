#include "liftcover/lattice.hpp"

#include <algorithm>
#include <functional>

#include "liftcover/errors.hpp"

namespace liftcover {

namespace {

using IntColumn = std::vector<Integer>;

Integer common_denominator(const QMatrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
  return d;
}

// col_a <- x*col_a + y*col_b, col_b <- u*col_a + v*col_b (simultaneously).
void combine(IntColumn& a, IntColumn& b, const Integer& x, const Integer& y, const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer na = x * a[i] + y * b[i];
    Integer nb = u * a[i] + v * b[i];
    a[i] = std::move(na);
    b[i] = std::move(nb);
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

QMatrix lll_transform(const QMatrix& basis, const QMatrix& form) {
  std::size_t k = basis.cols();
  std::vector<QVector> b, u;
  for (std::size_t j = 0; j < k; ++j) {
    b.push_back(basis.column(j));
    QVector e(k);
    e[j] = 1;
    u.push_back(std::move(e));
  }
  auto ip = [&](const QVector& x, const QVector& y) { return dot(x, form * y); };
  std::vector<QVector> star(k);
  std::vector<Rational> norm(k);
  std::vector<std::vector<Rational>> mu(k, std::vector<Rational>(k));
  auto orthogonalize = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      star[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = ip(b[i], star[j]) / norm[j];
        star[i] = star[i] - mu[i][j] * star[j];
      }
      norm[i] = ip(star[i], star[i]);
      if (norm[i] <= 0) throw PreconditionError("lll_transform needs independent columns and a definite form");
    }
  };
  orthogonalize();
  const Rational delta(3, 4);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t j = i; j-- > 0;) {
      Integer r = round_of(mu[i][j]);
      if (r == 0) continue;
      Rational rq(r);
      b[i] = b[i] - rq * b[j];
      u[i] = u[i] - rq * u[j];
      for (std::size_t l = 0; l < j; ++l) mu[i][l] -= rq * mu[j][l];
      mu[i][j] -= rq;
    }
    if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      std::swap(u[i], u[i - 1]);
      orthogonalize();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  return QMatrix::from_columns(u, k);
}

HermiteDecomposition column_hermite_form(const QMatrix& generators) {
  std::size_t n = generators.rows(), m = generators.cols();
  Integer scale = common_denominator(generators);
  std::vector<IntColumn> g(m, IntColumn(n)), u(m, IntColumn(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational scaled = generators(i, j) * scale;
      g[j][i] = scaled.get_num();
    }
    u[j][j] = 1;
  }
  std::size_t piv = 0;
  for (std::size_t row = 0; row < n && piv < m; ++row) {
    for (std::size_t j = piv + 1; j < m; ++j) {
      if (g[j][row] == 0) continue;
      if (g[piv][row] == 0) {
        std::swap(g[piv], g[j]);
        std::swap(u[piv], u[j]);
        continue;
      }
      Integer a = g[piv][row], b = g[j][row], d, x, y;
      mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u1 = -b / d, v1 = a / d;
      combine(g[piv], g[j], x, y, u1, v1);
      combine(u[piv], u[j], x, y, u1, v1);
    }
    if (g[piv][row] == 0) continue;
    if (g[piv][row] < 0) {
      for (auto& e : g[piv]) e = -e;
      for (auto& e : u[piv]) e = -e;
    }
    for (std::size_t i = 0; i < piv; ++i) {
      Integer q = floor_div(g[i][row], g[piv][row]);
      if (q == 0) continue;
      for (std::size_t r = 0; r < n; ++r) g[i][r] -= q * g[piv][r];
      for (std::size_t r = 0; r < m; ++r) u[i][r] -= q * u[piv][r];
    }
    ++piv;
  }
  HermiteDecomposition out;
  out.rank = piv;
  out.hermite = QMatrix(n, piv);
  for (std::size_t j = 0; j < piv; ++j)
    for (std::size_t i = 0; i < n; ++i) out.hermite(i, j) = Rational(g[j][i]) / scale;
  out.unimodular = QMatrix(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) out.unimodular(i, j) = u[j][i];
  return out;
}

Lattice::Lattice(QMatrix basis) : basis_(std::move(basis)) {
  if (liftcover::rank(basis_) != basis_.cols()) throw PreconditionError("lattice basis is linearly dependent");
}

Lattice Lattice::integer(std::size_t n) { return Lattice(QMatrix::identity(n)); }
Lattice Lattice::trivial(std::size_t n) { return Lattice(QMatrix(n, 0)); }

Lattice Lattice::generated_by(const QMatrix& generators) { return Lattice(column_hermite_form(generators).hermite); }

std::optional<QVector> Lattice::coordinates(const QVector& x) const {
  if (x.size() != ambient()) throw DimensionError("point length does not match lattice");
  auto c = solve(basis_, x);
  if (!c) return std::nullopt;
  if (!(basis_ * *c == x)) return std::nullopt;
  for (const auto& e : *c)
    if (!is_integral(e)) return std::nullopt;
  return c;
}

TruncatedAffineLattice::TruncatedAffineLattice(QVector shift, Lattice lattice, HPolyhedron hull, Unchecked)
    : shift_(std::move(shift)), lattice_(std::move(lattice)), hull_(std::move(hull)) {
  if (lattice_.ambient() != shift_.size() || hull_.dim() != shift_.size())
    throw DimensionError("shift, lattice and hull have different dimensions");
}

TruncatedAffineLattice::TruncatedAffineLattice(QVector shift, Lattice lattice, HPolyhedron hull)
    : TruncatedAffineLattice(std::move(shift), std::move(lattice), std::move(hull), Unchecked{}) {
  if (lattice_.rank() != dim()) throw PreconditionError("lattice does not have full rank");
  if (contains(QVector(dim()))) throw PreconditionError("the origin belongs to S");
}

TruncatedAffineLattice TruncatedAffineLattice::unchecked(QVector shift, Lattice lattice, HPolyhedron hull) {
  return TruncatedAffineLattice(std::move(shift), std::move(lattice), std::move(hull), Unchecked{});
}

bool TruncatedAffineLattice::contains(const QVector& x) const {
  return hull_.contains(x) && lattice_.contains(x - shift_);
}

Lattice subspace_lattice_basis(const Subspace& V, const Lattice& L) {
  std::size_t n = L.ambient();
  if (V.ambient() != n) throw DimensionError("subspace and lattice live in different spaces");
  if (V.dim() == 0) return Lattice::trivial(n);
  auto C = V.orthogonal_complement().basis();
  if (C.empty()) return Lattice::generated_by(L.basis());
  QMatrix K = QMatrix::from_rows(C, n) * L.basis();
  auto h = column_hermite_form(K);
  std::size_t k = L.rank();
  QMatrix kernel = h.unimodular.columns(h.rank, k - h.rank);
  Lattice result = Lattice::generated_by(L.basis() * kernel);
  if (result.rank() != V.dim()) throw PreconditionError("subspace is not spanned by lattice points");
  return result;
}

WLattice translation_group(const TruncatedAffineLattice& S) {
  Subspace V = lineality_space(S.hull());
  return WLattice{subspace_lattice_basis(V, S.lattice()), V};
}

namespace {

// Integer points c of {c : A c <= b}, which must be bounded. Visits in
// lexicographic order of c.
void integer_points(const QMatrix& A, const QVector& b, std::vector<Integer>& prefix,
                    const std::function<void(const std::vector<Integer>&)>& emit) {
  std::size_t d = A.cols();
  if (d == 0) {
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (b[i] < 0) return;
    emit(prefix);
    return;
  }
  Integer lo, hi;
  if (d == 1) {
    std::optional<Rational> upper, lower;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      const Rational& a = A(i, 0);
      if (a == 0) {
        if (b[i] < 0) return;
        continue;
      }
      Rational t = b[i] / a;
      if (a > 0) {
        if (!upper || t < *upper) upper = t;
      } else if (!lower || t > *lower) {
        lower = t;
      }
    }
    if (!upper || !lower) throw PreconditionError("enumeration region is unbounded");
    lo = ceil_of(*lower);
    hi = floor_of(*upper);
  } else {
    auto top = maximize(A, b, QVector::unit(d, 0));
    if (top.status == LpStatus::infeasible) return;
    auto bottom = maximize(A, b, -QVector::unit(d, 0));
    if (top.status != LpStatus::optimal || bottom.status != LpStatus::optimal)
      throw PreconditionError("enumeration region is unbounded");
    lo = ceil_of(-bottom.value);
    hi = floor_of(top.value);
  }
  QMatrix rest = A.columns(1, d - 1);
  QVector first = A.column(0);
  for (Integer v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    integer_points(rest, b - Rational(v) * first, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<QVector> enumerate_points(const TruncatedAffineLattice& S, const HPolyhedron& region) {
  if (region.dim() != S.dim()) throw DimensionError("enumeration region has wrong dimension");
  HPolyhedron both = region.intersect(S.hull());
  const QMatrix& L = S.lattice().basis();
  QMatrix A = both.A() * L;
  QVector b = both.b() - both.A() * S.shift();
  std::vector<QVector> out;
  std::vector<Integer> prefix;
  integer_points(A, b, prefix, [&](const std::vector<Integer>& c) {
    QVector coeffs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
    out.push_back(S.shift() + L * coeffs);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVector> enumerate_points(const TruncatedAffineLattice& S, const QVector& lower, const QVector& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return {};
  return enumerate_points(S, HPolyhedron::box(lower, upper));
}

HPolyhedron fundamental_domain(const WLattice& W) {
  std::size_t k = W.carrier.dim();
  if (W.lattice.rank() != k) throw PreconditionError("W does not span its carrier");
  QMatrix carrier = W.carrier.basis_matrix();
  QMatrix G(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto g = solve(carrier, W.lattice.basis().column(j));
    if (!g) throw PreconditionError("W generator outside its carrier");
    G.set_column(j, *g);
  }
  QMatrix Ginv = inverse(G);
  QMatrix A = vstack(-1 * Ginv, Ginv);
  QVector b = concat(QVector(k), QVector::filled(k, 1));
  return HPolyhedron(std::move(A), std::move(b));
}

TruncatedAffineLattice product(const TruncatedAffineLattice& a, const TruncatedAffineLattice& b) {
  return TruncatedAffineLattice::unchecked(concat(a.shift(), b.shift()),
                                           Lattice(block_diagonal(a.lattice().basis(), b.lattice().basis())),
                                           a.hull().product(b.hull()));
}

TruncatedAffineLattice transform_lattice(const TruncatedAffineLattice& S, const QMatrix& M, const QVector& m) {
  if (M.rows() != S.dim() || M.cols() != S.dim() || m.size() != S.dim())
    throw DimensionError("affine map has wrong shape");
  QMatrix Minv = inverse(M);
  HPolyhedron hull = S.hull().preimage(Minv, -(Minv * m));
  return TruncatedAffineLattice::unchecked(M * S.shift() + m, Lattice(M * S.lattice().basis()), std::move(hull));
}

WindowValidation validate_on_window(const TruncatedAffineLattice& S, long radius) {
  std::size_t n = S.dim();
  auto pts = enumerate_points(S, QVector::filled(n, -radius), QVector::filled(n, radius));
  WindowValidation v;
  v.nonempty = !pts.empty();
  HPolyhedron hull = remove_redundant_rows(S.hull());
  if (!v.nonempty) return v;
  for (std::size_t i = 0; i < hull.num_rows(); ++i) {
    QVector a = hull.normal(i);
    bool touched = std::any_of(pts.begin(), pts.end(), [&](const QVector& p) { return dot(a, p) == hull.b()[i]; });
    if (!touched) v.untouched_rows.push_back(i);
  }
  return v;
}

}  // namespace liftcover
