#ifndef LIFTCOVER_TEST_HELPERS_HPP
#define LIFTCOVER_TEST_HELPERS_HPP

#include <initializer_list>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftcover/sfree.hpp"

namespace testing {

inline liftcover::Rational q(const char* text) { return liftcover::parse_rational(text); }
inline liftcover::Rational q(long num, long den = 1) { return liftcover::make_rational(num, den); }

inline liftcover::QVector vec(std::initializer_list<const char*> entries) {
  std::vector<liftcover::Rational> out;
  for (auto e : entries) out.push_back(q(e));
  return liftcover::QVector(std::move(out));
}

inline liftcover::QMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<liftcover::QVector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    out.push_back(vec(r));
    cols = out.back().size();
  }
  return liftcover::QMatrix::from_rows(out, cols);
}

inline liftcover::Rational random_rational(std::mt19937& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return q(num(rng), den(rng));
}


// Polygon whose i-th edge passes through the integer point pts[i] with a
// random slope, as a body around a random rational interior point f, with
// S = Z^2 - f. Returns nothing when the draw is unusable (unbounded, not
// containing f, redundant edges). Freeness and maximality are left to the
// caller.
inline std::optional<std::pair<liftcover::SFreeBody, liftcover::TruncatedAffineLattice>> random_edge_polygon(
    std::mt19937& rng, const std::vector<liftcover::QVector>& pts) {
  using namespace liftcover;
  QVector centre(2);
  for (const auto& p : pts) centre += Rational(1, static_cast<long>(pts.size())) * p;
  std::uniform_int_distribution<int> den(2, 7), off(-3, 3);
  int d = den(rng);
  QVector f{centre[0] + make_rational(off(rng), d), centre[1] + make_rational(off(rng), d)};
  if (is_integral(f[0]) && is_integral(f[1])) return std::nullopt;
  std::vector<QVector> normals;
  for (const auto& p : pts) {
    QVector n{random_rational(rng, 5, 3), random_rational(rng, 5, 3)};
    Rational slack = dot(n, p - f);
    if (slack <= 0 || dot(n, p - centre) <= 0) return std::nullopt;
    normals.push_back(Rational(1 / slack) * n);
  }
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (normals[i] == normals[j]) return std::nullopt;
  SFreeBody B(normals);
  if (!bounding_box(B.polyhedron()).bounded() || redundant_facet(B)) return std::nullopt;
  return std::make_pair(B, TruncatedAffineLattice(-1 * f, Lattice::integer(2), HPolyhedron(2)));
}

// Random point of a nonempty polytope: a positive combination of LP optima
// for random objectives.
inline liftcover::QVector sample_in(const liftcover::HPolyhedron& P, std::mt19937& rng) {
  using namespace liftcover;
  std::size_t n = P.dim();
  std::uniform_int_distribution<int> coef(-5, 5), weight(1, 6);
  QVector sum(n);
  Rational total = 0;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    QVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = coef(rng);
    auto r = maximize(P, c);
    if (r.status != LpStatus::optimal) throw std::runtime_error("sample_in needs a nonempty polytope");
    Rational w = weight(rng);
    sum += w * r.point;
    total += w;
  }
  return Rational(1 / total) * sum;
}

// Random n x n matrix with entries in [-3, 3]; unimodular ones are products
// of elementary integer matrices, clamped by retrying.
inline liftcover::QMatrix random_matrix(std::mt19937& rng, std::size_t n, bool unimodular) {
  using namespace liftcover;
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  for (;;) {
    QMatrix M = QMatrix::identity(n);
    if (unimodular) {
      for (int step = 0; step < 3 && n > 1; ++step) {
        std::size_t i = index(rng), j = index(rng);
        if (i == j) continue;
        int f = entry(rng) % 2;
        for (std::size_t c = 0; c < n; ++c) M(i, c) += f * M(j, c);
      }
      if (entry(rng) < 0) {
        for (std::size_t c = 0; c < n; ++c) M(0, c) = -M(0, c);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
    }
    bool small = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) small = small && abs(M(i, j)) <= 3;
    if (small && determinant(M) != 0) return M;
  }
}

}  // namespace testing

#endif
