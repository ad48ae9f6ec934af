#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "liftcover/errors.hpp"
#include "liftcover/polyhedron.hpp"

using namespace liftcover;
using testing::mat;
using testing::q;
using testing::vec;

namespace {

// Oracle for bounded LPs: best feasible vertex over all n-subsets of rows.
std::optional<Rational> vertex_oracle(const QMatrix& A, const QVector& b, const QVector& c) {
  std::size_t m = A.rows(), n = A.cols();
  std::optional<Rational> best;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<QVector> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        rows.push_back(A.row(i));
        rhs.push_back(b[i]);
      }
    QMatrix sub = QMatrix::from_rows(rows, n);
    if (rank(sub) < n) continue;
    auto x = solve(sub, QVector(rhs));
    if (!x || !HPolyhedron(A, b).contains(*x)) continue;
    Rational v = dot(c, *x);
    if (!best || v > *best) best = v;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

HPolyhedron triangle() {
  // conv{(0,0), (2,0), (0,2)}
  return HPolyhedron(mat({{"-1", "0"}, {"0", "-1"}, {"1", "1"}}), vec({"0", "0", "2"}));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-2")) == "-2");
  CHECK(format_rational(parse_rational(" 0/7 ")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK(floor_of(q(-1, 2)) == -1);
  CHECK(ceil_of(q(-1, 2)) == 0);
  CHECK(round_of(q(5, 2)) == 3);
}

TEST_CASE("solve returns the exact solution of a diagonal system") {
  auto x = solve(mat({{"2", "0"}, {"0", "3"}}), vec({"1", "1"}));
  REQUIRE(x);
  CHECK(*x == vec({"1/2", "1/3"}));
  CHECK_FALSE(solve(mat({{"1", "1"}, {"2", "2"}}), vec({"1", "3"})));
  CHECK_THROWS_AS(solve(mat({{"1", "1"}}), vec({"1", "2"})), DimensionError);
}

TEST_CASE("inverse and determinant agree") {
  QMatrix M = mat({{"2", "1"}, {"1", "1"}});
  CHECK(determinant(M) == 1);
  CHECK(M * inverse(M) == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat({{"1", "2"}, {"2", "4"}})), PreconditionError);
}

TEST_CASE("nullspace has the right dimension and annihilates A") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 3, c = 2 + trial % 4;
    QMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = testing::random_rational(rng, 3, 2);
    Subspace N = nullspace(A);
    CHECK(N.dim() == c - rank(A));
    for (const auto& v : N.basis()) CHECK((A * v).is_zero());
  }
}

TEST_CASE("subspace span is canonical") {
  auto a = Subspace::span(3, {vec({"1", "1", "0"}), vec({"0", "1", "1"})});
  auto b = Subspace::span(3, {vec({"2", "3", "1"}), vec({"1", "0", "-1"})});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
  CHECK(a.orthogonal_complement().basis() == std::vector<QVector>{vec({"1", "-1", "1"})});
}

TEST_CASE("LP agrees with the vertex oracle on random bounded problems") {
  std::mt19937 rng(11);
  int infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 2, m = 3 + trial % 4;
    QMatrix A(m + 2 * n, n);
    QVector b(m + 2 * n), c(n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) A(i, j) = testing::random_rational(rng, 4, 3);
      b[i] = testing::random_rational(rng, 3, 2);
    }
    for (std::size_t j = 0; j < n; ++j) {
      A(m + 2 * j, j) = 1;
      b[m + 2 * j] = 5;
      A(m + 2 * j + 1, j) = -1;
      b[m + 2 * j + 1] = 5;
      c[j] = testing::random_rational(rng, 3, 2);
    }
    auto r = maximize(A, b, c);
    auto oracle = vertex_oracle(A, b, c);
    if (!oracle) {
      CHECK(r.status == LpStatus::infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == *oracle);
    CHECK(HPolyhedron(A, b).contains(r.point));
    CHECK(dot(c, r.point) == r.value);
  }
  CHECK(infeasible > 0);
}

TEST_CASE("LP detects unbounded and infeasible problems") {
  QMatrix A = mat({{"-1", "0"}, {"0", "-1"}});
  CHECK(maximize(A, vec({"0", "0"}), vec({"1", "0"})).status == LpStatus::unbounded);
  CHECK(maximize(A, vec({"0", "0"}), vec({"-1", "-1"})).value == 0);
  QMatrix B = mat({{"1"}, {"-1"}});
  CHECK(maximize(B, vec({"-1", "0"}), vec({"0"})).status == LpStatus::infeasible);
  CHECK(maximize(QMatrix(0, 2), QVector(0), vec({"0", "0"})).status == LpStatus::optimal);
  CHECK(maximize(QMatrix(0, 2), QVector(0), vec({"0", "1"})).status == LpStatus::unbounded);
}

TEST_CASE("degenerate LP terminates") {
  // Many constraints through the optimal vertex.
  QMatrix A = mat({{"1", "0"}, {"0", "1"}, {"1", "1"}, {"2", "1"}, {"1", "2"}, {"-1", "0"}, {"0", "-1"}});
  QVector b = vec({"1", "1", "2", "3", "3", "0", "0"});
  auto r = maximize(A, b, vec({"1", "1"}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
  CHECK(r.point == vec({"1", "1"}));
}

TEST_CASE("interior point") {
  auto p = interior_point(triangle());
  REQUIRE(p);
  CHECK(triangle().strictly_contains(*p));
  HPolyhedron segment(mat({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}}), vec({"1", "0", "0", "0"}));
  CHECK_FALSE(interior_point(segment));
  CHECK_FALSE(interior_point(HPolyhedron::empty(2)));
  CHECK(interior_point(HPolyhedron(2)));
}

TEST_CASE("bounding box of a triangle") {
  auto box = bounding_box(triangle());
  REQUIRE(box.bounded());
  CHECK(box.lower == vec({"0", "0"}));
  CHECK(box.upper == vec({"2", "2"}));
  CHECK(bounding_box(HPolyhedron::empty(2)).kind == BoundingBox::Kind::empty);
  CHECK(bounding_box(HPolyhedron(mat({{"1", "0"}}), vec({"1"}))).kind == BoundingBox::Kind::unbounded);
}

TEST_CASE("lineality and recession cone") {
  HPolyhedron slab(mat({{"1", "0"}, {"-1", "0"}}), vec({"1", "1"}));
  CHECK(lineality_space(slab) == Subspace::span(2, {vec({"0", "1"})}));
  HPolyhedron quadrant(mat({{"-1", "0"}, {"0", "-1"}}), vec({"3", "1"}));
  CHECK(cone_span(recession_cone(quadrant)) == Subspace::full(2));
  HPolyhedron ray(mat({{"-1", "0"}, {"0", "-1"}, {"0", "1"}}), vec({"0", "0", "0"}));
  CHECK(cone_span(ray) == Subspace::span(2, {vec({"1", "0"})}));
  CHECK(cone_span(recession_cone(triangle())).dim() == 0);
}

TEST_CASE("redundant rows are removed") {
  HPolyhedron P(mat({{"1", "0"}, {"2", "0"}, {"0", "1"}, {"1", "1"}, {"-1", "0"}, {"0", "-1"}}),
                vec({"1", "2", "1", "5", "0", "0"}));
  HPolyhedron R = remove_redundant_rows(P);
  CHECK(R.num_rows() == 4);
  CHECK(same_set(P, R));
  CHECK(remove_redundant_rows(HPolyhedron(mat({{"1"}, {"-1"}}), vec({"0", "-1"}))).num_rows() == 1);
}

TEST_CASE("projection of a triangle and a prism") {
  auto onto_x = project(triangle(), Subspace::span(2, {vec({"1", "0"})}));
  CHECK(same_set(onto_x, HPolyhedron(mat({{"1"}, {"-1"}}), vec({"2", "0"}))));
  // Projection along the diagonal direction (1,1): coordinate y = (x1 + x2)/2
  // relative to basis vector (1,1).
  auto diag = project(triangle(), Subspace(2, {vec({"1", "1"})}));
  CHECK(same_set(diag, HPolyhedron(mat({{"1"}, {"-1"}}), vec({"1", "0"}))));
  HPolyhedron prism = HPolyhedron::box(vec({"0", "0", "-1"}), vec({"1", "1", "1"}))
                          .with_row(vec({"1", "1", "1"}), q("2"));
  auto top = project(prism, Subspace::span(3, {vec({"1", "0", "0"}), vec({"0", "1", "0"})}));
  CHECK(same_set(top, HPolyhedron::box(vec({"0", "0"}), vec({"1", "1"}))));
}

TEST_CASE("projection contains the projection of sampled points") {
  std::mt19937 rng(3);
  HPolyhedron P = HPolyhedron::box(vec({"-1", "-1", "-1"}), vec({"1", "1", "1"}))
                      .with_row(vec({"1", "2", "-1"}), q("1"))
                      .with_row(vec({"-2", "1", "1"}), q("3/2"));
  Subspace V(3, {vec({"1", "0", "1"}), vec({"0", "1", "0"})});
  auto proj = project(P, V);
  QMatrix Vm = V.basis_matrix();
  QMatrix coords = inverse(Vm.transpose() * Vm) * Vm.transpose();
  int inside = 0;
  for (int i = 0; i < 200; ++i) {
    QVector x{testing::random_rational(rng, 4, 4), testing::random_rational(rng, 4, 4),
              testing::random_rational(rng, 4, 4)};
    if (!P.contains(x)) continue;
    ++inside;
    CHECK(proj.contains(coords * x));
  }
  CHECK(inside > 10);
}

TEST_CASE("subtracting an interval from an interval") {
  HPolyhedron P = HPolyhedron::box(vec({"0"}), vec({"1"}));
  HPolyhedron Q(mat({{"-1"}, {"1"}}), vec({"-1/4", "1/2"}));
  auto cells = subtract(P, Q);
  REQUIRE(cells.size() == 2);
  CHECK(same_set(cells[0], HPolyhedron::box(vec({"0"}), vec({"1/4"}))));
  CHECK(same_set(cells[1], HPolyhedron::box(vec({"1/2"}), vec({"1"}))));
}

TEST_CASE("subtract edge cases") {
  HPolyhedron square = HPolyhedron::box(vec({"0", "0"}), vec({"1", "1"}));
  CHECK(subtract(square, HPolyhedron::box(vec({"-1", "-1"}), vec({"2", "2"}))).empty());
  auto untouched = subtract(square, HPolyhedron::box(vec({"2", "2"}), vec({"3", "3"})));
  REQUIRE(untouched.size() == 1);
  CHECK(same_set(untouched[0], square));
  auto corner = subtract(square, HPolyhedron(mat({{"1", "1"}}), vec({"1"})));
  REQUIRE(corner.size() == 1);
  HPolyhedron upper_triangle(mat({{"1", "0"}, {"0", "1"}, {"-1", "-1"}}), vec({"1", "1", "-1"}));
  CHECK(same_set(corner[0], upper_triangle));
  CHECK_THROWS_AS(subtract(HPolyhedron(mat({{"1", "0"}}), vec({"1"})), square), PreconditionError);
}

TEST_CASE("subtract: pieces tile P minus Q on a sample grid") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    HPolyhedron P = HPolyhedron::box(vec({"0", "0"}), vec({"1", "1"}));
    HPolyhedron Q = HPolyhedron::box(vec({"-1/2", "-1/2"}), vec({"3/2", "3/2"}));
    for (int r = 0; r < 3; ++r) {
      QVector a{testing::random_rational(rng, 3, 1), testing::random_rational(rng, 3, 1)};
      Q = Q.with_row(a, dot(a, vec({"1/2", "1/2"})) + testing::random_rational(rng, 1, 4));
    }
    auto cells = subtract(P, Q);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(is_subset(cells[i], P));
      CHECK_FALSE(interior_point(cells[i].intersect(Q)));
      for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK_FALSE(interior_point(cells[i].intersect(cells[j])));
    }
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j) {
        QVector x{q(i, 12), q(j, 12)};
        bool covered = Q.contains(x);
        for (const auto& c : cells) covered = covered || c.contains(x);
        CHECK(covered);
      }
  }
}
