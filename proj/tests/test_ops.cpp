#include <doctest.h>

#include "helpers.hpp"
#include "liftcover/errors.hpp"
#include "liftcover/ops.hpp"

using namespace liftcover;
using testing::mat;
using testing::q;
using testing::vec;

namespace {

SFreeBody split() { return SFreeBody({vec({"2"}), vec({"-2"})}); }
SFreeBody diamond() {
  return SFreeBody({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "1"}), vec({"-1", "-1"})});
}
TruncatedAffineLattice centered() { return {vec({"1/2", "1/2"}), Lattice::integer(2), HPolyhedron(2)}; }

// Image of P under the invertible linear map L.
HPolyhedron linear_image(const HPolyhedron& P, const QMatrix& L) {
  return P.preimage(inverse(L), QVector(P.dim()));
}

}  // namespace

TEST_CASE("affine transform examples") {
  CHECK(affine_transform(diamond(), AffineMap::identity(2)).normals() == diamond().normals());
  auto shifted = affine_transform(split(), AffineMap::translation(vec({"1/4"})));
  CHECK(shifted.normals() == std::vector<QVector>{vec({"4/3"}), vec({"-4"})});
  auto doubled = affine_transform(diamond(), AffineMap(2 * QMatrix::identity(2), QVector(2)));
  for (std::size_t i = 0; i < 4; ++i) CHECK(doubled.normal(i) == q(1, 2) * diamond().normal(i));
  CHECK_THROWS_AS(affine_transform(split(), AffineMap::translation(vec({"1/2"}))), PreconditionError);
  CHECK_THROWS_AS(AffineMap(mat({{"1", "2"}, {"2", "4"}}), QVector(2)), PreconditionError);
}

TEST_CASE("affine transform is setwise correct") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 10) {
    QMatrix M = testing::random_matrix(rng, 2, checked % 2 == 0);
    QVector m{testing::random_rational(rng, 1, 4), testing::random_rational(rng, 1, 4)};
    AffineMap T(M, m);
    SFreeBody image = diamond();
    try {
      image = affine_transform(diamond(), T);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    for (int k = 0; k < 100; ++k) {
      QVector r{testing::random_rational(rng, 3, 4), testing::random_rational(rng, 3, 4)};
      CHECK(diamond().contains(r) == image.contains(T(r)));
      CHECK(diamond().interior_contains(r) == image.interior_contains(T(r)));
    }
  }
}

TEST_CASE("facet map examples") {
  AffineMap T(mat({{"1"}}), vec({"1/4"}));
  CHECK(facet_map(split(), T, 0, vec({"1/2"})) == vec({"3/4"}));
  CHECK(facet_map(split(), AffineMap(mat({{"3"}}), vec({"0"})), 1, vec({"1/5"})) == vec({"3/5"}));
  CHECK_THROWS_AS(facet_map(split(), T, 2, vec({"0"})), PreconditionError);

  AffineMap U(mat({{"2", "1"}, {"1", "1"}}), vec({"1/10", "-1/20"}));
  SFreeBody image = affine_transform(diamond(), U);
  QVector r = vec({"2/7", "-3/5"});
  for (std::size_t i = 0; i < 4; ++i) CHECK(facet_map(image, U.inverse(), i, facet_map(diamond(), U, i, r)) == r);
}

TEST_CASE("facet maps carry spindles onto spindles") {
  AffineMap T(mat({{"1", "1"}, {"0", "1"}}), vec({"1/3", "1/4"}));
  auto [S2, B2] = affine_transform(centered(), diamond(), T);
  for (const auto& sp : lifting_region(centered(), diamond()).spindles) {
    std::size_t k = sp.facet;
    QMatrix L = T.M + outer(T.m, diamond().normal(k));
    Spindle image = spindle(B2, T(sp.anchor));
    CHECK(image.facet == k);
    CHECK(same_set(linear_image(sp.region, L), image.region));
  }
}

TEST_CASE("transformed lattice keeps the translation group identity") {
  AffineMap T(mat({{"2", "1"}, {"1", "1"}}), vec({"1/3", "0"}));
  auto [S2, B2] = affine_transform(centered(), diamond(), T);
  CHECK(translation_group(S2).lattice == Lattice(T.M * translation_group(centered()).lattice.basis()));
  CHECK(S2.contains(T(vec({"1/2", "-1/2"}))));
}

TEST_CASE("coproduct examples") {
  auto cross = coproduct(split(), split(), q(1, 2));
  CHECK(cross.normals() == diamond().normals());
  SFreeBody triangle({vec({"-2", "0"}), vec({"0", "-2"}), vec({"1", "1"})});
  auto prism = coproduct(triangle, split(), q(2, 3));
  CHECK(prism.num_facets() == 6);
  CHECK(prism.normal(1) == vec({"-4/3", "0", "-2/3"}));
  CHECK_FALSE(redundant_facet(prism));
  CHECK_THROWS_AS(coproduct(split(), split(), q(0L)), PreconditionError);
  CHECK_THROWS_AS(coproduct(split(), split(), q(1L)), PreconditionError);
}

TEST_CASE("coproduct spindles contain products of spindles") {
  TruncatedAffineLattice line(vec({"1/2"}), Lattice::integer(1), HPolyhedron(1));
  for (const char* mu : {"1/4", "1/2", "2/3"}) {
    auto B = coproduct(split(), split(), q(mu));
    for (const auto& s1 : lifting_region(line, split()).spindles)
      for (const auto& s2 : lifting_region(line, split()).spindles) {
        Spindle joint = spindle(B, concat(s1.anchor, s2.anchor));
        CHECK(is_subset(s1.region.product(s2.region), joint.region));
      }
  }
}

TEST_CASE("limit verification on a constant sequence") {
  TruncatedAffineLattice line(vec({"1/2"}), Lattice::integer(1), HPolyhedron(1));
  auto report = verify_limit({line, {split(), split()}, split()});
  CHECK(report.hypotheses);
  CHECK(report.all_samples_covered);
  CHECK(report.limit.covered);
  CHECK(report.consistent);
  CHECK(report.approached);

  // A limit that is not maximal breaks the hypotheses but not consistency.
  auto loose = verify_limit({line, {split()}, SFreeBody({vec({"2"}), vec({"-4"})})});
  CHECK_FALSE(loose.hypotheses);
  CHECK_FALSE(loose.limit.maximal);
  CHECK(loose.consistent);
}
