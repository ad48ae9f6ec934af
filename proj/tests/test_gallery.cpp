#include <doctest.h>

#include "helpers.hpp"
#include "liftcover/errors.hpp"
#include "liftcover/gallery.hpp"

using namespace liftcover;
using testing::mat;
using testing::q;
using testing::vec;

namespace {

std::vector<QVector> sorted(std::vector<QVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("every entry is maximal S-free with the expected covering verdict") {
  for (const auto& e : gallery::all()) {
    CAPTURE(e.name);
    CHECK_FALSE(redundant_facet(e.B));
    auto free = is_s_free(e.B, e.S, 5);
    CHECK(free.verdict == FreeVerdict::free);
    CHECK(is_maximal(e.B, e.S, 5).verdict == MaximalVerdict::maximal);
    auto rep = check_covering(e.S, e.B);
    CHECK(rep.covered() == e.expected_covering);
  }
  CHECK(gallery::names().size() == 11);
  CHECK(gallery::named("cross-2").B.num_facets() == 4);
  CHECK_THROWS_AS(gallery::named("nothing"), PreconditionError);
}

TEST_CASE("split entries") {
  auto one = gallery::split(1);
  CHECK(one.B.normals() == std::vector<QVector>{vec({"2"}), vec({"-2"})});
  CHECK(one.S.contains(vec({"1/2"})));
  auto slab = gallery::split(2, 1);
  CHECK(slab.B.normal(0) == vec({"0", "2"}));
  auto red = reduce_unbounded(slab.S, slab.B);
  REQUIRE(red);
  CHECK(red->body.dim() == 1);
  CHECK_THROWS_AS(gallery::split(2, 2), PreconditionError);
}

TEST_CASE("crosspolytope equals the explicit sign-pattern description") {
  auto e = gallery::crosspolytope(vec({"-1", "-1"}), vec({"1", "1"}));
  CHECK(sorted(e.B.normals()) == sorted({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "1"}), vec({"-1", "-1"})}));
  CHECK(e.S.shift() == vec({"1/2", "1/2"}));

  QVector a = vec({"-1/2", "-2", "-1"}), b = vec({"1", "2", "5"});
  // 1/(3/2) + 1/4 + 1/6 = 2/3 + 1/4 + 1/6 = 13/12: not admissible.
  CHECK_THROWS_AS(gallery::crosspolytope(a, b), PreconditionError);
  a = vec({"-1", "-2", "-1"});
  b = vec({"2", "4", "1"});
  auto g = gallery::crosspolytope(a, b);
  std::vector<QVector> expected;
  for (int mask = 0; mask < 8; ++mask) {
    QVector n(3);
    for (int j = 0; j < 3; ++j) n[j] = 1 / ((mask >> (2 - j)) & 1 ? a[j] : b[j]);
    expected.push_back(n);
  }
  CHECK(sorted(g.B.normals()) == sorted(expected));
  CHECK(g.S.shift() == vec({"2/3", "2/3", "1/2"}));
  CHECK(check_covering(g.S, g.B).covered());
  CHECK_THROWS_AS(gallery::crosspolytope(vec({"1", "-1"}), vec({"1", "1"})), PreconditionError);
}

TEST_CASE("type 1 simplex") {
  auto e = gallery::simplex_type1(vec({"2", "2"}));
  CHECK(e.B.normals() == std::vector<QVector>{vec({"-2", "0"}), vec({"0", "-2"}), vec({"1", "1"})});
  CHECK(e.S.contains(vec({"-1/2", "3/2"})));
  CHECK_THROWS_AS(gallery::simplex_type1(vec({"2", "3"})), PreconditionError);
  CHECK(gallery::simplex_type1(vec({"3", "3", "3"})).B.num_facets() == 4);
}

TEST_CASE("simplex covering survives random translations") {
  auto e = gallery::simplex_type1(vec({"2", "2"}));
  std::mt19937 rng(5);
  int done = 0;
  while (done < 10) {
    QVector m{testing::random_rational(rng, 1, 5), testing::random_rational(rng, 1, 5)};
    try {
      auto [S, B] = affine_transform(e.S, e.B, AffineMap::translation(m));
      CHECK(check_covering(S, B).covered());
      ++done;
    } catch (const PreconditionError&) {
    }
  }
}

TEST_CASE("facet family counts") {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto inst = gallery::facet_family_limit(k);
    CHECK(inst.samples.size() == 4);
    for (const auto& B : inst.samples) CHECK(B.num_facets() == (std::size_t{1} << k));
    CHECK(inst.limit.num_facets() == (std::size_t{1} << (k - 1)) + 1);
    CHECK_FALSE(redundant_facet(inst.limit));
  }
  CHECK_THROWS_AS(gallery::facet_family(1), PreconditionError);
}

TEST_CASE("limit families verify") {
  for (auto inst : {gallery::simplex_limit(2), gallery::facet_family_limit(2), gallery::facet_family_limit(3)}) {
    auto r = verify_limit(inst);
    CHECK(r.hypotheses);
    CHECK(r.all_samples_covered);
    CHECK(r.limit.covered);
    CHECK(r.consistent);
    CHECK(r.approached);
  }
  auto simplex = gallery::simplex_limit(2);
  CHECK(simplex.samples.front().num_facets() == 4);
  CHECK(simplex.limit.num_facets() == 3);
}

TEST_CASE("cone entries") {
  auto cone = gallery::cone2d();
  CHECK(cone.B.normals() == std::vector<QVector>{vec({"-4", "2"}), vec({"4", "2"})});
  auto rep = check_covering(cone.S, cone.B);
  CHECK(rep.covered());
  TruncatedAffineLattice plain(vec({"1/2", "1/2"}), Lattice::integer(2), HPolyhedron(2));
  CHECK_THROWS_AS(gallery::cone2d(vec({"0", "1/2"}), vec({"-1", "-2"}), vec({"1", "-2"}), plain), PreconditionError);
  CHECK_THROWS_AS(gallery::cone2d(vec({"0", "-1/2"}), vec({"-1", "-2"}), vec({"1", "-2"}), cone.S), PreconditionError);
  auto joined = gallery::named("cone-split-3");
  CHECK(joined.B.num_facets() == 4);
  CHECK(check_covering(joined.S, joined.B).covered());
}
