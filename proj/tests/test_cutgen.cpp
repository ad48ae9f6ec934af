#include <doctest.h>

#include "helpers.hpp"
#include "liftcover/cutgen.hpp"
#include "liftcover/errors.hpp"
#include "liftcover/gallery.hpp"

using namespace liftcover;
using testing::mat;
using testing::q;
using testing::vec;

namespace {

TruncatedAffineLattice half_line() { return {vec({"1/2"}), Lattice::integer(1), HPolyhedron(1)}; }
SFreeBody split() { return SFreeBody({vec({"2"}), vec({"-2"})}); }

}  // namespace

TEST_CASE("split cut") {
  MixedIntegerInstance inst(mat({{"1"}}), mat({{"3/10"}}));
  Cut cut = generate_cut(half_line(), split(), inst);
  CHECK(cut.psi == std::vector<Rational>{q(2)});
  CHECK(cut.pi == std::vector<Rational>{q(3, 5)});
  CHECK(cut.certified);
  CHECK(cut.lhs(vec({"1/2"}), vec({"0"})) == 1);
  CHECK(is_feasible(half_line(), inst, vec({"1/5"}), vec({"1"})));
  CHECK(cut.lhs(vec({"1/5"}), vec({"1"})) == 1);
  auto v = validate_cut(half_line(), inst, cut, {4, 4});
  CHECK(v.verdict == CutVerdict::pass);
  CHECK(v.feasible_points > 0);
  CHECK(*v.min_lhs == 1);
}

TEST_CASE("integer column inside the lifting region keeps psi") {
  MixedIntegerInstance inst(QMatrix(1, 0), mat({{"1/4", "-3/7"}}));
  Cut cut = generate_cut(half_line(), split(), inst);
  CHECK(cut.pi == std::vector<Rational>{q(1, 2), q(6, 7)});
}

TEST_CASE("crosspolytope cut") {
  auto e = gallery::crosspolytope(vec({"-1", "-1"}), vec({"1", "1"}));
  MixedIntegerInstance inst(mat({{"1"}, {"0"}}), mat({{"3/4"}, {"0"}}));
  Cut cut = generate_cut(e.S, e.B, inst);
  CHECK(cut.psi[0] == 1);
  CHECK(cut.pi[0] == q(1, 4));
  CHECK(cut.witnesses[0] == vec({"-1", "0"}));
}

TEST_CASE("a weakened cut is caught") {
  MixedIntegerInstance inst(mat({{"1"}}), mat({{"3/10"}}));
  Cut cut = generate_cut(half_line(), split(), inst);
  cut.pi[0] = q(1, 2);
  auto v = validate_cut(half_line(), inst, cut, {3, 3});
  CHECK(v.verdict == CutVerdict::violated);
  REQUIRE(v.violation_s);
  CHECK(is_feasible(half_line(), inst, *v.violation_s, *v.violation_y));
  CHECK(cut.lhs(*v.violation_s, *v.violation_y) < 1);
}

TEST_CASE("empty window is inconclusive") {
  MixedIntegerInstance inst(mat({{"1"}}), mat({{"3/10"}}));
  Cut cut = generate_cut(half_line(), split(), inst);
  CHECK(validate_cut(half_line(), inst, cut, {0, 0}).verdict == CutVerdict::inconclusive);
}

TEST_CASE("uncovered pairs need explicit permission") {
  TruncatedAffineLattice strip(vec({"1/2", "1/2"}), Lattice::integer(2),
                               HPolyhedron(mat({{"0", "1"}, {"0", "-1"}}), vec({"1", "1"})));
  SFreeBody diamond({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "1"}), vec({"-1", "-1"})});
  MixedIntegerInstance inst(mat({{"1", "0"}, {"0", "1"}}), mat({{"3/4"}, {"0"}}));
  CHECK_THROWS_AS(generate_cut(strip, diamond, inst), PreconditionError);
  Cut cut = generate_cut(strip, diamond, inst, true);
  CHECK_FALSE(cut.certified);
  CHECK(cut.label == "valid, minimality uncertified");
  CHECK(cut.pi[0] == q(1, 4));
  CHECK(validate_cut(strip, inst, cut, {2, 2}).verdict == CutVerdict::pass);
}

TEST_CASE("gallery cuts are valid and lifting only strengthens") {
  std::mt19937 rng(13);
  for (const auto& e : gallery::all()) {
    if (e.S.dim() > 3 || e.name == "family-3") continue;
    CAPTURE(e.name);
    std::size_t n = e.S.dim();
    std::vector<QVector> rcols, pcols;
    for (int c = 0; c < 2; ++c) {
      QVector r(n), p(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = testing::random_rational(rng, 2, 3);
        p[i] = testing::random_rational(rng, 2, 3);
      }
      rcols.push_back(r);
      pcols.push_back(p);
    }
    MixedIntegerInstance inst(QMatrix::from_columns(rcols, n), QMatrix::from_columns(pcols, n));
    Cut cut = generate_cut(e.S, e.B, inst);
    for (std::size_t j = 0; j < 2; ++j) CHECK(cut.pi[j] <= eval_psi(e.B, pcols[j]).value);
    CHECK(validate_cut(e.S, inst, cut, {1, 2}).verdict != CutVerdict::violated);
  }
}
