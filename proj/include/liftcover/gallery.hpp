#ifndef LIFTCOVER_GALLERY_HPP
#define LIFTCOVER_GALLERY_HPP

#include <string>
#include <vector>

#include "liftcover/ops.hpp"

namespace liftcover {

// A certified family member. expected_covering is what the construction
// predicts; callers re-verify it.
struct GalleryEntry {
  std::string name;
  TruncatedAffineLattice S;
  SFreeBody B;
  bool expected_covering = true;
  std::string provenance;
};

namespace gallery {

// S = Z^n + e_axis / 2, B = {|2 x_axis| <= 1}.
GalleryEntry split(std::size_t n, std::size_t axis = 0);

// conv{a_j e_j, b_j e_j} with a_j < 0 < b_j and sum 1/(b_j - a_j) = 1, built
// as an iterated coproduct of unit-length intervals.
GalleryEntry crosspolytope(const QVector& a, const QVector& b);

// conv{0, b_1 e_1, ..., b_n e_n} with sum 1/b_j = 1, translated by -(1/2, ..., 1/2)
// so the origin is interior. S = Z^n - (1/2, ..., 1/2).
GalleryEntry simplex_type1(const QVector& b);

// Crosspolytopes on the parameter samples t = 2, 4, 8, 16 whose first
// interval shrinks to a point, moved onto the common S = Z^k + (1/2, ..., 1/2).
// The 2^(k-1) facets on the shrinking side collapse into one, so the limit
// has 2^(k-1) + 1 facets.
LimitInstance facet_family_limit(std::size_t k);
GalleryEntry facet_family(std::size_t k);

// Crosspolytopes a_j = -1/t, b_j = n - 1/t on the same samples, converging to
// the translated simplex conv{0, n e_j}.
LimitInstance simplex_limit(std::size_t n);

// Cone apex + cone{r1, r2} in the plane over S; rejects the pair unless the
// origin is interior and the cone is maximal S-free.
GalleryEntry cone2d(const QVector& apex, const QVector& r1, const QVector& r2, const TruncatedAffineLattice& S);
// apex (0, 1/2), rays (-1, -2) and (1, -2) over (Z^2 + 1/2) intersect {x_2 >= -1/2}.
GalleryEntry cone2d();

// Every named entry, in a fixed order.
std::vector<GalleryEntry> all();
std::vector<std::string> names();
// Throws PreconditionError for an unknown name.
GalleryEntry named(const std::string& name);

}  // namespace gallery
}  // namespace liftcover

#endif
