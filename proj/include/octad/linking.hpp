#ifndef OCTAD_LINKING_HPP
#define OCTAD_LINKING_HPP

// Chirality invariants of point configurations from products of linking
// signs of skew chord triples.

#include <array>
#include <vector>

#include "octad/projective.hpp"

namespace octad::geo {

// A line given by an ordered pair of distinct points.
struct Line {
    ProjPoint a, b;
};

// Sign of the normalized linking number of the triple: the product of the
// three pairwise determinant signs.  Independent of coordinate lifts and of
// point order within each line; NotSkew when two of the lines meet.
int triple_link(const Line& l1, const Line& l2, const Line& l3);

// Product of triple_link over the 15 splittings of 6 points into 3 chords.
// NotSimple when some quadruple is coplanar.
int sign6(const std::array<ProjPoint, 6>& pts);

// Product of sign6 over the seven 6-point subsets.
int sign7(const std::array<ProjPoint, 7>& pts);

struct OctadSigns {
    int common_sign = 0;              // the shared value of the eight signs
    std::array<int, 8> per_point{};   // sign(X, x_i) = sign7 of the rest
};

// Per-point signs of a regular octad; all eight agree for valid input.
// NotRegular when verify_octad does not report regular-candidate,
// Inconsistent when the eight signs disagree (surfaced, never patched).
OctadSigns octad_signs(const std::array<ProjPoint, 8>& pts);

// Reference implementation without the parallel scan, kept for testing.
OctadSigns octad_signs_serial(const std::array<ProjPoint, 8>& pts);

// Orientation-reversing coordinate map used by the mirror tests: negates
// the first coordinate.
ProjPoint mirror(const ProjPoint& p);

template <std::size_t N>
std::array<ProjPoint, N> mirror(const std::array<ProjPoint, N>& pts)
{
    std::array<ProjPoint, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = mirror(pts[i]);
    return out;
}

} // namespace octad::geo

#endif
