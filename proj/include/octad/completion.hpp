#ifndef OCTAD_COMPLETION_HPP
#define OCTAD_COMPLETION_HPP

// Recovery of the eighth base point of the net through 7 points.
//
// The net's base scheme has length 8, so the graded pieces of its
// coordinate ring in degrees 3 and 4 are 8-dimensional.  Multiplication by
// a coordinate functional, transported through an invertible
// multiplication by another, acts on the degree-3 piece with eigenvalues
// the functional's values at the 8 base points; its characteristic
// polynomial is a degree-8 eliminant and its trace is the value sum.
// Subtracting the 7 known values isolates the 8th point coordinate by
// coordinate, exactly.

#include "octad/projective.hpp"

namespace octad::geo {

struct CompletionResult {
    ProjPoint point;
    // monic degree-8 eliminant: coefficients c0..c8 of the characteristic
    // polynomial of the separating-functional action
    std::vector<Rat> eliminant;
    // the functional: value at p is (ell_num . p) / (ell_den . p)
    std::array<Int, 4> ell_num{};
    std::array<Int, 4> ell_den{};
};

// Throws DegenerateInput when the 7 points do not impose independent
// conditions on quadrics, NotZeroDimensional when the net's base scheme is
// not a clean length-8 scheme, MultiplePoint when the recovered point
// coincides with an input point (a 2-collision configuration).
CompletionResult complete_octad_full(const std::array<ProjPoint, 7>& pts);

ProjPoint complete_octad(const std::array<ProjPoint, 7>& pts);

} // namespace octad::geo

#endif
