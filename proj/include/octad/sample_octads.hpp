#ifndef OCTAD_SAMPLE_OCTADS_HPP
#define OCTAD_SAMPLE_OCTADS_HPP

// Deterministic generation of verified regular octads: seven cube vertices
// are perturbed by small rationals and the eighth base point of their net
// is recovered exactly.  Used by the property tests and the shipped sample
// data.

#include <cstdint>

#include "octad/projective.hpp"

namespace octad::geo {

// The eight cube vertices (+-1, +-1, +-1, 1).
std::array<ProjPoint, 8> cube_octad();

// A regular octad from the perturbed-cube pipeline; deterministic per seed.
// Retries perturbations until verify_octad reports regular-candidate.
std::array<ProjPoint, 8> sample_regular_octad(std::uint64_t seed);

// A 7-point fence across a single coplanarity wall: two simple
// 7-configurations differing by one point moved along a rational segment
// that crosses exactly one 4-point wall.
struct WallPair {
    std::array<ProjPoint, 7> before;
    std::array<ProjPoint, 7> after;
};

WallPair wall_crossing_pair(std::uint64_t seed);

} // namespace octad::geo

#endif
