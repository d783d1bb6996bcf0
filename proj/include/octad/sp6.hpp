#ifndef OCTAD_SP6_HPP
#define OCTAD_SP6_HPP

// Enumeration of the symplectic group Sp(6,2) on the fixed space of f2.hpp,
// of stabilizers of quadratic functions, and a constructive Witt-extension
// search realizing abstract bases with declared Gram data inside the space.

#include <cstddef>
#include <optional>
#include <vector>

#include "octad/f2.hpp"

namespace octad::f2 {

// Guard for the materialized enumeration; Sp(6,2) itself has 1451520
// elements, so the default leaves headroom without being unbounded.
inline constexpr std::size_t kDefaultIsometryLimit = 1600000;

// All isometries of the symplectic form (q == nullopt), or the stabilizer of
// q.  Output is sorted lexicographically by column bits.  `limit` caps the
// number of materialized elements; passing 0 requests an unbounded
// enumeration and is rejected with ResourceGuard, as is any enumeration that
// would exceed the cap.
std::vector<Isometry> isometry_group(std::optional<Quad> q,
                                     std::size_t limit = kDefaultIsometryLimit);

// Single-threaded reference implementation with the identical contract;
// kept for testing the parallel kernel against.
std::vector<Isometry> isometry_group_serial(std::optional<Quad> q,
                                            std::size_t limit = kDefaultIsometryLimit);

// An abstract basis: declared pairwise pairings and q-values of six
// independent vectors of some quadratic Z/2 space.
struct BasisSpec {
    std::array<std::array<std::uint8_t, 6>, 6> gram{};  // gram[i][j] = declared e_i . e_j
    std::array<std::uint8_t, 6> q{};                    // declared q(e_i)
};

// Arf invariant of the quadratic space described by `spec` (majority count
// over its 64 vectors).  Throws BadInput if the Gram data is not symplectic.
int arf_of_spec(const BasisSpec& spec);

// Images u_1..u_6 in the standard space with dot(u_i,u_j) = gram[i][j] and
// q_eval(target, u_i) = q[i], as an Isometry whose columns are the images.
// Ties resolved by the lexicographically smallest image tuple.  Throws
// NoIsometry when the Arf invariants differ, BadInput on non-symplectic
// Gram data.
Isometry find_isometry(const BasisSpec& spec, Quad target);

} // namespace octad::f2

#endif
