#ifndef OCTAD_OVAL_COUNT_HPP
#define OCTAD_OVAL_COUNT_HPP

// Heuristic count of the connected components of a real plane quartic's
// zero set in RP^2.  Exact signs are sampled on three affine charts over a
// dyadic grid; marching-squares arcs are joined across cells and across the
// exact chart gluing, and components are counted.  The grid is finite, so
// the count is NOT certified; the stabilization flag reports agreement
// between two consecutive resolutions.

#include <cstdint>
#include <vector>

#include "octad/projective.hpp"

namespace octad::geo {

struct OvalCount {
    int count = 0;
    bool stabilized = false;
    int depth = 0;
};

// Component count at a single resolution (2^depth cells per chart side).
int count_components(const QuarticForm& f, int depth);

// Reference implementation without the parallel sign scan.
int count_components_serial(const QuarticForm& f, int depth);

// Runs depths depth-1 and depth; stabilized when the counts agree.
OvalCount count_ovals(const QuarticForm& f, int depth = 9);

// Exact signs of f on the (n+1)^2 vertex grid of one chart (-1,0,+1 per
// vertex); exposed for the kernel equivalence test and the benchmark.
std::vector<std::int8_t> chart_signs(const QuarticForm& f, int chart, int n, bool parallel);

} // namespace octad::geo

#endif
