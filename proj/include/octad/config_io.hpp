#ifndef OCTAD_CONFIG_IO_HPP
#define OCTAD_CONFIG_IO_HPP

// Configuration file format: UTF-8 text, '#' starts a comment, one point
// per line as four whitespace-separated rationals ("p/q" or integer).
// Files carry 6, 7, or 8 points depending on the consuming command.

#include <iosfwd>
#include <string>
#include <vector>

#include "octad/projective.hpp"

namespace octad::geo {

std::vector<ProjPoint> read_config(std::istream& in);
std::vector<ProjPoint> read_config_file(const std::string& path);

void write_config(std::ostream& out, const std::vector<ProjPoint>& pts, const std::string& header_comment = "");
void write_config_file(const std::string& path, const std::vector<ProjPoint>& pts, const std::string& header_comment = "");

template <std::size_t N>
std::array<ProjPoint, N> expect_points(const std::vector<ProjPoint>& pts)
{
    if (pts.size() != N)
        throw BadInput("expected " + std::to_string(N) + " points, found " + std::to_string(pts.size()));
    std::array<ProjPoint, N> out;
    std::copy(pts.begin(), pts.end(), out.begin());
    return out;
}

} // namespace octad::geo

#endif
