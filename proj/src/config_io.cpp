#include "octad/config_io.hpp"

#include <fstream>
#include <sstream>

namespace octad::geo {

std::vector<ProjPoint> read_config(std::istream& in)
{
    std::vector<ProjPoint> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 4)
            throw ParseError("line " + std::to_string(lineno) + ": expected 4 coordinates, found " +
                             std::to_string(toks.size()));
        std::array<Rat, 4> coords;
        for (int i = 0; i < 4; ++i) coords[static_cast<std::size_t>(i)] = parse_rational(toks[static_cast<std::size_t>(i)]);
        pts.push_back(ProjPoint::make(coords));
    }
    if (pts.size() != 6 && pts.size() != 7 && pts.size() != 8)
        throw ParseError("configuration must list 6, 7, or 8 points, found " + std::to_string(pts.size()));
    return pts;
}

std::vector<ProjPoint> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open configuration file '" + path + "'");
    return read_config(in);
}

void write_config(std::ostream& out, const std::vector<ProjPoint>& pts, const std::string& header_comment)
{
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const auto& p : pts) {
        for (int i = 0; i < 4; ++i) out << (i ? " " : "") << p.c[static_cast<std::size_t>(i)].get_str();
        out << "\n";
    }
}

void write_config_file(const std::string& path, const std::vector<ProjPoint>& pts, const std::string& header_comment)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_config(out, pts, header_comment);
}

} // namespace octad::geo
