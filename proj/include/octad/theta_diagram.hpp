#ifndef OCTAD_THETA_DIAGRAM_HPP
#define OCTAD_THETA_DIAGRAM_HPP

// Theta-diagrams of 4-oval quartics: the coloring of 4 ovals and 6 bridges
// induced by a quadratic function, the S4 relabeling action, orbit
// enumeration, the two wall-crossing moves, and the class adjacency graph.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octad/f2.hpp"

namespace octad::diag {

// White means q-value 1, black means 0.
struct ThetaDiagram {
    f2::Quad q;

    int oval(int i) const { return q(f2::oval_class(i)); }             // 0 <= i <= 3
    int bridge(int i, int j) const { return q(f2::bridge_class(i, j)); }  // 0 <= i < j <= 3

    // Row-major matrix entries as a 6-character bit string, e.g. "000101".
    std::string bits() const;
    static ThetaDiagram from_bits(const std::string& s);  // BadInput unless 6 chars of 0/1

    constexpr auto operator<=>(const ThetaDiagram&) const = default;
};

struct ClassLabel {
    int alpha = 0;           // count of white ovals
    int beta = 0;            // count of white bridges
    int parity = 0;          // arf
    std::optional<int> sign; // chirality tag of a concrete octad, +1 or -1

    constexpr auto operator<=>(const ClassLabel&) const = default;
};

ClassLabel class_label(const ThetaDiagram& d);

// Permutation of the oval labels {0..3}; s[i] is the new label of oval i.
using S4 = std::array<std::uint8_t, 4>;

ThetaDiagram s4_apply(const S4& s, const ThetaDiagram& d);

const std::array<S4, 24>& all_s4();

struct Orbit {
    ThetaDiagram rep;                 // lexicographically minimal matrix
    std::vector<ThetaDiagram> members;
    ClassLabel label;
};

// The 11 orbits of the S4 action on the 64 diagrams, sorted by representative.
std::vector<Orbit> enumerate_orbits();

// A wall-crossing move at a black (q = 0) object of an even diagram.
struct Move {
    enum class Kind { BlackEdge, BlackVertex };
    Kind kind;
    int i = 0;  // vertex for BlackVertex; first endpoint for BlackEdge
    int j = 0;  // second endpoint for BlackEdge
};

// BlackEdge(i,j) flips the colors of ovals i and j; BlackVertex(i) flips the
// three bridges at oval i.  MoveNotAllowed if the named object is white,
// BadInput on malformed indices or an odd source diagram.
ThetaDiagram apply_move(const ThetaDiagram& d, const Move& m);

std::vector<Move> admissible_moves(const ThetaDiagram& d);

struct AdjacencyGraph {
    // Unordered pairs of distinct even classes (alpha,beta), sorted.
    std::vector<std::array<std::array<int, 2>, 2>> edges;
    std::vector<std::array<int, 2>> self_loops;
};

// Classes reachable from each even class by one admissible move.
AdjacencyGraph adjacency_graph();

} // namespace octad::diag

#endif
