#ifndef OCTAD_COLLISION_GRAPH_HPP
#define OCTAD_COLLISION_GRAPH_HPP

// Collision graphs Gamma_X on the 8 configuration points, the real
// monodromy groups of the eight even classes, and the fixed checks for the
// two 3-oval diagrams of configurations with one conjugate pair.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octad/bipartition.hpp"
#include "octad/theta_diagram.hpp"

namespace octad::diag {

struct GammaGraph {
    int n = 8;  // vertex count (6 for the 3-oval diagrams)
    struct Edge {
        std::uint8_t u, v;  // u < v
        char tag;           // 'a' oval-type, 'b' bridge-type
        auto operator<=>(const Edge&) const = default;
    };
    std::vector<Edge> edges;  // sorted

    void add_edge(int u, int v, char tag);
};

// Tag-preserving graph isomorphism (vertex counts <= 8).
bool decorated_isomorphic(const GammaGraph& g, const GammaGraph& h);

// Edges of Gamma: the inverse images of the white oval and bridge classes
// (all pair bipartitions), tagged 'a' or 'b'.  Requires an even diagram.
GammaGraph gamma_graph(const ThetaDiagram& d, const bip::PhiMap& phi);

struct MonodromyGroup {
    std::vector<S4> elements;        // color-preserving oval permutations
    std::vector<bip::Perm> lifted;   // induced permutations of the 8 points
    std::string name;                // S4, S3, D4, Z2xZ2, Z2, trivial
};

MonodromyGroup monodromy_group(const ThetaDiagram& d, const bip::PhiMap& phi);

// Orbit count of the lifted monodromy group on the 8 vertices.
int vertex_orbits(const ThetaDiagram& d, const bip::PhiMap& phi);

// The reference combinatorial types of Gamma for the eight even classes,
// keyed by (alpha, beta), as transcribed from the classification table.
GammaGraph reference_gamma(int alpha, int beta);

// --- diagrams of quartics with 3 ovals -------------------------------------
//
// Three ovals pairwise joined by two bridges each; within each bridge pair
// the q-values are opposite, so exactly one member is white.

struct M1Diagram {
    std::array<int, 3> oval_white{};   // colors of ovals 1..3
    std::array<int, 3> inner_color{};  // color of the direct-segment bridge of
                                       // pair (12),(13),(23); 1 = white
    std::array<int, 3> outer_color{};  // color of the through-infinity bridge
};

struct M1Report {
    struct PerDiagram {
        bool bridge_pairs_opposite = false;  // one white member per pair
        int symmetry_order = 0;
        GammaGraph gamma;        // built from the white classes, 6 vertices
        bool gamma_matches_reference = false;
    };
    std::array<PerDiagram, 2> diagram;
};

// Verifies the two fixed 3-oval diagrams: pair colors, symmetry groups
// (orders 2 and 6), and their 6-vertex collision graphs.
M1Report m1_diagram_checks();

const std::array<M1Diagram, 2>& m1_diagrams();

} // namespace octad::diag

#endif
