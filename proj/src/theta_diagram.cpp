#include "octad/theta_diagram.hpp"

#include <algorithm>
#include <set>

#include "octad/errors.hpp"

namespace octad::diag {

std::string ThetaDiagram::bits() const
{
    std::string s(6, '0');
    for (int i = 0; i < 6; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + ((q.diag >> i) & 1));
    return s;
}

ThetaDiagram ThetaDiagram::from_bits(const std::string& s)
{
    if (s.size() != 6) throw BadInput("diagram matrix must be 6 bits, row-major");
    f2::Quad q;
    for (int i = 0; i < 6; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1') throw BadInput("diagram matrix must be 6 bits, row-major");
        q.diag |= static_cast<std::uint8_t>((c - '0') << i);
    }
    return ThetaDiagram{q};
}

ClassLabel class_label(const ThetaDiagram& d)
{
    ClassLabel l;
    l.parity = f2::arf(d.q);
    for (int i = 0; i < 4; ++i) l.alpha += d.oval(i);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) l.beta += d.bridge(i, j);
    return l;
}

ThetaDiagram s4_apply(const S4& s, const ThetaDiagram& d)
{
    // Invert the relabeling and read the new matrix off the old coloring.
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[s[static_cast<std::size_t>(i)]] = i;

    f2::Quad q;
    for (int i = 1; i <= 3; ++i) {
        if (d.oval(inv[static_cast<std::size_t>(i)])) q.diag |= static_cast<std::uint8_t>(1 << (i - 1));
        int a = inv[0], b = inv[static_cast<std::size_t>(i)];
        if (d.bridge(std::min(a, b), std::max(a, b))) q.diag |= static_cast<std::uint8_t>(1 << (2 + i));
    }
    return ThetaDiagram{q};
}

const std::array<S4, 24>& all_s4()
{
    static const std::array<S4, 24> perms = [] {
        std::array<S4, 24> out{};
        S4 p = {0, 1, 2, 3};
        int n = 0;
        do {
            out[static_cast<std::size_t>(n++)] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

std::vector<Orbit> enumerate_orbits()
{
    std::array<bool, 64> seen{};
    std::vector<Orbit> orbits;
    for (unsigned bits = 0; bits < 64; ++bits) {
        if (seen[bits]) continue;
        ThetaDiagram d{f2::Quad{static_cast<std::uint8_t>(bits)}};
        std::set<ThetaDiagram> members;
        for (const auto& s : all_s4()) members.insert(s4_apply(s, d));
        Orbit o;
        o.rep = *members.begin();  // Quad ordering is lexicographic row-major
        o.label = class_label(o.rep);
        for (const auto& m : members) {
            seen[m.q.diag] = true;
            o.members.push_back(m);
        }
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
    return orbits;
}

ThetaDiagram apply_move(const ThetaDiagram& d, const Move& m)
{
    if (f2::arf(d.q) != 0) throw BadInput("moves are defined on even diagrams");
    f2::Quad q = d.q;
    if (m.kind == Move::Kind::BlackEdge) {
        if (m.i < 0 || m.j < 0 || m.i > 3 || m.j > 3 || m.i == m.j)
            throw BadInput("edge endpoints must be distinct ovals 0..3");
        int i = std::min(m.i, m.j), j = std::max(m.i, m.j);
        if (d.bridge(i, j)) throw MoveNotAllowed("bridge is white; no wall there");
        // flip ovals i and j by toggling top-row bits; a0 is the row sum, so
        // toggling the single bit j-1 flips both a_j and a0
        for (int k : {i, j})
            if (k >= 1) q.diag ^= static_cast<std::uint8_t>(1 << (k - 1));
    } else {
        if (m.i < 0 || m.i > 3) throw BadInput("vertex must be an oval 0..3");
        if (d.oval(m.i)) throw MoveNotAllowed("oval is white; no wall there");
        // flip the three bridges at oval i: toggle bottom-row bit i, or all
        // three bottom bits for oval 0
        if (m.i == 0)
            q.diag ^= static_cast<std::uint8_t>(0b111 << 3);
        else
            q.diag ^= static_cast<std::uint8_t>(1 << (2 + m.i));
    }
    ThetaDiagram out{q};
    return out;
}

std::vector<Move> admissible_moves(const ThetaDiagram& d)
{
    std::vector<Move> moves;
    for (int i = 0; i < 4; ++i)
        if (!d.oval(i)) moves.push_back({Move::Kind::BlackVertex, i, 0});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!d.bridge(i, j)) moves.push_back({Move::Kind::BlackEdge, i, j});
    return moves;
}

AdjacencyGraph adjacency_graph()
{
    std::set<std::array<std::array<int, 2>, 2>> edges;
    std::set<std::array<int, 2>> loops;
    for (unsigned bits = 0; bits < 64; ++bits) {
        ThetaDiagram d{f2::Quad{static_cast<std::uint8_t>(bits)}};
        if (f2::arf(d.q) != 0) continue;
        ClassLabel from = class_label(d);
        for (const auto& m : admissible_moves(d)) {
            ClassLabel to = class_label(apply_move(d, m));
            std::array<int, 2> a{from.alpha, from.beta}, b{to.alpha, to.beta};
            if (a == b)
                loops.insert(a);
            else
                edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    AdjacencyGraph g;
    g.edges.assign(edges.begin(), edges.end());
    g.self_loops.assign(loops.begin(), loops.end());
    return g;
}

} // namespace octad::diag
