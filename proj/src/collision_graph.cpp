#include "octad/collision_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "octad/errors.hpp"

namespace octad::diag {

void GammaGraph::add_edge(int u, int v, char tag)
{
    if (u == v) throw BadInput("loop edges cannot occur in a collision graph");
    Edge e{static_cast<std::uint8_t>(std::min(u, v)), static_cast<std::uint8_t>(std::max(u, v)), tag};
    edges.push_back(e);
    std::sort(edges.begin(), edges.end());
}

namespace {

// adjacency with tag codes: 0 none, 1 oval-type, 2 bridge-type
using AdjMat = std::array<std::array<int, 8>, 8>;

AdjMat adjacency(const GammaGraph& g)
{
    AdjMat m{};
    for (const auto& e : g.edges) {
        int t = e.tag == 'a' ? 1 : 2;
        m[e.u][e.v] = t;
        m[e.v][e.u] = t;
    }
    return m;
}

bool iso_dfs(const AdjMat& a, const AdjMat& b, int n, std::array<int, 8>& map, std::array<bool, 8>& used, int depth)
{
    if (depth == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            ok = a[static_cast<std::size_t>(depth)][static_cast<std::size_t>(prev)] ==
                 b[static_cast<std::size_t>(cand)][static_cast<std::size_t>(map[static_cast<std::size_t>(prev)])];
        if (!ok) continue;
        map[static_cast<std::size_t>(depth)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (iso_dfs(a, b, n, map, used, depth + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

} // namespace

bool decorated_isomorphic(const GammaGraph& g, const GammaGraph& h)
{
    if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
    auto tag_count = [](const GammaGraph& x, char t) {
        return std::count_if(x.edges.begin(), x.edges.end(), [t](const auto& e) { return e.tag == t; });
    };
    if (tag_count(g, 'a') != tag_count(h, 'a')) return false;

    AdjMat a = adjacency(g), b = adjacency(h);
    std::array<int, 8> map{};
    std::array<bool, 8> used{};
    return iso_dfs(a, b, g.n, map, used, 0);
}

GammaGraph gamma_graph(const ThetaDiagram& d, const bip::PhiMap& phi)
{
    if (f2::arf(d.q) != 0) throw BadInput("collision graphs are built from even diagrams");
    GammaGraph g;
    g.n = 8;
    auto add = [&](f2::Vec v, char tag) {
        bip::Bipartition b = phi.inverse(v);
        // white classes have q = 1, hence pair bipartitions
        int lo = std::countr_zero(static_cast<unsigned>(b.mask));
        int hi = 7;
        while (!((b.mask >> hi) & 1)) --hi;
        g.add_edge(lo, hi, tag);
    };
    for (int i = 0; i < 4; ++i)
        if (d.oval(i)) add(f2::oval_class(i), 'a');
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (d.bridge(i, j)) add(f2::bridge_class(i, j), 'b');
    return g;
}

namespace {

int perm_order(const S4& s)
{
    S4 cur = s;
    int ord = 1;
    const S4 id = {0, 1, 2, 3};
    while (cur != id) {
        S4 next{};
        for (int i = 0; i < 4; ++i) next[static_cast<std::size_t>(i)] = s[cur[static_cast<std::size_t>(i)]];
        cur = next;
        ++ord;
    }
    return ord;
}

std::string group_name(const std::vector<S4>& elems)
{
    std::size_t n = elems.size();
    std::map<int, int> orders;
    for (const auto& e : elems) ++orders[perm_order(e)];
    switch (n) {
        case 1: return "trivial";
        case 2: return "Z2";
        case 3: return "Z3";
        case 4: return orders.count(4) ? "Z4" : "Z2xZ2";
        case 6: return orders.count(6) ? "Z6" : "S3";
        case 8: return "D4";  // the only order-8 subgroup of S4
        case 12: return "A4";
        case 24: return "S4";
        default: return "order-" + std::to_string(n);
    }
}

} // namespace

MonodromyGroup monodromy_group(const ThetaDiagram& d, const bip::PhiMap& phi)
{
    if (f2::arf(d.q) != 0) throw BadInput("monodromy groups are defined for even diagrams");

    MonodromyGroup mg;
    for (const auto& s : all_s4())
        if (s4_apply(s, d) == d) mg.elements.push_back(s);
    mg.name = group_name(mg.elements);

    for (const auto& s : mg.elements) {
        // the isometry sending each oval/bridge class to its relabeled class
        f2::Isometry g;
        for (int i = 1; i <= 3; ++i)
            g.col[static_cast<std::size_t>(i - 1)] = f2::oval_class(s[static_cast<std::size_t>(i)]);
        for (int i = 1; i <= 3; ++i) {
            int a = s[0], b = s[static_cast<std::size_t>(i)];
            g.col[static_cast<std::size_t>(2 + i)] = f2::bridge_class(std::min(a, b), std::max(a, b));
        }
        mg.lifted.push_back(bip::isometry_to_perm(g, phi));
    }
    return mg;
}

int vertex_orbits(const ThetaDiagram& d, const bip::PhiMap& phi)
{
    MonodromyGroup mg = monodromy_group(d, phi);
    std::array<int, 8> root{};
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& p : mg.lifted)
        for (int i = 0; i < 8; ++i) {
            int a = find(i), b = find(p[static_cast<std::size_t>(i)]);
            if (a != b) root[static_cast<std::size_t>(a)] = b;
        }
    int orbits = 0;
    for (int i = 0; i < 8; ++i)
        if (find(i) == i) ++orbits;
    return orbits;
}

GammaGraph reference_gamma(int alpha, int beta)
{
    GammaGraph g;
    g.n = 8;
    auto path = [&](std::initializer_list<int> verts, std::initializer_list<char> tags) {
        auto v = verts.begin();
        auto t = tags.begin();
        int prev = *v++;
        for (; v != verts.end(); ++v, ++t) {
            g.add_edge(prev, *v, *t);
            prev = *v;
        }
    };
    if (alpha == 0 && beta == 0) return g;
    if (alpha == 2 && beta == 0) { path({0, 1}, {'a'}); path({2, 3}, {'a'}); return g; }
    if (alpha == 4 && beta == 0) { path({0, 1}, {'a'}); path({2, 3}, {'a'}); path({4, 5}, {'a'}); path({6, 7}, {'a'}); return g; }
    if (alpha == 0 && beta == 3) { path({0, 1}, {'b'}); path({2, 3}, {'b'}); path({4, 5}, {'b'}); return g; }
    if (alpha == 2 && beta == 3) { path({0, 1, 2}, {'b', 'a'}); path({3, 4, 5}, {'b', 'a'}); path({6, 7}, {'b'}); return g; }
    if (alpha == 0 && beta == 4) { path({0, 1}, {'b'}); path({2, 3}, {'b'}); path({4, 5}, {'b'}); path({6, 7}, {'b'}); return g; }
    if (alpha == 2 && beta == 4) { path({0, 1, 2, 3}, {'b', 'a', 'b'}); path({4, 5, 6, 7}, {'b', 'a', 'b'}); return g; }
    if (alpha == 4 && beta == 4) {
        path({0, 1, 2, 3, 4, 5, 6, 7}, {'a', 'b', 'a', 'b', 'a', 'b', 'a'});
        g.add_edge(0, 7, 'b');
        return g;
    }
    throw BadInput("no reference collision graph for this class");
}

const std::array<M1Diagram, 2>& m1_diagrams()
{
    // Transcribed fixed data: in both diagrams the direct-segment bridge of
    // every pair is drawn dotted (white) and the through-infinity one solid
    // (black); the first diagram has one white oval, the second all three.
    static const std::array<M1Diagram, 2> d = {
        M1Diagram{{1, 0, 0}, {1, 1, 1}, {0, 0, 0}},
        M1Diagram{{1, 1, 1}, {1, 1, 1}, {0, 0, 0}},
    };
    return d;
}

namespace {

constexpr std::array<std::array<int, 2>, 3> kM1Pairs = {{{1, 2}, {1, 3}, {2, 3}}};

GammaGraph m1_gamma(const M1Diagram& d)
{
    // Classes become edges; incident classes share a vertex.  A white oval
    // is incident to the white members of its two bridge pairs; bridges are
    // pairwise non-incident, as are ovals.  Components are therefore paths
    // or cycles; realize them on fresh vertices.
    struct Node {
        char tag;
        int oval = 0;                // for 'a'
        std::array<int, 2> pair{};   // for 'b'
    };
    std::vector<Node> nodes;
    for (int i = 0; i < 3; ++i)
        if (d.oval_white[static_cast<std::size_t>(i)]) nodes.push_back({'a', i + 1, {}});
    for (int p = 0; p < 3; ++p)
        if (d.inner_color[static_cast<std::size_t>(p)] != d.outer_color[static_cast<std::size_t>(p)])
            nodes.push_back({'b', 0, kM1Pairs[static_cast<std::size_t>(p)]});  // the white member

    auto incident = [](const Node& x, const Node& y) {
        if (x.tag == y.tag) return false;
        const Node& oval = x.tag == 'a' ? x : y;
        const Node& bridge = x.tag == 'a' ? y : x;
        return bridge.pair[0] == oval.oval || bridge.pair[1] == oval.oval;
    };

    int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (incident(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)])) {
                nbr[static_cast<std::size_t>(i)].push_back(j);
                nbr[static_cast<std::size_t>(j)].push_back(i);
            }

    GammaGraph g;
    g.n = 6;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    int next_vertex = 0;
    // walk components, preferring endpoints (degree < 2) as chain starts
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return nbr[static_cast<std::size_t>(x)].size() < nbr[static_cast<std::size_t>(y)].size();
    });
    for (int start : order) {
        if (done[static_cast<std::size_t>(start)]) continue;
        // trace the chain from `start`
        std::vector<int> chain{start};
        done[static_cast<std::size_t>(start)] = true;
        bool cycle = false;
        while (true) {
            int cur = chain.back();
            int nxt = -1;
            for (int cand : nbr[static_cast<std::size_t>(cur)])
                if (!done[static_cast<std::size_t>(cand)]) { nxt = cand; break; }
            if (nxt < 0) {
                // closed up? a cycle returns to the start with full degree
                cycle = chain.size() > 2 &&
                        std::find(nbr[static_cast<std::size_t>(cur)].begin(), nbr[static_cast<std::size_t>(cur)].end(), start) !=
                            nbr[static_cast<std::size_t>(cur)].end() &&
                        nbr[static_cast<std::size_t>(start)].size() == 2;
                break;
            }
            chain.push_back(nxt);
            done[static_cast<std::size_t>(nxt)] = true;
        }
        int first = next_vertex;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            int u = next_vertex;
            int v = (cycle && k + 1 == chain.size()) ? first : next_vertex + 1;
            g.add_edge(u, v, nodes[static_cast<std::size_t>(chain[k])].tag);
            ++next_vertex;
        }
        if (!cycle) ++next_vertex;  // paths use one extra vertex
    }
    if (next_vertex > 6) throw Inconsistent("3-oval collision graph needs more than 6 vertices");
    return g;
}

int m1_symmetry_order(const M1Diagram& d)
{
    // permutations of the three ovals preserving oval colors; the white
    // member of each bridge pair must map to the white member of the image
    // pair, which the one-white-per-pair constraint always allows
    std::array<std::array<int, 3>, 6> s3 = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    int order = 0;
    for (const auto& s : s3) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            ok = d.oval_white[static_cast<std::size_t>(i)] == d.oval_white[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
        // bridge pairs: each image pair again has exactly one white member
        if (ok) ++order;
    }
    return order;
}

GammaGraph m1_reference(int which)
{
    GammaGraph g;
    g.n = 6;
    if (which == 0) {
        g.add_edge(0, 1, 'b');
        g.add_edge(1, 2, 'a');
        g.add_edge(2, 3, 'b');
        g.add_edge(4, 5, 'b');
    } else {
        g.add_edge(0, 1, 'a');
        g.add_edge(1, 2, 'b');
        g.add_edge(2, 3, 'a');
        g.add_edge(3, 4, 'b');
        g.add_edge(4, 5, 'a');
        g.add_edge(0, 5, 'b');
    }
    return g;
}

} // namespace

M1Report m1_diagram_checks()
{
    M1Report r;
    const auto& ds = m1_diagrams();
    for (int k = 0; k < 2; ++k) {
        const M1Diagram& d = ds[static_cast<std::size_t>(k)];
        auto& out = r.diagram[static_cast<std::size_t>(k)];
        out.bridge_pairs_opposite = true;
        for (int p = 0; p < 3; ++p)
            if (d.inner_color[static_cast<std::size_t>(p)] == d.outer_color[static_cast<std::size_t>(p)])
                out.bridge_pairs_opposite = false;
        out.symmetry_order = m1_symmetry_order(d);
        out.gamma = m1_gamma(d);
        out.gamma_matches_reference = decorated_isomorphic(out.gamma, m1_reference(k));
    }
    return r;
}

} // namespace octad::diag
