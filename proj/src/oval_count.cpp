#include "octad/oval_count.hpp"

#include <map>
#include <optional>

namespace octad::geo {
namespace {

// --- fast path: integer evaluation of the quartic on one chart -------------

struct ChartPoly {
    std::array<Int, 5> row_coeffs(int chart, const QuarticForm& f, const Int& n, const Int& y) const
    {
        std::array<Int, 5> pow_n, pow_y;
        pow_n[0] = 1;
        pow_y[0] = 1;
        for (int e = 1; e <= 4; ++e) {
            pow_n[static_cast<std::size_t>(e)] = pow_n[static_cast<std::size_t>(e - 1)] * n;
            pow_y[static_cast<std::size_t>(e)] = pow_y[static_cast<std::size_t>(e - 1)] * y;
        }
        std::array<Int, 5> c{};
        for (int k = 0; k < 15; ++k) {
            const Rat& q = f.c[static_cast<std::size_t>(k)];
            if (q == 0) continue;
            const auto& e = kQuarticExponents[static_cast<std::size_t>(k)];
            int en, ex, ey;
            switch (chart) {
                case 0: en = e[0]; ex = e[1]; ey = e[2]; break;
                case 1: en = e[1]; ex = e[0]; ey = e[2]; break;
                default: en = e[2]; ex = e[0]; ey = e[1]; break;
            }
            c[static_cast<std::size_t>(ex)] += Int(q.get_num()) * pow_n[static_cast<std::size_t>(en)] * pow_y[static_cast<std::size_t>(ey)];
        }
        return c;
    }
};

std::int8_t sign_of_horner(const std::array<Int, 5>& c, const Int& x)
{
    Int acc = c[4];
    for (int e = 3; e >= 0; --e) acc = acc * x + c[static_cast<std::size_t>(e)];
    return static_cast<std::int8_t>(sgn(acc));
}

// --- exact tensor Bernstein representation on a dyadic cell ----------------
//
// Coefficients are kept as integers under an implicit positive scale, which
// preserves signs, derivative signs and Descartes counts.  De Casteljau
// halving multiplies the scale by 16 per split direction.

struct Tensor {
    std::array<std::array<Int, 5>, 5> b;  // b[i][j]: u-index i, v-index j

    int sign_class() const
    {
        bool pos = true, neg = true;
        for (const auto& row : b)
            for (const auto& x : row) {
                if (sgn(x) <= 0) pos = false;
                if (sgn(x) >= 0) neg = false;
            }
        return pos ? 1 : (neg ? -1 : 0);
    }

    // sign-definiteness of a directional derivative (difference tensor)
    bool derivative_definite(bool u_dir) const
    {
        bool pos = true, neg = true;
        int ni = u_dir ? 4 : 5, nj = u_dir ? 5 : 4;
        for (int i = 0; i < ni; ++i)
            for (int j = 0; j < nj; ++j) {
                Int d = u_dir ? b[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              : b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)] - b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (sgn(d) <= 0) pos = false;
                if (sgn(d) >= 0) neg = false;
                if (!pos && !neg) return false;
            }
        return pos || neg;
    }
};

// split a degree-4 Bernstein row into halves, scale times 16
void split_row(const std::array<Int, 5>& t, std::array<Int, 5>& left, std::array<Int, 5>& right)
{
    // binomial forms of the de Casteljau triangle, kept integral
    left[0] = 16 * t[0];
    left[1] = 8 * (t[0] + t[1]);
    left[2] = 4 * (t[0] + 2 * t[1] + t[2]);
    left[3] = 2 * (t[0] + 3 * t[1] + 3 * t[2] + t[3]);
    left[4] = t[0] + 4 * t[1] + 6 * t[2] + 4 * t[3] + t[4];
    right[0] = left[4];
    right[1] = 2 * (t[1] + 3 * t[2] + 3 * t[3] + t[4]);
    right[2] = 4 * (t[2] + 2 * t[3] + t[4]);
    right[3] = 8 * (t[3] + t[4]);
    right[4] = 16 * t[4];
}

void split_u(const Tensor& t, Tensor& lo, Tensor& hi)
{
    for (int j = 0; j < 5; ++j) {
        std::array<Int, 5> col, l, r;
        for (int i = 0; i < 5; ++i) col[static_cast<std::size_t>(i)] = t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        split_row(col, l, r);
        for (int i = 0; i < 5; ++i) {
            lo.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l[static_cast<std::size_t>(i)];
            hi.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(i)];
        }
    }
}

void split_v(const Tensor& t, Tensor& lo, Tensor& hi)
{
    for (int i = 0; i < 5; ++i) {
        std::array<Int, 5> l, r;
        split_row(t.b[static_cast<std::size_t>(i)], l, r);
        for (int j = 0; j < 5; ++j) {
            lo.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l[static_cast<std::size_t>(j)];
            hi.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)];
        }
    }
}

// Descartes data of a univariate Bernstein row: number of strict sign
// alternations; bounds the root count on the open cell edge and has the
// same parity.  Zero endpoint coefficients mean the curve meets a cell
// corner; flagged by the caller.
int sign_variations(const std::array<Int, 5>& t)
{
    int v = 0, last = 0;
    for (const auto& x : t) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// --- dyadic cells and globally addressable crossing nodes ------------------

struct Cell {
    int chart;
    // cell = [ux, ux+2^-level] x [vx, vx+2^-level] in unit-square coords,
    // ux = ui / 2^level
    std::uint64_t ui, vi;
    int level;
    Tensor t;
};

// A crossing node: the root of the quartic restricted to a dyadic grid
// line, addressed by the line and a canonical isolating interval.
struct NodeKey {
    std::uint8_t chart;
    std::uint8_t horizontal;  // 1: the supporting line is v = const
    std::int64_t line;        // numerator of the line coordinate in [-1,1], scale 2^kNodeScale
    std::int64_t pos;         // floor(position * 2^kNodeScale), position in [-1,1]

    auto operator<=>(const NodeKey&) const = default;
};

constexpr int kNodeScale = 40;

struct Arc {
    NodeKey a, b;
};

struct BuildResult {
    std::vector<Arc> arcs;
    bool unresolved = false;
};

// edges of a cell: 0 left (u=lo), 1 right, 2 bottom (v=lo), 3 top
std::array<Int, 5> edge_row(const Tensor& t, int edge)
{
    std::array<Int, 5> out;
    for (int k = 0; k < 5; ++k) {
        switch (edge) {
            case 0: out[static_cast<std::size_t>(k)] = t.b[0][static_cast<std::size_t>(k)]; break;
            case 1: out[static_cast<std::size_t>(k)] = t.b[4][static_cast<std::size_t>(k)]; break;
            case 2: out[static_cast<std::size_t>(k)] = t.b[static_cast<std::size_t>(k)][0]; break;
            default: out[static_cast<std::size_t>(k)] = t.b[static_cast<std::size_t>(k)][4]; break;
        }
    }
    return out;
}

// Isolate the single root of a V=1 Bernstein row down to the node scale.
// Interval [lo, lo + 2^-level] in unit coordinates; returns the canonical
// position index on the 2^kNodeScale grid of [0,1].  nullopt when an exact
// dyadic root or a stubborn cluster blocks canonical isolation.
std::optional<std::uint64_t> isolate_root(std::array<Int, 5> row, std::uint64_t lo_index, int level)
{
    while (level < kNodeScale) {
        std::array<Int, 5> l, r;
        split_row(row, l, r);
        if (sgn(l[4]) == 0) {
            // root exactly at the midpoint: canonical home is the left half,
            // final index is the midpoint slot
            std::uint64_t mid = ((lo_index << 1) | 1) << (kNodeScale - level - 1);
            return mid - 1;  // the interval ending at the midpoint
        }
        int vl = sign_variations(l), vr = sign_variations(r);
        if (vl == 1 && vr == 0) {
            row = l;
            lo_index <<= 1;
        } else if (vl == 0 && vr == 1) {
            row = r;
            lo_index = (lo_index << 1) | 1;
        } else {
            return std::nullopt;  // variation did not localize; caller flags
        }
        ++level;
    }
    return lo_index;
}

class Builder {
public:
    Builder(const QuarticForm& f, int floor_level, int cap_level)
        : floor_(floor_level), cap_(cap_level)
    {
        for (int chart = 0; chart < 3; ++chart) roots_[static_cast<std::size_t>(chart)] = root_tensor(f, chart);
    }

    // tasks for parallel processing: the uniform level-3 grid
    std::vector<Cell> make_tasks() const
    {
        std::vector<Cell> out;
        for (int chart = 0; chart < 3; ++chart) {
            std::vector<Cell> frontier = {Cell{chart, 0, 0, 0, roots_[static_cast<std::size_t>(chart)]}};
            for (int l = 0; l < 3; ++l) {
                std::vector<Cell> next;
                for (const auto& c : frontier) {
                    std::array<Cell, 4> kids = children(c);
                    next.insert(next.end(), kids.begin(), kids.end());
                }
                frontier = std::move(next);
            }
            out.insert(out.end(), frontier.begin(), frontier.end());
        }
        return out;
    }

    void process(const Cell& cell, BuildResult& res) const { recurse(cell, res); }

private:
    int floor_, cap_;
    std::array<Tensor, 3> roots_;

    static Tensor root_tensor(const QuarticForm& f, int chart)
    {
        // power coefficients of the chart restriction on [-1,1]^2, then on
        // [0,1]^2 via the substitution x -> -1 + 2x, then Bernstein
        std::array<std::array<Int, 5>, 5> p{};
        for (int k = 0; k < 15; ++k) {
            if (f.c[static_cast<std::size_t>(k)] == 0) continue;
            const auto& e = kQuarticExponents[static_cast<std::size_t>(k)];
            int eu, ev;
            switch (chart) {
                case 0: eu = e[1]; ev = e[2]; break;
                case 1: eu = e[0]; ev = e[2]; break;
                default: eu = e[0]; ev = e[1]; break;
            }
            p[static_cast<std::size_t>(eu)][static_cast<std::size_t>(ev)] += Int(f.c[static_cast<std::size_t>(k)].get_num());
        }
        // substitute u = -1 + 2s in each variable separately
        auto shift = [](std::array<std::array<Int, 5>, 5>& a, bool u_dir) {
            static const int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
            std::array<std::array<Int, 5>, 5> out{};
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    const Int& c = u_dir ? a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] : a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (c == 0) continue;
                    // (-1 + 2s)^i = sum_k C(i,k) 2^k s^k (-1)^(i-k)
                    for (int k = 0; k <= i; ++k) {
                        Int term = c * binom[i][k] * (Int(1) << k);
                        if ((i - k) % 2) term = -term;
                        if (u_dir)
                            out[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] += term;
                        else
                            out[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] += term;
                    }
                }
            a = out;
        };
        shift(p, true);
        shift(p, false);

        // power -> Bernstein on [0,1], degree 4: b_i = sum_k a_k C(i,k)/C(4,k),
        // scaled by 12 per direction to stay integral
        static const int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
        static const int scale4[5] = {12, 3, 2, 3, 12};  // 12 / C(4,k)
        Tensor t{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Int acc = 0;
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        const Int& c = p[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                        if (c == 0) continue;
                        acc += c * (binom[i][k] * scale4[k]) * (binom[j][l] * scale4[l]);
                    }
                t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
            }
        return t;
    }

    static std::array<Cell, 4> children(const Cell& c)
    {
        Tensor lo, hi, t00, t10, t01, t11;
        split_u(c.t, lo, hi);
        split_v(lo, t00, t01);
        split_v(hi, t10, t11);
        int l = c.level + 1;
        return {Cell{c.chart, c.ui << 1, c.vi << 1, l, t00}, Cell{c.chart, (c.ui << 1) | 1, c.vi << 1, l, t10},
                Cell{c.chart, c.ui << 1, (c.vi << 1) | 1, l, t01}, Cell{c.chart, (c.ui << 1) | 1, (c.vi << 1) | 1, l, t11}};
    }

    // canonical node for a crossing on the given edge of the cell
    std::optional<NodeKey> make_node(const Cell& c, int edge) const
    {
        bool horizontal = edge >= 2;  // bottom/top edges live on v = const lines
        // supporting line coordinate in unit coords
        std::uint64_t line_unit = horizontal ? (edge == 2 ? c.vi : c.vi + 1) : (edge == 0 ? c.ui : c.ui + 1);
        std::uint64_t along = horizontal ? c.ui : c.vi;
        auto pos_unit = isolate_root(edge_row(c.t, edge), along, c.level);
        if (!pos_unit) return std::nullopt;

        // convert unit [0,1] coords to [-1,1] grid at scale 2^kNodeScale
        auto to_signed = [&](std::uint64_t unit, int lvl) {
            return 2 * static_cast<std::int64_t>(unit << (kNodeScale - lvl)) - (std::int64_t(1) << kNodeScale);
        };
        NodeKey key;
        key.chart = static_cast<std::uint8_t>(c.chart);
        key.horizontal = horizontal ? 1 : 0;
        key.line = to_signed(line_unit, c.level);
        key.pos = to_signed(*pos_unit, kNodeScale);
        return canonical(key);
    }

    // chart gluing on the six boundary lines; representative on the chart
    // with the smaller index
    static NodeKey canonical(NodeKey k)
    {
        const std::int64_t one = std::int64_t(1) << kNodeScale;
        auto rev = [](std::int64_t p) { return -p - 2; };  // interval [p, p+2) -> [-p-2, -p)
        if (k.line != one && k.line != -one) return k;
        bool at_plus = k.line == one;
        // vertical boundary lines of charts 1 and 2, horizontal of chart 2
        if (k.chart == 1 && !k.horizontal) return NodeKey{0, 0, at_plus ? one : -one, at_plus ? k.pos : rev(k.pos)};
        if (k.chart == 2 && !k.horizontal)
            return at_plus ? NodeKey{0, 1, one, k.pos} : NodeKey{0, 1, -one, rev(k.pos)};
        if (k.chart == 2 && k.horizontal)
            return at_plus ? NodeKey{1, 1, one, k.pos} : NodeKey{1, 1, -one, rev(k.pos)};
        return k;
    }

    void recurse(const Cell& c, BuildResult& res) const
    {
        int sc = c.t.sign_class();
        if (sc != 0) return;  // certified sign-definite: no curve here

        bool deep_enough = c.level >= floor_;
        if (deep_enough && (c.t.derivative_definite(true) || c.t.derivative_definite(false))) {
            // candidate leaf: demand at most one crossing per edge and a
            // simple total
            std::array<int, 4> vars{};
            bool corner_zero = false;
            int total = 0;
            for (int e = 0; e < 4; ++e) {
                auto row = edge_row(c.t, e);
                if (sgn(row[0]) == 0 || sgn(row[4]) == 0) corner_zero = true;
                vars[static_cast<std::size_t>(e)] = sign_variations(row);
                total += vars[static_cast<std::size_t>(e)];
            }
            if (!corner_zero && vars[0] <= 1 && vars[1] <= 1 && vars[2] <= 1 && vars[3] <= 1 && total <= 2) {
                if (total == 0) return;
                if (total == 2) {
                    int first = -1, second = -1;
                    for (int e = 0; e < 4; ++e)
                        if (vars[static_cast<std::size_t>(e)] == 1) (first < 0 ? first : second) = e;
                    auto na = make_node(c, first), nb = make_node(c, second);
                    if (na && nb) {
                        res.arcs.push_back({*na, *nb});
                        return;
                    }
                }
                // total == 1 (a corner-grazing artifact) or isolation failed
                res.unresolved = true;
                return;
            }
        }
        if (c.level >= cap_) {
            res.unresolved = true;
            return;
        }
        for (const auto& kid : children(c)) recurse(kid, res);
    }
};

struct UnionFind {
    std::vector<int> root;
    explicit UnionFind(std::size_t n) : root(n)
    {
        for (std::size_t i = 0; i < n; ++i) root[i] = static_cast<int>(i);
    }
    int find(int x)
    {
        while (root[static_cast<std::size_t>(x)] != x) {
            root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
            x = root[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) root[static_cast<std::size_t>(a)] = b;
    }
};

struct CountOutcome {
    int count = 0;
    bool resolved = false;
};

CountOutcome run_count(const QuarticForm& raw, int depth, bool parallel)
{
    if (raw.is_zero()) throw BadInput("cannot count components of the zero form");
    const QuarticForm f = raw.canonical();

    Builder builder(f, depth, depth + 24);
    auto tasks = builder.make_tasks();
    std::vector<BuildResult> results(tasks.size());

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::size_t i = 0; i < tasks.size(); ++i) builder.process(tasks[i], results[i]);

    std::map<NodeKey, int> ids;
    std::vector<Arc> arcs;
    bool unresolved = false;
    for (const auto& r : results) {
        unresolved = unresolved || r.unresolved;
        for (const auto& a : r.arcs) {
            ids.emplace(a.a, static_cast<int>(ids.size()));
            ids.emplace(a.b, static_cast<int>(ids.size()));
            arcs.push_back(a);
        }
    }
    UnionFind uf(ids.size());
    for (const auto& a : arcs) uf.unite(ids[a.a], ids[a.b]);

    // every node must carry exactly two arcs for closed curves; a mismatch
    // marks an unresolved picture
    std::map<NodeKey, int> degree;
    for (const auto& a : arcs) {
        ++degree[a.a];
        ++degree[a.b];
    }
    for (const auto& [k, d] : degree)
        if (d != 2) unresolved = true;

    std::vector<int> roots;
    for (auto& [key, id] : ids) roots.push_back(uf.find(id));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return {static_cast<int>(roots.size()), !unresolved};
}

} // namespace

std::vector<std::int8_t> chart_signs(const QuarticForm& raw, int chart, int n, bool parallel)
{
    const QuarticForm f = raw.canonical();
    std::vector<std::int8_t> out(static_cast<std::size_t>(n + 1) * (n + 1));
    const Int big_n(n);
    ChartPoly poly;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int j = 0; j <= n; ++j) {
        Int y(2 * j - n);
        auto rc = poly.row_coeffs(chart, f, big_n, y);
        for (int i = 0; i <= n; ++i)
            out[static_cast<std::size_t>(i) * (n + 1) + static_cast<std::size_t>(j)] = sign_of_horner(rc, Int(2 * i - n));
    }
    return out;
}

int count_components(const QuarticForm& f, int depth) { return run_count(f, depth, true).count; }

int count_components_serial(const QuarticForm& f, int depth) { return run_count(f, depth, false).count; }

OvalCount count_ovals(const QuarticForm& f, int depth)
{
    if (depth < 1) throw BadInput("depth must be at least 1");
    OvalCount out;
    out.depth = depth;
    auto coarse = run_count(f, depth - 1, true);
    auto fine = run_count(f, depth, true);
    out.count = fine.count;
    out.stabilized = coarse.resolved && fine.resolved && coarse.count == fine.count;
    return out;
}

} // namespace octad::geo
