#include "octad/sp6.hpp"

#include <algorithm>
#include <atomic>

#include "octad/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace octad::f2 {
namespace {

// The enumeration walks images of the hyperbolic tuple
// (a1,b1,a2,b2,a3,b3); basis index of the k-th tuple slot.
constexpr int kTupleSlot[6] = {0, 3, 1, 4, 2, 5};

struct SearchState {
    std::array<Vec, 6> img{};  // images indexed by basis index
    int depth = 0;             // slots filled
};

// Does candidate v fit slot `depth` given the images already chosen?
bool fits(const SearchState& s, const std::optional<Quad>& q, int depth, Vec v)
{
    if (v.is_zero()) return false;
    int bi = kTupleSlot[depth];
    if (q && (*q)(v) != (*q)(kBasis[static_cast<std::size_t>(bi)])) return false;
    for (int d = 0; d < depth; ++d) {
        int bj = kTupleSlot[d];
        if (dot(v, s.img[static_cast<std::size_t>(bj)]) !=
            dot(kBasis[static_cast<std::size_t>(bi)], kBasis[static_cast<std::size_t>(bj)]))
            return false;
    }
    return true;
}

void dfs(SearchState& s, const std::optional<Quad>& q, std::vector<Isometry>& out,
         std::size_t limit, bool& overflow)
{
    if (overflow) return;
    if (s.depth == kDim) {
        if (out.size() >= limit) { overflow = true; return; }
        Isometry g;
        g.col = s.img;
        out.push_back(g);
        return;
    }
    int bi = kTupleSlot[s.depth];
    for (std::uint8_t bits = 1; bits < kSpaceSize; ++bits) {
        Vec v{bits};
        if (!fits(s, q, s.depth, v)) continue;
        s.img[static_cast<std::size_t>(bi)] = v;
        ++s.depth;
        dfs(s, q, out, limit, overflow);
        --s.depth;
        if (overflow) return;
    }
}

// The symplectic-pairing constraints already force linear independence
// along the hyperbolic tuple: each new pair lives in the perp of the span
// so far, which meets that span trivially.  No rank tracking is needed.

std::vector<Isometry> enumerate(std::optional<Quad> q, std::size_t limit, bool parallel)
{
    if (limit == 0)
        throw ResourceGuard("isometry enumeration requested without a materialization limit");

    std::vector<Isometry> out;
    bool overflow = false;

    if (!parallel) {
        SearchState s;
        dfs(s, q, out, limit, overflow);
    } else {
        // Split on the image of a1 (63 independent branches).
        std::vector<std::vector<Isometry>> parts(kSpaceSize);
        std::atomic<bool> stop{false};
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
        for (int first = 1; first < kSpaceSize; ++first) {
            if (stop.load(std::memory_order_relaxed)) continue;
            SearchState s;
            Vec v{static_cast<std::uint8_t>(first)};
            if (!fits(s, q, 0, v)) continue;
            s.img[static_cast<std::size_t>(kTupleSlot[0])] = v;
            s.depth = 1;
            bool of = false;
            dfs(s, q, parts[static_cast<std::size_t>(first)], limit, of);
            if (of) stop.store(true, std::memory_order_relaxed);
        }
        if (stop.load()) overflow = true;
        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        if (total > limit) overflow = true;
        if (!overflow) {
            out.reserve(total);
            for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        }
    }

    if (overflow)
        throw ResourceGuard("isometry enumeration exceeds the materialization limit");

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Isometry> isometry_group(std::optional<Quad> q, std::size_t limit)
{
    return enumerate(q, limit, true);
}

std::vector<Isometry> isometry_group_serial(std::optional<Quad> q, std::size_t limit)
{
    return enumerate(q, limit, false);
}

namespace {

void validate_gram(const BasisSpec& spec)
{
    std::array<std::uint8_t, 6> rows{};
    for (int i = 0; i < kDim; ++i) {
        if (spec.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw BadInput("Gram data has a nonzero diagonal entry; no quadratic refinement exists");
        for (int j = 0; j < kDim; ++j) {
            std::uint8_t e = spec.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e > 1) throw BadInput("Gram entries must be 0 or 1");
            if (e != spec.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw BadInput("Gram data is not symmetric");
            rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(e << j);
        }
    }
    // nondegeneracy: the 6x6 Gram matrix must be invertible over Z/2
    int rank = 0;
    std::array<std::uint8_t, 6> basis{};
    for (auto r : rows) {
        std::uint8_t v = r;
        for (int k = 0; k < rank; ++k) {
            std::uint8_t low = basis[static_cast<std::size_t>(k)] & static_cast<std::uint8_t>(-basis[static_cast<std::size_t>(k)]);
            if (v & low) v ^= basis[static_cast<std::size_t>(k)];
        }
        if (v) basis[static_cast<std::size_t>(rank++)] = v;
    }
    if (rank != kDim) throw BadInput("Gram data is degenerate (rank < 6)");
}

int spec_q_value(const BasisSpec& spec, unsigned coords)
{
    // extend by q(x+y) = q(x) + q(y) + x.y from the declared basis data
    int v = 0;
    for (int i = 0; i < kDim; ++i) {
        if (!((coords >> i) & 1)) continue;
        v ^= spec.q[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < kDim; ++j)
            if ((coords >> j) & 1) v ^= spec.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return v;
}

} // namespace

int arf_of_spec(const BasisSpec& spec)
{
    validate_gram(spec);
    int ones = 0;
    for (unsigned c = 0; c < kSpaceSize; ++c) ones += spec_q_value(spec, c);
    if (ones == 28) return 0;
    if (ones == 36) return 1;
    throw BadInput("declared q-values are inconsistent with a nondegenerate quadratic space");
}

namespace {

struct WittState {
    std::array<Vec, 6> img{};
    std::array<std::uint8_t, 6> span{};  // echelon basis of the chosen images
    int rank = 0;

    bool independent(Vec v) const
    {
        std::uint8_t x = v.bits;
        for (int k = 0; k < rank; ++k) {
            std::uint8_t low = span[static_cast<std::size_t>(k)] & static_cast<std::uint8_t>(-span[static_cast<std::size_t>(k)]);
            if (x & low) x ^= span[static_cast<std::size_t>(k)];
        }
        return x != 0;
    }

    void push(Vec v)
    {
        std::uint8_t x = v.bits;
        for (int k = 0; k < rank; ++k) {
            std::uint8_t low = span[static_cast<std::size_t>(k)] & static_cast<std::uint8_t>(-span[static_cast<std::size_t>(k)]);
            if (x & low) x ^= span[static_cast<std::size_t>(k)];
        }
        span[static_cast<std::size_t>(rank++)] = x;
    }
};

bool witt_dfs(const BasisSpec& spec, Quad target, WittState& s, int depth)
{
    if (depth == kDim) return true;
    for (std::uint8_t bits = 0; bits < kSpaceSize; ++bits) {
        Vec v{bits};
        if (target(v) != spec.q[static_cast<std::size_t>(depth)]) continue;
        bool ok = true;
        for (int d = 0; d < depth && ok; ++d)
            ok = dot(v, s.img[static_cast<std::size_t>(d)]) ==
                 spec.gram[static_cast<std::size_t>(depth)][static_cast<std::size_t>(d)];
        if (!ok) continue;
        if (!s.independent(v)) continue;
        auto saved = s;
        s.img[static_cast<std::size_t>(depth)] = v;
        s.push(v);
        if (witt_dfs(spec, target, s, depth + 1)) return true;
        s = saved;
    }
    return false;
}

} // namespace

Isometry find_isometry(const BasisSpec& spec, Quad target)
{
    if (arf_of_spec(spec) != arf(target))
        throw NoIsometry("Arf invariants differ; no isometry matches the declared data");
    WittState s;
    if (!witt_dfs(spec, target, s, 0))
        throw NoIsometry("no isometry realizes the declared basis data");  // unreachable for valid input
    Isometry g;
    g.col = s.img;
    return g;
}

} // namespace octad::f2
