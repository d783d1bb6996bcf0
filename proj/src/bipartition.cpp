#include "octad/bipartition.hpp"

#include <algorithm>
#include <bit>

#include "octad/errors.hpp"
#include "octad/sp6.hpp"

namespace octad::bip {

Bipartition Bipartition::from_mask(std::uint8_t raw)
{
    int pc = std::popcount(raw);
    if (pc % 2 != 0) throw BadInput("bipartition side must have even cardinality");
    if (pc > 4 || (pc == 4 && (raw & 1)))
        raw = static_cast<std::uint8_t>(~raw);
    return Bipartition{raw};
}

int Bipartition::size() const { return std::popcount(mask); }

Bipartition pair_of(int i, int j)
{
    if (i == j || i < 0 || j < 0 || i > 7 || j > 7) throw BadInput("pair labels must be distinct and in 0..7");
    return Bipartition::from_mask(static_cast<std::uint8_t>((1u << i) | (1u << j)));
}

Bipartition bp_add(Bipartition x, Bipartition y)
{
    return Bipartition::from_mask(static_cast<std::uint8_t>(x.mask ^ y.mask));
}

int bp_dot(Bipartition x, Bipartition y)
{
    return std::popcount(static_cast<unsigned>(x.mask & y.mask)) & 1;
}

int bp_h(Bipartition x)
{
    return (x.size() / 2) & 1;
}

const std::array<Bipartition, 64>& all_bipartitions()
{
    static const std::array<Bipartition, 64> table = [] {
        std::array<Bipartition, 64> t{};
        int n = 0;
        for (unsigned m = 0; m < 256; ++m) {
            int pc = std::popcount(m);
            if (pc % 2 != 0) continue;
            if (pc > 4 || (pc == 4 && (m & 1))) continue;  // keep canonical reps only
            t[static_cast<std::size_t>(n++)] = Bipartition{static_cast<std::uint8_t>(m)};
        }
        return t;  // n == 64: 1 empty + 28 pairs + 35 quadruples avoiding label 0
    }();
    return table;
}

int bp_index(Bipartition x)
{
    static const std::array<int, 256> lookup = [] {
        std::array<int, 256> t{};
        t.fill(-1);
        const auto& all = all_bipartitions();
        for (int i = 0; i < 64; ++i) t[all[static_cast<std::size_t>(i)].mask] = i;
        return t;
    }();
    int idx = lookup[x.mask];
    if (idx < 0) throw BadInput("not a canonical bipartition representative");
    return idx;
}

Perm compose(const Perm& f, const Perm& g)
{
    Perm r{};
    for (int i = 0; i < 8; ++i) r[static_cast<std::size_t>(i)] = f[g[static_cast<std::size_t>(i)]];
    return r;
}

Bipartition permuted(const Perm& p, Bipartition x)
{
    std::uint8_t m = 0;
    for (int i = 0; i < 8; ++i)
        if ((x.mask >> i) & 1) m |= static_cast<std::uint8_t>(1u << p[static_cast<std::size_t>(i)]);
    return Bipartition::from_mask(m);
}

PhiMap::PhiMap(std::array<f2::Vec, 64> fwd, f2::Quad target) : fwd_(fwd), target_(target)
{
    std::array<bool, 64> seen{};
    for (int i = 0; i < 64; ++i) {
        f2::Vec v = fwd_[static_cast<std::size_t>(i)];
        if (seen[v.bits]) throw BadInput("PhiMap assignment is not a bijection");
        seen[v.bits] = true;
        inv_[v.bits] = all_bipartitions()[static_cast<std::size_t>(i)];
    }
}

PhiMap build_phi(f2::Quad q)
{
    if (f2::arf(q) != 0) throw BadInput("build_phi requires an even quadratic function");

    // Pair basis {0,1},{0,2},..,{0,6}: pairwise products 1, parities 1.
    f2::BasisSpec spec;
    for (int i = 0; i < 6; ++i) {
        spec.q[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < 6; ++j)
            spec.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? 0 : 1;
    }
    f2::Isometry images = f2::find_isometry(spec, q);  // never NoIsometry for even q

    std::array<f2::Vec, 64> fwd{};
    for (unsigned coords = 0; coords < 64; ++coords) {
        Bipartition b{};  // empty
        f2::Vec v{};
        for (int i = 0; i < 6; ++i) {
            if (!((coords >> i) & 1)) continue;
            b = bp_add(b, pair_of(0, i + 1));
            v += images.col[static_cast<std::size_t>(i)];
        }
        fwd[static_cast<std::size_t>(bp_index(b))] = v;
    }
    return PhiMap(fwd, q);
}

PhiMap compose(const f2::Isometry& g, const PhiMap& phi)
{
    if (!f2::preserves(g, phi.target())) throw BadInput("composing PhiMap with a non-stabilizing isometry");
    std::array<f2::Vec, 64> fwd{};
    const auto& all = all_bipartitions();
    for (int i = 0; i < 64; ++i) fwd[static_cast<std::size_t>(i)] = g(phi(all[static_cast<std::size_t>(i)]));
    return PhiMap(fwd, phi.target());
}

f2::Isometry perm_to_isometry(const Perm& p, const PhiMap& phi)
{
    f2::Isometry g;
    for (int i = 0; i < f2::kDim; ++i) {
        Bipartition b = phi.inverse(f2::kBasis[static_cast<std::size_t>(i)]);
        g.col[static_cast<std::size_t>(i)] = phi(permuted(p, b));
    }
    return g;
}

Perm isometry_to_perm(const f2::Isometry& g, const PhiMap& phi)
{
    if (!f2::preserves(g, phi.target()))
        throw NotInduced("isometry does not preserve the target quadratic function");

    // Recover the label permutation from the action on pair classes: the
    // images of {i,j} and {i,k} share exactly the label p(i).
    Perm p{};
    for (int i = 0; i < 8; ++i) {
        int j = (i == 0) ? 1 : 0;
        int k = (i == 7) ? 6 : 7;
        Bipartition bi = phi.inverse(g(phi(pair_of(i, j))));
        Bipartition bk = phi.inverse(g(phi(pair_of(i, k))));
        std::uint8_t common = bi.mask & bk.mask;
        if (std::popcount(common) != 1)
            throw NotInduced("action on pair classes is not induced by a label permutation");
        p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(std::countr_zero(common));
    }

    // consistency on every pair class
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            Bipartition expect = pair_of(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            if (phi.inverse(g(phi(pair_of(i, j)))) != expect)
                throw NotInduced("action on pair classes is not induced by a label permutation");
        }
    return p;
}

Bipartition bifid(Bipartition v, Bipartition pair)
{
    if (!v.is_quadruple()) throw BadInput("bifid requires a quadruple bipartition");
    if (!pair.is_pair()) throw BadInput("bifid requires a pair bipartition");
    std::uint8_t a = v.mask;
    std::uint8_t b = static_cast<std::uint8_t>(~v.mask);
    if ((pair.mask & a) == pair.mask) return Bipartition::from_mask(static_cast<std::uint8_t>(a & ~pair.mask));
    if ((pair.mask & b) == pair.mask) return Bipartition::from_mask(static_cast<std::uint8_t>(b & ~pair.mask));
    return pair;
}

std::array<std::uint8_t, 64> theta_monodromy(f2::Quad q, f2::Vec v)
{
    if (v.is_zero()) throw BadInput("theta monodromy requires a nonzero vanishing class");
    std::array<std::uint8_t, 64> map{};
    for (unsigned x = 0; x < 64; ++x) {
        f2::Vec xv{static_cast<std::uint8_t>(x)};
        int eps = (q(v) + f2::dot(xv, v) + 1) & 1;
        map[x] = static_cast<std::uint8_t>(eps ? (x ^ v.bits) : x);
    }
    return map;
}

} // namespace octad::bip
