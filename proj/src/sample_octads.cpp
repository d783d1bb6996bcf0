#include "octad/sample_octads.hpp"

#include <algorithm>
#include <random>

#include "octad/completion.hpp"

namespace octad::geo {

std::array<ProjPoint, 8> cube_octad()
{
    std::array<ProjPoint, 8> pts;
    int n = 0;
    for (int x : {1, -1})
        for (int y : {1, -1})
            for (int z : {1, -1})
                pts[static_cast<std::size_t>(n++)] = ProjPoint::make({Rat(x), Rat(y), Rat(z), Rat(1)});
    return pts;
}

std::array<ProjPoint, 8> sample_regular_octad(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jitter(-4, 4);
    const auto cube = cube_octad();

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::array<ProjPoint, 7> seven;
        for (int i = 0; i < 7; ++i) {
            std::array<Rat, 4> c;
            for (int k = 0; k < 3; ++k)
                c[static_cast<std::size_t>(k)] = Rat(cube[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(k)]) +
                                                 Rat(jitter(rng), 16);
            c[3] = 1;
            seven[static_cast<std::size_t>(i)] = ProjPoint::make(c);
        }
        try {
            ProjPoint eighth = complete_octad(seven);
            std::array<ProjPoint, 8> octad;
            std::copy(seven.begin(), seven.end(), octad.begin());
            octad[7] = eighth;
            if (verify_octad(octad).cls == OctadReport::Class::Regular) return octad;
        } catch (const Error&) {
            // degenerate draw; take another
        }
    }
    throw DegenerateInput("perturbed-cube pipeline failed to produce a regular octad for this seed");
}

namespace {

Int det4_rows(const std::array<std::array<Int, 4>, 4>& r)
{
    Int det = 0;
    int idx[4] = {0, 1, 2, 3};
    // expansion over permutations is fine at this size
    std::sort(idx, idx + 4);
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (idx[i] > idx[j]) ++inv;
        Int term = r[0][static_cast<std::size_t>(idx[0])] * r[1][static_cast<std::size_t>(idx[1])] *
                   r[2][static_cast<std::size_t>(idx[2])] * r[3][static_cast<std::size_t>(idx[3])];
        det += (inv % 2 == 0) ? term : -term;
    } while (std::next_permutation(idx, idx + 4));
    return det;
}

} // namespace

WallPair wall_crossing_pair(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dir(-3, 3);

    auto octad = sample_regular_octad(seed);
    std::array<ProjPoint, 7> base;
    std::copy(octad.begin(), octad.begin() + 7, base.begin());

    for (int attempt = 0; attempt < 50; ++attempt) {
        std::array<Int, 4> delta = {dir(rng), dir(rng), dir(rng), 0};
        if (delta[0] == 0 && delta[1] == 0 && delta[2] == 0) continue;

        // roots of the 20 coplanarity determinants of quadruples through
        // point 0, each linear in the step parameter
        std::vector<Rat> roots;
        bool degenerate = false;
        for (int a = 1; a < 7 && !degenerate; ++a)
            for (int b = a + 1; b < 7 && !degenerate; ++b)
                for (int c = b + 1; c < 7 && !degenerate; ++c) {
                    std::array<std::array<Int, 4>, 4> m0 = {base[0].c, base[static_cast<std::size_t>(a)].c,
                                                            base[static_cast<std::size_t>(b)].c, base[static_cast<std::size_t>(c)].c};
                    std::array<std::array<Int, 4>, 4> md = {delta, base[static_cast<std::size_t>(a)].c,
                                                            base[static_cast<std::size_t>(b)].c, base[static_cast<std::size_t>(c)].c};
                    Int constant = det4_rows(m0), slope = det4_rows(md);
                    if (slope == 0) {
                        if (constant == 0) degenerate = true;  // the whole segment is on a wall
                        continue;
                    }
                    roots.push_back(Rat(-constant) / Rat(slope));
                }
        if (degenerate) continue;

        std::sort(roots.begin(), roots.end());
        // smallest strictly positive root, required unique
        Rat first, second;
        bool have_first = false, have_second = false;
        int first_mult = 0;
        for (const auto& r : roots) {
            if (r <= 0) continue;
            if (!have_first) {
                first = r;
                have_first = true;
                first_mult = 1;
            } else if (r == first) {
                ++first_mult;
            } else {
                second = r;
                have_second = true;
                break;
            }
        }
        if (!have_first || first_mult != 1) continue;

        Rat before_s = first / 2;
        Rat after_s = have_second ? Rat((first + second) / 2) : Rat(first + 1);

        auto moved = [&](const Rat& s) {
            std::array<Rat, 4> c;
            for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = Rat(base[0].c[static_cast<std::size_t>(k)]) + s * Rat(delta[static_cast<std::size_t>(k)]);
            std::array<ProjPoint, 7> out = base;
            out[0] = ProjPoint::make(c);
            return out;
        };

        WallPair wp{moved(before_s), moved(after_s)};

        // both sides must be simple 7-configurations
        auto simple = [](const std::array<ProjPoint, 7>& pts) {
            for (int a = 0; a < 7; ++a)
                for (int b = a + 1; b < 7; ++b)
                    for (int c = b + 1; c < 7; ++c)
                        for (int d = c + 1; d < 7; ++d)
                            if (coplanar(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                                         pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]))
                                return false;
            return true;
        };
        if (simple(wp.before) && simple(wp.after)) return wp;
    }
    throw DegenerateInput("no single-wall segment found for this seed");
}

} // namespace octad::geo
