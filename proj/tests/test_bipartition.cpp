#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "octad/bipartition.hpp"
#include "octad/errors.hpp"
#include "octad/sp6.hpp"

using namespace octad;
using namespace octad::bip;

namespace {

Bipartition quad_of(int a, int b, int c, int d)
{
    return Bipartition::from_mask(static_cast<std::uint8_t>((1u << a) | (1u << b) | (1u << c) | (1u << d)));
}

} // namespace

TEST_CASE("canonical representatives")
{
    CHECK(Bipartition::from_mask(0b11111100).mask == 0b00000011);     // complement to size 2
    CHECK(Bipartition::from_mask(0b00001111).mask == 0b11110000);     // 4-set containing 0 flips
    CHECK(Bipartition::from_mask(0b11110000).mask == 0b11110000);
    CHECK(Bipartition::from_mask(0xFF).mask == 0);                    // full set ~ empty
    CHECK_THROWS_AS(Bipartition::from_mask(0b111), BadInput);
    CHECK(all_bipartitions().size() == 64);
    int pairs = 0, quads = 0, empties = 0;
    for (auto b : all_bipartitions()) {
        if (b.is_pair()) ++pairs;
        if (b.is_quadruple()) ++quads;
        if (b.is_empty()) ++empties;
    }
    CHECK(pairs == 28);
    CHECK(quads == 35);
    CHECK(empties == 1);
}

TEST_CASE("sum is the symmetric difference on classes")
{
    CHECK(bp_add(pair_of(0, 1), pair_of(1, 2)) == pair_of(0, 2));
    CHECK(bp_add(quad_of(0, 1, 2, 3), pair_of(0, 1)) == pair_of(2, 3));
    for (auto x : all_bipartitions()) {
        CHECK(bp_add(x, x).is_empty());
        CHECK(bp_add(x, Bipartition{}) == x);
        for (auto y : all_bipartitions()) {
            CHECK(bp_add(x, y) == bp_add(y, x));
            // complement representative of y gives the same class sum
            CHECK(bp_add(x, y) == Bipartition::from_mask(static_cast<std::uint8_t>(x.mask ^ static_cast<std::uint8_t>(~y.mask))));
        }
    }
}

TEST_CASE("inner product")
{
    CHECK(bp_dot(pair_of(0, 1), pair_of(1, 2)) == 1);
    CHECK(bp_dot(pair_of(0, 1), pair_of(2, 3)) == 0);
    for (auto x : all_bipartitions()) {
        CHECK(bp_dot(x, x) == 0);
        for (auto y : all_bipartitions()) {
            CHECK(bp_dot(x, y) == bp_dot(y, x));
            // well defined under complementing either side
            int alt = std::popcount(static_cast<unsigned>(x.mask & static_cast<std::uint8_t>(~y.mask))) & 1;
            CHECK(bp_dot(x, y) == alt);
        }
    }
    // nondegenerate
    for (auto x : all_bipartitions()) {
        if (x.is_empty()) continue;
        bool hits = false;
        for (auto y : all_bipartitions()) hits = hits || bp_dot(x, y) == 1;
        CHECK(hits);
    }
}

TEST_CASE("parity function")
{
    CHECK(bp_h(pair_of(0, 1)) == 1);
    CHECK(bp_h(quad_of(0, 1, 2, 3)) == 0);
    CHECK(bp_h(Bipartition{}) == 0);
    int ones = 0;
    for (auto x : all_bipartitions()) ones += bp_h(x);
    CHECK(ones == 28);
}

TEST_CASE("build_phi yields an isomorphism of inner-product spaces with parity")
{
    for (unsigned qb = 0; qb < 64; ++qb) {
        f2::Quad q{static_cast<std::uint8_t>(qb)};
        if (f2::arf(q) != 0) continue;
        PhiMap phi = build_phi(q);  // must not throw for even q
        CHECK(phi(Bipartition{}).is_zero());
        std::set<std::uint8_t> image;
        for (auto x : all_bipartitions()) {
            image.insert(phi(x).bits);
            CHECK(q(phi(x)) == bp_h(x));  // parity matching; pairs land on q=1
            for (auto y : all_bipartitions()) {
                CHECK(phi(bp_add(x, y)) == phi(x) + phi(y));        // additive
                CHECK(f2::dot(phi(x), phi(y)) == bp_dot(x, y));     // product preserving
            }
        }
        CHECK(image.size() == 64);
    }
}

TEST_CASE("phi transports products: worked example")
{
    PhiMap phi = build_phi(f2::Quad{0});
    CHECK(f2::dot(phi(pair_of(0, 1)), phi(pair_of(1, 2))) == 1);
}

TEST_CASE("permutations transport to isometries")
{
    PhiMap phi = build_phi(f2::Quad{0b101000});

    CHECK(perm_to_isometry(kIdPerm, phi) == f2::kIdentity);

    SUBCASE("transpositions map to transvections at pair classes")
    {
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                Perm t = kIdPerm;
                std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
                f2::Isometry g = perm_to_isometry(t, phi);
                f2::Vec v = phi(pair_of(i, j));
                for (int k = 0; k < f2::kDim; ++k)
                    CHECK(g.col[static_cast<std::size_t>(k)] == f2::transvection(v, f2::kBasis[static_cast<std::size_t>(k)]));
            }
    }

    SUBCASE("homomorphism on random pairs")
    {
        std::mt19937_64 rng(11);
        Perm a = kIdPerm, b = kIdPerm;
        for (int k = 0; k < 100; ++k) {
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            CHECK(perm_to_isometry(compose(a, b), phi) ==
                  perm_to_isometry(a, phi).compose(perm_to_isometry(b, phi)));
        }
    }

    SUBCASE("isometries preserve the target")
    {
        std::mt19937_64 rng(13);
        Perm a = kIdPerm;
        for (int k = 0; k < 50; ++k) {
            std::shuffle(a.begin(), a.end(), rng);
            CHECK(f2::preserves(perm_to_isometry(a, phi), phi.target()));
        }
    }
}

TEST_CASE("isometry_to_perm inverts perm_to_isometry")
{
    PhiMap phi = build_phi(f2::Quad{0});
    CHECK(isometry_to_perm(f2::kIdentity, phi) == kIdPerm);

    std::mt19937_64 rng(17);
    Perm a = kIdPerm;
    for (int k = 0; k < 1000; ++k) {
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(isometry_to_perm(perm_to_isometry(a, phi), phi) == a);
    }

    SUBCASE("transvection at a pair class is the transposition")
    {
        f2::Vec v = phi(pair_of(2, 5));
        f2::Isometry t;
        for (int i = 0; i < f2::kDim; ++i) t.col[static_cast<std::size_t>(i)] = f2::transvection(v, f2::kBasis[static_cast<std::size_t>(i)]);
        Perm expect = kIdPerm;
        std::swap(expect[2], expect[5]);
        CHECK(isometry_to_perm(t, phi) == expect);
    }

    SUBCASE("non-stabilizing isometry is rejected")
    {
        // a transvection at a q=0 vector does not preserve q
        f2::Vec v{};
        for (unsigned x = 1; x < 64; ++x)
            if (phi.target()(f2::Vec{static_cast<std::uint8_t>(x)}) == 0) { v.bits = static_cast<std::uint8_t>(x); break; }
        f2::Isometry t;
        for (int i = 0; i < f2::kDim; ++i) t.col[static_cast<std::size_t>(i)] = f2::transvection(v, f2::kBasis[static_cast<std::size_t>(i)]);
        CHECK_THROWS_AS(isometry_to_perm(t, phi), NotInduced);
    }
}

TEST_CASE("bifid substitution")
{
    Bipartition v = quad_of(0, 1, 2, 3);
    CHECK(bifid(v, pair_of(0, 1)) == pair_of(2, 3));
    CHECK(bifid(v, pair_of(0, 4)) == pair_of(0, 4));
    CHECK(bifid(v, pair_of(4, 5)) == pair_of(6, 7));
    CHECK_THROWS_AS(bifid(pair_of(0, 1), pair_of(0, 1)), BadInput);
    CHECK_THROWS_AS(bifid(v, v), BadInput);
}

TEST_CASE("theta monodromy")
{
    CHECK_THROWS_AS(theta_monodromy(f2::Quad{0}, f2::Vec{0}), BadInput);

    for (unsigned qb = 0; qb < 64; ++qb) {
        f2::Quad q{static_cast<std::uint8_t>(qb)};
        for (unsigned vb = 1; vb < 64; ++vb) {
            f2::Vec v{static_cast<std::uint8_t>(vb)};
            auto map = theta_monodromy(q, v);
            for (unsigned x = 0; x < 64; ++x) {
                // involution
                CHECK(map[map[x]] == x);
                // theta fixed iff q_theta(v) = 1
                f2::Vec xv{static_cast<std::uint8_t>(x)};
                int qtheta_v = (q(v) + f2::dot(xv, v)) & 1;
                CHECK((map[x] == x) == (qtheta_v == 1));
                // arf of the labeled function is preserved
                auto label_arf = [&](unsigned lab) {
                    f2::Quad t;
                    for (int i = 0; i < f2::kDim; ++i) {
                        int val = (q(f2::kBasis[static_cast<std::size_t>(i)]) +
                                   f2::dot(f2::Vec{static_cast<std::uint8_t>(lab)}, f2::kBasis[static_cast<std::size_t>(i)])) & 1;
                        t.diag |= static_cast<std::uint8_t>(val << i);
                    }
                    return f2::arf(t);
                };
                CHECK(label_arf(x) == label_arf(map[x]));
            }
        }
    }
}

TEST_CASE("theta monodromy acts on bipartitions as transposition or bifid")
{
    for (unsigned qb = 0; qb < 64; ++qb) {
        f2::Quad q{static_cast<std::uint8_t>(qb)};
        if (f2::arf(q) != 0) continue;
        PhiMap phi = build_phi(q);
        for (unsigned vb = 1; vb < 64; ++vb) {
            f2::Vec v{static_cast<std::uint8_t>(vb)};
            auto map = theta_monodromy(q, v);
            Bipartition bv = phi.inverse(v);
            auto induced = [&](Bipartition x) { return phi.inverse(f2::Vec{map[phi(x).bits]}); };

            if (bv.is_pair()) {
                // the transposition of the two labels of bv, on all 64
                int i = std::countr_zero(static_cast<unsigned>(bv.mask));
                int j = 7;
                while (!((bv.mask >> j) & 1)) --j;
                Perm t = kIdPerm;
                std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
                for (auto x : all_bipartitions()) CHECK(induced(x) == permuted(t, x));
            } else if (bv.is_quadruple()) {
                // on pair classes: the bifid substitution at bv
                int fixed_pairs = 0;
                for (auto x : all_bipartitions()) {
                    if (!x.is_pair()) continue;
                    CHECK(induced(x) == bifid(bv, x));
                    if (induced(x) == x) ++fixed_pairs;
                }
                CHECK(fixed_pairs == 16);  // pairs meeting both sides: 4 * 4
            }
        }
    }
}

TEST_CASE("pair-class transvections generate the full point symmetric group")
{
    PhiMap phi = build_phi(f2::Quad{0});
    std::set<Perm> gens;
    for (auto x : all_bipartitions()) {
        if (!x.is_pair()) continue;
        f2::Vec v = phi(x);
        f2::Isometry t;
        for (int i = 0; i < f2::kDim; ++i) t.col[static_cast<std::size_t>(i)] = f2::transvection(v, f2::kBasis[static_cast<std::size_t>(i)]);
        gens.insert(isometry_to_perm(t, phi));
    }
    CHECK(gens.size() == 28);
    // the 28 permutations are exactly all transpositions, which generate S8
    for (const auto& p : gens) {
        int moved = 0;
        for (int i = 0; i < 8; ++i) moved += p[static_cast<std::size_t>(i)] != i;
        CHECK(moved == 2);
    }
}
