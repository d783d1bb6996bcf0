#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "octad/errors.hpp"
#include "octad/theta_diagram.hpp"

using namespace octad;
using namespace octad::diag;

TEST_CASE("bit-string round trip")
{
    CHECK(ThetaDiagram::from_bits("000101").q.diag == 0b101000);
    CHECK(ThetaDiagram::from_bits("010001").bits() == "010001");
    CHECK_THROWS_AS(ThetaDiagram::from_bits("01010"), BadInput);
    CHECK_THROWS_AS(ThetaDiagram::from_bits("01010x"), BadInput);
}

TEST_CASE("class labels of printed matrices")
{
    auto label = [](const char* s) { return class_label(ThetaDiagram::from_bits(s)); };
    CHECK(label("000101") == ClassLabel{0, 4, 0, {}});
    CHECK(label("000000") == ClassLabel{0, 0, 0, {}});
    CHECK(label("111001") == ClassLabel{4, 3, 1, {}});
    CHECK(label("010101") == ClassLabel{2, 4, 0, {}});
    CHECK(label("011101") == ClassLabel{2, 4, 1, {}});
}

TEST_CASE("s4 relabeling")
{
    ThetaDiagram d = ThetaDiagram::from_bits("000101");

    CHECK(s4_apply({0, 1, 2, 3}, d) == d);
    CHECK(s4_apply({1, 0, 2, 3}, d) == ThetaDiagram::from_bits("000110"));

    SUBCASE("defining property: colors travel with the labels")
    {
        for (const auto& s : all_s4())
            for (unsigned bits = 0; bits < 64; ++bits) {
                ThetaDiagram x{f2::Quad{static_cast<std::uint8_t>(bits)}};
                ThetaDiagram y = s4_apply(s, x);
                for (int i = 0; i < 4; ++i) {
                    CHECK(y.oval(s[static_cast<std::size_t>(i)]) == x.oval(i));
                    for (int j = i + 1; j < 4; ++j) {
                        int si = s[static_cast<std::size_t>(i)], sj = s[static_cast<std::size_t>(j)];
                        CHECK(y.bridge(std::min(si, sj), std::max(si, sj)) == x.bridge(i, j));
                    }
                }
            }
    }

    SUBCASE("group action and label invariance")
    {
        for (const auto& s : all_s4())
            for (const auto& t : all_s4()) {
                S4 st{};
                for (int i = 0; i < 4; ++i) st[static_cast<std::size_t>(i)] = s[t[static_cast<std::size_t>(i)]];
                for (unsigned bits = 0; bits < 64; ++bits) {
                    ThetaDiagram x{f2::Quad{static_cast<std::uint8_t>(bits)}};
                    CHECK(s4_apply(s, s4_apply(t, x)) == s4_apply(st, x));
                    CHECK(class_label(s4_apply(s, x)) == class_label(x));
                }
            }
    }
}

TEST_CASE("orbit census")
{
    auto orbits = enumerate_orbits();
    CHECK(orbits.size() == 11);

    int even = 0, odd = 0, even_total = 0, odd_total = 0;
    std::map<std::pair<int, int>, int> even_sizes, odd_sizes;
    for (const auto& o : orbits) {
        if (o.label.parity == 0) {
            ++even;
            even_total += static_cast<int>(o.members.size());
            even_sizes[{o.label.alpha, o.label.beta}] = static_cast<int>(o.members.size());
        } else {
            ++odd;
            odd_total += static_cast<int>(o.members.size());
            odd_sizes[{o.label.alpha, o.label.beta}] = static_cast<int>(o.members.size());
        }
    }
    CHECK(even == 8);
    CHECK(odd == 3);
    CHECK(even_total == 36);
    CHECK(odd_total == 28);

    std::map<std::pair<int, int>, int> expect_even = {
        {{0, 0}, 1}, {{4, 0}, 1}, {{2, 0}, 6}, {{0, 3}, 4},
        {{2, 3}, 12}, {{0, 4}, 3}, {{2, 4}, 6}, {{4, 4}, 3}};
    std::map<std::pair<int, int>, int> expect_odd = {{{2, 4}, 12}, {{2, 3}, 12}, {{4, 3}, 4}};
    CHECK(even_sizes == expect_even);
    CHECK(odd_sizes == expect_odd);

    SUBCASE("orbits partition the 64 matrices")
    {
        std::set<std::uint8_t> all;
        for (const auto& o : orbits)
            for (const auto& m : o.members) all.insert(m.q.diag);
        CHECK(all.size() == 64);
    }

    SUBCASE("representatives are lexicographically minimal and sorted")
    {
        for (const auto& o : orbits)
            for (const auto& m : o.members) CHECK(o.rep <= m);
        for (std::size_t i = 1; i < orbits.size(); ++i) CHECK(orbits[i - 1].rep < orbits[i].rep);
    }

    SUBCASE("the eleven printed matrices land in eleven distinct orbits")
    {
        const char* printed[11] = {
            "000101", "010101", "111101", "000001", "010001", "000000", "010000", "111000",  // even
            "011101", "011001", "111001"};                                                   // odd
        std::set<std::string> hit_reps;
        for (const char* s : printed) {
            ThetaDiagram d = ThetaDiagram::from_bits(s);
            for (const auto& o : orbits)
                if (std::find(o.members.begin(), o.members.end(), d) != o.members.end())
                    hit_reps.insert(o.rep.bits());
        }
        CHECK(hit_reps.size() == 11);
    }
}

TEST_CASE("wall-crossing moves")
{
    ThetaDiagram d00 = ThetaDiagram::from_bits("000000");

    CHECK(class_label(apply_move(d00, {Move::Kind::BlackVertex, 3, 0})) == ClassLabel{0, 3, 0, {}});
    CHECK(class_label(apply_move(d00, {Move::Kind::BlackEdge, 0, 1})) == ClassLabel{2, 0, 0, {}});

    SUBCASE("black edge with differently colored endpoints keeps the class")
    {
        ThetaDiagram d23 = ThetaDiagram::from_bits("010001");
        REQUIRE(class_label(d23) == ClassLabel{2, 3, 0, {}});
        REQUIRE(d23.oval(0) == 1);
        REQUIRE(d23.oval(1) == 0);
        REQUIRE(d23.bridge(0, 1) == 0);
        CHECK(class_label(apply_move(d23, {Move::Kind::BlackEdge, 0, 1})) == ClassLabel{2, 3, 0, {}});
    }

    SUBCASE("moves at white objects are rejected")
    {
        ThetaDiagram d03 = ThetaDiagram::from_bits("000001");
        REQUIRE(d03.bridge(0, 3) == 1);
        CHECK_THROWS_AS(apply_move(d03, {Move::Kind::BlackEdge, 0, 3}), MoveNotAllowed);
        ThetaDiagram d20 = ThetaDiagram::from_bits("010000");
        REQUIRE(d20.oval(2) == 1);
        CHECK_THROWS_AS(apply_move(d20, {Move::Kind::BlackVertex, 2, 0}), MoveNotAllowed);
    }

    SUBCASE("odd diagrams and malformed indices are rejected")
    {
        CHECK_THROWS_AS(apply_move(ThetaDiagram::from_bits("111001"), {Move::Kind::BlackVertex, 0, 0}), BadInput);
        CHECK_THROWS_AS(apply_move(d00, {Move::Kind::BlackEdge, 1, 1}), BadInput);
        CHECK_THROWS_AS(apply_move(d00, {Move::Kind::BlackVertex, 4, 0}), BadInput);
    }

    SUBCASE("every admissible move is a parity-preserving involution")
    {
        for (unsigned bits = 0; bits < 64; ++bits) {
            ThetaDiagram d{f2::Quad{static_cast<std::uint8_t>(bits)}};
            if (f2::arf(d.q) != 0) continue;
            for (const auto& m : admissible_moves(d)) {
                ThetaDiagram e = apply_move(d, m);
                CHECK(f2::arf(e.q) == 0);
                CHECK(apply_move(e, m) == d);
            }
        }
    }
}

TEST_CASE("class adjacency graph")
{
    AdjacencyGraph g = adjacency_graph();

    using E = std::array<std::array<int, 2>, 2>;
    std::set<E> expect = {
        E{{{0, 0}, {0, 3}}}, E{{{0, 3}, {0, 4}}}, E{{{2, 0}, {2, 3}}},
        E{{{2, 3}, {2, 4}}}, E{{{0, 0}, {2, 0}}}, E{{{2, 0}, {4, 0}}},
        E{{{0, 3}, {2, 3}}}, E{{{0, 4}, {2, 4}}}, E{{{2, 4}, {4, 4}}}};
    CHECK(std::set<E>(g.edges.begin(), g.edges.end()) == expect);

    std::set<std::array<int, 2>> loops(g.self_loops.begin(), g.self_loops.end());
    CHECK(loops == std::set<std::array<int, 2>>{{2, 0}, {2, 3}});

    SUBCASE("worked adjacencies")
    {
        // the all-black class touches only (0,3) and (2,0)
        int touching_00 = 0;
        for (const auto& e : g.edges)
            if (e[0] == std::array<int, 2>{0, 0} || e[1] == std::array<int, 2>{0, 0}) ++touching_00;
        CHECK(touching_00 == 2);
        // (4,0) and (4,4) are not adjacent: beta difference is even
        CHECK(std::find(g.edges.begin(), g.edges.end(), E{{{4, 0}, {4, 4}}}) == g.edges.end());
    }
}
