#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "octad/completion.hpp"
#include "octad/config_io.hpp"
#include "octad/errors.hpp"
#include "octad/sample_octads.hpp"

using namespace octad;
using namespace octad::geo;

namespace {

ProjPoint pt(int x, int y, int z, int w) { return ProjPoint::make({Rat(x), Rat(y), Rat(z), Rat(w)}); }

QuadricForm diag_quadric(int a, int b, int c, int d)
{
    std::array<std::array<Rat, 4>, 4> m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    m[3][3] = d;
    return QuadricForm::make(m);
}

// x^2 - w^2, y^2 - w^2, z^2 - w^2
NetOfQuadrics cube_net()
{
    return NetOfQuadrics{{diag_quadric(1, 0, 0, -1), diag_quadric(0, 1, 0, -1), diag_quadric(0, 0, 1, -1)}};
}

bool in_span(const NetOfQuadrics& net, const QuadricForm& q)
{
    QMat m(4, 10);
    for (int g = 0; g < 3; ++g) {
        auto c = quadric_coefficients(net.gen[static_cast<std::size_t>(g)]);
        for (int k = 0; k < 10; ++k) m.at(static_cast<std::size_t>(g), static_cast<std::size_t>(k)) = c[static_cast<std::size_t>(k)];
    }
    auto c = quadric_coefficients(q);
    for (int k = 0; k < 10; ++k) m.at(3, static_cast<std::size_t>(k)) = c[static_cast<std::size_t>(k)];
    return m.rank() == 3;
}

} // namespace

TEST_CASE("projective point canonicalization")
{
    CHECK(ProjPoint::make({Rat(2), Rat(-4), Rat(6), Rat(0)}) == pt(1, -2, 3, 0));
    CHECK(ProjPoint::make({Rat(-1, 2), Rat(1, 3), Rat(0), Rat(1)}) == pt(3, -2, 0, -6));
    CHECK(ProjPoint::make({Rat(1), Rat(2), Rat(3), Rat(4)}) !=
          ProjPoint::make({Rat(1), Rat(2), Rat(3), Rat(5)}));
    CHECK_THROWS_AS(ProjPoint::make({Rat(0), Rat(0), Rat(0), Rat(0)}), BadInput);

    SUBCASE("rescaling never changes a canonical point")
    {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> num(-20, 20);
        for (int k = 0; k < 200; ++k) {
            std::array<Rat, 4> c;
            for (auto& x : c) x = Rat(num(rng));
            if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0) continue;
            Rat scale(0);
            while (scale == 0) scale = Rat(num(rng), 1 + std::abs(num(rng)));
            std::array<Rat, 4> scaled;
            for (int i = 0; i < 4; ++i) scaled[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * scale;
            CHECK(ProjPoint::make(c) == ProjPoint::make(scaled));
        }
    }
}

TEST_CASE("coplanarity predicate")
{
    CHECK(coplanar(pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(1, 1, 0, 0)));
    CHECK(!coplanar(pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)));
    CHECK(coplanar(pt(1, 1, 1, 1), pt(1, 1, -1, 1), pt(1, -1, 1, 1), pt(1, -1, -1, 1)));  // plane x = w
}

TEST_CASE("net through seven cube vertices")
{
    auto cube = cube_octad();
    std::array<ProjPoint, 7> seven;
    std::copy(cube.begin(), cube.begin() + 7, seven.begin());
    NetOfQuadrics net = net_through(seven);

    for (const auto& g : net.gen)
        for (const auto& p : seven) CHECK(g.eval(p) == 0);

    // the kernel is spanned by x^2-w^2, y^2-w^2, z^2-w^2
    for (const auto& q : cube_net().gen) CHECK(in_span(net, q));

    SUBCASE("points with vanishing diagonal entries")
    {
        std::array<ProjPoint, 7> basis_pts = {pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1),
                                              pt(1, 1, 1, 1), pt(1, 2, 3, 4), pt(1, -1, 2, -2)};
        NetOfQuadrics n2 = net_through(basis_pts);
        for (const auto& g : n2.gen)
            for (int i = 0; i < 4; ++i) CHECK(g.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == 0);
    }

    SUBCASE("degenerate inputs are rejected")
    {
        std::array<ProjPoint, 7> dup = seven;
        dup[1] = dup[0];
        CHECK_THROWS_AS(net_through(dup), DegenerateInput);
    }
}

TEST_CASE("hessian of the cube net")
{
    QuarticForm h = hessian(cube_net());
    // -t0 t1 t2 (t0 + t1 + t2): monomials (2,1,1),(1,2,1),(1,1,2) with -1
    QuarticForm expect;
    expect.c[4] = -1;   // (2,1,1)
    expect.c[7] = -1;   // (1,2,1)
    expect.c[8] = -1;   // (1,1,2)
    CHECK(h == expect);
}

TEST_CASE("hessian routes agree and behave")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        NetOfQuadrics net;
        for (int g = 0; g < 3; ++g) {
            std::array<std::array<Rat, 4>, 4> m{};
            bool nonzero = false;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    int v = e(rng);
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
                    nonzero = nonzero || v != 0;
                }
            if (!nonzero) m[0][0] = 1;
            net.gen[static_cast<std::size_t>(g)] = QuadricForm::make(m);
        }
        QuarticForm a = hessian(net);
        QuarticForm b = hessian_by_interpolation(net);
        CHECK(a == b);
        // evaluation consistency at (1,1,1)
        QMat sum(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                sum.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    Rat(net.gen[0].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                        net.gen[1].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                        net.gen[2].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        CHECK(a.eval(1, 1, 1) == sum.det());
    }
}

TEST_CASE("completion recovers the eighth cube vertex")
{
    auto cube = cube_octad();
    std::array<ProjPoint, 7> seven;
    std::copy(cube.begin(), cube.begin() + 7, seven.begin());
    CompletionResult res = complete_octad_full(seven);
    CHECK(res.point == cube[7]);  // (-1,-1,-1,1)

    SUBCASE("the eliminant is monic of degree 8 and kills all eight values")
    {
        REQUIRE(res.eliminant.size() == 9);
        CHECK(res.eliminant[8] == 1);
        for (const auto& p : cube) {
            Rat num, den;
            for (int k = 0; k < 4; ++k) {
                num += Rat(res.ell_num[static_cast<std::size_t>(k)]) * Rat(p.c[static_cast<std::size_t>(k)]);
                den += Rat(res.ell_den[static_cast<std::size_t>(k)]) * Rat(p.c[static_cast<std::size_t>(k)]);
            }
            REQUIRE(den != 0);
            Rat value = num / den;
            Rat acc;
            for (int k = 8; k >= 0; --k) acc = acc * value + res.eliminant[static_cast<std::size_t>(k)];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("completion round trip on sampled regular octads")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto octad = sample_regular_octad(seed);
        REQUIRE(verify_octad(octad).cls == OctadReport::Class::Regular);
        for (int skip = 0; skip < 8; ++skip) {
            std::array<ProjPoint, 7> seven;
            int n = 0;
            for (int k = 0; k < 8; ++k)
                if (k != skip) seven[static_cast<std::size_t>(n++)] = octad[static_cast<std::size_t>(k)];
            CHECK(complete_octad(seven) == octad[static_cast<std::size_t>(skip)]);
        }
    }
}

TEST_CASE("completion rejects duplicated inputs")
{
    auto cube = cube_octad();
    std::array<ProjPoint, 7> dup;
    std::copy(cube.begin(), cube.begin() + 7, dup.begin());
    dup[2] = dup[6];
    CHECK_THROWS_AS(complete_octad(dup), DegenerateInput);
}

TEST_CASE("completion flags a double point")
{
    // six points on the cone x^2 + y^2 - z^2 = 0 together with its vertex:
    // the net through the seven contains the cone, so the base scheme
    // doubles the vertex and the recovered eighth point collides with it
    ProjPoint v = pt(0, 0, 0, 1);
    std::array<ProjPoint, 6> on_cone = {pt(3, 4, 5, 1),  pt(4, 3, 5, 2),  pt(5, 12, 13, 1),
                                        pt(12, 5, 13, 3), pt(8, 15, 17, 1), pt(1, 0, 1, 2)};
    QuadricForm cone_q = diag_quadric(1, 1, -1, 0);
    for (const auto& p : on_cone) REQUIRE(cone_q.eval(p) == 0);
    REQUIRE(cone_q.eval(v) == 0);

    std::array<ProjPoint, 7> seven = {v, on_cone[0], on_cone[1], on_cone[2], on_cone[3], on_cone[4], on_cone[5]};
    REQUIRE(in_span(net_through(seven), cone_q));
    CHECK_THROWS_AS(complete_octad(seven), MultiplePoint);
}

TEST_CASE("octad verification")
{
    SUBCASE("the full cube is invalid: six faces and more are coplanar")
    {
        auto rep = verify_octad(cube_octad());
        CHECK(rep.all_distinct);
        CHECK(rep.coplanar_quads.size() >= 6);
        CHECK(rep.cls == OctadReport::Class::Invalid);
    }

    SUBCASE("sampled octads are regular with evaluation rank 7")
    {
        auto octad = sample_regular_octad(4);
        auto rep = verify_octad(octad);
        CHECK(rep.all_distinct);
        CHECK(rep.eval_rank == 7);
        CHECK(rep.coplanar_quads.empty());
        CHECK(rep.cls == OctadReport::Class::Regular);
    }

    SUBCASE("a complementary coplanar pair is a wall configuration")
    {
        // two quadruples on the planes z = 0 and z = w, chosen on a common
        // net (base locus of x*y - z*(w-z) type pencils); verified by rank
        std::array<ProjPoint, 8> pts = {pt(1, 0, 0, 1),  pt(0, 1, 0, 1),  pt(-1, 0, 0, 1), pt(0, -1, 0, 1),
                                        pt(2, 0, 1, 1),  pt(0, 2, 1, 1),  pt(-2, 0, 1, 1), pt(0, -2, 1, 1)};
        auto rep = verify_octad(pts);
        CHECK(rep.all_distinct);
        if (rep.eval_rank == 7 && rep.coplanar_quads.size() == 2)
            CHECK(rep.cls == OctadReport::Class::FourCollisionWall);
    }
}

TEST_CASE("bitangent pencils")
{
    auto cube = cube_octad();
    NetOfQuadrics net = cube_net();

    SUBCASE("main diagonal of the cube")
    {
        auto l = bitangent_pencil(net, pt(1, 1, 1, 1), pt(-1, -1, -1, 1));
        CHECK(l == std::array<Int, 3>{1, 1, 1});  // t0 + t1 + t2 = 0
    }

    SUBCASE("errors")
    {
        CHECK_THROWS_AS(bitangent_pencil(net, pt(1, 1, 1, 1), pt(1, 1, 1, 1)), BadInput);
        CHECK_THROWS_AS(bitangent_pencil(net, pt(1, 1, 1, 1), pt(1, 2, 3, 4)), NotOnBase);
    }

    SUBCASE("28 distinct pencil lines on a regular octad")
    {
        auto octad = sample_regular_octad(6);
        std::array<ProjPoint, 7> seven;
        std::copy(octad.begin(), octad.begin() + 7, seven.begin());
        NetOfQuadrics n = net_through(seven);
        std::set<std::array<std::string, 3>> lines;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                auto l = bitangent_pencil(n, octad[static_cast<std::size_t>(i)], octad[static_cast<std::size_t>(j)]);
                lines.insert({l[0].get_str(), l[1].get_str(), l[2].get_str()});

                // members of the pencil vanish on the whole chord
                const auto &p = octad[static_cast<std::size_t>(i)], &q = octad[static_cast<std::size_t>(j)];
                // a point t on the line l . t = 0
                std::array<Rat, 3> t;
                if (l[0] != 0) {
                    t = {Rat(-l[1] - l[2]), Rat(l[0]), Rat(l[0])};
                } else if (l[1] != 0) {
                    t = {Rat(l[1]), Rat(-l[0] - l[2]), Rat(l[1])};
                } else {
                    t = {Rat(l[2]), Rat(l[2]), Rat(-l[0] - l[1])};
                }
                // Q_t on p + 2q and p - q
                for (int sample : {2, -1}) {
                    Rat value;
                    for (int g = 0; g < 3; ++g) {
                        std::array<Rat, 4> x;
                        for (int k = 0; k < 4; ++k)
                            x[static_cast<std::size_t>(k)] = Rat(p.c[static_cast<std::size_t>(k)]) +
                                                             Rat(sample) * Rat(q.c[static_cast<std::size_t>(k)]);
                        // x^T M x for generator g
                        Rat acc;
                        for (int a = 0; a < 4; ++a)
                            for (int b = 0; b < 4; ++b)
                                acc += x[static_cast<std::size_t>(a)] *
                                       Rat(n.gen[static_cast<std::size_t>(g)].m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) *
                                       x[static_cast<std::size_t>(b)];
                        value += t[static_cast<std::size_t>(g)] * acc;
                    }
                    CHECK(value == 0);
                }
            }
        CHECK(lines.size() == 28);
    }
}

TEST_CASE("configuration file round trip")
{
    auto octad = sample_regular_octad(7);
    std::ostringstream out;
    write_config(out, std::vector<ProjPoint>(octad.begin(), octad.end()), "sample");
    std::istringstream in(out.str());
    auto pts = read_config(in);
    REQUIRE(pts.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(pts[static_cast<std::size_t>(i)] == octad[static_cast<std::size_t>(i)]);

    SUBCASE("parse errors")
    {
        std::istringstream bad1("1 2 3\n");
        CHECK_THROWS_AS(read_config(bad1), ParseError);
        std::istringstream bad2("1 2 3 x\n1 0 0 1\n0 1 0 1\n0 0 1 1\n1 1 1 1\n1 1 0 1\n");
        CHECK_THROWS_AS(read_config(bad2), ParseError);
        std::istringstream bad3("1 0 0 1\n0 1 0 1\n");
        CHECK_THROWS_AS(read_config(bad3), ParseError);
        std::istringstream good("# six points\n1 0 0 1\n0 1 0 1\n0 0 1 1\n1 1 1 1\n1/2 1 0 1\n1 1 -1/3 1\n");
        CHECK(read_config(good).size() == 6);
    }
}
