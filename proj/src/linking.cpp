#include "octad/linking.hpp"

#include <atomic>

namespace octad::geo {
namespace {

int pair_sign(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    Int det = stacked_det(a, b, c, d);
    if (det == 0) throw NotSkew("chords meet; linking sign undefined");
    return sgn(det) > 0 ? 1 : -1;
}

} // namespace

int triple_link(const Line& l1, const Line& l2, const Line& l3)
{
    int s = pair_sign(l1.a, l1.b, l2.a, l2.b);
    s *= pair_sign(l1.a, l1.b, l3.a, l3.b);
    s *= pair_sign(l2.a, l2.b, l3.a, l3.b);
    return s;
}

int sign6(const std::array<ProjPoint, 6>& pts)
{
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d)
                    if (coplanar(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                                 pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]))
                        throw NotSimple("a coplanar quadruple makes the configuration non-simple");

    // the 15 perfect matchings of {0..5} into three chords
    int product = 1;
    std::array<int, 6> idx{};
    auto chord = [&](int u, int v) { return Line{pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]}; };
    for (int p1 = 1; p1 < 6; ++p1) {          // partner of 0
        int rest[4], n = 0;
        for (int k = 1; k < 6; ++k)
            if (k != p1) rest[n++] = k;
        for (int p2 = 1; p2 < 4; ++p2) {      // partner of rest[0]
            idx = {0, p1, rest[0], rest[p2], 0, 0};
            int m = 0;
            for (int k = 1; k < 4; ++k)
                if (k != p2) idx[static_cast<std::size_t>(4 + m++)] = rest[k];
            product *= triple_link(chord(idx[0], idx[1]), chord(idx[2], idx[3]), chord(idx[4], idx[5]));
        }
    }
    return product;
}

int sign7(const std::array<ProjPoint, 7>& pts)
{
    int product = 1;
    for (int skip = 0; skip < 7; ++skip) {
        std::array<ProjPoint, 6> sub;
        int n = 0;
        for (int k = 0; k < 7; ++k)
            if (k != skip) sub[static_cast<std::size_t>(n++)] = pts[static_cast<std::size_t>(k)];
        product *= sign6(sub);
    }
    return product;
}

namespace {

OctadSigns octad_signs_impl(const std::array<ProjPoint, 8>& pts, bool parallel)
{
    OctadReport report = verify_octad(pts);
    if (report.cls != OctadReport::Class::Regular)
        throw NotRegular("per-point signs are defined for regular octads only");

    OctadSigns out;
    std::atomic<bool> failed{false};
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int skip = 0; skip < 8; ++skip) {
        if (failed.load(std::memory_order_relaxed)) continue;
        std::array<ProjPoint, 7> sub;
        int n = 0;
        for (int k = 0; k < 8; ++k)
            if (k != skip) sub[static_cast<std::size_t>(n++)] = pts[static_cast<std::size_t>(k)];
        try {
            out.per_point[static_cast<std::size_t>(skip)] = sign7(sub);
        } catch (const Error&) {
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load())
        throw NotSimple("a residual 7-configuration is not simple");  // cannot happen for regular octads

    out.common_sign = out.per_point[0];
    for (int i = 1; i < 8; ++i)
        if (out.per_point[static_cast<std::size_t>(i)] != out.common_sign)
            throw Inconsistent("per-point signs disagree on a configuration that verified as regular");
    return out;
}

} // namespace

OctadSigns octad_signs(const std::array<ProjPoint, 8>& pts) { return octad_signs_impl(pts, true); }

OctadSigns octad_signs_serial(const std::array<ProjPoint, 8>& pts) { return octad_signs_impl(pts, false); }

ProjPoint mirror(const ProjPoint& p)
{
    return ProjPoint::make({Rat(-p.c[0]), Rat(p.c[1]), Rat(p.c[2]), Rat(p.c[3])});
}

} // namespace octad::geo
