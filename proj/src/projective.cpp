#include "octad/projective.hpp"

#include <algorithm>
#include <set>

namespace octad::geo {

ProjPoint ProjPoint::make(const std::array<Rat, 4>& coords)
{
    std::vector<Rat> v(coords.begin(), coords.end());
    auto prim = primitive_vector(v);  // BadInput on the zero vector
    ProjPoint p;
    std::copy(prim.begin(), prim.end(), p.c.begin());
    return p;
}

QuadricForm QuadricForm::make(const std::array<std::array<Rat, 4>, 4>& entries)
{
    std::vector<Rat> flat;
    flat.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw BadInput("quadric matrix must be symmetric");
            flat.push_back(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    auto prim = primitive_vector(flat);
    QuadricForm q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = prim[static_cast<std::size_t>(4 * i + j)];
    return q;
}

Int QuadricForm::eval(const ProjPoint& p) const { return bilinear(p, p); }

Int QuadricForm::bilinear(const ProjPoint& p, const ProjPoint& q) const
{
    Int s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s += p.c[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * q.c[static_cast<std::size_t>(j)];
    return s;
}

std::array<Int, 10> quadric_monomials(const ProjPoint& p)
{
    const auto& c = p.c;
    return {c[0] * c[0], c[0] * c[1], c[0] * c[2], c[0] * c[3], c[1] * c[1],
            c[1] * c[2], c[1] * c[3], c[2] * c[2], c[2] * c[3], c[3] * c[3]};
}

namespace {
// (row, col) of the 10 monomials x2,xy,xz,xw,y2,yz,yw,z2,zw,w2
constexpr int kMonIdx[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
} // namespace

std::array<Rat, 10> quadric_coefficients(const QuadricForm& q)
{
    std::array<Rat, 10> c;
    for (int k = 0; k < 10; ++k) {
        int i = kMonIdx[k][0], j = kMonIdx[k][1];
        c[static_cast<std::size_t>(k)] = (i == j) ? Rat(q.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                                                  : Rat(2 * q.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return c;
}

QuadricForm quadric_from_coefficients(const std::array<Rat, 10>& c)
{
    std::array<std::array<Rat, 4>, 4> m{};
    for (int k = 0; k < 10; ++k) {
        int i = kMonIdx[k][0], j = kMonIdx[k][1];
        if (i == j) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(k)];
        } else {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(k)] / 2;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(k)] / 2;
        }
    }
    return QuadricForm::make(m);
}

Int stacked_det(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s)
{
    const std::array<const ProjPoint*, 4> rows = {&p, &q, &r, &s};
    // cofactor expansion over the first row with exact 3x3 minors
    auto minor3 = [&](int skip_col) {
        Int det = 0;
        int cols[3], n = 0;
        for (int c = 0; c < 4; ++c)
            if (c != skip_col) cols[n++] = c;
        const auto& a = rows[1]->c;
        const auto& b = rows[2]->c;
        const auto& d = rows[3]->c;
        det += a[static_cast<std::size_t>(cols[0])] * (b[static_cast<std::size_t>(cols[1])] * d[static_cast<std::size_t>(cols[2])] - b[static_cast<std::size_t>(cols[2])] * d[static_cast<std::size_t>(cols[1])]);
        det -= a[static_cast<std::size_t>(cols[1])] * (b[static_cast<std::size_t>(cols[0])] * d[static_cast<std::size_t>(cols[2])] - b[static_cast<std::size_t>(cols[2])] * d[static_cast<std::size_t>(cols[0])]);
        det += a[static_cast<std::size_t>(cols[2])] * (b[static_cast<std::size_t>(cols[0])] * d[static_cast<std::size_t>(cols[1])] - b[static_cast<std::size_t>(cols[1])] * d[static_cast<std::size_t>(cols[0])]);
        return det;
    };
    Int det = 0;
    for (int c = 0; c < 4; ++c) {
        if (p.c[static_cast<std::size_t>(c)] == 0) continue;
        Int term = p.c[static_cast<std::size_t>(c)] * minor3(c);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

bool coplanar(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s)
{
    return stacked_det(p, q, r, s) == 0;
}

NetOfQuadrics net_through(const std::array<ProjPoint, 7>& pts)
{
    QMat eval(7, 10);
    for (std::size_t i = 0; i < 7; ++i) {
        auto mono = quadric_monomials(pts[i]);
        for (std::size_t j = 0; j < 10; ++j) eval.at(i, j) = Rat(mono[j]);
    }
    auto ker = eval.kernel();
    if (ker.size() != 3)
        throw DegenerateInput("the 7 points do not impose independent conditions on quadrics");

    // Prefer the basis whose (x^2, y^2, z^2) coefficient rows form the
    // identity: it varies continuously with the points and keeps the plane
    // coordinates of the singular-quadric curve well spread.  Fall back to
    // the raw echelon basis when that projection is singular.
    QMat proj(3, 3);  // proj.at(s, g) = coefficient of monomial s in kernel vector g
    for (std::size_t g = 0; g < 3; ++g) {
        proj.at(0, g) = ker[g][0];  // x^2 at index 0
        proj.at(1, g) = ker[g][4];  // y^2 at index 4
        proj.at(2, g) = ker[g][7];  // z^2 at index 7
    }
    std::array<std::array<Rat, 10>, 3> rows{};
    if (proj.det() != 0) {
        // combo.at(g, t): coefficient of kernel vector g in normalized vector t
        QMat combo = proj.solve(QMat::identity(3));
        for (std::size_t t = 0; t < 3; ++t)
            for (std::size_t g = 0; g < 3; ++g)
                for (std::size_t j = 0; j < 10; ++j)
                    rows[t][j] += combo.at(g, t) * ker[g][j];
    } else {
        for (std::size_t g = 0; g < 3; ++g)
            std::copy(ker[g].begin(), ker[g].end(), rows[g].begin());
    }

    NetOfQuadrics net;
    for (int g = 0; g < 3; ++g)
        net.gen[static_cast<std::size_t>(g)] = quadric_from_coefficients(rows[static_cast<std::size_t>(g)]);
    return net;
}

const std::array<std::array<int, 3>, 15> kQuarticExponents = {{
    {4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {2, 0, 2},
    {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3}, {0, 4, 0}, {0, 3, 1},
    {0, 2, 2}, {0, 1, 3}, {0, 0, 4}}};

Rat QuarticForm::eval(const Rat& t0, const Rat& t1, const Rat& t2) const
{
    Rat s;
    for (int k = 0; k < 15; ++k) {
        if (c[static_cast<std::size_t>(k)] == 0) continue;
        Rat term = c[static_cast<std::size_t>(k)];
        for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][0]; ++e) term *= t0;
        for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][1]; ++e) term *= t1;
        for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][2]; ++e) term *= t2;
        s += term;
    }
    return s;
}

bool QuarticForm::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

QuarticForm QuarticForm::canonical() const
{
    std::vector<Rat> v(c.begin(), c.end());
    auto prim = primitive_vector(v);
    QuarticForm out;
    for (int k = 0; k < 15; ++k) out.c[static_cast<std::size_t>(k)] = Rat(prim[static_cast<std::size_t>(k)]);
    return out;
}

namespace {

int quartic_index(int e0, int e1, int e2)
{
    for (int k = 0; k < 15; ++k)
        if (kQuarticExponents[static_cast<std::size_t>(k)][0] == e0 &&
            kQuarticExponents[static_cast<std::size_t>(k)][1] == e1 &&
            kQuarticExponents[static_cast<std::size_t>(k)][2] == e2)
            return k;
    throw BadInput("exponent triple out of range");
}

} // namespace

QuarticForm hessian(const NetOfQuadrics& net)
{
    // entry (i,j) of the pencil matrix is the linear form
    // t0 M0[i][j] + t1 M1[i][j] + t2 M2[i][j]
    auto entry = [&](int i, int j, int g) {
        return net.gen[static_cast<std::size_t>(g)].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    QuarticForm out;
    int perm[4] = {0, 1, 2, 3};
    do {
        int sign = 1;
        {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (perm[i] > perm[j]) ++inv;
            sign = (inv % 2 == 0) ? 1 : -1;
        }
        // multiply the four linear forms L_i = entries (i, perm[i])
        // current: coefficients of a degree-d form in t0,t1,t2
        std::vector<Int> cur = {1};  // degree 0
        auto idx = [](int deg, int e1, int e2) {
            // index of t1^e1 t2^e2 within degree-deg lex-descending order:
            // exponent of t0 is deg-e1-e2; enumerate (e1,e2) with e1+e2 <= deg
            // in the same order as kQuarticExponents: by descending e0, then e1
            int n = 0;
            for (int s = 0; s <= deg; ++s)       // s = e1 + e2
                for (int a = s; a >= 0; --a) {   // a = e1
                    if (a == e1 && s - a == e2) return n;
                    ++n;
                }
            return -1;
        };
        for (int row = 0; row < 4; ++row) {
            int col = perm[row];
            int deg = row;  // current holds a degree-`deg` form
            std::vector<Int> next(static_cast<std::size_t>((deg + 2) * (deg + 3) / 2));
            for (int s = 0; s <= deg; ++s)
                for (int a = s; a >= 0; --a) {
                    int b = s - a;
                    const Int& coeff = cur[static_cast<std::size_t>(idx(deg, a, b))];
                    if (coeff == 0) continue;
                    for (int g = 0; g < 3; ++g) {
                        const Int& lin = entry(row, col, g);
                        if (lin == 0) continue;
                        int na = a + (g == 1), nb = b + (g == 2);
                        next[static_cast<std::size_t>(idx(deg + 1, na, nb))] += coeff * lin;
                    }
                }
            cur = std::move(next);
        }
        for (int a = 0; a + 0 <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b) {
                const Int& coeff = cur[static_cast<std::size_t>(idx(4, a, b))];
                if (coeff == 0) continue;
                int k = quartic_index(4 - a - b, a, b);
                out.c[static_cast<std::size_t>(k)] += (sign > 0) ? Rat(coeff) : Rat(-coeff);
            }
    } while (std::next_permutation(perm, perm + 4));
    return out;
}

QuarticForm hessian_by_interpolation(const NetOfQuadrics& net)
{
    // evaluate det(t0 M0 + t1 M1 + t2 M2) at the simplex grid t0 = 1,
    // (t1,t2) = (i,j), i + j <= 4, and solve for the 15 coefficients
    std::vector<std::array<Rat, 3>> pts;
    for (int i = 0; i + 0 <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) pts.push_back({Rat(1), Rat(i), Rat(j)});

    QMat a(15, 15);
    std::vector<Rat> rhs(15);
    for (std::size_t r = 0; r < 15; ++r) {
        const auto& t = pts[r];
        for (int k = 0; k < 15; ++k) {
            Rat m = 1;
            for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][0]; ++e) m *= t[0];
            for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][1]; ++e) m *= t[1];
            for (int e = 0; e < kQuarticExponents[static_cast<std::size_t>(k)][2]; ++e) m *= t[2];
            a.at(r, static_cast<std::size_t>(k)) = m;
        }
        QMat pencil(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                pencil.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    t[0] * Rat(net.gen[0].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) +
                    t[1] * Rat(net.gen[1].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) +
                    t[2] * Rat(net.gen[2].m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        rhs[r] = pencil.det();
    }
    auto sol = a.solve(rhs);
    QuarticForm out;
    std::copy(sol.begin(), sol.end(), out.c.begin());
    return out;
}

std::array<Int, 3> bitangent_pencil(const NetOfQuadrics& net, const ProjPoint& p, const ProjPoint& q)
{
    if (p == q) throw BadInput("chord endpoints must be distinct");
    for (const auto& g : net.gen)
        if (g.eval(p) != 0 || g.eval(q) != 0)
            throw NotOnBase("chord endpoints must lie on the base locus of the net");
    std::array<Int, 3> l = {net.gen[0].bilinear(p, q), net.gen[1].bilinear(p, q), net.gen[2].bilinear(p, q)};
    if (l[0] == 0 && l[1] == 0 && l[2] == 0)
        throw Degenerate("every member of the net contains the chord");
    std::vector<Rat> v = {Rat(l[0]), Rat(l[1]), Rat(l[2])};
    auto prim = primitive_vector(v);
    return {prim[0], prim[1], prim[2]};
}

OctadReport verify_octad(const std::array<ProjPoint, 8>& pts)
{
    OctadReport r;

    r.all_distinct = true;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)]) r.all_distinct = false;

    QMat eval(8, 10);
    for (std::size_t i = 0; i < 8; ++i) {
        auto mono = quadric_monomials(pts[i]);
        for (std::size_t j = 0; j < 10; ++j) eval.at(i, j) = Rat(mono[j]);
    }
    r.eval_rank = static_cast<int>(eval.rank());

    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d)
                    if (coplanar(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                                 pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]))
                        r.coplanar_quads.push_back({a, b, c, d});

    auto complementary_pair = [&] {
        if (r.coplanar_quads.size() != 2) return false;
        std::set<int> all;
        for (const auto& q : r.coplanar_quads)
            for (int x : q) all.insert(x);
        return all.size() == 8;
    };

    if (r.all_distinct && r.eval_rank == 7 && r.coplanar_quads.empty())
        r.cls = OctadReport::Class::Regular;
    else if (r.all_distinct && r.eval_rank == 7 && complementary_pair())
        r.cls = OctadReport::Class::FourCollisionWall;
    else
        r.cls = OctadReport::Class::Invalid;
    return r;
}

const char* to_string(OctadReport::Class c)
{
    switch (c) {
        case OctadReport::Class::Regular: return "regular-candidate";
        case OctadReport::Class::FourCollisionWall: return "4-collision-wall";
        default: return "invalid";
    }
}

} // namespace octad::geo
