#include "octad/completion.hpp"

#include <random>

namespace octad::geo {
namespace {

// Degree-d monomials in (x,y,z,w), lex-descending exponents.
std::vector<std::array<int, 4>> monomials(int d)
{
    std::vector<std::array<int, 4>> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    return out;
}

int monomial_index(const std::vector<std::array<int, 4>>& mons, const std::array<int, 4>& e)
{
    for (std::size_t k = 0; k < mons.size(); ++k)
        if (mons[k] == e) return static_cast<int>(k);
    throw BadInput("monomial out of range");
}

// Reduction of degree-d coefficient vectors modulo the row space of the
// ideal's products, onto the 8 non-pivot monomials.
struct Reducer {
    QMat rref_rows;                    // reduced rows, one per pivot
    std::vector<std::size_t> pivots;   // pivot columns
    std::vector<std::size_t> basis;    // non-pivot columns (quotient basis)

    static Reducer build(QMat products, std::size_t expected_rank)
    {
        Reducer r;
        r.pivots = products.rref();
        if (r.pivots.size() != expected_rank)
            throw NotZeroDimensional("the net's base scheme is not a clean length-8 scheme");
        std::vector<bool> is_pivot(products.cols(), false);
        for (auto c : r.pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < products.cols(); ++c)
            if (!is_pivot[c]) r.basis.push_back(c);
        r.rref_rows = QMat(expected_rank, products.cols());
        for (std::size_t i = 0; i < expected_rank; ++i)
            for (std::size_t j = 0; j < products.cols(); ++j) r.rref_rows.at(i, j) = products.at(i, j);
        return r;
    }

    std::vector<Rat> reduce(std::vector<Rat> v) const
    {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            Rat coeff = v[pivots[k]];
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coeff * rref_rows.at(k, j);
        }
        std::vector<Rat> out;
        out.reserve(basis.size());
        for (auto c : basis) out.push_back(v[c]);
        return out;
    }
};

struct Eliminated {
    ProjPoint point;
    std::vector<Rat> eliminant;
};

// One elimination attempt in the given coordinates; nullopt asks for a
// coordinate retry (the last functional vanishes at a base or input point).
std::optional<Eliminated> eliminate(const NetOfQuadrics& net, const std::array<ProjPoint, 7>& pts)
{
    const auto mon2 = monomials(2);
    const auto mon3 = monomials(3);
    const auto mon4 = monomials(4);

    std::array<std::array<Rat, 10>, 3> gen_coeffs;
    for (int g = 0; g < 3; ++g) gen_coeffs[static_cast<std::size_t>(g)] = quadric_coefficients(net.gen[static_cast<std::size_t>(g)]);

    // degree-3 part: generators times the 4 variables
    QMat v3(12, 20);
    for (int g = 0; g < 3; ++g)
        for (int var = 0; var < 4; ++var) {
            std::size_t row = static_cast<std::size_t>(4 * g + var);
            for (int k = 0; k < 10; ++k) {
                auto e = mon2[static_cast<std::size_t>(k)];
                e[static_cast<std::size_t>(var)] += 1;
                v3.at(row, static_cast<std::size_t>(monomial_index(mon3, e))) +=
                    gen_coeffs[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)];
            }
        }
    Reducer red3 = Reducer::build(v3, 12);

    // degree-4 part: generators times the 10 degree-2 monomials
    QMat v4(30, 35);
    for (int g = 0; g < 3; ++g)
        for (int m = 0; m < 10; ++m) {
            std::size_t row = static_cast<std::size_t>(10 * g + m);
            for (int k = 0; k < 10; ++k) {
                std::array<int, 4> e{};
                for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(i)] = mon2[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] + mon2[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                v4.at(row, static_cast<std::size_t>(monomial_index(mon4, e))) +=
                    gen_coeffs[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)];
            }
        }
    Reducer red4 = Reducer::build(v4, 27);

    // multiplication maps on the 8-dimensional quotients
    std::array<QMat, 4> mult;
    for (int var = 0; var < 4; ++var) {
        QMat m(8, 8);
        for (std::size_t j = 0; j < 8; ++j) {
            auto e = mon3[red3.basis[j]];
            e[static_cast<std::size_t>(var)] += 1;
            std::vector<Rat> unit(35);
            unit[static_cast<std::size_t>(monomial_index(mon4, e))] = 1;
            auto col = red4.reduce(std::move(unit));
            for (std::size_t i = 0; i < 8; ++i) m.at(i, j) = col[i];
        }
        mult[static_cast<std::size_t>(var)] = std::move(m);
    }

    const QMat& b = mult[3];  // multiplication by w
    for (const auto& p : pts)
        if (p.c[3] == 0) return std::nullopt;  // w vanishes at an input point
    QMat binv_cx, binv_cy, binv_cz;
    try {
        binv_cx = b.solve(mult[0]);
        binv_cy = b.solve(mult[1]);
        binv_cz = b.solve(mult[2]);
    } catch (const DegenerateInput&) {
        return std::nullopt;  // w vanishes somewhere on the base scheme
    }

    Rat vx = binv_cx.trace(), vy = binv_cy.trace(), vz = binv_cz.trace();
    for (const auto& p : pts) {
        Rat w(p.c[3]);
        vx -= Rat(p.c[0]) / w;
        vy -= Rat(p.c[1]) / w;
        vz -= Rat(p.c[2]) / w;
    }

    Eliminated out;
    out.point = ProjPoint::make({vx, vy, vz, Rat(1)});
    for (const auto& g : net.gen)
        if (g.eval(out.point) != 0)
            throw NotZeroDimensional("recovered point does not lie on the net");
    out.eliminant = binv_cx.char_poly();
    return out;
}

ProjPoint transform(const QMat& u, const ProjPoint& p)
{
    std::array<Rat, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out[i] += u.at(i, j) * Rat(p.c[j]);
    return ProjPoint::make(out);
}

} // namespace

CompletionResult complete_octad_full(const std::array<ProjPoint, 7>& pts)
{
    net_through(pts);  // DegenerateInput propagates before any retries

    std::mt19937_64 rng(0x0c7ad5);
    std::uniform_int_distribution<int> entry(-2, 2);

    for (int attempt = 0; attempt < 5; ++attempt) {
        QMat u = QMat::identity(4);
        if (attempt > 0) {
            do {
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) u.at(i, j) = entry(rng);
            } while (u.det() == 0);
        }

        std::array<ProjPoint, 7> moved;
        for (std::size_t i = 0; i < 7; ++i) moved[i] = transform(u, pts[i]);
        NetOfQuadrics net = net_through(moved);

        auto res = eliminate(net, moved);  // NotZeroDimensional propagates
        if (!res) continue;

        CompletionResult out;
        QMat rhs(4, 1);
        for (std::size_t i = 0; i < 4; ++i) rhs.at(i, 0) = Rat(res->point.c[i]);
        QMat back = u.solve(rhs);
        out.point = ProjPoint::make({back.at(0, 0), back.at(1, 0), back.at(2, 0), back.at(3, 0)});
        out.eliminant = std::move(res->eliminant);
        for (std::size_t j = 0; j < 4; ++j) {
            out.ell_num[j] = Int(u.at(0, j).get_num());  // u has integer entries
            out.ell_den[j] = Int(u.at(3, j).get_num());
        }

        for (const auto& p : pts)
            if (out.point == p)
                throw MultiplePoint("the eighth base point coincides with an input point");
        return out;
    }
    throw NotZeroDimensional("no coordinate change separated the base scheme from the hyperplane at infinity");
}

ProjPoint complete_octad(const std::array<ProjPoint, 7>& pts)
{
    return complete_octad_full(pts).point;
}

} // namespace octad::geo
