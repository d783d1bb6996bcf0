#ifndef OCTAD_F2_HPP
#define OCTAD_F2_HPP

// Exact linear algebra over Z/2 on a fixed 6-dimensional symplectic space.
//
// The space models the anti-invariant mod-2 homology of a 4-oval quartic.
// Basis order is (a1, a2, a3, b1, b2, b3): bit i of a packed vector is the
// i-th coordinate in this order.  The a_i are oval classes, the b_i bridge
// classes, and the only nonzero pairings between basis vectors are
// a_i . b_i = 1.  Two further classes are linear combinations:
//
//     a0   = a1 + a2 + a3
//     b_ij = b_i + b_j              (1 <= i < j <= 3, with b_0i = b_i)

#include <array>
#include <cstdint>

namespace octad::f2 {

// A vector of the 6-dimensional Z/2 space, packed into the low 6 bits.
struct Vec {
    std::uint8_t bits = 0;

    friend constexpr Vec operator+(Vec x, Vec y) { return Vec{static_cast<std::uint8_t>(x.bits ^ y.bits)}; }
    constexpr Vec& operator+=(Vec y) { bits ^= y.bits; return *this; }
    constexpr bool is_zero() const { return bits == 0; }
    constexpr auto operator<=>(const Vec&) const = default;
};

inline constexpr Vec kZero{0};
inline constexpr Vec kA1{1 << 0};
inline constexpr Vec kA2{1 << 1};
inline constexpr Vec kA3{1 << 2};
inline constexpr Vec kB1{1 << 3};
inline constexpr Vec kB2{1 << 4};
inline constexpr Vec kB3{1 << 5};
inline constexpr std::array<Vec, 6> kBasis = {kA1, kA2, kA3, kB1, kB2, kB3};
inline constexpr int kDim = 6;
inline constexpr int kSpaceSize = 64;

// a0 as a vector, and the oval class a_i for i in 0..3.
inline constexpr Vec kA0{0b000111};
constexpr Vec oval_class(int i) { return i == 0 ? kA0 : kBasis[static_cast<std::size_t>(i - 1)]; }

// The bridge class b_ij for 0 <= i < j <= 3.
constexpr Vec bridge_class(int i, int j)
{
    return i == 0 ? kBasis[static_cast<std::size_t>(2 + j)]
                  : kBasis[static_cast<std::size_t>(2 + i)] + kBasis[static_cast<std::size_t>(2 + j)];
}

constexpr int parity(unsigned x)
{
    x ^= x >> 4;
    x ^= x >> 2;
    x ^= x >> 1;
    return static_cast<int>(x & 1u);
}

// Symplectic pairing: a_i . b_j = delta_ij, both halves isotropic.
constexpr int dot(Vec x, Vec y)
{
    return parity((x.bits & (y.bits >> 3) & 0b111u) ^ (y.bits & (x.bits >> 3) & 0b111u));
}

// A quadratic function q with q(x+y) = q(x) + q(y) + x.y.  It is determined
// by its six values on the basis, stored as the packed bits of `diag` in
// basis order; this is the row-major content of the 2x3 matrix
// [[q(a1),q(a2),q(a3)],[q(b1),q(b2),q(b3)]].
struct Quad {
    std::uint8_t diag = 0;

    constexpr int operator()(Vec v) const
    {
        // linear part on the basis plus the cross terms a_i b_i of v itself
        return parity((v.bits & diag) ^ (v.bits & (v.bits >> 3) & 0b111u));
    }

    constexpr int entry(int row, int col) const { return (diag >> (3 * row + col)) & 1; }
    constexpr auto operator<=>(const Quad&) const = default;
};

constexpr int q_eval(Quad q, Vec v) { return q(v); }

// Arf invariant: sum over i of q(a_i) q(b_i).
constexpr int arf(Quad q) { return parity(q.diag & (q.diag >> 3) & 0b111u); }

// x -> x + (x.v) v.  An involutive isometry of the pairing.
constexpr Vec transvection(Vec v, Vec x) { return dot(x, v) ? x + v : x; }

// A linear map given by the images of the six basis vectors.
struct Isometry {
    std::array<Vec, 6> col{};

    constexpr Vec operator()(Vec v) const
    {
        Vec out{};
        for (int i = 0; i < kDim; ++i)
            if ((v.bits >> i) & 1) out += col[static_cast<std::size_t>(i)];
        return out;
    }

    constexpr auto operator<=>(const Isometry&) const = default;

    // this after other
    constexpr Isometry compose(const Isometry& other) const
    {
        Isometry r;
        for (int i = 0; i < kDim; ++i) r.col[static_cast<std::size_t>(i)] = (*this)(other.col[static_cast<std::size_t>(i)]);
        return r;
    }
};

inline constexpr Isometry kIdentity = {{kA1, kA2, kA3, kB1, kB2, kB3}};

constexpr bool is_invertible(const Isometry& g)
{
    // Gaussian elimination over Z/2 on the 6 columns.
    std::array<std::uint8_t, 6> rows{};
    int rank = 0;
    for (auto c : g.col) {
        std::uint8_t v = c.bits;
        for (int r = 0; r < rank; ++r)
            if (v & (rows[static_cast<std::size_t>(r)] & static_cast<std::uint8_t>(-rows[static_cast<std::size_t>(r)]))) v ^= rows[static_cast<std::size_t>(r)];
        if (v) rows[static_cast<std::size_t>(rank++)] = v;
    }
    return rank == kDim;
}

constexpr bool is_symplectic(const Isometry& g)
{
    if (!is_invertible(g)) return false;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            if (dot(g.col[static_cast<std::size_t>(i)], g.col[static_cast<std::size_t>(j)]) != dot(kBasis[static_cast<std::size_t>(i)], kBasis[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

constexpr bool preserves(const Isometry& g, Quad q)
{
    for (int i = 0; i < kDim; ++i)
        if (q(g.col[static_cast<std::size_t>(i)]) != q(kBasis[static_cast<std::size_t>(i)])) return false;
    return true;
}

// Precompose q with a symplectic map: (pullback q)(x) = q(g x).
constexpr Quad pullback(Quad q, const Isometry& g)
{
    Quad r;
    for (int i = 0; i < kDim; ++i)
        r.diag |= static_cast<std::uint8_t>(q(g.col[static_cast<std::size_t>(i)]) << i);
    return r;
}

constexpr Isometry inverse(const Isometry& g)
{
    // Invert by solving g x = e_i for each basis vector (size-6 elimination).
    std::array<std::uint8_t, 6> m{};   // m[i] = bits of g(e_i)
    std::array<std::uint8_t, 6> id{};  // tracks the inverse images
    for (int i = 0; i < kDim; ++i) {
        m[static_cast<std::size_t>(i)] = g.col[static_cast<std::size_t>(i)].bits;
        id[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 << i);
    }
    // forward elimination to echelon form over the 6 "rows" (columns of g)
    int piv_row[6] = {-1, -1, -1, -1, -1, -1};
    int used = 0;
    for (int bit = 0; bit < kDim && used < kDim; ++bit) {
        int p = -1;
        for (int r = used; r < kDim; ++r)
            if ((m[static_cast<std::size_t>(r)] >> bit) & 1) { p = r; break; }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(used)]);
        std::swap(id[static_cast<std::size_t>(p)], id[static_cast<std::size_t>(used)]);
        for (int r = 0; r < kDim; ++r)
            if (r != used && ((m[static_cast<std::size_t>(r)] >> bit) & 1)) {
                m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(used)];
                id[static_cast<std::size_t>(r)] ^= id[static_cast<std::size_t>(used)];
            }
        piv_row[bit] = used;
        ++used;
    }
    Isometry inv;
    for (int bit = 0; bit < kDim; ++bit)
        inv.col[static_cast<std::size_t>(bit)] = Vec{id[static_cast<std::size_t>(piv_row[bit])]};
    return inv;
}

} // namespace octad::f2

#endif
