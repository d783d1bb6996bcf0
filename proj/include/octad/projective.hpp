#ifndef OCTAD_PROJECTIVE_HPP
#define OCTAD_PROJECTIVE_HPP

// Exact projective geometry of point configurations in RP^3: points,
// quadric forms, nets of quadrics, the quartic of singular net members,
// bitangent pencils, and octad validation.

#include <array>
#include <optional>
#include <vector>

#include "octad/qmatrix.hpp"
#include "octad/rational.hpp"

namespace octad::geo {

// A point of RP^3: primitive integer coordinates, first nonzero positive.
struct ProjPoint {
    std::array<Int, 4> c{};

    static ProjPoint make(const std::array<Rat, 4>& coords);
    bool operator==(const ProjPoint& o) const { return c == o.c; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
};

// A quadric surface x^T M x = 0: symmetric matrix, primitive integer
// entries, first nonzero entry (row-major) positive.
struct QuadricForm {
    std::array<std::array<Int, 4>, 4> m{};

    static QuadricForm make(const std::array<std::array<Rat, 4>, 4>& entries);
    Int eval(const ProjPoint& p) const;                       // p^T M p
    Int bilinear(const ProjPoint& p, const ProjPoint& q) const;  // p^T M q
    bool operator==(const QuadricForm& o) const { return m == o.m; }
};

struct NetOfQuadrics {
    std::array<QuadricForm, 3> gen;
};

// The 10 degree-2 monomials in graded-lex order:
// x2, xy, xz, xw, y2, yz, yw, z2, zw, w2.
std::array<Int, 10> quadric_monomials(const ProjPoint& p);

// Coefficient vector of a quadric in the same monomial order.
std::array<Rat, 10> quadric_coefficients(const QuadricForm& q);
QuadricForm quadric_from_coefficients(const std::array<Rat, 10>& c);

// True iff the four points lie on a common plane (4x4 determinant is zero).
bool coplanar(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s);

// Determinant of the four stacked coordinate rows.
Int stacked_det(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s);

// The net of quadrics through 7 points imposing independent conditions;
// DegenerateInput when the 7x10 evaluation matrix has rank < 7.
NetOfQuadrics net_through(const std::array<ProjPoint, 7>& pts);

// A homogeneous quartic in (t0,t1,t2): 15 coefficients in lex-descending
// exponent order (4,0,0),(3,1,0),(3,0,1),(2,2,0),(2,1,1),(2,0,2),(1,3,0),
// (1,2,1),(1,1,2),(1,0,3),(0,4,0),(0,3,1),(0,2,2),(0,1,3),(0,0,4).
struct QuarticForm {
    std::array<Rat, 15> c{};

    Rat eval(const Rat& t0, const Rat& t1, const Rat& t2) const;
    bool is_zero() const;
    QuarticForm canonical() const;  // primitive integer, first nonzero positive
    bool operator==(const QuarticForm& o) const { return c == o.c; }
};

extern const std::array<std::array<int, 3>, 15> kQuarticExponents;

// det(t0 M0 + t1 M1 + t2 M2), expanded exactly over the 24 permutations.
QuarticForm hessian(const NetOfQuadrics& net);

// The same determinant by exact interpolation at 15 unisolvent points; the
// two routes are compared in tests.
QuarticForm hessian_by_interpolation(const NetOfQuadrics& net);

// The pencil of quadrics in the net containing the whole chord pq, as the
// primitive coefficients (l0,l1,l2) of its line l.t = 0 in the net plane.
// NotOnBase if p or q misses the base locus, BadInput if p == q,
// Degenerate when every net member contains the chord.
std::array<Int, 3> bitangent_pencil(const NetOfQuadrics& net, const ProjPoint& p, const ProjPoint& q);

struct OctadReport {
    bool all_distinct = false;
    int eval_rank = 0;                                // rank of the 8x10 evaluation matrix
    std::vector<std::array<int, 4>> coplanar_quads;   // label quadruples on a common plane
    bool m_octad = true;                              // all points real, by input type
    enum class Class { Regular, FourCollisionWall, Invalid } cls = Class::Invalid;
};

// Exact validation of an 8-point configuration: distinctness, the net
// condition (evaluation rank 7), and the scan of all 70 coplanarity
// determinants.  Regular needs no coplanar quadruple; a configuration with
// exactly one complementary pair of coplanar quadruples sits on a
// 4-collision wall.
OctadReport verify_octad(const std::array<ProjPoint, 8>& pts);

const char* to_string(OctadReport::Class c);

} // namespace octad::geo

#endif
