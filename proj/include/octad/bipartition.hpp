#ifndef OCTAD_BIPARTITION_HPP
#define OCTAD_BIPARTITION_HPP

// The 64-element space of even bipartitions of an 8-point configuration,
// its inner product and parity function, the identification with the
// symplectic space of f2.hpp, and the induced monodromy actions.

#include <array>
#include <cstdint>
#include <vector>

#include "octad/f2.hpp"

namespace octad::bip {

// An even unordered bipartition {A, B} of the labels {0,..,7}, stored as the
// canonical side: the side of cardinality <= 4, and for a 4+4 split the side
// not containing label 0.
struct Bipartition {
    std::uint8_t mask = 0;

    static Bipartition from_mask(std::uint8_t raw);  // canonicalizes; BadInput on odd cardinality
    int size() const;                                // cardinality of the canonical side
    bool is_pair() const { return size() == 2; }
    bool is_quadruple() const { return size() == 4; }
    bool is_empty() const { return mask == 0; }

    constexpr auto operator<=>(const Bipartition&) const = default;
};

Bipartition pair_of(int i, int j);

// {A,B} + {C,D} = {A^C, A^D} (symmetric difference), canonicalized.
Bipartition bp_add(Bipartition x, Bipartition y);

// Inner product |A n C| mod 2; well defined on classes since |A| is even.
int bp_dot(Bipartition x, Bipartition y);

// Parity function |A|/2 mod 2: 1 exactly on the 28 pair classes.
int bp_h(Bipartition x);

// The 64 bipartitions in increasing mask order.
const std::array<Bipartition, 64>& all_bipartitions();

// Index of a bipartition in all_bipartitions().
int bp_index(Bipartition x);

// A label permutation.  perm[i] is the image of label i.
using Perm = std::array<std::uint8_t, 8>;

inline constexpr Perm kIdPerm = {0, 1, 2, 3, 4, 5, 6, 7};

Perm compose(const Perm& f, const Perm& g);  // f after g
Bipartition permuted(const Perm& p, Bipartition x);

// An additive, product- and parity-preserving bijection between the
// bipartition space and the symplectic space carrying a fixed even
// quadratic function.
class PhiMap {
public:
    PhiMap(std::array<f2::Vec, 64> fwd, f2::Quad target);

    f2::Vec operator()(Bipartition x) const { return fwd_[static_cast<std::size_t>(bp_index(x))]; }
    Bipartition inverse(f2::Vec v) const { return inv_[v.bits]; }
    f2::Quad target() const { return target_; }

private:
    std::array<f2::Vec, 64> fwd_;
    std::array<Bipartition, 64> inv_;
    f2::Quad target_;
};

// Constructs the identification for an even quadratic function, by Witt
// extension from the pair basis {0,1},{0,2},..,{0,6} with lexicographic
// tie-break.  Deterministic.  Requires arf(q) == 0.
PhiMap build_phi(f2::Quad q);

// A PhiMap composed with a q-preserving isometry is again valid; used to
// probe independence of downstream outputs from the choice of Phi.
PhiMap compose(const f2::Isometry& g, const PhiMap& phi);

// The unique isometry g with g(phi(x)) = phi(p . x); it preserves the target.
f2::Isometry perm_to_isometry(const Perm& p, const PhiMap& phi);

// Inverse of perm_to_isometry on the stabilizer of the target; throws
// NotInduced when g does not preserve the target quadratic function.
Perm isometry_to_perm(const f2::Isometry& g, const PhiMap& phi);

// Cayley's bifid substitution at a quadruple bipartition: pairs inside one
// side are replaced by their complement in that side, pairs meeting both
// sides are fixed.  BadInput unless v is a quadruple and pair is a pair.
Bipartition bifid(Bipartition v, Bipartition pair);

// The involution induced on the 64 quadratic functions by the monodromy at
// a nonzero vanishing class v, with functions labeled by their difference
// from q: label x stands for y -> q(y) + x.y.  Entry k is the image label
// of k.  BadInput on v = 0.
std::array<std::uint8_t, 64> theta_monodromy(f2::Quad q, f2::Vec v);

} // namespace octad::bip

#endif
