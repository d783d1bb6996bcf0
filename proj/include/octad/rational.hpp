#ifndef OCTAD_RATIONAL_HPP
#define OCTAD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "octad/errors.hpp"

namespace octad::geo {

using Int = mpz_class;
using Rat = mpq_class;

// Parses an integer or "p/q" token.
inline Rat parse_rational(const std::string& tok)
{
    mpq_class q;
    if (tok.empty() || q.set_str(tok, 10) != 0)
        throw ParseError("cannot parse rational '" + tok + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q)
{
    return q.get_str();
}

inline std::string to_string(const Int& z)
{
    return z.get_str();
}

inline int sign_of(const Int& z) { return sgn(z); }
inline int sign_of(const Rat& q) { return sgn(q); }

// Scales a rational vector to a primitive integer vector whose first
// nonzero entry is positive.  Throws BadInput on the zero vector.
std::vector<Int> primitive_vector(const std::vector<Rat>& v);

} // namespace octad::geo

#endif
