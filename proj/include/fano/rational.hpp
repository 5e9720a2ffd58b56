#ifndef FANO_RATIONAL_HPP
#define FANO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace fano {

// Exact rational coefficients. mpq_class keeps the canonical form
// (gcd-reduced, positive denominator) under its own arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace fano

#endif
