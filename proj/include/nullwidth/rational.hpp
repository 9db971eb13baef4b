#ifndef NULLWIDTH_RATIONAL_HPP
#define NULLWIDTH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nullwidth/error.hpp"

namespace nw {

/**
 * Exact rational scalar.  All cochain values, LP tableaux and polynomial
 * coefficients in this library are Rat; there is no floating point anywhere
 * in the computational path.
 */
using Rat = mpq_class;

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/** num/den in lowest terms.  Always use this instead of Rat(num, den): the
 *  two-argument mpq_class constructor does not canonicalize, and GMP
 *  comparisons are only valid on canonical values. */
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& x) {
    return mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0;
}

/** Largest integer <= x. */
inline mpz_class rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

/** Smallest integer >= x. */
inline mpz_class rat_ceil(const Rat& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

/** Nearest integer; ties toward -infinity, so round(1/2) = 0, round(-1/2) = -1. */
inline mpz_class rat_round(const Rat& x) {
    return rat_floor(x + Rat(1, 2));
}

inline long rat_to_long(const Rat& x) {
    if (!rat_is_integer(x)) throw Error(ErrorCode::Usage, "expected integer rational");
    return mpz_get_si(x.get_num_mpz_t());
}

/** Serialize as decimal-free "p/q" (plain "p" when q = 1). */
inline std::string rat_to_string(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    if (rat_is_integer(c)) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat x(s);
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Usage, "malformed rational: " + s);
    }
}

}  // namespace nw

#endif
