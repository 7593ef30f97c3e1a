#ifndef FBZHU_RATIONAL_HPP
#define FBZHU_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace fbz {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// binom(t, k) for any integer t (possibly negative) and k >= 0, exact.
inline Int binom(long t, long k) {
    if (k < 0) return Int(0);
    Int r(1);
    for (long i = 1; i <= k; ++i) {
        r *= Int(t - i + 1);
        r /= i;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline Int factorial(long k) {
    Int r(1);
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace fbz

#endif
