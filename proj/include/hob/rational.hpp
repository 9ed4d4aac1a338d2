#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "hob/errors.hpp"

namespace hob {

// Exact scalars. Int is an arbitrary-precision integer, Rat an exact rational
// kept in canonical form (denominator > 0, gcd(num, den) = 1). GMP maintains
// canonicality through arithmetic; the one place it must be established by
// hand is construction from a raw num/den pair.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; go through strings.
inline Int make_int(long long v) { return Int(std::to_string(v)); }

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rational(long long num, long long den) {
    return make_rational(make_int(num), make_int(den));
}

inline Rat make_rational(long long num) { return Rat(make_int(num)); }

inline bool fits_int64(const Int& v) {
    static const Int lo(std::to_string(std::numeric_limits<int64_t>::min()));
    static const Int hi(std::to_string(std::numeric_limits<int64_t>::max()));
    return v >= lo && v <= hi;
}

inline int64_t to_int64(const Int& v) {
    if (!fits_int64(v)) throw DomainError("integer exceeds 64-bit range: " + v.get_str());
    return std::stoll(v.get_str());
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "n" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace hob
