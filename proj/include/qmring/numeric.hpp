#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qmr {

// Exact integer coefficients. Products of many transvection matrices and the
// lattice reductions in the finite-generation checks overflow 64 bits, so all
// ring coefficients are arbitrary precision.
using Int = mpz_class;

inline Int int_from_string(const std::string& s) { return Int(s, 10); }

inline std::string int_to_string(const Int& n) { return n.get_str(10); }

inline bool fits_int64(const Int& n) {
    static const Int lo = Int("-9223372036854775808");
    static const Int hi = Int("9223372036854775807");
    return n >= lo && n <= hi;
}

inline std::int64_t to_int64(const Int& n) {
    // gmpxx only offers get_si (long); on LP64 long == int64.
    return static_cast<std::int64_t>(n.get_si());
}

// Canonical representative of n mod m in [0, m). m > 0.
inline Int mod_canonical(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

inline int sign_of(const Int& n) { return sgn(n); }

} // namespace qmr
