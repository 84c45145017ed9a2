#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tml/errors.hpp"

namespace tml {

// Exact arbitrary-precision integer and rational scalars.  These are thin
// aliases over GMP's C++ classes; helpers below cover the few operations the
// rest of the library needs beyond plain arithmetic.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Largest power of three representable comfortably in int64 is 3^39.
inline constexpr int kMaxPow3 = 39;

// 3^k as int64, k in [0, kMaxPow3].
std::int64_t pow3(int k);

// 3^k as an exact big integer for any k >= 0.
Integer pow3_big(int k);

// Parses "a/b" (exact) or a plain integer string (exact).  Throws DomainError
// on malformed input.
Rational parse_rational(std::string_view text);

// Formats with shortest exact representation "a/b" or "a".
std::string format_rational(const Rational& r);

// Floor division with sign handling, exact for all int64 pairs with den != 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

}  // namespace tml
