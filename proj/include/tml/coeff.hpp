#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "tml/rational.hpp"

namespace tml {

// Complex scalar used for Fourier coefficients.  A Coeff is either
//   exact : (re + i*im) * (2*pi)^e   with re, im rational and e a small int,
// or
//   approx: a plain complex<double>.
//
// The (2*pi)^e factor keeps differentiation and antidifferentiation closed
// over exact values: d/dt_j multiplies a coefficient by 2*pi*i*n_j, which
// stays exact here.  Arithmetic between exact values stays exact when the
// result is representable (same e for +, e's add for *); anything else
// degrades to approx.
class Coeff {
public:
    Coeff() : exact_(true), re_(0), im_(0), e_(0), z_(0.0, 0.0) {}

    static Coeff exact(Rational re, Rational im = Rational(0), int twopi_exp = 0) {
        Coeff c;
        c.exact_ = true;
        c.re_ = std::move(re);
        c.im_ = std::move(im);
        c.e_ = (c.re_ == 0 && c.im_ == 0) ? 0 : twopi_exp;
        return c;
    }
    static Coeff approx(std::complex<double> z) {
        Coeff c;
        c.exact_ = false;
        c.z_ = z;
        return c;
    }

    bool is_exact() const { return exact_; }
    bool is_zero() const {
        return exact_ ? (re_ == 0 && im_ == 0) : (z_.real() == 0.0 && z_.imag() == 0.0);
    }

    // Exact accessors; only meaningful when is_exact().
    const Rational& re_rat() const { return re_; }
    const Rational& im_rat() const { return im_; }
    int twopi_exp() const { return e_; }

    std::complex<double> to_complex() const;
    double abs() const { return std::abs(to_complex()); }

    // |coeff|^2 as an exact rational, available when exact with e == 0.
    std::optional<Rational> abs2_exact() const {
        if (!exact_ || e_ != 0) return std::nullopt;
        return Rational(re_ * re_ + im_ * im_);
    }

    Coeff conj() const;
    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const { return *this + (-o); }
    Coeff operator*(const Coeff& o) const;

    // Multiply by i * n * (2*pi)^de  (exact when this is exact).
    Coeff times_i_times(std::int64_t n, int de) const;
    // Divide by i * n * (2*pi)^de; requires n != 0.
    Coeff div_i_times(std::int64_t n, int de) const;
    // Multiply by an exact rational.
    Coeff times_rat(const Rational& r) const;

    // Structural equality of exact values (same rationals and exponent);
    // approx values compare by bit-equality of doubles.
    bool operator==(const Coeff& o) const;

    // Serialization for fixture files: exact values with e == 0 render as
    // rational strings, everything else as decimal floats.
    std::string re_string() const;
    std::string im_string() const;

private:
    bool exact_;
    Rational re_, im_;
    int e_;
    std::complex<double> z_;
};

// Formats a double with 17 significant digits (round-trip safe).
std::string format_double(double x);

// Parses a coefficient component: "a/b" becomes exact, otherwise a float.
// Used when reading fixture files.
struct CoeffParts {
    bool exact;
    Rational rat;
    double val;
};
CoeffParts parse_coeff_part(const std::string& text);

}  // namespace tml
