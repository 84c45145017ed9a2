#include "tml/coeff.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tml {

std::int64_t pow3(int k) {
    static const auto table = [] {
        std::array<std::int64_t, kMaxPow3 + 1> t{};
        t[0] = 1;
        for (int i = 1; i <= kMaxPow3; ++i) t[i] = t[i - 1] * 3;
        return t;
    }();
    if (k < 0 || k > kMaxPow3) throw DomainError("pow3: exponent out of range");
    return table[k];
}

Integer pow3_big(int k) {
    if (k < 0) throw DomainError("pow3_big: negative exponent");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3u, static_cast<unsigned long>(k));
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("parse_rational: empty string");
    try {
        Rational r(s);  // accepts "a" and "a/b"
        if (r.get_den() == 0) throw DomainError("parse_rational: zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("parse_rational: malformed rational '" + s + "'");
    }
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("floor_div: zero denominator");
    std::int64_t q = num / den;
    std::int64_t rem = num % den;
    if (rem != 0 && ((rem < 0) != (den < 0))) --q;
    return q;
}

namespace {
double twopi_pow(int e) {
    if (e == 0) return 1.0;
    return std::pow(2.0 * M_PI, e);
}
}  // namespace

std::complex<double> Coeff::to_complex() const {
    if (!exact_) return z_;
    double f = twopi_pow(e_);
    return {re_.get_d() * f, im_.get_d() * f};
}

Coeff Coeff::conj() const {
    if (exact_) return exact(re_, Rational(-im_), e_);
    return approx(std::conj(z_));
}

Coeff Coeff::operator-() const {
    if (exact_) return exact(Rational(-re_), Rational(-im_), e_);
    return approx(-z_);
}

Coeff Coeff::operator+(const Coeff& o) const {
    if (exact_ && o.exact_) {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (e_ == o.e_) return exact(Rational(re_ + o.re_), Rational(im_ + o.im_), e_);
    }
    return approx(to_complex() + o.to_complex());
}

Coeff Coeff::operator*(const Coeff& o) const {
    if (exact_ && o.exact_) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        return exact(std::move(re), std::move(im), e_ + o.e_);
    }
    return approx(to_complex() * o.to_complex());
}

Coeff Coeff::times_i_times(std::int64_t n, int de) const {
    if (exact_) {
        Rational f = make_rational(n);
        return exact(Rational(-im_ * f), Rational(re_ * f), e_ + de);
    }
    return approx(z_ * std::complex<double>(0.0, static_cast<double>(n) * twopi_pow(de)));
}

Coeff Coeff::div_i_times(std::int64_t n, int de) const {
    if (n == 0) throw DomainError("Coeff::div_i_times: division by zero frequency");
    if (exact_) {
        Rational f = make_rational(1, n);
        // 1/(i n) = -i/n
        return exact(Rational(im_ * f), Rational(-re_ * f), e_ - de);
    }
    return approx(z_ / std::complex<double>(0.0, static_cast<double>(n) * twopi_pow(de)));
}

Coeff Coeff::times_rat(const Rational& r) const {
    if (exact_) return exact(Rational(re_ * r), Rational(im_ * r), e_);
    return approx(z_ * r.get_d());
}

bool Coeff::operator==(const Coeff& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return re_ == o.re_ && im_ == o.im_ && e_ == o.e_;
    return z_ == o.z_;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string Coeff::re_string() const {
    if (exact_ && e_ == 0) return format_rational(re_);
    return format_double(to_complex().real());
}

std::string Coeff::im_string() const {
    if (exact_ && e_ == 0) return format_rational(im_);
    return format_double(to_complex().imag());
}

CoeffParts parse_coeff_part(const std::string& text) {
    if (text.find('/') != std::string::npos)
        return {true, parse_rational(text), 0.0};
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        return {true, parse_rational(text), 0.0};  // plain integer string
    // Integer-looking floats round-trip exactly as rationals.
    if (text.find_first_of(".eE") == std::string::npos)
        return {true, parse_rational(text), 0.0};
    return {false, Rational(0), v};
}

}  // namespace tml
