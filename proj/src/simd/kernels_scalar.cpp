#include <cmath>

#include "tml/simd/kernels.hpp"

namespace tml::simd {

namespace {

inline void sincos_phase(std::int64_t phase, std::int64_t modulus, double& s, double& c) {
    double theta = 2.0 * M_PI * (static_cast<double>(phase) / static_cast<double>(modulus));
    s = std::sin(theta);
    c = std::cos(theta);
}

void rotation_accumulate_scalar(double* out_re, double* out_im, std::size_t n, double c_re,
                                double c_im, std::int64_t alpha, std::int64_t phi0,
                                std::int64_t modulus) {
    double ws, wc;
    sincos_phase(alpha % modulus, modulus, ws, wc);
    std::size_t m = 0;
    while (m < n) {
        // Re-anchor the rotator from the exact integer phase.
        std::int64_t phase = (phi0 + static_cast<std::int64_t>(m % static_cast<std::size_t>(modulus)) *
                                         (alpha % modulus)) % modulus;
        // m can exceed modulus; reduce step by step to avoid overflow:
        // (phi0 + m*alpha) mod modulus with m reduced mod modulus first.
        double us, uc;
        sincos_phase(phase, modulus, us, uc);
        double ur = c_re * uc - c_im * us;
        double ui = c_re * us + c_im * uc;
        std::size_t stop = std::min(n, m + kResyncStep);
        for (; m < stop; ++m) {
            out_re[m] += ur;
            out_im[m] += ui;
            double nr = ur * wc - ui * ws;
            ui = ur * ws + ui * wc;
            ur = nr;
        }
    }
}

double abs_pow_sum_scalar(const double* re, const double* im, std::size_t n, double p) {
    double acc = 0.0;
    if (p == 2.0) {
        for (std::size_t i = 0; i < n; ++i) acc += re[i] * re[i] + im[i] * im[i];
    } else if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) acc += std::sqrt(re[i] * re[i] + im[i] * im[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            acc += std::pow(re[i] * re[i] + im[i] * im[i], 0.5 * p);
    }
    return acc;
}

double abs_pow_sum_real_scalar(const double* x, std::size_t n, double p) {
    double acc = 0.0;
    if (p == 2.0) {
        for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    } else if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) acc += std::pow(std::fabs(x[i]), p);
    }
    return acc;
}

double min_real_scalar(const double* x, std::size_t n) {
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i) m = std::min(m, x[i]);
    return m;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

void cmadd_scalar(double* out_re, double* out_im, const double* s_re, const double* s_im,
                  std::size_t n, double c_re, double c_im) {
    for (std::size_t i = 0; i < n; ++i) {
        out_re[i] += c_re * s_re[i] - c_im * s_im[i];
        out_im[i] += c_re * s_im[i] + c_im * s_re[i];
    }
}

}  // namespace

const Ops scalar_ops = {rotation_accumulate_scalar, abs_pow_sum_scalar, abs_pow_sum_real_scalar,
                        min_real_scalar, max_abs_scalar, cmadd_scalar};

}  // namespace tml::simd
