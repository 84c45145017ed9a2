// AVX2 + FMA versions of the quadrature inner loops.  This translation unit
// is compiled with -mavx2 -mfma but its functions are only reachable through
// the runtime dispatch table after a cpuid check.
#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

#include "tml/simd/kernels.hpp"

namespace tml::simd {

namespace {

inline void sincos_phase(std::int64_t phase, std::int64_t modulus, double& s, double& c) {
    double theta = 2.0 * M_PI * (static_cast<double>(phase) / static_cast<double>(modulus));
    s = std::sin(theta);
    c = std::cos(theta);
}

void rotation_accumulate_avx2(double* out_re, double* out_im, std::size_t n, double c_re,
                              double c_im, std::int64_t alpha, std::int64_t phi0,
                              std::int64_t modulus) {
    const std::int64_t a = alpha % modulus;
    // Step rotator advances four samples at once: w4 = e^(2*pi*i*(4a mod L)/L).
    double w4s, w4c;
    sincos_phase((4 * a) % modulus, modulus, w4s, w4c);
    const __m256d vw4c = _mm256_set1_pd(w4c);
    const __m256d vw4s = _mm256_set1_pd(w4s);

    std::size_t m = 0;
    while (m + 4 <= n) {
        // Anchor four lanes from exact integer phases.
        double ur[4], ui[4];
        for (int l = 0; l < 4; ++l) {
            std::int64_t mm = static_cast<std::int64_t>((m + static_cast<std::size_t>(l)) %
                                                        static_cast<std::size_t>(modulus));
            std::int64_t phase = (phi0 + mm * a) % modulus;
            double s, c;
            sincos_phase(phase, modulus, s, c);
            ur[l] = c_re * c - c_im * s;
            ui[l] = c_re * s + c_im * c;
        }
        __m256d vur = _mm256_loadu_pd(ur);
        __m256d vui = _mm256_loadu_pd(ui);
        std::size_t vec_len = std::min<std::size_t>(kResyncStep, (n - m) & ~std::size_t(3));
        std::size_t stop = m + vec_len;
        for (; m < stop; m += 4) {
            __m256d r = _mm256_loadu_pd(out_re + m);
            __m256d i = _mm256_loadu_pd(out_im + m);
            _mm256_storeu_pd(out_re + m, _mm256_add_pd(r, vur));
            _mm256_storeu_pd(out_im + m, _mm256_add_pd(i, vui));
            // (ur + i*ui) *= (w4c + i*w4s)
            __m256d nr = _mm256_fmsub_pd(vur, vw4c, _mm256_mul_pd(vui, vw4s));
            __m256d ni = _mm256_fmadd_pd(vur, vw4s, _mm256_mul_pd(vui, vw4c));
            vur = nr;
            vui = ni;
        }
    }
    // Scalar tail with exact anchoring.
    if (m < n) {
        std::int64_t tail_phi =
            (phi0 + static_cast<std::int64_t>(m % static_cast<std::size_t>(modulus)) * a) % modulus;
        scalar_ops.rotation_accumulate(out_re + m, out_im + m, n - m, c_re, c_im, a, tail_phi,
                                       modulus);
    }
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double abs_pow_sum_avx2(const double* re, const double* im, std::size_t n, double p) {
    std::size_t m = 0;
    __m256d acc = _mm256_setzero_pd();
    if (p == 2.0) {
        for (; m + 4 <= n; m += 4) {
            __m256d r = _mm256_loadu_pd(re + m);
            __m256d i = _mm256_loadu_pd(im + m);
            acc = _mm256_fmadd_pd(r, r, acc);
            acc = _mm256_fmadd_pd(i, i, acc);
        }
    } else if (p == 1.0) {
        for (; m + 4 <= n; m += 4) {
            __m256d r = _mm256_loadu_pd(re + m);
            __m256d i = _mm256_loadu_pd(im + m);
            __m256d sq = _mm256_fmadd_pd(r, r, _mm256_mul_pd(i, i));
            acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
        }
    } else {
        double tail = scalar_ops.abs_pow_sum(re + m, im + m, n - m, p);
        return tail;  // generic exponent: scalar only
    }
    double total = hsum(acc);
    if (m < n) total += scalar_ops.abs_pow_sum(re + m, im + m, n - m, p);
    return total;
}

double abs_pow_sum_real_avx2(const double* x, std::size_t n, double p) {
    std::size_t m = 0;
    __m256d acc = _mm256_setzero_pd();
    const __m256d signmask = _mm256_set1_pd(-0.0);
    if (p == 2.0) {
        for (; m + 4 <= n; m += 4) {
            __m256d v = _mm256_loadu_pd(x + m);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
    } else if (p == 1.0) {
        for (; m + 4 <= n; m += 4) {
            __m256d v = _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + m));
            acc = _mm256_add_pd(acc, v);
        }
    } else {
        return scalar_ops.abs_pow_sum_real(x, n, p);
    }
    double total = hsum(acc);
    if (m < n) total += scalar_ops.abs_pow_sum_real(x + m, n - m, p);
    return total;
}

double min_real_avx2(const double* x, std::size_t n) {
    if (n < 8) return scalar_ops.min_real(x, n);
    __m256d acc = _mm256_loadu_pd(x);
    std::size_t m = 4;
    for (; m + 4 <= n; m += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + m));
    __m128d lo = _mm_min_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    double r = _mm_cvtsd_f64(_mm_min_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; m < n; ++m) r = std::min(r, x[m]);
    return r;
}

double max_abs_avx2(const double* x, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4)
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + m)));
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    double r = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; m < n; ++m) r = std::max(r, std::fabs(x[m]));
    return r;
}

void cmadd_avx2(double* out_re, double* out_im, const double* s_re, const double* s_im,
                std::size_t n, double c_re, double c_im) {
    const __m256d vcr = _mm256_set1_pd(c_re);
    const __m256d vci = _mm256_set1_pd(c_im);
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) {
        __m256d sr = _mm256_loadu_pd(s_re + m);
        __m256d si = _mm256_loadu_pd(s_im + m);
        __m256d orr = _mm256_loadu_pd(out_re + m);
        __m256d oi = _mm256_loadu_pd(out_im + m);
        orr = _mm256_add_pd(orr, _mm256_fmsub_pd(vcr, sr, _mm256_mul_pd(vci, si)));
        oi = _mm256_add_pd(oi, _mm256_fmadd_pd(vcr, si, _mm256_mul_pd(vci, sr)));
        _mm256_storeu_pd(out_re + m, orr);
        _mm256_storeu_pd(out_im + m, oi);
    }
    for (; m < n; ++m) {
        out_re[m] += c_re * s_re[m] - c_im * s_im[m];
        out_im[m] += c_re * s_im[m] + c_im * s_re[m];
    }
}

const Ops avx2_table = {rotation_accumulate_avx2, abs_pow_sum_avx2, abs_pow_sum_real_avx2,
                        min_real_avx2, max_abs_avx2, cmadd_avx2};

}  // namespace

const Ops* avx2_ops() { return &avx2_table; }

}  // namespace tml::simd

#else

#include "tml/simd/kernels.hpp"

namespace tml::simd {
const Ops* avx2_ops() { return nullptr; }
}  // namespace tml::simd

#endif
