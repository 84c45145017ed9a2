#pragma once

#include <cstddef>
#include <cstdint>

namespace tml::simd {

// Hot inner loops of the grid-evaluation engine.  Each function exists in a
// scalar reference version and (on x86-64 with AVX2) a vectorized version;
// the active implementation is chosen once at runtime.  Semantics:
//
// rotation_accumulate:
//   out_re[m] += re(c * w^m * u0), out_im[m] += im(...), m = 0..n-1, where
//   u0 = e^(2*pi*i*phi0/modulus) and w = e^(2*pi*i*alpha/modulus).  The phase
//   (phi0 + m*alpha) mod modulus is integer-exact; implementations re-anchor
//   the recurrence from exact sin/cos every kResyncStep samples so rounding
//   drift stays below 1e-13 regardless of n.
//
// abs_pow_sum:        returns sum over m of ((re[m])^2 + (im[m])^2)^(p/2).
// abs_pow_sum_real:   returns sum over m of |x[m]|^p.
// min_real / max_abs: reductions used by nonnegativity certificates.
// cmadd:              out += c * s (complex streams in split re/im form).
struct Ops {
    void (*rotation_accumulate)(double* out_re, double* out_im, std::size_t n, double c_re,
                                double c_im, std::int64_t alpha, std::int64_t phi0,
                                std::int64_t modulus);
    double (*abs_pow_sum)(const double* re, const double* im, std::size_t n, double p);
    double (*abs_pow_sum_real)(const double* x, std::size_t n, double p);
    double (*min_real)(const double* x, std::size_t n);
    double (*max_abs)(const double* x, std::size_t n);
    void (*cmadd)(double* out_re, double* out_im, const double* s_re, const double* s_im,
                  std::size_t n, double c_re, double c_im);
};

inline constexpr std::size_t kResyncStep = 128;

extern const Ops scalar_ops;
// Null pointers when the binary was built without AVX2 support.
const Ops* avx2_ops();

bool cpu_has_avx2();

enum class Backend { scalar, avx2 };

// Active backend: AVX2 when compiled in and supported by the CPU, unless
// overridden by force_backend() or the TML_SIMD environment variable
// ("scalar" or "avx2", read once at first use).
Backend active_backend();
void force_backend(Backend b);
const char* backend_name(Backend b);
const Ops& ops();

}  // namespace tml::simd
