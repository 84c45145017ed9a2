#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "tml/rng.hpp"
#include "tml/simd/kernels.hpp"

using namespace tml;

namespace {

struct Arrays {
    std::vector<double> re, im, x;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Arrays a;
    a.re.resize(n);
    a.im.resize(n);
    a.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.re[i] = 2.0 * rng.uniform_real() - 1.0;
        a.im[i] = 2.0 * rng.uniform_real() - 1.0;
        a.x[i] = 4.0 * rng.uniform_real() - 2.0;
    }
    return a;
}

// e(phase/modulus) via libm, the reference for the rotation kernel.
void unit_phase(std::int64_t phase, std::int64_t modulus, double& s, double& c) {
    double t = 2.0 * std::numbers::pi * (static_cast<double>(phase % modulus) /
                                         static_cast<double>(modulus));
    s = std::sin(t);
    c = std::cos(t);
}

// Sizes straddling the vector width and the rotation resync period.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 31, 128, 129, 1000};

}  // namespace

TEST_CASE("backend identification and forcing") {
    simd::Backend initial = simd::active_backend();
    CHECK((initial == simd::Backend::scalar || initial == simd::Backend::avx2));
    CHECK(std::string(simd::backend_name(simd::Backend::scalar)) == "scalar");
    CHECK(std::string(simd::backend_name(simd::Backend::avx2)) == "avx2");

    simd::force_backend(simd::Backend::scalar);
    CHECK(simd::active_backend() == simd::Backend::scalar);
    CHECK(&simd::ops() == &simd::scalar_ops);
    simd::force_backend(initial);
    CHECK(simd::active_backend() == initial);

    if (!simd::cpu_has_avx2()) CHECK(simd::avx2_ops() == nullptr);
}

TEST_CASE("scalar rotation_accumulate stays on the exact phase grid") {
    // Contract: out[m] += c * e((phi0 + m*alpha)/modulus), with the phase
    // reduced exactly and the rotator re-anchored every resync window.
    const std::int64_t alpha = 12345;
    const std::int64_t modulus = 4096;
    const std::int64_t phi0 = 1517;
    const std::size_t n = 5000;  // spans many resync windows

    std::vector<double> out_re(n), out_im(n);
    simd::scalar_ops.rotation_accumulate(out_re.data(), out_im.data(), n, 0.8, -0.25,
                                         alpha, phi0, modulus);
    double max_err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t phase = (phi0 + static_cast<std::int64_t>(j) * alpha) % modulus;
        double s, c;
        unit_phase(phase, modulus, s, c);
        double er = 0.8 * c - (-0.25) * s;
        double ei = 0.8 * s + (-0.25) * c;
        max_err = std::max(max_err, std::abs(out_re[j] - er));
        max_err = std::max(max_err, std::abs(out_im[j] - ei));
    }
    CHECK(max_err < 1e-13);
}

TEST_CASE("AVX2 kernels agree with scalar kernels") {
    const simd::Ops* vec = simd::avx2_ops();
    if (vec == nullptr) {
        MESSAGE("AVX2 unavailable on this host; skipping equivalence checks");
        return;
    }

    for (std::size_t n : kSizes) {
        CAPTURE(n);
        Arrays a = random_arrays(n, 1000 + n);

        // abs_pow_sum, complex and real, across exponent shapes.
        for (double p : {1.0, 2.0, 2.7}) {
            double s0 = simd::scalar_ops.abs_pow_sum(a.re.data(), a.im.data(), n, p);
            double s1 = vec->abs_pow_sum(a.re.data(), a.im.data(), n, p);
            CHECK(s1 == doctest::Approx(s0).epsilon(1e-13));
            double r0 = simd::scalar_ops.abs_pow_sum_real(a.x.data(), n, p);
            double r1 = vec->abs_pow_sum_real(a.x.data(), n, p);
            CHECK(r1 == doctest::Approx(r0).epsilon(1e-13));
        }

        // min / max reductions must agree exactly.
        CHECK(vec->min_real(a.x.data(), n) == simd::scalar_ops.min_real(a.x.data(), n));
        CHECK(vec->max_abs(a.x.data(), n) == simd::scalar_ops.max_abs(a.x.data(), n));

        // Fused multiply-accumulate of a scalar against a complex array.
        std::vector<double> sr(n), si(n), vr(n), vi(n);
        for (std::size_t i = 0; i < n; ++i) {
            sr[i] = vr[i] = a.x[i];
            si[i] = vi[i] = -a.re[i];
        }
        simd::scalar_ops.cmadd(sr.data(), si.data(), a.re.data(), a.im.data(), n, 0.6, -1.1);
        vec->cmadd(vr.data(), vi.data(), a.re.data(), a.im.data(), n, 0.6, -1.1);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(vr[i] == doctest::Approx(sr[i]).epsilon(1e-14));
            CHECK(vi[i] == doctest::Approx(si[i]).epsilon(1e-14));
        }

        // Rotation with accumulation into a nonzero buffer.
        std::vector<double> br(n, 0.5), bi(n, -0.5), cr(n, 0.5), ci(n, -0.5);
        simd::scalar_ops.rotation_accumulate(br.data(), bi.data(), n, 1.0, 0.3, 987, 11,
                                             2048);
        vec->rotation_accumulate(cr.data(), ci.data(), n, 1.0, 0.3, 987, 11, 2048);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(cr[i] - br[i]) < 1e-13);
            CHECK(std::abs(ci[i] - bi[i]) < 1e-13);
        }
    }
}

TEST_CASE("negative alpha and zero-length inputs are handled") {
    std::vector<double> out_re(16, 0.0), out_im(16, 0.0);
    simd::scalar_ops.rotation_accumulate(out_re.data(), out_im.data(), 16, 1.0, 0.0, -777,
                                         0, 1024);
    for (std::size_t j = 0; j < 16; ++j) {
        std::int64_t phase = (-777 * static_cast<std::int64_t>(j)) % 1024;
        double s, c;
        unit_phase(phase, 1024, s, c);
        CHECK(out_re[j] == doctest::Approx(c).epsilon(1e-12));
        CHECK(out_im[j] == doctest::Approx(s).epsilon(1e-12));
    }

    CHECK(simd::scalar_ops.abs_pow_sum(nullptr, nullptr, 0, 2.0) == 0.0);
    CHECK(simd::scalar_ops.abs_pow_sum_real(nullptr, 0, 2.0) == 0.0);
}
