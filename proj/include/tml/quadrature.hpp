#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "tml/trigpoly.hpp"

// Internal grid-evaluation engine.  Supports anisotropic grids (independent
// sample counts per axis) and two evaluation routes: streaming direct
// summation (SIMD phase rotation, no full-grid materialization) and FFTW.
// The engine also performs sublattice reduction: when a polynomial's
// spectrum lies in a rank-r sublattice, the norm is computed on the
// r-dimensional torus after an exact, measure-preserving change of
// variables, which keeps lacunary spectra desk-computable.
namespace tml::quad {

inline constexpr std::int64_t kMaxAxisSamples = std::int64_t(1) << 26;
inline constexpr std::int64_t kMaxTotalFFT = std::int64_t(1) << 24;    // materialized route
inline constexpr std::int64_t kMaxTotalDirect = std::int64_t(1) << 30; // streaming route
inline constexpr std::int64_t kMaxPhaseModulus = std::int64_t(1) << 31;
inline constexpr int kMaxAmbientAxis = 4096;  // budget for user-facing uniform grids

struct AnisoGrid {
    int d = 1;
    std::array<int, kMaxDim> M{};
    std::int64_t total() const {
        std::int64_t t = 1;
        for (int j = 0; j < d; ++j) t *= M[static_cast<std::size_t>(j)];
        return t;
    }
};

enum class Path { automatic, direct, fft };

struct ScanRequest {
    double p = 0.0;           // accumulate sum |f|^p when p > 0
    bool want_min_real = false;
    bool want_max_abs_imag = false;
};

struct ScanResult {
    double pow_sum = 0.0;
    double min_real = 0.0;
    double max_abs_imag = 0.0;
};

// Evaluates a family of polynomials sharing one support list over `grid`.
// coeff_sets[k][t] is the coefficient of support[t] in family member k.
std::vector<ScanResult> family_scan(int d, std::span<const LatticePoint> support,
                                    const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                                    const AnisoGrid& grid, const ScanRequest& req,
                                    Path path = Path::automatic);

// Materialized samples, row-major, last axis contiguous.
std::vector<std::complex<double>> materialize(const TrigPoly& f, const AnisoGrid& grid,
                                              Path path = Path::automatic);

struct ReducedNormOptions {
    double oversampling = 4.0;
    Path path = Path::automatic;
    double p = 1.0;
};

// L_p norms of a family with shared support, computed on the reduced torus
// of the sublattice generated by the support.  Norm values are unchanged by
// the reduction; each report carries a one-step refinement error hint
// (the largest axis is refined when full refinement exceeds budgets).
std::vector<NormReport> reduced_family_norms(int d, std::span<const LatticePoint> support,
                                             const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                                             const ReducedNormOptions& opt);

// Single-poly convenience wrapper.
NormReport reduced_lp_norm(const TrigPoly& f, double p, double oversampling = 4.0,
                           Path path = Path::automatic);

// Minimum of Re f over the reduced grid (for nonnegativity certificates),
// with the same change-of-variables guarantee (value sets coincide).
double reduced_min_real(const TrigPoly& f, double oversampling = 4.0);

}  // namespace tml::quad
