#include "tml/quadrature.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>

#include "tml/errors.hpp"
#include "tml/lattice_basis.hpp"
#include "tml/simd/kernels.hpp"

namespace tml::quad {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

// Smallest grid size of the form 2^a, 3*2^a or 5*2^a that is >= x (smooth
// sizes keep the FFT route fast and the phase lcm small).
int smooth_at_least(std::int64_t x) {
    if (x < 4) x = 4;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t base : {1, 3, 5}) {
        std::int64_t v = base;
        while (v < x) v *= 2;
        best = std::min(best, v);
    }
    if (best > kMaxAxisSamples)
        throw ResourceError("grid axis exceeds sample budget", std::to_string(x) + " samples per axis");
    return static_cast<int>(best);
}

struct PreparedTerm {
    std::array<std::int32_t, kMaxDim> mod{};  // n_j mod M_j, in [0, M_j)
    std::size_t group = 0;
    std::int64_t alpha = 0;  // row-axis phase step in units of 1/L
};

struct Plan {
    int d;
    AnisoGrid grid;
    std::int64_t L = 1;                      // common phase denominator
    std::array<std::int64_t, kMaxDim> stepL{};  // L / M_j
    std::vector<PreparedTerm> terms;
    std::vector<std::array<std::int32_t, kMaxDim>> group_mod;  // outer freqs per group
    int row_axis = 0;
};

Plan prepare(int d, std::span<const LatticePoint> support, const AnisoGrid& grid) {
    Plan pl;
    pl.d = d;
    pl.grid = grid;
    // Stream along the longest axis: rotation cost scales with S * M_row
    // while the recombination cost scales with the number of distinct
    // off-row residue tuples, so long axes should be rows.  Ties resolve to
    // the last (contiguous) axis.
    pl.row_axis = 0;
    for (int j = 0; j < d; ++j) {
        if (grid.M[static_cast<std::size_t>(j)] < 1) throw DomainError("grid axis must be positive");
        if (grid.M[static_cast<std::size_t>(j)] >= grid.M[static_cast<std::size_t>(pl.row_axis)])
            pl.row_axis = j;
        pl.L = lcm64(pl.L, grid.M[static_cast<std::size_t>(j)]);
    }
    if (pl.L > kMaxPhaseModulus)
        throw ResourceError("phase denominator too large", "lcm of axis sizes <= 2^31");
    for (int j = 0; j < d; ++j)
        pl.stepL[static_cast<std::size_t>(j)] = pl.L / grid.M[static_cast<std::size_t>(j)];

    std::map<std::array<std::int32_t, kMaxDim>, std::size_t> groups;
    for (const auto& n : support) {
        PreparedTerm t;
        std::array<std::int32_t, kMaxDim> outer{};
        for (int j = 0; j < d; ++j) {
            std::int64_t M = grid.M[static_cast<std::size_t>(j)];
            std::int64_t r = ((n[j] % M) + M) % M;
            t.mod[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(r);
            if (j != pl.row_axis) outer[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(r);
        }
        t.alpha = static_cast<std::int64_t>(t.mod[static_cast<std::size_t>(pl.row_axis)]) *
                  pl.stepL[static_cast<std::size_t>(pl.row_axis)];
        auto [it, fresh] = groups.try_emplace(outer, pl.group_mod.size());
        if (fresh) pl.group_mod.push_back(outer);
        t.group = it->second;
        pl.terms.push_back(t);
    }
    return pl;
}

// FFTW specializes its plans on buffer alignment, so transform buffers pin a
// single 64-byte alignment class; otherwise the chosen kernel, and with it
// the last bit of the result, would depend on where the allocator happened
// to place the vector.
template <typename T>
struct Aligned64 {
    using value_type = T;
    Aligned64() = default;
    template <typename U>
    Aligned64(const Aligned64<U>&) {}
    T* allocate(std::size_t n) {
        std::size_t bytes = (n * sizeof(T) + 63) / 64 * 64;
        void* p = std::aligned_alloc(64, bytes);
        if (p == nullptr) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }
    template <typename U>
    bool operator==(const Aligned64<U>&) const {
        return true;
    }
};

// Split-format sample buffer.  Both planes live in one aligned block at a
// fixed relative offset: FFTW's split-array kernels are sensitive to the
// mutual placement of the two planes, so separate allocations would let the
// heap layout steer the last bit of the transform.
struct SplitBuf {
    std::vector<double, Aligned64<double>> store;
    double* re = nullptr;
    double* im = nullptr;
    void resize(std::size_t n) {
        std::size_t pad = (n + 7) / 8 * 8;  // second plane stays 64-byte aligned
        store.assign(2 * pad, 0.0);
        re = store.data();
        im = store.data() + pad;
    }
    void zero() { std::fill(store.begin(), store.end(), 0.0); }
};

struct StatsAcc {
    double pow_sum = 0.0;
    double min_real = std::numeric_limits<double>::infinity();
    double max_abs_imag = 0.0;
    void feed(const double* re, const double* im, std::size_t n, const ScanRequest& req) {
        const auto& k = simd::ops();
        if (req.p > 0.0) pow_sum += k.abs_pow_sum(re, im, n, req.p);
        if (req.want_min_real) min_real = std::min(min_real, k.min_real(re, n));
        if (req.want_max_abs_imag) max_abs_imag = std::max(max_abs_imag, k.max_abs(im, n));
    }
    ScanResult finish(std::int64_t total) const {
        ScanResult r;
        r.pow_sum = pow_sum;
        r.min_real = (total > 0 && min_real != std::numeric_limits<double>::infinity()) ? min_real : 0.0;
        r.max_abs_imag = max_abs_imag;
        return r;
    }
};

// Streaming direct evaluation.  Terms are grouped by their off-row frequency
// residues; each term's phase rotation along the row axis is generated once
// per chunk and reused for every outer grid point, so the rotation cost is
// S * M_row rather than S * total.
void direct_scan(const Plan& pl, const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                 const ScanRequest& req, std::vector<StatsAcc>& stats,
                 std::vector<std::complex<double>>* dest) {
    const auto& kop = simd::ops();
    const int d = pl.d;
    const int row = pl.row_axis;
    const std::size_t K = coeff_sets.size();
    const std::size_t B = pl.group_mod.size();
    const std::int64_t R = pl.grid.M[static_cast<std::size_t>(row)];
    std::int64_t outer_total = 1;
    for (int j = 0; j < d; ++j)
        if (j != row) outer_total *= pl.grid.M[static_cast<std::size_t>(j)];

    const std::size_t chunk = static_cast<std::size_t>(std::min<std::int64_t>(R, 1 << 15));
    SplitBuf scratch;
    scratch.resize(chunk);
    std::vector<SplitBuf> G(B * K);
    for (auto& g : G) g.resize(chunk);
    std::vector<SplitBuf> rows(K);
    for (auto& r : rows) r.resize(chunk);

    const std::int64_t M_row = pl.grid.M[static_cast<std::size_t>(row)];
    std::array<std::int64_t, kMaxDim> stride{};  // row-major sample layout for dest
    stride[static_cast<std::size_t>(d - 1)] = 1;
    for (int j = d - 2; j >= 0; --j)
        stride[static_cast<std::size_t>(j)] =
            stride[static_cast<std::size_t>(j + 1)] * pl.grid.M[static_cast<std::size_t>(j + 1)];

    for (std::int64_t s0 = 0; s0 < R; s0 += static_cast<std::int64_t>(chunk)) {
        const std::size_t len = static_cast<std::size_t>(std::min<std::int64_t>(static_cast<std::int64_t>(chunk), R - s0));
        for (auto& g : G) g.zero();
        for (std::size_t t = 0; t < pl.terms.size(); ++t) {
            const auto& term = pl.terms[t];
            std::int64_t phi0 = (term.alpha % pl.L) * (s0 % M_row) % pl.L;
            if (K == 1) {
                auto c = coeff_sets[0][t];
                kop.rotation_accumulate(G[term.group].re, G[term.group].im, len,
                                        c.real(), c.imag(), term.alpha, phi0, pl.L);
            } else {
                scratch.zero();
                kop.rotation_accumulate(scratch.re, scratch.im, len, 1.0, 0.0,
                                        term.alpha, phi0, pl.L);
                for (std::size_t k = 0; k < K; ++k) {
                    auto c = coeff_sets[k][t];
                    if (c.real() == 0.0 && c.imag() == 0.0) continue;
                    auto& g = G[term.group * K + k];
                    kop.cmadd(g.re, g.im, scratch.re, scratch.im, len,
                              c.real(), c.imag());
                }
            }
        }

        // Iterate outer points; per group apply the outer phase factor.
        std::array<std::int64_t, kMaxDim> m{};
        for (std::int64_t o = 0; o < outer_total; ++o) {
            for (auto& r : rows) r.zero();
            for (std::size_t b = 0; b < B; ++b) {
                std::int64_t phase = 0;
                for (int j = 0; j < d; ++j) {
                    if (j == row) continue;
                    std::int64_t Mj = pl.grid.M[static_cast<std::size_t>(j)];
                    phase += (static_cast<std::int64_t>(pl.group_mod[b][static_cast<std::size_t>(j)]) *
                              (m[static_cast<std::size_t>(j)] % Mj)) % Mj *
                             pl.stepL[static_cast<std::size_t>(j)];
                }
                phase %= pl.L;
                double theta = 2.0 * M_PI * (static_cast<double>(phase) / static_cast<double>(pl.L));
                double er = std::cos(theta), ei = std::sin(theta);
                for (std::size_t k = 0; k < K; ++k) {
                    auto& g = G[K == 1 ? b : b * K + k];
                    kop.cmadd(rows[k].re, rows[k].im, g.re, g.im, len,
                              er, ei);
                }
            }
            for (std::size_t k = 0; k < K; ++k) {
                stats[k].feed(rows[k].re, rows[k].im, len, req);
                if (dest && k == 0) {
                    std::int64_t obase = 0;
                    for (int j = 0; j < d; ++j)
                        if (j != row)
                            obase += m[static_cast<std::size_t>(j)] * stride[static_cast<std::size_t>(j)];
                    const std::int64_t srow = stride[static_cast<std::size_t>(row)];
                    for (std::size_t i = 0; i < len; ++i)
                        (*dest)[static_cast<std::size_t>(obase + (s0 + static_cast<std::int64_t>(i)) * srow)] =
                            {rows[k].re[i], rows[k].im[i]};
                }
            }
            // odometer over outer axes, last non-row axis fastest
            for (int j = d - 1; j >= 0; --j) {
                if (j == row) continue;
                auto& mj = m[static_cast<std::size_t>(j)];
                if (++mj < pl.grid.M[static_cast<std::size_t>(j)]) break;
                mj = 0;
            }
        }
    }
}

void fft_scan(const Plan& pl, const std::vector<std::vector<std::complex<double>>>& coeff_sets,
              const ScanRequest& req, std::vector<StatsAcc>& stats,
              std::vector<std::complex<double>>* dest) {
    const int d = pl.d;
    const std::int64_t total = pl.grid.total();
    if (total > kMaxTotalFFT)
        throw ResourceError("FFT route exceeds sample budget", std::to_string(total) + " samples");
    std::array<std::int64_t, kMaxDim> stride{};
    stride[static_cast<std::size_t>(d - 1)] = 1;
    for (int j = d - 2; j >= 0; --j)
        stride[static_cast<std::size_t>(j)] =
            stride[static_cast<std::size_t>(j + 1)] * pl.grid.M[static_cast<std::size_t>(j + 1)];

    SplitBuf buf;
    for (std::size_t k = 0; k < coeff_sets.size(); ++k) {
        buf.resize(static_cast<std::size_t>(total));
        for (std::size_t t = 0; t < pl.terms.size(); ++t) {
            std::int64_t idx = 0;
            for (int j = 0; j < d; ++j)
                idx += static_cast<std::int64_t>(pl.terms[t].mod[static_cast<std::size_t>(j)]) *
                       stride[static_cast<std::size_t>(j)];
            buf.re[static_cast<std::size_t>(idx)] += coeff_sets[k][t].real();
            buf.im[static_cast<std::size_t>(idx)] += coeff_sets[k][t].imag();
        }
        // Unnormalized inverse DFT (sign +) via the guru split interface:
        // planning with re/im swapped turns FFTW's forward convention into
        // the e^{+2 pi i} synthesis we need.
        fftw_iodim dims[kMaxDim];
        for (int j = 0; j < d; ++j) {
            dims[j].n = pl.grid.M[static_cast<std::size_t>(j)];
            dims[j].is = static_cast<int>(stride[static_cast<std::size_t>(j)]);
            dims[j].os = static_cast<int>(stride[static_cast<std::size_t>(j)]);
        }
        // Plan from a clean slate every time: the planner's accumulated
        // solution cache otherwise lets earlier transforms of unrelated
        // sizes steer the decomposition (and the last-bit rounding) of this
        // one, breaking byte-for-byte reproducibility.
        fftw_forget_wisdom();
        fftw_plan plan = fftw_plan_guru_split_dft(d, dims, 0, nullptr, buf.im, buf.re,
                                                  buf.im, buf.re, FFTW_ESTIMATE);
        if (!plan) throw ResourceError("FFTW plan creation failed", "smaller grid");
        fftw_execute(plan);
        fftw_destroy_plan(plan);

        stats[k].feed(buf.re, buf.im, static_cast<std::size_t>(total), req);
        if (dest && k == 0) {
            for (std::int64_t i = 0; i < total; ++i)
                (*dest)[static_cast<std::size_t>(i)] = {buf.re[static_cast<std::size_t>(i)],
                                                        buf.im[static_cast<std::size_t>(i)]};
        }
    }
}

Path choose_path(const Plan& pl, std::size_t K, Path requested) {
    if (requested != Path::automatic) return requested;
    const std::int64_t total = pl.grid.total();
    const std::int64_t S = static_cast<std::int64_t>(pl.terms.size());
    const std::int64_t B = static_cast<std::int64_t>(pl.group_mod.size());
    const std::int64_t R = pl.grid.M[static_cast<std::size_t>(pl.d - 1)];
    if (total > kMaxTotalFFT) return Path::direct;
    double direct_cost = 6.0 * static_cast<double>(S) * static_cast<double>(R) +
                         8.0 * static_cast<double>(B) * static_cast<double>(K) * static_cast<double>(total);
    double log2t = std::log2(static_cast<double>(std::max<std::int64_t>(total, 2)));
    double fft_cost = static_cast<double>(K) * static_cast<double>(total) * (2.5 * log2t + 6.0);
    return direct_cost <= fft_cost ? Path::direct : Path::fft;
}

std::vector<ScanResult> run_scan(int d, std::span<const LatticePoint> support,
                                 const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                                 const AnisoGrid& grid, const ScanRequest& req, Path path,
                                 std::vector<std::complex<double>>* dest) {
    if (d < 1 || d > kMaxDim) throw DomainError("scan: dimension out of range");
    for (const auto& cs : coeff_sets)
        if (cs.size() != support.size())
            throw DomainError("scan: coefficient set size does not match support");
    const std::int64_t total = grid.total();
    if (total > kMaxTotalDirect)
        throw ResourceError("grid exceeds streaming sample budget",
                            std::to_string(total) + " samples (cap " + std::to_string(kMaxTotalDirect) + ")");

    std::vector<StatsAcc> stats(coeff_sets.size());
    if (support.empty() || coeff_sets.empty()) {
        std::vector<ScanResult> out;
        for (std::size_t k = 0; k < coeff_sets.size(); ++k) {
            ScanResult r;  // zero polynomial: all samples 0
            r.min_real = 0.0;
            out.push_back(r);
        }
        if (dest) std::fill(dest->begin(), dest->end(), std::complex<double>(0.0, 0.0));
        return out;
    }

    Plan pl = prepare(d, support, grid);
    Path chosen = choose_path(pl, coeff_sets.size(), path);
    if (chosen == Path::fft)
        fft_scan(pl, coeff_sets, req, stats, dest);
    else
        direct_scan(pl, coeff_sets, req, stats, dest);

    std::vector<ScanResult> out;
    out.reserve(stats.size());
    for (const auto& s : stats) out.push_back(s.finish(total));
    return out;
}

}  // namespace

std::vector<ScanResult> family_scan(int d, std::span<const LatticePoint> support,
                                    const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                                    const AnisoGrid& grid, const ScanRequest& req, Path path) {
    return run_scan(d, support, coeff_sets, grid, req, path, nullptr);
}

std::vector<std::complex<double>> materialize(const TrigPoly& f, const AnisoGrid& grid, Path path) {
    const std::int64_t total = grid.total();
    if (total > kMaxTotalFFT)
        throw ResourceError("materialized evaluation exceeds budget", std::to_string(total) + " samples");
    std::vector<LatticePoint> support;
    std::vector<std::complex<double>> coeffs;
    support.reserve(f.term_count());
    coeffs.reserve(f.term_count());
    for (const auto& [n, c] : f.terms()) {
        support.push_back(n);
        coeffs.push_back(c.to_complex());
    }
    std::vector<std::complex<double>> out(static_cast<std::size_t>(total));
    ScanRequest req;  // no stats needed
    std::vector<std::vector<std::complex<double>>> sets{std::move(coeffs)};
    run_scan(f.dim(), support, sets, grid, req, path, &out);
    return out;
}

namespace {

struct ReducedFamily {
    int dim;                                   // reduced dimension
    std::vector<LatticePoint> support;         // reduced support
    std::array<std::int64_t, kMaxDim> degree{};  // per-axis degrees
};

ReducedFamily reduce_support(int d, std::span<const LatticePoint> support) {
    ReducedFamily rf;
    bool all_zero = true;
    for (const auto& n : support)
        if (!n.is_zero()) all_zero = false;
    if (support.empty() || all_zero) {
        rf.dim = 0;
        return rf;
    }
    SublatticeBasis basis = SublatticeBasis::from_generators(support);
    int r = basis.rank();
    std::array<std::int64_t, kMaxDim> red_deg{};
    std::vector<LatticePoint> red_support;
    red_support.reserve(support.size());
    for (const auto& n : support) {
        auto c = basis.coordinates(n);
        if (!c) throw DomainError("reduce_support: point outside generated lattice");
        LatticePoint p(std::span<const std::int64_t>(c->data(), static_cast<std::size_t>(r)));
        for (int j = 0; j < r; ++j)
            red_deg[static_cast<std::size_t>(j)] =
                std::max(red_deg[static_cast<std::size_t>(j)], std::abs(p[j]));
        red_support.push_back(p);
    }
    // The Hermite basis is triangular, not short: supports concentrated along
    // a skew direction keep a large cross-component on later axes (think
    // points (c, 6c+delta) that are really (c, delta) in a better basis).
    // Integer column operations on the coordinate matrix are unimodular
    // changes of the reduced basis and leave every torus norm unchanged, so
    // greedily size-reduce the coordinate columns while the grid volume
    // strictly shrinks.
    if (r >= 2 && !red_support.empty()) {
        for (int sweep = 0; sweep < 32; ++sweep) {
            bool improved = false;
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    if (i == j) continue;
                    __int128 dot_ij = 0, dot_jj = 0;
                    for (const auto& p : red_support) {
                        dot_ij += static_cast<__int128>(p[i]) * p[j];
                        dot_jj += static_cast<__int128>(p[j]) * p[j];
                    }
                    if (dot_jj == 0) continue;
                    std::int64_t q = static_cast<std::int64_t>(
                        std::llround(static_cast<double>(dot_ij) / static_cast<double>(dot_jj)));
                    if (q == 0) continue;
                    std::int64_t new_deg_i = 0;
                    for (const auto& p : red_support)
                        new_deg_i = std::max(new_deg_i, std::abs(p[i] - q * p[j]));
                    if (new_deg_i >= red_deg[static_cast<std::size_t>(i)]) continue;
                    std::vector<LatticePoint> next;
                    next.reserve(red_support.size());
                    for (const auto& p : red_support) {
                        std::array<std::int64_t, kMaxDim> c{};
                        for (int a = 0; a < r; ++a) c[static_cast<std::size_t>(a)] = p[a];
                        c[static_cast<std::size_t>(i)] -= q * p[j];
                        next.emplace_back(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(r)));
                    }
                    red_support = std::move(next);
                    red_deg[static_cast<std::size_t>(i)] = new_deg_i;
                    improved = true;
                }
            }
            if (!improved) break;
        }
    }

    // Ambient coordinates as fallback when the reduction does not shrink the
    // grid (it almost always does).
    std::array<std::int64_t, kMaxDim> amb_deg{};
    for (const auto& n : support)
        for (int j = 0; j < d; ++j)
            amb_deg[static_cast<std::size_t>(j)] =
                std::max(amb_deg[static_cast<std::size_t>(j)], std::abs(n[j]));
    double red_cost = 1.0, amb_cost = 1.0;
    for (int j = 0; j < r; ++j) red_cost *= static_cast<double>(2 * red_deg[static_cast<std::size_t>(j)] + 1);
    for (int j = 0; j < d; ++j) amb_cost *= static_cast<double>(2 * amb_deg[static_cast<std::size_t>(j)] + 1);
    if (amb_cost < red_cost) {
        rf.dim = d;
        rf.support.assign(support.begin(), support.end());
        rf.degree = amb_deg;
    } else {
        rf.dim = r;
        rf.support = std::move(red_support);
        rf.degree = red_deg;
    }
    return rf;
}

AnisoGrid grid_for(const ReducedFamily& rf, double oversampling) {
    AnisoGrid g;
    g.d = rf.dim;
    for (int j = 0; j < rf.dim; ++j) {
        double want = oversampling * static_cast<double>(2 * rf.degree[static_cast<std::size_t>(j)] + 1);
        g.M[static_cast<std::size_t>(j)] = smooth_at_least(static_cast<std::int64_t>(std::ceil(want)));
    }
    return g;
}

int next_smooth_above(int m) {
    return smooth_at_least(static_cast<std::int64_t>(m) + 1);
}

bool grid_ok(const AnisoGrid& g) {
    for (int j = 0; j < g.d; ++j)
        if (g.M[static_cast<std::size_t>(j)] > kMaxAxisSamples) return false;
    return g.total() <= kMaxTotalDirect;
}

// Refinement grid for the one-step error hint.  Tries, in order: doubling
// every axis, doubling the largest axis, bumping the largest axis to the
// next smooth size, doubling the smallest axis.  All candidates respect the
// sample budgets; if none fits the base grid was already at the edge and we
// refuse rather than silently skip the hint.
AnisoGrid refine_grid(const AnisoGrid& base) {
    int big = 0, small = 0;
    for (int j = 1; j < base.d; ++j) {
        if (base.M[static_cast<std::size_t>(j)] > base.M[static_cast<std::size_t>(big)]) big = j;
        if (base.M[static_cast<std::size_t>(j)] < base.M[static_cast<std::size_t>(small)]) small = j;
    }
    AnisoGrid cand = base;
    for (int j = 0; j < base.d; ++j) cand.M[static_cast<std::size_t>(j)] *= 2;
    if (grid_ok(cand)) return cand;
    cand = base;
    cand.M[static_cast<std::size_t>(big)] *= 2;
    if (grid_ok(cand)) return cand;
    cand = base;
    cand.M[static_cast<std::size_t>(big)] = next_smooth_above(base.M[static_cast<std::size_t>(big)]);
    if (grid_ok(cand)) return cand;
    cand = base;
    cand.M[static_cast<std::size_t>(small)] *= 2;
    if (grid_ok(cand)) return cand;
    throw ResourceError("refinement grid exceeds sample budget",
                        "base grid with " + std::to_string(base.total()) + " samples leaves no headroom");
}

}  // namespace

std::vector<NormReport> reduced_family_norms(int d, std::span<const LatticePoint> support,
                                             const std::vector<std::vector<std::complex<double>>>& coeff_sets,
                                             const ReducedNormOptions& opt) {
    if (opt.p < 1.0) throw DomainError("reduced_family_norms: p must be >= 1");
    ReducedFamily rf = reduce_support(d, support);
    std::vector<NormReport> out(coeff_sets.size());
    if (rf.dim == 0) {
        // Constant polynomials: exact.
        for (std::size_t k = 0; k < coeff_sets.size(); ++k) {
            std::complex<double> c(0.0, 0.0);
            for (auto v : coeff_sets[k]) c += v;
            out[k].value = std::abs(c);
            out[k].p = opt.p;
            out[k].method = NormReport::Method::exact_coefficient;
        }
        return out;
    }

    AnisoGrid base = grid_for(rf, opt.oversampling);
    AnisoGrid fine = refine_grid(base);

    ScanRequest req;
    req.p = opt.p;
    auto coarse_res = family_scan(rf.dim, rf.support, coeff_sets, base, req, opt.path);
    auto fine_res = family_scan(rf.dim, rf.support, coeff_sets, fine, req, opt.path);
    for (std::size_t k = 0; k < coeff_sets.size(); ++k) {
        double v0 = std::pow(coarse_res[k].pow_sum / static_cast<double>(base.total()), 1.0 / opt.p);
        double v1 = std::pow(fine_res[k].pow_sum / static_cast<double>(fine.total()), 1.0 / opt.p);
        out[k].value = v0;
        out[k].p = opt.p;
        out[k].method = NormReport::Method::quadrature;
        int maxm = 0;
        for (int j = 0; j < rf.dim; ++j)
            maxm = std::max(maxm, base.M[static_cast<std::size_t>(j)]);
        out[k].grid = GridSpec{maxm};
        out[k].error_hint = std::abs(v0 - v1);
    }
    return out;
}

NormReport reduced_lp_norm(const TrigPoly& f, double p, double oversampling, Path path) {
    std::vector<LatticePoint> support;
    std::vector<std::complex<double>> coeffs;
    for (const auto& [n, c] : f.terms()) {
        support.push_back(n);
        coeffs.push_back(c.to_complex());
    }
    ReducedNormOptions opt;
    opt.p = p;
    opt.oversampling = oversampling;
    opt.path = path;
    auto v = reduced_family_norms(f.dim(), support, {coeffs}, opt);
    return v[0];
}

double reduced_min_real(const TrigPoly& f, double oversampling) {
    std::vector<LatticePoint> support;
    std::vector<std::complex<double>> coeffs;
    for (const auto& [n, c] : f.terms()) {
        support.push_back(n);
        coeffs.push_back(c.to_complex());
    }
    if (support.empty()) return 0.0;
    ReducedFamily rf = reduce_support(f.dim(), support);
    if (rf.dim == 0) {
        std::complex<double> c(0.0, 0.0);
        for (auto v : coeffs) c += v;
        return c.real();
    }
    AnisoGrid g = grid_for(rf, oversampling);
    ScanRequest req;
    req.want_min_real = true;
    auto res = family_scan(rf.dim, rf.support, {coeffs}, g, req);
    return res[0].min_real;
}

}  // namespace tml::quad
