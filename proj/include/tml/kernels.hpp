#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tml/lattice.hpp"
#include "tml/report.hpp"
#include "tml/trigpoly.hpp"

namespace tml {

// ---- Fejér constructions ----------------------------------------------------

// 1-D Fejér kernel of order n: coefficient (n - |k|)/n at k for |k| < n.
// Exact rationals; nonnegative; mean 1.
TrigPoly fejer_kernel(int n);

// Tensor product of d Fejér kernels of order 3^(k+2): coefficient at m is
// prod_j (1 - |m_j|/3^(k+2)).  Mean 1; nonnegative.
TrigPoly fejer_product(int d, int k);

// Largest supported coefficient count for fejer_product.
inline constexpr std::int64_t kMaxFejerTerms = std::int64_t(1) << 19;

// Exact minimum over the triadic ring R_k of the fejer_product coefficient;
// passes iff the minimum is >= (2/3)^d (exact rational comparison).
CertificationReport fejer_ring_lower_bound(int d, int k);

// ---- Riesz products ---------------------------------------------------------

// A sign pattern xi in {-1,0,+1}^N.
struct SignPattern {
    std::array<std::int8_t, 12> xi{};
    int N = 0;

    int weight() const {  // number of nonzero entries
        int w = 0;
        for (int i = 0; i < N; ++i) w += xi[static_cast<std::size_t>(i)] != 0;
        return w;
    }
    // sum_i xi_i * freqs[i], exact (ResourceError on int64 overflow).
    LatticePoint frequency(std::span<const LatticePoint> freqs) const;
};

// Iterates all 3^N sign patterns in ternary-counter order (entry 0 fastest,
// digit order -1, 0, +1).
class SignPatternRange {
public:
    explicit SignPatternRange(int N);
    // Writes the next pattern; returns false when exhausted.
    bool next(SignPattern& out);

private:
    int N_;
    std::array<std::int8_t, 12> cur_{};
    bool done_, started_;
};

inline constexpr int kMaxRieszFactors = 12;  // 3^12 expansion terms at most

// Frequency list for the product prod_l (1 + cos(2 pi <n_l, t>)).
// Construction certifies:
//   * 1 <= N <= 12, uniform dimension, no zero frequency;
//   * consecutive euclidean norms strictly increase by a factor > 3;
//   * all 3^N pattern frequencies M(xi) are pairwise distinct.
class RieszProductSpec {
public:
    explicit RieszProductSpec(std::vector<LatticePoint> freqs);

    int N() const { return static_cast<int>(freqs_.size()); }
    int dim() const { return d_; }
    const std::vector<LatticePoint>& freqs() const { return freqs_; }

private:
    std::vector<LatticePoint> freqs_;
    int d_;
};

// The product expanded into its 3^N-term series: coefficient 2^(-L(xi)) at
// M(xi); constant term exactly 1.
TrigPoly riesz_expand(const RieszProductSpec& spec);

// Partial product over the first l-1 frequencies (l = 1 gives the constant
// 1).  Pre: 1 <= l <= N.
TrigPoly riesz_partial(const RieszProductSpec& spec, int l);

// Nonnegativity and unit-mean certificate: passes iff the constant
// coefficient is exactly 1, every grid sample is >= -1e-9, and the
// quadrature L_1 norm is 1 within max(1e-6, twice the refinement hint).
CertificationReport riesz_l1_certify(const RieszProductSpec& spec, double oversampling = 4.0);

// Multiplication by cos(2 pi <n, t>), coefficient-exact.
TrigPoly cosine_modulate(const TrigPoly& f, const LatticePoint& n);

// Coefficient-exact telescoping identity: the expansion minus 1 equals
// sum_l cos(2 pi <n_l, t>) * (partial product before l).
CertificationReport riesz_decomposition_check(const RieszProductSpec& spec);

// ---- the antiderivative test function ---------------------------------------

// Riesz spec plus a distinguished axis j0 (0-based) along which every
// nonzero pattern frequency has a nonvanishing coordinate (certified at
// construction; required for the antiderivative).
class TestPhiSpec {
public:
    TestPhiSpec(RieszProductSpec riesz, int j0);

    const RieszProductSpec& riesz() const { return riesz_; }
    int j0() const { return j0_; }
    int dim() const { return riesz_.dim(); }
    int N() const { return riesz_.N(); }

private:
    RieszProductSpec riesz_;
    int j0_;
};

// phi with coefficient 2^(-L(xi)) / (2 pi i M(xi)^(j0)) at M(xi), xi != 0;
// mean zero; d/dt_j0 phi equals the expansion minus 1, coefficient-exact.
TrigPoly test_phi(const TestPhiSpec& spec);

// Exact half-sum bound on the transfer coefficient at step l, axis j:
// max over patterns xi on the first l-1 frequencies of
//   (|r_plus - r_0| + |r_minus - r_0|) / 2,
// r_pm = (M(xi)^(j) +- n_l^(j)) / (M(xi)^(j0) +- n_l^(j0)),
// r_0 = n_l^(j) / n_l^(j0).
struct HlBound {
    bool denominators_ok = true;  // no vanishing M(xi)^(j0) +- n_l^(j0)
    Rational max_half_sum = Rational(0);
    double scaled = 0.0;  // 3^N * max_half_sum (the empirical constant)
};
HlBound hl_bound_exact(const TestPhiSpec& spec, int l, int j);

// Report wrapper; passes iff no denominator vanishes.  Pre: 1 <= l <= N,
// 0 <= j < d, j != j0.
CertificationReport hl_coefficient_bound(const TestPhiSpec& spec, int l, int j);

// ---- gradient norms ----------------------------------------------------------

struct GradientReport {
    NormReport phi_l1;
    std::vector<NormReport> per_axis;  // ||d/dt_j phi||_1, axis order
    double sobolev_11 = 0.0;           // phi_l1 + sum of per-axis values
    double off_axis_max = 0.0;         // max over j != j0 (0 when d = 1)
    CertificationReport cert;          // passes iff axis-j0 norm <= 2 + tol
};

// All gradient L_1 norms in one shared-support family scan on the reduced
// torus of the pattern-frequency lattice.
GradientReport gradient_report(const TestPhiSpec& spec, double oversampling = 4.0);

// ---- randomized same-sector corpus ------------------------------------------

// Deterministic family of same-sector N-sparse specs used by the randomized
// certifications: frequencies c_i * v + [i == i0] * w with a dominant-axis
// direction v (v_j0 = 2N, |v_k| <= 2N-2), super-increasing integer gains
// c_1 = 1, c_{i+1} = c_i * (3^N + 2) * eta_i (eta in {1,2}), and a one-step
// slack perturbation w = +-e_s on a non-dominant axis.  Every spec is
// re-verified (sparsity, shared sector, distinct pattern frequencies)
// before being returned.
std::vector<TestPhiSpec> sparse_spec_corpus(int d, int N, int count, std::uint64_t seed);

// ---- fixture serialization ---------------------------------------------------

struct KernelSpecJson {
    enum class Type { fejer_product, riesz_phi } type = Type::fejer_product;
    int d = 1;
    int k = 0;                         // fejer_product
    std::vector<LatticePoint> freqs;   // riesz_phi
    int j0 = 0;                        // riesz_phi, 0-based in memory
};

// JSON uses 1-based axis numbering for j0.
std::string kernel_spec_to_json(const KernelSpecJson& s);
KernelSpecJson kernel_spec_from_json(const std::string& text);

// Materializes the spec into its polynomial.
TrigPoly kernel_spec_build(const KernelSpecJson& s);

}  // namespace tml
