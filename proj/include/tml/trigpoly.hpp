#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tml/coeff.hpp"
#include "tml/lattice.hpp"
#include "tml/report.hpp"

namespace tml {

// A finitely supported Fourier series on the torus [0,1)^d with the
// character convention e(n, t) = e^{2*pi*i*<n,t>}.  Zero coefficients are
// never stored.  Axis indices in this API are 0-based; file formats and the
// CLI use 1-based axes.
class TrigPoly {
public:
    explicit TrigPoly(int d);

    int dim() const { return d_; }
    // Max over the support of the sup-norm of the frequency (0 if empty).
    std::int64_t degree() const;
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<LatticePoint, Coeff>& terms() const { return coeffs_; }

    Coeff coeff(const LatticePoint& n) const;
    Coeff mean() const;  // coefficient at 0
    void set_coeff(const LatticePoint& n, Coeff c);
    void add_coeff(const LatticePoint& n, const Coeff& c);

    // True iff coeff(-n) == conj(coeff(n)) for every support point
    // (structural equality; exact for exact coefficients).
    bool is_real() const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly scaled(const Coeff& c) const;

    static TrigPoly character(const LatticePoint& n, Coeff c);
    static TrigPoly constant(int d, Coeff c);
    // (e(n,t) + e(-n,t))/2 = cos(2*pi*<n,t>) with exact 1/2 coefficients.
    static TrigPoly cosine(const LatticePoint& n);

private:
    int d_;
    std::map<LatticePoint, Coeff> coeffs_;
};

// Uniform grid with M samples per axis, sample m at t = m/M.
struct GridSpec {
    int M = 0;
    double oversampling_for(std::int64_t degree) const {
        return static_cast<double>(M) / static_cast<double>(2 * degree + 1);
    }
};

struct NormReport {
    double value = 0.0;
    double p = 1.0;
    enum class Method { exact_coefficient, quadrature } method = Method::quadrature;
    std::optional<GridSpec> grid;
    double error_hint = 0.0;
};

struct EvalOptions {
    enum class Path { automatic, direct, fft } path = Path::automatic;
};

// Samples f on the uniform grid, row-major with the last axis contiguous;
// sample index (m_0,...,m_{d-1}) -> value at t = (m_0/M,...,m_{d-1}/M).
// Direct summation and the FFT path agree to 1e-12 relative.
std::vector<std::complex<double>> evaluate_on_grid(const TrigPoly& f, const GridSpec& g,
                                                   const EvalOptions& opt = {});

// Riemann-sum L_p norm: value = (M^-d * sum |f|^p)^(1/p) at g.M, with
// error_hint = |value(M) - value(2M)| from one refinement step.
NormReport lp_norm(const TrigPoly& f, double p, const GridSpec& g,
                   const EvalOptions& opt = {});

// Exact-where-possible sum of coefficient magnitudes (upper bound for ||f||_inf).
double coeff_l1_upper(const TrigPoly& f);

// d/dt_axis: coefficient at n multiplied by 2*pi*i*n_axis.
TrigPoly partial_derivative(const TrigPoly& f, int axis);

// Inverse of partial_derivative on polynomials whose support has nonzero
// coordinate along `axis` (in particular mean-zero).  DomainError otherwise.
TrigPoly antiderivative(const TrigPoly& f, int axis);

// ||f||_1 + sum_j ||d_j f||_1, all via lp_norm with p=1.
NormReport sobolev_norm_11(const TrigPoly& f, const GridSpec& g,
                           const EvalOptions& opt = {});

// (sum_n |f^(n)|^q)^(1/q); the inner sum is evaluated in exact rational
// arithmetic whenever q is an even integer (or the coefficients are pure
// real/imaginary and q integral).
double fourier_coeff_lq(const TrigPoly& f, double q);

// Hausdorff-Young: passes iff fourier_coeff_lq(f, p') <= lp_norm(f, p) +
// (2*error_hint + 1e-9), p' = p/(p-1), for p in (1, 2].
CertificationReport hausdorff_young_check(const TrigPoly& f, double p, const GridSpec& g);

// Bernstein (d=1): ||f'||_1 <= 2*pi*degree*||f||_1 + tolerance; reports the
// raw ratio and the convention-normalized ratio (raw / (2*pi*degree)).
CertificationReport bernstein_check(const TrigPoly& f, const GridSpec& g);

// JSON round-trip: a poly is an array of {"freq": [...], "re": "...", "im": "..."}.
std::string trigpoly_to_json(const TrigPoly& f);
TrigPoly trigpoly_from_json(const std::string& text, int expected_dim = 0);

}  // namespace tml
