#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tml/lattice.hpp"
#include "tml/report.hpp"
#include "tml/trigpoly.hpp"

namespace tml {

// Whether the diagonal operator of a symbol is asserted to act boundedly
// from W^{1,1}(T^d) into L_p.  Boundedness is not decidable by this
// toolkit; builtin symbols carry the assertion as catalog metadata with a
// one-line justification, and checks that presuppose it refuse to run on
// "no" unless explicitly invoked as a negative control.
enum class Boundedness { yes, no, unknown };

// A multiplier symbol: a total, deterministic map on nonzero lattice
// points.  Builtins are "one" (lambda == 1), "power:s" (|n|_2^{-s}),
// "norm" (|n|_2, the growth control), and finite CSV-backed tables.
class MultiplierSymbol {
public:
    static MultiplierSymbol one(int d);
    static MultiplierSymbol power(int d, double s);
    static MultiplierSymbol norm_weight(int d);
    // CSV rows "n_1,...,n_d,re,im"; missing points evaluate to 0.
    static MultiplierSymbol table(int d, const std::string& path);
    static MultiplierSymbol table_from_string(int d, const std::string& csv, std::string name);
    // Catalog syntax: "one" | "power:<s>" | "norm" | "table:<file>".
    static MultiplierSymbol parse(const std::string& text, int d);

    std::complex<double> eval(const LatticePoint& n) const;
    double abs_eval(const LatticePoint& n) const;

    int dim() const { return d_; }
    const std::string& name() const { return name_; }
    Boundedness bounded() const { return bounded_; }
    const std::string& bounded_note() const { return bounded_note_; }
    // True when |lambda_n| is a function of |n|_2 alone.
    bool is_radial() const { return kind_ != Kind::table; }

private:
    enum class Kind { one, power, norm, table };
    MultiplierSymbol() = default;

    Kind kind_ = Kind::one;
    int d_ = 1;
    double s_ = 0.0;  // power exponent
    std::string name_;
    Boundedness bounded_ = Boundedness::unknown;
    std::string bounded_note_;
    std::shared_ptr<const std::map<LatticePoint, std::complex<double>>> table_;
};

// Coefficient-wise action: the coefficient at n != 0 is multiplied by
// lambda_n; the mean passes through unchanged (lambda_0 := 0 convention:
// the zero frequency is excluded from every sum below).
TrigPoly apply(const MultiplierSymbol& sym, const TrigPoly& f);

// ---- ring diagnostics --------------------------------------------------------

// Hard cap on exact ring sweeps (points per ring).
inline constexpr std::int64_t kMaxRingSweepPoints = std::int64_t(1) << 28;
// Cap for sweeps that walk each ring twice to check the split inequality
// on every point.
inline constexpr std::int64_t kMaxTermwiseRingPoints = std::int64_t(1) << 26;

// Largest k whose ring in dimension d holds at most `budget` points.
int max_enumerable_ring(int d, std::int64_t budget);

struct RingStats {
    int k = 0;
    double ring_sum = 0.0;     // sum over R_k of (|lambda_n|/|n|_2)^{p'}
    double mu = 0.0;           // max over R_k of |lambda_n|/|n|_2
    LatticePoint argmax;       // lexicographically largest maximizer
    std::int64_t points = 0;   // ring cardinality
};

// Exact enumeration of ring k; p' = p/(p-1), p in (1, 2].
RingStats ring_stats(const MultiplierSymbol& sym, int k, double p);
std::vector<RingStats> ring_stats_range(const MultiplierSymbol& sym, int k_lo, int k_hi, double p);

// (sum over rings 0..K of |lambda_n|^p)^{1/p}; monotone non-decreasing in K.
double schatten_partial(const MultiplierSymbol& sym, double p, int K);

// Empirical k-independence of the ring sums over k_lo..k_hi: passes when
// max <= 4 x median, or when the sums are non-increasing within 5% slack
// (a decaying sequence is bounded by its first element).  Heuristic,
// reported as such; never a proof.  Symbols cataloged unbounded are
// refused (failed report, no sweep) unless run_unbounded is set.
CertificationReport krok1_flatness_certify(const MultiplierSymbol& sym, double p, int k_lo,
                                           int k_hi, bool run_unbounded = false);
CertificationReport krok1_flatness_from_stats(const MultiplierSymbol& sym, double p,
                                              std::span<const RingStats> stats,
                                              bool run_unbounded = false);

// ---- exponent bookkeeping ----------------------------------------------------

struct DiagnosticsConfig {
    int d = 1;
    double p = 2.0;        // (1, 2]
    double epsilon = 0.1;  // > 0
    int K_max = 5;         // rings 0..K_max
    int N = 2;             // sector granularity
    double p_conj = 2.0;   // p/(p-1)
    double q_main = 0.0;   // p' + p'*(d+1) + epsilon, computed left to right

    DiagnosticsConfig(int d, double p, double epsilon, int K_max, int N);
};

// ---- the main summability chain ----------------------------------------------

struct MainSumReport {
    std::vector<double> ring_increments;  // per ring: sum (|lambda|/|n|)^{q_main}
    std::vector<double> partial;          // cumulative S(K)
    std::vector<double> mu;               // per-ring maxima
    bool split_ok = true;                 // termwise split inequality on every point
    double split_rhs = 0.0;               // sum_k ring_sum_k * mu_k^{p'(d+1)+eps}
    CertificationReport cert;
};

// Partial sums of (|lambda_n|/|n|_2)^{q_main} by ring together with the
// split-form bound: on every enumerated point,
//   (|lambda|/|n|)^{q_main} <= (|lambda|/|n|)^{p'} * mu_k^{p'(d+1)+eps}.
MainSumReport main_sum_partial(const MultiplierSymbol& sym, const DiagnosticsConfig& cfg);

// ---- factorization -----------------------------------------------------------

// lambda_n = alpha_n * beta_n with the beta side controlled by
// |beta_n| * |n|_2 <= normB_bound at every sampled point.
struct FactorizationWitness {
    MultiplierSymbol alpha;
    MultiplierSymbol beta;
    double normB_bound = 0.0;
    std::string name;
};

// The three stock witnesses in dimension d (lambda == 1, |n|^{-2}, |n|^{-1}).
std::vector<FactorizationWitness> factorization_catalog(int d);

// Verifies, over rings 0..K_max, the termwise control |beta_n|*|n|_2 <=
// normB_bound and the summed chain
//   sum |lambda_n|^p <= normB_bound^p * sum (|alpha_n|/|n|_2)^p,
// reporting both sides; a violated control yields a failure naming the
// witness point.
CertificationReport compose_factorization(const FactorizationWitness& w, double p, int K_max);

// ---- sparse-sequence lower bound ----------------------------------------------

struct PreKrok2Report {
    double lhs = 0.0;             // sum over the sequence of (|lambda|/|n|_2)^{p'}
    double restricted_sum = 0.0;  // sum over weight-1 patterns of |(T phi)^(M(xi))|^{p'}
    double coeff_lq = 0.0;        // full (sum |(T phi)^|^{p'})^{1/p'}
    double tphi_norm = 0.0;       // ||T phi||_p by reduced quadrature
    double phi_sobolev = 0.0;     // ||phi||_{1,1}
    double c_desk = 0.0;          // (4 pi)^{p'}
    double ratio = 0.0;           // lhs / ||T phi||_p^{p'} (0 when the norm vanishes)
    CertificationReport cert;
};

// Builds the antiderivative test function on a single-sector N-sparse
// sequence and certifies the chain
//   lhs <= (4 pi)^{p'} * restricted_sum <= (4 pi)^{p'} * (coeff l_{p'})^{p'}
//       <= (4 pi)^{p'} * (||T phi||_p + tol)^{p'},
// the last step by the Hausdorff-Young comparison on quadrature norms.
PreKrok2Report pre_krok2_certify(const MultiplierSymbol& sym, const SparseSequence& seq,
                                 int N_sector, double p, double oversampling = 4.0);

// ---- rearrangement and counting ------------------------------------------------

// Indices of a stable non-increasing rearrangement; ties keep original order.
std::vector<std::size_t> rearrange_nonincreasing(std::span<const double> values);

struct Krok2Report {
    std::vector<RingStats> rings;      // rings 0 .. N^{d+1}-1
    std::vector<std::size_t> sigma;    // non-increasing rearrangement of mu
    double total = 0.0;                // sum of mu^{p'} over the rings
    double k_emp = 0.0;                // max per-sequence lhs
    std::int64_t seq_count = 0;
    double seq_budget = 0.0;           // N^d + d*N^{d-1}*(2N+1)
    std::int64_t sectors_realized = 0;
    CertificationReport cert;
};

// Full counting pipeline: one argmax point per ring, rearrangement,
// sector bucketing, sparse splitting per sector, per-sequence sums;
// passes when sum mu^{p'} <= k_emp * N^d, the bucket sizes add up to
// N^{d+1}, the realized sector count stays within d*N^{d-1}, and every
// sector splits into at most #I_A/N + 2N + 1 sequences.
Krok2Report krok2_counting_certify(const MultiplierSymbol& sym, const DiagnosticsConfig& cfg);

// ---- summability lemmas ---------------------------------------------------------

// For non-increasing nonnegative b with prefix sums O(N^alpha): fits the
// best constant C, re-derives b_N <= C*N^{alpha-1} on every index, and
// reports the Cauchy trend of sum b_j^q.  A growing normalized prefix
// (f(L)/f(L/2) > 1.02 with f(n) = prefix(n)/n^alpha) is flagged as a
// premise violation and no tail conclusion is claimed.
CertificationReport lema1_check(std::span<const double> b, double alpha, double q);

struct Lema2Report {
    std::vector<double> mu;
    double trend = 0.0;  // last / max, 0 when max == 0
    CertificationReport cert;
};

// Reports the mu_k sequence and its decay trend; a non-decaying tail is
// evidence against boundedness, never proof.  Unbounded-cataloged symbols
// are refused unless run_unbounded is set.
Lema2Report lema2_decay_report(const MultiplierSymbol& sym, int K_max, bool run_unbounded = false);
Lema2Report lema2_from_stats(const MultiplierSymbol& sym, std::span<const RingStats> stats,
                             bool run_unbounded = false);

}  // namespace tml
