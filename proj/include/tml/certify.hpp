#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tml/kernels.hpp"
#include "tml/multiplier.hpp"
#include "tml/report.hpp"

namespace tml {

// Parameter grid for one suite run.  Every knob has a desk-scale default;
// combinations that exceed a module budget are reported as skipped cases,
// never aborts.
struct SuiteConfig {
    std::vector<int> dims = {1, 2, 3};
    std::vector<double> p_values = {2.0};
    double eps = 0.1;
    std::vector<int> N_values = {2, 3, 4};
    int k_lo = 0;
    int k_hi = 5;
    double oversampling = 4.0;
    std::uint64_t seed = 7;
    std::string symbol = "one";
};

// The claim families in suite order, with one-line titles.
const std::vector<std::pair<std::string, std::string>>& claim_registry();
bool is_registered_claim(const std::string& id);

// Runs the selected claim families (all when `only` is empty) and returns
// every case report, ordered family by family.  Deterministic for a fixed
// config; per-family randomness is derived from cfg.seed and the claim id,
// so selection does not change the drawn cases.
std::vector<CertificationReport> run_suite(const SuiteConfig& cfg,
                                           const std::vector<std::string>& only = {});

// Deterministic JSON artifacts for a finished run.
struct SuiteArtifacts {
    std::string suite_json;                                    // summary
    std::vector<std::pair<std::string, std::string>> claim_files;  // claim id -> file body
    bool all_expected = true;
};
SuiteArtifacts assemble_suite(const SuiteConfig& cfg,
                              const std::vector<CertificationReport>& reports);

// Flat key=value config text (comments with '#'); unknown keys and
// malformed values raise DomainError naming "<origin>:<line>".
SuiteConfig suite_config_from_text(const std::string& text, const std::string& origin);

// ---- sharpness exploration -----------------------------------------------------

struct SharpnessRow {
    double q = 0.0;
    int K = 0;
    double partial_sum = 0.0;
    std::string classifier;  // convergent | divergent | inconclusive
};

struct SharpnessReport {
    std::vector<SharpnessRow> rows;                       // one per (q, K), K = 1..K_max
    std::vector<std::pair<double, std::string>> verdicts;  // classifier at K_max per q
};

// Partial sums over rings 0..K-1 of (|lambda_n|/|n|_2)^q for each exponent
// in the grid.  The classifier averages the last three ring-increment
// ratios: < 0.9 reads convergent, > 1.02 divergent, anything else (or
// fewer than four increments) inconclusive.  A trend label, never a limit.
SharpnessReport sharpness_explore(const MultiplierSymbol& sym, std::span<const double> q_grid,
                                  int K_max);

// ---- helpers shared with the acceptance harness ----------------------------------

// Grid agreement between the expanded series and the pointwise product
// form, on an M^d uniform grid with exact integer phase reduction.
CertificationReport riesz_agreement_check(const RieszProductSpec& spec, int M);

// Quadrature Sobolev bound for the d-fold product kernel at order 3^{k+2}:
// value <= 1 + d*3^{k+2} within (2*hint + 1e-9).  Uses two FFT-sized grids
// (base and 5/4 refinement) so dense cubes never fall to the streaming path.
CertificationReport fejer_sobolev_certify(int d, int k, double oversampling);

}  // namespace tml
