// Acceptance gate.  Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero when any criterion fails.  Tolerances and runtime
// limits are pinned here, not configurable.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tml/certify.hpp"
#include "tml/errors.hpp"
#include "tml/kernels.hpp"
#include "tml/lattice.hpp"
#include "tml/multiplier.hpp"
#include "tml/rng.hpp"
#include "tml/trigpoly.hpp"

using namespace tml;

namespace {

int failures = 0;

// Runs one criterion, enforcing an optional wall-clock limit (seconds).
template <typename Fn>
void criterion(int id, const std::string& desc, double limit_s, Fn&& body) {
    std::string why;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(why);
    } catch (const std::exception& e) {
        ok = false;
        why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && limit_s > 0.0 && secs > limit_s) {
        ok = false;
        std::ostringstream os;
        os << "exceeded the " << limit_s << " s budget (" << secs << " s)";
        why = os.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << desc << " (" << secs
         << "s)";
    if (!ok && !why.empty()) line << "  [" << why << "]";
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

std::int64_t ipow3(int k) {
    std::int64_t v = 1;
    while (k-- > 0) v *= 3;
    return v;
}

// Walks every nonzero point of [-(3^5 - 1), 3^5 - 1]^d, checking the exact
// norm bounds and the ring classifier, and tallying ring populations.
bool walk_rings(int d, std::string& why) {
    const std::int64_t side = ipow3(5) - 1;  // rings 0..4 exactly
    std::array<std::int64_t, 3> thr{};
    std::array<long, 5> count{};
    for (int k = 0; k < 3; ++k) thr[static_cast<std::size_t>(k)] = ipow3(k + 1);
    std::array<std::int64_t, 3> c{};
    c.fill(-side);
    while (true) {
        std::int64_t sup = 0;
        for (int j = 0; j < d; ++j) {
            std::int64_t a = c[static_cast<std::size_t>(j)];
            if (a < 0) a = -a;
            if (a > sup) sup = a;
        }
        if (sup != 0) {
            int k_expect = 0;
            while (k_expect < 4 && sup >= ipow3(k_expect + 1)) ++k_expect;
            LatticePoint n(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d)));
            if (ring_index(n) != k_expect) {
                why = "ring classifier disagrees at a point with sup " + std::to_string(sup);
                return false;
            }
            if (!euclid_bounds_check(n)) {
                why = "norm bounds violated in ring " + std::to_string(k_expect);
                return false;
            }
            ++count[static_cast<std::size_t>(k_expect)];
        }
        int j = 0;
        for (; j < d; ++j) {
            if (++c[static_cast<std::size_t>(j)] <= side) break;
            c[static_cast<std::size_t>(j)] = -side;
        }
        if (j == d) break;
    }
    for (int k = 0; k <= 4; ++k) {
        if (Integer(count[static_cast<std::size_t>(k)]) != ring_cardinality(k, d)) {
            why = "ring population disagrees with the closed form at d=" + std::to_string(d) +
                  " k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

TrigPoly random_poly(Rng& rng, int d, int max_deg, int terms) {
    TrigPoly f(d);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int64_t> c;
        for (int j = 0; j < d; ++j) c.push_back(rng.uniform(-max_deg, max_deg));
        f.add_coeff(LatticePoint(c), Coeff::approx({2.0 * rng.uniform_real() - 1.0,
                                                    2.0 * rng.uniform_real() - 1.0}));
    }
    return f;
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
    for (int j = 0; j < a.dim(); ++j)
        if (a[j] != b[j]) return a[j] < b[j];
    return false;
}

// Same-sector batch with one point per ring: positive integer multiples of a
// base direction, the multiplier chosen so the sup norm lands in ring k.
std::vector<LatticePoint> sector_batch(Rng& rng, int d, int& N_out) {
    while (true) {
        std::vector<std::int64_t> base(static_cast<std::size_t>(d));
        std::int64_t sup = 0;
        for (auto& v : base) {
            v = rng.uniform(-9, 9);
            sup = std::max(sup, v < 0 ? -v : v);
        }
        if (sup == 0) continue;
        N_out = static_cast<int>(rng.uniform(2, 4));
        int count = static_cast<int>(rng.uniform(4, 16));
        int k = static_cast<int>(rng.uniform(2, 4));
        std::vector<LatticePoint> pts;
        for (int i = 0; i < count; ++i) {
            std::int64_t t = (ipow3(k) + sup - 1) / sup;
            std::vector<std::int64_t> c(base);
            for (auto& v : c) v *= t;
            pts.emplace_back(c);
            k += static_cast<int>(rng.uniform(1, 2));
        }
        return pts;
    }
}

double observed_of(const CertificationReport& r, const std::string& name) {
    for (const auto& [k, v] : r.observed)
        if (k == name) return v;
    return std::numeric_limits<double>::quiet_NaN();
}

std::string verdict_of(const SharpnessReport& rep, double q) {
    for (const auto& [qq, v] : rep.verdicts)
        if (qq == q) return v;
    return "<missing>";
}

}  // namespace

int main() {
    std::cout << "acceptance gate: 11 criteria\n";

    criterion(1, "exact ring bounds and populations, d <= 3, rings 0..4", 10.0,
              [](std::string& why) {
                  for (int d = 1; d <= 3; ++d)
                      if (!walk_rings(d, why)) return false;
                  return true;
              });

    criterion(2, "kernel ring coefficients stay above (2/3)^d by exact enumeration", 30.0,
              [](std::string& why) {
                  const std::pair<int, int> cases[] = {{1, 0}, {1, 1}, {1, 2}, {2, 0},
                                                       {2, 1}, {2, 2}, {2, 3}};
                  for (auto [d, k] : cases) {
                      CertificationReport r = fejer_ring_lower_bound(d, k);
                      if (!r.pass) {
                          why = "failed at d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                ": " + r.note;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "kernel Sobolev norm within 1 + d*3^(k+2), d <= 2, k <= 2", 0.0,
              [](std::string& why) {
                  for (int d = 1; d <= 2; ++d)
                      for (int k = 0; k <= 2; ++k) {
                          CertificationReport r = fejer_sobolev_certify(d, k, 8.0);
                          if (!r.pass) {
                              why = "failed at d=" + std::to_string(d) +
                                    " k=" + std::to_string(k) + ": " + r.note;
                              return false;
                          }
                      }
                  return true;
              });

    criterion(4, "product kernel identities: grid agreement, unit mass, exact split, N <= 6", 0.0,
              [](std::string& why) {
                  for (int N = 1; N <= 6; ++N) {
                      std::vector<LatticePoint> freqs;
                      std::int64_t g = 2;
                      for (int l = 1; l <= N; ++l) {
                          g *= 4;
                          freqs.push_back(LatticePoint{g, 1});
                      }
                      RieszProductSpec spec(freqs);
                      CertificationReport agree = riesz_agreement_check(spec, 32);
                      if (!agree.pass || observed_of(agree, "max_err") > 1e-10) {
                          why = "agreement failed at N=" + std::to_string(N);
                          return false;
                      }
                      CertificationReport l1 = riesz_l1_certify(spec, 4.0);
                      double mass = observed_of(l1, "l1_quadrature");
                      if (!l1.pass || std::abs(mass - 1.0) > 1e-6) {
                          why = "unit mass failed at N=" + std::to_string(N) + ": " + l1.note;
                          return false;
                      }
                      CertificationReport dec = riesz_decomposition_check(spec);
                      if (!dec.pass) {
                          why = "decomposition failed at N=" + std::to_string(N);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "transfer coefficient bound finite and stable across N in {2,3,4}", 0.0,
              [](std::string& why) {
                  double lo = 0.0, hi = 0.0;
                  for (int N = 2; N <= 4; ++N) {
                      double worst = 0.0;
                      for (const TestPhiSpec& spec : sparse_spec_corpus(2, N, 20, 7)) {
                          for (int l = 1; l <= spec.N(); ++l)
                              for (int j = 0; j < spec.dim(); ++j) {
                                  if (j == spec.j0()) continue;
                                  worst = std::max(worst, hl_bound_exact(spec, l, j).scaled);
                              }
                      }
                      if (!(worst > 0.0) || !std::isfinite(worst)) {
                          why = "degenerate bound at N=" + std::to_string(N);
                          return false;
                      }
                      lo = (N == 2) ? worst : std::min(lo, worst);
                      hi = (N == 2) ? worst : std::max(hi, worst);
                  }
                  if (hi >= 4.0 * lo) {
                      why = "variation factor " + std::to_string(hi / lo);
                      return false;
                  }
                  return true;
              });

    criterion(6, "gradient norms stable across N; dominant-axis norm <= 2 + tol", 0.0,
              [](std::string& why) {
                  double slo = 0.0, shi = 0.0, olo = 0.0, ohi = 0.0;
                  for (int N = 2; N <= 4; ++N) {
                      double smax = 0.0, omax = 0.0;
                      for (const TestPhiSpec& spec : sparse_spec_corpus(2, N, 20, 7)) {
                          GradientReport gr = gradient_report(spec, 4.0);
                          if (!gr.cert.pass) {
                              why = "dominant-axis bound failed at N=" + std::to_string(N) + ": " +
                                    gr.cert.note;
                              return false;
                          }
                          smax = std::max(smax, gr.sobolev_11);
                          omax = std::max(omax, gr.off_axis_max);
                      }
                      slo = (N == 2) ? smax : std::min(slo, smax);
                      shi = (N == 2) ? smax : std::max(shi, smax);
                      olo = (N == 2) ? omax : std::min(olo, omax);
                      ohi = (N == 2) ? omax : std::max(ohi, omax);
                  }
                  if (!(slo > 0.0) || shi >= 4.0 * slo) {
                      why = "Sobolev variation factor " + std::to_string(shi / slo);
                      return false;
                  }
                  if (!(olo > 0.0) || ohi >= 4.0 * olo) {
                      why = "off-axis variation factor " + std::to_string(ohi / olo);
                      return false;
                  }
                  return true;
              });

    criterion(7, "coefficient l_q vs norm inequality on 200 seeded polynomials", 0.0,
              [](std::string& why) {
                  Rng rng(2026);
                  const double ps[] = {1.25, 1.5, 2.0};
                  for (int i = 0; i < 200; ++i) {
                      int d = 1 + (i % 2);
                      TrigPoly f = random_poly(rng, d, 10, 12);
                      double p = ps[i % 3];
                      CertificationReport r = hausdorff_young_check(f, p, GridSpec{128});
                      if (!r.pass) {
                          why = "violated at draw " + std::to_string(i) + ", p=" +
                                std::to_string(p);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "counting bound for the flat symbol and sparse splitting postconditions", 0.0,
              [](std::string& why) {
                  DiagnosticsConfig dc(2, 2.0, 0.1, 7, 2);
                  Krok2Report rep = krok2_counting_certify(MultiplierSymbol::one(2), dc);
                  if (!rep.cert.pass) {
                      why = "counting bound failed: " + rep.cert.note;
                      return false;
                  }
                  Rng rng(99);
                  for (int trial = 0; trial < 50; ++trial) {
                      int N = 2;
                      std::vector<LatticePoint> pts = sector_batch(rng, 2, N);
                      auto seqs = split_into_sparse(pts, N);
                      std::size_t budget =
                          pts.size() / static_cast<std::size_t>(N) +
                          2 * static_cast<std::size_t>(N) + 1;
                      if (seqs.size() > budget) {
                          why = "sequence count over budget in trial " + std::to_string(trial);
                          return false;
                      }
                      std::vector<LatticePoint> got;
                      for (const auto& s : seqs) {
                          if (!is_sparse(s.points(), N)) {
                              why = "non-sparse output in trial " + std::to_string(trial);
                              return false;
                          }
                          got.insert(got.end(), s.points().begin(), s.points().end());
                      }
                      std::vector<LatticePoint> want = pts;
                      std::sort(got.begin(), got.end(), lex_less);
                      std::sort(want.begin(), want.end(), lex_less);
                      if (!(got == want)) {
                          why = "output is not a partition in trial " + std::to_string(trial);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "exponent bookkeeping is exact; factorization witnesses hold", 0.0,
              [](std::string& why) {
                  for (int d = 1; d <= 4; ++d) {
                      DiagnosticsConfig dc(d, 2.0, 0.1, 2, 2);
                      if (dc.q_main != 2.0 * d + 4.0 + 0.1) {
                          why = "exponent mismatch at d=" + std::to_string(d);
                          return false;
                      }
                  }
                  for (const FactorizationWitness& w : factorization_catalog(2)) {
                      CertificationReport r = compose_factorization(w, 2.0, 4);
                      if (!r.pass) {
                          why = "witness '" + w.name + "' failed: " + r.note;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "singular values of a 50-point diagonal truncation match an external SVD", 0.0,
              [](std::string& why) {
                  MultiplierSymbol sym = MultiplierSymbol::norm_weight(2);
                  std::vector<double> lam;
                  for (const LatticePoint& n : ring_points(0, 2)) lam.push_back(std::abs(sym.eval(n)));
                  for (const LatticePoint& n : ring_points(1, 2)) {
                      if (lam.size() == 50) break;
                      lam.push_back(std::abs(sym.eval(n)));
                  }
                  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(50, 50);
                  for (int i = 0; i < 50; ++i) A(i, i) = lam[static_cast<std::size_t>(i)];
                  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
                  Eigen::VectorXd sv = svd.singularValues();
                  std::vector<double> mine = lam;
                  std::sort(mine.begin(), mine.end(), std::greater<double>());
                  for (int i = 0; i < 50; ++i)
                      if (std::abs(sv(i) - mine[static_cast<std::size_t>(i)]) > 1e-10) {
                          why = "singular value " + std::to_string(i) + " disagrees";
                          return false;
                      }
                  for (double p : {1.5, 2.0}) {
                      double a = 0.0, b = 0.0;
                      for (int i = 0; i < 50; ++i) {
                          a += std::pow(sv(i), p);
                          b += std::pow(mine[static_cast<std::size_t>(i)], p);
                      }
                      if (std::abs(std::pow(a, 1.0 / p) - std::pow(b, 1.0 / p)) > 1e-10) {
                          why = "partial sums disagree at p=" + std::to_string(p);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(11, "negative controls fail as designed; default suite all expected", 300.0,
              [](std::string& why) {
                  CertificationReport k1 =
                      krok1_flatness_certify(MultiplierSymbol::norm_weight(2), 2.0, 0, 5, true);
                  if (k1.pass) {
                      why = "growth symbol passed the flatness check";
                      return false;
                  }
                  Lema2Report l2 = lema2_decay_report(MultiplierSymbol::norm_weight(2), 5, true);
                  if (l2.cert.pass) {
                      why = "growth symbol passed the decay check";
                      return false;
                  }
                  const double grid[] = {1.9, 2.1, 8.1};
                  SharpnessReport sh = sharpness_explore(MultiplierSymbol::one(2), grid, 8);
                  if (verdict_of(sh, 1.9) != "divergent" || verdict_of(sh, 2.1) != "convergent" ||
                      verdict_of(sh, 8.1) != "convergent") {
                      why = "sharpness verdicts: " + verdict_of(sh, 1.9) + "/" +
                            verdict_of(sh, 2.1) + "/" + verdict_of(sh, 8.1);
                      return false;
                  }
                  SuiteConfig cfg;
                  std::vector<CertificationReport> reports = run_suite(cfg, {});
                  SuiteArtifacts art = assemble_suite(cfg, reports);
                  if (!art.all_expected) {
                      why = "default suite has unexpected outcomes";
                      return false;
                  }
                  int controls_failing = 0;
                  for (const auto& r : reports)
                      if (r.negative_control && !r.skipped && !r.pass) ++controls_failing;
                  if (controls_failing < 2) {
                      why = "too few failing negative controls";
                      return false;
                  }
                  return true;
              });

    std::cout << (failures == 0 ? "acceptance: all 11 criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
