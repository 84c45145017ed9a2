#include "tml/certify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tml/coeff.hpp"
#include "tml/errors.hpp"
#include "tml/quadrature.hpp"
#include "tml/rng.hpp"

namespace tml {

namespace {

using nlohmann::ordered_json;

std::string itos(std::int64_t v) { return std::to_string(v); }

const std::string& claim_title(const std::string& id) {
    for (const auto& [cid, title] : claim_registry())
        if (cid == id) return title;
    throw DomainError("unregistered claim id: " + id);
}

CertificationReport skipped_case(const std::string& claim, const std::string& title,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 const std::string& note) {
    CertificationReport r;
    r.claim_id = claim;
    r.title = title;
    r.params = std::move(params);
    r.pass = false;
    r.skipped = true;
    r.note = note;
    return r;
}

// Runs one case body; module budget violations become skipped cases, other
// library errors become failed cases.  The suite itself never aborts on a
// per-case problem.
template <typename Body>
void run_case(std::vector<CertificationReport>& out, const std::string& claim,
              const std::string& title,
              const std::vector<std::pair<std::string, std::string>>& params, Body&& body) {
    try {
        out.push_back(body());
    } catch (const ResourceError& e) {
        out.push_back(skipped_case(claim, title, params, std::string("budget: ") + e.what()));
    } catch (const Error& e) {
        CertificationReport r;
        r.claim_id = claim;
        r.title = title;
        r.params = params;
        r.pass = false;
        r.note = std::string("error: ") + e.what();
        out.push_back(std::move(r));
    }
}

void validate_config(const SuiteConfig& cfg) {
    if (cfg.dims.empty()) throw DomainError("config: dims must be nonempty");
    for (int d : cfg.dims)
        if (d < 1 || d > kMaxDim)
            throw DomainError("config: dimension must lie in 1.." + itos(kMaxDim));
    if (cfg.p_values.empty()) throw DomainError("config: p grid must be nonempty");
    for (double p : cfg.p_values)
        if (!(p > 1.0) || p > 2.0) throw DomainError("config: p must lie in (1, 2]");
    if (!(cfg.eps > 0.0)) throw DomainError("config: eps must be positive");
    for (int N : cfg.N_values)
        if (N < 1 || N > 12) throw DomainError("config: sector order must lie in 1..12");
    if (cfg.k_lo < 0) throw DomainError("config: k_lo must be nonnegative");
    if (cfg.k_hi < cfg.k_lo) throw DomainError("config: ring range is empty (k_hi < k_lo)");
    if (cfg.k_hi > kMaxPow3 - 2)
        throw DomainError("config: k_hi exceeds the exact power budget " + itos(kMaxPow3 - 2));
    if (!(cfg.oversampling >= 1.0)) throw DomainError("config: oversampling must be >= 1");
    if (cfg.symbol.empty()) throw DomainError("config: symbol must be nonempty");
}

// Shared per-run state: parsed symbols and the expensive sweeps that several
// claim families consume.
struct SuiteState {
    const SuiteConfig& cfg;
    std::map<int, MultiplierSymbol> symbols;
    std::map<std::string, std::vector<RingStats>> stats_cache;
    std::map<std::string, Krok2Report> krok2_cache;

    explicit SuiteState(const SuiteConfig& c) : cfg(c) {}

    const MultiplierSymbol& symbol(int d) {
        auto it = symbols.find(d);
        if (it == symbols.end())
            it = symbols.emplace(d, MultiplierSymbol::parse(cfg.symbol, d)).first;
        return it->second;
    }

    std::span<const RingStats> get_stats(const MultiplierSymbol& sym, int d, double p) {
        std::string key = sym.name() + "|" + itos(d) + "|" + format_double(p);
        auto it = stats_cache.find(key);
        if (it == stats_cache.end()) {
            int cap = max_enumerable_ring(d, kMaxRingSweepPoints);
            int hi = std::min(cfg.k_hi, cap);
            if (hi < cfg.k_lo)
                throw ResourceError("ring sweep range is empty in dimension " + itos(d),
                                    "k_lo <= " + itos(cap));
            it = stats_cache.emplace(key, ring_stats_range(sym, cfg.k_lo, hi, p)).first;
        }
        return it->second;
    }

    // Negative controls pin their own ring span instead of inheriting the
    // configured sweep: a two- or three-ring sweep can look flat by accident
    // in low dimension, and a control that stops failing under a shallow
    // config would defeat its purpose.  Rings 0..min(4, cap) discriminate
    // the growing control symbol in every supported dimension; anything
    // shallower is surfaced as a skip rather than run non-discriminating.
    std::span<const RingStats> get_control_stats(const MultiplierSymbol& sym, int d, double p) {
        std::string key = "control|" + sym.name() + "|" + itos(d) + "|" + format_double(p);
        auto it = stats_cache.find(key);
        if (it == stats_cache.end()) {
            int hi = std::min(4, max_enumerable_ring(d, kMaxRingSweepPoints));
            if (hi < (d == 1 ? 3 : 2))
                throw ResourceError("control ring span too shallow to discriminate in dimension " +
                                        itos(d),
                                    "larger enumeration budget");
            it = stats_cache.emplace(key, ring_stats_range(sym, 0, hi, p)).first;
        }
        return it->second;
    }

    // Counting pipeline result for (d, N, p), computed once.  Throws
    // ResourceError when the required ring range is not enumerable.
    const Krok2Report& get_krok2(int d, int N, double p) {
        std::string key = itos(d) + "|" + itos(N) + "|" + format_double(p);
        auto it = krok2_cache.find(key);
        if (it != krok2_cache.end()) return it->second;
        std::int64_t rings_needed = 1;
        bool overflow = false;
        for (int i = 0; i <= d; ++i) {
            rings_needed *= N;
            if (rings_needed > (std::int64_t(1) << 20)) {
                overflow = true;
                break;
            }
        }
        int cap = max_enumerable_ring(d, kMaxRingSweepPoints);
        if (overflow || rings_needed - 1 > cap)
            throw ResourceError("counting pipeline needs rings 0.." +
                                    (overflow ? std::string("(overflow)") : itos(rings_needed - 1)) +
                                    " in dimension " + itos(d),
                                "ring index <= " + itos(cap));
        DiagnosticsConfig dc(d, p, cfg.eps, static_cast<int>(rings_needed) - 1, N);
        it = krok2_cache.emplace(key, krok2_counting_certify(symbol(d), dc)).first;
        return it->second;
    }
};

std::string corpus_tag(int d, int N) { return "corpus/" + itos(d) + "/" + itos(N); }

bool corpus_supported(int N) { return N >= 2 && N <= 4; }

std::vector<TestPhiSpec> corpus(const SuiteConfig& cfg, int d, int N, int count) {
    return sparse_spec_corpus(d, N, count, Rng::derive(cfg.seed, corpus_tag(d, N)));
}

std::vector<std::pair<std::string, std::string>> dk_params(int d, int k) {
    return {{"d", itos(d)}, {"k", itos(k)}};
}

// ---- claim families -----------------------------------------------------------

void family_euck(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "euck";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    for (int d : cfg.dims) {
        int cap = max_enumerable_ring(d, kMaxRingSweepPoints);
        for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
            auto params = dk_params(d, k);
            if (k > cap) {
                out.push_back(skipped_case(id, title, params,
                                           "budget: ring cardinality exceeds the enumeration cap "
                                           "(largest enumerable ring index: " +
                                               itos(cap) + ")"));
                continue;
            }
            run_case(out, id, title, params, [&, d, k, params] {
                CertificationReport r;
                r.claim_id = id;
                r.title = title;
                r.params = params;
                RingEnumerator en(k, d);
                LatticePoint n;
                std::int64_t count = 0, bad_bounds = 0, bad_index = 0;
                while (en.next(n)) {
                    ++count;
                    if (!euclid_bounds_check(n)) ++bad_bounds;
                    if (ring_index(n) != k) ++bad_index;
                }
                Integer card = ring_cardinality(k, d);
                bool card_ok = card == Integer(static_cast<long>(count));
                r.observe("points", static_cast<double>(count));
                r.observe("bound_violations", static_cast<double>(bad_bounds));
                r.observe("index_mismatches", static_cast<double>(bad_index));
                r.pass = bad_bounds == 0 && bad_index == 0 && card_ok;
                if (!card_ok)
                    r.note = "cardinality formula gives " + card.get_str() + ", enumeration gives " +
                             itos(count);
                return r;
            });
        }
    }
}

void family_fejer_ring(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "fejer_ring";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    for (int d : cfg.dims) {
        for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
            auto params = dk_params(d, k);
            params.emplace_back("kind", "ring_min");
            run_case(out, id, title, params, [&, d, k] {
                CertificationReport r = fejer_ring_lower_bound(d, k);
                r.param("kind", "ring_min");
                return r;
            });
        }
        double os = std::max(8.0, cfg.oversampling);
        for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
            auto params = dk_params(d, k);
            params.emplace_back("kind", "sobolev_11");
            run_case(out, id, title, params,
                     [&, d, k, os] { return fejer_sobolev_certify(d, k, os); });
        }
    }
}

void family_bernstein(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "bernstein";
    const std::string& title = claim_title(id);
    Rng rng(Rng::derive(st.cfg.seed, "bernstein"));
    GridSpec grid{512};
    for (int i = 0; i < 5; ++i) {
        int deg = static_cast<int>(rng.uniform(4, 12));
        TrigPoly f(1);
        int terms = static_cast<int>(rng.uniform(2, 6));
        for (int t = 0; t < terms; ++t) {
            std::int64_t freq = rng.uniform(-deg, deg);
            double re = 2.0 * rng.uniform_real() - 1.0;
            double im = 2.0 * rng.uniform_real() - 1.0;
            f.add_coeff(LatticePoint{freq}, Coeff::approx({re, im}));
        }
        // Pin the extreme frequency so the drawn degree is attained.
        f.set_coeff(LatticePoint{static_cast<std::int64_t>(deg)}, Coeff::approx({1.0, 0.5}));
        std::vector<std::pair<std::string, std::string>> params = {{"case", itos(i)},
                                                                   {"degree", itos(deg)}};
        run_case(out, id, title, params, [&, f, params] {
            CertificationReport r = bernstein_check(f, grid);
            r.params.insert(r.params.begin(), params.begin(), params.end());
            return r;
        });
    }
}

void family_hausdorff_young(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "hausdorff_young";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    GridSpec grid{256};
    for (int d : cfg.dims) {
        if (d > 2) continue;  // quadrature kept desk-sized; higher d covered elsewhere
        for (double p : cfg.p_values) {
            Rng rng(Rng::derive(cfg.seed, "hausdorff_young/" + itos(d) + "/" + format_double(p)));
            for (int i = 0; i < 10; ++i) {
                TrigPoly f(d);
                int terms = static_cast<int>(rng.uniform(2, 8));
                for (int t = 0; t < terms; ++t) {
                    LatticePoint n;
                    std::array<std::int64_t, kMaxDim> c{};
                    for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = rng.uniform(-10, 10);
                    n = LatticePoint(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d)));
                    double re = 2.0 * rng.uniform_real() - 1.0;
                    double im = 2.0 * rng.uniform_real() - 1.0;
                    f.add_coeff(n, Coeff::approx({re, im}));
                }
                if (f.term_count() == 0) f.set_coeff(LatticePoint(), Coeff::approx({1.0, 0.0}));
                std::vector<std::pair<std::string, std::string>> params = {
                    {"d", itos(d)}, {"p", format_double(p)}, {"case", itos(i)}};
                run_case(out, id, title, params, [&, f, p, params] {
                    CertificationReport r = hausdorff_young_check(f, p, grid);
                    r.params.insert(r.params.begin(), params.begin(), params.end());
                    return r;
                });
            }
        }
    }
}

void family_riesz_l1(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "riesz_l1";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    if (cfg.N_values.empty()) {
        out.push_back(skipped_case(id, title, {}, "no sparsity orders configured"));
        return;
    }
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            auto base = [&](const char* kind) {
                std::vector<std::pair<std::string, std::string>> p = {
                    {"d", itos(d)}, {"N", itos(N)}, {"kind", kind}};
                return p;
            };
            if (!corpus_supported(N)) {
                out.push_back(skipped_case(id, title, base("all"),
                                           "corpus covers sparsity orders 2..4"));
                continue;
            }
            run_case(out, id, title, base("l1"), [&, d, N] {
                auto spec = corpus(cfg, d, N, 1).at(0);
                CertificationReport r = riesz_l1_certify(spec.riesz(), cfg.oversampling);
                r.param("kind", "l1");
                return r;
            });
            run_case(out, id, title, base("decomposition"), [&, d, N] {
                auto spec = corpus(cfg, d, N, 1).at(0);
                CertificationReport r = riesz_decomposition_check(spec.riesz());
                r.param("kind", "decomposition");
                return r;
            });
            run_case(out, id, title, base("agreement"), [&, d, N] {
                auto spec = corpus(cfg, d, N, 1).at(0);
                CertificationReport r = riesz_agreement_check(spec.riesz(), 32);
                r.param("kind", "agreement");
                return r;
            });
        }
    }
}

void family_wspol(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "wspol";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    if (cfg.N_values.empty()) {
        out.push_back(skipped_case(id, title, {}, "no sparsity orders configured"));
        return;
    }
    constexpr int kSpecs = 20;
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            std::vector<std::pair<std::string, std::string>> params = {
                {"d", itos(d)}, {"N", itos(N)}, {"specs", itos(kSpecs)}};
            if (d == 1) {
                CertificationReport r;
                r.claim_id = id;
                r.title = title;
                r.params = params;
                r.pass = true;
                r.observe("c_prime", 0.0);
                r.note = "no off-axis directions in dimension 1";
                out.push_back(std::move(r));
                continue;
            }
            if (!corpus_supported(N)) {
                out.push_back(
                    skipped_case(id, title, params, "corpus covers sparsity orders 2..4"));
                continue;
            }
            run_case(out, id, title, params, [&, d, N, params] {
                auto specs = corpus(cfg, d, N, kSpecs);
                bool denominators_ok = true;
                double c_prime = 0.0;
                std::int64_t pairs = 0;
                for (const auto& spec : specs) {
                    for (int l = 1; l <= N; ++l) {
                        for (int j = 0; j < d; ++j) {
                            if (j == spec.j0()) continue;
                            HlBound hb = hl_bound_exact(spec, l, j);
                            denominators_ok = denominators_ok && hb.denominators_ok;
                            c_prime = std::max(c_prime, hb.scaled);
                            ++pairs;
                        }
                    }
                }
                CertificationReport r;
                r.claim_id = id;
                r.title = title;
                r.params = params;
                r.observe("c_prime", c_prime);
                r.observe("pairs", static_cast<double>(pairs));
                r.pass = denominators_ok;
                if (!denominators_ok) r.note = "a transfer denominator vanished on the corpus";
                return r;
            });
        }
    }
}

void family_lemgl(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "lemgl";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    if (cfg.N_values.empty()) {
        out.push_back(skipped_case(id, title, {}, "no sparsity orders configured"));
        return;
    }
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            int scount = N >= 4 ? 2 : 3;  // quadrature cost grows with the pattern count
            std::vector<std::pair<std::string, std::string>> params = {
                {"d", itos(d)}, {"N", itos(N)}, {"specs", itos(scount)}};
            if (!corpus_supported(N)) {
                out.push_back(
                    skipped_case(id, title, params, "corpus covers sparsity orders 2..4"));
                continue;
            }
            run_case(out, id, title, params, [&, d, N, scount, params] {
                auto specs = corpus(cfg, d, N, scount);
                bool all_pass = true;
                double axis_max = 0.0, off_axis = 0.0, sobolev = 0.0, hint = 0.0;
                for (const auto& spec : specs) {
                    GradientReport gr = gradient_report(spec, cfg.oversampling);
                    all_pass = all_pass && gr.cert.pass;
                    axis_max = std::max(
                        axis_max, gr.per_axis[static_cast<std::size_t>(spec.j0())].value);
                    off_axis = std::max(off_axis, gr.off_axis_max);
                    sobolev = std::max(sobolev, gr.sobolev_11);
                    hint = std::max(hint, gr.phi_l1.error_hint);
                    for (const auto& nr : gr.per_axis) hint = std::max(hint, nr.error_hint);
                }
                CertificationReport r;
                r.claim_id = id;
                r.title = title;
                r.params = params;
                r.observe("axis_norm_max", axis_max);
                r.observe("off_axis_max", off_axis);
                r.observe("sobolev_11_max", sobolev);
                r.observe("error_hint_max", hint);
                r.pass = all_pass;
                return r;
            });
        }
    }
}

void family_pre_krok2(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "pre_krok2";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    if (cfg.N_values.empty()) {
        out.push_back(skipped_case(id, title, {}, "no sparsity orders configured"));
        return;
    }
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            for (double p : cfg.p_values) {
                std::vector<std::pair<std::string, std::string>> params = {
                    {"d", itos(d)}, {"N", itos(N)}, {"p", format_double(p)}};
                if (!corpus_supported(N)) {
                    out.push_back(
                        skipped_case(id, title, params, "corpus covers sparsity orders 2..4"));
                    continue;
                }
                run_case(out, id, title, params, [&, d, N, p] {
                    auto spec = corpus(cfg, d, N, 1).at(0);
                    SparseSequence seq(spec.riesz().freqs(), N);
                    PreKrok2Report rep =
                        pre_krok2_certify(st.symbol(d), seq, N, p, cfg.oversampling);
                    return rep.cert;
                });
            }
        }
    }
}

void family_r1(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "r1";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    if (cfg.N_values.empty()) {
        out.push_back(skipped_case(id, title, {}, "no sparsity orders configured"));
        return;
    }
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            for (double p : cfg.p_values) {
                std::vector<std::pair<std::string, std::string>> params = {
                    {"d", itos(d)}, {"N", itos(N)}, {"p", format_double(p)}};
                run_case(out, id, title, params,
                         [&, d, N, p] { return st.get_krok2(d, N, p).cert; });
            }
        }
    }
}

void family_krok1(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "krok1";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    for (int d : cfg.dims) {
        for (double p : cfg.p_values) {
            std::vector<std::pair<std::string, std::string>> params = {
                {"d", itos(d)}, {"p", format_double(p)}, {"symbol", cfg.symbol}};
            run_case(out, id, title, params, [&, d, p] {
                const MultiplierSymbol& sym = st.symbol(d);
                if (sym.bounded() == Boundedness::no)
                    return krok1_flatness_certify(sym, p, cfg.k_lo, cfg.k_hi, false);
                return krok1_flatness_from_stats(sym, p, st.get_stats(sym, d, p), false);
            });
            std::vector<std::pair<std::string, std::string>> cparams = {
                {"d", itos(d)}, {"p", format_double(p)}, {"symbol", "norm"},
                {"control", "negative"}};
            run_case(out, id, title, cparams, [&, d, p] {
                MultiplierSymbol nsym = MultiplierSymbol::norm_weight(d);
                CertificationReport r =
                    krok1_flatness_from_stats(nsym, p, st.get_control_stats(nsym, d, p), true);
                r.negative_control = true;
                return r;
            });
        }
    }
}

void family_main_sum(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "main_sum";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    int N0 = cfg.N_values.empty() ? 2 : cfg.N_values.front();
    for (int d : cfg.dims) {
        for (double p : cfg.p_values) {
            int K = std::min(cfg.k_hi, max_enumerable_ring(d, kMaxTermwiseRingPoints));
            std::vector<std::pair<std::string, std::string>> params = {
                {"d", itos(d)}, {"p", format_double(p)}, {"K", itos(K)}};
            run_case(out, id, title, params, [&, d, p, K] {
                DiagnosticsConfig dc(d, p, cfg.eps, K, N0);
                MainSumReport rep = main_sum_partial(st.symbol(d), dc);
                return rep.cert;
            });
        }
    }
}

void family_lema1(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "lema1";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    // Rearranged ring maxima from the plain sweep, for every (d, p).
    for (int d : cfg.dims) {
        for (double p : cfg.p_values) {
            std::vector<std::pair<std::string, std::string>> params = {
                {"d", itos(d)}, {"p", format_double(p)}, {"source", "rings"}};
            run_case(out, id, title, params, [&, d, p, params] {
                auto stats = st.get_stats(st.symbol(d), d, p);
                double pp = p / (p - 1.0);
                std::vector<double> mu;
                mu.reserve(stats.size());
                for (const auto& s : stats) mu.push_back(s.mu);
                auto sigma = rearrange_nonincreasing(mu);
                std::vector<double> b;
                b.reserve(sigma.size());
                for (std::size_t idx : sigma) b.push_back(std::pow(mu[idx], pp));
                double alpha = static_cast<double>(d) / (d + 1);
                double q = (d + 1) * (1.0 + cfg.eps);
                CertificationReport r = lema1_check(b, alpha, q);
                r.params.insert(r.params.begin(), params.begin(), params.end());
                return r;
            });
        }
    }
    // Rearranged maxima produced by the counting pipeline, where feasible.
    for (int d : cfg.dims) {
        for (int N : cfg.N_values) {
            for (double p : cfg.p_values) {
                std::vector<std::pair<std::string, std::string>> params = {
                    {"d", itos(d)}, {"N", itos(N)}, {"p", format_double(p)}, {"source", "r1"}};
                run_case(out, id, title, params, [&, d, N, p, params] {
                    const Krok2Report& kr = st.get_krok2(d, N, p);
                    double pp = p / (p - 1.0);
                    std::vector<double> b;
                    b.reserve(kr.sigma.size());
                    for (std::size_t idx : kr.sigma)
                        b.push_back(std::pow(kr.rings[idx].mu, pp));
                    double alpha = static_cast<double>(d) / (d + 1);
                    double q = (d + 1) * (1.0 + cfg.eps);
                    CertificationReport r = lema1_check(b, alpha, q);
                    r.params.insert(r.params.begin(), params.begin(), params.end());
                    return r;
                });
            }
        }
    }
}

void family_lema2(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "lema2";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    double p0 = cfg.p_values.front();
    for (int d : cfg.dims) {
        std::vector<std::pair<std::string, std::string>> params = {{"d", itos(d)},
                                                                   {"symbol", cfg.symbol}};
        run_case(out, id, title, params, [&, d, p0] {
            const MultiplierSymbol& sym = st.symbol(d);
            if (sym.bounded() == Boundedness::no)
                return lema2_decay_report(sym, cfg.k_hi, false).cert;
            return lema2_from_stats(sym, st.get_stats(sym, d, p0), false).cert;
        });
        std::vector<std::pair<std::string, std::string>> cparams = {
            {"d", itos(d)}, {"symbol", "norm"}, {"control", "negative"}};
        run_case(out, id, title, cparams, [&, d, p0] {
            MultiplierSymbol nsym = MultiplierSymbol::norm_weight(d);
            Lema2Report rep = lema2_from_stats(nsym, st.get_control_stats(nsym, d, p0), true);
            CertificationReport r = rep.cert;
            r.negative_control = true;
            return r;
        });
    }
}

void family_factorization(SuiteState& st, std::vector<CertificationReport>& out) {
    const std::string id = "factorization";
    const std::string& title = claim_title(id);
    const auto& cfg = st.cfg;
    for (int d : cfg.dims) {
        int K = std::min(cfg.k_hi, max_enumerable_ring(d, std::int64_t(1) << 23));
        for (double p : cfg.p_values) {
            for (const auto& w : factorization_catalog(d)) {
                std::vector<std::pair<std::string, std::string>> params = {
                    {"d", itos(d)}, {"p", format_double(p)}, {"witness", w.name},
                    {"K", itos(K)}};
                run_case(out, id, title, params,
                         [&, p, K] { return compose_factorization(w, p, K); });
            }
        }
    }
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& claim_registry() {
    static const std::vector<std::pair<std::string, std::string>> reg = {
        {"euck", "triadic ring euclidean-norm bounds and cardinality identity"},
        {"fejer_ring", "product kernel coefficient floor and Sobolev budget"},
        {"bernstein", "derivative norm control for trigonometric polynomials"},
        {"hausdorff_young", "coefficient sequence norm versus integral norm"},
        {"riesz_l1", "nonnegative unit-mass product kernels and their expansion"},
        {"wspol", "transfer-coefficient half-sum bound with empirical constant"},
        {"lemgl", "gradient norms of the antiderivative test function"},
        {"pre_krok2", "sparse-sequence lower bound through the test function"},
        {"r1", "argmax rearrangement and sector counting pipeline"},
        {"krok1", "ring flatness of the multiplier profile"},
        {"main_sum", "ring-split summability of the diagnostic exponent"},
        {"lema1", "stepwise bound and tail criterion for rearranged maxima"},
        {"lema2", "ring maxima decay trend"},
        {"factorization", "two-factor composition with norm-side control"},
    };
    return reg;
}

bool is_registered_claim(const std::string& id) {
    for (const auto& [cid, title] : claim_registry())
        if (cid == id) return true;
    return false;
}

std::vector<CertificationReport> run_suite(const SuiteConfig& cfg,
                                           const std::vector<std::string>& only) {
    validate_config(cfg);
    for (const auto& c : only)
        if (!is_registered_claim(c)) throw DomainError("unknown claim id: " + c);
    SuiteState st(cfg);
    for (int d : cfg.dims) st.symbol(d);  // usage errors surface before any sweep
    auto want = [&](const char* id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    std::vector<CertificationReport> out;
    if (want("euck")) family_euck(st, out);
    if (want("fejer_ring")) family_fejer_ring(st, out);
    if (want("bernstein")) family_bernstein(st, out);
    if (want("hausdorff_young")) family_hausdorff_young(st, out);
    if (want("riesz_l1")) family_riesz_l1(st, out);
    if (want("wspol")) family_wspol(st, out);
    if (want("lemgl")) family_lemgl(st, out);
    if (want("pre_krok2")) family_pre_krok2(st, out);
    if (want("r1")) family_r1(st, out);
    if (want("krok1")) family_krok1(st, out);
    if (want("main_sum")) family_main_sum(st, out);
    if (want("lema1")) family_lema1(st, out);
    if (want("lema2")) family_lema2(st, out);
    if (want("factorization")) family_factorization(st, out);
    return out;
}

SuiteArtifacts assemble_suite(const SuiteConfig& cfg,
                              const std::vector<CertificationReport>& reports) {
    for (const auto& r : reports)
        if (!is_registered_claim(r.claim_id))
            throw DomainError("report carries an unregistered claim id: " + r.claim_id);
    SuiteArtifacts art;
    ordered_json suite;
    suite["schema"] = "tml/1";
    suite["kind"] = "suite";
    ordered_json jcfg;
    jcfg["dims"] = cfg.dims;
    {
        ordered_json arr = ordered_json::array();
        for (double p : cfg.p_values) arr.push_back(format_double(p));
        jcfg["p"] = arr;
    }
    jcfg["eps"] = format_double(cfg.eps);
    jcfg["N"] = cfg.N_values;
    jcfg["k_lo"] = cfg.k_lo;
    jcfg["k_hi"] = cfg.k_hi;
    jcfg["oversampling"] = format_double(cfg.oversampling);
    jcfg["seed"] = cfg.seed;
    jcfg["symbol"] = cfg.symbol;
    suite["config"] = jcfg;
    ordered_json claims = ordered_json::array();
    bool all = true;
    for (const auto& [id, title] : claim_registry()) {
        std::vector<const CertificationReport*> cases;
        for (const auto& r : reports)
            if (r.claim_id == id) cases.push_back(&r);
        if (cases.empty()) continue;
        int passed = 0, failed = 0, skipped = 0, controls = 0;
        bool expected = true;
        ordered_json carr = ordered_json::array();
        for (const CertificationReport* r : cases) {
            if (r->skipped)
                ++skipped;
            else if (r->pass)
                ++passed;
            else
                ++failed;
            if (r->negative_control) ++controls;
            expected = expected && r->expected();
            carr.push_back(ordered_json::parse(report_to_json(*r)));
        }
        all = all && expected;
        ordered_json cfile;
        cfile["schema"] = "tml/1";
        cfile["claim"] = id;
        cfile["title"] = title;
        cfile["cases"] = carr;
        art.claim_files.emplace_back(id, cfile.dump(2) + "\n");
        ordered_json row;
        row["claim"] = id;
        row["title"] = title;
        row["cases"] = cases.size();
        row["passed"] = passed;
        row["failed"] = failed;
        row["skipped"] = skipped;
        row["negative_controls"] = controls;
        row["expected"] = expected;
        claims.push_back(row);
    }
    suite["claims"] = claims;
    suite["all_expected"] = all;
    art.all_expected = all;
    art.suite_json = suite.dump(2) + "\n";
    return art;
}

// ---- config text ---------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

}  // namespace

SuiteConfig suite_config_from_text(const std::string& text, const std::string& origin) {
    SuiteConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        return DomainError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto to_int = [&](const std::string& tok) {
        char* end = nullptr;
        long long v = std::strtoll(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0') throw fail("expected an integer, got '" + tok + "'");
        return static_cast<int>(v);
    };
    auto to_num = [&](const std::string& tok) {
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0') throw fail("expected a number, got '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw fail("expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "dims") {
            cfg.dims.clear();
            for (const auto& tok : split_list(val)) cfg.dims.push_back(to_int(tok));
        } else if (key == "p") {
            cfg.p_values.clear();
            for (const auto& tok : split_list(val)) cfg.p_values.push_back(to_num(tok));
        } else if (key == "eps") {
            cfg.eps = to_num(val);
        } else if (key == "N") {
            cfg.N_values.clear();
            for (const auto& tok : split_list(val)) cfg.N_values.push_back(to_int(tok));
        } else if (key == "k_lo") {
            cfg.k_lo = to_int(val);
        } else if (key == "k_hi") {
            cfg.k_hi = to_int(val);
        } else if (key == "oversampling") {
            cfg.oversampling = to_num(val);
        } else if (key == "seed") {
            char* end = nullptr;
            unsigned long long v = std::strtoull(val.c_str(), &end, 10);
            if (end == val.c_str() || *end != '\0')
                throw fail("expected an unsigned integer, got '" + val + "'");
            cfg.seed = v;
        } else if (key == "symbol") {
            if (val.empty()) throw fail("symbol must be nonempty");
            cfg.symbol = val;
        } else {
            throw fail("unknown key '" + key + "'");
        }
    }
    try {
        validate_config(cfg);
    } catch (const DomainError& e) {
        throw DomainError(origin + ": " + e.what());
    }
    return cfg;
}

// ---- sharpness ------------------------------------------------------------------

namespace {

std::string classify_trend(const std::vector<double>& inc, int K) {
    if (K < 4) return "inconclusive";
    double avg = 0.0;
    for (int k = K - 3; k < K; ++k) {
        double prev = inc[static_cast<std::size_t>(k - 1)];
        double cur = inc[static_cast<std::size_t>(k)];
        double r;
        if (prev == 0.0)
            r = cur == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        else
            r = cur / prev;
        avg += r;
    }
    avg /= 3.0;
    if (avg < 0.9) return "convergent";
    if (avg > 1.02) return "divergent";
    return "inconclusive";
}

}  // namespace

SharpnessReport sharpness_explore(const MultiplierSymbol& sym, std::span<const double> q_grid,
                                  int K_max) {
    if (q_grid.empty()) throw DomainError("sharpness: the exponent grid is empty");
    for (double q : q_grid)
        if (!(q > 0.0)) throw DomainError("sharpness: exponents must be positive");
    if (K_max < 1) throw DomainError("sharpness: K must be >= 1");
    int cap = max_enumerable_ring(sym.dim(), kMaxRingSweepPoints);
    if (K_max - 1 > cap)
        throw ResourceError("sharpness sweep over rings 0.." + itos(K_max - 1) + " in dimension " +
                                itos(sym.dim()),
                            "ring index <= " + itos(cap));
    const std::size_t Q = q_grid.size();
    std::vector<std::vector<double>> inc(Q, std::vector<double>(static_cast<std::size_t>(K_max), 0.0));
    for (int k = 0; k < K_max; ++k) {
        RingEnumerator en(k, sym.dim());
        LatticePoint n;
        while (en.next(n)) {
            double ratio = sym.abs_eval(n) / n.norm();
            if (ratio == 0.0) continue;
            double lg = std::log(ratio);
            for (std::size_t qi = 0; qi < Q; ++qi)
                inc[qi][static_cast<std::size_t>(k)] += std::exp(q_grid[qi] * lg);
        }
    }
    SharpnessReport rep;
    for (std::size_t qi = 0; qi < Q; ++qi) {
        double running = 0.0;
        for (int K = 1; K <= K_max; ++K) {
            running += inc[qi][static_cast<std::size_t>(K - 1)];
            rep.rows.push_back({q_grid[qi], K, running, classify_trend(inc[qi], K)});
        }
        rep.verdicts.emplace_back(q_grid[qi], classify_trend(inc[qi], K_max));
    }
    return rep;
}

// ---- helpers shared with the acceptance harness ---------------------------------

CertificationReport riesz_agreement_check(const RieszProductSpec& spec, int M) {
    if (M < 2) throw DomainError("agreement grid needs M >= 2");
    const int d = spec.dim();
    std::int64_t total = 1;
    for (int j = 0; j < d; ++j) {
        total *= M;
        if (total > (std::int64_t(1) << 22))
            throw ResourceError("agreement grid M^d", "M^d <= 2^22");
    }
    CertificationReport r;
    r.claim_id = "riesz_l1";
    r.title = "expanded series matches the pointwise product on a uniform grid";
    r.param("d", static_cast<long long>(d));
    r.param("N", static_cast<long long>(spec.N()));
    r.param("M", static_cast<long long>(M));
    TrigPoly series = riesz_expand(spec);
    quad::AnisoGrid grid;
    grid.d = d;
    for (int j = 0; j < d; ++j) grid.M[static_cast<std::size_t>(j)] = M;
    auto samples = quad::materialize(series, grid, quad::Path::automatic);
    const int N = spec.N();
    std::vector<std::array<std::int64_t, kMaxDim>> reduced(static_cast<std::size_t>(N));
    for (int l = 0; l < N; ++l)
        for (int j = 0; j < d; ++j) {
            std::int64_t c = spec.freqs()[static_cast<std::size_t>(l)][j] % M;
            reduced[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = (c + M) % M;
        }
    std::array<std::int64_t, kMaxDim> m{};
    const double twopi = 2.0 * std::numbers::pi;
    double max_err = 0.0;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        double prod = 1.0;
        for (int l = 0; l < N; ++l) {
            std::int64_t s = 0;
            for (int j = 0; j < d; ++j)
                s += reduced[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
                     m[static_cast<std::size_t>(j)];
            s %= M;
            prod *= 1.0 + std::cos(twopi * (static_cast<double>(s) / M));
        }
        double err = std::abs(samples[static_cast<std::size_t>(idx)] -
                              std::complex<double>(prod, 0.0));
        max_err = std::max(max_err, err);
        for (int j = d - 1; j >= 0; --j) {  // row-major order: last axis fastest
            if (++m[static_cast<std::size_t>(j)] < M) break;
            m[static_cast<std::size_t>(j)] = 0;
        }
    }
    r.observe("max_err", max_err);
    r.tolerance = 1e-10;
    r.pass = max_err <= 1e-10;
    return r;
}

namespace {

std::int64_t smooth_ge(std::int64_t x) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t m : {std::int64_t(1), std::int64_t(3), std::int64_t(5)}) {
        std::int64_t v = m;
        while (v < x) {
            if (v > (std::int64_t(1) << 40)) break;
            v *= 2;
        }
        best = std::min(best, v);
    }
    return best;
}

}  // namespace

CertificationReport fejer_sobolev_certify(int d, int k, double oversampling) {
    if (d < 1 || d > kMaxDim) throw DomainError("dimension must lie in 1.." + itos(kMaxDim));
    if (k < 0 || k > kMaxPow3 - 2) throw DomainError("ring index out of the exact power budget");
    if (!(oversampling >= 1.0)) throw DomainError("oversampling must be >= 1");
    const std::int64_t F = pow3(k + 2);
    const std::int64_t D = F - 1;  // per-axis degree
    // Grid budgets first: both the base grid and its refinement must stay on
    // the materialized route, where dense cubes are cheap.
    std::int64_t need = static_cast<std::int64_t>(std::ceil(oversampling * (2 * D + 1)));
    std::int64_t M0 = smooth_ge(std::max<std::int64_t>(need, 2));
    std::int64_t M1 = smooth_ge(M0 + (M0 + 3) / 4);
    auto powd = [d](std::int64_t m) {
        std::int64_t t = 1;
        for (int j = 0; j < d; ++j) {
            if (t > quad::kMaxTotalFFT / m + 1) return std::numeric_limits<std::int64_t>::max();
            t *= m;
        }
        return t;
    };
    if (M0 > quad::kMaxAxisSamples || M1 > quad::kMaxAxisSamples ||
        powd(M0) > quad::kMaxTotalFFT || powd(M1) > quad::kMaxTotalFFT)
        throw ResourceError("Sobolev quadrature grid " + itos(M1) + "^" + itos(d),
                            "M^d <= " + itos(quad::kMaxTotalFFT));
    TrigPoly phi = fejer_product(d, k);
    const auto& terms = phi.terms();
    std::vector<LatticePoint> support;
    support.reserve(terms.size());
    std::vector<std::vector<std::complex<double>>> sets(static_cast<std::size_t>(1 + d));
    for (auto& s : sets) s.reserve(terms.size());
    const double twopi = 2.0 * std::numbers::pi;
    for (const auto& [n, c] : terms) {
        support.push_back(n);
        std::complex<double> z = c.to_complex();
        sets[0].push_back(z);
        for (int j = 0; j < d; ++j)
            sets[static_cast<std::size_t>(1 + j)].push_back(
                z * std::complex<double>(0.0, twopi * static_cast<double>(n[j])));
    }
    quad::ScanRequest req;
    req.p = 1.0;
    auto run = [&](std::int64_t M) {
        quad::AnisoGrid g;
        g.d = d;
        for (int j = 0; j < d; ++j) g.M[static_cast<std::size_t>(j)] = static_cast<int>(M);
        auto res = quad::family_scan(d, support, sets, g, req, quad::Path::fft);
        double total = static_cast<double>(g.total());
        double value = res[0].pow_sum / total;  // ||phi||_1
        for (int j = 0; j < d; ++j)
            value += res[static_cast<std::size_t>(1 + j)].pow_sum / total / twopi;
        return value;
    };
    double value = run(M0);
    double refined = run(M1);
    double hint = std::abs(value - refined);
    double bound = 1.0 + static_cast<double>(d) * static_cast<double>(F);
    CertificationReport r;
    r.claim_id = "fejer_ring";
    r.title = claim_title("fejer_ring");
    r.param("d", static_cast<long long>(d));
    r.param("k", static_cast<long long>(k));
    r.param("kind", "sobolev_11");
    r.param("oversampling", format_double(oversampling));
    r.param("M", itos(M0));
    r.param("M_refined", itos(M1));
    r.observe("sobolev_11", value);
    r.observe("refined", refined);
    r.observe("bound", bound);
    r.observe("error_hint", hint);
    r.tolerance = 2.0 * hint + 1e-9;
    r.pass = value <= bound + r.tolerance;
    return r;
}

}  // namespace tml
