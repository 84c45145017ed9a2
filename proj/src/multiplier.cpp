#include "tml/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "tml/errors.hpp"
#include "tml/kernels.hpp"
#include "tml/quadrature.hpp"

namespace tml {

namespace {

void check_dim(int d) {
    if (d < 1 || d > kMaxDim)
        throw DomainError("multiplier symbol: dimension must lie in [1, " +
                          std::to_string(kMaxDim) + "]");
}

// |lambda|^e with a fast path for the ubiquitous e == 2.
inline double ipow(double x, double e) {
    if (e == 2.0) return x * x;
    if (e == 1.0) return x;
    return std::pow(x, e);
}

double parse_power_exponent(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double s = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(s))
        throw DomainError("multiplier symbol: malformed power exponent '" + text + "'");
    return s;
}

std::map<LatticePoint, std::complex<double>> parse_table_csv(int d, std::istream& in,
                                                             const std::string& origin) {
    std::map<LatticePoint, std::complex<double>> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = sv.find(',', start);
            fields.emplace_back(sv.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (static_cast<int>(fields.size()) != d + 2)
            throw DomainError(origin + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(d + 2) + " fields, got " +
                              std::to_string(fields.size()));

        auto parse_ll = [&](const std::string& f) {
            const char* b = f.c_str();
            char* e = nullptr;
            long long v = std::strtoll(b, &e, 10);
            while (e && (*e == ' ' || *e == '\t')) ++e;
            if (e == b || *e != '\0')
                throw DomainError(origin + ":" + std::to_string(lineno) +
                                  ": malformed integer '" + f + "'");
            return static_cast<std::int64_t>(v);
        };
        auto parse_d = [&](const std::string& f) {
            const char* b = f.c_str();
            char* e = nullptr;
            double v = std::strtod(b, &e);
            while (e && (*e == ' ' || *e == '\t')) ++e;
            if (e == b || *e != '\0' || !std::isfinite(v))
                throw DomainError(origin + ":" + std::to_string(lineno) +
                                  ": malformed number '" + f + "'");
            return v;
        };

        std::array<std::int64_t, kMaxDim> c{};
        for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = parse_ll(fields[static_cast<std::size_t>(j)]);
        LatticePoint n(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d)));
        if (n.is_zero())
            throw DomainError(origin + ":" + std::to_string(lineno) +
                              ": the zero frequency cannot carry a symbol value");
        double re = parse_d(fields[static_cast<std::size_t>(d)]);
        double im = parse_d(fields[static_cast<std::size_t>(d + 1)]);
        if (!table.emplace(n, std::complex<double>(re, im)).second)
            throw DomainError(origin + ":" + std::to_string(lineno) +
                              ": duplicate frequency row");
    }
    return table;
}

}  // namespace

MultiplierSymbol MultiplierSymbol::one(int d) {
    check_dim(d);
    MultiplierSymbol s;
    s.kind_ = Kind::one;
    s.d_ = d;
    s.name_ = "one";
    s.bounded_ = Boundedness::yes;
    s.bounded_note_ = "identity multiplier; bounded by the classical Sobolev embedding of W^{1,1}";
    return s;
}

MultiplierSymbol MultiplierSymbol::power(int d, double exp) {
    check_dim(d);
    if (!std::isfinite(exp)) throw DomainError("multiplier symbol: power exponent must be finite");
    MultiplierSymbol s;
    s.kind_ = Kind::power;
    s.d_ = d;
    s.s_ = exp;
    {
        std::ostringstream os;
        os << "power:" << exp;
        s.name_ = os.str();
    }
    if (exp >= 0.0) {
        s.bounded_ = Boundedness::yes;
        s.bounded_note_ = "dominated pointwise by the identity multiplier";
    } else {
        s.bounded_ = Boundedness::no;
        s.bounded_note_ = "grows along rings; no bounded extension is asserted";
    }
    return s;
}

MultiplierSymbol MultiplierSymbol::norm_weight(int d) {
    check_dim(d);
    MultiplierSymbol s;
    s.kind_ = Kind::norm;
    s.d_ = d;
    s.name_ = "norm";
    s.bounded_ = Boundedness::no;
    s.bounded_note_ = "lambda_n = |n|_2 grows without bound; stock negative control";
    return s;
}

MultiplierSymbol MultiplierSymbol::table(int d, const std::string& path) {
    check_dim(d);
    std::ifstream in(path);
    if (!in) throw DomainError("multiplier table: cannot open '" + path + "'");
    MultiplierSymbol s;
    s.kind_ = Kind::table;
    s.d_ = d;
    s.name_ = "table:" + path;
    s.bounded_ = Boundedness::unknown;
    s.bounded_note_ = "finite table; boundedness of an extension is not asserted";
    s.table_ = std::make_shared<const std::map<LatticePoint, std::complex<double>>>(
        parse_table_csv(d, in, path));
    return s;
}

MultiplierSymbol MultiplierSymbol::table_from_string(int d, const std::string& csv,
                                                     std::string name) {
    check_dim(d);
    std::istringstream in(csv);
    MultiplierSymbol s;
    s.kind_ = Kind::table;
    s.d_ = d;
    s.name_ = std::move(name);
    s.bounded_ = Boundedness::unknown;
    s.bounded_note_ = "finite table; boundedness of an extension is not asserted";
    s.table_ = std::make_shared<const std::map<LatticePoint, std::complex<double>>>(
        parse_table_csv(d, in, s.name_));
    return s;
}

MultiplierSymbol MultiplierSymbol::parse(const std::string& text, int d) {
    if (text == "one") return one(d);
    if (text == "norm") return norm_weight(d);
    if (text.rfind("power:", 0) == 0) return power(d, parse_power_exponent(text.substr(6)));
    if (text.rfind("table:", 0) == 0) return table(d, text.substr(6));
    throw DomainError("unknown multiplier symbol '" + text +
                      "'; expected one | power:<s> | norm | table:<file>");
}

std::complex<double> MultiplierSymbol::eval(const LatticePoint& n) const {
    if (n.dim() != d_) throw DomainError("multiplier symbol: dimension mismatch");
    if (n.is_zero()) throw DomainError("multiplier symbol: evaluated at the zero frequency");
    switch (kind_) {
        case Kind::one:
            return {1.0, 0.0};
        case Kind::power:
            return {std::pow(static_cast<double>(n.norm_sq()), -0.5 * s_), 0.0};
        case Kind::norm:
            return {n.norm(), 0.0};
        case Kind::table: {
            auto it = table_->find(n);
            return it == table_->end() ? std::complex<double>(0.0, 0.0) : it->second;
        }
    }
    return {0.0, 0.0};
}

double MultiplierSymbol::abs_eval(const LatticePoint& n) const {
    if (kind_ == Kind::table) return std::abs(eval(n));
    return eval(n).real();
}

TrigPoly apply(const MultiplierSymbol& sym, const TrigPoly& f) {
    if (sym.dim() != f.dim()) throw DomainError("apply: symbol and polynomial dimensions differ");
    if (sym.name() == "one") return f;  // keep coefficients exact
    TrigPoly out(f.dim());
    for (const auto& [n, c] : f.terms()) {
        if (n.is_zero()) {
            out.set_coeff(n, c);
            continue;
        }
        std::complex<double> z = c.to_complex() * sym.eval(n);
        if (z != std::complex<double>(0.0, 0.0)) out.set_coeff(n, Coeff::approx(z));
    }
    return out;
}

// ---- ring sweeps ---------------------------------------------------------------

int max_enumerable_ring(int d, std::int64_t budget) {
    check_dim(d);
    if (budget < 1) return -1;
    int best = -1;
    for (int k = 0; k < 64; ++k) {
        if (ring_cardinality(k, d) > Integer(static_cast<long>(budget))) break;
        best = k;
    }
    return best;
}

namespace {

void check_ring_budget(int k, int d, std::int64_t budget, const char* who) {
    Integer card = ring_cardinality(k, d);
    if (card > Integer(static_cast<long>(budget)))
        throw ResourceError(std::string(who) + ": ring " + std::to_string(k) + " in dimension " +
                                std::to_string(d) + " is too large to enumerate",
                            card.get_str() + " points > budget " + std::to_string(budget));
}

double conjugate_exponent(double p) {
    if (!(p > 1.0) || p > 2.0) throw DomainError("ring diagnostics: p must lie in (1, 2]");
    return p / (p - 1.0);
}

}  // namespace

RingStats ring_stats(const MultiplierSymbol& sym, int k, double p) {
    if (k < 0) throw DomainError("ring_stats: negative ring index");
    double pp = conjugate_exponent(p);
    check_ring_budget(k, sym.dim(), kMaxRingSweepPoints, "ring_stats");

    RingStats st;
    st.k = k;
    RingEnumerator en(k, sym.dim());
    LatticePoint n;
    double best = -1.0;
    while (en.next(n)) {
        double ratio = sym.abs_eval(n) / n.norm();
        st.ring_sum += ipow(ratio, pp);
        if (ratio >= best) {
            best = ratio;
            st.argmax = n;
        }
        ++st.points;
    }
    st.mu = best < 0.0 ? 0.0 : best;
    return st;
}

std::vector<RingStats> ring_stats_range(const MultiplierSymbol& sym, int k_lo, int k_hi,
                                        double p) {
    if (k_lo < 0 || k_hi < k_lo) throw DomainError("ring_stats_range: bad ring range");
    std::vector<RingStats> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) out.push_back(ring_stats(sym, k, p));
    return out;
}

double schatten_partial(const MultiplierSymbol& sym, double p, int K) {
    if (!(p > 0.0)) throw DomainError("schatten_partial: p must be positive");
    double total = 0.0;
    for (int k = 0; k <= K; ++k) {
        check_ring_budget(k, sym.dim(), kMaxRingSweepPoints, "schatten_partial");
        RingEnumerator en(k, sym.dim());
        LatticePoint n;
        while (en.next(n)) total += ipow(sym.abs_eval(n), p);
    }
    return std::pow(total, 1.0 / p);
}

// ---- krok1 flatness ---------------------------------------------------------------

namespace {

CertificationReport krok1_base(const MultiplierSymbol& sym, double p) {
    CertificationReport r;
    r.claim_id = "krok1";
    r.title = "ring sums of (|lambda_n|/|n|_2)^{p'} admit a k-independent bound";
    r.param("symbol", sym.name());
    r.param("d", static_cast<long long>(sym.dim()));
    {
        std::ostringstream os;
        os << p;
        r.param("p", os.str());
    }
    return r;
}

}  // namespace

CertificationReport krok1_flatness_from_stats(const MultiplierSymbol& sym, double p,
                                              std::span<const RingStats> stats,
                                              bool run_unbounded) {
    CertificationReport r = krok1_base(sym, p);
    if (stats.empty()) throw DomainError("krok1: empty ring range");
    r.param("k_lo", static_cast<long long>(stats.front().k));
    r.param("k_hi", static_cast<long long>(stats.back().k));
    if (sym.bounded() == Boundedness::no && !run_unbounded) {
        r.pass = false;
        r.note = "refused: symbol is cataloged unbounded (" + sym.bounded_note() +
                 "); rerun as a negative control to sweep anyway";
        return r;
    }

    std::vector<double> sums;
    sums.reserve(stats.size());
    for (const auto& st : stats) sums.push_back(st.ring_sum);
    for (std::size_t i = 0; i < sums.size(); ++i)
        r.observe("ring_sum_" + std::to_string(stats[i].k), sums[i]);

    std::vector<double> sorted = sums;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted.size() % 2 == 1
                        ? sorted[sorted.size() / 2]
                        : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    double maxv = sorted.back();
    bool flat = maxv <= 4.0 * median + 1e-300;
    bool nonincreasing = true;
    for (std::size_t i = 0; i + 1 < sums.size(); ++i)
        if (sums[i + 1] > sums[i] * 1.05 + 1e-300) nonincreasing = false;

    r.observe("max_ring_sum", maxv);
    r.observe("median_ring_sum", median);
    r.pass = flat || nonincreasing;
    r.note = flat ? "max <= 4 x median across the swept rings (empirical flatness heuristic)"
                  : (nonincreasing
                         ? "ring sums are non-increasing (within 5% slack): bounded by the first"
                         : "ring sums grow across k: no k-independent bound is visible");
    if (sym.bounded() == Boundedness::unknown)
        r.note += "; boundedness of the symbol is not asserted by the catalog";
    return r;
}

CertificationReport krok1_flatness_certify(const MultiplierSymbol& sym, double p, int k_lo,
                                           int k_hi, bool run_unbounded) {
    if (sym.bounded() == Boundedness::no && !run_unbounded) {
        // Refusal path: produce the failed report without sweeping.
        CertificationReport r = krok1_base(sym, p);
        r.param("k_lo", static_cast<long long>(k_lo));
        r.param("k_hi", static_cast<long long>(k_hi));
        r.pass = false;
        r.note = "refused: symbol is cataloged unbounded (" + sym.bounded_note() +
                 "); rerun as a negative control to sweep anyway";
        return r;
    }
    std::vector<RingStats> stats = ring_stats_range(sym, k_lo, k_hi, p);
    return krok1_flatness_from_stats(sym, p, stats, run_unbounded);
}

// ---- exponent bookkeeping -----------------------------------------------------------

DiagnosticsConfig::DiagnosticsConfig(int d_in, double p_in, double eps_in, int K_in, int N_in)
    : d(d_in), p(p_in), epsilon(eps_in), K_max(K_in), N(N_in) {
    check_dim(d);
    if (!(p > 1.0) || p > 2.0) throw DomainError("diagnostics: p must lie in (1, 2]");
    if (!(epsilon > 0.0)) throw DomainError("diagnostics: epsilon must be positive");
    if (K_max < 0) throw DomainError("diagnostics: K_max must be nonnegative");
    if (N < 1) throw DomainError("diagnostics: sector granularity N must be positive");
    p_conj = p / (p - 1.0);
    q_main = p_conj + p_conj * static_cast<double>(d + 1) + epsilon;
    double folded = p_conj * static_cast<double>(d + 2) + epsilon;
    if (std::abs(q_main - folded) > 1e-9 * std::max(1.0, std::abs(q_main)))
        throw ConstructionError("diagnostics: expanded and folded exponent forms disagree");
}

// ---- main summability chain ----------------------------------------------------------

MainSumReport main_sum_partial(const MultiplierSymbol& sym, const DiagnosticsConfig& cfg) {
    if (sym.dim() != cfg.d) throw DomainError("main_sum_partial: dimension mismatch");
    MainSumReport rep;
    rep.cert.claim_id = "main_sum";
    rep.cert.title = "ring-split partial sums of (|lambda_n|/|n|_2)^{q_main}";
    rep.cert.param("symbol", sym.name());
    rep.cert.param("d", static_cast<long long>(cfg.d));
    {
        std::ostringstream os;
        os << cfg.p << "," << cfg.epsilon << "," << cfg.q_main;
        rep.cert.param("p,eps,q_main", os.str());
    }
    rep.cert.param("K_max", static_cast<long long>(cfg.K_max));

    double tail_exp = cfg.p_conj * static_cast<double>(cfg.d + 1) + cfg.epsilon;
    double cum = 0.0;
    double rhs_total = 0.0;
    double worst_ring_sum = 0.0;
    double mu_tail_sum = 0.0;
    bool split_ok = true;
    for (int k = 0; k <= cfg.K_max; ++k) {
        check_ring_budget(k, cfg.d, kMaxTermwiseRingPoints, "main_sum_partial");
        RingStats st = ring_stats(sym, k, cfg.p);
        double mu_tail = ipow(st.mu, tail_exp);

        RingEnumerator en(k, cfg.d);
        LatticePoint n;
        double inc = 0.0;
        while (en.next(n)) {
            double ratio = sym.abs_eval(n) / n.norm();
            double v = ipow(ratio, cfg.q_main);
            inc += v;
            if (v > ipow(ratio, cfg.p_conj) * mu_tail * (1.0 + 1e-12) + 1e-300) split_ok = false;
        }
        cum += inc;
        rhs_total += st.ring_sum * mu_tail;
        worst_ring_sum = std::max(worst_ring_sum, st.ring_sum);
        mu_tail_sum += mu_tail;
        rep.ring_increments.push_back(inc);
        rep.partial.push_back(cum);
        rep.mu.push_back(st.mu);
    }
    rep.split_ok = split_ok;
    rep.split_rhs = rhs_total;

    double total = rep.partial.empty() ? 0.0 : rep.partial.back();
    bool summed_ok = total <= rhs_total * (1.0 + 1e-12) + 1e-300;
    bool const_ok = total <= worst_ring_sum * mu_tail_sum * (1.0 + 1e-12) + 1e-300;
    rep.cert.pass = split_ok && summed_ok && const_ok;
    rep.cert.observe("S_K", total);
    rep.cert.observe("split_rhs", rhs_total);
    rep.cert.observe("C_emp_ring_sum", worst_ring_sum);
    rep.cert.observe("mu_tail_sum", mu_tail_sum);
    if (!rep.mu.empty()) rep.cert.observe("mu_last", rep.mu.back());
    rep.cert.note = rep.cert.pass
                        ? "termwise split bound and both summed forms hold on every enumerated point"
                        : "split inequality violated: floating enumeration disagrees with the ring maxima";
    return rep;
}

// ---- factorization --------------------------------------------------------------------

std::vector<FactorizationWitness> factorization_catalog(int d) {
    check_dim(d);
    std::vector<FactorizationWitness> out;
    out.push_back({MultiplierSymbol::norm_weight(d), MultiplierSymbol::power(d, 1.0), 1.0,
                   "identity = norm * power:1"});
    out.push_back({MultiplierSymbol::power(d, 1.0), MultiplierSymbol::power(d, 1.0), 1.0,
                   "power:2 = power:1 * power:1"});
    out.push_back({MultiplierSymbol::one(d), MultiplierSymbol::power(d, 1.0), 1.0,
                   "power:1 = one * power:1"});
    return out;
}

CertificationReport compose_factorization(const FactorizationWitness& w, double p, int K_max) {
    if (w.alpha.dim() != w.beta.dim())
        throw DomainError("compose_factorization: witness dimensions differ");
    if (!(p > 0.0)) throw DomainError("compose_factorization: p must be positive");
    if (K_max < 0) throw DomainError("compose_factorization: K_max must be nonnegative");
    if (!(w.normB_bound >= 0.0))
        throw DomainError("compose_factorization: normB_bound must be nonnegative");

    CertificationReport r;
    r.claim_id = "factorization";
    r.title = "termwise composition bound sum |alpha_n beta_n|^p <= normB^p sum (|alpha_n|/|n|_2)^p";
    r.param("witness", w.name);
    r.param("alpha", w.alpha.name());
    r.param("beta", w.beta.name());
    r.param("d", static_cast<long long>(w.alpha.dim()));
    {
        std::ostringstream os;
        os << p << "," << w.normB_bound;
        r.param("p,normB", os.str());
    }
    r.param("K_max", static_cast<long long>(K_max));

    int d = w.alpha.dim();
    double lhs = 0.0;
    double ratio_sum = 0.0;
    double beta_sup = 0.0;
    bool termwise_ok = true;
    LatticePoint witness_point;
    for (int k = 0; k <= K_max; ++k) {
        check_ring_budget(k, d, kMaxRingSweepPoints, "compose_factorization");
        RingEnumerator en(k, d);
        LatticePoint n;
        while (en.next(n)) {
            double a = w.alpha.abs_eval(n);
            double b = w.beta.abs_eval(n);
            double nn = n.norm();
            lhs += ipow(a * b, p);
            ratio_sum += ipow(a / nn, p);
            double control = b * nn;
            beta_sup = std::max(beta_sup, control);
            if (control > w.normB_bound * (1.0 + 1e-12) + 1e-300 && termwise_ok) {
                termwise_ok = false;
                witness_point = n;
            }
        }
    }
    double rhs = ipow(w.normB_bound, p) * ratio_sum;
    bool summed_ok = lhs <= rhs * (1.0 + 1e-12) + 1e-300;
    r.pass = termwise_ok && summed_ok;
    r.observe("lhs_sum", lhs);
    r.observe("rhs_sum", rhs);
    r.observe("beta_control_sup", beta_sup);
    r.tolerance = 1e-12;
    if (!termwise_ok) {
        std::ostringstream os;
        os << "control |beta_n||n|_2 <= normB violated at n = (";
        for (int j = 0; j < d; ++j) os << (j ? "," : "") << witness_point[j];
        os << ")";
        r.note = os.str();
    } else {
        r.note = summed_ok ? "chain holds on every enumerated ring point"
                           : "summed chain violated despite termwise control";
    }
    return r;
}

// ---- sparse-sequence lower bound ---------------------------------------------------------

PreKrok2Report pre_krok2_certify(const MultiplierSymbol& sym, const SparseSequence& seq,
                                 int N_sector, double p, double oversampling) {
    if (seq.size() == 0) throw DomainError("pre_krok2: empty sequence");
    if (N_sector < 1) throw DomainError("pre_krok2: sector granularity must be positive");
    if (!(p > 1.0) || p > 2.0) throw DomainError("pre_krok2: p must lie in (1, 2]");
    int d = seq[0].dim();
    if (sym.dim() != d) throw DomainError("pre_krok2: symbol dimension mismatch");

    SectorPartition part(d, N_sector);
    SectorId sector = part.sector_of(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(part.sector_of(seq[i]) == sector))
            throw PreconditionError("pre_krok2: sequence straddles several sectors");
    if (!is_sparse(seq.points(), static_cast<double>(N_sector)))
        throw PreconditionError("pre_krok2: sequence is not N-sparse at the sector granularity");

    double pp = conjugate_exponent(p);
    RieszProductSpec rspec(seq.points());
    TestPhiSpec tspec(std::move(rspec), sector.axis);
    TrigPoly phi = test_phi(tspec);
    TrigPoly tphi = apply(sym, phi);

    PreKrok2Report rep;
    rep.c_desk = std::pow(4.0 * std::numbers::pi, pp);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const LatticePoint& n = seq[i];
        rep.lhs += ipow(sym.abs_eval(n) / n.norm(), pp);
        rep.restricted_sum += ipow(tphi.coeff(n).abs(), pp);
        rep.restricted_sum += ipow(tphi.coeff(n.negated()).abs(), pp);
    }
    rep.coeff_lq = fourier_coeff_lq(tphi, pp);
    NormReport tphi_norm = quad::reduced_lp_norm(tphi, p, oversampling);
    rep.tphi_norm = tphi_norm.value;
    GradientReport grad = gradient_report(tspec, oversampling);
    rep.phi_sobolev = grad.sobolev_11;
    double denom = std::pow(rep.tphi_norm, pp);
    rep.ratio = denom > 0.0 ? rep.lhs / denom : 0.0;

    bool algebra_ok = rep.lhs <= rep.c_desk * rep.restricted_sum * (1.0 + 1e-12) + 1e-300;
    bool subset_ok =
        rep.restricted_sum <= std::pow(rep.coeff_lq, pp) * (1.0 + 1e-12) + 1e-300;
    double tol = 2.0 * tphi_norm.error_hint + 1e-9;
    bool hy_ok = rep.coeff_lq <= rep.tphi_norm + tol;

    CertificationReport& r = rep.cert;
    r.claim_id = "pre_krok2";
    r.title = "sparse-sequence ratio sum controlled by the test-function image norm";
    r.param("symbol", sym.name());
    r.param("d", static_cast<long long>(d));
    r.param("N", static_cast<long long>(N_sector));
    r.param("len", static_cast<long long>(seq.size()));
    r.param("j0", static_cast<long long>(sector.axis + 1));
    {
        std::ostringstream os;
        os << p << "," << oversampling;
        r.param("p,oversampling", os.str());
    }
    r.pass = algebra_ok && subset_ok && hy_ok;
    r.tolerance = tol;
    r.observe("lhs", rep.lhs);
    r.observe("restricted_sum", rep.restricted_sum);
    r.observe("coeff_lq", rep.coeff_lq);
    r.observe("tphi_norm", rep.tphi_norm);
    r.observe("phi_sobolev_11", rep.phi_sobolev);
    r.observe("c_desk", rep.c_desk);
    r.observe("ratio", rep.ratio);
    r.note = r.pass ? "dominant-axis comparison, weight-1 restriction and coefficient-norm "
                      "comparison all hold"
                    : (!algebra_ok ? "dominant-axis comparison failed"
                                   : (!subset_ok ? "weight-1 restriction exceeds the full "
                                                   "coefficient sum"
                                                 : "coefficient l_q exceeds the quadrature norm "
                                                   "beyond tolerance"));
    return rep;
}

// ---- rearrangement and counting ------------------------------------------------------------

std::vector<std::size_t> rearrange_nonincreasing(std::span<const double> values) {
    std::vector<std::size_t> idx(values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return idx;
}

Krok2Report krok2_counting_certify(const MultiplierSymbol& sym, const DiagnosticsConfig& cfg) {
    if (sym.dim() != cfg.d) throw DomainError("krok2: dimension mismatch");
    std::int64_t rings_needed = 1;
    for (int i = 0; i < cfg.d + 1; ++i) {
        rings_needed *= cfg.N;
        if (rings_needed > 4096) throw ResourceError("krok2: N^{d+1} ring count is unmanageable",
                                                     "N^{d+1} > 4096 rings");
    }
    if (cfg.K_max + 1 < rings_needed)
        throw PreconditionError("krok2: K_max must cover N^{d+1} rings (need " +
                                std::to_string(rings_needed) + ")");

    Krok2Report rep;
    CertificationReport& r = rep.cert;
    r.claim_id = "r1";
    r.title = "rearranged ring maxima obey the sector-counting bound";
    r.param("symbol", sym.name());
    r.param("d", static_cast<long long>(cfg.d));
    r.param("N", static_cast<long long>(cfg.N));
    {
        std::ostringstream os;
        os << cfg.p;
        r.param("p", os.str());
    }
    r.param("rings", static_cast<long long>(rings_needed));

    std::vector<double> mu;
    std::vector<LatticePoint> points;
    for (int k = 0; k < static_cast<int>(rings_needed); ++k) {
        rep.rings.push_back(ring_stats(sym, k, cfg.p));
        mu.push_back(rep.rings.back().mu);
        points.push_back(rep.rings.back().argmax);
        rep.total += ipow(rep.rings.back().mu, cfg.p_conj);
    }
    rep.sigma = rearrange_nonincreasing(mu);

    SectorPartition part(cfg.d, cfg.N);
    std::map<SectorId, std::vector<LatticePoint>> buckets;
    for (const auto& n : points) buckets[part.sector_of(n)].push_back(n);
    rep.sectors_realized = static_cast<std::int64_t>(buckets.size());

    std::int64_t bucket_total = 0;
    bool per_sector_ok = true;
    bool split_ok = true;
    std::string split_note;
    for (const auto& [id, pts] : buckets) {
        bucket_total += static_cast<std::int64_t>(pts.size());
        std::vector<SparseSequence> seqs;
        try {
            seqs = split_into_sparse(pts, cfg.N);
        } catch (const Error& e) {
            split_ok = false;
            split_note = e.what();
            continue;
        }
        double sector_budget =
            static_cast<double>(pts.size()) / cfg.N + 2.0 * cfg.N + 1.0;
        if (static_cast<double>(seqs.size()) > sector_budget) per_sector_ok = false;
        for (const auto& s : seqs) {
            double lhs = 0.0;
            for (const auto& n : s.points()) lhs += ipow(sym.abs_eval(n) / n.norm(), cfg.p_conj);
            rep.k_emp = std::max(rep.k_emp, lhs);
            ++rep.seq_count;
        }
    }

    double nd = std::pow(static_cast<double>(cfg.N), cfg.d);
    rep.seq_budget = nd + cfg.d * std::pow(static_cast<double>(cfg.N), cfg.d - 1) *
                              (2.0 * cfg.N + 1.0);
    Integer sector_cap(static_cast<long>(cfg.d));
    for (int i = 0; i < cfg.d - 1; ++i) sector_cap *= cfg.N;

    bool partition_ok = bucket_total == rings_needed;
    bool sectors_ok = Integer(static_cast<long>(rep.sectors_realized)) <= sector_cap;
    bool count_ok = static_cast<double>(rep.seq_count) <= rep.seq_budget + 1e-300;
    bool assembled_ok = rep.total <= rep.k_emp * nd * (1.0 + 1e-12) + 1e-300;

    r.pass = split_ok && partition_ok && sectors_ok && per_sector_ok && count_ok && assembled_ok;
    r.observe("total_mu_pp", rep.total);
    r.observe("k_emp", rep.k_emp);
    r.observe("seq_count", static_cast<double>(rep.seq_count));
    r.observe("seq_budget", rep.seq_budget);
    r.observe("sectors_realized", static_cast<double>(rep.sectors_realized));
    r.observe("assembled_rhs", rep.k_emp * nd);
    r.tolerance = 1e-12;
    if (!split_ok)
        r.note = "sparse splitting failed: " + split_note;
    else if (!partition_ok)
        r.note = "sector buckets do not partition the argmax points";
    else if (!sectors_ok)
        r.note = "realized sector count exceeds d*N^{d-1}";
    else if (!per_sector_ok || !count_ok)
        r.note = "sequence count exceeds the per-sector decimation budget";
    else if (!assembled_ok)
        r.note = "assembled bound total <= k_emp * N^d fails";
    else
        r.note = "partition, sector, sequence-count and assembled bounds all hold";
    return rep;
}

// ---- summability lemmas -----------------------------------------------------------------------

CertificationReport lema1_check(std::span<const double> b, double alpha, double q) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("lema1: alpha must lie in (0,1)");
    if (!(q > 0.0)) throw DomainError("lema1: q must be positive");
    if (b.empty()) throw DomainError("lema1: empty sequence");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!(b[i] >= 0.0)) throw PreconditionError("lema1: sequence must be nonnegative");
        if (i > 0 && b[i] > b[i - 1] * (1.0 + 1e-12) + 1e-300)
            throw PreconditionError("lema1: sequence must be non-increasing");
    }

    CertificationReport r;
    r.claim_id = "lema1";
    r.title = "prefix growth O(N^alpha) forces b_N <= C N^{alpha-1} and an l_q tail";
    {
        std::ostringstream os;
        os << alpha << "," << q;
        r.param("alpha,q", os.str());
    }
    r.param("len", static_cast<long long>(b.size()));

    std::size_t L = b.size();
    double C = 0.0;
    double prefix = 0.0;
    std::vector<double> f(L);
    for (std::size_t n = 1; n <= L; ++n) {
        prefix += b[n - 1];
        f[n - 1] = prefix / std::pow(static_cast<double>(n), alpha);
        C = std::max(C, f[n - 1]);
    }

    bool step_ok = true;
    for (std::size_t n = 1; n <= L; ++n) {
        double bound = C * std::pow(static_cast<double>(n), alpha - 1.0);
        if (b[n - 1] > bound * (1.0 + 1e-12) + 1e-300) step_ok = false;
    }

    bool premise_ok = true;
    double premise_ratio = 1.0;
    if (L >= 4) {
        double half = f[L / 2 - 1];
        double full = f[L - 1];
        premise_ratio = half > 0.0 ? full / half : (full > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
        premise_ok = premise_ratio <= 1.02;
    }

    double tail_q = 0.0, full_q = 0.0;
    for (std::size_t n = 1; n <= L; ++n) {
        double v = std::pow(b[n - 1], q);
        full_q += v;
        if (n > L / 2) tail_q += v;
    }
    double tail_fraction = full_q > 0.0 ? tail_q / full_q : 0.0;
    bool cauchy = tail_fraction < 0.1;
    bool q_strong = q > 1.0 / (1.0 - alpha) * (1.0 - 1e-12);

    r.pass = step_ok && (!premise_ok || !q_strong || cauchy);
    r.observe("C_fit", C);
    r.observe("premise_ratio", premise_ratio);
    r.observe("tail_fraction", tail_fraction);
    r.tolerance = 1e-12;
    r.param("premise_ok", premise_ok ? "true" : "false");
    r.param("tail_cauchy", cauchy ? "true" : "false");
    if (!step_ok)
        r.note = "derived step b_N <= C N^{alpha-1} violated";
    else if (!premise_ok)
        r.note = "prefix-growth premise violated (normalized prefix still rising); no tail "
                 "conclusion is claimed";
    else if (!q_strong)
        r.note = "q does not exceed 1/(1-alpha); the tail conclusion is not asserted";
    else
        r.note = cauchy ? "step bound holds and the q-power tail is Cauchy"
                        : "step bound holds but the q-power tail is not yet Cauchy";
    return r;
}

Lema2Report lema2_from_stats(const MultiplierSymbol& sym, std::span<const RingStats> stats,
                             bool run_unbounded) {
    Lema2Report rep;
    CertificationReport& r = rep.cert;
    r.claim_id = "lema2";
    r.title = "ring maxima mu_k of a bounded symbol decay";
    r.param("symbol", sym.name());
    r.param("d", static_cast<long long>(sym.dim()));
    if (!stats.empty()) {
        r.param("k_lo", static_cast<long long>(stats.front().k));
        r.param("k_hi", static_cast<long long>(stats.back().k));
    }
    if (sym.bounded() == Boundedness::no && !run_unbounded) {
        r.pass = false;
        r.note = "refused: symbol is cataloged unbounded (" + sym.bounded_note() +
                 "); rerun as a negative control to sweep anyway";
        return rep;
    }
    if (stats.empty()) throw DomainError("lema2: empty ring range");

    double maxv = 0.0;
    for (const auto& st : stats) {
        rep.mu.push_back(st.mu);
        maxv = std::max(maxv, st.mu);
    }
    rep.trend = maxv > 0.0 ? rep.mu.back() / maxv : 0.0;
    r.pass = rep.trend <= 0.5;
    for (std::size_t i = 0; i < rep.mu.size(); ++i)
        r.observe("mu_" + std::to_string(stats[i].k), rep.mu[i]);
    r.observe("trend_last_over_max", rep.trend);
    r.note = r.pass ? "mu_k tail decayed to at most half its peak over the swept range"
                    : "mu_k does not decay over the swept range: evidence against a bounded "
                      "extension, not a proof";
    if (sym.bounded() == Boundedness::unknown)
        r.note += "; boundedness of the symbol is not asserted by the catalog";
    return rep;
}

Lema2Report lema2_decay_report(const MultiplierSymbol& sym, int K_max, bool run_unbounded) {
    if (sym.bounded() == Boundedness::no && !run_unbounded) {
        std::vector<RingStats> none;
        return lema2_from_stats(sym, none, run_unbounded);
    }
    std::vector<RingStats> stats = ring_stats_range(sym, 0, K_max, 2.0);
    return lema2_from_stats(sym, stats, run_unbounded);
}

}  // namespace tml
