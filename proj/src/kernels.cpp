#include "tml/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tml/errors.hpp"
#include "tml/quadrature.hpp"
#include "tml/rng.hpp"

namespace tml {

namespace {

LatticePoint zero_point(int d) {
    std::array<std::int64_t, kMaxDim> z{};
    return LatticePoint(std::span<const std::int64_t>(z.data(), static_cast<std::size_t>(d)));
}

LatticePoint add_points(const LatticePoint& a, const LatticePoint& b) {
    std::array<std::int64_t, kMaxDim> s{};
    for (int j = 0; j < a.dim(); ++j) {
        if (__builtin_add_overflow(a[j], b[j], &s[static_cast<std::size_t>(j)]))
            throw ResourceError("frequency sum overflows 64-bit range",
                                "coordinates within int64");
    }
    return LatticePoint(std::span<const std::int64_t>(s.data(), static_cast<std::size_t>(a.dim())));
}

// Expansion of prod (1 + cos(2 pi <n_l, t>)) over an arbitrary frequency
// list; coefficient 2^-L(xi) at M(xi).
TrigPoly expand_freqs(std::span<const LatticePoint> freqs, int d) {
    TrigPoly out(d);
    if (freqs.empty()) {
        out.set_coeff(zero_point(d), Coeff::exact(Rational(1)));
        return out;
    }
    SignPatternRange range(static_cast<int>(freqs.size()));
    SignPattern xi;
    while (range.next(xi)) {
        const int L = xi.weight();
        Coeff c = Coeff::exact(make_rational(1, std::int64_t(1) << L));
        out.add_coeff(xi.frequency(freqs), c);
    }
    return out;
}

}  // namespace

// ---- Fejér ------------------------------------------------------------------

TrigPoly fejer_kernel(int n) {
    if (n < 1) throw DomainError("fejer_kernel: order must be >= 1");
    TrigPoly out(1);
    for (std::int64_t k = -(n - 1); k <= n - 1; ++k)
        out.set_coeff(LatticePoint{k}, Coeff::exact(make_rational(n - std::llabs(k), n)));
    return out;
}

TrigPoly fejer_product(int d, int k) {
    if (d < 1 || d > kMaxDim) throw DomainError("fejer_product: dimension out of range");
    if (k < 0) throw DomainError("fejer_product: ring index must be >= 0");
    if (k + 2 > 37)
        throw ResourceError("fejer_product: order exceeds integer range", "3^(k+2) within int64");
    const std::int64_t F = pow3(k + 2);
    double terms_est = 1.0;
    for (int j = 0; j < d; ++j) terms_est *= static_cast<double>(2 * F - 1);
    if (terms_est > static_cast<double>(kMaxFejerTerms))
        throw ResourceError("fejer_product: coefficient count over budget",
                            "(2*3^(k+2)-1)^d <= " + std::to_string(kMaxFejerTerms) +
                                " coefficients, got about " + std::to_string(terms_est));

    TrigPoly out(d);
    std::array<std::int64_t, kMaxDim> m{};
    for (int j = 0; j < d; ++j) m[static_cast<std::size_t>(j)] = -(F - 1);
    std::int64_t Fd = 1;
    for (int j = 0; j < d; ++j) Fd *= F;
    while (true) {
        std::int64_t num = 1;
        for (int j = 0; j < d; ++j) num *= F - std::llabs(m[static_cast<std::size_t>(j)]);
        out.set_coeff(LatticePoint(std::span<const std::int64_t>(m.data(), static_cast<std::size_t>(d))),
                      Coeff::exact(make_rational(num, Fd)));
        int j = d - 1;
        while (j >= 0 && m[static_cast<std::size_t>(j)] == F - 1) {
            m[static_cast<std::size_t>(j)] = -(F - 1);
            --j;
        }
        if (j < 0) break;
        ++m[static_cast<std::size_t>(j)];
    }
    return out;
}

CertificationReport fejer_ring_lower_bound(int d, int k) {
    if (d < 1 || d > kMaxDim) throw DomainError("fejer_ring_lower_bound: dimension out of range");
    if (k < 0) throw DomainError("fejer_ring_lower_bound: ring index must be >= 0");
    if (k + 2 > 37)
        throw ResourceError("fejer_ring_lower_bound: order exceeds integer range",
                            "3^(k+2) within int64");
    Integer card = ring_cardinality(k, d);
    if (card > Integer(std::int64_t(1) << 24))
        throw ResourceError("fejer_ring_lower_bound: ring too large to enumerate",
                            "|R_k| <= 2^24 points, got " + card.get_str());

    const std::int64_t F = pow3(k + 2);
    RingEnumerator ring(k, d);
    LatticePoint n;
    std::int64_t min_num = -1;
    std::int64_t count = 0;
    while (ring.next(n)) {
        std::int64_t num = 1;
        for (int j = 0; j < d; ++j) num *= F - std::llabs(n[j]);
        if (min_num < 0 || num < min_num) min_num = num;
        ++count;
    }
    std::int64_t Fd = 1, p3 = 1, p2 = 1;
    for (int j = 0; j < d; ++j) {
        Fd *= F;
        p3 *= 3;
        p2 *= 2;
    }
    // min/F^d >= (2/3)^d  <=>  min * 3^d >= 2^d * F^d, exactly.
    const bool pass = count > 0 && Integer(min_num) * p3 >= Integer(p2) * Integer(Fd);

    CertificationReport r;
    r.claim_id = "fejer_ring";
    r.title = "ring coefficients of the product kernel stay above (2/3)^d";
    r.param("d", static_cast<long long>(d));
    r.param("k", static_cast<long long>(k));
    r.param("ring_size", static_cast<long long>(count));
    r.observe("min_coeff", static_cast<double>(min_num) / static_cast<double>(Fd));
    r.observe("threshold", std::pow(2.0 / 3.0, d));
    r.tolerance = 0.0;  // exact comparison
    r.note = "exact rational minimum over the full ring";
    r.pass = pass;
    return r;
}

// ---- sign patterns ------------------------------------------------------------

LatticePoint SignPattern::frequency(std::span<const LatticePoint> freqs) const {
    if (static_cast<int>(freqs.size()) != N)
        throw DomainError("sign pattern length does not match frequency list");
    const int d = freqs.empty() ? 1 : freqs[0].dim();
    std::array<std::int64_t, kMaxDim> acc{};
    for (int i = 0; i < N; ++i) {
        const int sign = xi[static_cast<std::size_t>(i)];
        if (sign == 0) continue;
        for (int j = 0; j < d; ++j) {
            __int128 v = static_cast<__int128>(acc[static_cast<std::size_t>(j)]) +
                         static_cast<__int128>(sign) * freqs[static_cast<std::size_t>(i)][j];
            if (v > INT64_MAX || v < INT64_MIN)
                throw ResourceError("pattern frequency overflows 64-bit range",
                                    "coordinates within int64");
            acc[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(v);
        }
    }
    return LatticePoint(std::span<const std::int64_t>(acc.data(), static_cast<std::size_t>(d)));
}

SignPatternRange::SignPatternRange(int N) : N_(N), done_(false), started_(false) {
    if (N < 0 || N > kMaxRieszFactors)
        throw DomainError("sign pattern length must be between 0 and " +
                          std::to_string(kMaxRieszFactors));
    cur_.fill(-1);
}

bool SignPatternRange::next(SignPattern& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
    } else {
        int i = 0;
        while (i < N_ && cur_[static_cast<std::size_t>(i)] == 1) {
            cur_[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == N_) {
            done_ = true;
            return false;
        }
        ++cur_[static_cast<std::size_t>(i)];
    }
    out.N = N_;
    out.xi = cur_;
    if (N_ == 0) done_ = true;  // single empty pattern
    return true;
}

// ---- Riesz spec ----------------------------------------------------------------

RieszProductSpec::RieszProductSpec(std::vector<LatticePoint> freqs) : freqs_(std::move(freqs)) {
    if (freqs_.empty()) throw ConstructionError("riesz spec: at least one frequency required");
    if (static_cast<int>(freqs_.size()) > kMaxRieszFactors)
        throw ResourceError("riesz spec: too many factors",
                            "N <= " + std::to_string(kMaxRieszFactors));
    d_ = freqs_[0].dim();
    for (const auto& n : freqs_) {
        if (n.dim() != d_) throw ConstructionError("riesz spec: mixed dimensions");
        if (n.is_zero()) throw ConstructionError("riesz spec: zero frequency");
    }
    for (std::size_t l = 0; l + 1 < freqs_.size(); ++l) {
        const unsigned __int128 a = static_cast<unsigned __int128>(freqs_[l].norm_sq());
        const unsigned __int128 b = static_cast<unsigned __int128>(freqs_[l + 1].norm_sq());
        if (!(b > 9 * a))
            throw ConstructionError(
                "riesz spec: consecutive norm ratio must exceed 3 (factors " +
                std::to_string(l + 1) + ", " + std::to_string(l + 2) + ")");
    }
    // Pairwise-distinct pattern frequencies.
    std::vector<LatticePoint> all;
    all.reserve(static_cast<std::size_t>(std::pow(3.0, static_cast<double>(freqs_.size()))));
    SignPatternRange range(static_cast<int>(freqs_.size()));
    SignPattern xi;
    while (range.next(xi)) all.push_back(xi.frequency(freqs_));
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i] == all[i + 1])
            throw ConstructionError("riesz spec: pattern frequencies collide");
}

TrigPoly riesz_expand(const RieszProductSpec& spec) { return expand_freqs(spec.freqs(), spec.dim()); }

TrigPoly riesz_partial(const RieszProductSpec& spec, int l) {
    if (l < 1 || l > spec.N()) throw DomainError("riesz_partial: index out of range");
    return expand_freqs(std::span<const LatticePoint>(spec.freqs().data(),
                                                      static_cast<std::size_t>(l - 1)),
                        spec.dim());
}

CertificationReport riesz_l1_certify(const RieszProductSpec& spec, double oversampling) {
    TrigPoly R = riesz_expand(spec);
    const bool mean_ok = R.mean() == Coeff::exact(Rational(1));
    const double min_sample = quad::reduced_min_real(R, oversampling);
    NormReport l1 = quad::reduced_lp_norm(R, 1.0, oversampling);
    const double l1_tol = std::max(1e-6, 2.0 * l1.error_hint);

    CertificationReport r;
    r.claim_id = "riesz_l1";
    r.title = "product kernel is nonnegative with unit mean, hence unit L_1 norm";
    r.param("N", static_cast<long long>(spec.N()));
    r.param("d", static_cast<long long>(spec.dim()));
    r.observe("min_sample", min_sample);
    r.observe("l1_quadrature", l1.value);
    r.observe("l1_error_hint", l1.error_hint);
    r.tolerance = 1e-9;
    r.note = mean_ok ? "constant coefficient is exactly 1"
                     : "constant coefficient differs from 1";
    r.pass = mean_ok && min_sample >= -1e-9 && std::abs(l1.value - 1.0) <= l1_tol;
    return r;
}

TrigPoly cosine_modulate(const TrigPoly& f, const LatticePoint& n) {
    if (n.dim() != f.dim()) throw DomainError("cosine_modulate: dimension mismatch");
    TrigPoly out(f.dim());
    const Rational half(1, 2);
    const LatticePoint neg = n.negated();
    for (const auto& [m, c] : f.terms()) {
        Coeff hc = c.times_rat(half);
        out.add_coeff(add_points(m, n), hc);
        out.add_coeff(add_points(m, neg), hc);
    }
    return out;
}

CertificationReport riesz_decomposition_check(const RieszProductSpec& spec) {
    TrigPoly lhs = riesz_expand(spec);
    lhs.set_coeff(zero_point(spec.dim()), Coeff());  // drop the constant term
    TrigPoly rhs(spec.dim());
    for (int l = 1; l <= spec.N(); ++l)
        rhs += cosine_modulate(riesz_partial(spec, l), spec.freqs()[static_cast<std::size_t>(l - 1)]);

    std::size_t mismatches = 0;
    if (lhs.term_count() != rhs.term_count()) {
        mismatches = lhs.term_count() + rhs.term_count();  // structural disagreement
    } else {
        auto it = rhs.terms().begin();
        for (const auto& [m, c] : lhs.terms()) {
            if (!(it->first == m) || !(it->second == c)) ++mismatches;
            ++it;
        }
    }

    CertificationReport r;
    r.claim_id = "riesz_l1";
    r.title = "product minus one telescopes into cosine-modulated partial products";
    r.param("N", static_cast<long long>(spec.N()));
    r.param("d", static_cast<long long>(spec.dim()));
    r.observe("terms", static_cast<double>(lhs.term_count()));
    r.observe("mismatched_terms", static_cast<double>(mismatches));
    r.tolerance = 0.0;
    r.note = "coefficient-exact comparison";
    r.pass = mismatches == 0;
    return r;
}

// ---- the antiderivative test function -----------------------------------------

TestPhiSpec::TestPhiSpec(RieszProductSpec riesz, int j0) : riesz_(std::move(riesz)), j0_(j0) {
    if (j0 < 0 || j0 >= riesz_.dim()) throw DomainError("test function: axis out of range");
    SignPatternRange range(riesz_.N());
    SignPattern xi;
    while (range.next(xi)) {
        if (xi.weight() == 0) continue;
        LatticePoint M = xi.frequency(riesz_.freqs());
        if (M[j0_] == 0)
            throw ConstructionError("test function: a pattern frequency vanishes on axis " +
                                    std::to_string(j0_ + 1));
    }
}

TrigPoly test_phi(const TestPhiSpec& spec) {
    TrigPoly R = riesz_expand(spec.riesz());
    R.set_coeff(zero_point(spec.dim()), Coeff());
    return antiderivative(R, spec.j0());
}

HlBound hl_bound_exact(const TestPhiSpec& spec, int l, int j) {
    const int d = spec.dim();
    if (d < 2) throw PreconditionError("transfer bound: requires d >= 2");
    if (l < 1 || l > spec.N()) throw PreconditionError("transfer bound: step out of range");
    if (j < 0 || j >= d || j == spec.j0())
        throw PreconditionError("transfer bound: axis must differ from the distinguished axis");

    const auto& freqs = spec.riesz().freqs();
    const LatticePoint& nl = freqs[static_cast<std::size_t>(l - 1)];
    const int j0 = spec.j0();
    const Rational r0 = make_rational(nl[j], nl[j0]);

    HlBound out;
    SignPatternRange range(l - 1);
    SignPattern xi;
    while (range.next(xi)) {
        LatticePoint M = xi.frequency(std::span<const LatticePoint>(freqs.data(),
                                                                    static_cast<std::size_t>(l - 1)));
        Rational half_sum(0);
        bool ok = true;
        for (int sign : {+1, -1}) {
            std::int64_t den = 0, num = 0;
            if (__builtin_add_overflow(M[j0], sign * nl[j0], &den) ||
                __builtin_add_overflow(M[j], sign * nl[j], &num))
                throw ResourceError("transfer bound: frequency overflow", "coordinates within int64");
            if (den == 0) {
                ok = false;
                break;
            }
            half_sum += rational_abs(make_rational(num, den) - r0);
        }
        if (!ok) {
            out.denominators_ok = false;
            continue;
        }
        half_sum /= 2;
        if (half_sum > out.max_half_sum) out.max_half_sum = half_sum;
    }
    out.scaled = to_double(Rational(out.max_half_sum * pow3_big(spec.N())));
    return out;
}

CertificationReport hl_coefficient_bound(const TestPhiSpec& spec, int l, int j) {
    HlBound b = hl_bound_exact(spec, l, j);
    CertificationReport r;
    r.claim_id = "wspol";
    r.title = "transfer coefficient bound at one step, exact rational enumeration";
    r.param("N", static_cast<long long>(spec.N()));
    r.param("d", static_cast<long long>(spec.dim()));
    r.param("l", static_cast<long long>(l));
    r.param("j", static_cast<long long>(j + 1));
    r.observe("max_half_sum", to_double(b.max_half_sum));
    r.observe("scaled_constant", b.scaled);
    r.tolerance = 0.0;
    r.note = b.denominators_ok ? "all denominators nonzero"
                               : "a denominator vanished; dominance assumption violated";
    r.pass = b.denominators_ok;
    return r;
}

GradientReport gradient_report(const TestPhiSpec& spec, double oversampling) {
    const int d = spec.dim();
    TrigPoly phi = test_phi(spec);
    std::vector<LatticePoint> support;
    support.reserve(phi.term_count());
    std::vector<std::vector<std::complex<double>>> sets(static_cast<std::size_t>(d) + 1);
    for (auto& s : sets) s.reserve(phi.term_count());
    for (const auto& [n, c] : phi.terms()) {
        support.push_back(n);
        sets[0].push_back(c.to_complex());
        for (int j = 0; j < d; ++j)
            sets[static_cast<std::size_t>(j) + 1].push_back(c.times_i_times(n[j], 1).to_complex());
    }
    quad::ReducedNormOptions opt;
    opt.p = 1.0;
    opt.oversampling = oversampling;
    auto norms = quad::reduced_family_norms(d, support, sets, opt);

    GradientReport g;
    g.phi_l1 = norms[0];
    g.per_axis.assign(norms.begin() + 1, norms.end());
    g.sobolev_11 = g.phi_l1.value;
    for (const auto& nr : g.per_axis) g.sobolev_11 += nr.value;
    for (int j = 0; j < d; ++j)
        if (j != spec.j0())
            g.off_axis_max = std::max(g.off_axis_max, g.per_axis[static_cast<std::size_t>(j)].value);

    const NormReport& main_axis = g.per_axis[static_cast<std::size_t>(spec.j0())];
    CertificationReport r;
    r.claim_id = "lemgl";
    r.title = "distinguished-axis gradient norm at most 2; off-axis norms recorded";
    r.param("N", static_cast<long long>(spec.N()));
    r.param("d", static_cast<long long>(d));
    r.param("j0", static_cast<long long>(spec.j0() + 1));
    r.observe("phi_l1", g.phi_l1.value);
    for (int j = 0; j < d; ++j)
        r.observe("dphi_l1_axis" + std::to_string(j + 1), g.per_axis[static_cast<std::size_t>(j)].value);
    r.observe("sobolev_11", g.sobolev_11);
    r.observe("off_axis_max", g.off_axis_max);
    r.observe("error_hint", main_axis.error_hint);
    r.tolerance = 2.0 * main_axis.error_hint + 1e-9;
    r.pass = main_axis.value <= 2.0 + r.tolerance;
    g.cert = std::move(r);
    return g;
}

// ---- corpus --------------------------------------------------------------------

std::vector<TestPhiSpec> sparse_spec_corpus(int d, int N, int count, std::uint64_t seed) {
    if (d < 1 || d > kMaxDim) throw DomainError("corpus: dimension out of range");
    if (N < 2 || N > 4) throw DomainError("corpus: sparsity order must be 2, 3 or 4");
    if (count < 1) throw DomainError("corpus: count must be positive");

    Rng rng(Rng::derive(seed, "sparse-spec-corpus"));
    SectorPartition sectors(d, N);
    const std::int64_t B = pow3(N) + 2;

    std::vector<TestPhiSpec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int idx = 0; idx < count; ++idx) {
        const int i0 = 1 + idx % N;  // 1-based factor carrying the slack bump
        bool built = false;
        for (int attempt = 0; attempt < 64 && !built; ++attempt) {
            std::array<std::int64_t, kMaxDim> v{};
            v[0] = 2 * N;  // distinguished axis 0 dominates strictly
            for (int a = 1; a < d; ++a) v[static_cast<std::size_t>(a)] = rng.uniform(-(2 * N - 2), 2 * N - 2);
            int s = -1;
            std::int64_t wsign = 0;
            if (d >= 2) {
                s = static_cast<int>(rng.uniform(1, d - 1));
                wsign = rng.coin() ? 1 : -1;
                if (i0 == 1) v[static_cast<std::size_t>(s)] = 0;  // keeps the first ratio above 3^N
            }
            std::vector<std::int64_t> c(static_cast<std::size_t>(N));
            c[0] = 1;
            for (int i = 1; i < N; ++i)
                c[static_cast<std::size_t>(i)] =
                    c[static_cast<std::size_t>(i - 1)] * B * (i == 1 ? 1 : rng.uniform(1, 2));

            std::vector<LatticePoint> freqs;
            freqs.reserve(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i) {
                std::array<std::int64_t, kMaxDim> n{};
                for (int a = 0; a < d; ++a)
                    n[static_cast<std::size_t>(a)] = c[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(a)];
                if (d >= 2 && i + 1 == i0) n[static_cast<std::size_t>(s)] += wsign;
                freqs.emplace_back(std::span<const std::int64_t>(n.data(), static_cast<std::size_t>(d)));
            }

            if (!is_sparse(freqs, static_cast<double>(N))) continue;
            bool same_sector = true;
            const SectorId sec = sectors.sector_of(freqs[0]);
            for (const auto& n : freqs)
                if (!(sectors.sector_of(n) == sec)) {
                    same_sector = false;
                    break;
                }
            if (!same_sector) continue;
            try {
                out.emplace_back(RieszProductSpec(freqs), 0);
                built = true;
            } catch (const Error&) {
                continue;
            }
        }
        if (!built)
            throw ConstructionError("corpus: could not draw a valid spec (d=" + std::to_string(d) +
                                    ", N=" + std::to_string(N) + ", index " + std::to_string(idx) + ")");
    }
    return out;
}

// ---- fixtures ------------------------------------------------------------------

std::string kernel_spec_to_json(const KernelSpecJson& s) {
    nlohmann::ordered_json j;
    if (s.type == KernelSpecJson::Type::fejer_product) {
        j["type"] = "fejer_product";
        j["d"] = s.d;
        j["k"] = s.k;
    } else {
        j["type"] = "riesz_phi";
        j["d"] = s.d;
        nlohmann::ordered_json freqs = nlohmann::ordered_json::array();
        for (const auto& n : s.freqs) {
            nlohmann::ordered_json one = nlohmann::ordered_json::array();
            for (int a = 0; a < s.d; ++a) one.push_back(n[a]);
            freqs.push_back(one);
        }
        j["freqs"] = freqs;
        j["j0"] = s.j0 + 1;  // file format is 1-based
    }
    return j.dump(2);
}

KernelSpecJson kernel_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("kernel spec JSON parse failed: ") + e.what());
    }
    KernelSpecJson out;
    const std::string type = j.value("type", "");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw DomainError("kernel spec: missing integer field d");
    out.d = j["d"].get<int>();
    if (type == "fejer_product") {
        out.type = KernelSpecJson::Type::fejer_product;
        if (!j.contains("k") || !j["k"].is_number_integer())
            throw DomainError("kernel spec: missing integer field k");
        out.k = j["k"].get<int>();
    } else if (type == "riesz_phi") {
        out.type = KernelSpecJson::Type::riesz_phi;
        if (!j.contains("freqs") || !j["freqs"].is_array())
            throw DomainError("kernel spec: missing freqs array");
        for (const auto& row : j["freqs"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != out.d)
                throw DomainError("kernel spec: each frequency needs d coordinates");
            std::array<std::int64_t, kMaxDim> n{};
            for (int a = 0; a < out.d; ++a) n[static_cast<std::size_t>(a)] = row[static_cast<std::size_t>(a)].get<std::int64_t>();
            out.freqs.emplace_back(std::span<const std::int64_t>(n.data(), static_cast<std::size_t>(out.d)));
        }
        if (!j.contains("j0") || !j["j0"].is_number_integer())
            throw DomainError("kernel spec: missing integer field j0");
        out.j0 = j["j0"].get<int>() - 1;  // to 0-based
        if (out.j0 < 0 || out.j0 >= out.d)
            throw DomainError("kernel spec: j0 out of range (1-based axis expected)");
    } else {
        throw DomainError("kernel spec: unknown type \"" + type + "\"");
    }
    return out;
}

TrigPoly kernel_spec_build(const KernelSpecJson& s) {
    if (s.type == KernelSpecJson::Type::fejer_product) return fejer_product(s.d, s.k);
    return test_phi(TestPhiSpec(RieszProductSpec(s.freqs), s.j0));
}

}  // namespace tml
