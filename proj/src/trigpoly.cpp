#include "tml/trigpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "tml/errors.hpp"
#include "tml/quadrature.hpp"

namespace tml {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

quad::Path to_quad_path(EvalOptions::Path p) {
    switch (p) {
        case EvalOptions::Path::direct: return quad::Path::direct;
        case EvalOptions::Path::fft: return quad::Path::fft;
        case EvalOptions::Path::automatic: break;
    }
    return quad::Path::automatic;
}

LatticePoint zero_point(int d) {
    std::array<std::int64_t, kMaxDim> z{};
    return LatticePoint(std::span<const std::int64_t>(z.data(), static_cast<std::size_t>(d)));
}

std::pair<std::vector<LatticePoint>, std::vector<std::complex<double>>> collect(const TrigPoly& f) {
    std::vector<LatticePoint> support;
    std::vector<std::complex<double>> coeffs;
    support.reserve(f.term_count());
    coeffs.reserve(f.term_count());
    for (const auto& [n, c] : f.terms()) {
        support.push_back(n);
        coeffs.push_back(c.to_complex());
    }
    return {std::move(support), std::move(coeffs)};
}

Rational rational_pow(Rational base, long e) {
    Rational out(1);
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

TrigPoly::TrigPoly(int d) : d_(d) {
    if (d < 1 || d > kMaxDim)
        throw DomainError("TrigPoly: dimension must be between 1 and " + std::to_string(kMaxDim));
}

std::int64_t TrigPoly::degree() const {
    std::int64_t deg = 0;
    for (const auto& [n, c] : coeffs_) deg = std::max(deg, n.sup_norm());
    return deg;
}

Coeff TrigPoly::coeff(const LatticePoint& n) const {
    if (n.dim() != d_) throw DomainError("coeff: frequency dimension mismatch");
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Coeff() : it->second;
}

Coeff TrigPoly::mean() const { return coeff(zero_point(d_)); }

void TrigPoly::set_coeff(const LatticePoint& n, Coeff c) {
    if (n.dim() != d_) throw DomainError("set_coeff: frequency dimension mismatch");
    if (c.is_zero())
        coeffs_.erase(n);
    else
        coeffs_.insert_or_assign(n, std::move(c));
}

void TrigPoly::add_coeff(const LatticePoint& n, const Coeff& c) {
    if (n.dim() != d_) throw DomainError("add_coeff: frequency dimension mismatch");
    if (c.is_zero()) return;
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        coeffs_.emplace(n, c);
        return;
    }
    Coeff sum = it->second + c;
    if (sum.is_zero())
        coeffs_.erase(it);
    else
        it->second = std::move(sum);
}

bool TrigPoly::is_real() const {
    for (const auto& [n, c] : coeffs_) {
        auto it = coeffs_.find(n.negated());
        if (it == coeffs_.end() || !(it->second == c.conj())) return false;
    }
    return true;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (o.d_ != d_) throw DomainError("poly addition: dimension mismatch");
    for (const auto& [n, c] : o.coeffs_) add_coeff(n, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    if (o.d_ != d_) throw DomainError("poly subtraction: dimension mismatch");
    for (const auto& [n, c] : o.coeffs_) add_coeff(n, -c);
    return *this;
}

TrigPoly TrigPoly::scaled(const Coeff& c) const {
    TrigPoly out(d_);
    for (const auto& [n, v] : coeffs_) out.set_coeff(n, v * c);
    return out;
}

TrigPoly TrigPoly::character(const LatticePoint& n, Coeff c) {
    TrigPoly out(n.dim());
    out.set_coeff(n, std::move(c));
    return out;
}

TrigPoly TrigPoly::constant(int d, Coeff c) {
    TrigPoly out(d);
    out.set_coeff(zero_point(d), std::move(c));
    return out;
}

TrigPoly TrigPoly::cosine(const LatticePoint& n) {
    TrigPoly out(n.dim());
    Coeff half = Coeff::exact(Rational(1, 2));
    out.add_coeff(n, half);
    out.add_coeff(n.negated(), half);
    return out;
}

std::vector<std::complex<double>> evaluate_on_grid(const TrigPoly& f, const GridSpec& g,
                                                   const EvalOptions& opt) {
    const std::int64_t deg = f.degree();
    if (g.M < 2 * deg + 1)
        throw PreconditionError("evaluate_on_grid: undersampled grid (M=" + std::to_string(g.M) +
                                ", need at least " + std::to_string(2 * deg + 1) + ")");
    if (g.M > quad::kMaxAmbientAxis)
        throw ResourceError("evaluate_on_grid: grid too large",
                            "M <= " + std::to_string(quad::kMaxAmbientAxis));
    std::int64_t total = 1;
    for (int j = 0; j < f.dim(); ++j) {
        total *= g.M;
        if (total > quad::kMaxTotalFFT)
            throw ResourceError("evaluate_on_grid: sample count over budget",
                                "M^d <= " + std::to_string(quad::kMaxTotalFFT) + " samples");
    }
    quad::AnisoGrid grid;
    grid.d = f.dim();
    for (int j = 0; j < f.dim(); ++j) grid.M[static_cast<std::size_t>(j)] = g.M;
    return quad::materialize(f, grid, to_quad_path(opt.path));
}

NormReport lp_norm(const TrigPoly& f, double p, const GridSpec& g, const EvalOptions& opt) {
    if (p < 1.0) throw DomainError("lp_norm: p must be >= 1");
    if (g.M < 1) throw DomainError("lp_norm: grid size must be positive");
    const std::int64_t deg = f.degree();
    if (g.oversampling_for(deg) < 4.0)
        throw PreconditionError("lp_norm: oversampling below 4 (M=" + std::to_string(g.M) +
                                ", degree=" + std::to_string(deg) + ")");
    if (g.M > quad::kMaxAmbientAxis)
        throw ResourceError("lp_norm: grid too large",
                            "M <= " + std::to_string(quad::kMaxAmbientAxis));
    const double fine_log = static_cast<double>(f.dim()) * std::log2(2.0 * g.M);
    if (fine_log > std::log2(static_cast<double>(quad::kMaxTotalDirect)))
        throw ResourceError("lp_norm: refinement grid over budget",
                            "(2M)^d <= " + std::to_string(quad::kMaxTotalDirect) + " samples");

    auto [support, coeffs] = collect(f);
    std::vector<std::vector<std::complex<double>>> sets{std::move(coeffs)};
    quad::ScanRequest req;
    req.p = p;
    quad::AnisoGrid base, fine;
    base.d = fine.d = f.dim();
    for (int j = 0; j < f.dim(); ++j) {
        base.M[static_cast<std::size_t>(j)] = g.M;
        fine.M[static_cast<std::size_t>(j)] = 2 * g.M;
    }
    quad::Path path = to_quad_path(opt.path);
    auto r0 = quad::family_scan(f.dim(), support, sets, base, req, path);
    auto r1 = quad::family_scan(f.dim(), support, sets, fine, req, path);
    const double v0 = std::pow(r0[0].pow_sum / static_cast<double>(base.total()), 1.0 / p);
    const double v1 = std::pow(r1[0].pow_sum / static_cast<double>(fine.total()), 1.0 / p);

    NormReport out;
    out.value = v0;
    out.p = p;
    out.method = NormReport::Method::quadrature;
    out.grid = g;
    out.error_hint = std::abs(v0 - v1);
    return out;
}

double coeff_l1_upper(const TrigPoly& f) {
    // Exact whenever every coefficient is exact, shares one (2*pi)^e factor,
    // and is pure real or pure imaginary (the kernel constructions all are).
    bool exact_ok = true;
    int shared_e = 0;
    bool first = true;
    Rational sum(0);
    for (const auto& [n, c] : f.terms()) {
        if (!c.is_exact()) {
            exact_ok = false;
            break;
        }
        if (first) {
            shared_e = c.twopi_exp();
            first = false;
        }
        if (c.twopi_exp() != shared_e) {
            exact_ok = false;
            break;
        }
        if (c.im_rat() == 0)
            sum += rational_abs(c.re_rat());
        else if (c.re_rat() == 0)
            sum += rational_abs(c.im_rat());
        else {
            exact_ok = false;
            break;
        }
    }
    if (exact_ok) return to_double(sum) * std::pow(kTwoPi, shared_e);
    double acc = 0.0;
    for (const auto& [n, c] : f.terms()) acc += c.abs();
    return acc;
}

TrigPoly partial_derivative(const TrigPoly& f, int axis) {
    if (axis < 0 || axis >= f.dim()) throw DomainError("partial_derivative: axis out of range");
    TrigPoly out(f.dim());
    for (const auto& [n, c] : f.terms()) out.set_coeff(n, c.times_i_times(n[axis], 1));
    return out;
}

TrigPoly antiderivative(const TrigPoly& f, int axis) {
    if (axis < 0 || axis >= f.dim()) throw DomainError("antiderivative: axis out of range");
    TrigPoly out(f.dim());
    for (const auto& [n, c] : f.terms()) {
        if (n[axis] == 0)
            throw DomainError("antiderivative: support touches the hyperplane n_" +
                              std::to_string(axis + 1) + " = 0");
        out.set_coeff(n, c.div_i_times(n[axis], 1));
    }
    return out;
}

NormReport sobolev_norm_11(const TrigPoly& f, const GridSpec& g, const EvalOptions& opt) {
    NormReport acc = lp_norm(f, 1.0, g, opt);
    for (int j = 0; j < f.dim(); ++j) {
        NormReport dj = lp_norm(partial_derivative(f, j), 1.0, g, opt);
        acc.value += dj.value;
        acc.error_hint += dj.error_hint;
    }
    return acc;
}

double fourier_coeff_lq(const TrigPoly& f, double q) {
    if (q < 1.0) throw DomainError("fourier_coeff_lq: q must be >= 1");
    const bool q_integral = q == std::floor(q) && q <= 64.0;
    if (q_integral) {
        const long qi = static_cast<long>(q);
        bool exact_ok = true;
        Rational sum(0);
        for (const auto& [n, c] : f.terms()) {
            if (!c.is_exact() || c.twopi_exp() != 0) {
                exact_ok = false;
                break;
            }
            if (qi % 2 == 0) {
                sum += rational_pow(c.re_rat() * c.re_rat() + c.im_rat() * c.im_rat(), qi / 2);
            } else if (c.im_rat() == 0) {
                sum += rational_pow(rational_abs(c.re_rat()), qi);
            } else if (c.re_rat() == 0) {
                sum += rational_pow(rational_abs(c.im_rat()), qi);
            } else {
                exact_ok = false;
                break;
            }
        }
        if (exact_ok) return std::pow(to_double(sum), 1.0 / q);
    }
    double acc = 0.0;
    for (const auto& [n, c] : f.terms()) acc += std::pow(c.abs(), q);
    return std::pow(acc, 1.0 / q);
}

CertificationReport hausdorff_young_check(const TrigPoly& f, double p, const GridSpec& g) {
    if (!(p > 1.0 && p <= 2.0)) throw DomainError("hausdorff_young_check: p must lie in (1, 2]");
    const double pprime = p / (p - 1.0);
    NormReport lp = lp_norm(f, p, g);
    const double lhs = fourier_coeff_lq(f, pprime);
    CertificationReport r;
    r.claim_id = "hausdorff_young";
    r.title = "dual-exponent coefficient norm bounded by the L_p norm";
    r.param("d", static_cast<long long>(f.dim()));
    r.param("degree", static_cast<long long>(f.degree()));
    r.param("p", format_double(p));
    r.param("M", static_cast<long long>(g.M));
    r.tolerance = 2.0 * lp.error_hint + 1e-9;
    r.observe("coeff_dual_norm", lhs);
    r.observe("lp_norm", lp.value);
    r.observe("error_hint", lp.error_hint);
    r.pass = lhs <= lp.value + r.tolerance;
    return r;
}

CertificationReport bernstein_check(const TrigPoly& f, const GridSpec& g) {
    if (f.dim() != 1) throw DomainError("bernstein_check: requires d = 1");
    const std::int64_t deg = f.degree();
    NormReport den = lp_norm(f, 1.0, g);
    NormReport num = lp_norm(partial_derivative(f, 0), 1.0, g);
    const double bound_factor = kTwoPi * static_cast<double>(deg);
    CertificationReport r;
    r.claim_id = "bernstein";
    r.title = "derivative L_1 norm bounded by 2*pi*degree times the L_1 norm";
    r.param("degree", static_cast<long long>(deg));
    r.param("M", static_cast<long long>(g.M));
    r.tolerance = 2.0 * (num.error_hint + bound_factor * den.error_hint) + 1e-9;
    const double raw = den.value > 0.0 ? num.value / den.value : 0.0;
    const double normalized = (deg > 0 && den.value > 0.0) ? num.value / (bound_factor * den.value) : 0.0;
    r.observe("deriv_l1", num.value);
    r.observe("l1", den.value);
    r.observe("raw_ratio", raw);
    r.observe("normalized_ratio", normalized);
    r.pass = num.value <= bound_factor * den.value + r.tolerance;
    return r;
}

std::string trigpoly_to_json(const TrigPoly& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [n, c] : f.terms()) {
        nlohmann::ordered_json term;
        nlohmann::ordered_json freq = nlohmann::ordered_json::array();
        for (int j = 0; j < f.dim(); ++j) freq.push_back(n[j]);
        term["freq"] = freq;
        term["re"] = c.re_string();
        term["im"] = c.im_string();
        arr.push_back(term);
    }
    return arr.dump(2);
}

TrigPoly trigpoly_from_json(const std::string& text, int expected_dim) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("polynomial JSON parse failed: ") + e.what());
    }
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array of terms");
    int d = expected_dim;
    if (d == 0) {
        if (j.empty()) throw DomainError("cannot infer dimension from an empty polynomial");
        if (!j[0].contains("freq") || !j[0]["freq"].is_array())
            throw DomainError("polynomial term missing freq array");
        d = static_cast<int>(j[0]["freq"].size());
    }
    TrigPoly out(d);
    for (const auto& term : j) {
        if (!term.contains("freq") || !term["freq"].is_array() ||
            static_cast<int>(term["freq"].size()) != d)
            throw DomainError("polynomial term has malformed freq array");
        std::array<std::int64_t, kMaxDim> n{};
        for (int k = 0; k < d; ++k) n[static_cast<std::size_t>(k)] = term["freq"][static_cast<std::size_t>(k)].get<std::int64_t>();
        LatticePoint pt(std::span<const std::int64_t>(n.data(), static_cast<std::size_t>(d)));
        auto part = [&](const char* key) -> CoeffParts {
            if (!term.contains(key)) return CoeffParts{true, Rational(0), 0.0};
            const auto& v = term[key];
            if (v.is_string()) return parse_coeff_part(v.get<std::string>());
            if (v.is_number_integer())
                return CoeffParts{true, Rational(static_cast<long>(v.get<std::int64_t>())), 0.0};
            if (v.is_number()) return CoeffParts{false, Rational(0), v.get<double>()};
            throw DomainError(std::string("polynomial term field ") + key + " must be string or number");
        };
        CoeffParts re = part("re");
        CoeffParts im = part("im");
        Coeff c;
        if (re.exact && im.exact)
            c = Coeff::exact(re.rat, im.rat);
        else
            c = Coeff::approx({re.exact ? to_double(re.rat) : re.val,
                               im.exact ? to_double(im.rat) : im.val});
        out.add_coeff(pt, c);
    }
    return out;
}

}  // namespace tml
