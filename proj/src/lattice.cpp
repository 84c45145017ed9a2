#include "tml/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tml/errors.hpp"

namespace tml {

LatticePoint::LatticePoint(std::span<const std::int64_t> coords) {
    if (coords.empty() || coords.size() > kMaxDim)
        throw DomainError("LatticePoint: dimension must be in [1, " + std::to_string(kMaxDim) + "]");
    d_ = static_cast<int>(coords.size());
    c_.fill(0);
    std::copy(coords.begin(), coords.end(), c_.begin());
}

std::int64_t LatticePoint::sup_norm() const {
    std::int64_t m = 0;
    for (int i = 0; i < d_; ++i) m = std::max(m, std::abs(c_[static_cast<std::size_t>(i)]));
    return m;
}

std::int64_t LatticePoint::norm_sq() const {
    unsigned __int128 s = 0;
    for (int i = 0; i < d_; ++i) {
        unsigned __int128 a = static_cast<unsigned __int128>(std::abs(c_[static_cast<std::size_t>(i)]));
        s += a * a;
    }
    if (s > static_cast<unsigned __int128>(INT64_MAX))
        throw ResourceError("LatticePoint::norm_sq overflows int64", "coordinates below ~1.5e9");
    return static_cast<std::int64_t>(s);
}

double LatticePoint::norm() const { return std::sqrt(static_cast<double>(norm_sq())); }

LatticePoint LatticePoint::negated() const {
    LatticePoint r = *this;
    for (int i = 0; i < d_; ++i) r.c_[static_cast<std::size_t>(i)] = -r.c_[static_cast<std::size_t>(i)];
    return r;
}

bool LatticePoint::operator==(const LatticePoint& o) const {
    if (d_ != o.d_) return false;
    for (int i = 0; i < d_; ++i)
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::strong_ordering LatticePoint::operator<=>(const LatticePoint& o) const {
    if (auto c = d_ <=> o.d_; c != 0) return c;
    for (int i = 0; i < d_; ++i) {
        if (auto c = c_[static_cast<std::size_t>(i)] <=> o.c_[static_cast<std::size_t>(i)]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

int ring_index(const LatticePoint& n) {
    std::int64_t s = n.sup_norm();
    if (s == 0) throw DomainError("ring_index: zero vector has no ring");
    // Largest k with 3^k <= s, by integer comparison only.
    int k = 0;
    while (k < kMaxPow3 && pow3(k + 1) <= s) ++k;
    return k;
}

bool euclid_bounds_check(const LatticePoint& n) {
    int k = ring_index(n);
    std::int64_t nsq = n.norm_sq();
    if (2 * (k + 1) <= kMaxPow3 - 1) {
        // d * 3^(2(k+1)) <= 4 * 3^38 fits int64, so no big integers needed.
        std::int64_t lo = pow3(2 * k);
        std::int64_t hi = static_cast<std::int64_t>(n.dim()) * pow3(2 * (k + 1));
        return lo <= nsq && nsq <= hi;
    }
    Integer big(static_cast<long>(nsq));
    Integer lo = pow3_big(2 * k);
    Integer hi = Integer(n.dim()) * pow3_big(2 * (k + 1));
    return lo <= big && big <= hi;
}

Integer ring_cardinality(int k, int d) {
    if (k < 0 || d < 1) throw DomainError("ring_cardinality: need k >= 0, d >= 1");
    Integer outer = 2 * pow3_big(k + 1) - 1;
    Integer inner = 2 * pow3_big(k) - 1;
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), outer.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(b.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(d));
    return a - b;
}

RingEnumerator::RingEnumerator(int k, int d) : k_(k), d_(d) {
    if (k < 0 || k + 1 > kMaxPow3) throw DomainError("RingEnumerator: k out of range");
    if (d < 1 || d > kMaxDim) throw DomainError("RingEnumerator: d out of range");
    lo_ = pow3(k);
    hi_ = pow3(k + 1);
    cur_.fill(-(hi_ - 1));
    done_ = false;
    started_ = false;
}

bool RingEnumerator::in_ring() const {
    std::int64_t m = 0;
    for (int i = 0; i < d_; ++i) m = std::max(m, std::abs(cur_[static_cast<std::size_t>(i)]));
    return m >= lo_;  // m < hi_ by construction of the cube
}

bool RingEnumerator::advance() {
    // Odometer over the cube [-(hi-1), hi-1]^d, least-significant = last axis.
    // When every earlier coordinate is small, the inner hole |last| < lo can
    // be skipped in one step.
    int j = d_ - 1;
    while (j >= 0) {
        auto& c = cur_[static_cast<std::size_t>(j)];
        ++c;
        if (j == d_ - 1 && c == -(lo_ - 1)) {
            std::int64_t prefix = 0;
            for (int i = 0; i < d_ - 1; ++i)
                prefix = std::max(prefix, std::abs(cur_[static_cast<std::size_t>(i)]));
            if (prefix < lo_) c = lo_;
        }
        if (c <= hi_ - 1) return true;
        c = -(hi_ - 1);
        --j;
    }
    return false;
}

bool RingEnumerator::next(LatticePoint& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (in_ring()) {
            out = LatticePoint(std::span<const std::int64_t>(cur_.data(), static_cast<std::size_t>(d_)));
            return true;
        }
    }
    while (advance()) {
        if (in_ring()) {
            out = LatticePoint(std::span<const std::int64_t>(cur_.data(), static_cast<std::size_t>(d_)));
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<LatticePoint> ring_points(int k, int d, std::size_t max_points) {
    Integer card = ring_cardinality(k, d);
    if (card > Integer(static_cast<unsigned long>(max_points)))
        throw ResourceError("ring_points: ring too large to materialize",
                            card.get_str() + " points");
    std::vector<LatticePoint> out;
    out.reserve(card.get_ui());
    RingEnumerator e(k, d);
    LatticePoint p;
    while (e.next(p)) out.push_back(p);
    return out;
}

bool SectorId::operator==(const SectorId& o) const {
    return d == o.d && axis == o.axis && bin == o.bin;
}

std::strong_ordering SectorId::operator<=>(const SectorId& o) const {
    if (auto c = d <=> o.d; c != 0) return c;
    if (auto c = axis <=> o.axis; c != 0) return c;
    for (std::size_t i = 0; i + 1 < kMaxDim; ++i) {
        if (auto c = bin[i] <=> o.bin[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

SectorPartition::SectorPartition(int d, int N) : d_(d), N_(N) {
    if (d < 1 || d > kMaxDim) throw DomainError("SectorPartition: d out of range");
    if (N < 1) throw DomainError("SectorPartition: granularity must be positive");
}

Integer SectorPartition::sector_count() const {
    Integer npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(N_), static_cast<unsigned long>(d_ - 1));
    return Integer(d_) * npow;
}

SectorId SectorPartition::sector_of(const LatticePoint& n) const {
    if (n.dim() != d_) throw DomainError("sector_of: dimension mismatch");
    std::int64_t sup = n.sup_norm();
    if (sup == 0) throw DomainError("sector_of: zero vector has no sector");
    int j = 0;
    while (std::abs(n[j]) != sup) ++j;  // smallest index attaining the max

    SectorId id;
    id.d = d_;
    id.axis = j;
    int slot = 0;
    for (int i = 0; i < d_; ++i) {
        if (i == j) continue;
        // bin a = min(N, floor(N*(r+1)/2) + 1) with r = n_i/n_j, done in
        // exact integer arithmetic: floor(N*(n_i+n_j) / (2*n_j)).
        std::int64_t num = static_cast<std::int64_t>(N_) * (n[i] + n[j]);
        std::int64_t den = 2 * n[j];
        std::int64_t a = floor_div(num, den) + 1;
        if (a > N_) a = N_;
        id.bin[static_cast<std::size_t>(slot++)] = static_cast<std::int32_t>(a);
    }
    return id;
}

Rational SectorPartition::bin_center(int a) const {
    if (a < 1 || a > N_) throw DomainError("bin_center: bin out of range");
    return make_rational(2 * static_cast<std::int64_t>(a) - 1 - N_, N_);
}

bool SectorPartition::in_extended_sector(const LatticePoint& n, const SectorId& id) const {
    if (n.dim() != d_ || id.d != d_) throw DomainError("in_extended_sector: dimension mismatch");
    int j = id.axis;
    if (n[j] == 0) return false;
    Rational tol = make_rational(1, N_);
    int slot = 0;
    for (int i = 0; i < d_; ++i) {
        if (i == j) continue;
        Rational r = make_rational(n[i], n[j]);
        Rational c = bin_center(id.bin[static_cast<std::size_t>(slot++)]);
        if (rational_abs(r - c) > tol) return false;
    }
    return true;
}

bool is_sparse(std::span<const LatticePoint> points, double alpha) {
    if (points.empty()) throw PreconditionError("is_sparse: empty sequence");
    for (const auto& p : points)
        if (p.is_zero()) throw PreconditionError("is_sparse: zero point");
    if (points.size() == 1) return true;

    double two_alpha = 2.0 * alpha;
    long m = std::lround(two_alpha);
    bool exact = std::abs(two_alpha - static_cast<double>(m)) < 1e-9 && m >= 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Integer a(static_cast<long>(points[i].norm_sq()));
        Integer b(static_cast<long>(points[i + 1].norm_sq()));
        if (exact) {
            // |n'|/|n| >= 3^alpha  <=>  |n'|^2 >= 3^(2 alpha) |n|^2.
            if (b < pow3_big(static_cast<int>(m)) * a) return false;
        } else {
            double ratio = std::sqrt(b.get_d() / a.get_d());
            if (ratio < std::pow(3.0, alpha) * (1.0 - 1e-12)) return false;
        }
    }
    return true;
}

SparseSequence::SparseSequence(std::vector<LatticePoint> points, double alpha)
    : points_(std::move(points)), alpha_(alpha) {
    if (points_.empty()) throw ConstructionError("SparseSequence: empty");
    for (const auto& p : points_)
        if (p.is_zero()) throw ConstructionError("SparseSequence: zero point");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (points_[i].norm_sq() >= points_[i + 1].norm_sq())
            throw ConstructionError("SparseSequence: norms not strictly increasing");
    if (!is_sparse(points_, alpha_))
        throw ConstructionError("SparseSequence: consecutive norm ratio below 3^alpha");
}

int sparse_split_stride(int d, int N) {
    // s = N + 1 + ceil(log_3 sqrt(d)); for d in [2, 9] the ceiling is 1.
    int extra = 0;
    std::int64_t dd = d;
    std::int64_t p = 1;  // smallest power of 9 with 9^extra >= d  <=>  3^extra >= sqrt(d)
    while (p < dd) {
        p *= 9;
        ++extra;
    }
    return N + 1 + extra;
}

std::vector<SparseSequence> split_into_sparse(std::span<const LatticePoint> points, int N) {
    if (N < 1) throw DomainError("split_into_sparse: N must be positive");
    if (points.empty()) return {};
    int d = points[0].dim();
    SectorPartition part(d, N);

    SectorId sector = part.sector_of(points[0]);
    std::vector<std::pair<int, std::size_t>> order;  // (ring, original index)
    order.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != d) throw PreconditionError("split_into_sparse: mixed dimensions");
        if (!(part.sector_of(points[i]) == sector))
            throw PreconditionError("split_into_sparse: points straddle several sectors");
        order.emplace_back(ring_index(points[i]), i);
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i].first == order[i + 1].first)
            throw PreconditionError("split_into_sparse: two points share ring index " +
                                    std::to_string(order[i].first));

    std::vector<LatticePoint> sorted;
    sorted.reserve(points.size());
    for (auto& [k, i] : order) sorted.push_back(points[i]);

    std::vector<SparseSequence> out;
    auto chop = [&](const std::vector<LatticePoint>& run) {
        for (std::size_t start = 0; start < run.size(); start += static_cast<std::size_t>(N)) {
            std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(N), run.size() - start);
            std::vector<LatticePoint> piece(run.begin() + static_cast<std::ptrdiff_t>(start),
                                            run.begin() + static_cast<std::ptrdiff_t>(start + len));
            out.emplace_back(std::move(piece), static_cast<double>(N));
        }
    };

    if (is_sparse(sorted, static_cast<double>(N))) {
        // Already N-sparse in ring order: consecutive runs of N suffice.
        chop(sorted);
    } else {
        int s = sparse_split_stride(d, N);
        for (int r = 0; r < s; ++r) {
            std::vector<LatticePoint> cls;
            for (std::size_t i = static_cast<std::size_t>(r); i < sorted.size(); i += static_cast<std::size_t>(s))
                cls.push_back(sorted[i]);
            if (!cls.empty()) chop(cls);
        }
    }

    // Count postcondition: #sequences <= #points/N + 2N + 1.
    double bound = static_cast<double>(points.size()) / N + 2.0 * N + 1.0;
    if (static_cast<double>(out.size()) > bound)
        throw ConstructionError("split_into_sparse: count postcondition violated");
    return out;
}

}  // namespace tml
