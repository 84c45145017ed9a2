#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tml/rational.hpp"

namespace tml {

// Ambient dimensions supported by the toolkit.
inline constexpr int kMaxDim = 4;

// A point of the integer lattice Z^d, d in [1, kMaxDim].  Coordinates are
// int64; all norms used here (sup and squared-euclidean) are computed in
// exact integer arithmetic.
class LatticePoint {
public:
    LatticePoint() : d_(1) { c_.fill(0); }
    explicit LatticePoint(std::span<const std::int64_t> coords);
    LatticePoint(std::initializer_list<std::int64_t> coords)
        : LatticePoint(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

    int dim() const { return d_; }
    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    std::span<const std::int64_t> coords() const { return {c_.data(), static_cast<std::size_t>(d_)}; }

    std::int64_t sup_norm() const;       // max_i |n_i|
    std::int64_t norm_sq() const;        // sum n_i^2, exact
    double norm() const;                 // sqrt of norm_sq
    bool is_zero() const { return sup_norm() == 0; }
    LatticePoint negated() const;

    bool operator==(const LatticePoint& o) const;
    // Lexicographic order (dimension first); used as map key.
    std::strong_ordering operator<=>(const LatticePoint& o) const;

private:
    std::array<std::int64_t, kMaxDim> c_;
    int d_;
};

// ---- triadic rings ---------------------------------------------------------
//
// Ring k collects the n with 3^k <= sup_norm(n) < 3^(k+1); ring index is the
// unique such k.  Every nonzero lattice point lies in exactly one ring.

// Ring index of a nonzero point; DomainError on zero.
int ring_index(const LatticePoint& n);

// Exact check of the two-sided euclidean-norm bound on ring k:
//   3^(2k) <= norm_sq(n) <= d * 3^(2(k+1)).
// Pure integer comparison; DomainError on zero.
bool euclid_bounds_check(const LatticePoint& n);

// |ring k in dimension d| = (2*3^(k+1)-1)^d - (2*3^k-1)^d, exact.
Integer ring_cardinality(int k, int d);

// Streaming enumerator over ring k in dimension d (no materialization).
// Order: lexicographic in coordinates.
class RingEnumerator {
public:
    RingEnumerator(int k, int d);
    // Writes the next point into `out`; returns false when exhausted.
    bool next(LatticePoint& out);

private:
    bool advance();
    bool in_ring() const;
    int k_, d_;
    std::int64_t lo_, hi_;  // ring: lo <= sup-norm < hi  (hi = 3^(k+1))
    std::array<std::int64_t, kMaxDim> cur_;
    bool done_, started_;
};

// Materializes ring k (throws ResourceError beyond `max_points`; large rings
// should use RingEnumerator instead).
std::vector<LatticePoint> ring_points(int k, int d, std::size_t max_points = std::size_t(1) << 22);

// ---- sectors ---------------------------------------------------------------
//
// Direction sectors at granularity N: a nonzero n is keyed by the smallest
// axis j attaining sup_norm(n) together with, for every other axis i, the
// bin of the exact ratio n_i / n_j in [-1, 1] among N uniform bins
// (boundary pushed into the lower bin, ratio +1 into bin N).

struct SectorId {
    int axis = 0;                                   // dominant axis, 0-based
    std::array<std::int32_t, kMaxDim - 1> bin{};    // bins for axes != axis, in axis order, 1..N
    int d = 1;

    bool operator==(const SectorId& o) const;
    std::strong_ordering operator<=>(const SectorId& o) const;
};

class SectorPartition {
public:
    SectorPartition(int d, int N);

    int dim() const { return d_; }
    int granularity() const { return N_; }

    // Total number of sectors: d * N^(d-1).
    Integer sector_count() const;

    // Sector of a nonzero point; DomainError on zero.
    SectorId sector_of(const LatticePoint& n) const;

    // Center of bin a (1..N) as an exact rational: (2a-1)/N - 1.
    Rational bin_center(int a) const;

    // Exact membership test of the widened sector around `id`: n belongs if
    // its dominant axis matches and every ratio lies within 1/N of the bin
    // center of `id` (inclusive).
    bool in_extended_sector(const LatticePoint& n, const SectorId& id) const;

private:
    int d_, N_;
};

// ---- sparse sequences ------------------------------------------------------

// True when points are strictly increasing in euclidean norm with
// norm(p[j+1]) / norm(p[j]) >= 3^alpha.  Exact integer comparison when
// 2*alpha is an even integer; otherwise double comparison with relative
// slack 1e-12.
bool is_sparse(std::span<const LatticePoint> points, double alpha);

// A finite sequence validated at construction: nonzero points, strictly
// increasing euclidean norms, consecutive ratio at least 3^alpha.
class SparseSequence {
public:
    SparseSequence(std::vector<LatticePoint> points, double alpha);

    const std::vector<LatticePoint>& points() const { return points_; }
    double alpha() const { return alpha_; }
    std::size_t size() const { return points_.size(); }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<LatticePoint> points_;
    double alpha_;
};

// Splits a batch of same-sector points, at most one per triadic ring, into
// N-sparse subsequences.  Two-branch strategy:
//   * if the norm-sorted input is already N-sparse, chop it into consecutive
//     runs of length N (plus a shorter tail);
//   * otherwise decimate by sorted position modulo s with
//     s = N + 1 + ceil(log_3 sqrt(d)), which certifies ratio
//     3^(s-1)/sqrt(d) >= 3^N between successive kept points.
// Output size is at most #points/N + 2N + 1 sequences.
// Preconditions (PreconditionError): all points in one sector of the
// granularity-N partition and pairwise distinct ring indices.
std::vector<SparseSequence> split_into_sparse(std::span<const LatticePoint> points, int N);

// Stride used by the decimation branch of split_into_sparse.
int sparse_split_stride(int d, int N);

}  // namespace tml
