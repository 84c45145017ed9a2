#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "tml/errors.hpp"
#include "tml/lattice.hpp"
#include "tml/rational.hpp"

using namespace tml;

TEST_CASE("LatticePoint construction and norms") {
    LatticePoint n{3, -4};
    CHECK(n.dim() == 2);
    CHECK(n[0] == 3);
    CHECK(n[1] == -4);
    CHECK(n.sup_norm() == 4);
    CHECK(n.norm_sq() == 25);
    CHECK(n.norm() == 5.0);
    CHECK_FALSE(n.is_zero());
    CHECK(LatticePoint{0, 0, 0}.is_zero());
    CHECK_THROWS_AS(LatticePoint(std::vector<std::int64_t>{}), DomainError);
    CHECK_THROWS_AS(LatticePoint(std::vector<std::int64_t>{1, 2, 3, 4, 5}), DomainError);
}

TEST_CASE("ring_index brackets powers of three") {
    CHECK(ring_index(LatticePoint{1}) == 0);
    CHECK(ring_index(LatticePoint{2}) == 0);
    CHECK(ring_index(LatticePoint{3}) == 1);
    CHECK(ring_index(LatticePoint{-8}) == 1);
    CHECK(ring_index(LatticePoint{9}) == 2);
    CHECK(ring_index(LatticePoint{2, -27}) == 3);
    CHECK_THROWS_AS(ring_index(LatticePoint{0, 0}), DomainError);
}

TEST_CASE("ring cardinality identity against direct enumeration") {
    // (2*3^(k+1)-1)^d - (2*3^k-1)^d, checked pointwise for small rings.
    CHECK(ring_cardinality(0, 1) == 4);
    CHECK(ring_cardinality(1, 1) == 12);
    CHECK(ring_cardinality(0, 2) == 24);
    CHECK(ring_cardinality(1, 2) == 264);
    CHECK(ring_cardinality(0, 3) == 124);

    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= 2; ++k) {
            RingEnumerator en(k, d);
            LatticePoint n;
            Integer count = 0;
            while (en.next(n)) {
                ++count;
                CHECK(ring_index(n) == k);
                CHECK(euclid_bounds_check(n));
            }
            CHECK(count == ring_cardinality(k, d));
        }
    }
}

TEST_CASE("euclidean bounds are exact integer comparisons") {
    // 3^(2k) <= norm_sq <= d * 3^(2k+2) holds for every ring member;
    // spot-check the extreme corners.
    CHECK(euclid_bounds_check(LatticePoint{1, 0}));        // norm_sq = 9^0
    CHECK(euclid_bounds_check(LatticePoint{2, 2}));        // norm_sq = 8 <= 2*9
    CHECK(euclid_bounds_check(LatticePoint{-2, 2, 2}));    // norm_sq = 12 <= 3*9
    CHECK(euclid_bounds_check(LatticePoint{80, -80, 80}));  // ring 3, 3*80^2 <= 3*3^8
    CHECK_THROWS_AS(euclid_bounds_check(LatticePoint{0}), DomainError);
}

TEST_CASE("ring enumeration is ascending lexicographic and budget-guarded") {
    RingEnumerator en(0, 2);
    LatticePoint n;
    std::vector<LatticePoint> pts;
    while (en.next(n)) pts.push_back(n);
    REQUIRE(pts.size() == 24);
    CHECK(pts.front()[0] == -2);
    CHECK(pts.front()[1] == -2);
    CHECK(pts.back()[0] == 2);
    CHECK(pts.back()[1] == 2);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        bool less = false;
        for (int j = 0; j < 2; ++j) {
            if (pts[i - 1][j] != pts[i][j]) {
                less = pts[i - 1][j] < pts[i][j];
                break;
            }
        }
        CHECK(less);
    }

    auto listed = ring_points(0, 2);
    REQUIRE(listed.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(listed[i][0] == pts[i][0]);
        CHECK(listed[i][1] == pts[i][1]);
    }
    CHECK_THROWS_AS(ring_points(1, 2, 10), ResourceError);
}

TEST_CASE("sector partition counts and membership") {
    SectorPartition part(2, 4);
    CHECK(part.sector_count() == 8);  // d * N^(d-1)
    CHECK(SectorPartition(1, 4).sector_count() == 1);
    CHECK(SectorPartition(3, 4).sector_count() == 48);
    CHECK(SectorPartition(3, 1).sector_count() == 3);

    SectorId id = part.sector_of(LatticePoint{5, 1});
    CHECK(id.axis == 0);
    CHECK(id.bin[0] == 3);  // ratio 1/5 lands in [0, 1/2)
    CHECK(part.in_extended_sector(LatticePoint{5, 1}, id));

    // Dominant axis is the smallest index attaining the sup norm.
    CHECK(part.sector_of(LatticePoint{4, -4}).axis == 0);
    CHECK(part.sector_of(LatticePoint{1, -7}).axis == 1);
    CHECK_THROWS_AS(part.sector_of(LatticePoint{0, 0}), DomainError);

    // Enumerate the realized sectors of one full ring: no sector id may
    // exceed the partition count.
    std::set<std::pair<int, int>> seen;
    for (const auto& p : ring_points(1, 2)) {
        SectorId s = part.sector_of(p);
        seen.insert({s.axis, s.bin[0]});
        CHECK(s.axis >= 0);
        CHECK(s.axis < 2);
        CHECK(s.bin[0] >= 1);
        CHECK(s.bin[0] <= 4);
    }
    CHECK(seen.size() <= 8);
}

TEST_CASE("bin centers are exact rationals") {
    SectorPartition part(2, 4);
    CHECK(part.bin_center(1) == make_rational(-3, 4));
    CHECK(part.bin_center(2) == make_rational(-1, 4));
    CHECK(part.bin_center(3) == make_rational(1, 4));
    CHECK(part.bin_center(4) == make_rational(3, 4));
    CHECK_THROWS_AS(part.bin_center(0), DomainError);
    CHECK_THROWS_AS(part.bin_center(5), DomainError);
}

TEST_CASE("negation maps sectors onto sectors") {
    SectorPartition part(2, 3);
    for (const auto& p : ring_points(0, 2)) {
        SectorId a = part.sector_of(p);
        LatticePoint m{-p[0], -p[1]};
        SectorId b = part.sector_of(m);
        CHECK(a.axis == b.axis);  // dominant axis is sign-invariant
        CHECK(b.bin[0] >= 1);
        CHECK(b.bin[0] <= 3);
    }
}

TEST_CASE("is_sparse checks consecutive euclidean ratios") {
    std::vector<LatticePoint> good = {LatticePoint{1}, LatticePoint{3}, LatticePoint{9}};
    CHECK(is_sparse(good, 1.0));
    CHECK_FALSE(is_sparse(good, 2.0));
    std::vector<LatticePoint> tight = {LatticePoint{1}, LatticePoint{2}};
    CHECK_FALSE(is_sparse(tight, 1.0));
    std::vector<LatticePoint> exact = {LatticePoint{2, 0}, LatticePoint{6, 0}};
    CHECK(is_sparse(exact, 1.0));  // ratio exactly 3, integer comparison
    CHECK(is_sparse(std::vector<LatticePoint>{LatticePoint{5}}, 3.0));
}

TEST_CASE("SparseSequence validates at construction") {
    CHECK_NOTHROW(SparseSequence({LatticePoint{1}, LatticePoint{9}}, 2.0));
    CHECK_THROWS_AS(SparseSequence({LatticePoint{1}, LatticePoint{2}}, 2.0),
                    ConstructionError);
    CHECK_THROWS_AS(SparseSequence({LatticePoint{0}}, 1.0), ConstructionError);
    CHECK_THROWS_AS(SparseSequence({LatticePoint{9}, LatticePoint{1}}, 1.0),
                    ConstructionError);
    SparseSequence s({LatticePoint{1}, LatticePoint{9}, LatticePoint{81}}, 2.0);
    CHECK(s.size() == 3);
    CHECK(s.alpha() == 2.0);
    CHECK(s[2][0] == 81);
}

TEST_CASE("sparse_split_stride closed form") {
    CHECK(sparse_split_stride(1, 2) == 3);   // ceil(log3 sqrt(1)) = 0
    CHECK(sparse_split_stride(2, 3) == 5);   // ceil(log3 sqrt(2)) = 1
    CHECK(sparse_split_stride(4, 2) == 4);   // ceil(log3 2) = 1
    CHECK(sparse_split_stride(3, 4) == 6);
}

static void check_split(const std::vector<LatticePoint>& input, int N) {
    auto seqs = split_into_sparse(input, N);
    std::size_t budget = input.size() / static_cast<std::size_t>(N) +
                         2 * static_cast<std::size_t>(N) + 1;
    CHECK(seqs.size() <= budget);
    std::size_t total = 0;
    for (const auto& s : seqs) {
        CHECK(s.size() <= static_cast<std::size_t>(N));
        CHECK(is_sparse(s.points(), static_cast<double>(N)));
        total += s.size();
    }
    CHECK(total == input.size());
}

TEST_CASE("split_into_sparse fast path on already-sparse input") {
    // Ratios are exactly 3^3 = 27 >= 3^N for N = 3.
    std::vector<LatticePoint> pts = {LatticePoint{1, 0}, LatticePoint{27, 0},
                                     LatticePoint{729, 0}, LatticePoint{19683, 0}};
    auto seqs = split_into_sparse(pts, 3);
    CHECK(seqs.size() == 2);  // runs of length 3 then the tail
    check_split(pts, 3);
}

TEST_CASE("split_into_sparse stride path on dense same-sector input") {
    // One point per ring along the positive axis: ratios 3 < 3^2.
    std::vector<LatticePoint> pts;
    for (int k = 0; k <= 12; ++k) pts.push_back(LatticePoint{pow3(k), 0});
    check_split(pts, 2);
    check_split(pts, 3);

    std::vector<LatticePoint> d1;
    for (int k = 0; k <= 20; ++k) d1.push_back(LatticePoint{pow3(k)});
    check_split(d1, 2);
    check_split(d1, 4);
}

TEST_CASE("split_into_sparse rejects mixed sectors and repeated rings") {
    // (5,1) and (1,5) have different dominant axes.
    std::vector<LatticePoint> mixed = {LatticePoint{5, 1}, LatticePoint{1, 5}};
    CHECK_THROWS_AS(split_into_sparse(mixed, 2), PreconditionError);
    // Two points in ring 0.
    std::vector<LatticePoint> rep = {LatticePoint{1, 0}, LatticePoint{2, 0}};
    CHECK_THROWS_AS(split_into_sparse(rep, 2), PreconditionError);
}
