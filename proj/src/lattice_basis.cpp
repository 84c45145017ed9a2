#include "tml/lattice_basis.hpp"

#include <array>

#include "tml/errors.hpp"
#include "tml/rational.hpp"

namespace tml {

namespace {
using Row = std::array<Integer, kMaxDim>;
}

SublatticeBasis SublatticeBasis::from_generators(std::span<const LatticePoint> gens) {
    if (gens.empty()) throw DomainError("SublatticeBasis: no generators");
    int d = gens[0].dim();
    std::vector<Row> work;
    for (const auto& g : gens) {
        if (g.dim() != d) throw DomainError("SublatticeBasis: mixed dimensions");
        Row r;
        for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = Integer(static_cast<long>(g[j]));
        work.push_back(std::move(r));
    }

    // Row-style HNF by repeated gcd elimination per column, big-integer exact.
    std::vector<Row> basis;
    std::vector<int> pivots;
    int pivot_row = 0;
    for (int col = 0; col < d; ++col) {
        // Reduce all rows >= pivot_row so at most one has a nonzero entry in col.
        while (true) {
            int nonzero = -1, second = -1;
            for (int r = pivot_row; r < static_cast<int>(work.size()); ++r) {
                if (work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                    if (nonzero < 0)
                        nonzero = r;
                    else {
                        second = r;
                        break;
                    }
                }
            }
            if (second < 0) {
                if (nonzero >= 0) {
                    std::swap(work[static_cast<std::size_t>(pivot_row)], work[static_cast<std::size_t>(nonzero)]);
                    // Normalize pivot sign to positive.
                    auto& rowv = work[static_cast<std::size_t>(pivot_row)];
                    if (rowv[static_cast<std::size_t>(col)] < 0)
                        for (int j = 0; j < d; ++j) rowv[static_cast<std::size_t>(j)] = -rowv[static_cast<std::size_t>(j)];
                    pivots.push_back(col);
                    ++pivot_row;
                }
                break;
            }
            // Subtract a multiple of the smaller from the larger (in |entry|).
            auto& a = work[static_cast<std::size_t>(nonzero)];
            auto& b = work[static_cast<std::size_t>(second)];
            const Integer& av = a[static_cast<std::size_t>(col)];
            const Integer& bv = b[static_cast<std::size_t>(col)];
            bool a_smaller = abs(av) <= abs(bv);
            auto& small = a_smaller ? a : b;
            auto& large = a_smaller ? b : a;
            Integer q;
            // Round-to-nearest quotient keeps entries small.
            Integer num = large[static_cast<std::size_t>(col)];
            Integer den = small[static_cast<std::size_t>(col)];
            Integer r2;
            mpz_fdiv_qr(q.get_mpz_t(), r2.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (2 * r2 > abs(den)) q += (den > 0 ? 1 : -1);
            for (int j = 0; j < d; ++j)
                large[static_cast<std::size_t>(j)] -= q * small[static_cast<std::size_t>(j)];
        }
    }
    work.resize(static_cast<std::size_t>(pivot_row));

    // Reduce entries above each pivot modulo the pivot (proper HNF).
    for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
        int col = pivots[static_cast<std::size_t>(i)];
        const Integer& piv = work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
        for (int r = 0; r < i; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].get_mpz_t(),
                       piv.get_mpz_t());
            if (q != 0)
                for (int j = 0; j < d; ++j)
                    work[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                        q * work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }

    SublatticeBasis out;
    out.d_ = d;
    out.pivot_col_ = pivots;
    for (auto& r : work) {
        std::array<std::int64_t, kMaxDim> c{};
        for (int j = 0; j < d; ++j) {
            if (!r[static_cast<std::size_t>(j)].fits_slong_p())
                throw ResourceError("SublatticeBasis: basis entry exceeds int64", "smaller generators");
            c[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(r[static_cast<std::size_t>(j)].get_si());
        }
        out.rows_.emplace_back(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d)));
    }
    if (out.rows_.empty()) throw DomainError("SublatticeBasis: all generators zero");
    return out;
}

std::optional<std::vector<std::int64_t>> SublatticeBasis::coordinates(const LatticePoint& v) const {
    if (v.dim() != d_) throw DomainError("SublatticeBasis::coordinates: dimension mismatch");
    std::array<Integer, kMaxDim> rem;
    for (int j = 0; j < d_; ++j) rem[static_cast<std::size_t>(j)] = Integer(static_cast<long>(v[j]));
    std::vector<std::int64_t> coeffs(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int col = pivot_col_[i];
        Integer piv(static_cast<long>(rows_[i][col]));
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[static_cast<std::size_t>(col)].get_mpz_t(), piv.get_mpz_t());
        if (r != 0) return std::nullopt;
        if (!q.fits_slong_p()) return std::nullopt;
        coeffs[i] = static_cast<std::int64_t>(q.get_si());
        for (int j = 0; j < d_; ++j)
            rem[static_cast<std::size_t>(j)] -= q * Integer(static_cast<long>(rows_[i][j]));
    }
    for (int j = 0; j < d_; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    return coeffs;
}

}  // namespace tml
