#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tml/lattice.hpp"

namespace tml {

// Integer basis (row Hermite normal form) of the sublattice of Z^d generated
// by a finite set of points.  Used to rewrite a polynomial whose spectrum
// lies in a low-rank sublattice in coordinates where its degrees are small:
// substituting t = B^T s turns the character at n = c . B into the character
// at c on the torus of the reduced rank, and the substitution preserves Haar
// measure, hence every L_p norm.
class SublatticeBasis {
public:
    static SublatticeBasis from_generators(std::span<const LatticePoint> gens);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return d_; }
    // Basis row i as a lattice point in the ambient Z^d.
    const LatticePoint& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    // Coordinates c with v = sum_i c_i * row(i); nullopt when v is not in
    // the sublattice.  Exact integer computation.
    std::optional<std::vector<std::int64_t>> coordinates(const LatticePoint& v) const;

private:
    int d_ = 1;
    std::vector<LatticePoint> rows_;
    std::vector<int> pivot_col_;
};

}  // namespace tml
