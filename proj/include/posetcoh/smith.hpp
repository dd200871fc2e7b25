#pragma once

#include <optional>
#include <vector>

#include "posetcoh/int_matrix.hpp"

namespace posetcoh {

/// Which transformation matrices to accumulate during reduction.
struct SmithOptions {
    bool left = true;       ///< U
    bool right = true;      ///< V
    bool inverses = false;  ///< U^{-1} and V^{-1} (only those whose forward matrix is requested)
};

/// U * M * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...), d_i > 0, d_i | d_{i+1}.
/// Matrices that were not requested through SmithOptions are left empty.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::size_t rank = 0;

    /// The nonzero invariant factors d_1 | ... | d_rank.
    std::vector<Integer> invariant_factors() const;
};

/// Smith normal form by pivoting on an entry of least absolute value.
SmithDecomposition snf(const IntMatrix& m, SmithOptions options = {});

/// Diagonal only; skips every transformation matrix.
std::vector<Integer> invariant_factors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Columns form a basis of the lattice {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a basis of the lattice spanned by the columns of m.
IntMatrix image_basis(const IntMatrix& m);

/// Integer solutions of m x = b for many right-hand sides against one reduction.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::optional<IntVector> solve(const IntVector& b) const;
    bool contains(const IntVector& b) const { return solve(b).has_value(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    SmithDecomposition smith_;
};

/// Some x with m x = b, or nothing when no integer solution exists.
std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b);

}  // namespace posetcoh
