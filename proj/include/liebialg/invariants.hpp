#pragma once

#include "liebialg/cyb.hpp"
#include "liebialg/lie_algebra.hpp"

namespace liebialg {

/// Exact kernel of a rational matrix as a canonical echelonized subspace.
Subspace nullspace(const Mat& m);

/// Echelon basis of M^g for M = g, g tensor g, or g tensor g tensor g.
struct InvariantBasis {
    int power = 1;
    std::size_t algebra_dim = 0;
    Subspace space;  // ambient dimension algebra_dim^power

    std::size_t dim() const { return space.dim(); }
    Tensor2 tensor2(std::size_t i) const;  // power == 2 rows
    Tensor3 tensor3(std::size_t i) const;  // power == 3 rows
};

/// Kernel of the stacked adjoint-action matrices of all basis vectors.
InvariantBasis invariant_subspace(const LieAlgebra& g, int power);

/// x.t = 0 for every basis x, tested by direct application (independent of
/// invariant_subspace).
bool is_invariant(const LieAlgebra& g, const Tensor2& t);
bool is_invariant(const LieAlgebra& g, const Tensor3& t);

}  // namespace liebialg
