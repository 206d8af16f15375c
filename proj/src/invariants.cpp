#include "liebialg/invariants.hpp"

#include <stdexcept>

namespace liebialg {

Subspace nullspace(const Mat& m) { return Subspace::row_span(kernel_basis(m)); }

Tensor2 InvariantBasis::tensor2(std::size_t i) const {
    if (power != 2) throw std::logic_error("InvariantBasis::tensor2: power != 2");
    return Tensor2::from_flat(algebra_dim, space.basis_vector(i));
}

Tensor3 InvariantBasis::tensor3(std::size_t i) const {
    if (power != 3) throw std::logic_error("InvariantBasis::tensor3: power != 3");
    return Tensor3::from_flat(algebra_dim, space.basis_vector(i));
}

InvariantBasis invariant_subspace(const LieAlgebra& g, int power) {
    if (power < 1 || power > 3) throw std::invalid_argument("invariant_subspace: power must be 1, 2 or 3");
    Mat stacked(0, 0);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Mat a = g.adjoint_action_matrix(basis_vec(g.dim(), i), power);
        stacked = i == 0 ? a : stacked.stacked(a);
    }
    InvariantBasis out;
    out.power = power;
    out.algebra_dim = g.dim();
    out.space = nullspace(stacked);
    return out;
}

bool is_invariant(const LieAlgebra& g, const Tensor2& t) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!act(g, basis_vec(g.dim(), i), t).is_zero()) return false;
    return true;
}

bool is_invariant(const LieAlgebra& g, const Tensor3& t) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!act(g, basis_vec(g.dim(), i), t).is_zero()) return false;
    return true;
}

}  // namespace liebialg
