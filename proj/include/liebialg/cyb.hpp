#pragma once

#include "liebialg/lie_algebra.hpp"
#include "liebialg/tensor.hpp"

#include <optional>

namespace liebialg {

/// Adjoint diagonal action of x on a 2- or 3-tensor:
/// x.(a tensor b) = [x,a] tensor b + a tensor [x,b], and the 3-fold analogue.
Tensor2 act(const LieAlgebra& g, const Vec& x, const Tensor2& t);
Tensor3 act(const LieAlgebra& g, const Vec& x, const Tensor3& t);

/// Classical Yang-Baxter operator, evaluated directly from the three
/// commutator sums [r12,r13] + [r12,r23] + [r13,r23] landing in g^{x3}.
Tensor3 cyb(const LieAlgebra& g, const Tensor2& r);

/// A cobracket delta: g -> g tensor g given by its images on basis vectors.
/// Built either as delta_r (x -> x.r) or from arbitrary images.
struct Cobracket {
    std::vector<Tensor2> images;
    std::optional<Tensor2> r;  // present when built as delta_r

    std::size_t dim() const { return images.size(); }
    bool is_zero() const;
    Tensor2 apply(const Vec& x) const;
};

Cobracket delta_r(const LieAlgebra& g, const Tensor2& r);
Cobracket cobracket_from_images(std::vector<Tensor2> images);

/// Drinfel'd's Poisson superbracket on skew 2-tensors, defined by
/// polarization: {s,t} = CYB(s+t) - CYB(s) - CYB(t). Throws on non-skew input.
Tensor3 schouten_bilinear(const LieAlgebra& g, const Tensor2& s, const Tensor2& t);

struct CoalgebraReport {
    bool co_anticommutative = true;
    std::vector<std::size_t> anti_violations;  // basis indices with non-skew image
    bool co_jacobi = true;
    std::vector<std::size_t> jacobi_violations;
    bool passes() const { return co_anticommutative && co_jacobi; }
};

/// Verifies co-anticommutativity (Im(delta) skew) and the co-Jacobi identity
/// (id + xi + xi^2) o (id tensor delta) o delta = 0 on every basis vector.
CoalgebraReport check_coalgebra(const LieAlgebra& g, const Cobracket& delta);

struct BialgebraReport {
    CoalgebraReport coalgebra;
    bool derivation = true;
    std::vector<std::pair<std::size_t, std::size_t>> derivation_violations;
    bool passes() const { return coalgebra.passes() && derivation; }
};

/// check_coalgebra plus the derivation identity
/// delta([x,y]) = x.delta(y) - y.delta(x) on all basis pairs.
BialgebraReport check_bialgebra(const LieAlgebra& g, const Cobracket& delta);

struct DrinfeldResult {
    bool sym_invariant = false;
    bool cyb_invariant = false;
    bool is_bialgebra = false;
};

/// delta_r is a bialgebra cobracket iff r + tau(r) and CYB(r) are g-invariant.
DrinfeldResult drinfeld_criterion(const LieAlgebra& g, const Tensor2& r);

}  // namespace liebialg
