#pragma once

#include "liebialg/lie_algebra.hpp"

namespace liebialg {

/// Canonical-form classification of a validated 3-dimensional Lie algebra.
///
/// basis_change holds the canonical presentation basis as columns in input
/// coordinates: transporting the input structure constants through it yields
/// exactly the canonical brackets of the named kind.
struct Classification3 {
    enum class Kind { Abelian, Heisenberg, SLambda, Simple };
    Kind kind = Kind::Abelian;
    Mat basis_change;

    // SLambda: paper row convention, [h,s_i] = sum_j lambda(i,j) s_j.
    Mat lambda;
    // Simple: [e1,e2]=e3, [e2,e3]=beta e1, [e3,e1]=alpha e2.
    Rational alpha, beta;

    std::string kind_name() const;
};

Classification3 classify3(const LieAlgebra& g);

struct QuaternionicPresentation {
    Rational alpha, beta;
    Mat new_basis;  // columns e1, e2, e3 in input coordinates
};

/// Constructive quaternionic presentation of a 3-dimensional simple algebra:
/// Killing-orthogonalize a basis by fraction-free Gram-Schmidt (no square
/// roots), read the cyclic bracket coefficients c_i off the orthogonal basis,
/// rescale to (f1, f2, [f1,f2]) and return alpha = c2 c3, beta = c1 c3.
/// Throws std::invalid_argument ("not simple") if the Killing form is
/// degenerate or a cyclic coefficient vanishes.
QuaternionicPresentation quaternionic_presentation(const LieAlgebra& g);

/// The canonical algebra for a classification (replay target for tests).
LieAlgebra canonical_form(const Classification3& c);

}  // namespace liebialg
