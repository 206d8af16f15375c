#pragma once

#include "liebialg/classify3.hpp"
#include "liebialg/cyb.hpp"
#include "liebialg/tower.hpp"

#include <optional>
#include <string>

namespace liebialg {

struct SearchOptions {
    unsigned long height_bound = 10000;  // isotropic-vector search in stage S3
    long exhaustive_entry_bound = 2;     // stage S5 entry range, dims <= 4
};

/// Everything re-checked about a candidate r before it is reported.
struct WitnessVerification {
    bool skew = false;
    Tensor3 cyb_value{1};
    bool cyb_zero = false;
    bool cyb_invariant = false;
    bool sym_invariant = false;
    bool delta_nonzero = false;
    DrinfeldResult drinfeld;
    bool bialgebra_ok = false;  // full axiom check of delta_r

    /// triangular witness: skew, CYB = 0, delta != 0
    bool triangular_ok() const { return skew && cyb_zero && delta_nonzero; }
    /// coboundary witness: Drinfel'd criterion + delta != 0
    bool coboundary_ok() const { return drinfeld.is_bialgebra && delta_nonzero; }
};

WitnessVerification verify_witness(const LieAlgebra& g, const Tensor2& r);

enum class WitnessStatus { Yes, YesNoWitnessFound, No };

struct VerdictEntry {
    WitnessStatus status = WitnessStatus::No;
    std::optional<Tensor2> witness;
    std::optional<WitnessVerification> verification;
    std::string reason;  // for No; names the certifying family
};

/// The Theorem's verdict for one algebra. Monotone by construction:
/// triangular yes => quasi-triangular yes => coboundary yes.
struct DecisionReport {
    VerdictEntry triangular;
    VerdictEntry quasi_triangular;
    VerdictEntry coboundary;
    std::optional<Classification3> classification;  // dim 3 only
};

struct TriangularSearchResult {
    bool found = false;
    Tensor2 r{1};
    int stage = 0;  // 1..5, matching the staged search
};

/// Staged witness search, first verified hit wins:
/// S1 central pairings, S2 rational eigen-pairs of ad(basis vector),
/// S3 the dim-3 canonical-form recipes, S4 bounded Michaelis pairs,
/// S5 exhaustive small skew tensors (dim <= 4). Every hit is re-verified
/// (skew, CYB = 0, delta != 0); not_found is a value, not an error.
TriangularSearchResult witness_triangular(const LieAlgebra& g, const SearchOptions& opts = {});

/// Direct S5-style exhaustive search (used by the negative-certification
/// suite): all skew tensors with strict-upper entries in [-bound, bound].
std::optional<Tensor2> exhaustive_skew_search(const LieAlgebra& g, long bound);

/// The coboundary witnesses for the three exceptional families, transported
/// back through the classification's basis change and re-verified. Throws
/// std::logic_error if verification fails (classification bug).
Tensor2 witness_coboundary_exceptional(const LieAlgebra& g, const Classification3& cls);

DecisionReport decide(const LieAlgebra& g, const SearchOptions& opts = {});

/// The 2-dimensional representation of the quaternionic algebra with
/// parameters (alpha, beta), entries in the tower Q[x,y,z]/(x^2-a,y^2-b,z^2+1).
struct TowerMat2 {
    TowerElement a, b, c, d;  // [[a, b], [c, d]]

    TowerMat2 operator*(const TowerMat2& o) const;
    TowerMat2 operator-(const TowerMat2& o) const;
    TowerElement det() const;
};

struct Rep2x2 {
    Rational alpha, beta;
    TowerMat2 e1, e2, e3;

    TowerMat2 image(const Vec& v) const;  // v over the quaternionic basis
};

/// e1 -> (1/2) diag(xz, -xz), e2 -> (1/2) offdiag(y, -y),
/// e3 -> (1/2) offdiag(xyz, xyz); the Eq-(3) commutator relations are checked
/// on construction (std::logic_error on failure).
Rep2x2 build_rep2x2(const Rational& alpha, const Rational& beta);

struct Prop2Case {
    Tensor2 sample{3};
    Rational det_route;   // (4/(alpha beta)) det(rho(gamma(w))), when rational
    Rational cyb_route;   // iota(CYB(w))
    bool det_rational = false;
    bool wedge_multiple = false;  // CYB(w) is a multiple of e1^e2^e3
    bool ok = false;
};

struct Prop2Report {
    bool passes = false;
    std::vector<Prop2Case> cases;
};

/// Commutativity of the determinant diagram on the given skew samples:
/// gamma via the bracket-induced map on wedges, iota(e1^e2^e3) = 1.
Prop2Report prop2_verify(const Rational& alpha, const Rational& beta,
                         const std::vector<Tensor2>& samples);

}  // namespace liebialg
