#pragma once

#include "liebialg/linalg.hpp"
#include "liebialg/subspace.hpp"

#include <string>
#include <vector>

namespace liebialg {

struct Violation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    std::size_t i, j, k;
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Thrown when an operation requiring a valid Lie algebra receives one that
/// fails the antisymmetry/Jacobi axioms.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport rep);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Finite-dimensional Lie algebra over Q given by structure constants:
/// [b_i, b_j] = sum_k sc(i,j,k) b_k.
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim, std::string name = "");

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const Rational& sc(std::size_t i, std::size_t j, std::size_t k) const;

    /// Sets [b_i, b_j] = value and the antisymmetric pair [b_j, b_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const Vec& value);
    /// Raw single-entry mutator; bypasses antisymmetric completion (used by
    /// tests to build deliberately broken tables for validate()).
    void set_sc_raw(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

    Vec bracket(const Vec& u, const Vec& v) const;
    Vec bracket_basis(std::size_t i, std::size_t j) const;

    ValidationReport validate() const;
    void require_valid() const;  // throws ValidationError

    bool is_abelian() const;
    bool is_solvable() const;
    Subspace derived_subalgebra() const;
    Subspace center() const;

    /// Matrix of ad x on g (power 1), or of the adjoint diagonal action of x
    /// on g tensor g (power 2) / g tensor g tensor g (power 3), in the
    /// lexicographic tensor bases (i,j) -> i*n+j, (i,j,k) -> (i*n+j)*n+k.
    Mat adjoint_action_matrix(const Vec& x, int power) const;
    Mat ad(const Vec& x) const { return adjoint_action_matrix(x, 1); }

    /// kappa(b_i, b_j) = trace(ad b_i o ad b_j).
    Mat killing_form() const;

    /// Structure constants rewritten in the basis whose vectors are the
    /// columns of new_basis (in current coordinates). Throws on singular input.
    LieAlgebra transported(const Mat& new_basis) const;

private:
    std::size_t dim_;
    std::string name_;
    std::vector<Rational> sc_;  // ((i*n)+j)*n+k

    Rational& sc_ref(std::size_t i, std::size_t j, std::size_t k);
};

/// Direct sum with blockwise brackets.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liebialg
