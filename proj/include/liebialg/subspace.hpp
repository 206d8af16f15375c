#pragma once

#include "liebialg/linalg.hpp"

namespace liebialg {

/// Subspace of Q^n held by its reduced-row-echelon basis, the unique canonical
/// representative (pivot columns strictly increasing, leading coefficient 1).
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    /// Rows of m interpreted as spanning vectors.
    static Subspace row_span(const Mat& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Mat basis_;
};

}  // namespace liebialg
