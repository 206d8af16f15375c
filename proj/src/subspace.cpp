#include "liebialg/subspace.hpp"

#include <stdexcept>

namespace liebialg {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Mat m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    return row_span(m);
}

Subspace Subspace::row_span(const Mat& m) {
    Subspace s(m.cols());
    s.basis_ = rref(m).mat;
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: size mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // locate the pivot of row i
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        const Rational f = w[p];  // pivot entry is 1
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

}  // namespace liebialg
