#pragma once

#include "liebialg/rational.hpp"

#include <optional>
#include <vector>

namespace liebialg {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec basis_vec(std::size_t dim, std::size_t k);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& v);
bool operator==(const Vec& a, const Vec& b);

/// Dense matrix over Rational, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    Mat transpose() const;
    Rational trace() const;
    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    friend bool operator==(const Mat& a, const Mat& b);

    /// Stacks o below this matrix (same column count).
    Mat stacked(const Mat& o) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct Rref {
    Mat mat;                         // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. The forward pass is fraction-free (rows scaled to
/// primitive integer vectors, cross-multiplication elimination with content
/// removal); the back pass reduces over Q to leading-1 canonical form.
Rref rref(Mat m);

/// Canonical (rref-row) basis of the right kernel of m. Returned as a matrix
/// whose rows are the basis vectors; 0 rows when the kernel is trivial.
Mat kernel_basis(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// One solution of a x = b (free variables set to 0), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Rational det(Mat m);

/// Monic characteristic polynomial of a square matrix, coefficients c[0..n]
/// with p(x) = sum c[k] x^k, via Faddeev-LeVerrier.
std::vector<Rational> char_poly(const Mat& a);

}  // namespace liebialg
