#pragma once

#include "liebialg/linalg.hpp"

namespace liebialg {

/// 2-tensor over the canonical basis of V tensor V, index (i,j) -> i*n+j.
/// Skew tensors are stored as full coefficient arrays; the wedge constructor
/// produces the alternating sum u tensor v - v tensor u.
class Tensor2 {
public:
    explicit Tensor2(std::size_t n) : n_(n), c_(n * n) {}

    static Tensor2 outer(const Vec& u, const Vec& v);
    static Tensor2 wedge(const Vec& u, const Vec& v);
    static Tensor2 from_flat(std::size_t n, Vec flat);

    std::size_t dim() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return c_[i * n_ + j]; }
    const Vec& flat() const { return c_; }

    /// The switch mapping tau: x tensor y -> y tensor x.
    Tensor2 switched() const;
    Tensor2 sym_part() const;   // (r + tau r)/2
    Tensor2 skew_part() const;  // (r - tau r)/2

    bool is_zero() const { return vec_is_zero(c_); }
    bool is_skew() const;
    bool is_symmetric() const;

    Tensor2 operator-() const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Rational& s, Tensor2 t);
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    std::size_t n_;
    Vec c_;
};

/// 3-tensor over the canonical basis, index (i,j,k) -> (i*n+j)*n+k.
class Tensor3 {
public:
    explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n) {}

    /// Alternating sum over S3: u^v^w = sum sign(s) s.(u tensor v tensor w).
    static Tensor3 wedge(const Vec& u, const Vec& v, const Vec& w);
    static Tensor3 from_flat(std::size_t n, Vec flat);

    std::size_t dim() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Vec& flat() const { return c_; }

    /// The cycle mapping xi: x tensor y tensor z -> y tensor z tensor x.
    Tensor3 cycled() const;

    bool is_zero() const { return vec_is_zero(c_); }

    Tensor3 operator-() const;
    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(const Rational& s, Tensor3 t);
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    std::size_t n_;
    Vec c_;
};

/// Coordinate change: the tensor with coefficients t in the basis given by the
/// columns of c, rewritten in the ambient coordinates (C t C^T as a matrix).
Tensor2 transport(const Tensor2& t, const Mat& c);
Tensor3 transport(const Tensor3& t, const Mat& c);

}  // namespace liebialg
