#include "liebialg/tensor.hpp"

#include <stdexcept>

namespace liebialg {

Tensor2 Tensor2::outer(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Tensor2::outer: size mismatch");
    Tensor2 t(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            t.at(i, j) = u[i] * v[j];
        }
    }
    return t;
}

Tensor2 Tensor2::wedge(const Vec& u, const Vec& v) { return outer(u, v) - outer(v, u); }

Tensor2 Tensor2::from_flat(std::size_t n, Vec flat) {
    if (flat.size() != n * n) throw std::invalid_argument("Tensor2::from_flat: size mismatch");
    Tensor2 t(n);
    t.c_ = std::move(flat);
    return t;
}

Tensor2 Tensor2::switched() const {
    Tensor2 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Tensor2 Tensor2::sym_part() const {
    Tensor2 s = *this + switched();
    const Rational half(1, 2);
    return half * s;
}

Tensor2 Tensor2::skew_part() const {
    Tensor2 s = *this - switched();
    const Rational half(1, 2);
    return half * s;
}

bool Tensor2::is_skew() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (!(at(i, j) == -at(j, i))) return false;
    return true;
}

bool Tensor2::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 t(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) t.c_[i] = -c_[i];
    return t;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (n_ != o.n_) throw std::invalid_argument("Tensor2: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (n_ != o.n_) throw std::invalid_argument("Tensor2: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Tensor2 operator*(const Rational& s, Tensor2 t) {
    for (auto& x : t.c_) x *= s;
    return t;
}

Tensor3 Tensor3::wedge(const Vec& u, const Vec& v, const Vec& w) {
    if (u.size() != v.size() || v.size() != w.size())
        throw std::invalid_argument("Tensor3::wedge: size mismatch");
    const std::size_t n = u.size();
    Tensor3 t(n);
    const Vec* args[3] = {&u, &v, &w};
    // permutations of (0,1,2) with signs
    static constexpr int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                        {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
    for (const auto& p : perms) {
        const Vec &a = *args[p[0]], &b = *args[p[1]], &c = *args[p[2]];
        const Rational sign(p[3]);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                const Rational ab = a[i] * b[j];
                for (std::size_t k = 0; k < n; ++k) {
                    if (c[k].is_zero()) continue;
                    t.at(i, j, k) += sign * ab * c[k];
                }
            }
        }
    }
    return t;
}

Tensor3 Tensor3::from_flat(std::size_t n, Vec flat) {
    if (flat.size() != n * n * n) throw std::invalid_argument("Tensor3::from_flat: size mismatch");
    Tensor3 t(n);
    t.c_ = std::move(flat);
    return t;
}

Tensor3 Tensor3::cycled() const {
    // xi(e_i tensor e_j tensor e_k) = e_j tensor e_k tensor e_i, so the
    // coefficient at (a,b,c) comes from (c,a,b).
    Tensor3 t(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c) t.at(a, b, c) = at(c, a, b);
    return t;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) t.c_[i] = -c_[i];
    return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (n_ != o.n_) throw std::invalid_argument("Tensor3: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (n_ != o.n_) throw std::invalid_argument("Tensor3: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Tensor3 operator*(const Rational& s, Tensor3 t) {
    for (auto& x : t.c_) x *= s;
    return t;
}

Tensor2 transport(const Tensor2& t, const Mat& c) {
    const std::size_t n = t.dim();
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("transport: shape mismatch");
    Tensor2 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Rational& v = t.at(a, b);
            if (v.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (c.at(i, a).is_zero()) continue;
                const Rational f = c.at(i, a) * v;
                for (std::size_t j = 0; j < n; ++j) {
                    if (c.at(j, b).is_zero()) continue;
                    out.at(i, j) += f * c.at(j, b);
                }
            }
        }
    return out;
}

Tensor3 transport(const Tensor3& t, const Mat& c) {
    const std::size_t n = t.dim();
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("transport: shape mismatch");
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) {
                const Rational& v = t.at(a, b, d);
                if (v.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) {
                    if (c.at(i, a).is_zero()) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (c.at(j, b).is_zero()) continue;
                        const Rational f = c.at(i, a) * v * c.at(j, b);
                        for (std::size_t k = 0; k < n; ++k) {
                            if (c.at(k, d).is_zero()) continue;
                            out.at(i, j, k) += f * c.at(k, d);
                        }
                    }
                }
            }
    return out;
}

}  // namespace liebialg
