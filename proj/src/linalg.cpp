#include "liebialg/linalg.hpp"

#include <stdexcept>

namespace liebialg {

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec basis_vec(std::size_t dim, std::size_t k) {
    Vec e(dim);
    e.at(k) = Rational(1);
    return e;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

bool operator==(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Mat::col(std::size_t j) const {
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
}

void Mat::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational Mat::trace() const {
    Rational t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            s += at(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

Mat Mat::stacked(const Mat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("Mat::stacked: column mismatch");
    Mat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

namespace {

// Scales a row to a primitive integer vector (kernel and row span unchanged).
void make_row_primitive(Mat& m, std::size_t i) {
    mpz_class l(1), g(0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero()) continue;
        mpz_class n = m.at(i, j).num() * (l / m.at(i, j).den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return;  // zero row
    Rational scale{mpz_class(l), mpz_class(g)};
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= scale;
}

}  // namespace

Rref rref(Mat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) make_row_primitive(m, i);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            // row_i := pivot*row_i - m[i][c]*row_r, then strip content
            const Rational piv = m.at(r, c), f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) = piv * m.at(i, j) - f * m.at(r, j);
            make_row_primitive(m, i);
        }
        pivots.push_back(c);
        ++r;
    }

    // Back pass over Q: leading 1s, zeros above pivots.
    for (std::size_t t = pivots.size(); t-- > 0;) {
        const std::size_t c = pivots[t];
        const Rational inv = m.at(t, c).inv();
        for (std::size_t j = c; j < cols; ++j) m.at(t, j) *= inv;
        for (std::size_t i = 0; i < t; ++i) {
            const Rational f = m.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(t, j);
        }
    }

    Mat out(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return {std::move(out), std::move(pivots)};
}

Mat kernel_basis(const Mat& m) {
    const std::size_t cols = m.cols();
    Rref r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = Rational(1);
        for (std::size_t t = 0; t < r.pivots.size(); ++t) v[r.pivots[t]] = -r.mat.at(t, f);
        basis.push_back(std::move(v));
    }
    Mat b(basis.size(), cols);
    for (std::size_t i = 0; i < basis.size(); ++i) b.set_row(i, basis[i]);
    return rref(std::move(b)).mat;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    Rref r = rref(std::move(aug));
    if (r.rank() != n || r.pivots.back() >= n) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    for (auto p : r.pivots)
        if (p == a.cols()) return std::nullopt;  // inconsistent
    Vec x(a.cols());
    for (std::size_t t = 0; t < r.pivots.size(); ++t) x[r.pivots[t]] = r.mat.at(t, a.cols());
    return x;
}

Rational det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.at(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(p, j));
            d = -d;
        }
        d *= m.at(c, c);
        const Rational inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = m.at(i, c) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::vector<Rational> char_poly(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    Mat m = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k];
    }
    return c;
}

}  // namespace liebialg
