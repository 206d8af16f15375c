#include "liebialg/lie_algebra.hpp"

#include <stdexcept>

namespace liebialg {

std::string Violation::str() const {
    std::string head = kind == Kind::Antisymmetry ? "antisymmetry" : "jacobi";
    return head + "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

namespace {
std::string describe(const ValidationReport& rep) {
    std::string msg = "Lie algebra axioms violated:";
    for (const auto& v : rep.violations) {
        msg += " " + v.str();
        if (msg.size() > 200) {
            msg += " ...";
            break;
        }
    }
    return msg;
}
}  // namespace

ValidationError::ValidationError(ValidationReport rep)
    : std::runtime_error(describe(rep)), report_(std::move(rep)) {}

LieAlgebra::LieAlgebra(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), sc_(dim * dim * dim) {
    if (dim == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
}

const Rational& LieAlgebra::sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
}

Rational& LieAlgebra::sc_ref(std::size_t i, std::size_t j, std::size_t k) {
    return sc_[(i * dim_ + j) * dim_ + k];
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
        throw std::invalid_argument("LieAlgebra::set_bracket: index/size out of range");
    if (i == j) throw std::invalid_argument("LieAlgebra::set_bracket: i == j");
    for (std::size_t k = 0; k < dim_; ++k) {
        sc_ref(i, j, k) = value[k];
        sc_ref(j, i, k) = -value[k];
    }
}

void LieAlgebra::set_sc_raw(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("LieAlgebra::set_sc_raw: index out of range");
    sc_ref(i, j, k) = v;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Rational c = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (sc(i, j, k).is_zero()) continue;
                out[k] += c * sc(i, j, k);
            }
        }
    }
    return out;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = sc(i, j, k);
    return out;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport rep;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (!(sc(i, j, k) == -sc(j, i, k))) {
                    rep.violations.push_back({Violation::Kind::Antisymmetry, i, j, k});
                    break;
                }
    if (rep.violations.empty()) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vec s = bracket(bracket_basis(i, j), basis_vec(dim_, k));
                    s = vec_add(s, bracket(bracket_basis(j, k), basis_vec(dim_, i)));
                    s = vec_add(s, bracket(bracket_basis(k, i), basis_vec(dim_, j)));
                    if (!vec_is_zero(s)) rep.violations.push_back({Violation::Kind::Jacobi, i, j, k});
                }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

void LieAlgebra::require_valid() const {
    ValidationReport rep = validate();
    if (!rep.ok) throw ValidationError(std::move(rep));
}

bool LieAlgebra::is_abelian() const {
    for (const auto& c : sc_)
        if (!c.is_zero()) return false;
    return true;
}

Subspace LieAlgebra::derived_subalgebra() const {
    std::vector<Vec> spans;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) spans.push_back(bracket_basis(i, j));
    return Subspace::span(dim_, spans);
}

bool LieAlgebra::is_solvable() const {
    Subspace cur = derived_subalgebra();
    while (cur.dim() > 0) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < cur.dim(); ++i)
            for (std::size_t j = i + 1; j < cur.dim(); ++j)
                next.push_back(bracket(cur.basis_vector(i), cur.basis_vector(j)));
        Subspace nxt = Subspace::span(dim_, next);
        if (nxt.dim() == cur.dim()) return false;  // series stabilized above zero
        cur = nxt;
    }
    return true;
}

Subspace LieAlgebra::center() const {
    // kernel of the stacked matrices ad b_0, ..., ad b_{n-1}
    Mat stacked(0, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Mat a = ad(basis_vec(dim_, i));
        stacked = i == 0 ? a : stacked.stacked(a);
    }
    return Subspace::row_span(kernel_basis(stacked));
}

Mat LieAlgebra::adjoint_action_matrix(const Vec& x, int power) const {
    if (x.size() != dim_) throw std::invalid_argument("adjoint_action_matrix: dimension mismatch");
    if (power < 1 || power > 3) throw std::invalid_argument("adjoint_action_matrix: power must be 1, 2 or 3");

    Mat a(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec img = bracket(x, basis_vec(dim_, j));
        for (std::size_t i = 0; i < dim_; ++i) a.at(i, j) = img[i];
    }
    if (power == 1) return a;

    const std::size_t n = dim_;
    if (power == 2) {
        Mat m(n * n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = i * n + j;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!a.at(i, p).is_zero()) m.at(row, p * n + j) += a.at(i, p);
                    if (!a.at(j, p).is_zero()) m.at(row, i * n + p) += a.at(j, p);
                }
            }
        return m;
    }
    Mat m(n * n * n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!a.at(i, p).is_zero()) m.at(row, (p * n + j) * n + k) += a.at(i, p);
                    if (!a.at(j, p).is_zero()) m.at(row, (i * n + p) * n + k) += a.at(j, p);
                    if (!a.at(k, p).is_zero()) m.at(row, (i * n + j) * n + p) += a.at(k, p);
                }
            }
    return m;
}

Mat LieAlgebra::killing_form() const {
    std::vector<Mat> ads;
    ads.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(basis_vec(dim_, i)));
    Mat k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            Rational t = (ads[i] * ads[j]).trace();
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

LieAlgebra LieAlgebra::transported(const Mat& new_basis) const {
    if (new_basis.rows() != dim_ || new_basis.cols() != dim_)
        throw std::invalid_argument("transported: basis matrix must be n x n");
    auto inv = inverse(new_basis);
    if (!inv) throw std::invalid_argument("transported: singular basis matrix");
    LieAlgebra out(dim_, name_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = a + 1; b < dim_; ++b) {
            Vec br = bracket(new_basis.col(a), new_basis.col(b));
            out.set_bracket(a, b, inv->apply(br));
        }
    return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra out(a.dim() + b.dim(), a.name().empty() || b.name().empty() ? "" : a.name() + "+" + b.name());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec v(out.dim());
            for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.sc(i, j, k);
            out.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            Vec v(out.dim());
            for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.sc(i, j, k);
            out.set_bracket(a.dim() + i, a.dim() + j, v);
        }
    return out;
}

}  // namespace liebialg
