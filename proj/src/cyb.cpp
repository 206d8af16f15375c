#include "liebialg/cyb.hpp"

#include <stdexcept>

namespace liebialg {

Tensor2 act(const LieAlgebra& g, const Vec& x, const Tensor2& t) {
    if (t.dim() != g.dim()) throw std::invalid_argument("act: tensor/algebra dimension mismatch");
    const std::size_t n = g.dim();
    const Mat a = g.ad(x);
    Tensor2 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = t.at(i, j);
            if (v.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p) {
                if (!a.at(p, i).is_zero()) out.at(p, j) += a.at(p, i) * v;
                if (!a.at(p, j).is_zero()) out.at(i, p) += a.at(p, j) * v;
            }
        }
    return out;
}

Tensor3 act(const LieAlgebra& g, const Vec& x, const Tensor3& t) {
    if (t.dim() != g.dim()) throw std::invalid_argument("act: tensor/algebra dimension mismatch");
    const std::size_t n = g.dim();
    const Mat a = g.ad(x);
    Tensor3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& v = t.at(i, j, k);
                if (v.is_zero()) continue;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!a.at(p, i).is_zero()) out.at(p, j, k) += a.at(p, i) * v;
                    if (!a.at(p, j).is_zero()) out.at(i, p, k) += a.at(p, j) * v;
                    if (!a.at(p, k).is_zero()) out.at(i, j, p) += a.at(p, k) * v;
                }
            }
    return out;
}

Tensor3 cyb(const LieAlgebra& g, const Tensor2& r) {
    if (r.dim() != g.dim()) throw std::invalid_argument("cyb: tensor/algebra dimension mismatch");
    const std::size_t n = g.dim();

    struct Entry {
        std::size_t i, j;
        Rational v;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero()) entries.push_back({i, j, r.at(i, j)});

    Tensor3 out(n);
    for (const auto& e1 : entries)
        for (const auto& e2 : entries) {
            const Rational v = e1.v * e2.v;
            // [r12,r13]: [b_a, b_c] tensor b_b tensor b_d
            for (std::size_t k = 0; k < n; ++k)
                if (!g.sc(e1.i, e2.i, k).is_zero()) out.at(k, e1.j, e2.j) += v * g.sc(e1.i, e2.i, k);
            // [r12,r23]: b_a tensor [b_b, b_c] tensor b_d
            for (std::size_t k = 0; k < n; ++k)
                if (!g.sc(e1.j, e2.i, k).is_zero()) out.at(e1.i, k, e2.j) += v * g.sc(e1.j, e2.i, k);
            // [r13,r23]: b_a tensor b_c tensor [b_b, b_d]
            for (std::size_t k = 0; k < n; ++k)
                if (!g.sc(e1.j, e2.j, k).is_zero()) out.at(e1.i, e2.i, k) += v * g.sc(e1.j, e2.j, k);
        }
    return out;
}

bool Cobracket::is_zero() const {
    for (const auto& t : images)
        if (!t.is_zero()) return false;
    return true;
}

Tensor2 Cobracket::apply(const Vec& x) const {
    if (x.size() != images.size()) throw std::invalid_argument("Cobracket::apply: size mismatch");
    Tensor2 out(images.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        out += x[i] * images[i];
    }
    return out;
}

Cobracket delta_r(const LieAlgebra& g, const Tensor2& r) {
    Cobracket d;
    d.r = r;
    d.images.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) d.images.push_back(act(g, basis_vec(g.dim(), i), r));
    return d;
}

Cobracket cobracket_from_images(std::vector<Tensor2> images) {
    Cobracket d;
    d.images = std::move(images);
    return d;
}

Tensor3 schouten_bilinear(const LieAlgebra& g, const Tensor2& s, const Tensor2& t) {
    if (!s.is_skew() || !t.is_skew())
        throw std::invalid_argument("schouten_bilinear: arguments must be skew-symmetric");
    return cyb(g, s + t) - cyb(g, s) - cyb(g, t);
}

CoalgebraReport check_coalgebra(const LieAlgebra& g, const Cobracket& delta) {
    if (delta.dim() != g.dim()) throw std::invalid_argument("check_coalgebra: dimension mismatch");
    const std::size_t n = g.dim();
    CoalgebraReport rep;
    for (std::size_t i = 0; i < n; ++i)
        if (!delta.images[i].is_skew()) rep.anti_violations.push_back(i);
    rep.co_anticommutative = rep.anti_violations.empty();

    for (std::size_t i = 0; i < n; ++i) {
        const Tensor2& d = delta.images[i];
        // (id tensor delta)(delta(b_i))
        Tensor3 u(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Rational& v = d.at(a, b);
                if (v.is_zero()) continue;
                const Tensor2& db = delta.images[b];
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t e = 0; e < n; ++e) {
                        if (db.at(c, e).is_zero()) continue;
                        u.at(a, c, e) += v * db.at(c, e);
                    }
            }
        Tensor3 cy = u.cycled();
        Tensor3 total = u + cy + cy.cycled();
        if (!total.is_zero()) rep.jacobi_violations.push_back(i);
    }
    rep.co_jacobi = rep.jacobi_violations.empty();
    return rep;
}

BialgebraReport check_bialgebra(const LieAlgebra& g, const Cobracket& delta) {
    BialgebraReport rep;
    rep.coalgebra = check_coalgebra(g, delta);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // delta([b_i, b_j]) by linearity
            Tensor2 lhs(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (g.sc(i, j, k).is_zero()) continue;
                lhs += g.sc(i, j, k) * delta.images[k];
            }
            Tensor2 rhs = act(g, basis_vec(n, i), delta.images[j]) - act(g, basis_vec(n, j), delta.images[i]);
            if (!(lhs == rhs)) rep.derivation_violations.push_back({i, j});
        }
    rep.derivation = rep.derivation_violations.empty();
    return rep;
}

DrinfeldResult drinfeld_criterion(const LieAlgebra& g, const Tensor2& r) {
    const std::size_t n = g.dim();
    DrinfeldResult res;
    const Tensor2 sym = r + r.switched();
    res.sym_invariant = true;
    for (std::size_t i = 0; i < n && res.sym_invariant; ++i)
        if (!act(g, basis_vec(n, i), sym).is_zero()) res.sym_invariant = false;
    const Tensor3 c = cyb(g, r);
    res.cyb_invariant = true;
    for (std::size_t i = 0; i < n && res.cyb_invariant; ++i)
        if (!act(g, basis_vec(n, i), c).is_zero()) res.cyb_invariant = false;
    res.is_bialgebra = res.sym_invariant && res.cyb_invariant;
    return res;
}

}  // namespace liebialg
