#include "liebialg/classify3.hpp"

#include <stdexcept>

namespace liebialg {

std::string Classification3::kind_name() const {
    switch (kind) {
        case Kind::Abelian: return "abelian";
        case Kind::Heisenberg: return "heisenberg";
        case Kind::SLambda: return "s_lambda";
        case Kind::Simple: return "simple";
    }
    return "?";
}

namespace {

Rational kappa(const Mat& k, const Vec& u, const Vec& v) {
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero() || k.at(i, j).is_zero()) continue;
            s += u[i] * k.at(i, j) * v[j];
        }
    }
    return s;
}

// Integer-primitive rescaling with positive leading entry, for determinism.
Vec primitive(const Vec& v) {
    mpz_class l(1), g(0);
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_class n = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    Rational scale{l, g};
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
    for (const auto& x : out) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

// c = coefficient with b == c * dir (dir nonzero); nullopt when b is not
// proportional to dir.
std::optional<Rational> proportionality(const Vec& b, const Vec& dir) {
    std::size_t k = 0;
    while (k < dir.size() && dir[k].is_zero()) ++k;
    if (k == dir.size()) return std::nullopt;
    Rational c = b[k] / dir[k];
    if (!(b == vec_scale(c, dir))) return std::nullopt;
    return c;
}

}  // namespace

QuaternionicPresentation quaternionic_presentation(const LieAlgebra& g) {
    if (g.dim() != 3) throw std::invalid_argument("quaternionic_presentation: dimension must be 3");
    if (g.derived_subalgebra().dim() != 3)
        throw std::invalid_argument("quaternionic_presentation: not simple (Killing form degenerate or algebra not perfect)");
    const Mat k = g.killing_form();
    if (det(k).is_zero())
        throw std::invalid_argument("quaternionic_presentation: not simple (Killing form degenerate or algebra not perfect)");

    // candidate pool: standard basis vectors and pairwise sums/differences
    std::vector<Vec> pool;
    for (std::size_t i = 0; i < 3; ++i) pool.push_back(basis_vec(3, i));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            pool.push_back(vec_add(basis_vec(3, i), basis_vec(3, j)));
            pool.push_back(vec_sub(basis_vec(3, i), basis_vec(3, j)));
        }

    std::vector<Vec> f;
    std::vector<Rational> norms;
    for (int step = 0; step < 3; ++step) {
        bool found = false;
        for (const auto& cand : pool) {
            // fraction-free projection against the chosen f's
            Vec w = cand;
            Rational prod(1);
            for (const auto& n : norms) prod *= n;
            w = vec_scale(prod, w);
            for (std::size_t m = 0; m < f.size(); ++m) {
                Rational coef = kappa(k, cand, f[m]);
                for (std::size_t t = 0; t < norms.size(); ++t)
                    if (t != m) coef *= norms[t];
                w = vec_sub(w, vec_scale(coef, f[m]));
            }
            if (vec_is_zero(w)) continue;
            w = primitive(w);
            Rational nw = kappa(k, w, w);
            if (nw.is_zero()) continue;
            f.push_back(w);
            norms.push_back(nw);
            found = true;
            break;
        }
        if (!found)
            throw std::invalid_argument("quaternionic_presentation: not simple (no anisotropic Killing vector found)");
    }

    // in a Killing-orthogonal basis the brackets are cyclic
    auto c3 = proportionality(g.bracket(f[0], f[1]), f[2]);
    auto c1 = proportionality(g.bracket(f[1], f[2]), f[0]);
    auto c2 = proportionality(g.bracket(f[2], f[0]), f[1]);
    if (!c3 || !c1 || !c2 || c3->is_zero() || c1->is_zero() || c2->is_zero())
        throw std::invalid_argument("quaternionic_presentation: not simple (non-cyclic orthogonal brackets)");

    QuaternionicPresentation out;
    out.alpha = *c2 * *c3;
    out.beta = *c1 * *c3;
    Vec e3 = g.bracket(f[0], f[1]);
    out.new_basis = Mat(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        out.new_basis.at(i, 0) = f[0][i];
        out.new_basis.at(i, 1) = f[1][i];
        out.new_basis.at(i, 2) = e3[i];
    }

    // postcondition replay for Eq-(3)-form brackets
    const Vec e1 = out.new_basis.col(0), e2 = out.new_basis.col(1), e3c = out.new_basis.col(2);
    if (!(g.bracket(e1, e2) == e3c) || !(g.bracket(e2, e3c) == vec_scale(out.beta, e1)) ||
        !(g.bracket(e3c, e1) == vec_scale(out.alpha, e2)))
        throw std::logic_error("quaternionic_presentation: canonical bracket replay failed");
    return out;
}

Classification3 classify3(const LieAlgebra& g) {
    if (g.dim() != 3) throw std::invalid_argument("classify3: dimension must be 3");
    g.require_valid();

    Classification3 out;
    const Subspace derived = g.derived_subalgebra();

    if (derived.dim() == 0) {
        out.kind = Classification3::Kind::Abelian;
        out.basis_change = Mat::identity(3);
        return out;
    }

    if (derived.dim() == 3) {
        QuaternionicPresentation qp = quaternionic_presentation(g);
        out.kind = Classification3::Kind::Simple;
        out.alpha = qp.alpha;
        out.beta = qp.beta;
        out.basis_change = qp.new_basis;
        return out;
    }

    const Subspace z = g.center();
    if (derived.dim() == 1 && z.contains(derived)) {
        // Heisenberg: any nonzero bracket pair gives (p, q, hbar)
        out.kind = Classification3::Kind::Heisenberg;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                Vec h = g.bracket_basis(i, j);
                if (vec_is_zero(h)) continue;
                out.basis_change = Mat(3, 3);
                for (std::size_t t = 0; t < 3; ++t) {
                    out.basis_change.at(t, 0) = basis_vec(3, i)[t];
                    out.basis_change.at(t, 1) = basis_vec(3, j)[t];
                    out.basis_change.at(t, 2) = h[t];
                }
                return out;
            }
        throw std::logic_error("classify3: nonzero derived subalgebra without a nonzero bracket");
    }

    // s_Lambda: find a 2-dimensional abelian ideal I containing [g,g]
    Vec s1, s2;
    if (derived.dim() == 2) {
        s1 = derived.basis_vector(0);
        s2 = derived.basis_vector(1);
        if (!vec_is_zero(g.bracket(s1, s2)))
            throw std::invalid_argument(
                "classify3: two-dimensional non-abelian derived subalgebra contradicts the classification");
    } else {
        // dim [g,g] = 1, not central: extend by a centralizing vector
        const Vec e = derived.basis_vector(0);
        const Subspace centralizer = Subspace::row_span(kernel_basis(g.ad(e)));
        bool found = false;
        for (std::size_t i = 0; i < centralizer.dim() && !found; ++i) {
            Vec cand = centralizer.basis_vector(i);
            if (derived.contains(cand)) continue;
            s1 = e;
            s2 = cand;
            found = true;
        }
        if (!found) throw std::logic_error("classify3: centralizer of the derived line is too small");
    }

    const Subspace ideal = Subspace::span(3, {s1, s2});
    std::size_t h_index = 0;
    while (h_index < 3 && ideal.contains(basis_vec(3, h_index))) ++h_index;
    if (h_index == 3) throw std::logic_error("classify3: no standard basis vector outside the ideal");
    const Vec h = basis_vec(3, h_index);

    // lambda rows: [h, s_i] = lambda(i,0) s1 + lambda(i,1) s2
    Mat span(3, 2);
    for (std::size_t t = 0; t < 3; ++t) {
        span.at(t, 0) = s1[t];
        span.at(t, 1) = s2[t];
    }
    out.lambda = Mat(2, 2);
    const Vec imgs[2] = {g.bracket(h, s1), g.bracket(h, s2)};
    for (int r = 0; r < 2; ++r) {
        auto coords = solve(span, imgs[r]);
        if (!coords) throw std::logic_error("classify3: ad h does not preserve the abelian ideal");
        out.lambda.at(r, 0) = (*coords)[0];
        out.lambda.at(r, 1) = (*coords)[1];
    }

    out.kind = Classification3::Kind::SLambda;
    out.basis_change = Mat(3, 3);
    for (std::size_t t = 0; t < 3; ++t) {
        out.basis_change.at(t, 0) = h[t];
        out.basis_change.at(t, 1) = s1[t];
        out.basis_change.at(t, 2) = s2[t];
    }
    return out;
}

LieAlgebra canonical_form(const Classification3& c) {
    LieAlgebra g(3);
    switch (c.kind) {
        case Classification3::Kind::Abelian:
            break;
        case Classification3::Kind::Heisenberg:
            g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
            break;
        case Classification3::Kind::SLambda:
            g.set_bracket(0, 1, {Rational(0), c.lambda.at(0, 0), c.lambda.at(0, 1)});
            g.set_bracket(0, 2, {Rational(0), c.lambda.at(1, 0), c.lambda.at(1, 1)});
            break;
        case Classification3::Kind::Simple:
            g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
            g.set_bracket(1, 2, {c.beta, Rational(0), Rational(0)});
            g.set_bracket(0, 2, {Rational(0), -c.alpha, Rational(0)});
            break;
    }
    return g;
}

}  // namespace liebialg
