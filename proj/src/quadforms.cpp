#include "liebialg/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace liebialg {

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    if (sgn(n) == 0) throw std::invalid_argument("factorize: zero input");
    mpz_class m = abs(n);
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 64)
        throw FactorError("factorize: |" + n.get_str() + "| exceeds the 64-bit trial-division guard");

    std::vector<std::pair<mpz_class, unsigned>> out;
    auto strip = [&](const mpz_class& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    };
    strip(2);
    for (mpz_class p = 3; p * p <= m && p < 1000000; p += 2) strip(p);
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
            out.push_back({m, 1});
        } else if (mpz_perfect_square_p(m.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            if (mpz_probab_prime_p(r.get_mpz_t(), 40) > 0)
                out.push_back({r, 2});
            else
                throw FactorError("factorize: composite cofactor " + m.get_str() + " beyond trial-division range");
        } else {
            throw FactorError("factorize: composite cofactor " + m.get_str() + " beyond trial-division range");
        }
    }
    return out;
}

mpz_class squarefree_part(const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree_part: zero input");
    mpz_class m = a.num() * a.den();
    mpz_class s(a.sign());
    for (const auto& [p, e] : factorize(m))
        if (e % 2 == 1) s *= p;
    return s;
}

DiagQuadForm::DiagQuadForm(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("DiagQuadForm: empty coefficient list");
    for (const auto& d : coeffs)
        if (d.is_zero()) throw std::invalid_argument("DiagQuadForm: zero coefficient");
}

Rational DiagQuadForm::eval(const Vec& x) const {
    if (x.size() != coeffs.size()) throw std::invalid_argument("DiagQuadForm::eval: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i] * x[i];
    return s;
}

SquarefreeReduction squarefree_reduce(const DiagQuadForm& q) {
    std::vector<Rational> red;
    std::vector<Rational> scale;
    for (const auto& d : q.coeffs) {
        mpz_class m = d.num() * d.den();
        mpz_class sq(1);
        mpz_class s(d.sign());
        for (const auto& [p, e] : factorize(m)) {
            if (e % 2 == 1) s *= p;
            for (unsigned t = 0; t < e / 2; ++t) sq *= p;
        }
        red.emplace_back(Rational(s));
        scale.emplace_back(Rational(sq, d.den()));  // d = s * (sq/den)^2
    }
    return {DiagQuadForm(std::move(red)), std::move(scale)};
}

Vec SquarefreeReduction::pull_back(const Vec& w) const {
    if (w.size() != scale.size()) throw std::invalid_argument("pull_back: size mismatch");
    Vec x(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) x[i] = w[i] / scale[i];
    return x;
}

namespace {

// (u - 1)/2 mod 2 for odd u
bool eps_odd(const mpz_class& u) {
    mpz_class t = (u - 1) / 2;
    return mpz_odd_p(t.get_mpz_t()) != 0;
}

// (u^2 - 1)/8 mod 2 for odd u
bool omega_odd(const mpz_class& u) {
    mpz_class t = (u * u - 1) / 8;
    return mpz_odd_p(t.get_mpz_t()) != 0;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

void require_place(const Place& v) {
    if (v.is_infinity) return;
    if (v.prime < 2 || mpz_probab_prime_p(v.prime.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("hilbert_symbol: place " + v.prime.get_str() + " is not prime and not infinity");
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    require_place(v);
    const mpz_class sa = squarefree_part(a), sb = squarefree_part(b);

    if (v.is_infinity) return (sgn(sa) < 0 && sgn(sb) < 0) ? -1 : 1;

    if (v.prime == 2) {
        // squarefree values have 2-adic valuation 0 or 1
        mpz_class u = sa, w = sb;
        unsigned va = 0, vb = 0;
        if (mpz_even_p(u.get_mpz_t())) { u /= 2; va = 1; }
        if (mpz_even_p(w.get_mpz_t())) { w /= 2; vb = 1; }
        bool exp = (eps_odd(u) && eps_odd(w));
        if (va == 1 && omega_odd(w)) exp = !exp;
        if (vb == 1 && omega_odd(u)) exp = !exp;
        return exp ? -1 : 1;
    }

    // odd prime: (a,b)_p = (-1/p)^{va*vb} (u/p)^{vb} (w/p)^{va}
    unsigned long va = 0, vb = 0;
    mpz_class u = sa, w = sb;
    while (mpz_divisible_p(u.get_mpz_t(), v.prime.get_mpz_t())) {
        u /= v.prime;
        ++va;
    }
    while (mpz_divisible_p(w.get_mpz_t(), v.prime.get_mpz_t())) {
        w /= v.prime;
        ++vb;
    }
    int res = 1;
    if ((va & 1) && (vb & 1)) res *= legendre(mpz_class(-1), v.prime);
    if (vb & 1) res *= legendre(u, v.prime);
    if (va & 1) res *= legendre(w, v.prime);
    return res;
}

namespace {

std::vector<Place> relevant_places(const std::vector<mpz_class>& squarefree_values) {
    std::set<mpz_class> odd_primes;
    bool saw_even = false;
    for (const auto& s : squarefree_values)
        for (const auto& [p, e] : factorize(s)) {
            (void)e;
            if (p == 2)
                saw_even = true;
            else
                odd_primes.insert(p);
        }
    (void)saw_even;
    std::vector<Place> places{Place::infinity(), Place::at(2)};
    for (const auto& p : odd_primes) places.push_back(Place::at(p));
    return places;
}

}  // namespace

bool quaternion_is_split(const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("quaternion_is_split: alpha and beta must be nonzero");
    const Rational a = -alpha, b = -beta;
    for (const auto& v : relevant_places({squarefree_part(a), squarefree_part(b)}))
        if (hilbert_symbol(a, b, v) != 1) return false;
    return true;
}

namespace {

bool is_local_square(const mpz_class& squarefree, const Place& v) {
    if (v.is_infinity) return sgn(squarefree) > 0;
    if (v.prime == 2) {
        if (mpz_even_p(squarefree.get_mpz_t())) return false;
        mpz_class r = squarefree % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    if (mpz_divisible_p(squarefree.get_mpz_t(), v.prime.get_mpz_t())) return false;
    return legendre(squarefree, v.prime) == 1;
}

// Complete local anisotropy certification for rank <= 4 diagonal forms with
// squarefree integer coefficients; only the sign test for rank >= 5.
std::optional<Place> local_obstruction(const std::vector<mpz_class>& s) {
    const std::size_t k = s.size();
    bool all_pos = true, all_neg = true;
    for (const auto& d : s) {
        if (sgn(d) > 0) all_neg = false;
        if (sgn(d) < 0) all_pos = false;
    }
    if (all_pos || all_neg) return Place::infinity();  // definite
    if (k == 1) return Place::infinity();

    if (k == 2) {
        mpz_class t = squarefree_part(Rational(mpz_class(-s[0] * s[1])));
        if (t == 1) return std::nullopt;  // isotropic
        if (sgn(t) < 0) return Place::infinity();
        if (mpz_even_p(t.get_mpz_t())) return Place::at(2);
        return Place::at(factorize(t).front().first);
    }

    if (k == 3) {
        const Rational a(mpz_class(-s[0] * s[2])), b(mpz_class(-s[1] * s[2]));
        for (const auto& v : relevant_places(s))
            if (hilbert_symbol(a, b, v) != 1) return v;
        return std::nullopt;
    }

    if (k == 4) {
        mpz_class prod(1);
        for (const auto& d : s) prod *= d;
        const mpz_class disc = squarefree_part(Rational(prod));
        for (const auto& v : relevant_places(s)) {
            if (v.is_infinity) continue;  // indefinite here
            if (!is_local_square(disc, v)) continue;
            int hasse = 1;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    hasse *= hilbert_symbol(Rational(mpz_class(s[i])), Rational(mpz_class(s[j])), v);
            const int minus_one_pair = (v.prime == 2) ? -1 : 1;  // (-1,-1)_v
            if (hasse == -minus_one_pair) return v;
        }
        return std::nullopt;
    }

    return std::nullopt;  // rank >= 5: Hasse-Minkowski beyond scope, sign test only
}

// Shell search on the reduced integer form. Vectors are ordered by max-norm,
// then lexicographically on (x_{k-1}, ..., x_1, x_0) with per-coordinate value
// order 0, 1, -1, 2, -2, ...; x_0 is recovered by a perfect-square solve.
class ShellSearch {
public:
    ShellSearch(std::vector<long> coeffs, unsigned long bound)
        : s_(std::move(coeffs)), bound_(bound), x_(s_.size(), 0) {}

    std::optional<std::vector<long>> run() {
        for (unsigned long m = 1; m <= bound_; ++m) {
            shell_ = static_cast<long>(m);
            if (descend(s_.size() - 1)) return x_;
        }
        return std::nullopt;
    }

private:
    std::vector<long> s_;
    unsigned long bound_;
    std::vector<long> x_;
    long shell_ = 0;

    // positions pos..1 enumerated; position 0 solved
    bool descend(std::size_t pos) {
        if (pos == 0) return solve_head();
        for (long t = 0; t <= shell_; ++t)
            for (int sign = 0; sign < (t == 0 ? 1 : 2); ++sign) {
                x_[pos] = sign == 0 ? t : -t;
                if (descend(pos - 1)) return true;
            }
        return false;
    }

    bool solve_head() {
        long rest = 0;
        long tail_max = 0;
        for (std::size_t i = 1; i < s_.size(); ++i) {
            rest += s_[i] * x_[i] * x_[i];
            tail_max = std::max(tail_max, std::abs(x_[i]));
        }
        const long num = -rest;
        if (num % s_[0] != 0) return false;
        const long sq = num / s_[0];
        if (sq < 0 || sq > shell_ * shell_) return false;
        long t = static_cast<long>(std::sqrt(static_cast<double>(sq)));
        while (t > 0 && t * t > sq) --t;
        while ((t + 1) * (t + 1) <= sq) ++t;
        if (t * t != sq) return false;
        if (std::max(t, tail_max) != shell_) return false;  // covered by another shell
        if (t == 0 && tail_max == 0) return false;          // zero vector
        x_[0] = t;  // +t precedes -t in the value order and both evaluate equally
        return true;
    }
};

}  // namespace

IsotropyResult isotropic_vector(const DiagQuadForm& q, unsigned long height_bound) {
    SquarefreeReduction red = squarefree_reduce(q);
    std::vector<mpz_class> s;
    for (const auto& c : red.reduced.coeffs) s.push_back(c.num());

    if (auto obs = local_obstruction(s)) return {IsotropyResult::Status::Anisotropic, {}, *obs};

    // int64 guard: max possible |sum| must fit comfortably
    long maxc = 0;
    bool fits = true;
    std::vector<long> cl;
    for (const auto& d : s) {
        if (!d.fits_slong_p()) {
            fits = false;
            break;
        }
        cl.push_back(d.get_si());
        maxc = std::max(maxc, std::abs(cl.back()));
    }
    const double worst = static_cast<double>(maxc) * static_cast<double>(height_bound) *
                         static_cast<double>(height_bound) * static_cast<double>(s.size());
    if (!fits || worst > 9.0e18)
        throw FactorError("isotropic_vector: reduced coefficients or bound exceed the 64-bit search range");

    ShellSearch search(cl, height_bound);
    if (auto w = search.run()) {
        Vec wr(w->size());
        for (std::size_t i = 0; i < w->size(); ++i) wr[i] = Rational(w->at(i));
        Vec x = red.pull_back(wr);
        if (!(q.eval(x).is_zero()))
            throw std::logic_error("isotropic_vector: pulled-back witness failed re-evaluation");
        return {IsotropyResult::Status::Isotropic, std::move(x), std::nullopt};
    }
    return {IsotropyResult::Status::BoundExhausted, {}, std::nullopt};
}

}  // namespace liebialg
