#pragma once

#include "liebialg/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liebialg {

/// A place of Q: a finite prime or the archimedean place.
struct Place {
    bool is_infinity = false;
    mpz_class prime{0};

    static Place infinity() { return {true, 0}; }
    static Place at(mpz_class p) { return {false, std::move(p)}; }
    std::string str() const { return is_infinity ? "infinity" : prime.get_str(); }
    friend bool operator==(const Place& a, const Place& b) {
        return a.is_infinity == b.is_infinity && (a.is_infinity || a.prime == b.prime);
    }
};

/// Thrown when an integer lies beyond the supported trial-division range.
class FactorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Prime factorization of |n| by trial division, 64-bit guard. n must be
/// nonzero; primes ascending with multiplicities.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Squarefree integer representative of the square class of a nonzero
/// rational: a = squarefree_part(a) * t^2.
mpz_class squarefree_part(const Rational& a);

/// Diagonal quadratic form d_1 x_1^2 + ... + d_k x_k^2, all d_i nonzero.
struct DiagQuadForm {
    std::vector<Rational> coeffs;

    explicit DiagQuadForm(std::vector<Rational> c);
    std::size_t rank() const { return coeffs.size(); }
    Rational eval(const Vec& x) const;
};

/// Square-class reduction: every coefficient replaced by its squarefree
/// integer representative; the substitution map is recorded so witnesses of
/// the reduced form pull back to exact zeros of the original one.
struct SquarefreeReduction {
    DiagQuadForm reduced;
    std::vector<Rational> scale;  // d_i = s_i * scale_i^2; original x_i = w_i / scale_i

    Vec pull_back(const Vec& w) const;
};
SquarefreeReduction squarefree_reduce(const DiagQuadForm& q);

/// Hilbert symbol (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v. Standard congruence formulas
/// (odd p: valuations + Legendre symbols; p = 2: eps/omega; infinity: sign
/// rule). Throws std::invalid_argument if the finite place is not prime.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// True iff the norm form diag(1, alpha, beta, alpha*beta) of the quaternion
/// algebra with i^2 = -alpha, j^2 = -beta is isotropic over Q; decided by
/// hilbert_symbol(-alpha, -beta, v) = +1 at every relevant place.
bool quaternion_is_split(const Rational& alpha, const Rational& beta);

struct IsotropyResult {
    enum class Status { Isotropic, Anisotropic, BoundExhausted };
    Status status;
    Vec witness;                        // Isotropic: exact nonzero zero of q
    std::optional<Place> obstruction;   // Anisotropic: certifying place
};

/// Searches integer vectors of the squarefree-reduced form in shells of
/// increasing max-norm (per-coordinate value order 0, 1, -1, 2, -2, ...); the
/// first hit is pulled back and returned. When a local obstruction certifies
/// anisotropy (complete for rank <= 4) no search runs. Otherwise the bound can
/// be exhausted, which is reported as its own status.
IsotropyResult isotropic_vector(const DiagQuadForm& q, unsigned long height_bound);

}  // namespace liebialg
