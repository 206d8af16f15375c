#pragma once

#include "liebialg/rational.hpp"

#include <array>
#include <string>

namespace liebialg {

/// Element of the commutative 8-dimensional extension algebra
/// Q[x,y,z]/(x^2 - alpha, y^2 - beta, z^2 + 1).
///
/// Coefficients are indexed by the monomial bitmask: bit 0 = x, bit 1 = y,
/// bit 2 = z (so mask 0 is the rational coordinate, mask 7 is xyz). This is a
/// commutative ring, not in general a field; division is never requested of it.
class TowerElement {
public:
    TowerElement(Rational alpha, Rational beta);

    static TowerElement scalar(const Rational& alpha, const Rational& beta, const Rational& c);
    static TowerElement monomial(const Rational& alpha, const Rational& beta, unsigned mask,
                                 const Rational& c = Rational(1));

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    const Rational& coeff(unsigned mask) const { return c_.at(mask); }
    void set_coeff(unsigned mask, const Rational& v) { c_.at(mask) = v; }

    bool is_zero() const;
    /// Only the 1-coordinate may be nonzero.
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    TowerElement operator-() const;
    TowerElement& operator+=(const TowerElement& o);
    TowerElement& operator-=(const TowerElement& o);
    friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
    friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const Rational& s, TowerElement a);

    friend bool operator==(const TowerElement& a, const TowerElement& b);

    std::string str() const;

private:
    std::array<Rational, 8> c_;
    Rational alpha_, beta_;

    void require_same_params(const TowerElement& o) const;
};

}  // namespace liebialg
