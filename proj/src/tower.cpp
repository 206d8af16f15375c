#include "liebialg/tower.hpp"

#include <stdexcept>

namespace liebialg {

namespace {
constexpr unsigned kX = 1, kY = 2, kZ = 4;
const char* kMonomialNames[8] = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
}  // namespace

TowerElement::TowerElement(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero() || beta_.is_zero())
        throw std::invalid_argument("TowerElement: alpha and beta must be nonzero");
}

TowerElement TowerElement::scalar(const Rational& alpha, const Rational& beta, const Rational& c) {
    TowerElement t(alpha, beta);
    t.c_[0] = c;
    return t;
}

TowerElement TowerElement::monomial(const Rational& alpha, const Rational& beta, unsigned mask,
                                    const Rational& c) {
    TowerElement t(alpha, beta);
    t.c_.at(mask) = c;
    return t;
}

bool TowerElement::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool TowerElement::is_rational() const {
    for (unsigned m = 1; m < 8; ++m)
        if (!c_[m].is_zero()) return false;
    return true;
}

void TowerElement::require_same_params(const TowerElement& o) const {
    if (!(alpha_ == o.alpha_) || !(beta_ == o.beta_))
        throw std::invalid_argument("TowerElement: mismatched (alpha, beta) parameters");
}

TowerElement TowerElement::operator-() const {
    TowerElement r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
    require_same_params(o);
    for (unsigned m = 0; m < 8; ++m) c_[m] += o.c_[m];
    return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
    require_same_params(o);
    for (unsigned m = 0; m < 8; ++m) c_[m] -= o.c_[m];
    return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    a.require_same_params(b);
    TowerElement out(a.alpha_, a.beta_);
    for (unsigned m = 0; m < 8; ++m) {
        if (a.c_[m].is_zero()) continue;
        for (unsigned k = 0; k < 8; ++k) {
            if (b.c_[k].is_zero()) continue;
            Rational coef = a.c_[m] * b.c_[k];
            unsigned common = m & k;
            if (common & kX) coef *= a.alpha_;
            if (common & kY) coef *= a.beta_;
            if (common & kZ) coef = -coef;  // z^2 = -1
            out.c_[m ^ k] += coef;
        }
    }
    return out;
}

TowerElement operator*(const Rational& s, TowerElement a) {
    for (auto& v : a.c_) v *= s;
    return a;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    if (!(a.alpha_ == b.alpha_) || !(a.beta_ == b.beta_)) return false;
    for (unsigned m = 0; m < 8; ++m)
        if (!(a.c_[m] == b.c_[m])) return false;
    return true;
}

std::string TowerElement::str() const {
    std::string out;
    for (unsigned m = 0; m < 8; ++m) {
        if (c_[m].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[m].str();
        if (m != 0) out += std::string("*") + kMonomialNames[m];
    }
    return out.empty() ? "0" : out;
}

}  // namespace liebialg
