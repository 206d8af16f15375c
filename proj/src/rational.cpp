#include "liebialg/rational.hpp"

#include <stdexcept>

namespace liebialg {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(std::move(n), std::move(d));
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    auto parse_int = [&](std::string_view v) -> mpz_class {
        v = trim(v);
        bool neg = false;
        if (!v.empty() && (v.front() == '+' || v.front() == '-')) {
            neg = v.front() == '-';
            v.remove_prefix(1);
        }
        if (v.empty()) throw std::invalid_argument("Rational: empty integer in \"" + std::string(s) + "\"");
        for (char c : v)
            if (c < '0' || c > '9')
                throw std::invalid_argument("Rational: malformed integer in \"" + std::string(s) + "\"");
        mpz_class z(std::string(v), 10);
        return neg ? mpz_class(-z) : z;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s), 1);
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("Rational: more than one '/' in \"" + std::string(s) + "\"");
    mpz_class n = parse_int(s.substr(0, slash));
    mpz_class d = parse_int(s.substr(slash + 1));
    if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator in \"" + std::string(s) + "\"");
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace liebialg
