#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace liebialg {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Invariants: always reduced, denominator positive, zero is 0/1. Equality is
/// therefore coefficient-wise everywhere downstream.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    Rational(mpz_class n, mpz_class d);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}

    /// Parses "p/q" or "p" (optional leading sign). Rejects q = 0 and any
    /// trailing garbage.
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const;

    /// Square-root witness: the w >= 0 with w*w == *this, if one exists.
    /// 0 -> 0; negatives and non-squares -> nullopt.
    std::optional<Rational> sqrt_exact() const;

    std::string str() const;

private:
    mpq_class q_;  // canonical at all times
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liebialg
