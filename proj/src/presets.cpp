#include "liebialg/presets.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace liebialg {

LieAlgebra preset_sl2() {
    LieAlgebra g(3, "sl2");
    g.set_bracket(0, 1, {Rational(0), Rational(2), Rational(0)});   // [H,E] = 2E
    g.set_bracket(0, 2, {Rational(0), Rational(0), Rational(-2)});  // [H,F] = -2F
    g.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});   // [E,F] = H
    return g;
}

LieAlgebra preset_heisenberg1() {
    LieAlgebra g(3, "heisenberg1");
    g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});  // [p,q] = hbar
    return g;
}

LieAlgebra preset_heisenberg2() {
    LieAlgebra g(5, "heisenberg2");
    Vec hbar(5);
    hbar[4] = Rational(1);
    g.set_bracket(0, 1, hbar);  // [p1,q1] = hbar
    g.set_bracket(2, 3, hbar);  // [p2,q2] = hbar
    return g;
}

LieAlgebra preset_quaternionic(const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("preset quat: alpha and beta must be nonzero");
    LieAlgebra g(3, "quat:" + alpha.str() + "," + beta.str());
    g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});  // [e1,e2] = e3
    g.set_bracket(1, 2, {beta, Rational(0), Rational(0)});         // [e2,e3] = beta e1
    g.set_bracket(0, 2, {Rational(0), -alpha, Rational(0)});       // [e3,e1] = alpha e2
    return g;
}

LieAlgebra preset_s_lambda(const Rational& l11, const Rational& l12,
                           const Rational& l21, const Rational& l22) {
    LieAlgebra g(3, "slam:" + l11.str() + "," + l12.str() + "," + l21.str() + "," + l22.str());
    g.set_bracket(0, 1, {Rational(0), l11, l12});  // [h,s1]
    g.set_bracket(0, 2, {Rational(0), l21, l22});  // [h,s2]
    return g;
}

LieAlgebra preset_abelian(std::size_t n) {
    if (n == 0) throw std::invalid_argument("preset abelian: dimension must be positive");
    return LieAlgebra(n, "abelian:" + std::to_string(n));
}

namespace {

std::vector<std::string> split_args(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::optional<LieAlgebra> make_preset(std::string_view name) {
    if (name == "sl2") return preset_sl2();
    if (name == "heisenberg1") return preset_heisenberg1();
    if (name == "heisenberg2") return preset_heisenberg2();
    if (name.rfind("quat:", 0) == 0) {
        auto args = split_args(name.substr(5));
        if (args.size() != 2) throw std::invalid_argument("preset quat: expected quat:a,b");
        return preset_quaternionic(Rational::parse(args[0]), Rational::parse(args[1]));
    }
    if (name.rfind("slam:", 0) == 0) {
        auto args = split_args(name.substr(5));
        if (args.size() != 4) throw std::invalid_argument("preset slam: expected slam:a,b,c,d");
        return preset_s_lambda(Rational::parse(args[0]), Rational::parse(args[1]),
                               Rational::parse(args[2]), Rational::parse(args[3]));
    }
    if (name.rfind("abelian:", 0) == 0) {
        auto arg = std::string(name.substr(8));
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(arg, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("preset abelian: expected abelian:n with n a positive integer");
        }
        if (pos != arg.size() || n == 0)
            throw std::invalid_argument("preset abelian: expected abelian:n with n a positive integer");
        return preset_abelian(n);
    }
    return std::nullopt;
}

}  // namespace liebialg
