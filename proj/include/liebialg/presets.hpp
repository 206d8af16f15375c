#pragma once

#include "liebialg/lie_algebra.hpp"

#include <optional>
#include <string_view>

namespace liebialg {

LieAlgebra preset_sl2();                                        // (H,E,F): [H,E]=2E, [H,F]=-2F, [E,F]=H
LieAlgebra preset_heisenberg1();                                // (p,q,hbar): [p,q]=hbar
LieAlgebra preset_heisenberg2();                                // (p1,q1,p2,q2,hbar), both pairs bracket to hbar
LieAlgebra preset_quaternionic(const Rational& alpha, const Rational& beta);
LieAlgebra preset_s_lambda(const Rational& l11, const Rational& l12,
                           const Rational& l21, const Rational& l22);
LieAlgebra preset_abelian(std::size_t n);

/// Resolves a preset string: "sl2", "heisenberg1", "heisenberg2",
/// "quat:a,b", "slam:a,b,c,d", "abelian:n". nullopt when the name does not
/// look like a preset; throws std::invalid_argument on malformed parameters.
std::optional<LieAlgebra> make_preset(std::string_view name);

}  // namespace liebialg
