#pragma once

#include "bwm/scalar.hpp"

namespace bwm {

/// q - q^{-1}.
Scalar qhat();

/// Quantum integer [k] = (q^k - q^{-k}) / (q - q^{-1}); [-k] = -[k], [0] = 0.
Scalar qint(int k);

/// [1][2]...[k]; qfact(0) = 1.
Scalar qfact(int k);

/// Loop value: e_i e_i = delta * e_i.
///
/// Multiplying g_i^2 = 1 + qhat g_i - r^{-1} qhat e_i by e_i on the right and
/// using g_i e_i = r^{-1} e_i twice gives
///   r^{-2} e_i = e_i + qhat r^{-1} e_i - r^{-1} qhat e_i^2,
/// hence e_i^2 = (1 + (r - r^{-1}) / qhat) e_i.
Scalar delta();

/// q -> -q^{-1}, r fixed. An involutive ring automorphism of Q(q, r).
inline Scalar subst_gamma(const Scalar& f) { return f.substitute_gamma(); }

}  // namespace bwm
