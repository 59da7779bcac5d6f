#pragma once

#include "bwm/engine.hpp"

namespace bwm {

/// Applies f to every word, keeping coefficients; the result is not reduced.
template <typename V, typename F>
Element<V> map_words(const Element<V>& x, int rank, F&& f) {
  Element<V> out(rank);
  for (const auto& [w, c] : x.terms()) out.add_term(f(w), c);
  return out;
}

/// g_i -> g_{n-i}, e_i -> e_{n-i}, n = rank of x.
inline Word alpha_word(const Word& w, int n) {
  Word out;
  for (const GenTok& t : w.tokens()) out.append({t.kind, n - t.index});
  return out;
}

inline Word shift_word(const Word& w, int k) {
  Word out;
  for (const GenTok& t : w.tokens()) out.append({t.kind, t.index + k});
  return out;
}

/// Flip automorphism of BWM_n, n = rank(x).
template <CoefficientRing R>
Element<typename R::Value> alpha(Engine<R>& eng, const Element<typename R::Value>& x) {
  const int n = x.rank();
  return eng.reduce(map_words(x, n, [n](const Word& w) { return alpha_word(w, n); }));
}

/// Reversal antiautomorphism.
template <CoefficientRing R>
Element<typename R::Value> beta(Engine<R>& eng, const Element<typename R::Value>& x) {
  return eng.reduce(map_words(x, x.rank(), [](const Word& w) { return w.reversed(); }));
}

/// Parameter isomorphism q -> -q^{-1} on coefficients, words fixed.
inline Element<Scalar> gamma(Engine<ExactRing>& eng, const Element<Scalar>& x) {
  Element<Scalar> out(x.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(w, c.substitute_gamma());
  return eng.reduce(out);
}

/// Modular form of gamma. An element computed at the point (-q0^{-1}, r0)
/// is read as an element at (q0, r0): substituting q -> -q^{-1} and then
/// evaluating at q0 is evaluation at -q0^{-1}. `target` must live at the
/// point whose gamma image produced x.
inline Element<ModScalar> gamma_transport(Engine<ModularRing>& target, const Element<ModScalar>& x) {
  Element<ModScalar> out(x.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(w, ModScalar(c.value(), target.ring().point.p));
  return target.reduce(out);
}

/// s^k: indices raised by k, result in rank n_target, reduced there.
/// RankMismatch when a shifted index reaches n_target.
template <CoefficientRing R>
Element<typename R::Value> shift(Engine<R>& eng, const Element<typename R::Value>& x, int k, int n_target) {
  if (k < 0) throw IndexDomain("negative shift");
  return eng.reduce(map_words(x, n_target, [k](const Word& w) { return shift_word(w, k); }));
}

}  // namespace bwm
