#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "bwm/hecke.hpp"
#include "bwm/idempotents.hpp"
#include "bwm/parser.hpp"

namespace bwm::test {

inline ExactEngine& eng() {
  static ExactEngine e;
  return e;
}

inline Idempotents<ExactRing>& ids() {
  static Idempotents<ExactRing> i(eng());
  return i;
}

/// Parses and evaluates in BWM_rank on the exact backend.
inline Element<Scalar> ex(const std::string& text, int rank) { return evaluate(*parse_expr(text), ids(), rank); }

inline bool equal(const Element<Scalar>& a, const Element<Scalar>& b) { return eng().equals(a, b).equal(); }

inline Element<Scalar> word(int rank, const Word& w) { return eng().word(rank, w); }

inline Word random_word(std::mt19937_64& rng, int n, int max_len) {
  Word w;
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  for (int j = 0; j < len; ++j) {
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    w.append(rng() % 2 ? GenTok::e(i) : GenTok::g(i));
  }
  return w;
}

/// A few words with small r-free coefficients, not reduced.
inline Element<Scalar> random_element(std::mt19937_64& rng, int n, int max_len) {
  const Scalar coeffs[] = {Scalar(1L), Scalar(-3L), Scalar::q(), Scalar::q_pow(-2), qhat()};
  Element<Scalar> x(n);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int j = 0; j < terms; ++j) x.add_term(random_word(rng, n, max_len), coeffs[rng() % 5]);
  return x;
}

/// Random rational function with small integer coefficients.
inline Scalar random_scalar(std::mt19937_64& rng) {
  auto poly = [&] {
    LaurentPoly p;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < terms; ++j) {
      const long c = static_cast<long>(rng() % 7) - 3;
      p += LaurentPoly::monomial(c == 0 ? 1 : c, static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1);
    }
    return p;
  };
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  return Scalar::fraction(poly(), den);
}

}  // namespace bwm::test
