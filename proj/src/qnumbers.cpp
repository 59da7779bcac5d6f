#include "bwm/qnumbers.hpp"

#include <cstdlib>

namespace bwm {

Scalar qhat() { return Scalar(LaurentPoly::monomial(1, 1, 0) - LaurentPoly::monomial(1, -1, 0)); }

Scalar qint(int k) {
  if (k == 0) return {};
  const int m = std::abs(k);
  // q^{m-1} + q^{m-3} + ... + q^{1-m}
  std::vector<LaurentPoly::Term> terms;
  for (int e = m - 1; e >= 1 - m; e -= 2) terms.push_back({ExpKey::pack(e, 0), Integer(1)});
  LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
  return Scalar(k < 0 ? -p : p);
}

Scalar qfact(int k) {
  Scalar out(1L);
  for (int i = 2; i <= k; ++i) out *= qint(i);
  return out;
}

Scalar delta() {
  const Scalar r = Scalar::r();
  return Scalar(1L) + (r - r.inverse()) / qhat();
}

}  // namespace bwm
