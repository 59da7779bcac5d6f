#include "bwm/modular.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "bwm/errors.hpp"

namespace bwm {

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, static_cast<std::int64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

bool guards_hold(std::uint64_t p, std::uint64_t q0, std::uint64_t r0, int n_max) {
  if (q0 % p == 0 || r0 % p == 0) return false;
  const int bound = 2 * n_max + 2;
  std::uint64_t qk = 1;
  for (int k = 1; k <= bound; ++k) {
    qk = mulmod(qk, q0, p);
    if (qk == 1) return false;
  }
  for (int k = -bound; k <= bound; ++k) {
    const std::uint64_t m = powmod(q0, k, p);
    if (r0 == m || r0 == (p - m) % p) return false;
  }
  return true;
}

}  // namespace

bool PrimePoint::valid() const {
  if (p < (std::uint64_t{1} << 30) || !is_probable_prime(p)) return false;
  if (!guards_hold(p, q0, r0, n_max)) return false;
  const PrimePoint g = gamma_image();
  return guards_hold(p, g.q0, g.r0, n_max);
}

PrimePoint PrimePoint::gamma_image() const {
  PrimePoint g = *this;
  g.q0 = (p - invmod(q0, p)) % p;
  return g;
}

PrimePoint PrimePoint::draw(std::uint64_t seed, int n_max, std::uint64_t p) {
  if (p < (std::uint64_t{1} << 30) || !is_probable_prime(p)) {
    throw std::invalid_argument("modulus must be a prime larger than 2^30");
  }
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PrimePoint pt{p, 2 + gen() % (p - 3), 2 + gen() % (p - 3), n_max};
    if (pt.valid()) return pt;
  }
  throw std::runtime_error("could not draw a valid evaluation point");
}

std::string PrimePoint::to_string() const {
  std::ostringstream os;
  os << "p=" << p << " q0=" << q0 << " r0=" << r0;
  return os.str();
}

ModScalar operator+(const ModScalar& a, const ModScalar& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  std::uint64_t s = a.v_ + b.v_;
  if (s >= p && p != 0) s -= p;
  return {s, p};
}

ModScalar operator*(const ModScalar& a, const ModScalar& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (p == 0) return {};
  return {mulmod(a.v_, b.v_, p), p};
}

ModScalar ModScalar::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  return {invmod(v_, p_), p_};
}

ModScalar ModScalar::pow(std::int64_t e) const { return {powmod(v_, e, p_), p_}; }

ModScalar specialize(const Scalar& f, const PrimePoint& pt) {
  const std::uint64_t p = pt.p;
  std::uint64_t den = mpz_fdiv_ui(f.denominator_constant().get_mpz_t(), p);
  for (const auto& fp : f.denominator_factors()) {
    const std::uint64_t v = FactorTable::instance().factor(fp.id).evaluate_mod(pt.q0, pt.r0, p);
    den = mulmod(den, powmod(v, fp.exp, p), p);
  }
  if (den == 0) throw DenominatorVanishes("denominator vanishes at " + pt.to_string());
  const std::uint64_t num = f.numerator().evaluate_mod(pt.q0, pt.r0, p);
  return {mulmod(num, invmod(den, p), p), p};
}

}  // namespace bwm
