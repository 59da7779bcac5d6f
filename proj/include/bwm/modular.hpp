#pragma once

#include <cstdint>
#include <string>

#include "bwm/scalar.hpp"

namespace bwm {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Evaluation point (q0, r0) in F_p, valid for ranks up to n_max.
struct PrimePoint {
  std::uint64_t p = kDefaultPrime;
  std::uint64_t q0 = 0;
  std::uint64_t r0 = 0;
  int n_max = 0;

  /// q0^k != 1 for 1 <= k <= 2 n_max + 2, r0 != +-q0^k for |k| <= 2 n_max + 2,
  /// and the same conditions at the gamma-image (-q0^{-1}, r0).
  bool valid() const;
  /// Point with q0 -> -q0^{-1}; the target of the parameter isomorphism.
  PrimePoint gamma_image() const;
  /// Draws points from a seeded stream until one is valid.
  static PrimePoint draw(std::uint64_t seed, int n_max, std::uint64_t p = kDefaultPrime);

  std::string to_string() const;
  friend bool operator==(const PrimePoint&, const PrimePoint&) = default;
};

bool is_probable_prime(std::uint64_t n);

/// Element of F_p. A default-constructed value is an unbound zero that adopts
/// the modulus of whatever it is combined with.
class ModScalar {
 public:
  ModScalar() = default;
  ModScalar(std::uint64_t value, std::uint64_t modulus) : v_(modulus ? value % modulus : 0), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return p_ != 0 && v_ == 1; }

  ModScalar operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  friend ModScalar operator+(const ModScalar& a, const ModScalar& b);
  friend ModScalar operator-(const ModScalar& a, const ModScalar& b) { return a + (-b); }
  friend ModScalar operator*(const ModScalar& a, const ModScalar& b);
  friend ModScalar operator/(const ModScalar& a, const ModScalar& b) { return a * b.inverse(); }
  ModScalar& operator+=(const ModScalar& o) { return *this = *this + o; }
  ModScalar& operator-=(const ModScalar& o) { return *this = *this - o; }
  ModScalar& operator*=(const ModScalar& o) { return *this = *this * o; }
  ModScalar& operator/=(const ModScalar& o) { return *this = *this / o; }
  ModScalar inverse() const;
  ModScalar pow(std::int64_t e) const;

  friend bool operator==(const ModScalar& a, const ModScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModScalar& a, const ModScalar& b) { return a.v_ != b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Ring homomorphism Q(q, r) -> F_p at the given point.
/// Throws DenominatorVanishes when the denominator is zero there.
ModScalar specialize(const Scalar& f, const PrimePoint& pt);

}  // namespace bwm
