#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bwm {

using Integer = mpz_class;

/// Exponent pair (q-degree, r-degree) packed into one ordered key.
///
/// The packing preserves lexicographic order on (q, r) and turns monomial
/// multiplication into key addition, which keeps the product loops tight.
class ExpKey {
 public:
  static constexpr std::int64_t kBias = std::int64_t{1} << 31;

  static constexpr std::int64_t pack(int q, int r) {
    return static_cast<std::int64_t>(q) * (std::int64_t{1} << 32) + (static_cast<std::int64_t>(r) + kBias);
  }
  static constexpr int q_of(std::int64_t key) { return static_cast<int>(key >> 32); }
  static constexpr int r_of(std::int64_t key) {
    return static_cast<int>(static_cast<std::int64_t>(static_cast<std::uint32_t>(key)) - kBias);
  }
  static constexpr std::int64_t add(std::int64_t a, std::int64_t b) { return a + b - kBias; }
  static constexpr std::int64_t sub(std::int64_t a, std::int64_t b) { return a - b + kBias; }
};

/// Sparse Laurent polynomial in q and r with integer coefficients.
///
/// Terms are kept sorted by (q-exponent, r-exponent) ascending with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  struct Term {
    std::int64_t key;
    Integer coeff;
    int q_exp() const { return ExpKey::q_of(key); }
    int r_exp() const { return ExpKey::r_of(key); }
  };

  LaurentPoly() = default;
  explicit LaurentPoly(long c);
  explicit LaurentPoly(Integer c);

  static LaurentPoly monomial(Integer c, int q_exp, int r_exp);
  /// Builds from unsorted (q, r, coeff) triples; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == ExpKey::pack(0, 0)); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.back(); }

  int min_q() const;
  int max_q() const;
  int min_r() const;
  int max_r() const;
  bool is_r_free() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly shifted(int dq, int dr) const;
  LaurentPoly pow(unsigned e) const;

  /// gcd of the coefficients (positive), 0 for the zero polynomial.
  Integer content() const;
  LaurentPoly divided_by_integer(const Integer& c) const;

  /// Exact division by a polynomial with nonnegative exponents and no
  /// monomial content. Returns nothing if the division is not exact.
  std::optional<LaurentPoly> exact_quotient(const LaurentPoly& divisor) const;

  /// q -> -q^{-1}, r fixed.
  LaurentPoly substitute_gamma() const;
  /// d/dr, term-wise.
  LaurentPoly derivative_r() const;

  /// Evaluates at (q, r) modulo p; q and r must be invertible.
  std::uint64_t evaluate_mod(std::uint64_t q, std::uint64_t r, std::uint64_t p) const;

  /// Infix rendering parseable by the expression parser, e.g. "3*q^2*r^-1 - q".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Total order (size, then keys, then coefficients); only for keyed containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::int64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace bwm
