#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwm/laurent.hpp"

namespace bwm {

/// Element of Q(q, r): a Laurent-polynomial numerator over a denominator kept
/// as a positive integer times a product of registered polynomial factors.
///
/// Keeping the denominator factored means sums only need a factor-wise lcm
/// and a few trial divisions, never a multivariate gcd. The representation is
/// therefore not canonical: two equal scalars may carry different factors.
/// Equality is decided on the numerator of the difference.
class Scalar {
 public:
  using FactorId = std::uint32_t;
  struct FactorPower {
    FactorId id;
    int exp;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
  };

  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(LaurentPoly num) : num_(std::move(num)) {}
  /// num / den for an arbitrary nonzero Laurent polynomial den.
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar q() { return Scalar(LaurentPoly::monomial(1, 1, 0)); }
  static Scalar r() { return Scalar(LaurentPoly::monomial(1, 0, 1)); }
  static Scalar q_pow(int e) { return Scalar(LaurentPoly::monomial(1, e, 0)); }
  static Scalar r_pow(int e) { return Scalar(LaurentPoly::monomial(1, 0, e)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_const_ == 1 && den_.empty() && num_.is_one(); }

  const LaurentPoly& numerator() const { return num_; }
  /// Expanded denominator: positive integer times the factor product.
  LaurentPoly denominator() const;
  const std::vector<FactorPower>& denominator_factors() const { return den_; }
  const Integer& denominator_constant() const { return den_const_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Decided by cross-multiplication through the numerator of a - b.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// q -> -q^{-1}, r fixed.
  Scalar substitute_gamma() const;
  /// True when the rational function does not depend on r.
  bool is_r_free() const;

  /// "(num)/(den)" in parser syntax, or just "num" when den is 1.
  std::string to_string() const;

 private:
  LaurentPoly num_;
  Integer den_const_ = 1;
  std::vector<FactorPower> den_;  // sorted by id, positive exponents

  void cancel();
};

/// Process-wide table of denominator factors: primitive polynomials with
/// nonnegative exponents, no monomial content and positive lex-leading
/// coefficient. Univariate polynomials in q are split into cyclotomic
/// factors on registration. Ids are stable for the lifetime of the process.
class FactorTable {
 public:
  static FactorTable& instance();
  const LaurentPoly& factor(Scalar::FactorId id) const;
  std::size_t size() const;

  /// Splits a nonzero Laurent polynomial as unit * monomial * content * prod factors.
  struct Split {
    int sign = 1;
    int q_shift = 0;
    int r_shift = 0;
    Integer content = 1;
    std::vector<Scalar::FactorPower> factors;
  };
  Split split(const LaurentPoly& p);

 private:
  FactorTable() = default;
  Scalar::FactorId intern(const LaurentPoly& normalized);
  struct Impl;
  Impl& impl() const;
};

/// Normalizes a polynomial: strips monomial content, integer content and
/// sign. Returns the normalized polynomial.
LaurentPoly primitive_part(const LaurentPoly& p, int* q_shift = nullptr, int* r_shift = nullptr,
                           Integer* content = nullptr, int* sign = nullptr);

/// m-th cyclotomic polynomial in q.
const LaurentPoly& cyclotomic(int m);

}  // namespace bwm
