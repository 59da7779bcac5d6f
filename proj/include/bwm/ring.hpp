#pragma once

#include <concepts>
#include <string>

#include "bwm/modular.hpp"
#include "bwm/scalar.hpp"

namespace bwm {

/// Coefficient backend: exact rational functions, or their image in F_p.
/// Every formula is written once over Scalar and mapped through from_scalar.
template <typename R>
concept CoefficientRing = requires(const R& ring, const typename R::Value& v, const Scalar& s) {
  { ring.from_scalar(s) } -> std::same_as<typename R::Value>;
  { ring.zero() } -> std::same_as<typename R::Value>;
  { ring.one() } -> std::same_as<typename R::Value>;
  { v.is_zero() } -> std::same_as<bool>;
  { v + v } -> std::same_as<typename R::Value>;
  { v * v } -> std::same_as<typename R::Value>;
  { v / v } -> std::same_as<typename R::Value>;
  { ring.name() } -> std::convertible_to<std::string>;
};

struct ExactRing {
  using Value = Scalar;
  Value from_scalar(const Scalar& s) const { return s; }
  Value zero() const { return {}; }
  Value one() const { return Scalar(1L); }
  std::string name() const { return "exact"; }
  friend bool operator==(const ExactRing&, const ExactRing&) = default;
};

struct ModularRing {
  using Value = ModScalar;
  PrimePoint point;
  Value from_scalar(const Scalar& s) const { return specialize(s, point); }
  Value zero() const { return {0, point.p}; }
  Value one() const { return {1, point.p}; }
  std::string name() const { return "modular(" + point.to_string() + ")"; }
  friend bool operator==(const ModularRing&, const ModularRing&) = default;
};

}  // namespace bwm
