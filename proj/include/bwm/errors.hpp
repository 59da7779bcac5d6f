#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bwm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A reduction did not reach an irreducible form within its step budget.
struct BudgetExhausted : Error {
  explicit BudgetExhausted(std::string word)
      : Error("reduction budget exhausted at word [" + word + "]"), word(std::move(word)) {}
  std::string word;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct IndexDomain : Error {
  using Error::Error;
};

/// Specialization hit a point where the denominator is zero.
struct DenominatorVanishes : Error {
  using Error::Error;
};

struct ParameterSingular : Error {
  using Error::Error;
};

struct ClosureUnstable : Error {
  using Error::Error;
};

/// A projected Hecke coefficient still depends on r.
struct NonzeroRDegree : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

}  // namespace bwm
