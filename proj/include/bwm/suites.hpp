#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwm/engine.hpp"
#include "bwm/linalg.hpp"
#include "bwm/report.hpp"

namespace bwm {

struct SuiteOptions {
  int n = 3;               ///< checks run at every rank up to n
  std::uint64_t seed = 1;  ///< random words and elements
  bool timings = false;    ///< record wall times (reports are then not reproducible)
  std::size_t budget = kDefaultBudget;
};

/// relations, symmetrizer, antisymmetrizer, lemma, hecke, morphisms.
const std::vector<std::string>& suite_names();

/// `suite` is one of suite_names() or "all"; std::invalid_argument otherwise.
Report run_suite(const std::string& suite, const SuiteOptions& opts);
Report run_suite(const std::string& suite, const PrimePoint& point, const SuiteOptions& opts);

/// (2n-1)!!
std::size_t brauer_dimension(int n);

/// Basis of {v : v t = lambda v for t = g_1..g_{n-1}} in the coordinates of
/// `basis`, from the right action matrices.
template <CoefficientRing R>
std::vector<std::vector<typename R::Value>> right_eigenspace(Engine<R>& eng, int n, const std::vector<Word>& basis,
                                                             const typename R::Value& lambda) {
  using V = typename R::Value;
  const std::size_t d = basis.size();
  Matrix<V> eqs;
  for (int i = 1; i < n; ++i) {
    const Matrix<V> m = eng.right_action_matrix(n, GenTok::g(i), basis);
    // (v M)_c = lambda v_c  <=>  sum_j v_j (M[j][c] - lambda [j == c]) = 0
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<V> row(d, eng.zero());
      for (std::size_t j = 0; j < d; ++j) row[j] = m[j][c];
      row[c] -= lambda;
      eqs.push_back(std::move(row));
    }
  }
  return nullspace(std::move(eqs), d, eng.zero(), eng.one());
}

}  // namespace bwm
