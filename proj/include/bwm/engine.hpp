#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bwm/element.hpp"
#include "bwm/reducer.hpp"
#include "bwm/rules.hpp"

namespace bwm {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

template <typename V>
struct Verdict {
  enum class Kind { Equal, NotReducedToZero };
  Kind kind = Kind::Equal;
  Element<V> witness;  ///< reduced difference; empty when Equal

  bool equal() const { return kind == Kind::Equal; }
  const char* label() const { return equal() ? "Equal" : "NotReducedToZero"; }
};

/// Reduction, products and equality in BWM_n over one coefficient ring.
///
/// Not thread-safe: the word-times-generator cache is owned by the engine.
/// Use one engine per worker; results do not depend on cache state.
template <CoefficientRing R>
class Engine {
 public:
  using V = typename R::Value;
  using Elem = Element<V>;

  explicit Engine(R ring = R{}, std::size_t budget = kDefaultBudget)
      : ring_(std::move(ring)), rules_(rule_system(ring_)), budget_(budget) {}

  const R& ring() const { return ring_; }
  RuleSystem<R>& rules() { return *rules_; }
  std::size_t budget() const { return budget_; }
  void set_budget(std::size_t b) { budget_ = b; }

  V one() const { return ring_.one(); }
  V zero() const { return ring_.zero(); }
  V scalar(const Scalar& s) const { return ring_.from_scalar(s); }

  Elem identity(int n) const { return Elem::identity(n, one()); }
  Elem word(int n, const Word& w) const { return Elem(n, w, one()); }
  Elem gen(int n, GenTok t) const { return Elem(n, Word{t}, one()); }
  Elem constant(int n, const Scalar& s) const { return Elem(n, Word{}, scalar(s)); }

  /// Normal form. Leftmost uses the cached product table; Rightmost rewrites
  /// directly with the rule list matching from the right end of each word.
  Elem reduce(const Elem& x, Strategy s = Strategy::Leftmost);
  Elem mul(const Elem& a, const Elem& b);
  Elem times(const Elem& a, GenTok t);
  Elem left_times(GenTok t, const Elem& a) { return mul(gen(a.rank(), t), a); }
  Verdict<V> equals(const Elem& a, const Elem& b);
  Elem embed(const Elem& x, int n_target) const { return x.embedded(n_target); }

  /// Irreducible words reached from 1 by right multiplication, shortlex order.
  std::vector<Word> enumerate_irreducible(int n);

  /// rows[j] = coordinates of basis[j] * t in `basis`.
  std::vector<std::vector<V>> right_action_matrix(int n, GenTok t, const std::vector<Word>& basis);

  std::size_t cache_size() const {
    std::size_t s = 0;
    for (const auto& [n, r] : reducers_) s += r->size();
    return s;
  }

 private:
  using Acc = std::map<Word, V, ShortLex>;

  WordReducer<V>& reducer(int n) {
    auto& slot = reducers_[n];
    if (!slot) {
      const RuleSet<V>& rs = rules_->rules_for_rank(n);
      slot = std::make_unique<WordReducer<V>>(
          &rs.matcher, [&rs](std::int32_t i) -> const Rule<V>& { return *rs.rules[i]; }, one());
    }
    return *slot;
  }
  Elem to_element(int n, Acc&& acc) const {
    Elem out(n);
    for (auto& [w, c] : acc) out.add_term(w, c);
    return out;
  }

  R ring_;
  std::shared_ptr<RuleSystem<R>> rules_;
  std::size_t budget_;
  std::map<int, std::unique_ptr<WordReducer<V>>> reducers_;
};

// ----------------------------------------------------------------------------

template <CoefficientRing R>
Element<typename R::Value> Engine<R>::reduce(const Elem& x, Strategy s) {
  const int n = x.rank();
  if (s == Strategy::Rightmost) {
    const RuleSet<V>& rs = rules_->rules_for_rank(n);
    return reduce_with_rules(x, rs.matcher, [&](std::int32_t i) -> const Rule<V>& { return *rs.rules[i]; },
                             Strategy::Rightmost, budget_);
  }
  WordReducer<V>& red = reducer(n);
  red.begin(budget_, x.size());
  return red.reduce(x);
}

template <CoefficientRing R>
Element<typename R::Value> Engine<R>::times(const Elem& a, GenTok t) {
  const int n = a.rank();
  if (t.index >= n) throw RankMismatch("generator " + t.to_string() + " exceeds rank " + std::to_string(n));
  WordReducer<V>& red = reducer(n);
  red.begin(budget_, a.size());
  Acc acc;
  for (const auto& [w, c] : a.terms()) {
    for (const auto& [v, e] : red.times(w, t)) WordReducer<V>::accumulate(acc, v, c * e);
  }
  return to_element(n, std::move(acc));
}

template <CoefficientRing R>
Element<typename R::Value> Engine<R>::mul(const Elem& a0, const Elem& b) {
  if (a0.rank() != b.rank()) {
    throw RankMismatch("rank " + std::to_string(a0.rank()) + " vs " + std::to_string(b.rank()));
  }
  const int n = a0.rank();
  const Elem a = reduce(a0);
  WordReducer<V>& red = reducer(n);
  red.begin(budget_, a.size() * std::max<std::size_t>(1, b.size()));

  // Walk the words of b as a trie so common prefixes are multiplied once.
  struct Node {
    std::map<char, std::unique_ptr<Node>> child;
    const V* coeff = nullptr;
  };
  Node root;
  for (const auto& [w, c] : b.terms()) {
    if (w.max_index() >= n) throw RankMismatch("word [" + w.to_string() + "] exceeds rank " + std::to_string(n));
    Node* node = &root;
    for (char ch : w.codes()) {
      auto& slot = node->child[ch];
      if (!slot) slot = std::make_unique<Node>();
      node = slot.get();
    }
    node->coeff = &c;
  }

  Acc out;
  auto walk = [&](auto&& self, const Node& node, const Acc& state) -> void {
    if (node.coeff) {
      for (const auto& [w, c] : state) WordReducer<V>::accumulate(out, w, c * *node.coeff);
    }
    for (const auto& [ch, next] : node.child) {
      const GenTok t = GenTok::from_code(ch);
      Acc moved;
      for (const auto& [w, c] : state) {
        for (const auto& [v, e] : red.times(w, t)) WordReducer<V>::accumulate(moved, v, c * e);
      }
      if (!moved.empty()) self(self, *next, moved);
    }
  };
  Acc init(a.terms().begin(), a.terms().end());
  walk(walk, root, init);
  return to_element(n, std::move(out));
}

template <CoefficientRing R>
Verdict<typename R::Value> Engine<R>::equals(const Elem& a, const Elem& b) {
  Verdict<V> v;
  v.witness = reduce(a - b);
  v.kind = v.witness.is_zero() ? Verdict<V>::Kind::Equal : Verdict<V>::Kind::NotReducedToZero;
  return v;
}

template <CoefficientRing R>
std::vector<Word> Engine<R>::enumerate_irreducible(int n) {
  std::vector<GenTok> alphabet;
  for (int i = 1; i < n; ++i) {
    alphabet.push_back(GenTok::g(i));
    alphabet.push_back(GenTok::e(i));
  }
  WordReducer<V>& red = reducer(n);
  red.begin(budget_, 1);
  std::map<Word, bool, ShortLex> seen{{Word{}, true}};
  std::vector<Word> frontier{Word{}};
  std::size_t found = 1;
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (GenTok t : alphabet) {
        for (const auto& [v, c] : red.times(w, t)) {
          if (seen.emplace(v, true).second) {
            next.push_back(v);
            if (++found > budget_) throw BudgetExhausted(v.to_string());
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& [w, _] : seen) out.push_back(w);
  return out;
}

template <CoefficientRing R>
std::vector<std::vector<typename R::Value>> Engine<R>::right_action_matrix(int n, GenTok t,
                                                                           const std::vector<Word>& basis) {
  std::map<Word, std::size_t, ShortLex> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<std::vector<V>> rows(basis.size(), std::vector<V>(basis.size(), zero()));
  WordReducer<V>& red = reducer(n);
  red.begin(budget_, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [v, c] : red.times(basis[j], t)) {
      auto it = index.find(v);
      if (it == index.end()) throw ClosureUnstable("[" + basis[j].to_string() + "]*" + t.to_string() + " leaves the span");
      rows[j][it->second] = c;
    }
  }
  return rows;
}

extern template class Engine<ExactRing>;
extern template class Engine<ModularRing>;

using ExactEngine = Engine<ExactRing>;
using ModularEngine = Engine<ModularRing>;

}  // namespace bwm
