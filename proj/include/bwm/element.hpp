#pragma once

#include <map>
#include <string>
#include <utility>

#include "bwm/errors.hpp"
#include "bwm/word.hpp"

namespace bwm {

/// Sparse linear combination of words in BWM_rank. Not necessarily reduced;
/// the engine produces reduced elements. Zero coefficients are never stored.
template <typename V>
class Element {
 public:
  using Terms = std::map<Word, V, ShortLex>;

  explicit Element(int rank = 1) : rank_(rank) {}
  Element(int rank, const Word& w, V coeff) : rank_(rank) { add_term(w, std::move(coeff)); }

  static Element identity(int rank, V one) { return Element(rank, Word{}, std::move(one)); }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of w, or `zero` when absent.
  V coefficient(const Word& w, const V& zero) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
  }

  void add_term(const Word& w, const V& c) {
    if (c.is_zero()) return;
    if (w.max_index() >= rank_) {
      throw RankMismatch("word [" + w.to_string() + "] exceeds rank " + std::to_string(rank_));
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element out(rank_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  Element scaled(const V& s) const {
    Element out(rank_);
    if (s.is_zero()) return out;
    for (const auto& [w, c] : terms_) {
      V v = c * s;
      if (!v.is_zero()) out.terms_.emplace(w, std::move(v));
    }
    return out;
  }
  friend Element operator*(const V& s, const Element& x) { return x.scaled(s); }

  /// Same terms, larger rank.
  Element embedded(int n_target) const {
    if (n_target < rank_) throw RankMismatch("cannot embed rank " + std::to_string(rank_) + " into " + std::to_string(n_target));
    Element out = *this;
    out.rank_ = n_target;
    return out;
  }

  /// Structural equality: identical words with equal coefficients.
  friend bool operator==(const Element& a, const Element& b) {
    if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(w == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  /// "c1*w1 + c2*w2" in parser syntax.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (const auto& tok : w.tokens()) out += "*" + tok.to_string();
    }
    return out;
  }

 private:
  void check_rank(const Element& o) const {
    if (o.rank_ != rank_) {
      throw RankMismatch("rank " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
    }
  }

  int rank_;
  Terms terms_;
};

}  // namespace bwm
