#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bwm/element.hpp"
#include "bwm/errors.hpp"
#include "bwm/matcher.hpp"

namespace bwm {

template <typename V>
struct Rule;

/// Normal forms with respect to a fixed, interreduced rule list, built from a
/// table of (word, generator) products.
///
/// A word is reduced by multiplying its letters onto the identity one at a
/// time; every intermediate word is irreducible, so the only possible match is
/// a suffix. The table is valid as long as the rule list does not change.
template <typename V>
class WordReducer {
 public:
  using Terms = std::vector<std::pair<Word, V>>;
  using Lookup = std::function<const Rule<V>&(std::int32_t)>;

  WordReducer(const Matcher* matcher, Lookup lookup, V one) : matcher_(matcher), lookup_(std::move(lookup)), one_(std::move(one)) {}

  /// Resets the step counter: at most budget * max(1, terms) rewrites until
  /// the next call.
  void begin(std::size_t budget, std::size_t terms) {
    steps_ = 0;
    limit_ = budget * std::max<std::size_t>(1, terms);
  }
  void clear() { table_.clear(); }
  std::size_t size() const { return table_.size(); }

  const Terms& times(const Word& u, GenTok t);
  /// Accumulates c * NF(start * tail) into out.
  void fold_into(const Word& start, const Word& tail, const V& c, std::map<Word, V, ShortLex>& out);
  Element<V> reduce(const Element<V>& x);

  static void accumulate(std::map<Word, V, ShortLex>& acc, const Word& w, const V& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

 private:
  const Matcher* matcher_;
  Lookup lookup_;
  V one_;
  std::size_t steps_ = 0;
  std::size_t limit_ = static_cast<std::size_t>(-1);
  std::unordered_map<std::string, Terms> table_;
};

template <typename V>
const typename WordReducer<V>::Terms& WordReducer<V>::times(const Word& u, GenTok t) {
  std::string key = u.codes();
  key.push_back(t.code());
  if (auto it = table_.find(key); it != table_.end()) return it->second;

  Word w = u;
  w.append(t);
  Terms result;
  if (auto m = matcher_->find(w, Strategy::Leftmost)) {
    if (++steps_ > limit_) throw BudgetExhausted(w.to_string());
    const Rule<V>& rule = lookup_(m->payload);
    const Word prefix = w.substr(0, m->pos);
    const Word suffix = w.substr(m->pos + m->len);
    std::map<Word, V, ShortLex> acc;
    for (const auto& [v, c] : rule.rhs) fold_into(prefix, v + suffix, c, acc);
    result.assign(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
  } else {
    result.emplace_back(std::move(w), one_);
  }
  return table_.emplace(std::move(key), std::move(result)).first->second;
}

template <typename V>
void WordReducer<V>::fold_into(const Word& start, const Word& tail, const V& c, std::map<Word, V, ShortLex>& out) {
  if (c.is_zero()) return;
  std::map<Word, V, ShortLex> cur;
  cur.emplace(start, c);
  for (std::size_t i = 0; i < tail.size() && !cur.empty(); ++i) {
    const GenTok t = tail[i];
    std::map<Word, V, ShortLex> next;
    for (const auto& [w, d] : cur) {
      for (const auto& [v, e] : times(w, t)) accumulate(next, v, d * e);
    }
    cur = std::move(next);
  }
  for (const auto& [w, d] : cur) accumulate(out, w, d);
}

template <typename V>
Element<V> WordReducer<V>::reduce(const Element<V>& x) {
  std::map<Word, V, ShortLex> acc;
  for (const auto& [w, c] : x.terms()) fold_into(Word{}, w, c, acc);
  Element<V> out(x.rank());
  for (const auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

}  // namespace bwm
