#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bwm/element.hpp"
#include "bwm/matcher.hpp"
#include "bwm/reducer.hpp"
#include "bwm/relations.hpp"
#include "bwm/ring.hpp"

namespace bwm {

/// How a derived rule follows from rules created before it.
///
/// Overlap: the word W = lhs(first) + lhs(second)[overlap:] is rewritten once
/// by `first` at the front and once by `second` at the back; the difference
/// of the two results, reduced by exactly the rules in `basis`, is a nonzero
/// multiple of lhs - rhs.
/// Simplify: lhs(first) - rhs(first), reduced by `basis`, is a nonzero
/// multiple of lhs - rhs.
/// Every id in `basis` is smaller than the rule's own id.
struct Certificate {
  enum class Kind { Overlap, Simplify };
  Kind kind = Kind::Simplify;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::size_t overlap = 0;
  std::vector<std::uint32_t> basis;
};

template <typename V>
struct Rule {
  std::uint32_t id = 0;
  std::string name;
  std::string family;  ///< "R1".."R10" for the named shapes, "C" otherwise
  Word lhs;
  std::vector<std::pair<Word, V>> rhs;  ///< shortlex-descending, all below lhs
  bool defining = false;
  std::string relation;  ///< statement of the presentation relation (defining rules)
  Certificate certificate;
  int home_rank = 0;

  Element<V> lhs_element(int rank, const V& one) const { return Element<V>(rank, lhs, one); }
  Element<V> rhs_element(int rank) const {
    Element<V> out(rank);
    for (const auto& [w, c] : rhs) out.add_term(w, c);
    return out;
  }
};

/// Active rules for one rank: a Groebner basis of the defining ideal with
/// respect to the shortlex order on g_1 < e_1 < g_2 < ...
template <typename V>
struct RuleSet {
  int rank = 1;
  std::vector<const Rule<V>*> rules;  ///< ordered by id
  Matcher matcher;                    ///< payload indexes `rules`
};

/// Rewrites until no left-hand side occurs. Words are processed from the
/// shortlex-largest down, so every word is looked at once.
/// `lookup(payload)` maps matcher payloads to rules.
template <typename V, typename Lookup>
Element<V> reduce_with_rules(const Element<V>& x, const Matcher& matcher, Lookup&& lookup, Strategy strategy,
                             std::size_t budget_per_term) {
  typename Element<V>::Terms work = x.terms();
  Element<V> out(x.rank());
  const std::size_t budget = budget_per_term * std::max<std::size_t>(1, x.size());
  std::size_t steps = 0;
  while (!work.empty()) {
    auto last = std::prev(work.end());
    Word w = last->first;
    V c = std::move(last->second);
    work.erase(last);
    auto m = matcher.find(w, strategy);
    if (!m) {
      out.add_term(w, c);
      continue;
    }
    if (++steps > budget) throw BudgetExhausted(w.to_string());
    const Rule<V>& rule = lookup(m->payload);
    const Word prefix = w.substr(0, m->pos);
    const Word suffix = w.substr(m->pos + m->len);
    for (const auto& [u, d] : rule.rhs) {
      V v = c * d;
      if (v.is_zero()) continue;
      Word nw = prefix + u + suffix;
      auto [it, inserted] = work.try_emplace(std::move(nw), v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

/// Completion of the defining relations, one rank at a time.
///
/// Rank n starts from the finished system of rank n-1 plus the relations that
/// mention g_{n-1}, e_{n-1}, and resolves overlaps until none is left. Every
/// rule ever created stays in the history so certificates can be replayed.
template <CoefficientRing R>
class RuleSystem {
 public:
  using V = typename R::Value;
  static constexpr std::size_t kCompletionBudget = 10'000'000;
  static constexpr int kMaxRank = 9;

  explicit RuleSystem(R ring)
      : ring_(std::move(ring)),
        live_reducer_(&live_, [this](std::int32_t id) -> const Rule<V>& { return history_[id]; }, ring_.one()) {}
  RuleSystem(const RuleSystem&) = delete;
  RuleSystem& operator=(const RuleSystem&) = delete;

  const R& ring() const { return ring_; }

  /// Thread-safe; builds lower ranks on demand.
  const RuleSet<V>& rules_for_rank(int n) {
    std::lock_guard lock(mu_);
    if (n < 1 || n > kMaxRank) throw RankMismatch("rank " + std::to_string(n) + " out of range");
    while (built_rank_ < n) extend(built_rank_ + 1);
    return *by_rank_.at(n);
  }

  const Rule<V>& rule(std::uint32_t id) const { return history_.at(id); }
  std::size_t history_size() const { return history_.size(); }

  /// Replays the certificate of a derived rule with the recorded basis only.
  /// Defining rules are checked against the presentation.
  bool verify(const Rule<V>& r, std::string* why = nullptr) const;

  /// Polynomial whose reduction the certificate of `r` describes.
  Element<V> certificate_source(const Rule<V>& r) const;

 private:
  struct Pair {
    std::size_t word_len;
    std::uint32_t a, b;
    std::size_t overlap;
    auto key() const { return std::tie(word_len, a, b, overlap); }
    friend bool operator<(const Pair& x, const Pair& y) { return x.key() < y.key(); }
  };

  void extend(int n);
  Element<V> poly_of(const Rule<V>& r, int rank) const {
    Element<V> p = r.lhs_element(rank, ring_.one());
    p -= r.rhs_element(rank);
    return p;
  }
  Element<V> overlap_poly(const Rule<V>& a, const Rule<V>& b, std::size_t k, int rank) const;
  Element<V> reduce_live(const Element<V>& x) {
    live_reducer_.begin(kCompletionBudget, x.size());
    return live_reducer_.reduce(x);
  }
  void live_insert(const Word& lhs, std::uint32_t id) {
    live_.insert(lhs, static_cast<std::int32_t>(id));
    live_reducer_.clear();
  }
  void live_erase(const Word& lhs) {
    live_.erase(lhs);
    live_reducer_.clear();
  }
  std::vector<std::uint32_t> active_ids() const;
  std::uint32_t push_rule(Rule<V> r);
  std::uint32_t add_derived(const Element<V>& reduced, Certificate cert, int rank);
  void activate(std::uint32_t id, int rank);
  void add_pairs(std::uint32_t id);
  /// True when some left side occurs in w away from both ends. Both smaller
  /// overlaps it forms with the ends are shorter than w and so have already
  /// been resolved; the overlap at w then resolves through them.
  bool chained(const Word& w) const {
    for (std::size_t p = 1; p + 1 < w.size(); ++p) {
      if (auto m = live_.match_at(w, p); m && p + m->len < w.size()) return true;
    }
    return false;
  }
  std::uint32_t follow(std::uint32_t id) const {
    while (successor_[id] >= 0) id = static_cast<std::uint32_t>(successor_[id]);
    return id;
  }
  void snapshot(int n);

  R ring_;
  std::mutex mu_;
  std::deque<Rule<V>> history_;
  std::vector<char> active_;
  std::vector<std::int64_t> successor_;
  Matcher live_;
  WordReducer<V> live_reducer_;
  std::set<Pair> pairs_;
  std::deque<std::uint32_t> collapsed_;
  std::map<int, std::unique_ptr<RuleSet<V>>> by_rank_;
  int built_rank_ = 0;
};

// ----------------------------------------------------------------------------

template <CoefficientRing R>
std::vector<std::uint32_t> RuleSystem<R>::active_ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < active_.size(); ++i) {
    if (active_[i]) out.push_back(i);
  }
  return out;
}

template <CoefficientRing R>
std::uint32_t RuleSystem<R>::push_rule(Rule<V> r) {
  r.id = static_cast<std::uint32_t>(history_.size());
  history_.push_back(std::move(r));
  active_.push_back(0);
  successor_.push_back(-1);
  return history_.back().id;
}

template <CoefficientRing R>
Element<typename R::Value> RuleSystem<R>::overlap_poly(const Rule<V>& a, const Rule<V>& b, std::size_t k,
                                                       int rank) const {
  const Word tail = b.lhs.substr(k);
  const Word head = a.lhs.substr(0, a.lhs.size() - k);
  Element<V> p(rank);
  for (const auto& [u, c] : a.rhs) p.add_term(u + tail, c);
  for (const auto& [u, c] : b.rhs) p.add_term(head + u, -c);
  return p;
}

template <CoefficientRing R>
std::uint32_t RuleSystem<R>::add_derived(const Element<V>& reduced, Certificate cert, int rank) {
  auto lead = std::prev(reduced.terms().end());
  const V inv = ring_.one() / lead->second;
  Rule<V> r;
  r.lhs = lead->first;
  for (auto it = reduced.terms().rbegin(); it != reduced.terms().rend(); ++it) {
    if (it->first == r.lhs) continue;
    r.rhs.emplace_back(it->first, -(it->second * inv));
  }
  cert.basis = active_ids();
  r.certificate = std::move(cert);
  r.home_rank = rank;
  r.family = classify_lhs(r.lhs);
  if (r.family.empty()) r.family = "C";
  const std::uint32_t id = push_rule(std::move(r));
  Rule<V>& stored = history_[id];
  stored.name = (stored.family == "C" ? "C" : stored.family + ":") + std::to_string(id);
  activate(id, rank);
  return id;
}

template <CoefficientRing R>
void RuleSystem<R>::activate(std::uint32_t id, int rank) {
  const Word lhs = history_[id].lhs;
  std::vector<std::uint32_t> collapse, compose;
  for (std::uint32_t other : active_ids()) {
    const Rule<V>& o = history_[other];
    if (o.lhs.codes().find(lhs.codes()) != std::string::npos) {
      collapse.push_back(other);
      continue;
    }
    for (const auto& [w, c] : o.rhs) {
      if (w.codes().find(lhs.codes()) != std::string::npos) {
        compose.push_back(other);
        break;
      }
    }
  }
  active_[id] = 1;
  live_insert(lhs, id);
  for (std::uint32_t c : collapse) {
    active_[c] = 0;
    live_erase(history_[c].lhs);
    collapsed_.push_back(c);
  }
  for (std::uint32_t c : compose) {
    // Same left side, right side brought to normal form.
    active_[c] = 0;
    live_erase(history_[c].lhs);
    const Element<V> red = reduce_live(history_[c].rhs_element(rank));
    Rule<V> r;
    r.lhs = history_[c].lhs;
    for (auto it = red.terms().rbegin(); it != red.terms().rend(); ++it) r.rhs.emplace_back(it->first, it->second);
    r.certificate.kind = Certificate::Kind::Simplify;
    r.certificate.first = c;
    r.certificate.basis = active_ids();
    r.home_rank = rank;
    r.family = history_[c].family;
    r.name = history_[c].name;
    const std::uint32_t nid = push_rule(std::move(r));
    successor_[c] = nid;
    active_[nid] = 1;
    live_insert(history_[nid].lhs, nid);
  }
  add_pairs(id);
}

template <CoefficientRing R>
void RuleSystem<R>::add_pairs(std::uint32_t id) {
  auto overlaps = [&](std::uint32_t a, std::uint32_t b) {
    const std::string& u = history_[a].lhs.codes();
    const std::string& v = history_[b].lhs.codes();
    const std::size_t m = std::min(u.size(), v.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (u.compare(u.size() - k, k, v, 0, k) == 0) pairs_.insert({u.size() + v.size() - k, a, b, k});
    }
  };
  for (std::uint32_t other : active_ids()) {
    overlaps(id, other);
    if (other != id) overlaps(other, id);
  }
}

template <CoefficientRing R>
void RuleSystem<R>::extend(int n) {
  for (const Relation& rel : defining_relations_for_rank(n)) {
    Rule<V> ax;
    ax.name = rel.name;
    ax.family = rel.family;
    ax.lhs = rel.lhs;
    for (const auto& [w, c] : rel.rhs) {
      V v = ring_.from_scalar(c);
      if (!v.is_zero()) ax.rhs.emplace_back(w, std::move(v));
    }
    ax.defining = true;
    ax.relation = rel.relation;
    ax.home_rank = n;
    const std::uint32_t id = push_rule(std::move(ax));
    const Element<V> p = poly_of(history_[id], n);
    const Element<V> red = reduce_live(p);
    if (red.is_zero()) continue;
    if (red == p) {
      activate(id, n);
    } else {
      Certificate cert;
      cert.first = id;
      add_derived(red, std::move(cert), n);
    }
  }
  while (true) {
    if (!collapsed_.empty()) {
      const std::uint32_t c = collapsed_.front();
      collapsed_.pop_front();
      const Element<V> red = reduce_live(poly_of(history_[c], n));
      if (!red.is_zero()) {
        Certificate cert;
        cert.first = c;
        add_derived(red, std::move(cert), n);
      }
      continue;
    }
    if (pairs_.empty()) break;
    Pair pr = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    const std::uint32_t a = follow(pr.a), b = follow(pr.b);
    if (!active_[a] || !active_[b]) continue;
    if (chained(history_[a].lhs + history_[b].lhs.substr(pr.overlap))) continue;
    const Element<V> red = reduce_live(overlap_poly(history_[a], history_[b], pr.overlap, n));
    if (red.is_zero()) continue;
    Certificate cert;
    cert.kind = Certificate::Kind::Overlap;
    cert.first = a;
    cert.second = b;
    cert.overlap = pr.overlap;
    add_derived(red, std::move(cert), n);
  }
  snapshot(n);
  built_rank_ = n;
}

template <CoefficientRing R>
void RuleSystem<R>::snapshot(int n) {
  auto set = std::make_unique<RuleSet<V>>();
  set->rank = n;
  for (std::uint32_t id : active_ids()) {
    set->matcher.insert(history_[id].lhs, static_cast<std::int32_t>(set->rules.size()));
    set->rules.push_back(&history_[id]);
  }
  by_rank_[n] = std::move(set);
}

template <CoefficientRing R>
Element<typename R::Value> RuleSystem<R>::certificate_source(const Rule<V>& r) const {
  const int rank = std::max(r.home_rank, r.lhs.max_index() + 1);
  const Certificate& c = r.certificate;
  if (c.kind == Certificate::Kind::Overlap) return overlap_poly(history_[c.first], history_[c.second], c.overlap, rank);
  return poly_of(history_[c.first], rank);
}

template <CoefficientRing R>
bool RuleSystem<R>::verify(const Rule<V>& r, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = r.name + ": " + msg;
    return false;
  };
  const int rank = std::max(r.home_rank, r.lhs.max_index() + 1);
  if (r.defining) {
    for (const Relation& rel : defining_relations_for_rank(r.home_rank)) {
      if (rel.name != r.name) continue;
      if (!(rel.lhs == r.lhs) || rel.rhs.size() != r.rhs.size()) return fail("does not match its relation");
      Element<V> a(rank), b(rank);
      for (const auto& [w, s] : rel.rhs) a.add_term(w, ring_.from_scalar(s));
      for (const auto& [w, s] : r.rhs) b.add_term(w, s);
      return a == b ? true : fail("right side differs from its relation");
    }
    return fail("unknown defining relation");
  }
  const Certificate& c = r.certificate;
  Matcher m;
  std::vector<const Rule<V>*> basis;
  for (std::uint32_t id : c.basis) {
    if (id >= r.id) return fail("certificate basis is not older than the rule");
    m.insert(history_[id].lhs, static_cast<std::int32_t>(basis.size()));
    basis.push_back(&history_[id]);
  }
  if (c.first >= r.id || (c.kind == Certificate::Kind::Overlap && c.second >= r.id)) {
    return fail("certificate refers to a newer rule");
  }
  if (c.kind == Certificate::Kind::Overlap) {
    const Rule<V>& a = history_[c.first];
    const Rule<V>& b = history_[c.second];
    if (c.overlap == 0 || c.overlap >= std::min(a.lhs.size(), b.lhs.size()) + 1 ||
        a.lhs.codes().compare(a.lhs.size() - c.overlap, c.overlap, b.lhs.codes(), 0, c.overlap) != 0) {
      return fail("overlap does not exist");
    }
  }
  WordReducer<V> reducer(&m, [&](std::int32_t i) -> const Rule<V>& { return *basis[i]; }, ring_.one());
  const Element<V> source = certificate_source(r);
  reducer.begin(kCompletionBudget, source.size());
  const Element<V> red = reducer.reduce(source);
  if (red.is_zero()) return fail("certificate reduces to zero");
  const V lc = red.coefficient(r.lhs, ring_.zero());
  if (lc.is_zero()) return fail("certificate does not produce the left side");
  Element<V> expected = poly_of(r, rank).scaled(lc);
  return red == expected ? true : fail("certificate yields a different rule");
}

extern template class RuleSystem<ExactRing>;
extern template class RuleSystem<ModularRing>;

/// Shared completion per coefficient ring (one per evaluation point).
std::shared_ptr<RuleSystem<ExactRing>> rule_system(const ExactRing& ring);
std::shared_ptr<RuleSystem<ModularRing>> rule_system(const ModularRing& ring);

}  // namespace bwm
