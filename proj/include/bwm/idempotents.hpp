#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bwm/engine.hpp"
#include "bwm/morphisms.hpp"
#include "bwm/qnumbers.hpp"

namespace bwm {

enum class Sign { Plus, Minus };

/// The four d-type families:
///   D          d_{k,i}     = e_{k-1}...e_i  sum_j w^j g_{i-1}...g_{i-j}
///   DPrime     d'_{k,i}    = e_1...e_{k-i}  sum_j w^j g_{k+1-i}...g_{k-i+j}
///   DBar       dbar_{k,i}  = sum_j w^j g_{i-j}...g_{i-1}  e_i...e_{k-1}
///   DBarPrime  dbar'_{k,i} = sum_j w^j g_{k-i+j}...g_{k-i+1}  e_{k-i}...e_1
/// with j = 0..i-1 and w^j = q^j (plus) or (-q)^{-j} (minus); 1 <= i < k.
enum class DFamily { D, DPrime, DBar, DBarPrime };

/// The four b/a-type families, 0 <= k:
///   BRight  b_{k,1}:  chains g_k...g_{k+1-i},  correction over d_{k+1,i}
///   BLeft   b_{1,k}:  chains g_1...g_i,        correction over d'_{k+1,i}
///   ARight  a_{k,1}:  chains g_{k+1-i}...g_k,  correction over dbar_{k+1,i}
///   ALeft   a_{1,k}:  chains g_i...g_1,        correction over dbar'_{k+1,i}
/// Plus:  sum_i q^i chain + qhat/(1 - q^{2k-1} r) sum_i q^{2k-2i+1} d
/// Minus: sum_i (-q)^{-i} chain - qhat/(1 + q^{-2k+1} r) sum_i q^{2i-2k-1} d
enum class BFamily { BRight, BLeft, ARight, ALeft };

std::string to_string(Sign s);
std::string to_string(DFamily f);
std::string to_string(BFamily f);

/// Literal linear combinations with exact coefficients, in BWM_rank.
/// IndexDomain when indices are out of range.
Element<Scalar> d_element(DFamily f, Sign s, int k, int i, int rank);
Element<Scalar> b_element(BFamily f, Sign s, int k, int rank);

inline Element<Scalar> d_plus(int k, int i, int rank) { return d_element(DFamily::D, Sign::Plus, k, i, rank); }
inline Element<Scalar> d_minus(int k, int i, int rank) { return d_element(DFamily::D, Sign::Minus, k, i, rank); }
inline Element<Scalar> b_plus_right(int k, int rank) { return b_element(BFamily::BRight, Sign::Plus, k, rank); }
inline Element<Scalar> b_plus_left(int k, int rank) { return b_element(BFamily::BLeft, Sign::Plus, k, rank); }
inline Element<Scalar> a_plus_right(int k, int rank) { return b_element(BFamily::ARight, Sign::Plus, k, rank); }
inline Element<Scalar> a_plus_left(int k, int rank) { return b_element(BFamily::ALeft, Sign::Plus, k, rank); }
inline Element<Scalar> b_minus_right(int k, int rank) { return b_element(BFamily::BRight, Sign::Minus, k, rank); }
inline Element<Scalar> b_minus_left(int k, int rank) { return b_element(BFamily::BLeft, Sign::Minus, k, rank); }
inline Element<Scalar> a_minus_right(int k, int rank) { return b_element(BFamily::ARight, Sign::Minus, k, rank); }
inline Element<Scalar> a_minus_left(int k, int rank) { return b_element(BFamily::ALeft, Sign::Minus, k, rank); }

/// e_{n-1} e_{n-2} ... e_l as a single word.
Word e_chain(int n, int l);

/// (1/(q[2])) (1 + q g_1 + q qhat/(1 - q r) e_1) in BWM_rank.
Element<Scalar> s2_closed(int rank = 2);
/// (1/[2]) (q - g_1 - qhat/(1 + q^{-1} r) e_1), the image of s2_closed under q -> -q^{-1}.
Element<Scalar> a2_closed(int rank = 2);

enum class Variant { RightB, ShiftRightB, LeftA, ShiftLeftA, Telescoping };
inline constexpr Variant kAllVariants[] = {Variant::RightB, Variant::ShiftRightB, Variant::LeftA, Variant::ShiftLeftA,
                                           Variant::Telescoping};
std::string to_string(Variant v);
/// Accepts "right-b", "shift-right-b", "left-a", "shift-left-a", "telescoping".
std::optional<Variant> parse_variant(const std::string& s);

/// Scalar c with S_n = (recursion product) * c:
/// 1/(q^{n-1}[n]) for the symmetrizer, q^{n-1}/[n] for the antisymmetrizer.
Scalar recursion_factor(Sign s, int n);

/// Maps exact coefficients into the engine's ring. A vanishing denominator at
/// a prime point becomes ParameterSingular.
template <CoefficientRing R>
Element<typename R::Value> lift(const Engine<R>& eng, const Element<Scalar>& x) {
  Element<typename R::Value> out(x.rank());
  for (const auto& [w, c] : x.terms()) {
    try {
      out.add_term(w, eng.scalar(c));
    } catch (const DenominatorVanishes& e) {
      throw ParameterSingular(std::string("coefficient singular at ") + eng.ring().name() + ": " + e.what());
    }
  }
  return out;
}

struct LemmaSides {
  std::string case_tag;  ///< "l<k", "l=k>1", "l=k=1", "l=k+1", "l>=k+2"
  int n, k, l;
};

/// Builds and caches S_n and A_n for one engine.
template <CoefficientRing R>
class Idempotents {
 public:
  using V = typename R::Value;
  using Elem = Element<V>;

  explicit Idempotents(Engine<R>& eng) : eng_(eng) {}
  Engine<R>& engine() { return eng_; }

  /// S_n (Plus) or A_n (Minus) in BWM_n, reduced.
  const Elem& idempotent(Sign s, int n, Variant v);
  const Elem& symmetrizer(int n, Variant v = Variant::RightB) { return idempotent(Sign::Plus, n, v); }
  const Elem& antisymmetrizer(int n, Variant v = Variant::RightB) { return idempotent(Sign::Minus, n, v); }

  /// lhs = S_{n-1} d_{n,k} g_l and the case formula; requires n >= 3,
  /// 1 <= k < n, 1 <= l < n.
  std::pair<Elem, Elem> lemma_sides(int n, int k, int l, LemmaSides* info = nullptr);
  static std::string lemma_case(int k, int l);

 private:
  Elem build(Sign s, int n, Variant v);

  Engine<R>& eng_;
  std::map<std::tuple<int, int, int>, Elem> cache_;
};

// ----------------------------------------------------------------------------

template <CoefficientRing R>
const Element<typename R::Value>& Idempotents<R>::idempotent(Sign s, int n, Variant v) {
  if (n < 1) throw IndexDomain("rank must be at least 1");
  const auto key = std::make_tuple(static_cast<int>(s), n, static_cast<int>(v));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Elem x = build(s, n, v);
  return cache_.emplace(key, std::move(x)).first->second;
}

template <CoefficientRing R>
Element<typename R::Value> Idempotents<R>::build(Sign s, int n, Variant v) {
  if (n == 1) return eng_.identity(1);
  if (v == Variant::Telescoping) {
    // S_2 b_{2,1} b_{3,1} ... b_{n-1,1} with the product of the factors.
    Elem acc = lift(eng_, s == Sign::Plus ? s2_closed(n) : a2_closed(n));
    for (int k = 2; k < n; ++k) {
      acc = eng_.mul(acc, lift(eng_, b_element(BFamily::BRight, s, k, n)));
      acc = acc.scaled(eng_.scalar(recursion_factor(s, k + 1)));
    }
    return acc;
  }
  const V factor = eng_.scalar(recursion_factor(s, n));
  const Elem prev = idempotent(s, n - 1, v).embedded(n);
  Elem out(n);
  switch (v) {
    case Variant::RightB:
      out = eng_.mul(prev, lift(eng_, b_element(BFamily::BRight, s, n - 1, n)));
      break;
    case Variant::ShiftRightB:
      out = eng_.mul(shift(eng_, idempotent(s, n - 1, v), 1, n), lift(eng_, b_element(BFamily::BLeft, s, n - 1, n)));
      break;
    case Variant::LeftA:
      out = eng_.mul(lift(eng_, b_element(BFamily::ARight, s, n - 1, n)), prev);
      break;
    case Variant::ShiftLeftA:
      out = eng_.mul(lift(eng_, b_element(BFamily::ALeft, s, n - 1, n)), shift(eng_, idempotent(s, n - 1, v), 1, n));
      break;
    case Variant::Telescoping:
      break;
  }
  return out.scaled(factor);
}

template <CoefficientRing R>
std::string Idempotents<R>::lemma_case(int k, int l) {
  if (l < k) return "l<k";
  if (l == k) return k > 1 ? "l=k>1" : "l=k=1";
  if (l == k + 1) return "l=k+1";
  return "l>=k+2";
}

template <CoefficientRing R>
std::pair<Element<typename R::Value>, Element<typename R::Value>> Idempotents<R>::lemma_sides(int n, int k, int l,
                                                                                          LemmaSides* info) {
  if (n < 3 || k < 1 || k >= n || l < 1 || l >= n) {
    throw IndexDomain("lemma needs n >= 3, 1 <= k < n, 1 <= l < n; got n=" + std::to_string(n) +
                      " k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
  const Elem s = symmetrizer(n - 1).embedded(n);
  auto sd = [&](int kk) { return eng_.mul(s, lift(eng_, d_plus(n, kk, n))); };
  auto se = [&]() { return eng_.mul(s, eng_.word(n, e_chain(n, l))); };
  auto c = [&](const Scalar& x) { return eng_.scalar(x); };
  const Scalar q = Scalar::q();
  const Scalar rinv = Scalar::r_pow(-1);

  const Elem lhs = eng_.times(sd(k), GenTok::g(l));
  const std::string tag = lemma_case(k, l);
  Elem rhs(n);
  if (tag == "l<k") {
    rhs = sd(k).scaled(c(q)) - se().scaled(c(q * rinv * qhat()));
  } else if (tag == "l=k>1") {
    rhs = sd(k - 1).scaled(c(q)) + se().scaled(c(rinv));
  } else if (tag == "l=k=1") {
    rhs = sd(k).scaled(c(rinv));
  } else if (tag == "l=k+1") {
    rhs = sd(k + 1).scaled(c(q.pow(-1))) + sd(k).scaled(c(qhat())) - se().scaled(c(q.pow(2 * k - 1)));
  } else {
    rhs = sd(k).scaled(c(q));
  }
  if (info) *info = {tag, n, k, l};
  return {lhs, eng_.reduce(rhs)};
}

}  // namespace bwm
