#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <type_traits>
#include <vector>

#include "bwm/element.hpp"
#include "bwm/errors.hpp"
#include "bwm/qnumbers.hpp"
#include "bwm/ring.hpp"

namespace bwm {

/// One-line notation, values 0..n-1.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// Right multiplication by the words' generators: s_i swaps positions i, i+1.
Permutation permutation_of(const Word& g_word, int n);
int coxeter_length(const Permutation& w);
/// c_2 c_3 ... c_n with c_k = g_{k-1} g_{k-2} ... g_i (possibly empty).
Word coset_normal_word(const Permutation& w);
/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Elements of the Hecke quotient (e_i = 0) stored as combinations of coset
/// normal words, reusing the Element container.
template <CoefficientRing R>
class Hecke {
 public:
  using V = typename R::Value;
  using Elem = Element<V>;

  explicit Hecke(R ring = R{}) : ring_(std::move(ring)) {}

  Elem mul(const Elem& a, const Elem& b) const {
    if (a.rank() != b.rank()) throw RankMismatch("hecke_mul rank mismatch");
    const int n = a.rank();
    std::map<Permutation, V> acc;
    for (const auto& [wa, ca] : a.terms()) {
      for (const auto& [wb, cb] : b.terms()) {
        std::map<Permutation, V> cur{{identity_permutation(n), ca * cb}};
        for (const GenTok& t : (wa + wb).tokens()) cur = times_generator(cur, t.index);
        for (auto& [p, c] : cur) add(acc, p, c);
      }
    }
    return to_element(n, acc);
  }

  /// Drops every word containing an e; T-products of the rest. Exact
  /// coefficients must be free of r (NonzeroRDegree otherwise).
  Elem project(const Element<V>& x) const {
    const int n = x.rank();
    std::map<Permutation, V> acc;
    for (const auto& [w, c] : x.terms()) {
      if (w.has_e()) continue;
      std::map<Permutation, V> cur{{identity_permutation(n), c}};
      for (const GenTok& t : w.tokens()) cur = times_generator(cur, t.index);
      for (auto& [p, d] : cur) add(acc, p, d);
    }
    Elem out = to_element(n, acc);
    if constexpr (std::is_same_v<V, Scalar>) {
      for (const auto& [w, c] : out.terms()) {
        if (!c.is_r_free()) throw NonzeroRDegree("coefficient of T[" + w.to_string() + "] depends on r: " + c.to_string());
      }
    }
    return out;
  }

  /// q^{-N} / [n]! * sum_w q^{l(w)} T_w, N = n(n-1)/2.
  Elem symmetrizer_closed(int n) const {
    const int big_n = n * (n - 1) / 2;
    const Scalar norm = Scalar::q_pow(-big_n) / qfact(n);
    return closed(n, norm, [](int len) { return Scalar::q_pow(len); });
  }

  /// q^{N} / [n]! * sum_w (-q)^{-l(w)} T_w: the image of the symmetrizer
  /// formula under q -> -q^{-1}, which sends q^{-N}/[n]! to q^{N}/[n]!.
  Elem antisymmetrizer_closed(int n) const {
    const int big_n = n * (n - 1) / 2;
    const Scalar norm = Scalar::q_pow(big_n) / qfact(n);
    return closed(n, norm, [](int len) { return (len % 2 ? Scalar(-1L) : Scalar(1L)) * Scalar::q_pow(-len); });
  }

  Elem generator(int n, int i) const { return Elem(n, Word{GenTok::g(i)}, ring_.one()); }

 private:
  static void add(std::map<Permutation, V>& acc, const Permutation& p, const V& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  /// T_w T_i = T_{w s_i} when the length grows, else T_{w s_i} + qhat T_w.
  std::map<Permutation, V> times_generator(const std::map<Permutation, V>& x, int i) const {
    std::map<Permutation, V> out;
    const V qh = ring_.from_scalar(qhat());
    for (const auto& [w, c] : x) {
      Permutation ws = w;
      std::swap(ws[i - 1], ws[i]);
      add(out, ws, c);
      if (w[i - 1] > w[i]) add(out, w, c * qh);
    }
    return out;
  }

  Elem to_element(int n, const std::map<Permutation, V>& acc) const {
    Elem out(n);
    for (const auto& [p, c] : acc) out.add_term(coset_normal_word(p), c);
    return out;
  }

  template <typename F>
  Elem closed(int n, const Scalar& norm, F&& weight) const {
    Elem out(n);
    for (const Permutation& w : all_permutations(n)) {
      out.add_term(coset_normal_word(w), ring_.from_scalar(norm * weight(coxeter_length(w))));
    }
    return out;
  }

  R ring_;
};

}  // namespace bwm
