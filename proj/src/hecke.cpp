#include "bwm/hecke.hpp"

namespace bwm {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation permutation_of(const Word& g_word, int n) {
  Permutation p = identity_permutation(n);
  for (const GenTok& t : g_word.tokens()) {
    if (t.kind != GenKind::G || t.index < 1 || t.index >= n) {
      throw IndexDomain("not a braid generator of rank " + std::to_string(n) + ": " + t.to_string());
    }
    std::swap(p[t.index - 1], p[t.index]);
  }
  return p;
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
  }
  return inv;
}

Word coset_normal_word(const Permutation& w0) {
  // w = w' c_n with w' fixing n and c_n = s_{n-1} ... s_i, where i is the
  // position of n in w. Peel c_n, c_{n-1}, ... off the right.
  Permutation w = w0;
  std::vector<Word> chains;
  for (int k = static_cast<int>(w.size()); k >= 2; --k) {
    const int pos = static_cast<int>(std::find(w.begin(), w.end(), k - 1) - w.begin()) + 1;
    Word c;
    for (int j = k - 1; j >= pos; --j) c.append(GenTok::g(j));
    // w' = w c^{-1}: undo the swaps of c from its right end.
    for (int j = pos; j <= k - 1; ++j) std::swap(w[j - 1], w[j]);
    chains.push_back(std::move(c));
  }
  Word out;
  for (auto it = chains.rbegin(); it != chains.rend(); ++it) out = out + *it;
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace bwm
