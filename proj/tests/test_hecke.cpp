#include "helpers.hpp"

#include <set>

#include "bwm/linalg.hpp"

using namespace bwm;
using namespace bwm::test;

namespace {

const Scalar q = Scalar::q();
const Scalar one(1L);
const GenTok g1 = GenTok::g(1), g2 = GenTok::g(2), e1 = GenTok::e(1);
const Hecke<ExactRing> h;

Element<Scalar> T(int n, const Word& w, const Scalar& c = Scalar(1L)) { return Element<Scalar>(n, w, c); }

int inversions(const Permutation& p) {
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] > p[j];
  }
  return k;
}

}  // namespace

TEST_CASE("T1 T1 = 1 + qhat T1 and T1 T2 = T(s1 s2)") {
  CHECK(h.mul(T(2, {g1}), T(2, {g1})) == T(2, {}) + T(2, {g1}, qhat()));
  CHECK(h.mul(T(3, {g1}), T(3, {g2})) == T(3, {g1, g2}));
}

TEST_CASE("products at n = 3 stay within the 6 coset words") {
  std::set<Word, ShortLex> seen;
  const std::vector<Word> gens = {{}, {g1}, {g2}, {g1, g2}, {g2, g1}, {g1, g2, g1}, {g2, g1, g2}};
  for (const Word& a : gens) {
    for (const Word& b : gens) {
      const auto p = h.mul(T(3, a), T(3, b));
      for (const auto& [w, c] : p.terms()) seen.insert(w);
    }
  }
  CHECK(seen.size() == 6);
  for (const Permutation& p : all_permutations(3)) CHECK(seen.count(coset_normal_word(p)) == 1);
}

TEST_CASE("coset words have length equal to the inversion count") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Word, ShortLex> words;
    for (const Permutation& p : all_permutations(n)) {
      const Word w = coset_normal_word(p);
      CHECK(static_cast<int>(w.size()) == inversions(p));
      CHECK(coxeter_length(p) == inversions(p));
      CHECK(permutation_of(w, n) == p);
      words.insert(w);
    }
    CHECK(words.size() == all_permutations(n).size());
  }
}

TEST_CASE("project drops e-words") {
  CHECK(h.project(eng().word(2, {e1})).is_zero());
  CHECK_THROWS_AS(h.project(Element<Scalar>(2, Word{g1}, Scalar::r())), NonzeroRDegree);
}

TEST_CASE("project(S_2) = (1/(q[2])) (1 + q T1)") {
  const auto expect = (T(2, {}) + T(2, {g1}, q)).scaled(one / (q * qint(2)));
  CHECK(h.project(ids().symmetrizer(2)) == expect);
  CHECK(h.symmetrizer_closed(2) == expect);
}

TEST_CASE("project(b+_{k,1}) keeps only the g-chains") {
  for (int k = 1; k <= 3; ++k) {
    const int n = k + 1;
    Element<Scalar> expect(n);
    for (int i = 0; i <= k; ++i) {
      Word w;
      for (int j = k; j > k - i; --j) w.append(GenTok::g(j));
      expect += h.mul(T(n, {}), T(n, w, q.pow(i)));
    }
    CHECK(h.project(eng().reduce(b_plus_right(k, n))) == expect);
  }
}

TEST_CASE("closed symmetrizer: identity coefficient and term count") {
  CHECK(h.symmetrizer_closed(3).coefficient(Word{}, Scalar()) == q.pow(-3) / qfact(3));
  CHECK(h.symmetrizer_closed(4).size() == 24);
}

TEST_CASE("closed antisymmetrizer at n=2 solves its defining conditions") {
  // X = a + b T1; X T1 = -q^-1 X gives a linear system in (a, b).
  // Rows: coefficient of 1 and of T1 in X T1 + q^-1 X.
  Matrix<Scalar> m = {{q.pow(-1), one}, {one, qhat() + q.pow(-1)}};
  const auto sol = nullspace(m, 2, Scalar(), one);
  REQUIRE(sol.size() == 1);
  const auto x = h.antisymmetrizer_closed(2);
  const Scalar a = x.coefficient(Word{}, Scalar()), b = x.coefficient(Word{g1}, Scalar());
  CHECK(a * sol[0][1] == b * sol[0][0]);
  CHECK(h.mul(x, x) == x);
  CHECK(x == (T(2, {}, q) - T(2, {g1})).scaled(one / (q.pow(-1) + q)));
}

TEST_CASE("closed forms are idempotent with the right eigenvalues for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const auto s = h.symmetrizer_closed(n), a = h.antisymmetrizer_closed(n);
    CHECK(h.mul(s, s) == s);
    CHECK(h.mul(a, a) == a);
    for (int i = 1; i < n; ++i) {
      CHECK(h.mul(s, h.generator(n, i)) == s.scaled(q));
      CHECK(h.mul(a, h.generator(n, i)) == a.scaled(-q.pow(-1)));
    }
  }
}

TEST_CASE("project(S_n) and project(A_n) are the closed forms for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(h.project(ids().symmetrizer(n)) == h.symmetrizer_closed(n));
    CHECK(h.project(ids().antisymmetrizer(n)) == h.antisymmetrizer_closed(n));
  }
}

TEST_CASE("project is a homomorphism") {
  std::mt19937_64 rng(41);
  for (int j = 0; j < 50; ++j) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = eng().reduce(random_element(rng, n, 4)), b = eng().reduce(random_element(rng, n, 4));
    CHECK(h.project(eng().mul(a, b)) == h.mul(h.project(a), h.project(b)));
  }
}
