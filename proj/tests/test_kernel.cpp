#include "helpers.hpp"

#include <set>

#include "bwm/suites.hpp"

using namespace bwm;
using namespace bwm::test;

namespace {

const Scalar q = Scalar::q();
const Scalar rinv = Scalar::r_pow(-1);
const GenTok g1 = GenTok::g(1), g2 = GenTok::g(2), e1 = GenTok::e(1), e2 = GenTok::e(2);

Element<Scalar> lin(int rank, std::initializer_list<std::pair<Word, Scalar>> terms) {
  Element<Scalar> x(rank);
  for (const auto& [w, c] : terms) x.add_term(w, c);
  return x;
}

}  // namespace

TEST_CASE("named rule families R1..R10 are present") {
  std::set<std::string> families;
  for (const Relation& rel : named_relations(4)) families.insert(rel.family);
  for (int k = 1; k <= 10; ++k) CHECK(families.count("R" + std::to_string(k)) == 1);
}

TEST_CASE("R1 at i=1 is the quadratic relation") {
  const auto expect = lin(2, {{Word{}, 1L}, {Word{g1}, qhat()}, {Word{e1}, -rinv * qhat()}});
  CHECK(eng().reduce(word(2, {g1, g1})) == expect);
  CHECK(eng().mul(word(2, {g1}), word(2, {g1})) == expect);
}

TEST_CASE("g1 e1 and e1 g1 reduce to r^-1 e1") {
  const auto expect = lin(2, {{Word{e1}, rinv}});
  CHECK(eng().reduce(word(2, {g1, e1})) == expect);
  CHECK(eng().reduce(word(2, {e1, g1})) == expect);
  CHECK(eng().equals(word(2, {g1, e1}), expect).equal());
}

TEST_CASE("e1 e1 reduces to delta e1") {
  CHECK(eng().reduce(word(2, {e1, e1})) == lin(2, {{Word{e1}, delta()}}));
}

TEST_CASE("empty word is irreducible") { CHECK(eng().reduce(word(3, {})) == eng().identity(3)); }

TEST_CASE("g1 g2 e1 = e2 e1 and its reversal e1 g2 g1 = e1 e2") {
  CHECK(equal(eng().mul(word(3, {g1, g2}), word(3, {e1})), word(3, {e2, e1})));
  CHECK(equal(word(3, {e1, g2, g1}), word(3, {e1, e2})));
}

TEST_CASE("R9 and R10 shapes") {
  CHECK(equal(word(3, {e1, e2, e1}), word(3, {e1})));
  CHECK(equal(word(3, {e2, e1, e2}), word(3, {e2})));
  CHECK(equal(word(3, {e1, g2, e1}), lin(3, {{Word{e1}, Scalar::r()}})));
}

TEST_CASE("distinct irreducible words are not identified") {
  const Verdict<Scalar> v = eng().equals(word(3, {g1}), word(3, {g2}));
  CHECK_FALSE(v.equal());
  CHECK(v.witness == lin(3, {{Word{g1}, 1L}, {Word{g2}, -1L}}));
}

TEST_CASE("mul by the identity") {
  std::mt19937_64 rng(1);
  for (int j = 0; j < 10; ++j) {
    const auto x = eng().reduce(random_element(rng, 3, 5));
    CHECK(eng().mul(eng().identity(3), x) == x);
    CHECK(eng().mul(x, eng().identity(3)) == x);
  }
}

TEST_CASE("rank checks") {
  CHECK_THROWS_AS(eng().mul(word(2, {g1}), word(3, {g1})), RankMismatch);
  CHECK_THROWS_AS(word(2, {g1}).embedded(1), RankMismatch);
}

TEST_CASE("embedding") {
  const auto x = word(2, {g1});
  CHECK(eng().embed(x, 4) == word(4, {g1}));
  CHECK(eng().embed(x, 2) == x);
  std::mt19937_64 rng(2);
  for (int j = 0; j < 20; ++j) {
    const auto a = random_element(rng, 3, 4), b = random_element(rng, 3, 4);
    CHECK(eng().mul(a, b).embedded(5) == eng().mul(a.embedded(5), b.embedded(5)));
  }
}

TEST_CASE("irreducible words count (2n-1)!!") {
  const std::vector<Word> two = eng().enumerate_irreducible(2);
  CHECK(std::set<Word, ShortLex>(two.begin(), two.end()) == std::set<Word, ShortLex>{Word{}, Word{g1}, Word{e1}});
  CHECK(eng().enumerate_irreducible(3).size() == 15);
  CHECK(eng().enumerate_irreducible(4).size() == 105);
  CHECK(eng().enumerate_irreducible(5).size() == 945);
}

TEST_CASE("right action matrices at n=2") {
  const std::vector<Word> basis = eng().enumerate_irreducible(2);
  auto at = [&](const Word& w) { return std::find(basis.begin(), basis.end(), w) - basis.begin(); };
  const auto one = at(Word{}), g = at(Word{g1}), e = at(Word{e1});
  const auto mg = eng().right_action_matrix(2, g1, basis);
  const auto me = eng().right_action_matrix(2, e1, basis);
  // Hand-computed rows: 1.g1 = g1, g1.g1 = 1 + qhat g1 - r^-1 qhat e1, e1.g1 = r^-1 e1.
  CHECK(mg[one][g] == Scalar(1L));
  CHECK(mg[one][one].is_zero());
  CHECK(mg[g][one] == Scalar(1L));
  CHECK(mg[g][g] == qhat());
  CHECK(mg[g][e] == -rinv * qhat());
  CHECK(mg[e][e] == rinv);
  CHECK(me[e][e] == delta());
  CHECK(me[one][e] == Scalar(1L));
  // Matrix form of the quadratic relation: M_g^2 = I + qhat M_g - r^-1 qhat M_e.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar sq;
      for (std::size_t k = 0; k < 3; ++k) sq += mg[i][k] * mg[k][j];
      const Scalar rhs = Scalar(i == j ? 1L : 0L) + qhat() * mg[i][j] - rinv * qhat() * me[i][j];
      CHECK(sq == rhs);
    }
  }
}

TEST_CASE("every rule up to rank 4 replays its certificate without itself") {
  RuleSystem<ExactRing>& sys = eng().rules();
  const auto& rs = sys.rules_for_rank(4);
  REQUIRE(rs.rules.size() > 0);
  for (const Rule<Scalar>* rule : rs.rules) {
    std::string why;
    INFO(rule->name, " ", rule->lhs.to_string());
    CHECK(sys.verify(*rule, &why));
    for (std::uint32_t b : rule->certificate.basis) CHECK(b < rule->id);
  }
}

TEST_CASE("reduce is idempotent") {
  std::mt19937_64 rng(3);
  for (int j = 0; j < 50; ++j) {
    const auto once = eng().reduce(random_element(rng, 4, 7));
    CHECK(eng().reduce(once) == once);
  }
}

TEST_CASE("multiplication is associative on random word triples") {
  std::mt19937_64 rng(4);
  for (int j = 0; j < 50; ++j) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = word(n, random_word(rng, n, 4)), b = word(n, random_word(rng, n, 4)), c = word(n, random_word(rng, n, 4));
    CHECK(equal(eng().mul(eng().mul(a, b), c), eng().mul(a, eng().mul(b, c))));
  }
}

TEST_CASE("leftmost and rightmost strategies give the same normal form") {
  std::mt19937_64 rng(5);
  for (int j = 0; j < 100; ++j) {
    const int n = 2 + static_cast<int>(rng() % 3);
    Element<Scalar> x(n);
    const auto a = random_element(rng, n, 4), b = random_element(rng, n, 4);
    for (const auto& [u, c] : a.terms()) {
      for (const auto& [v, d] : b.terms()) x.add_term(u + v, c * d);
    }
    CHECK(eng().reduce(x, Strategy::Leftmost) == eng().reduce(x, Strategy::Rightmost));
  }
}

TEST_CASE("g_i (g_i - qhat + qhat e_i) = 1") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto inv = lin(n, {{Word{GenTok::g(i)}, 1L}, {Word{}, -qhat()}, {Word{GenTok::e(i)}, qhat()}});
      CHECK(equal(eng().mul(word(n, {GenTok::g(i)}), inv), eng().identity(n)));
      CHECK(equal(eng().mul(inv, word(n, {GenTok::g(i)})), eng().identity(n)));
    }
  }
}

TEST_CASE("a tiny budget is reported, not looped") {
  ExactEngine small(ExactRing{}, 1);
  CHECK_THROWS_AS(small.reduce(word(4, {g2, g1, g2, g1, g2, g1, e1, g2})), BudgetExhausted);
}

TEST_CASE("modular engine agrees with the exact one") {
  ModularEngine m(ModularRing{PrimePoint::draw(3, 4)});
  std::mt19937_64 rng(6);
  for (int j = 0; j < 30; ++j) {
    const auto a = random_element(rng, 4, 4), b = random_element(rng, 4, 4);
    const auto exact = eng().mul(a, b);
    const auto mod = m.mul(lift(m, a), lift(m, b));
    CHECK((mod - lift(m, exact)).is_zero());
  }
}
