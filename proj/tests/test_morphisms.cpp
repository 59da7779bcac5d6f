#include "helpers.hpp"

using namespace bwm;
using namespace bwm::test;

namespace {
const GenTok g1 = GenTok::g(1), g2 = GenTok::g(2), e1 = GenTok::e(1);
}

TEST_CASE("alpha(g1) = g2 in rank 3") { CHECK(alpha(eng(), word(3, {g1})) == word(3, {g2})); }

TEST_CASE("beta reverses words") {
  CHECK(beta(eng(), word(3, {g1, g2, e1})) == eng().reduce(word(3, {e1, g2, g1})));
}

TEST_CASE("alpha and gamma are homomorphisms, beta an antihomomorphism") {
  std::mt19937_64 rng(21);
  for (int j = 0; j < 50; ++j) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = random_element(rng, n, 4), b = random_element(rng, n, 4);
    CHECK(equal(alpha(eng(), eng().mul(a, b)), eng().mul(alpha(eng(), a), alpha(eng(), b))));
    CHECK(equal(beta(eng(), eng().mul(a, b)), eng().mul(beta(eng(), b), beta(eng(), a))));
    CHECK(equal(gamma(eng(), eng().mul(a, b)), eng().mul(gamma(eng(), a), gamma(eng(), b))));
  }
}

TEST_CASE("alpha, beta, gamma are involutions") {
  std::mt19937_64 rng(22);
  for (int j = 0; j < 50; ++j) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto x = eng().reduce(random_element(rng, n, 5));
    CHECK(alpha(eng(), alpha(eng(), x)) == x);
    CHECK(beta(eng(), beta(eng(), x)) == x);
    CHECK(gamma(eng(), gamma(eng(), x)) == x);
  }
}

TEST_CASE("gamma(S_2) = A_2") {
  CHECK(equal(gamma(eng(), ids().symmetrizer(2)), ids().antisymmetrizer(2)));
}

TEST_CASE("gamma(b+_{k,1}) = b-_{k,1} for k <= 4") {
  for (int k = 0; k <= 4; ++k) CHECK(equal(gamma(eng(), b_plus_right(k, 5)), b_minus_right(k, 5)));
}

TEST_CASE("shift") {
  CHECK(shift(eng(), word(2, {g1}), 1, 3) == word(3, {g2}));
  const auto s3 = ids().symmetrizer(3);
  CHECK(shift(eng(), s3, 0, 3) == s3);
  CHECK_THROWS_AS(shift(eng(), word(3, {g2}), 1, 3), RankMismatch);
  CHECK_THROWS_AS(shift(eng(), word(3, {g1}), -1, 3), IndexDomain);
}

TEST_CASE("shift(S_2) is the factor in S_3 = S_2[1] b+_{1,2} / (q^2 [3])") {
  const auto s2_1 = shift(eng(), ids().symmetrizer(2), 1, 3);
  const auto built = eng().mul(s2_1, b_plus_left(2, 3)).scaled(Scalar(1L) / (Scalar::q_pow(2) * qint(3)));
  CHECK(equal(built, ids().symmetrizer(3, Variant::RightB)));
  // S_2[1] g2 = q S_2[1]
  CHECK(equal(eng().times(s2_1, GenTok::g(2)), s2_1.scaled(Scalar::q())));
}

TEST_CASE("flip and reversal images of the b families") {
  for (int k = 1; k <= 4; ++k) {
    const int n = k + 1;
    CHECK(equal(alpha(eng(), b_plus_right(k, n)), b_plus_left(k, n)));
    CHECK(equal(beta(eng(), b_plus_right(k, n)), a_plus_right(k, n)));
    CHECK(equal(beta(eng(), b_plus_left(k, n)), a_plus_left(k, n)));
  }
}

TEST_CASE("modular gamma transport matches exact gamma") {
  const PrimePoint pt = PrimePoint::draw(31, 4);
  ModularEngine here(ModularRing{pt});
  ModularEngine there(ModularRing{pt.gamma_image()});
  std::mt19937_64 rng(23);
  for (int j = 0; j < 20; ++j) {
    const auto a = random_element(rng, 3, 4), b = random_element(rng, 3, 4);
    const auto exact = gamma(eng(), eng().mul(a, b));
    const auto mod = gamma_transport(here, there.mul(lift(there, a), lift(there, b)));
    CHECK((mod - lift(here, exact)).is_zero());
  }
}
