#include "helpers.hpp"

#include "bwm/modular.hpp"

using namespace bwm;
using bwm::test::random_scalar;

namespace {

const Scalar q = Scalar::q();
const Scalar r = Scalar::r();

Scalar poly(std::initializer_list<std::tuple<long, int, int>> terms) {
  LaurentPoly p;
  for (auto [c, a, b] : terms) p += LaurentPoly::monomial(c, a, b);
  return Scalar(p);
}

}  // namespace

TEST_CASE("qhat is (q^2 - 1)/q") {
  const Scalar expect = Scalar::fraction(LaurentPoly::monomial(1, 2, 0) - LaurentPoly(1), LaurentPoly::monomial(1, 1, 0));
  CHECK(qhat() == expect);
  CHECK(qhat() == q - q.inverse());
}

TEST_CASE("qhat is fixed by q -> -q^-1") {
  // (-q^-1) - (-q^-1)^-1 = -q^-1 + q
  CHECK(subst_gamma(qhat()) == qhat());
}

TEST_CASE("qhat specializes to q0 - q0^-1") {
  const std::uint64_t p = (std::uint64_t{1} << 31) - 1;
  const PrimePoint pt{p, 7, 11, 0};
  const ModScalar seven(7, p);
  CHECK(specialize(qhat(), pt) == seven - seven.inverse());
}

TEST_CASE("quantum integers") {
  CHECK(qint(1) == Scalar(1L));
  CHECK(qint(2) == q + q.pow(-1));
  // (q^3 - q^-3) = (q - q^-1)(q^2 + 1 + q^-2)
  const Scalar three = poly({{1, 2, 0}, {1, 0, 0}, {1, -2, 0}});
  CHECK(qint(3) == three);
  CHECK(three * qhat() == poly({{1, 3, 0}, {-1, -3, 0}}));
  CHECK(qint(0).is_zero());
  for (int k = 1; k <= 6; ++k) CHECK(qint(-k) == -qint(k));
}

TEST_CASE("quantum factorials") {
  CHECK(qfact(0) == Scalar(1L));
  CHECK(qfact(2) == q + q.pow(-1));
  CHECK(qfact(3) == (q + q.pow(-1)) * poly({{1, 2, 0}, {1, 0, 0}, {1, -2, 0}}));
  for (int k = 1; k <= 8; ++k) CHECK(qfact(k) == qfact(k - 1) * qint(k));
}

TEST_CASE("delta is (qhat + r - r^-1)/qhat") {
  CHECK(delta() == (qhat() + r - r.inverse()) / qhat());
  CHECK(delta() == Scalar(1L) + (r - r.pow(-1)) / qhat());
}

TEST_CASE("delta is nonzero at three drawn points") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const PrimePoint pt = PrimePoint::draw(seed, 6);
    REQUIRE(pt.valid());
    CHECK_FALSE(specialize(delta(), pt).is_zero());
  }
}

TEST_CASE("subst_gamma examples") {
  CHECK(subst_gamma(q) == -q.pow(-1));
  CHECK(subst_gamma(r) == r);
  const Scalar one(1L);
  CHECK(subst_gamma(one / (one - q * r)) == one / (one + q.pow(-1) * r));
  for (int k = 1; k <= 6; ++k) CHECK(subst_gamma(qint(k)) == (k % 2 ? qint(k) : -qint(k)));
}

TEST_CASE("subst_gamma is an involutive ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int j = 0; j < 100; ++j) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(subst_gamma(subst_gamma(a)) == a);
    CHECK(subst_gamma(a * b) == subst_gamma(a) * subst_gamma(b));
    CHECK(subst_gamma(a + b) == subst_gamma(a) + subst_gamma(b));
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int j = 0; j < 60; ++j) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1L));
  }
}

TEST_CASE("specialize is a homomorphism at three valid points") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed : {4, 5, 6}) {
    const PrimePoint pt = PrimePoint::draw(seed, 5);
    for (int j = 0; j < 100; ++j) {
      const Scalar a = random_scalar(rng), b = random_scalar(rng);
      ModScalar sa, sb;
      try {
        sa = specialize(a, pt);
        sb = specialize(b, pt);
      } catch (const DenominatorVanishes&) {
        continue;
      }
      CHECK(specialize(a * b, pt) == sa * sb);
      CHECK(specialize(a + b, pt) == sa + sb);
      CHECK(specialize(a - b, pt) == sa - sb);
    }
  }
}

TEST_CASE("specialize of [2] is q0 + q0^-1") {
  const PrimePoint pt = PrimePoint::draw(9, 4);
  const ModScalar q0(pt.q0, pt.p);
  CHECK(specialize(qint(2), pt) == q0 + q0.inverse());
}

TEST_CASE("specialize rejects a vanishing denominator") {
  const std::uint64_t p = (std::uint64_t{1} << 31) - 1;
  const ModScalar q0(5, p);
  const PrimePoint pt{p, 5, q0.inverse().value(), 0};  // q0 r0 = 1
  const Scalar one(1L);
  CHECK_THROWS_AS(specialize(one / (one - q * r), pt), DenominatorVanishes);
  CHECK_FALSE(PrimePoint{p, 5, q0.inverse().value(), 2}.valid());
}

TEST_CASE("drawn points satisfy the guards, also at the gamma image") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PrimePoint pt = PrimePoint::draw(seed, 6);
    CHECK(pt.valid());
    CHECK(pt.gamma_image().valid());
    CHECK(pt.gamma_image().gamma_image() == pt);
    for (int k = 1; k <= 6; ++k) {
      CHECK_FALSE(specialize(Scalar(1L) - q.pow(2 * k - 1) * r, pt).is_zero());
      CHECK_FALSE(specialize(Scalar(1L) + q.pow(-2 * k + 1) * r, pt).is_zero());
    }
  }
}

TEST_CASE("is_r_free") {
  CHECK(qfact(4).is_r_free());
  CHECK_FALSE(delta().is_r_free());
  CHECK((r / r).is_r_free());
}
