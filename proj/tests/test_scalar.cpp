#include "doctest.h"

#include "oracles.hpp"
#include "qsd/scalar.hpp"

using namespace qsd;

namespace {
Scalar randomScalar(testing::Rng& rng) {
  return Scalar(rng.rational(6, 6), rng.rational(6, 6), rng.rational(6, 6),
                rng.rational(6, 6));
}
}  // namespace

TEST_CASE("scalar arithmetic basics") {
  Scalar one = Scalar::ofInt(1);
  Scalar i = Scalar::imaginaryUnit();
  CHECK(one + i == Scalar(Rational(1), Rational(1)));

  Scalar r3 = Scalar::sqrt3();
  CHECK(r3 * r3 == Scalar::ofInt(3));

  Scalar a(makeRational(2), makeRational(3), makeRational(1), makeRational(-1));
  CHECK(conj(a) == Scalar(makeRational(2), makeRational(-3), makeRational(1),
                          makeRational(1)));
}

TEST_CASE("scalar division and inverses") {
  Scalar z(makeRational(1, 2), makeRational(-2, 3), makeRational(3, 5),
           makeRational(1, 7));
  Scalar q = z / z;
  CHECK(q == Scalar::ofInt(1));
  CHECK_THROWS_AS(z / Scalar(), DomainError);

  // Division agrees with multiplication by the inverse.
  Scalar w(makeRational(-3, 4), makeRational(1), makeRational(0), makeRational(2, 9));
  CHECK((z / w) * w == z);
}

TEST_CASE("signOfReal decides the sign of p + q*sqrt(3) exactly") {
  // 1 − √3 < 0 because 1² < 3·1².
  CHECK(signOfReal(Scalar(makeRational(1), Rational(0), makeRational(-1))) == -1);
  // 2 − √3 > 0 because 4 > 3.
  CHECK(signOfReal(Scalar(makeRational(2), Rational(0), makeRational(-1))) == 1);
  CHECK(signOfReal(Scalar()) == 0);
  CHECK(signOfReal(Scalar(Rational(0), Rational(0), makeRational(5, 3))) == 1);
  CHECK(signOfReal(Scalar(makeRational(-7), Rational(0), makeRational(4))) == -1);
  CHECK(signOfReal(Scalar(makeRational(-5), Rational(0), makeRational(3))) == 1);
  CHECK_THROWS_AS(signOfReal(Scalar::imaginaryUnit()), DomainError);
}

TEST_CASE("isComplexRational") {
  CHECK(Scalar(makeRational(1, 2), makeRational(3)).isComplexRational());
  CHECK_FALSE(Scalar(Rational(0), Rational(0), makeRational(1, 4)).isComplexRational());
  CHECK(Scalar().isComplexRational());
}

TEST_CASE("field axioms on randomized triples") {
  testing::Rng rng(20240511);
  for (int t = 0; t < 200; ++t) {
    Scalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Scalar());
    if (!a.isZero()) CHECK(a * (Scalar::ofInt(1) / a) == Scalar::ofInt(1));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("a * conj(a) is real and nonnegative") {
  testing::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar a = randomScalar(rng);
    Scalar n = absSquared(a);
    CHECK(n.isReal());
    CHECK(signOfReal(n) >= 0);
  }
}

TEST_CASE("complex rationals are closed under arithmetic") {
  testing::Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    Scalar a = rng.complexRational(), b = rng.complexRational();
    CHECK((a + b).isComplexRational());
    CHECK((a * b).isComplexRational());
    CHECK(conj(a).isComplexRational());
    if (!b.isZero()) CHECK((a / b).isComplexRational());
  }
}

TEST_CASE("scalar text round-trips bit-exactly") {
  testing::Rng rng(1234);
  CHECK(scalarText(Scalar()) == "0/1");
  CHECK(parseScalar("0/1") == Scalar());
  Scalar ex(makeRational(1, 4), Rational(0), makeRational(1, 4));
  CHECK(scalarText(ex) == "1/4 + 1/4 s3");
  // Omitted-zero and explicit-zero forms parse to the same value.
  CHECK(parseScalar("1/4 + 0/1 i + 1/4 s3 + 0/1 i*s3") == ex);
  for (int t = 0; t < 200; ++t) {
    Scalar a = randomScalar(rng);
    std::string text = scalarText(a);
    CHECK(parseScalar(text) == a);
    CHECK(scalarText(parseScalar(text)) == text);
  }
  CHECK_THROWS_AS(parseScalar("1/0"), DomainError);
  CHECK_THROWS_AS(parseScalar("banana"), DomainError);
  CHECK_THROWS_AS(parseScalar("1/2 zzz"), DomainError);
}
