#include "doctest.h"

#include "oracles.hpp"
#include "qsd/hermop.hpp"

using namespace qsd;

namespace {

const StringIndex kLambda = StringIndex::lambda();
const StringIndex kZeroStr = StringIndex::fromBits("0");

// [[3,2],[2,1]] on {λ, 0}: the non-positive matrix whose polarization values
// are all nonnegative.
HermOp nonPositiveExample() {
  HermOp a(kZeroStr);
  a.set(kLambda, kLambda, Scalar::ofInt(3));
  a.set(kLambda, kZeroStr, Scalar::ofInt(2));
  a.set(kZeroStr, kZeroStr, Scalar::ofInt(1));
  return a;
}

HermOp diag(std::vector<Rational> values) {
  HermOp out(StringIndex::fromRank(values.empty() ? 0 : values.size() - 1));
  for (std::size_t r = 0; r < values.size(); ++r) {
    StringIndex w = StringIndex::fromRank(r);
    out.set(w, w, Scalar(values[r]));
  }
  return out;
}

Vec threeFifthsFourFifths() {
  Vec v(kZeroStr);
  v.set(kLambda, Scalar(makeRational(3, 5)));
  v.set(kZeroStr, Scalar(makeRational(4, 5)));
  return v;
}

}  // namespace

TEST_CASE("isPSD on pinned examples") {
  CHECK_FALSE(isPSD(nonPositiveExample()));
  CHECK(isPSD(HermOp::zero(kZeroStr)));
  HermOp proj = rankOneFromVector(threeFifthsFourFifths());
  CHECK(proj.entry(kLambda, kLambda) == Scalar(makeRational(9, 25)));
  CHECK(proj.entry(kLambda, kZeroStr) == Scalar(makeRational(12, 25)));
  CHECK(isPSD(proj));
  // Independent oracle agrees: char poly of the projection is x² − x.
  CHECK(testing::psdByCharPoly(proj));
  CHECK_FALSE(testing::psdByCharPoly(nonPositiveExample()));
}

TEST_CASE("isPSD handles semidefinite zero-diagonal cases") {
  // Zero diagonal with nonzero off-diagonal is not PSD even though every
  // leading principal minor vanishes.
  HermOp offOnly(kZeroStr);
  offOnly.set(kLambda, kZeroStr, Scalar(makeRational(1, 2)));
  CHECK_FALSE(isPSD(offOnly));
  CHECK_FALSE(testing::psdByCharPoly(offOnly));

  HermOp diagZero = diag({Rational(0), makeRational(1, 2)});
  CHECK(isPSD(diagZero));
}

TEST_CASE("isPSD agrees with the characteristic-polynomial oracle") {
  testing::Rng rng(424242);
  for (int t = 0; t < 300; ++t) {
    std::size_t size = 1 + static_cast<std::size_t>(rng.intIn(0, 3));
    HermOp a = testing::randomHermitian(rng, size);
    CHECK(isPSD(a) == testing::psdByCharPoly(a));
  }
  // PSD-by-construction samples exercise the accepting path.
  for (int t = 0; t < 100; ++t) {
    std::size_t size = 1 + static_cast<std::size_t>(rng.intIn(0, 3));
    HermOp a = testing::randomPsdSubDensity(rng, size);
    CHECK(isPSD(a));
    CHECK(testing::psdByCharPoly(a));
  }
}

TEST_CASE("loewnerLeq basics") {
  HermOp half = diag({makeRational(1, 2), makeRational(1, 2)});
  HermOp full(kZeroStr);
  full.set(kLambda, kLambda, Scalar(makeRational(1, 2)));
  full.set(kLambda, kZeroStr, Scalar(makeRational(1, 2)));
  full.set(kZeroStr, kZeroStr, Scalar(makeRational(1, 2)));
  // The rejected naive update: ½[[1,1],[1,1]] does not dominate diag(½,½).
  CHECK_FALSE(loewnerLeq(half, full));

  CHECK(loewnerLeq(half, half));
  CHECK(loewnerLeq(HermOp::zero(kLambda), diag({makeRational(1, 2), Rational(0)})));
}

TEST_CASE("loewnerLeq order axioms on random samples") {
  testing::Rng rng(5150);
  for (int t = 0; t < 40; ++t) {
    HermOp a = testing::randomPsdSubDensity(rng, 3);
    HermOp b = a + testing::randomPsdSubDensity(rng, 3);
    HermOp c = b + testing::randomPsdSubDensity(rng, 3);
    CHECK(loewnerLeq(a, a));
    CHECK(loewnerLeq(a, b));
    CHECK(loewnerLeq(b, c));
    CHECK(loewnerLeq(a, c));  // transitivity along the constructed chain
    if (loewnerLeq(b, a)) CHECK(a == b);  // antisymmetry
  }
}

TEST_CASE("trace and hsNormSquared") {
  HermOp g = nonPositiveExample();
  CHECK(trace(g) == Scalar::ofInt(4));
  CHECK(hsNormSquared(g) == Scalar::ofInt(18));  // 9 + 4 + 4 + 1
  CHECK(trace(HermOp::zero(kLambda)) == Scalar());
  CHECK(hsNormSquared(HermOp::zero(kLambda)) == Scalar());
}

TEST_CASE("compress") {
  HermOp d = diag({makeRational(1, 2), makeRational(1, 4), makeRational(1, 8)});
  HermOp dropped = compress(d, kZeroStr);
  CHECK(dropped == diag({makeRational(1, 2), makeRational(1, 4)}));
  CHECK(compress(d, d.window()) == d);
  HermOp gl = compress(nonPositiveExample(), kLambda);
  CHECK(gl.allEntries().size() == 1);
  CHECK(gl.entry(kLambda, kLambda) == Scalar::ofInt(3));

  // Compression preserves positivity.
  testing::Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    HermOp a = testing::randomPsdSubDensity(rng, 4);
    CHECK(isPSD(compress(a, kZeroStr)));
  }
}

TEST_CASE("embed") {
  HermOp one = embed({{Scalar::ofInt(1)}});
  CHECK(one.entry(kLambda, kLambda) == Scalar::ofInt(1));
  HermOp id2 = embed({{Scalar::ofInt(1), Scalar()}, {Scalar(), Scalar::ofInt(1)}});
  CHECK(id2 == HermOp::identity(kZeroStr));
  HermOp g = embed({{Scalar::ofInt(3), Scalar::ofInt(2)},
                    {Scalar::ofInt(2), Scalar::ofInt(1)}});
  CHECK(g == nonPositiveExample());
  CHECK_THROWS_AS(embed({{Scalar::ofInt(1), Scalar::ofInt(2)},
                         {Scalar::ofInt(3), Scalar::ofInt(1)}}),
                  DomainError);
  CHECK_THROWS_AS(embed({{Scalar::imaginaryUnit()}}), DomainError);
}

TEST_CASE("rank-one constructions and quadratic forms") {
  Vec v = threeFifthsFourFifths();
  HermOp proj = rankOneFromVector(v);
  CHECK(proj.entry(kZeroStr, kZeroStr) == Scalar(makeRational(16, 25)));
  CHECK(trace(proj) == Scalar::ofInt(1));
  CHECK(square(proj) == proj);

  Vec ones(kZeroStr);
  ones.set(kLambda, Scalar::ofInt(1));
  ones.set(kZeroStr, Scalar::ofInt(1));
  CHECK(applyQuadForm(nonPositiveExample(), ones) == Scalar::ofInt(8));
  CHECK(applyQuadForm(nonPositiveExample(), Vec()) == Scalar());

  // Positivity of quadratic forms under isPSD.
  testing::Rng rng(88);
  HermOp psd = testing::randomPsdSubDensity(rng, 4);
  REQUIRE(isPSD(psd));
  for (int t = 0; t < 100; ++t) {
    Vec x(StringIndex::fromRank(3));
    for (Rank r = 0; r < 4; ++r) x.set(StringIndex::fromRank(r), rng.complexRational(5, 5));
    Scalar q = applyQuadForm(psd, x);
    CHECK(q.isReal());
    CHECK(signOfReal(q) >= 0);
  }
}

TEST_CASE("isPSD implies nonnegative diagonal and trace") {
  testing::Rng rng(1717);
  for (int t = 0; t < 60; ++t) {
    HermOp a = testing::randomHermitian(rng, 3);
    if (!isPSD(a)) continue;
    for (const auto& [rc, z] : a.allEntries())
      if (rc.first == rc.second) CHECK(signOfReal(z) >= 0);
    CHECK(signOfReal(trace(a)) >= 0);
  }
}

TEST_CASE("dominatedByRankOne") {
  HermOp rho = rankOneFromVector(threeFifthsFourFifths());

  HermOp sigma = scaleReal(rho, Scalar(makeRational(1, 3)));
  auto c = dominatedByRankOne(sigma, rho);
  REQUIRE(c.has_value());
  CHECK(*c == Scalar(makeRational(1, 3)));

  auto zero = dominatedByRankOne(HermOp::zero(kZeroStr), rho);
  REQUIRE(zero.has_value());
  CHECK(*zero == Scalar());

  HermOp unrelated = diag({makeRational(1, 2), Rational(0)});
  CHECK_FALSE(dominatedByRankOne(unrelated, rho).has_value());

  // rho must be a rank-one projection.
  CHECK_THROWS_AS(dominatedByRankOne(sigma, nonPositiveExample()), DomainError);
}

TEST_CASE("window bookkeeping") {
  HermOp a(kLambda);
  CHECK_THROWS_AS(a.set(kLambda, kZeroStr, Scalar::ofInt(1)), DomainError);
  a.extendWindowTo(kZeroStr);
  a.set(kLambda, kZeroStr, Scalar::imaginaryUnit());
  CHECK(a.entry(kZeroStr, kLambda) == Scalar(Rational(0), makeRational(-1)));
  CHECK_THROWS_AS(a.set(kLambda, kLambda, Scalar::imaginaryUnit()), DomainError);
}
