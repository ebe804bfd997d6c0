#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qsd/counterexamples.hpp"
#include "qsd/entropy.hpp"

using namespace qsd;

namespace {

const StringIndex kLambda = StringIndex::lambda();
const StringIndex kZeroStr = StringIndex::fromBits("0");

HermOp diag(std::vector<Rational> values) {
  HermOp out(StringIndex::fromRank(values.empty() ? 0 : values.size() - 1));
  for (std::size_t r = 0; r < values.size(); ++r) {
    StringIndex w = StringIndex::fromRank(r);
    out.set(w, w, Scalar(values[r]));
  }
  return out;
}

}  // namespace

TEST_CASE("lowerEntropy on a diagonal mixture") {
  HermOp mu = diag({makeRational(1, 2), makeRational(1, 4)});

  ExtReal atLambda = lowerEntropy(mu, Vec::basisState(kLambda));
  REQUIRE_FALSE(atLambda.infinite);
  CHECK(atLambda.value == doctest::Approx(1.0).epsilon(1e-12));

  // Orthogonal to the support: the form vanishes exactly.
  CHECK(lowerEntropy(mu, Vec::basisState(StringIndex::fromBits("1"))).infinite);

  // (|λ⟩+|0⟩)/√2 through its norm² tag: −log₂(3/8).
  TaggedState plus{Vec(kZeroStr), Rational(2)};
  plus.raw.set(kLambda, Scalar::ofInt(1));
  plus.raw.set(kZeroStr, Scalar::ofInt(1));
  ExtReal mixed = lowerEntropy(mu, plus);
  REQUIRE_FALSE(mixed.infinite);
  CHECK(mixed.value == doctest::Approx(-std::log2(3.0 / 8.0)).epsilon(1e-12));

  Vec unnormalized(kLambda);
  unnormalized.set(kLambda, Scalar(makeRational(1, 2)));
  CHECK_THROWS_AS(lowerEntropy(mu, unnormalized), DomainError);
  TaggedState badTag{plus.raw, Rational(3)};
  CHECK_THROWS_AS(lowerEntropy(mu, badTag), DomainError);
}

TEST_CASE("upperEntropy on a diagonal mixture") {
  HermOp mu = diag({makeRational(1, 2), makeRational(1, 4)});

  ExtReal atZero = upperEntropy(mu, Vec::basisState(kZeroStr));
  REQUIRE_FALSE(atZero.infinite);
  CHECK(atZero.value == doctest::Approx(2.0).epsilon(1e-9));

  TaggedState plus{Vec(kZeroStr), Rational(2)};
  plus.raw.set(kLambda, Scalar::ofInt(1));
  plus.raw.set(kZeroStr, Scalar::ofInt(1));
  ExtReal mixed = upperEntropy(mu, plus);
  REQUIRE_FALSE(mixed.infinite);
  CHECK(mixed.value == doctest::Approx(1.5).epsilon(1e-9));  // ½·1 + ½·2

  CHECK(upperEntropy(mu, Vec::basisState(StringIndex::fromBits("1"))).infinite);
}

TEST_CASE("upperEntropy matches the diagonal closed form") {
  testing::Rng rng(314159);
  for (int t = 0; t < 40; ++t) {
    std::size_t dim = 4;
    Vec psi = testing::randomUnitState(rng, dim - 1);  // support within rank 3
    std::vector<Rational> entries;
    Rational sum(0);
    for (std::size_t r = 0; r < dim; ++r) {
      Rational v = makeRational(rng.intIn(1, 9), rng.intIn(1, 9));
      entries.push_back(v);
      sum += v;
    }
    for (Rational& v : entries) v /= 2 * sum;  // positive diagonal, trace ½
    HermOp mu = diag(entries);

    double closedForm = 0.0;
    for (const auto& [rank, amp] : psi.amps()) {
      double weight = toDoubleReal(absSquared(amp));
      closedForm += weight * (-std::log2(entries[rank].get_d()));
    }
    ExtReal spectral = upperEntropy(mu, psi);
    REQUIRE_FALSE(spectral.infinite);
    CHECK(std::abs(spectral.value - closedForm) < 1e-9);
  }
}

TEST_CASE("upper entropy dominates lower entropy") {
  testing::Rng rng(271828);
  int finitePairs = 0;
  for (int t = 0; t < 60; ++t) {
    HermOp mu = t % 3 == 0 ? testing::randomPsdSubDensity(rng, 4)
                           : testing::randomPsdFullRank(rng, 4);
    Vec psi = testing::randomUnitState(rng, 3);
    ExtReal upper = upperEntropy(mu, psi);
    ExtReal lower = lowerEntropy(mu, psi);
    if (upper.infinite) continue;  // +∞ dominates everything
    REQUIRE_FALSE(lower.infinite);
    CHECK(upper.value >= lower.value - 1e-6);
    ++finitePairs;
  }
  CHECK(finitePairs > 10);
}

TEST_CASE("entropies coincide on eigenvectors") {
  // Exact orthonormal pair (3/5,4/5), (−4/5,3/5).
  Vec v(kZeroStr), u(kZeroStr);
  v.set(kLambda, Scalar(makeRational(3, 5)));
  v.set(kZeroStr, Scalar(makeRational(4, 5)));
  u.set(kLambda, Scalar(makeRational(-4, 5)));
  u.set(kZeroStr, Scalar(makeRational(3, 5)));
  HermOp mu = scaleReal(rankOneFromVector(v), Scalar(makeRational(1, 2))) +
              scaleReal(rankOneFromVector(u), Scalar(makeRational(1, 4)));

  ExtReal upper = upperEntropy(mu, v);
  ExtReal lower = lowerEntropy(mu, v);
  REQUIRE_FALSE(upper.infinite);
  REQUIRE_FALSE(lower.infinite);
  CHECK(upper.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lower.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("inducedSemimeasure") {
  HermOp mu = diag({makeRational(1, 2), makeRational(1, 4), makeRational(1, 8)});
  StateFamily basis = computationalBasisFamily();
  CHECK(inducedSemimeasure(mu, basis, 0, 10) == makeRational(1, 2));
  CHECK(inducedSemimeasure(mu, basis, 1, 10) == makeRational(1, 4));
  CHECK(inducedSemimeasure(mu, basis, 2, 10) == makeRational(1, 8));

  CHECK(inducedSemimeasure(HermOp::zero(kZeroStr), basis, 0, 4) == 0);

  // Orthonormal sums stay at the trace.
  Rational total(0);
  for (std::uint64_t n = 0; n <= 2; ++n) total += inducedSemimeasure(mu, basis, n, 6);
  CHECK(total == trace(mu).rationalValue());

  // Uniform superpositions against a diagonal: 2^{−n}·Σ_{len(w)=n} m(w).
  // Even n uses exact dyadic amplitudes, so equality is exact.
  HermOp wide(StringIndex::fromRank(6));
  for (Rank r = 0; r <= 6; ++r)
    wide.set(StringIndex::fromRank(r), StringIndex::fromRank(r),
             Scalar(pow2(-static_cast<long>(r) - 2)));
  StateFamily uniform = uniformSuperpositionStateFamily();
  Rational expected = pow2(-2) * (pow2(-5) + pow2(-6) + pow2(-7) + pow2(-8));
  CHECK(inducedSemimeasure(wide, uniform, 2, 12) == expected);

  // Odd n: within the approximation budget of the amplitude rule.
  Rational approx = inducedSemimeasure(wide, uniform, 1, 24);
  Rational target = pow2(-1) * (pow2(-3) + pow2(-4));
  CHECK(abs(approx - target) < pow2(-20));
}
