#ifndef QSD_TESTS_ORACLES_HPP
#define QSD_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library's decision procedures.

#include <random>
#include <set>
#include <vector>

#include "qsd/hermop.hpp"

namespace qsd::testing {

using DenseMatrix = std::vector<std::vector<Scalar>>;

inline DenseMatrix denseFromSupport(const HermOp& a) {
  std::set<Rank> support;
  for (const auto& [rc, z] : a.allEntries()) {
    support.insert(rc.first);
    support.insert(rc.second);
  }
  std::vector<Rank> ranks(support.begin(), support.end());
  std::size_t k = ranks.size();
  DenseMatrix m(k, std::vector<Scalar>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m[r][c] = a.entryAt(ranks[r], ranks[c]);
  return m;
}

// Characteristic polynomial det(xI − M) = x^k + c_{k−1}x^{k−1} + ... + c_0
// by the Faddeev–LeVerrier recursion, exact.
inline std::vector<Scalar> charPolyCoefficients(const DenseMatrix& m) {
  std::size_t k = m.size();
  std::vector<Scalar> coeff(k + 1);
  coeff[k] = Scalar::ofInt(1);
  DenseMatrix work(k, std::vector<Scalar>(k));  // M_j
  for (std::size_t r = 0; r < k; ++r) work[r] = m[r];
  for (std::size_t j = 1; j <= k; ++j) {
    if (j > 1) {
      // work := M · (work + coeff[k−j+1]·I)
      DenseMatrix shifted = work;
      for (std::size_t r = 0; r < k; ++r)
        shifted[r][r] = shifted[r][r] + coeff[k - j + 1];
      DenseMatrix next(k, std::vector<Scalar>(k));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          Scalar sum;
          for (std::size_t t = 0; t < k; ++t) sum = sum + m[r][t] * shifted[t][c];
          next[r][c] = sum;
        }
      work = next;
    }
    Scalar tr;
    for (std::size_t r = 0; r < k; ++r) tr = tr + work[r][r];
    coeff[k - j] = -(tr / Scalar::ofInt(static_cast<long>(j)));
  }
  return coeff;
}

// PSD iff every eigenvalue ≥ 0 iff the coefficient signs alternate:
// (−1)^j · c_{k−j} ≥ 0 for j = 0..k.
inline bool psdByCharPoly(const HermOp& a) {
  DenseMatrix m = denseFromSupport(a);
  std::vector<Scalar> coeff = charPolyCoefficients(m);
  std::size_t k = m.size();
  for (std::size_t j = 0; j <= k; ++j) {
    Scalar signed_c = (j % 2 == 0) ? coeff[k - j] : -coeff[k - j];
    if (signOfReal(signed_c) < 0) return false;
  }
  return true;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long intIn(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rational rational(long maxAbsNum = 8, long maxDen = 8) {
    return makeRational(intIn(-maxAbsNum, maxAbsNum), intIn(1, maxDen));
  }
  Scalar complexRational(long maxAbsNum = 8, long maxDen = 8) {
    return Scalar(rational(maxAbsNum, maxDen), rational(maxAbsNum, maxDen));
  }
};

// Random hermitian operator on ranks 0..size−1 with complex-rational entries.
inline HermOp randomHermitian(Rng& rng, std::size_t size, long maxAbsNum = 8,
                              long maxDen = 8) {
  HermOp out(StringIndex::fromRank(size == 0 ? 0 : size - 1));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r; c < size; ++c) {
      Scalar z = r == c ? Scalar(rng.rational(maxAbsNum, maxDen))
                        : rng.complexRational(maxAbsNum, maxDen);
      out.set(StringIndex::fromRank(r), StringIndex::fromRank(c), z);
    }
  return out;
}

// Random PSD operator with trace ≤ 1: normalized mixture of rank-one terms.
inline HermOp randomPsdSubDensity(Rng& rng, std::size_t size, std::size_t terms = 3) {
  HermOp sum(StringIndex::fromRank(size == 0 ? 0 : size - 1));
  for (std::size_t t = 0; t < terms; ++t) {
    Vec v(StringIndex::fromRank(size - 1));
    for (std::size_t r = 0; r < size; ++r)
      v.set(StringIndex::fromRank(r), rng.complexRational(4, 4));
    sum = sum + rankOneFromVector(v);
  }
  Scalar tr = trace(sum);
  if (signOfReal(tr) == 0) return sum;  // zero operator
  long denom = rng.intIn(1, 3);
  return scaleReal(sum, Scalar(Rational(1, denom)) / tr);
}

// Full-rank PSD operator with trace ≤ 1: a rank-one mixture plus a small
// identity, rescaled. Every eigenvalue on the window is strictly positive.
inline HermOp randomPsdFullRank(Rng& rng, std::size_t size) {
  StringIndex window = StringIndex::fromRank(size - 1);
  HermOp sum = randomPsdSubDensity(rng, size) +
               scaleReal(HermOp::identity(window), Scalar(Rational(1, 64)));
  return scaleReal(sum, Scalar(Rational(1, 2)) / trace(sum));
}

// Exactly normalized random state via the stereographic section of the
// sphere: for rational u with s = ‖u‖², the vector (2u, s−1)/(s+1) is a
// unit vector with rational components.
inline Vec randomUnitState(Rng& rng, std::size_t dim) {
  std::vector<Scalar> u(dim);
  Rational s(0);
  for (std::size_t r = 0; r < dim; ++r) {
    u[r] = rng.complexRational(4, 4);
    s += absSquared(u[r]).rationalValue();
  }
  Vec v(StringIndex::fromRank(dim));  // one extra slot for the pole coordinate
  Rational denom = s + 1;
  for (std::size_t r = 0; r < dim; ++r)
    v.set(StringIndex::fromRank(r), u[r] * Scalar(Rational(2) / denom));
  v.set(StringIndex::fromRank(dim), Scalar((s - 1) / denom));
  return v;
}

}  // namespace qsd::testing

#endif
