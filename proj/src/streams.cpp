#include "qsd/streams.hpp"

#include <string>

namespace qsd {

namespace {

Scalar absReal(const Scalar& x) { return signOfReal(x) < 0 ? -x : x; }

Scalar quarter() { return Scalar(makeRational(1, 4)); }

// e_w + i^k · e_v as a finitely supported vector.
Vec polarVector(const StringIndex& w, const StringIndex& v, int k) {
  Scalar phase;
  switch (k % 4) {
    case 0: phase = Scalar::ofInt(1); break;
    case 1: phase = Scalar::imaginaryUnit(); break;
    case 2: phase = Scalar::ofInt(-1); break;
    default: phase = -Scalar::imaginaryUnit(); break;
  }
  Vec x(maxByRank(w, v));
  if (w == v) {
    x.set(w, Scalar::ofInt(1) + phase);
  } else {
    x.set(w, Scalar::ofInt(1));
    x.set(v, phase);
  }
  return x;
}

}  // namespace

HermOp materialize(const OperatorRule& rule, const StringIndex& window) {
  HermOp out(window);
  for (Rank r = 0; r <= window.rank(); ++r)
    for (Rank c = r; c <= window.rank(); ++c)
      out.set(StringIndex::fromRank(r), StringIndex::fromRank(c),
              rule.entry(StringIndex::fromRank(r), StringIndex::fromRank(c)));
  return out;
}

Scalar polarizationEncode(const HermOp& rho, const StringIndex& w, const StringIndex& v) {
  return applyQuadForm(rho, polarVector(w, v, w <= v ? 0 : 1));
}

Scalar polarizationDecode(const EncodedTable& q, const StringIndex& w, const StringIndex& v) {
  if (w == v) {
    Scalar d = q(w, w) / Scalar::ofInt(4);
    if (!d.isReal())
      throw DomainError("polarization table reconstructs a non-real diagonal at '" +
                        w.bits() + "'");
    return d;
  }
  if (v < w) return conj(polarizationDecode(q, v, w));
  Scalar dw = q(w, w) * quarter();
  Scalar dv = q(v, v) * quarter();
  if (!dw.isReal() || !dv.isReal())
    throw DomainError("polarization table reconstructs a non-real diagonal");
  Scalar half = Scalar(makeRational(1, 2));
  Scalar re = (q(w, v) - dw - dv) * half;
  Scalar im = (q(v, w) - dw - dv) * half;
  if (!re.isReal() || !im.isReal())
    throw DomainError("inconsistent polarization table at (" + w.bits() + "," +
                      v.bits() + ")");
  return re + Scalar::imaginaryUnit() * im;
}

HermOp polarizationDecodeOperator(const EncodedTable& q, const StringIndex& window) {
  HermOp out(window);
  for (Rank r = 0; r <= window.rank(); ++r)
    for (Rank c = r; c <= window.rank(); ++c)
      out.set(StringIndex::fromRank(r), StringIndex::fromRank(c),
              polarizationDecode(q, StringIndex::fromRank(r), StringIndex::fromRank(c)));
  return out;
}

CoeffApprox coeffApproxFromOpApprox(const ApproxStream& s) {
  if (s.kind != StreamKind::computable)
    throw DomainError("coeffApproxFromOpApprox requires a computable stream");
  auto rule = s.rule;
  return CoeffApprox{[rule](const StringIndex& w, const StringIndex& v, std::uint64_t n) {
    return rule(n).entry(w, v);
  }};
}

ApproxStream opApproxFromCoeffApprox(const CoeffApprox& c) {
  auto coeff = c.rule;
  ApproxStream out;
  out.kind = StreamKind::computable;
  out.rule = [coeff](std::uint64_t n) {
    StringIndex window = StringIndex::fromRank(n);
    HermOp op(window);
    Scalar half = Scalar(makeRational(1, 2));
    for (Rank r = 0; r <= n; ++r)
      for (Rank col = r; col <= n; ++col) {
        StringIndex w = StringIndex::fromRank(r), v = StringIndex::fromRank(col);
        std::uint64_t g = (r + col + n + 1) / 2 + 1;  // ⌈(w+v+n)/2⌉ + 1
        Scalar sym = (coeff(w, v, g) + conj(coeff(v, w, g))) * half;
        op.set(w, v, sym);
      }
    return op;
  };
  return out;
}

ApproxStream approxFromLowerUpper(const ApproxStream& lo, const ApproxStream& hi,
                                  std::uint64_t searchBudget) {
  if (lo.kind != StreamKind::lower || hi.kind != StreamKind::upper)
    throw DomainError("approxFromLowerUpper requires a lower and an upper stream");
  auto loRule = lo.rule;
  auto hiRule = hi.rule;
  ApproxStream out;
  out.kind = StreamKind::computable;
  out.rule = [loRule, hiRule, searchBudget](std::uint64_t n) {
    Scalar bound(pow2(-static_cast<long>(n)));
    for (std::uint64_t m = 1; m <= searchBudget; ++m) {
      HermOp gapOp = loRule(m) - hiRule(m);
      bool within = true;
      for (Rank r = 0; r <= n && within; ++r)
        for (Rank c = 0; c <= n && within; ++c) {
          Scalar gap;
          for (int k = 0; k < 4; ++k)
            gap = gap + absReal(applyQuadForm(
                      gapOp, polarVector(StringIndex::fromRank(r),
                                         StringIndex::fromRank(c), k)));
          gap = gap * quarter();
          if (compareReal(gap, bound) >= 0) within = false;
        }
      if (within) return loRule(m);
    }
    throw NotConvergedError("lower/upper gap not below 2^-" + std::to_string(n) +
                            " within search budget " + std::to_string(searchBudget));
  };
  return out;
}

namespace {

ApproxStream shiftedIdentityStream(const ApproxStream& s, int direction, StreamKind kind) {
  if (s.kind != StreamKind::computable)
    throw DomainError("identity-shift transformers require a computable stream");
  auto rule = s.rule;
  ApproxStream out;
  out.kind = kind;
  out.rule = [rule, direction](std::uint64_t n) {
    HermOp current = rule(n);
    HermOp next = rule(n + 1);
    StringIndex window = maxByRank(current.window(), next.window());
    Rational shift = pow2(2 - static_cast<long>(n));  // 2^{−n+2}
    HermOp scaled = scaleReal(HermOp::identity(window),
                              Scalar(direction < 0 ? Rational(-shift) : shift));
    return current + scaled;
  };
  return out;
}

}  // namespace

ApproxStream lowerFromComputable(const ApproxStream& s) {
  return shiftedIdentityStream(s, -1, StreamKind::lower);
}

ApproxStream upperFromComputable(const ApproxStream& s) {
  return shiftedIdentityStream(s, +1, StreamKind::upper);
}

HermOp mixtureLowerApprox(const StateFamily& fam, const SemimeasureApprox& m,
                          std::uint64_t k, const StringIndex& window,
                          std::uint64_t nCutoff) {
  HermOp acc(window);
  for (std::uint64_t n = 0; n <= nCutoff; ++n) {
    Rational weight = m.rule(n, k);
    Vec psi(window);
    for (Rank r = 0; r <= window.rank(); ++r) {
      StringIndex w = StringIndex::fromRank(r);
      psi.set(w, fam.rule(k + r, n, w));
    }
    acc = acc + scaleReal(rankOneFromVector(psi), Scalar(weight));
  }
  Rational shift = pow2(-static_cast<long>(k) - 1);
  return acc - scaleReal(HermOp::identity(window), Scalar(shift));
}

BundleReport validateConjectureBundle(const ConjectureBundle& b, std::uint64_t N) {
  BundleReport report;
  for (std::uint64_t n = 1; n <= N; ++n) {
    HermOp rhoN = b.rhoStream.rule(n);
    HermOp rhoNext = b.rhoStream.rule(n + 1);
    StringIndex fN = b.supportBound(n);
    StringIndex fNext = b.supportBound(n + 1);

    // Condition 1: ρ_n ≥ 0 and ρ_{n+1} − ρ_n ≥ −2^{−(n+1)}σ, checked at the
    // truncation window covering both iterates.
    bool cond1 = isPSD(rhoN);
    if (cond1) {
      StringIndex w = maxByRank(fNext, maxByRank(rhoN.window(), rhoNext.window()));
      HermOp sigmaW = materialize(b.sigma, w);
      HermOp floor = scaleReal(sigmaW, Scalar(Rational(-pow2(-static_cast<long>(n) - 1))));
      cond1 = loewnerLeq(floor, rhoNext - rhoN);
    }
    if (!cond1) report.failures.push_back({1, n});

    // Condition 3: finite matrix representation bound f(n).
    if (compress(rhoN, fN) != rhoN) report.failures.push_back({3, n});

    // Condition 4: σ_n = P_{f(n)} σ P_{f(n)} is monotone.
    HermOp sigmaN = materialize(b.sigma, fN);
    HermOp sigmaNext = materialize(b.sigma, fNext);
    if (!loewnerLeq(sigmaN, sigmaNext)) report.failures.push_back({4, n});
  }
  return report;
}

HermOp primedStream(const ConjectureBundle& b, std::uint64_t n) {
  HermOp rhoN = b.rhoStream.rule(n);
  StringIndex fN = b.supportBound(n);
  HermOp sigmaN = materialize(b.sigma, fN);
  Rational coeff = 1 - pow2(-static_cast<long>(n));
  return scaleReal(rhoN + scaleReal(sigmaN, Scalar(coeff)), Scalar(makeRational(1, 2)));
}

std::optional<std::uint64_t> firstMonotonicityFailure(const ApproxStream& s,
                                                      std::uint64_t N) {
  if (s.kind != StreamKind::lower && s.kind != StreamKind::upper)
    throw DomainError("monotonicity validator requires a lower or upper stream");
  for (std::uint64_t n = 1; n < N; ++n) {
    HermOp a = s.rule(n), b = s.rule(n + 1);
    bool ok = s.kind == StreamKind::lower ? loewnerLeq(a, b) : loewnerLeq(b, a);
    if (!ok) return n;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> firstNonComplexRationalEntry(const ApproxStream& s,
                                                          std::uint64_t N) {
  for (std::uint64_t n = 1; n <= N; ++n) {
    HermOp op = s.rule(n);
    for (const auto& [rc, z] : op.allEntries())
      if (!z.isComplexRational()) return n;
  }
  return std::nullopt;
}

ApproxStream geometricDiagonalStream(const Rational& lead, const Rational& ratio,
                                     StreamKind kind) {
  ApproxStream out;
  out.kind = kind;
  out.rule = [lead, ratio](std::uint64_t n) {
    StringIndex window = StringIndex::fromRank(n == 0 ? 0 : n - 1);
    HermOp op(window);
    Rational scale = 1 - pow2(-static_cast<long>(n));
    Rational term = lead;
    for (std::uint64_t j = 0; j < n; ++j) {
      StringIndex w = StringIndex::fromRank(j);
      op.set(w, w, Scalar(Rational(scale * term)));
      term *= ratio;
    }
    return op;
  };
  return out;
}

ApproxStream scaledProjectionStream(const Vec& v, StreamKind kind) {
  HermOp proj = rankOneFromVector(v);
  ApproxStream out;
  out.kind = kind;
  out.rule = [proj](std::uint64_t n) {
    return scaleReal(proj, Scalar(Rational(1 - pow2(-static_cast<long>(n)))));
  };
  return out;
}

ApproxStream constantStream(const HermOp& op, StreamKind kind) {
  ApproxStream out;
  out.kind = kind;
  out.rule = [op](std::uint64_t) { return op; };
  return out;
}

OperatorRule geometricDiagonalDensity() {
  return OperatorRule{[](const StringIndex& w, const StringIndex& v) {
    if (w != v) return Scalar();
    return Scalar(pow2(-static_cast<long>(w.rank()) - 1));
  }};
}

OperatorRule constantOperatorRule(const HermOp& op) {
  return OperatorRule{[op](const StringIndex& w, const StringIndex& v) {
    return op.entry(w, v);
  }};
}

std::function<StringIndex(std::uint64_t)> affineRankSupport(long scale, long offset) {
  return [scale, offset](std::uint64_t n) {
    long r = scale * static_cast<long>(n) + offset;
    if (r < 0) throw DomainError("support bound f(n) below rank 0");
    return StringIndex::fromRank(static_cast<Rank>(r));
  };
}

}  // namespace qsd
