#ifndef QSD_STREAMS_HPP
#define QSD_STREAMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsd/hermop.hpp"

namespace qsd {

enum class StreamKind { lower, upper, computable, raw };

// A rule n ↦ operator (n ≥ 1). kind=computable carries the guarantee
// ‖ρ − ρ_n‖ < 2^{−n}; lower/upper declare Loewner monotonicity, checked
// lazily by the validators below (rules are black boxes).
struct ApproxStream {
  std::function<HermOp(std::uint64_t)> rule;
  StreamKind kind = StreamKind::raw;
};

// (w, v, n) ↦ value with |⟨w|ρv⟩ − rule(w,v,n)| < 2^{−n}. Hermitian
// consistency is not assumed; consumers symmetrize.
struct CoeffApprox {
  std::function<Scalar(const StringIndex&, const StringIndex&, std::uint64_t)> rule;
};

// (k, n, w) ↦ amplitude approximation with |⟨w|ψ_n⟩ − rule(k,n,w)| < 2^{−k}.
struct StateFamily {
  std::function<Scalar(std::uint64_t, std::uint64_t, const StringIndex&)> rule;
};

// (index, k) ↦ rational, monotone in k, totals ≤ 1.
struct SemimeasureApprox {
  std::function<Rational(std::uint64_t, std::uint64_t)> rule;
};

// Entry rule of an operator with possibly infinite support; materialized at
// finite windows on demand.
struct OperatorRule {
  std::function<Scalar(const StringIndex&, const StringIndex&)> entry;
};

HermOp materialize(const OperatorRule& rule, const StringIndex& window);

// The regularity data of a candidate lower approximation: a raw operator
// stream ρ_n, the reference density σ, and the support-bound function f.
struct ConjectureBundle {
  ApproxStream rhoStream;
  OperatorRule sigma;
  std::function<StringIndex(std::uint64_t)> supportBound;
};

struct BundleReport {
  struct Failure {
    int condition;  // 1, 3 or 4 (condition 2 is structural)
    std::uint64_t n;
    friend bool operator==(const Failure&, const Failure&) = default;
  };
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

// Quadratic-form encoding of matrix entries: value at e_w + e_v for w ≤ v
// (length-lex), at e_w + i·e_v for w > v.
Scalar polarizationEncode(const HermOp& rho, const StringIndex& w, const StringIndex& v);

using EncodedTable = std::function<Scalar(const StringIndex&, const StringIndex&)>;

// Inverse of the encoding; reconstructs ⟨w|ρv⟩ from the four encoded values
// at (w,v), (v,w), (w,w), (v,v). Throws DomainError on an inconsistent table
// (non-real diagonal reconstruction).
Scalar polarizationDecode(const EncodedTable& q, const StringIndex& w, const StringIndex& v);

// Decodes every entry with ranks inside the window.
HermOp polarizationDecodeOperator(const EncodedTable& q, const StringIndex& window);

// Entry views of a computable operator stream; inherits the 2^{−n} bound.
CoeffApprox coeffApproxFromOpApprox(const ApproxStream& s);

// Rebuilds a computable operator stream from entry approximations, sampling
// entry (w,v) at precision ⌈(rank w + rank v + n)/2⌉ + 1 on a window of rank n.
ApproxStream opApproxFromCoeffApprox(const CoeffApprox& c);

// Merges a lower and an upper approximation of the same operator into a
// computable one: rule(n) = lo.rule(m) for the first m whose polarization gap
// against hi.rule(m) is below 2^{−n} on the rank-n window. Throws
// NotConvergedError when no m ≤ searchBudget works.
ApproxStream approxFromLowerUpper(const ApproxStream& lo, const ApproxStream& hi,
                                  std::uint64_t searchBudget = 64);

// rule(n) = s.rule(n) ∓ 2^{−n+2}·I on the union of the windows of s.rule(n)
// and s.rule(n+1).
ApproxStream lowerFromComputable(const ApproxStream& s);
ApproxStream upperFromComputable(const ApproxStream& s);

// Mixture term Σ_{n ≤ nCutoff} m(n,k)·|ψ_{k,n}⟩⟨ψ_{k,n}| − 2^{−(k+1)}·I_window,
// with amplitude ⟨w|ψ_{k,n}⟩ = fam(k + rank(w), n, w).
HermOp mixtureLowerApprox(const StateFamily& fam, const SemimeasureApprox& m,
                          std::uint64_t k, const StringIndex& window,
                          std::uint64_t nCutoff);

// Checks conditions 1 (positivity and almost-increase against σ),
// 3 (P_{f(n)} ρ_n P_{f(n)} = ρ_n) and 4 (compressed σ_n monotone) for
// n = 1..N; failures are report rows, never exceptions.
BundleReport validateConjectureBundle(const ConjectureBundle& b, std::uint64_t N);

// ½(ρ_n + (1 − 2^{−n})·σ_n): positive, windowed by f(n), increasing in n for
// a valid bundle.
HermOp primedStream(const ConjectureBundle& b, std::uint64_t n);

// Lazy validators for stream invariants; return the first offending n ≤ N.
std::optional<std::uint64_t> firstMonotonicityFailure(const ApproxStream& s, std::uint64_t N);
std::optional<std::uint64_t> firstNonComplexRationalEntry(const ApproxStream& s, std::uint64_t N);

// Named closed-form families accepted from config files.
ApproxStream geometricDiagonalStream(const Rational& lead, const Rational& ratio,
                                     StreamKind kind = StreamKind::raw);
ApproxStream scaledProjectionStream(const Vec& v, StreamKind kind = StreamKind::raw);
ApproxStream constantStream(const HermOp& op, StreamKind kind = StreamKind::raw);
// σ with diagonal 2^{−rank(w)−1}: a density operator on every window.
OperatorRule geometricDiagonalDensity();
OperatorRule constantOperatorRule(const HermOp& op);
// f(n) = stringOf(scale·n + offset); throws DomainError if negative.
std::function<StringIndex(std::uint64_t)> affineRankSupport(long scale, long offset);

}  // namespace qsd

#endif
