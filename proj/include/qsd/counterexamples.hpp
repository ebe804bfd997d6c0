#ifndef QSD_COUNTEREXAMPLES_HPP
#define QSD_COUNTEREXAMPLES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsd/enumerate.hpp"
#include "qsd/streams.hpp"

namespace qsd {

// The pointwise machine that traps the naive update loop: value ½ on every
// (w,v,k) with w,v ∈ {λ,"0"}, halt costs arranged so the first three halts
// are (λ,λ,0), ("0","0",0), (λ,"0",0) — two accepted diagonal updates, then
// a rejected off-diagonal one — and every other defined input halts only
// after stage 10⁴.
Machine naiveTrapMachine();

// The rank-one projection onto ½|λ⟩ + (√3/2)|0⟩, exact over Q(i)(√3):
// ¼[[1,√3],[√3,3]]. PSD, trace 1, idempotent; its off-diagonal entry is not
// complex-rational, and neither is c·ρ's for any nonzero rational c.
HermOp rankOneIrrationalExample();

// Uniform superposition over all strings of length n, amplitudes 1 with
// normSquared = 2^n.
TaggedState uniformSuperpositionFamily(std::uint64_t n);

// Uniform superposition over members 2^{n−1}..2^n−1 of the given family
// (n ≥ 1), sampled at the given precision; normSquared = 2^{n−1}.
TaggedState blockFamily(const StateFamily& fam, std::uint64_t n,
                        const StringIndex& window, std::uint64_t precision);

// |ψ_l⟩ = |stringOf(l)⟩, with exact 0/1 amplitudes.
StateFamily computationalBasisFamily();

// Amplitude rule of the uniform superpositions: dyadic approximations of
// 2^{−n/2} within 2^{−k} on length-n strings.
StateFamily uniformSuperpositionStateFamily();

struct WitnessReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, bool>> verdicts;
};

std::string witnessReportTextTable(const WitnessReport& report);

// Per-level domination table against the diagonal candidate: for
// m̄(n) = 2^{−n} Σ_{len(w)=n} m(w) and the witness w(n) = 2^n·m̄(n), the
// minimal cₙ with cₙ·w(n) ≤ m̄(n) is 2^{−n}, so no uniform constant exists.
// Zero rows are marked degenerate and excluded from the verdicts.
WitnessReport diagonalDominationTable(const std::map<Rank, Rational>& m, std::uint64_t N);

// m(w) = 2^{−2·len(w)−1} on all strings of length ≤ maxLen (total ≤ 1).
std::map<Rank, Rational> dyadicLengthSemimeasure(std::uint64_t maxLen);

}  // namespace qsd

#endif
