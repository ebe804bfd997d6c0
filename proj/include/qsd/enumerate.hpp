#ifndef QSD_ENUMERATE_HPP
#define QSD_ENUMERATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsd/machines.hpp"

namespace qsd {

struct TraceEvent {
  std::uint64_t stage;
  MachineInput input;
  MachineValue proposal;
  bool accepted;
  std::string reason;  // "ok" | "order" | "trace" | "nonreal-diagonal" | "nonhermitian"
};

struct ClassicalEnumState {
  std::map<Rank, Rational> alpha;
  std::vector<TraceEvent> trace;
};

struct QuantumEnumState {
  HermOp nu;
  std::vector<TraceEvent> trace;
};

// Dovetails a classicalSemimeasure machine; a halt with value q at (w,k) is
// accepted iff q ≥ α_w and (Σ_{v≠w} α_v) + q ≤ 1, in that check order.
// Proposals equal to the current value are accepted (ties recorded).
ClassicalEnumState enumerateClassical(const Machine& m, std::uint64_t totalStages);

// m(w) = Σ_{n ≤ |registry|} 2^{−n} · α^{(n)}_w after totalStages each.
std::map<Rank, Rational> universalSemimeasure(const Registry& r, std::uint64_t totalStages);

// The pointwise update loop: a halt with value z at (w',v',k) proposes ρ'
// equal to ρ with entries (w',v') := z and (v',w') := conj(z); accepted iff
// ρ ≤ ρ' and Tr ρ' ≤ 1. Exists to demonstrate the failure mode of pointwise
// updates; not the construction behind the universal operator.
QuantumEnumState enumerateQuantumNaive(const Machine& m, std::uint64_t totalStages);

// The matrix-valued loop: a halt with matrix M at k is accepted iff
// ν ≤ embed(M) and Tr M ≤ 1; then ν := embed(M).
QuantumEnumState enumerateQuantumMatrix(const Machine& m, std::uint64_t totalStages);

// μ_T = Σ_{n ≤ |registry|} 2^{−n} · ν^{(n)}_T.
HermOp universalOperator(const Registry& r, std::uint64_t totalStages);

struct DominationWitness {
  Rational c;
  std::uint64_t stages;
};

// Scans stage counts T ≤ maxT (μ_T only changes at accepted halt events, so
// those stages are the candidates) for the first T at which
// c·target ≤ μ_T holds with dyadic c = 2^{−(n+1)}; then doubles c while the
// order still holds and returns the witness. For target = 0 the threshold
// constant itself is returned at the first candidate.
std::optional<DominationWitness> dominationConstantSearch(const HermOp& target,
                                                          const Registry& r,
                                                          std::uint64_t n,
                                                          std::uint64_t maxT);

}  // namespace qsd

#endif
