#ifndef QSD_MACHINES_HPP
#define QSD_MACHINES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsd/hermop.hpp"

namespace qsd {

enum class MachineKind { classicalSemimeasure, quantumPointwise, quantumMatrix };

std::string machineKindName(MachineKind kind);
MachineKind machineKindFromName(const std::string& name);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct ClassicalInput {
  StringIndex w;
  std::uint64_t k = 0;
};
struct PointwiseInput {
  StringIndex w, v;
  std::uint64_t k = 0;
};
struct MatrixInput {
  std::uint64_t k = 0;
};
using MachineInput = std::variant<ClassicalInput, PointwiseInput, MatrixInput>;

using MachineValue = std::variant<Rational, Scalar, ScalarMatrix>;

// Cantor pairing π(x,y) = (x+y)(x+y+1)/2 + y; triples nest as π(a, π(b,c)).
std::uint64_t cantorPair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantorUnpair(std::uint64_t z);

// A step-cost-annotated partial function: a finite table plus an optional
// closed-form rule over the canonical input index. Evaluation with budget
// below the halt cost reports divergence-so-far; repeated evaluation is
// deterministic. Halt costs are ≥ 1.
class Machine {
 public:
  explicit Machine(MachineKind kind) : kind_(kind) {}

  MachineKind kind() const { return kind_; }

  void addTableEntry(const MachineInput& input, MachineValue value, std::uint64_t cost);
  void setRule(std::function<std::optional<std::uint64_t>(std::uint64_t)> cost,
               std::function<MachineValue(std::uint64_t)> value);

  // Canonical index space: classical (w,k) ↦ π(rank w, k); pointwise
  // (w,v,k) ↦ π(rank w, π(rank v, k)); matrix k ↦ k.
  MachineInput decodeInput(std::uint64_t index) const;
  std::uint64_t encodeInput(const MachineInput& input) const;  // checks the kind

  // Halt cost at the index, or nullopt when the machine diverges there.
  std::optional<std::uint64_t> costAt(std::uint64_t index) const;
  // Value at a defined index (table first, then rule).
  MachineValue valueAt(std::uint64_t index) const;

 private:
  MachineKind kind_;
  std::map<std::uint64_t, std::pair<MachineValue, std::uint64_t>> table_;
  std::function<std::optional<std::uint64_t>(std::uint64_t)> ruleCost_;
  std::function<MachineValue(std::uint64_t)> ruleValue_;
};

struct Registry {
  std::vector<Machine> machines;  // 1-based index in all derived formulas
};

// Value iff the halt cost is ≤ steps; never blocks. Throws DomainError when
// the input shape does not match the machine kind.
std::optional<MachineValue> evalWithBudget(const Machine& m, const MachineInput& input,
                                           std::uint64_t steps);

struct HaltEvent {
  std::uint64_t stage;  // 1-based position of the (index, budget) pair
  std::uint64_t inputIndex;
  MachineInput input;
  MachineValue value;
};

// Fair interleaving: pairs (inputIndex, budget) visited along Cantor
// diagonals d = 1, 2, ... (inputIndex ascending inside a diagonal, budget =
// d − inputIndex ≥ 1); a halt event fires the first time an input's budget
// reaches its halt cost. Deterministic, replayable.
std::vector<HaltEvent> dovetail(const Machine& m, std::uint64_t totalStages);

// Stage at which an input with the given halt cost fires (the fairness bound):
// d(d−1)/2 + inputIndex + 1 with d = inputIndex + cost.
std::uint64_t dovetailHaltStage(std::uint64_t inputIndex, std::uint64_t cost);

// Named closed-form machines accepted from registry files.

// quantumMatrix: value(k) = (1 − 2^{−k})·diag(lead, lead·ratio, ...) of size
// k×k; halt cost = costSlope·k + costBase.
Machine geometricMatrixMachine(const Rational& lead, const Rational& ratio,
                               std::uint64_t costSlope = 1, std::uint64_t costBase = 1);

// quantumMatrix: value(k) = (1 − 2^{−k})·|v⟩⟨v| on the dense span of v.
Machine scaledProjectionMachine(const std::vector<Scalar>& amplitudes,
                                std::uint64_t costSlope = 1, std::uint64_t costBase = 1);

// classicalSemimeasure: value(w,k) = (1 − 2^{−(k+1)})·2^{−2·len(w)−1}.
Machine dyadicLengthClassicalMachine(std::uint64_t costSlope = 1,
                                     std::uint64_t costBase = 1);

}  // namespace qsd

#endif
