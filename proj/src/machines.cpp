#include "qsd/machines.hpp"

#include <cmath>

namespace qsd {

std::string machineKindName(MachineKind kind) {
  switch (kind) {
    case MachineKind::classicalSemimeasure: return "classicalSemimeasure";
    case MachineKind::quantumPointwise: return "quantumPointwise";
    case MachineKind::quantumMatrix: return "quantumMatrix";
  }
  throw DomainError("unknown machine kind");
}

MachineKind machineKindFromName(const std::string& name) {
  if (name == "classicalSemimeasure") return MachineKind::classicalSemimeasure;
  if (name == "quantumPointwise") return MachineKind::quantumPointwise;
  if (name == "quantumMatrix") return MachineKind::quantumMatrix;
  throw DomainError("unknown machine kind: '" + name + "'");
}

std::uint64_t cantorPair(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = x + y;
  if (s >= (std::uint64_t{1} << 32))
    throw DomainError("machine input components too large to pair");
  return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> cantorUnpair(std::uint64_t z) {
  std::uint64_t s = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > z) --s;
  while ((s + 1) * (s + 2) / 2 <= z) ++s;
  std::uint64_t y = z - s * (s + 1) / 2;
  return {s - y, y};
}

void Machine::addTableEntry(const MachineInput& input, MachineValue value,
                            std::uint64_t cost) {
  if (cost == 0) throw DomainError("machine halt cost must be >= 1");
  table_[encodeInput(input)] = {std::move(value), cost};
}

void Machine::setRule(std::function<std::optional<std::uint64_t>(std::uint64_t)> cost,
                      std::function<MachineValue(std::uint64_t)> value) {
  ruleCost_ = std::move(cost);
  ruleValue_ = std::move(value);
}

MachineInput Machine::decodeInput(std::uint64_t index) const {
  switch (kind_) {
    case MachineKind::classicalSemimeasure: {
      auto [a, k] = cantorUnpair(index);
      return ClassicalInput{StringIndex::fromRank(a), k};
    }
    case MachineKind::quantumPointwise: {
      auto [a, rest] = cantorUnpair(index);
      auto [b, k] = cantorUnpair(rest);
      return PointwiseInput{StringIndex::fromRank(a), StringIndex::fromRank(b), k};
    }
    case MachineKind::quantumMatrix:
      return MatrixInput{index};
  }
  throw DomainError("unknown machine kind");
}

std::uint64_t Machine::encodeInput(const MachineInput& input) const {
  if (kind_ == MachineKind::classicalSemimeasure) {
    const auto* in = std::get_if<ClassicalInput>(&input);
    if (!in) throw DomainError("input shape does not match classicalSemimeasure");
    return cantorPair(in->w.rank(), in->k);
  }
  if (kind_ == MachineKind::quantumPointwise) {
    const auto* in = std::get_if<PointwiseInput>(&input);
    if (!in) throw DomainError("input shape does not match quantumPointwise");
    return cantorPair(in->w.rank(), cantorPair(in->v.rank(), in->k));
  }
  const auto* in = std::get_if<MatrixInput>(&input);
  if (!in) throw DomainError("input shape does not match quantumMatrix");
  return in->k;
}

std::optional<std::uint64_t> Machine::costAt(std::uint64_t index) const {
  auto it = table_.find(index);
  if (it != table_.end()) return it->second.second;
  if (ruleCost_) return ruleCost_(index);
  return std::nullopt;
}

MachineValue Machine::valueAt(std::uint64_t index) const {
  auto it = table_.find(index);
  if (it != table_.end()) return it->second.first;
  if (ruleCost_ && ruleCost_(index)) return ruleValue_(index);
  throw DomainError("machine value requested at a divergent input");
}

std::optional<MachineValue> evalWithBudget(const Machine& m, const MachineInput& input,
                                           std::uint64_t steps) {
  std::uint64_t index = m.encodeInput(input);
  auto cost = m.costAt(index);
  if (!cost || *cost > steps) return std::nullopt;
  return m.valueAt(index);
}

std::vector<HaltEvent> dovetail(const Machine& m, std::uint64_t totalStages) {
  std::vector<HaltEvent> events;
  std::uint64_t stage = 0;
  for (std::uint64_t d = 1;; ++d) {
    for (std::uint64_t index = 0; index < d; ++index) {
      ++stage;
      if (stage > totalStages) return events;
      std::uint64_t budget = d - index;
      auto cost = m.costAt(index);
      if (cost && *cost == budget)
        events.push_back({stage, index, m.decodeInput(index), m.valueAt(index)});
    }
  }
}

std::uint64_t dovetailHaltStage(std::uint64_t inputIndex, std::uint64_t cost) {
  std::uint64_t d = inputIndex + cost;
  return d * (d - 1) / 2 + inputIndex + 1;
}

Machine geometricMatrixMachine(const Rational& lead, const Rational& ratio,
                               std::uint64_t costSlope, std::uint64_t costBase) {
  if (costBase == 0) throw DomainError("machine halt cost must be >= 1");
  Machine m(MachineKind::quantumMatrix);
  m.setRule(
      [costSlope, costBase](std::uint64_t k) -> std::optional<std::uint64_t> {
        return costSlope * k + costBase;
      },
      [lead, ratio](std::uint64_t k) -> MachineValue {
        std::size_t size = static_cast<std::size_t>(k);
        ScalarMatrix matrix(size, std::vector<Scalar>(size));
        Rational scale = 1 - pow2(-static_cast<long>(k));
        Rational term = lead;
        for (std::size_t j = 0; j < size; ++j) {
          matrix[j][j] = Scalar(Rational(scale * term));
          term *= ratio;
        }
        return matrix;
      });
  return m;
}

Machine scaledProjectionMachine(const std::vector<Scalar>& amplitudes,
                                std::uint64_t costSlope, std::uint64_t costBase) {
  if (costBase == 0) throw DomainError("machine halt cost must be >= 1");
  Machine m(MachineKind::quantumMatrix);
  m.setRule(
      [costSlope, costBase](std::uint64_t k) -> std::optional<std::uint64_t> {
        return costSlope * k + costBase;
      },
      [amplitudes](std::uint64_t k) -> MachineValue {
        std::size_t size = amplitudes.size();
        ScalarMatrix matrix(size, std::vector<Scalar>(size));
        Scalar scale(Rational(1 - pow2(-static_cast<long>(k))));
        for (std::size_t r = 0; r < size; ++r)
          for (std::size_t c = 0; c < size; ++c)
            matrix[r][c] = amplitudes[r] * conj(amplitudes[c]) * scale;
        return matrix;
      });
  return m;
}

Machine dyadicLengthClassicalMachine(std::uint64_t costSlope, std::uint64_t costBase) {
  if (costBase == 0) throw DomainError("machine halt cost must be >= 1");
  Machine m(MachineKind::classicalSemimeasure);
  m.setRule(
      [costSlope, costBase](std::uint64_t index) -> std::optional<std::uint64_t> {
        return costSlope * index + costBase;
      },
      [](std::uint64_t index) -> MachineValue {
        auto [rank, k] = cantorUnpair(index);
        StringIndex w = StringIndex::fromRank(rank);
        Rational stageFactor = 1 - pow2(-static_cast<long>(k) - 1);
        return Rational(stageFactor * pow2(-2 * static_cast<long>(w.length()) - 1));
      });
  return m;
}

}  // namespace qsd
