#include "qsd/enumerate.hpp"

#include <algorithm>
#include <set>

namespace qsd {

namespace {

void requireKind(const Machine& m, MachineKind kind, const char* op) {
  if (m.kind() != kind)
    throw DomainError(std::string(op) + " requires a " + machineKindName(kind) +
                      " machine, got " + machineKindName(m.kind()));
}

bool isHermitianMatrix(const ScalarMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) return false;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m[r][c] != conj(m[c][r])) return false;
  return true;
}

}  // namespace

ClassicalEnumState enumerateClassical(const Machine& m, std::uint64_t totalStages) {
  requireKind(m, MachineKind::classicalSemimeasure, "enumerateClassical");
  ClassicalEnumState state;
  Rational sum(0);
  for (const HaltEvent& event : dovetail(m, totalStages)) {
    const auto& input = std::get<ClassicalInput>(event.input);
    const Rational& q = std::get<Rational>(event.value);
    Rank rank = input.w.rank();
    auto it = state.alpha.find(rank);
    Rational current = it == state.alpha.end() ? Rational(0) : it->second;
    bool accepted;
    std::string reason;
    if (q < current) {
      accepted = false;
      reason = "order";
    } else if (sum - current + q > 1) {
      accepted = false;
      reason = "trace";
    } else {
      accepted = true;
      reason = "ok";
      sum += q - current;
      state.alpha[rank] = q;
    }
    state.trace.push_back({event.stage, event.input, event.value, accepted, reason});
  }
  return state;
}

std::map<Rank, Rational> universalSemimeasure(const Registry& r,
                                              std::uint64_t totalStages) {
  std::map<Rank, Rational> out;
  for (std::size_t n = 1; n <= r.machines.size(); ++n) {
    ClassicalEnumState state = enumerateClassical(r.machines[n - 1], totalStages);
    Rational weight = pow2(-static_cast<long>(n));
    for (const auto& [rank, value] : state.alpha) {
      if (value == 0) continue;
      out[rank] += weight * value;
    }
  }
  return out;
}

QuantumEnumState enumerateQuantumNaive(const Machine& m, std::uint64_t totalStages) {
  requireKind(m, MachineKind::quantumPointwise, "enumerateQuantumNaive");
  QuantumEnumState state;
  for (const HaltEvent& event : dovetail(m, totalStages)) {
    const auto& input = std::get<PointwiseInput>(event.input);
    const Scalar& z = std::get<Scalar>(event.value);
    bool accepted = false;
    std::string reason;
    if (input.w == input.v && !z.isReal()) {
      reason = "nonreal-diagonal";
    } else {
      HermOp proposal = state.nu;
      proposal.extendWindowTo(maxByRank(input.w, input.v));
      proposal.set(input.w, input.v, z);
      if (!loewnerLeq(state.nu, proposal)) {
        reason = "order";
      } else if (compareReal(trace(proposal), Scalar::ofInt(1)) > 0) {
        reason = "trace";
      } else {
        accepted = true;
        reason = "ok";
        state.nu = proposal;
      }
    }
    state.trace.push_back({event.stage, event.input, event.value, accepted, reason});
  }
  return state;
}

QuantumEnumState enumerateQuantumMatrix(const Machine& m, std::uint64_t totalStages) {
  requireKind(m, MachineKind::quantumMatrix, "enumerateQuantumMatrix");
  QuantumEnumState state;
  for (const HaltEvent& event : dovetail(m, totalStages)) {
    const auto& matrix = std::get<ScalarMatrix>(event.value);
    bool accepted = false;
    std::string reason;
    if (!isHermitianMatrix(matrix)) {
      reason = "nonhermitian";
    } else {
      HermOp proposal = embed(matrix);
      if (!loewnerLeq(state.nu, proposal)) {
        reason = "order";
      } else if (compareReal(trace(proposal), Scalar::ofInt(1)) > 0) {
        reason = "trace";
      } else {
        accepted = true;
        reason = "ok";
        state.nu = proposal;
      }
    }
    state.trace.push_back({event.stage, event.input, event.value, accepted, reason});
  }
  return state;
}

HermOp universalOperator(const Registry& r, std::uint64_t totalStages) {
  HermOp mu;
  for (std::size_t n = 1; n <= r.machines.size(); ++n) {
    QuantumEnumState state = enumerateQuantumMatrix(r.machines[n - 1], totalStages);
    mu = mu + scaleReal(state.nu, Scalar(pow2(-static_cast<long>(n))));
  }
  return mu;
}

std::optional<DominationWitness> dominationConstantSearch(const HermOp& target,
                                                          const Registry& r,
                                                          std::uint64_t n,
                                                          std::uint64_t maxT) {
  // One enumeration pass per machine; ν^{(j)}_T is the snapshot after the
  // last accepted event with stage ≤ T.
  std::vector<std::vector<std::pair<std::uint64_t, HermOp>>> snapshots;
  std::set<std::uint64_t> candidates{0};
  for (const Machine& machine : r.machines) {
    QuantumEnumState state = enumerateQuantumMatrix(machine, maxT);
    std::vector<std::pair<std::uint64_t, HermOp>> accepted;
    HermOp nu;
    for (const TraceEvent& event : state.trace) {
      if (!event.accepted) continue;
      const auto& matrix = std::get<ScalarMatrix>(event.proposal);
      nu = embed(matrix);
      accepted.emplace_back(event.stage, nu);
      candidates.insert(event.stage);
    }
    snapshots.push_back(std::move(accepted));
  }
  auto muAt = [&](std::uint64_t t) {
    HermOp mu;
    for (std::size_t j = 0; j < snapshots.size(); ++j) {
      HermOp nu;
      for (const auto& [stage, value] : snapshots[j]) {
        if (stage > t) break;
        nu = value;
      }
      mu = mu + scaleReal(nu, Scalar(pow2(-static_cast<long>(j) - 1)));
    }
    return mu;
  };

  Rational threshold = pow2(-static_cast<long>(n) - 1);
  for (std::uint64_t t : candidates) {
    HermOp mu = muAt(t);
    if (!loewnerLeq(scaleReal(target, Scalar(threshold)), mu)) continue;
    Rational c = threshold;
    if (!target.isZero()) {
      for (int doublings = 0; doublings < 64; ++doublings) {
        Rational next = c * 2;
        if (!loewnerLeq(scaleReal(target, Scalar(next)), mu)) break;
        c = next;
      }
    }
    return DominationWitness{c, t};
  }
  return std::nullopt;
}

}  // namespace qsd
