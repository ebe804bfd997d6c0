#include "qsd/serialize.hpp"

#include <fstream>

namespace qsd {

namespace {

std::uint64_t asUint(const Json& j, const std::string& context) {
  if (!j.is_number_unsigned())
    throw DomainError(context + ": expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::string asString(const Json& j, const std::string& context) {
  if (!j.is_string()) throw DomainError(context + ": expected a string");
  return j.get<std::string>();
}

Rational ratParam(const Json& params, const char* key, const std::string& context) {
  return parseRational(asString(params.at(key), context + "." + key));
}

std::uint64_t uintParamOr(const Json& params, const char* key, std::uint64_t fallback) {
  if (!params.contains(key)) return fallback;
  return asUint(params.at(key), key);
}

ScalarMatrix matrixFromJson(const Json& j, const std::string& context) {
  if (!j.is_array()) throw DomainError(context + ": expected a matrix array");
  ScalarMatrix m;
  for (const Json& row : j) {
    if (!row.is_array()) throw DomainError(context + ": expected matrix rows");
    std::vector<Scalar> r;
    for (const Json& cell : row) r.push_back(parseScalar(asString(cell, context)));
    m.push_back(std::move(r));
  }
  return m;
}

Json matrixToJson(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json cells = Json::array();
    for (const Scalar& z : row) cells.push_back(scalarText(z));
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

void requireKeys(const Json& object, std::initializer_list<const char*> allowed,
                 const std::string& context) {
  if (!object.is_object()) throw DomainError(context + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* candidate : allowed)
      if (key == candidate) {
        known = true;
        break;
      }
    if (!known) throw DomainError(context + ": unrecognized key '" + key + "'");
  }
}

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
}

Json operatorToJson(const HermOp& op) {
  Json entries = Json::array();
  for (const auto& [row, col, value] : op.upperEntries()) {
    Json e;
    e["row"] = row.bits();
    e["col"] = col.bits();
    e["value"] = scalarText(value);
    entries.push_back(e);
  }
  Json out;
  out["window"] = op.window().bits();
  out["entries"] = entries;
  return out;
}

HermOp operatorFromJson(const Json& j) {
  requireKeys(j, {"window", "entries"}, "operator");
  HermOp op(StringIndex::fromBits(asString(j.at("window"), "operator.window")));
  for (const Json& e : j.at("entries")) {
    requireKeys(e, {"row", "col", "value"}, "operator.entries");
    StringIndex row = StringIndex::fromBits(asString(e.at("row"), "operator row"));
    StringIndex col = StringIndex::fromBits(asString(e.at("col"), "operator col"));
    if (col < row)
      throw DomainError("operator entries must satisfy rank(row) <= rank(col)");
    op.set(row, col, parseScalar(asString(e.at("value"), "operator value")));
  }
  return op;
}

Json vecToJson(const Vec& v) {
  Json amps = Json::array();
  for (const auto& [rank, value] : v.amps()) {
    Json a;
    a["index"] = StringIndex::fromRank(rank).bits();
    a["value"] = scalarText(value);
    amps.push_back(a);
  }
  Json out;
  out["window"] = v.window().bits();
  out["amps"] = amps;
  return out;
}

Vec vecFromJson(const Json& j) {
  requireKeys(j, {"window", "amps"}, "vector");
  Vec v(StringIndex::fromBits(asString(j.at("window"), "vector.window")));
  for (const Json& a : j.at("amps")) {
    requireKeys(a, {"index", "value"}, "vector.amps");
    v.set(StringIndex::fromBits(asString(a.at("index"), "vector index")),
          parseScalar(asString(a.at("value"), "vector value")));
  }
  return v;
}

namespace {

MachineInput inputFromJson(MachineKind kind, const Json& j) {
  if (!j.is_array()) throw DomainError("machine input: expected an array");
  switch (kind) {
    case MachineKind::classicalSemimeasure:
      if (j.size() != 2) throw DomainError("classical input: expected [\"w\", k]");
      return ClassicalInput{StringIndex::fromBits(asString(j[0], "input w")),
                            asUint(j[1], "input k")};
    case MachineKind::quantumPointwise:
      if (j.size() != 3) throw DomainError("pointwise input: expected [\"w\",\"v\",k]");
      return PointwiseInput{StringIndex::fromBits(asString(j[0], "input w")),
                            StringIndex::fromBits(asString(j[1], "input v")),
                            asUint(j[2], "input k")};
    case MachineKind::quantumMatrix:
      if (j.size() != 1) throw DomainError("matrix input: expected [k]");
      return MatrixInput{asUint(j[0], "input k")};
  }
  throw DomainError("unknown machine kind");
}

MachineValue valueFromJson(MachineKind kind, const Json& j) {
  switch (kind) {
    case MachineKind::classicalSemimeasure:
      return parseRational(asString(j, "machine value"));
    case MachineKind::quantumPointwise:
      return parseScalar(asString(j, "machine value"));
    case MachineKind::quantumMatrix:
      return matrixFromJson(j, "machine value");
  }
  throw DomainError("unknown machine kind");
}

Machine machineFromRule(MachineKind kind, const Json& rule) {
  requireKeys(rule, {"name", "params"}, "machine.rule");
  std::string name = asString(rule.at("name"), "machine.rule.name");
  Json params = rule.contains("params") ? rule.at("params") : Json::object();
  if (name == "geometric-matrix") {
    requireKeys(params, {"lead", "ratio", "costSlope", "costBase"}, name);
    if (kind != MachineKind::quantumMatrix)
      throw DomainError(name + " rule requires kind quantumMatrix");
    return geometricMatrixMachine(ratParam(params, "lead", name),
                                  ratParam(params, "ratio", name),
                                  uintParamOr(params, "costSlope", 1),
                                  uintParamOr(params, "costBase", 1));
  }
  if (name == "scaled-projection-matrix") {
    requireKeys(params, {"vector", "costSlope", "costBase"}, name);
    if (kind != MachineKind::quantumMatrix)
      throw DomainError(name + " rule requires kind quantumMatrix");
    std::vector<Scalar> amps;
    for (const Json& cell : params.at("vector"))
      amps.push_back(parseScalar(asString(cell, name + ".vector")));
    return scaledProjectionMachine(amps, uintParamOr(params, "costSlope", 1),
                                   uintParamOr(params, "costBase", 1));
  }
  if (name == "dyadic-length-semimeasure") {
    requireKeys(params, {"costSlope", "costBase"}, name);
    if (kind != MachineKind::classicalSemimeasure)
      throw DomainError(name + " rule requires kind classicalSemimeasure");
    return dyadicLengthClassicalMachine(uintParamOr(params, "costSlope", 1),
                                        uintParamOr(params, "costBase", 1));
  }
  if (name == "naive-trap") {
    requireKeys(params, {}, name);
    if (kind != MachineKind::quantumPointwise)
      throw DomainError(name + " rule requires kind quantumPointwise");
    return naiveTrapMachine();
  }
  throw DomainError("unknown machine rule: '" + name + "'");
}

}  // namespace

Machine machineFromJson(const Json& j) {
  requireKeys(j, {"kind", "table", "rule"}, "machine");
  MachineKind kind = machineKindFromName(asString(j.at("kind"), "machine.kind"));
  Machine machine = j.contains("rule") ? machineFromRule(kind, j.at("rule"))
                                       : Machine(kind);
  if (j.contains("table"))
    for (const Json& entry : j.at("table")) {
      requireKeys(entry, {"input", "value", "cost"}, "machine.table");
      machine.addTableEntry(inputFromJson(kind, entry.at("input")),
                            valueFromJson(kind, entry.at("value")),
                            asUint(entry.at("cost"), "machine.table.cost"));
    }
  return machine;
}

Registry registryFromJson(const Json& j) {
  if (!j.is_array()) throw DomainError("registry: expected an array of machines");
  Registry r;
  for (const Json& machine : j) r.machines.push_back(machineFromJson(machine));
  return r;
}

ConjectureBundle bundleFromJson(const Json& j) {
  requireKeys(j, {"rho", "sigma", "f"}, "bundle");

  const Json& rho = j.at("rho");
  requireKeys(rho, {"family", "params"}, "bundle.rho");
  std::string rhoFamily = asString(rho.at("family"), "bundle.rho.family");
  Json rhoParams = rho.contains("params") ? rho.at("params") : Json::object();
  ApproxStream stream;
  if (rhoFamily == "geometric-diagonal") {
    requireKeys(rhoParams, {"lead", "ratio"}, rhoFamily);
    stream = geometricDiagonalStream(ratParam(rhoParams, "lead", rhoFamily),
                                     ratParam(rhoParams, "ratio", rhoFamily));
  } else if (rhoFamily == "scaled-projection") {
    requireKeys(rhoParams, {"vector"}, rhoFamily);
    Vec v = vecFromJson(rhoParams.at("vector"));
    stream = scaledProjectionStream(v);
  } else if (rhoFamily == "constant") {
    requireKeys(rhoParams, {"operator"}, rhoFamily);
    stream = constantStream(operatorFromJson(rhoParams.at("operator")));
  } else {
    throw DomainError("unknown stream family: '" + rhoFamily + "'");
  }

  const Json& sigma = j.at("sigma");
  requireKeys(sigma, {"family", "params"}, "bundle.sigma");
  std::string sigmaFamily = asString(sigma.at("family"), "bundle.sigma.family");
  Json sigmaParams = sigma.contains("params") ? sigma.at("params") : Json::object();
  OperatorRule rule;
  if (sigmaFamily == "geometric-diagonal-density") {
    requireKeys(sigmaParams, {}, sigmaFamily);
    rule = geometricDiagonalDensity();
  } else if (sigmaFamily == "constant") {
    requireKeys(sigmaParams, {"operator"}, sigmaFamily);
    rule = constantOperatorRule(operatorFromJson(sigmaParams.at("operator")));
  } else {
    throw DomainError("unknown sigma family: '" + sigmaFamily + "'");
  }

  const Json& f = j.at("f");
  requireKeys(f, {"family", "params"}, "bundle.f");
  std::string fFamily = asString(f.at("family"), "bundle.f.family");
  Json fParams = f.contains("params") ? f.at("params") : Json::object();
  std::function<StringIndex(std::uint64_t)> support;
  if (fFamily == "affine-rank") {
    requireKeys(fParams, {"scale", "offset"}, fFamily);
    long scale = fParams.at("scale").get<long>();
    long offset = fParams.at("offset").get<long>();
    support = affineRankSupport(scale, offset);
  } else if (fFamily == "fixed") {
    requireKeys(fParams, {"index"}, fFamily);
    StringIndex w = StringIndex::fromBits(asString(fParams.at("index"), "f.index"));
    support = [w](std::uint64_t) { return w; };
  } else {
    throw DomainError("unknown support-bound family: '" + fFamily + "'");
  }

  return ConjectureBundle{std::move(stream), std::move(rule), std::move(support)};
}

Json machineInputToJson(const MachineInput& input) {
  Json out = Json::array();
  if (const auto* in = std::get_if<ClassicalInput>(&input)) {
    out.push_back(in->w.bits());
    out.push_back(in->k);
  } else if (const auto* in = std::get_if<PointwiseInput>(&input)) {
    out.push_back(in->w.bits());
    out.push_back(in->v.bits());
    out.push_back(in->k);
  } else {
    out.push_back(std::get<MatrixInput>(input).k);
  }
  return out;
}

Json machineValueToJson(const MachineValue& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return rationalText(*q);
  if (const auto* z = std::get_if<Scalar>(&value)) return scalarText(*z);
  return matrixToJson(std::get<ScalarMatrix>(value));
}

Json traceEventToJson(const TraceEvent& event, std::size_t machineIndex) {
  Json out;
  out["stage"] = event.stage;
  out["input"] = machineInputToJson(event.input);
  out["value"] = machineValueToJson(event.proposal);
  out["machine"] = machineIndex;
  out["accepted"] = event.accepted;
  out["reason"] = event.reason;
  return out;
}

Json witnessReportToJson(const WitnessReport& report) {
  Json out;
  out["name"] = report.name;
  out["columns"] = report.columns;
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row);
  out["rows"] = rows;
  Json verdicts = Json::array();
  for (const auto& [label, holds] : report.verdicts) {
    Json v;
    v["label"] = label;
    v["holds"] = holds;
    verdicts.push_back(v);
  }
  out["verdicts"] = verdicts;
  return out;
}

Json extRealToJson(const ExtReal& value) {
  if (value.infinite) return "inf";
  return value.value;
}

}  // namespace qsd
