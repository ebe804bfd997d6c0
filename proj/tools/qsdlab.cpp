// qsdlab: command-line driver for exact experiments with semi-density
// operators: decidable positivity, Loewner order, polarization tables,
// dovetailed enumerations, universal mixtures, entropy functionals, and the
// counterexample fixtures. Identical inputs produce byte-identical outputs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qsd/serialize.hpp"

namespace {

using namespace qsd;

struct CommonOptions {
  std::string outPath;
  std::string format = "json";
};

void addCommon(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--out", options.outPath, "Write output to this file instead of stdout");
  cmd->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void emit(const CommonOptions& options, const std::string& text) {
  if (options.outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.outPath, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + options.outPath);
  out << text;
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string operatorText(const HermOp& op) {
  std::ostringstream os;
  os << "window: \"" << op.window().bits() << "\"\n";
  for (const auto& [row, col, value] : op.upperEntries())
    os << "(\"" << row.bits() << "\",\"" << col.bits() << "\") = "
       << scalarText(value) << "\n";
  if (op.isZero()) os << "(zero operator)\n";
  return os.str();
}

std::string traceText(const std::vector<TraceEvent>& trace, std::size_t machineIndex) {
  std::ostringstream os;
  for (const TraceEvent& event : trace) {
    Json input = machineInputToJson(event.input);
    os << "stage " << event.stage << " machine " << machineIndex << " input "
       << input.dump() << " value " << machineValueToJson(event.proposal).dump()
       << (event.accepted ? " accepted " : " rejected ") << event.reason << "\n";
  }
  return os.str();
}

std::string traceJsonl(const std::vector<TraceEvent>& trace, std::size_t machineIndex) {
  std::ostringstream os;
  for (const TraceEvent& event : trace)
    os << traceEventToJson(event, machineIndex).dump() << "\n";
  return os.str();
}

Machine machineAt(const Registry& registry, std::size_t index) {
  if (index == 0 || index > registry.machines.size())
    throw DomainError("registry index out of range (1-based): " + std::to_string(index));
  return registry.machines[index - 1];
}

Json alphaToJson(const std::map<Rank, Rational>& alpha) {
  Json out = Json::array();
  for (const auto& [rank, value] : alpha) {
    Json cell;
    cell["index"] = StringIndex::fromRank(rank).bits();
    cell["value"] = rationalText(value);
    out.push_back(cell);
  }
  return out;
}

int runPsdCheck(const std::string& matrixPath, const CommonOptions& options) {
  HermOp op = operatorFromJson(loadJsonFile(matrixPath));
  bool psd = isPSD(op);
  if (options.format == "json") {
    Json out;
    out["psd"] = psd;
    emit(options, dumpJson(out));
  } else {
    emit(options, std::string("psd: ") + (psd ? "true" : "false") + "\n");
  }
  return 0;
}

int runLoewner(const std::string& aPath, const std::string& bPath,
               const CommonOptions& options) {
  HermOp a = operatorFromJson(loadJsonFile(aPath));
  HermOp b = operatorFromJson(loadJsonFile(bPath));
  bool leq = loewnerLeq(a, b);
  if (options.format == "json") {
    Json out;
    out["leq"] = leq;
    emit(options, dumpJson(out));
  } else {
    emit(options, std::string("leq: ") + (leq ? "true" : "false") + "\n");
  }
  return 0;
}

int runPolarize(const std::string& matrixPath, std::optional<Rank> windowRank,
                const CommonOptions& options) {
  HermOp op = operatorFromJson(loadJsonFile(matrixPath));
  StringIndex window = windowRank ? StringIndex::fromRank(*windowRank) : op.window();
  if (window < op.window()) op = compress(op, window);
  Json values = Json::array();
  std::ostringstream text;
  for (Rank r = 0; r <= window.rank(); ++r)
    for (Rank c = 0; c <= window.rank(); ++c) {
      StringIndex w = StringIndex::fromRank(r), v = StringIndex::fromRank(c);
      Scalar encoded = polarizationEncode(op, w, v);
      Json cell;
      cell["w"] = w.bits();
      cell["v"] = v.bits();
      cell["value"] = scalarText(encoded);
      values.push_back(cell);
      text << "(\"" << w.bits() << "\",\"" << v.bits() << "\") = "
           << scalarText(encoded) << "\n";
    }
  HermOp decoded = polarizationDecodeOperator(
      [&op](const StringIndex& w, const StringIndex& v) {
        return polarizationEncode(op, w, v);
      },
      window);
  bool roundTrip = decoded == op;
  if (options.format == "json") {
    Json out;
    out["window"] = window.bits();
    out["values"] = values;
    out["roundtrip_exact"] = roundTrip;
    emit(options, dumpJson(out));
  } else {
    text << "roundtrip_exact: " << (roundTrip ? "true" : "false") << "\n";
    emit(options, text.str());
  }
  return 0;
}

int runEnumerateClassical(const std::string& registryPath, std::size_t index,
                          std::uint64_t stages, const CommonOptions& options) {
  Registry registry = registryFromJson(loadJsonFile(registryPath));
  ClassicalEnumState state = enumerateClassical(machineAt(registry, index), stages);
  if (options.format == "json") {
    std::ostringstream os;
    os << traceJsonl(state.trace, index);
    Json final;
    final["final"]["alpha"] = alphaToJson(state.alpha);
    os << final.dump() << "\n";
    emit(options, os.str());
  } else {
    std::ostringstream os;
    os << traceText(state.trace, index);
    for (const auto& [rank, value] : state.alpha)
      os << "alpha[\"" << StringIndex::fromRank(rank).bits() << "\"] = "
         << rationalText(value) << "\n";
    emit(options, os.str());
  }
  return 0;
}

int runUniversalM(const std::string& registryPath, std::uint64_t stages,
                  const CommonOptions& options) {
  Registry registry = registryFromJson(loadJsonFile(registryPath));
  std::map<Rank, Rational> m = universalSemimeasure(registry, stages);
  if (options.format == "json") {
    Json out;
    out["m"] = alphaToJson(m);
    emit(options, dumpJson(out));
  } else {
    std::ostringstream os;
    for (const auto& [rank, value] : m)
      os << "m[\"" << StringIndex::fromRank(rank).bits() << "\"] = "
         << rationalText(value) << "\n";
    emit(options, os.str());
  }
  return 0;
}

int runEnumerateQuantum(const std::string& registryPath, std::size_t index,
                        std::uint64_t stages, bool naive,
                        const CommonOptions& options) {
  Registry registry = registryFromJson(loadJsonFile(registryPath));
  Machine machine = machineAt(registry, index);
  QuantumEnumState state = naive ? enumerateQuantumNaive(machine, stages)
                                 : enumerateQuantumMatrix(machine, stages);
  if (options.format == "json") {
    std::ostringstream os;
    os << traceJsonl(state.trace, index);
    Json final;
    final["final"] = operatorToJson(state.nu);
    os << final.dump() << "\n";
    emit(options, os.str());
  } else {
    emit(options, traceText(state.trace, index) + operatorText(state.nu));
  }
  return 0;
}

int runUniversalMu(const std::string& registryPath, std::uint64_t stages,
                   const CommonOptions& options) {
  Registry registry = registryFromJson(loadJsonFile(registryPath));
  HermOp mu = universalOperator(registry, stages);
  if (options.format == "json")
    emit(options, dumpJson(operatorToJson(mu)));
  else
    emit(options, operatorText(mu));
  return 0;
}

int runDominate(const std::string& registryPath, const std::string& targetPath,
                std::uint64_t index, std::uint64_t stages, const CommonOptions& options) {
  Registry registry = registryFromJson(loadJsonFile(registryPath));
  HermOp target = operatorFromJson(loadJsonFile(targetPath));
  auto witness = dominationConstantSearch(target, registry, index, stages);
  if (options.format == "json") {
    Json out;
    out["found"] = witness.has_value();
    if (witness) {
      out["c"] = rationalText(witness->c);
      out["T"] = witness->stages;
    }
    emit(options, dumpJson(out));
  } else {
    std::ostringstream os;
    if (witness)
      os << "c = " << rationalText(witness->c) << " at T = " << witness->stages << "\n";
    else
      os << "no witness within the stage budget\n";
    emit(options, os.str());
  }
  return 0;
}

int runEntropy(const std::string& muPath, const std::string& statePath, double tol,
               const CommonOptions& options) {
  HermOp mu = operatorFromJson(loadJsonFile(muPath));
  Vec psi = vecFromJson(loadJsonFile(statePath));
  ExtReal upper = upperEntropy(mu, psi, tol);
  ExtReal lower = lowerEntropy(mu, psi);
  if (options.format == "json") {
    Json out;
    out["state"] = vecToJson(psi);
    out["H_upper"] = extRealToJson(upper);
    out["H_lower"] = extRealToJson(lower);
    emit(options, dumpJson(out));
  } else {
    std::ostringstream os;
    os << "H_upper: " << extRealToJson(upper).dump() << "\n";
    os << "H_lower: " << extRealToJson(lower).dump() << "\n";
    emit(options, os.str());
  }
  return 0;
}

int runCounterexampleNaiveTrap(std::uint64_t stages, const CommonOptions& options) {
  QuantumEnumState state = enumerateQuantumNaive(naiveTrapMachine(), stages);
  if (options.format == "json") {
    std::ostringstream os;
    os << traceJsonl(state.trace, 1);
    Json final;
    final["final"] = operatorToJson(state.nu);
    os << final.dump() << "\n";
    emit(options, os.str());
  } else {
    emit(options, traceText(state.trace, 1) + operatorText(state.nu));
  }
  return 0;
}

int runCounterexampleRankOne(const CommonOptions& options) {
  HermOp rho = rankOneIrrationalExample();
  Json scan = Json::array();
  std::vector<Rational> cs = {Rational(0),         makeRational(1, 10),
                              makeRational(1, 3),  makeRational(1, 2),
                              makeRational(7, 8),  Rational(1),
                              makeRational(2, 7),  makeRational(3, 4),
                              makeRational(5, 6),  makeRational(9, 10)};
  bool onlyZeroIsRational = true;
  for (const Rational& c : cs) {
    HermOp scaled = scaleReal(rho, Scalar(c));
    bool allRational = true;
    for (const auto& [rc, z] : scaled.allEntries())
      allRational = allRational && z.isComplexRational();
    if (allRational != (c == 0)) onlyZeroIsRational = false;
    Json row;
    row["c"] = rationalText(c);
    row["all_entries_complex_rational"] = allRational;
    row["offdiag_sqrt3_coefficient"] = rationalText(Rational(c / 4));
    scan.push_back(row);
  }
  Json out;
  out["operator"] = operatorToJson(rho);
  out["psd"] = isPSD(rho);
  out["trace"] = scalarText(trace(rho));
  out["idempotent"] = square(rho) == rho;
  out["offdiag_complex_rational"] =
      rho.entry(StringIndex::lambda(), StringIndex::fromBits("0")).isComplexRational();
  out["scalar_minorant_scan"] = scan;
  out["only_c_zero_stays_complex_rational"] = onlyZeroIsRational;
  if (options.format == "json") {
    emit(options, dumpJson(out));
  } else {
    std::ostringstream os;
    os << operatorText(rho);
    os << "psd: " << (isPSD(rho) ? "true" : "false") << "\n";
    os << "trace: " << scalarText(trace(rho)) << "\n";
    os << "only_c_zero_stays_complex_rational: "
       << (onlyZeroIsRational ? "true" : "false") << "\n";
    emit(options, os.str());
  }
  return 0;
}

int runCounterexampleDiagonal(std::uint64_t levels, const CommonOptions& options) {
  WitnessReport report = diagonalDominationTable(dyadicLengthSemimeasure(levels), levels);
  if (options.format == "json")
    emit(options, dumpJson(witnessReportToJson(report)));
  else
    emit(options, witnessReportTextTable(report));
  return 0;
}

int runValidateBundle(const std::string& bundlePath, std::uint64_t n,
                      const CommonOptions& options) {
  ConjectureBundle bundle = bundleFromJson(loadJsonFile(bundlePath));
  BundleReport report = validateConjectureBundle(bundle, n);
  if (options.format == "json") {
    Json out;
    out["passed"] = report.passed();
    Json failures = Json::array();
    for (const auto& failure : report.failures) {
      Json f;
      f["condition"] = failure.condition;
      f["n"] = failure.n;
      failures.push_back(f);
    }
    out["failures"] = failures;
    emit(options, dumpJson(out));
  } else {
    std::ostringstream os;
    os << "passed: " << (report.passed() ? "true" : "false") << "\n";
    for (const auto& failure : report.failures)
      os << "condition " << failure.condition << " fails at n = " << failure.n << "\n";
    emit(options, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments with semi-density operators"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string matrixPath, aPath, bPath, registryPath, targetPath, muPath, statePath,
      bundlePath;
  std::size_t index = 1;
  std::uint64_t stages = 10000;
  std::uint64_t windowRank = 15;
  std::uint64_t levels = 10;
  std::uint64_t bundleDepth = 8;
  double tol = 1e-9;
  bool naive = false, matrix = false;

  CLI::App* psd = app.add_subcommand(
      "psd-check", "Decide positive semidefiniteness of an exact hermitian operator");
  psd->add_option("--matrix", matrixPath, "Operator JSON file")->required();
  addCommon(psd, options);

  CLI::App* loewner = app.add_subcommand(
      "loewner", "Decide the Loewner order A <= B between exact operators");
  loewner->add_option("--a", aPath, "Left operator JSON file")->required();
  loewner->add_option("--b", bPath, "Right operator JSON file")->required();
  addCommon(loewner, options);

  CLI::App* polarize = app.add_subcommand(
      "polarize", "Quadratic-form polarization table of an operator, with exact "
                  "round-trip check");
  polarize->add_option("--matrix", matrixPath, "Operator JSON file")->required();
  CLI::Option* windowOption =
      polarize->add_option("--window", windowRank, "Table window rank override")
          ->capture_default_str();
  addCommon(polarize, options);

  CLI::App* enumClassical = app.add_subcommand(
      "enumerate-classical",
      "Dovetail one classical machine into a monotone semimeasure approximation");
  enumClassical->add_option("--registry", registryPath, "Registry JSON file")->required();
  enumClassical->add_option("--index", index, "1-based machine index")
      ->capture_default_str();
  enumClassical->add_option("--stages", stages, "Dovetailing stage budget")
      ->capture_default_str();
  addCommon(enumClassical, options);

  CLI::App* universalM = app.add_subcommand(
      "universal-m", "Dyadic mixture of the registry's enumerated semimeasures");
  universalM->add_option("--registry", registryPath, "Registry JSON file")->required();
  universalM->add_option("--stages", stages, "Dovetailing stage budget")
      ->capture_default_str();
  addCommon(universalM, options);

  CLI::App* enumQuantum = app.add_subcommand(
      "enumerate-quantum",
      "Dovetail one quantum machine (pointwise --naive or matrix-valued --matrix)");
  enumQuantum->add_option("--registry", registryPath, "Registry JSON file")->required();
  enumQuantum->add_option("--index", index, "1-based machine index")
      ->capture_default_str();
  enumQuantum->add_option("--stages", stages, "Dovetailing stage budget")
      ->capture_default_str();
  enumQuantum->add_flag("--naive", naive, "Pointwise update loop");
  enumQuantum->add_flag("--matrix", matrix, "Matrix-valued update loop");
  addCommon(enumQuantum, options);

  CLI::App* universalMu = app.add_subcommand(
      "universal-mu", "Dyadic mixture of the registry's enumerated operators");
  universalMu->add_option("--registry", registryPath, "Registry JSON file")->required();
  universalMu->add_option("--stages", stages, "Dovetailing stage budget")
      ->capture_default_str();
  addCommon(universalMu, options);

  CLI::App* dominate = app.add_subcommand(
      "dominate", "Search for a dyadic constant with c*target <= mu at some stage");
  dominate->add_option("--registry", registryPath, "Registry JSON file")->required();
  dominate->add_option("--target", targetPath, "Target operator JSON file")->required();
  dominate->add_option("--index", index, "1-based registry index n (threshold 2^-(n+1))")
      ->capture_default_str();
  dominate->add_option("--stages", stages, "Stage budget maxT")->capture_default_str();
  addCommon(dominate, options);

  CLI::App* entropy = app.add_subcommand(
      "entropy", "Upper and lower entropy of a state against a semi-density operator");
  entropy->add_option("--mu", muPath, "Operator JSON file")->required();
  entropy->add_option("--state", statePath, "State vector JSON file")->required();
  entropy->add_option("--tol", tol, "Spectral support cutoff")->capture_default_str();
  addCommon(entropy, options);

  CLI::App* counterexample =
      app.add_subcommand("counterexample", "Reproduce a counterexample fixture");
  counterexample->require_subcommand(1);
  CLI::App* trap = counterexample->add_subcommand(
      "naive-trap", "Pointwise updates stall on off-diagonal proposals");
  trap->add_option("--stages", stages, "Dovetailing stage budget")->capture_default_str();
  addCommon(trap, options);
  CLI::App* rankOne = counterexample->add_subcommand(
      "rank-one", "Rank-one projection with entries outside the complex rationals");
  addCommon(rankOne, options);
  CLI::App* diagonal = counterexample->add_subcommand(
      "diagonal", "Per-level domination constants against a diagonal candidate");
  diagonal->add_option("--levels", levels, "Maximum string length N")
      ->capture_default_str();
  addCommon(diagonal, options);

  CLI::App* validate = app.add_subcommand(
      "validate-bundle", "Check the regularity conditions of an approximation bundle");
  validate->add_option("--bundle", bundlePath, "Bundle JSON file")->required();
  validate->add_option("--n", bundleDepth, "Check conditions for n = 1..N")
      ->capture_default_str();
  addCommon(validate, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (psd->parsed()) return runPsdCheck(matrixPath, options);
    if (loewner->parsed()) return runLoewner(aPath, bPath, options);
    if (polarize->parsed())
      return runPolarize(matrixPath,
                         windowOption->count() ? std::optional<Rank>(windowRank)
                                               : std::nullopt,
                         options);
    if (enumClassical->parsed())
      return runEnumerateClassical(registryPath, index, stages, options);
    if (universalM->parsed()) return runUniversalM(registryPath, stages, options);
    if (enumQuantum->parsed()) {
      if (naive == matrix) {
        std::cerr << "error: exactly one of --naive/--matrix is required\n";
        return 2;
      }
      return runEnumerateQuantum(registryPath, index, stages, naive, options);
    }
    if (universalMu->parsed()) return runUniversalMu(registryPath, stages, options);
    if (dominate->parsed())
      return runDominate(registryPath, targetPath, index, stages, options);
    if (entropy->parsed()) return runEntropy(muPath, statePath, tol, options);
    if (counterexample->parsed()) {
      if (trap->parsed()) return runCounterexampleNaiveTrap(stages, options);
      if (rankOne->parsed()) return runCounterexampleRankOne(options);
      if (diagonal->parsed()) return runCounterexampleDiagonal(levels, options);
    }
    if (validate->parsed()) return runValidateBundle(bundlePath, bundleDepth, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
