#include "qsd/counterexamples.hpp"

#include <algorithm>
#include <sstream>

namespace qsd {

Machine naiveTrapMachine() {
  Machine m(MachineKind::quantumPointwise);
  m.setRule(
      [](std::uint64_t index) -> std::optional<std::uint64_t> {
        auto [a, rest] = cantorUnpair(index);
        auto [b, k] = cantorUnpair(rest);
        if (a > 1 || b > 1) return std::nullopt;  // defined only on {λ,"0"}²×N
        switch (index) {
          case 0: return 1;   // (λ,λ,0) fires first, at stage 1
          case 4: return 2;   // ("0","0",0) fires second, at stage 20
          case 2: return 5;   // (λ,"0",0) fires third, at stage 24
          case 1: return 10;  // ("0",λ,0) fires fourth, at stage 57
          default: return 200 + index;  // halt stage ≥ 19900 > 10⁴
        }
      },
      [](std::uint64_t) -> MachineValue { return Scalar(makeRational(1, 2)); });
  return m;
}

HermOp rankOneIrrationalExample() {
  StringIndex zero = StringIndex::fromBits("0");
  HermOp rho(zero);
  rho.set(StringIndex::lambda(), StringIndex::lambda(), Scalar(makeRational(1, 4)));
  rho.set(StringIndex::lambda(), zero,
          Scalar(Rational(0), Rational(0), makeRational(1, 4)));
  rho.set(zero, zero, Scalar(makeRational(3, 4)));
  return rho;
}

TaggedState uniformSuperpositionFamily(std::uint64_t n) {
  if (n > 20) throw DomainError("uniform superposition level too large");
  Rank first = (Rank{1} << n) - 1;
  Rank last = (Rank{1} << (n + 1)) - 2;
  TaggedState out{Vec(StringIndex::fromRank(last)), pow2(static_cast<long>(n))};
  for (Rank r = first; r <= last; ++r)
    out.raw.set(StringIndex::fromRank(r), Scalar::ofInt(1));
  return out;
}

TaggedState blockFamily(const StateFamily& fam, std::uint64_t n,
                        const StringIndex& window, std::uint64_t precision) {
  if (n == 0 || n > 20) throw DomainError("block family index out of range");
  std::uint64_t first = std::uint64_t{1} << (n - 1);
  std::uint64_t last = (std::uint64_t{1} << n) - 1;
  TaggedState out{Vec(window), pow2(static_cast<long>(n) - 1)};
  for (Rank r = 0; r <= window.rank(); ++r) {
    StringIndex w = StringIndex::fromRank(r);
    Scalar amp;
    for (std::uint64_t l = first; l <= last; ++l)
      amp = amp + fam.rule(precision, l, w);
    out.raw.set(w, amp);
  }
  return out;
}

StateFamily computationalBasisFamily() {
  return StateFamily{[](std::uint64_t, std::uint64_t l, const StringIndex& w) {
    return w.rank() == l ? Scalar::ofInt(1) : Scalar();
  }};
}

StateFamily uniformSuperpositionStateFamily() {
  return StateFamily{[](std::uint64_t k, std::uint64_t n, const StringIndex& w) {
    if (w.length() != n) return Scalar();
    if (n % 2 == 0) return Scalar(pow2(-static_cast<long>(n) / 2));
    // 2^{−n/2} = 2^{−(n+1)/2}·√2; floor(√2·2^k)/2^k approximates √2 within 2^{−k}.
    mpz_class two_4k;
    mpz_ui_pow_ui(two_4k.get_mpz_t(), 2, static_cast<unsigned long>(2 * k + 1));
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), two_4k.get_mpz_t());
    Rational approx(root);
    approx /= Rational(pow2(static_cast<long>(k)));
    return Scalar(Rational(approx * pow2(-(static_cast<long>(n) + 1) / 2)));
  }};
}

std::string witnessReportTextTable(const WitnessReport& report) {
  std::vector<std::size_t> widths(report.columns.size());
  for (std::size_t c = 0; c < report.columns.size(); ++c)
    widths[c] = report.columns[c].size();
  for (const auto& row : report.rows)
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream os;
  os << report.name << "\n";
  auto emitRow = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << cells[c];
      for (std::size_t pad = cells[c].size(); pad < widths[c]; ++pad) os << ' ';
    }
    os << "\n";
  };
  emitRow(report.columns);
  for (const auto& row : report.rows) emitRow(row);
  for (const auto& [label, ok] : report.verdicts)
    os << label << ": " << (ok ? "true" : "false") << "\n";
  return os.str();
}

WitnessReport diagonalDominationTable(const std::map<Rank, Rational>& m,
                                      std::uint64_t N) {
  WitnessReport report;
  report.name = "diagonal domination table";
  report.columns = {"n", "mbar", "witness", "c"};

  Rational total(0);
  for (const auto& [rank, value] : m) {
    if (value < 0) throw DomainError("semimeasure with a negative value");
    total += value;
  }
  if (total > 1) throw DomainError("semimeasure sums above 1");

  std::size_t levels = 0;
  Rational witnessSum(0);
  bool halving = true;
  bool anyDegenerate = false;
  Rational previousC(0);
  std::uint64_t previousLevel = 0;
  for (std::uint64_t n = 0; n <= N; ++n) {
    Rank first = (Rank{1} << n) - 1;
    Rank last = (Rank{1} << (n + 1)) - 2;
    Rational levelSum(0);
    for (auto it = m.lower_bound(first); it != m.end() && it->first <= last; ++it)
      levelSum += it->second;
    Rational mbar = levelSum * pow2(-static_cast<long>(n));
    Rational witness = mbar * pow2(static_cast<long>(n));  // = levelSum
    witnessSum += witness;
    if (mbar == 0) {
      anyDegenerate = true;
      report.rows.push_back({std::to_string(n), rationalText(mbar),
                             rationalText(witness), "degenerate"});
      continue;
    }
    Rational c = mbar / witness;  // minimal c with c·witness ≤ mbar
    if (levels > 0 && c * pow2(static_cast<long>(n - previousLevel)) != previousC)
      halving = false;
    ++levels;
    previousC = c;
    previousLevel = n;
    report.rows.push_back(
        {std::to_string(n), rationalText(mbar), rationalText(witness), rationalText(c)});
  }

  report.verdicts.emplace_back("constants halve at every level", halving);
  report.verdicts.emplace_back("no uniform positive constant up to N",
                               halving && levels >= 2);
  report.verdicts.emplace_back("witness is a semimeasure", witnessSum <= 1);
  if (anyDegenerate) report.verdicts.emplace_back("degenerate rows excluded", true);
  return report;
}

std::map<Rank, Rational> dyadicLengthSemimeasure(std::uint64_t maxLen) {
  if (maxLen > 16) throw DomainError("semimeasure table too large");
  std::map<Rank, Rational> m;
  for (std::uint64_t len = 0; len <= maxLen; ++len) {
    Rational value = pow2(-2 * static_cast<long>(len) - 1);
    Rank first = (Rank{1} << len) - 1;
    Rank last = (Rank{1} << (len + 1)) - 2;
    for (Rank r = first; r <= last; ++r) m[r] = value;
  }
  return m;
}

}  // namespace qsd
