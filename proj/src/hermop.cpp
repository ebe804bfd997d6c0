#include "qsd/hermop.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace qsd {

Scalar Vec::ampAt(Rank r) const {
  auto it = amps_.find(r);
  return it == amps_.end() ? Scalar() : it->second;
}

void Vec::set(const StringIndex& w, const Scalar& z) {
  if (w.rank() > window_.rank())
    throw DomainError("vector amplitude beyond window: '" + w.bits() + "'");
  if (z.isZero())
    amps_.erase(w.rank());
  else
    amps_[w.rank()] = z;
}

Vec Vec::basisState(const StringIndex& w) {
  Vec v(w);
  v.set(w, Scalar::ofInt(1));
  return v;
}

Scalar normSquared(const Vec& v) {
  Scalar out;
  for (const auto& [r, z] : v.amps()) out = out + absSquared(z);
  return out;
}

Vec scale(const Vec& v, const Scalar& s) {
  Vec out(v.window());
  for (const auto& [r, z] : v.amps()) out.set(StringIndex::fromRank(r), z * s);
  return out;
}

Scalar HermOp::entryAt(Rank r, Rank c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar() : it->second;
}

void HermOp::set(const StringIndex& w, const StringIndex& v, const Scalar& z) {
  Rank r = w.rank(), c = v.rank();
  if (r > window_.rank() || c > window_.rank())
    throw DomainError("operator entry beyond window (" + w.bits() + "," + v.bits() + ")");
  if (r == c && !z.isReal())
    throw DomainError("non-real diagonal entry at '" + w.bits() + "'");
  if (z.isZero()) {
    entries_.erase({r, c});
    entries_.erase({c, r});
  } else {
    entries_[{r, c}] = z;
    entries_[{c, r}] = conj(z);
  }
}

std::vector<std::tuple<StringIndex, StringIndex, Scalar>> HermOp::upperEntries() const {
  std::vector<std::tuple<StringIndex, StringIndex, Scalar>> out;
  for (const auto& [rc, z] : entries_)
    if (rc.first <= rc.second)
      out.emplace_back(StringIndex::fromRank(rc.first), StringIndex::fromRank(rc.second), z);
  return out;
}

HermOp HermOp::identity(const StringIndex& window) {
  HermOp out(window);
  for (Rank r = 0; r <= window.rank(); ++r) {
    StringIndex w = StringIndex::fromRank(r);
    out.set(w, w, Scalar::ofInt(1));
  }
  return out;
}

HermOp operator+(const HermOp& a, const HermOp& b) {
  HermOp out(maxByRank(a.window(), b.window()));
  std::set<std::pair<Rank, Rank>> keys;
  for (const auto& [rc, z] : a.allEntries()) keys.insert(rc);
  for (const auto& [rc, z] : b.allEntries()) keys.insert(rc);
  for (const auto& [r, c] : keys) {
    if (r > c) continue;
    out.set(StringIndex::fromRank(r), StringIndex::fromRank(c),
            a.entryAt(r, c) + b.entryAt(r, c));
  }
  return out;
}

HermOp operator-(const HermOp& a, const HermOp& b) {
  return a + scaleReal(b, Scalar::ofInt(-1));
}

HermOp scaleReal(const HermOp& a, const Scalar& s) {
  if (!s.isReal()) throw DomainError("operator scale by non-real scalar");
  HermOp out(a.window());
  for (const auto& [rc, z] : a.allEntries())
    if (rc.first <= rc.second)
      out.set(StringIndex::fromRank(rc.first), StringIndex::fromRank(rc.second), z * s);
  return out;
}

bool isPSD(const HermOp& a) {
  // Working copy; entries stay hermitian and zero-pruned throughout.
  std::map<std::pair<Rank, Rank>, Scalar> m = a.allEntries();
  while (!m.empty()) {
    std::map<Rank, Scalar> diag;
    for (const auto& [rc, z] : m)
      if (rc.first == rc.second) {
        if (signOfReal(z) < 0) return false;
        diag.emplace(rc.first, z);
      }
    // A zero (absent) diagonal with a nonzero row cannot be PSD.
    for (const auto& [rc, z] : m)
      if (rc.first != rc.second && !diag.count(rc.first)) return false;
    if (diag.empty()) return true;  // no diagonal ⇒ no entries survived above
    // Pivot: maximal positive diagonal, least rank on ties.
    Rank pivot = diag.begin()->first;
    for (const auto& [r, z] : diag)
      if (compareReal(z, diag.at(pivot)) > 0) pivot = r;
    Scalar p = diag.at(pivot);

    std::vector<std::pair<Rank, Scalar>> column;  // (r, A[r][pivot]), r ≠ pivot
    for (const auto& [rc, z] : m)
      if (rc.second == pivot && rc.first != pivot) column.emplace_back(rc.first, z);

    // Drop the pivot row and column, then apply the Schur update
    // A[r][c] −= A[r][pivot]·A[pivot][c]/p on the nonzero pattern.
    std::erase_if(m, [&](const auto& kv) {
      return kv.first.first == pivot || kv.first.second == pivot;
    });
    for (const auto& [r, zr] : column)
      for (const auto& [c, zc] : column) {
        std::pair<Rank, Rank> key{r, c};
        auto it = m.find(key);
        Scalar updated = (it == m.end() ? Scalar() : it->second) - zr * conj(zc) / p;
        if (updated.isZero())
          m.erase(key);
        else
          m[key] = updated;
      }
  }
  return true;
}

bool loewnerLeq(const HermOp& a, const HermOp& b) { return isPSD(b - a); }

Scalar trace(const HermOp& a) {
  Scalar out;
  for (const auto& [rc, z] : a.allEntries())
    if (rc.first == rc.second) out = out + z;
  return out;
}

Scalar hsNormSquared(const HermOp& a) {
  Scalar out;
  for (const auto& [rc, z] : a.allEntries()) out = out + absSquared(z);
  return out;
}

HermOp compress(const HermOp& a, const StringIndex& w) {
  HermOp out(minByRank(a.window(), w));
  Rank bound = w.rank();
  for (const auto& [rc, z] : a.allEntries())
    if (rc.first <= rc.second && rc.first <= bound && rc.second <= bound)
      out.set(StringIndex::fromRank(rc.first), StringIndex::fromRank(rc.second), z);
  return out;
}

HermOp prefixProjector(const StringIndex& w) {
  HermOp out(w);
  for (Rank r = 0; r <= w.rank(); ++r) {
    StringIndex v = StringIndex::fromRank(r);
    out.set(v, v, Scalar::ofInt(1));
  }
  return out;
}

HermOp embed(const std::vector<std::vector<Scalar>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("embed: matrix is not square");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m[r][c] != conj(m[c][r]))
        throw DomainError("embed: matrix is not hermitian");
  HermOp out(n == 0 ? StringIndex::lambda() : StringIndex::fromRank(n - 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      out.set(StringIndex::fromRank(r), StringIndex::fromRank(c), m[r][c]);
  return out;
}

HermOp rankOneFromVector(const Vec& v) {
  HermOp out(v.window());
  for (const auto& [r, zr] : v.amps())
    for (const auto& [c, zc] : v.amps())
      if (r <= c)
        out.set(StringIndex::fromRank(r), StringIndex::fromRank(c), zr * conj(zc));
  return out;
}

Scalar applyQuadForm(const HermOp& a, const Vec& v) {
  Scalar out;
  for (const auto& [r, zr] : v.amps())
    for (const auto& [c, zc] : v.amps()) {
      Scalar e = a.entryAt(r, c);
      if (!e.isZero()) out = out + conj(zr) * e * zc;
    }
  return out;
}

Scalar taggedQuadForm(const HermOp& a, const TaggedState& s) {
  if (s.normSquared <= 0) throw DomainError("tagged state with nonpositive norm");
  return applyQuadForm(a, s.raw) / Scalar(s.normSquared);
}

HermOp square(const HermOp& a) {
  // Row-indexed view for the sparse product.
  std::map<Rank, std::vector<std::pair<Rank, Scalar>>> rows;
  std::set<Rank> support;
  for (const auto& [rc, z] : a.allEntries()) {
    rows[rc.first].emplace_back(rc.second, z);
    support.insert(rc.first);
  }
  HermOp out(a.window());
  for (Rank r : support)
    for (Rank c : support) {
      if (r > c) continue;
      Scalar sum;
      for (const auto& [k, zrk] : rows.at(r)) {
        Scalar zkc = a.entryAt(k, c);
        if (!zkc.isZero()) sum = sum + zrk * zkc;
      }
      out.set(StringIndex::fromRank(r), StringIndex::fromRank(c), sum);
    }
  return out;
}

std::optional<Scalar> dominatedByRankOne(const HermOp& sigma, const HermOp& rho) {
  if (trace(rho) != Scalar::ofInt(1) || square(rho) != rho)
    throw DomainError("dominatedByRankOne: rho is not a rank-one projection");
  if (!isPSD(sigma) || !loewnerLeq(sigma, rho)) return std::nullopt;
  // 0 ≤ sigma ≤ rank-one projection forces sigma = c·rho with c = Tr sigma.
  Scalar c = trace(sigma);
  if (sigma != scaleReal(rho, c))
    throw DomainError("dominatedByRankOne: operator between 0 and a rank-one "
                      "projection is not a scalar multiple (invariant violated)");
  return c;
}

}  // namespace qsd
