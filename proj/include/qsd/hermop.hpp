#ifndef QSD_HERMOP_HPP
#define QSD_HERMOP_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsd/basis.hpp"
#include "qsd/scalar.hpp"

namespace qsd {

// Finitely supported vector on the string-indexed space.
class Vec {
 public:
  explicit Vec(StringIndex window = StringIndex::lambda()) : window_(std::move(window)) {}

  const StringIndex& window() const { return window_; }
  const std::map<Rank, Scalar>& amps() const { return amps_; }

  Scalar ampAt(Rank r) const;
  Scalar amp(const StringIndex& w) const { return ampAt(w.rank()); }
  // Stores amp(w) = z; zero amplitudes are pruned. Throws if w exceeds the window.
  void set(const StringIndex& w, const Scalar& z);
  void extendWindowTo(const StringIndex& w) { window_ = maxByRank(window_, w); }

  static Vec basisState(const StringIndex& w);

  friend bool operator==(const Vec& a, const Vec& b) { return a.amps_ == b.amps_; }

 private:
  StringIndex window_;
  std::map<Rank, Scalar> amps_;
};

Scalar normSquared(const Vec& v);
Vec scale(const Vec& v, const Scalar& s);

// A vector carried with its exact squared norm, for states whose normalizer
// (2^{−n/2}, √3/2, ...) lies outside the scalar field. Quadratic forms
// divide by normSquared exactly.
struct TaggedState {
  Vec raw;
  Rational normSquared;
};

// Finitely supported hermitian operator. Entries are stored on both
// triangles, kept consistent (entry(v,w) = conj(entry(w,v)), real diagonal)
// and zero-pruned, so equality is structural equality of the entry maps.
// The window is a declared support bound (P_window A P_window = A);
// it is bookkeeping and does not participate in operator==.
class HermOp {
 public:
  explicit HermOp(StringIndex window = StringIndex::lambda())
      : window_(std::move(window)) {}

  const StringIndex& window() const { return window_; }
  const std::map<std::pair<Rank, Rank>, Scalar>& allEntries() const { return entries_; }

  Scalar entryAt(Rank r, Rank c) const;
  Scalar entry(const StringIndex& w, const StringIndex& v) const {
    return entryAt(w.rank(), v.rank());
  }

  // Sets entry (w,v) = z and (v,w) = conj(z). Throws DomainError on a
  // non-real diagonal value or a rank beyond the window.
  void set(const StringIndex& w, const StringIndex& v, const Scalar& z);
  void extendWindowTo(const StringIndex& w) { window_ = maxByRank(window_, w); }

  bool isZero() const { return entries_.empty(); }

  // Upper-triangle (row rank ≤ col rank) entries in (row, col) order; the
  // serialization surface.
  std::vector<std::tuple<StringIndex, StringIndex, Scalar>> upperEntries() const;

  static HermOp zero(const StringIndex& window) { return HermOp(window); }
  static HermOp identity(const StringIndex& window);

  friend bool operator==(const HermOp& a, const HermOp& b) {
    return a.entries_ == b.entries_;
  }

 private:
  StringIndex window_;
  std::map<std::pair<Rank, Rank>, Scalar> entries_;
};

HermOp operator+(const HermOp& a, const HermOp& b);
HermOp operator-(const HermOp& a, const HermOp& b);
// Throws DomainError if s is not real (a complex scale would break hermiticity).
HermOp scaleReal(const HermOp& a, const Scalar& s);
inline HermOp scaleReal(const HermOp& a, const Rational& q) {
  return scaleReal(a, Scalar(q));
}

// Exact positive-semidefiniteness by pivoted symmetric elimination: negative
// diagonal rejects; a zero diagonal with a nonzero row rejects; otherwise
// eliminate on the largest positive diagonal pivot (least rank on ties) and
// recurse on the Schur complement.
bool isPSD(const HermOp& a);

// A ≤ B in Loewner order: isPSD(B − A). Windows are united by zero-padding.
bool loewnerLeq(const HermOp& a, const HermOp& b);

Scalar trace(const HermOp& a);
// Sum of squared moduli of all entries (the displayed Hilbert–Schmidt
// functional is this squared sum, exposed unsquare-rooted).
Scalar hsNormSquared(const HermOp& a);

// P_w A P_w: drops entries with either rank beyond rankOf(w).
HermOp compress(const HermOp& a, const StringIndex& w);

// Diagonal 0/1 projection onto basis strings λ..w in length-lex order.
HermOp prefixProjector(const StringIndex& w);

// Places an m×m matrix at origin rank 0; throws DomainError unless hermitian.
HermOp embed(const std::vector<std::vector<Scalar>>& m);

// |v⟩⟨v| with entries v(w)·conj(v(v')).
HermOp rankOneFromVector(const Vec& v);

// ⟨v|A v⟩, exact; real whenever A is hermitian (always, by construction).
Scalar applyQuadForm(const HermOp& a, const Vec& v);

// ⟨v|A v⟩ / ‖v‖², exact.
Scalar taggedQuadForm(const HermOp& a, const TaggedState& s);

// A·A (hermitian for hermitian A).
HermOp square(const HermOp& a);

// For rho a rank-one projection (trace 1, rho² = rho; otherwise DomainError):
// if 0 ≤ sigma ≤ rho, returns the unique real c with sigma = c·rho, else nullopt.
std::optional<Scalar> dominatedByRankOne(const HermOp& sigma, const HermOp& rho);

}  // namespace qsd

#endif
