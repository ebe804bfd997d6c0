#ifndef QSD_ENTROPY_HPP
#define QSD_ENTROPY_HPP

#include "qsd/streams.hpp"

namespace qsd {

// Extended real: a finite double (derived from an exact expression at the
// last step) or +∞.
struct ExtReal {
  double value = 0.0;
  bool infinite = false;

  static ExtReal finite(double v) { return {v, false}; }
  static ExtReal infinity() { return {0.0, true}; }
};

// −log₂⟨ψ|μψ⟩ with the quadratic form computed exactly; +∞ on a vanishing
// form. Throws DomainError when ψ is not exactly normalized.
ExtReal lowerEntropy(const HermOp& mu, const Vec& psi);
// Tagged variant for states normalized only through their norm² tag; requires
// normSquared(raw) = tag exactly.
ExtReal lowerEntropy(const HermOp& mu, const TaggedState& psi);

// −⟨ψ|(log₂ μ)ψ⟩ through a floating-point eigendecomposition of the window
// matrix; eigenvalues ≤ tol count as null space, and a squared null-space
// overlap > tol yields +∞.
ExtReal upperEntropy(const HermOp& mu, const Vec& psi, double tol = 1e-9);
ExtReal upperEntropy(const HermOp& mu, const TaggedState& psi, double tol = 1e-9);

// ⟨ψ_n|μψ_n⟩ at the precision-k rational amplitude approximation of ψ_n,
// computed exactly.
Rational inducedSemimeasure(const HermOp& mu, const StateFamily& fam, std::uint64_t n,
                            std::uint64_t k);

}  // namespace qsd

#endif
