#include "qsd/entropy.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace qsd {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::complex<double> toComplexDouble(const Scalar& s) {
  return {s.re.get_d() + s.reS3.get_d() * kSqrt3,
          s.im.get_d() + s.imS3.get_d() * kSqrt3};
}

void requireUnitState(const Vec& psi) {
  if (normSquared(psi) != Scalar::ofInt(1))
    throw DomainError("entropy functionals require an exactly normalized state");
}

void requireConsistentTag(const TaggedState& psi) {
  if (psi.normSquared <= 0 || normSquared(psi.raw) != Scalar(psi.normSquared))
    throw DomainError("tagged state norm tag does not match its amplitudes");
}

ExtReal lowerEntropyExact(const Scalar& quadForm) {
  int sign = signOfReal(quadForm);
  if (sign < 0) throw DomainError("negative quadratic form; mu is not PSD");
  if (sign == 0) return ExtReal::infinity();
  return ExtReal::finite(-std::log2(toDoubleReal(quadForm)));
}

// Spectral route; amplitudes are scaled by 1/√normSquared at the float stage.
ExtReal upperEntropySpectral(const HermOp& mu, const Vec& raw,
                             const Rational& normSq, double tol) {
  Rank dim = mu.window().rank();
  for (const auto& [r, z] : raw.amps()) dim = std::max(dim, r);
  for (const auto& [rc, z] : mu.allEntries())
    dim = std::max(dim, std::max(rc.first, rc.second));
  ++dim;

  Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim));
  for (const auto& [rc, z] : mu.allEntries())
    matrix(static_cast<Eigen::Index>(rc.first), static_cast<Eigen::Index>(rc.second)) =
        toComplexDouble(z);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  if (solver.info() != Eigen::Success)
    throw DomainError("eigendecomposition did not converge");

  double invNorm = 1.0 / std::sqrt(normSq.get_d());
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [r, z] : raw.amps())
    state(static_cast<Eigen::Index>(r)) = toComplexDouble(z) * invNorm;

  double nullOverlap = 0.0;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) {
    double lambda = solver.eigenvalues()(j);
    std::complex<double> overlap = solver.eigenvectors().col(j).adjoint() * state;
    double weight = std::norm(overlap);
    if (lambda <= tol)
      nullOverlap += weight;
    else
      sum += weight * (-std::log2(lambda));
  }
  if (nullOverlap > tol) return ExtReal::infinity();
  return ExtReal::finite(sum);
}

}  // namespace

ExtReal lowerEntropy(const HermOp& mu, const Vec& psi) {
  requireUnitState(psi);
  return lowerEntropyExact(applyQuadForm(mu, psi));
}

ExtReal lowerEntropy(const HermOp& mu, const TaggedState& psi) {
  requireConsistentTag(psi);
  return lowerEntropyExact(taggedQuadForm(mu, psi));
}

ExtReal upperEntropy(const HermOp& mu, const Vec& psi, double tol) {
  requireUnitState(psi);
  return upperEntropySpectral(mu, psi, Rational(1), tol);
}

ExtReal upperEntropy(const HermOp& mu, const TaggedState& psi, double tol) {
  requireConsistentTag(psi);
  return upperEntropySpectral(mu, psi.raw, psi.normSquared, tol);
}

Rational inducedSemimeasure(const HermOp& mu, const StateFamily& fam, std::uint64_t n,
                            std::uint64_t k) {
  Vec psi(mu.window());
  for (Rank r = 0; r <= mu.window().rank(); ++r) {
    StringIndex w = StringIndex::fromRank(r);
    psi.set(w, fam.rule(k, n, w));
  }
  Scalar q = applyQuadForm(mu, psi);
  return q.rationalValue();
}

}  // namespace qsd
