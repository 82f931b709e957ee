#pragma once

// Linear functionals on finite quantum groups: states, convolution and the
// Haar state.

#include "qg/hopfcore.hpp"

#include <cstdint>
#include <memory>
#include <optional>

namespace qg {

using HopfPtr = std::shared_ptr<const HopfData>;

struct Functional {
  HopfPtr host;
  CVector coeffs;

  Functional() = default;
  Functional(HopfPtr h, CVector c);

  Complex operator()(const CVector& a) const { return pair(coeffs, a); }
  static Functional counit(const HopfPtr& h);
};

/// True when both functionals live on the same structure tensors.
bool same_host(const HopfPtr& a, const HopfPtr& b);

/// (phi (x) psi) o Delta. Throws Error(HostMismatch).
Functional convolve_functionals(const Functional& phi, const Functional& psi);

/// phi(1) = 1 and [phi(b_i^* b_j)] positive semidefinite.
bool is_state(const Functional& phi, const Tolerance& tol = {});

/// phi(b_i b_j) = phi(b_j b_i) on all basis pairs.
bool is_tracial(const Functional& phi, const Tolerance& tol = {});

enum class HaarMethod { Solve, Cesaro };

struct HaarResult {
  Functional state;
  HaarMethod method = HaarMethod::Solve;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Solves left and right invariance with h(1) = 1. Throws NoSolution when
/// the input fails the cancellation rules or the invariant functional is
/// not unique, NotAState when it is not positive.
HaarResult haar_solve(const HopfPtr& h, const Tolerance& tol = {});

/// Cesaro means of convolution powers of omega, averaged over 2^k powers at
/// step k. `iterations` counts the averaging steps. Throws NoConvergence.
HaarResult haar_cesaro(const HopfPtr& h, const std::optional<Functional>& omega = std::nullopt,
                       std::size_t max_iter = 10000, const Tolerance& tol = {},
                       std::uint64_t seed = 0);

/// omega(a) = Tr(L_a P) / Tr(P) with P = M^* M for a seeded random M, where
/// L_a is left multiplication in gram-orthonormal coordinates (standard
/// coordinates when the algebra carries no gram).
Functional default_faithful_state(const HopfPtr& h, std::uint64_t seed = 0);

/// Max residual of h * mu = mu * h = mu(1) h over the dual basis.
double haar_identity_residual(const Functional& haar);

}  // namespace qg
