#pragma once

// Dense complex tensor kernel.
//
// Index convention used throughout the library: in a tensor product
// V_1 (x) ... (x) V_k the leftmost factor is the major index, so the basis
// vector e_{i_1} (x) ... (x) e_{i_k} sits at position
// ((i_1 * d_2 + i_2) * d_3 + i_3) ...
//
// Antilinear maps are stored as a complex matrix J acting after entrywise
// conjugation: *(v) = J * conj(v).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NoSolution,
  MissingAntipode,
  SingularAntipode,
  NotCommutative,
  NotAState,
  NoConvergence,
  HostMismatch,
  NotInvertible,
  SingularGram,
  InconsistentConditions,
  NotACorep,
  NotUnitary,
  StepLimitExceeded,
  InconsistentQData,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Absolute and relative tolerance pair; both must lie in [0, 1).
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  Tolerance() = default;
  Tolerance(double abs, double rel);

  /// residual <= abs_tol + rel_tol * scale
  bool accepts(double residual, double scale = 1.0) const;
  Tolerance scaled(double factor) const;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Permutation matrix of tau: C^n (x) C^m -> C^m (x) C^n.
CMatrix flip(std::size_t n, std::size_t m);

/// Embeds `x` acting on the listed legs (0-based, in the order x's factors
/// appear) into the full tensor product with leg dimensions `dims`; all other
/// legs get the identity.
CMatrix leg_embed(const CMatrix& x, std::span<const std::size_t> legs,
                  std::span<const std::size_t> dims);

/// Applies `op` to one leg of a vector in the tensor product with dimensions
/// `dims`, without forming the full operator.
CVector apply_on_leg(const CMatrix& op, const CVector& v,
                     std::span<const std::size_t> dims, std::size_t leg);

/// Numerical rank of the span of equally shaped matrices (vectorised).
std::size_t rank_of_span(std::span<const CMatrix> vectors, const Tolerance& tol);

bool psd_check(const CMatrix& g, const Tolerance& tol);

struct LinearSolution {
  CMatrix solution;   // least-squares, minimum-norm
  CMatrix nullspace;  // orthonormal columns; zero columns when trivial
  double residual = 0.0;
};

/// Least-squares solve of A X = B. Returns nullopt when the residual exceeds
/// the tolerance.
std::optional<LinearSolution> solve_linear(const CMatrix& a, const CMatrix& b,
                                           const Tolerance& tol);

/// Orthonormal basis of ker A via SVD (threshold rel_tol * sigma_max, floored
/// at abs_tol).
CMatrix nullspace(const CMatrix& a, const Tolerance& tol);

/// Orthonormal basis of ker A given only the Gram matrix A^H A. Squaring the
/// singular values halves the usable digits, so the cut-off is
/// sqrt(rel_tol) * sigma_max.
CMatrix gram_nullspace(const CMatrix& gram, const Tolerance& tol);

/// Hermitian square root and inverse square root of a positive definite matrix.
CMatrix sqrt_psd(const CMatrix& p);

double max_abs(const CMatrix& m);
bool all_finite(const CMatrix& m);

/// Evaluates a covector on a vector without conjugation.
inline Complex pair(const CVector& covector, const CVector& v) {
  return (covector.transpose() * v)(0, 0);
}

}  // namespace qg
