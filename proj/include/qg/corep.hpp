#pragma once

// Corepresentations: matrices with algebra-valued entries, their operations,
// intertwiners, decomposition into irreducibles and the Q-matrices.

#include "qg/measures.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qg {

/// U = sum e_ij (x) u_ij with u_ij in the host algebra; entry (i, j) is
/// stored at i * size + j.
class Corep {
 public:
  Corep() = default;
  Corep(HopfPtr host, std::size_t size, std::vector<CVector> entries);

  static Corep trivial(const HopfPtr& host);
  /// 1x1 corep [a].
  static Corep scalar(const HopfPtr& host, const CVector& a);

  const HopfPtr& host() const { return host_; }
  std::size_t size() const { return size_; }
  const CVector& entry(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  const std::vector<CVector>& entries() const { return entries_; }

  /// (T (x) 1) U (R (x) 1) for scalar matrices T (m x n) and R (n x k).
  Corep sandwich(const CMatrix& t, const CMatrix& r) const;
  /// Product in M_n(A).
  Corep times(const Corep& other) const;
  /// U^* with (U^*)_ij = u_ji^*.
  Corep star() const;
  /// (id (x) f) U for a linear map f on the host.
  Corep map_entries(const CMatrix& f) const;
  /// (id (x) phi) U.
  CMatrix contract(const Functional& phi) const;

 private:
  HopfPtr host_;
  std::size_t size_ = 0;
  std::vector<CVector> entries_;
};

/// Largest deviation from Delta(u_ij) = sum_k u_ik (x) u_kj.
double corep_residual(const Corep& u);
/// Corep identity and invertibility of U in M_n(A).
bool is_corep(const Corep& u, const Tolerance& tol = {});
bool is_unitary(const Corep& u, const Tolerance& tol = {});
double unitarity_residual(const Corep& u);

Corep direct_sum(const Corep& u, const Corep& v);
/// [U (x) V]_{(i,k),(j,l)} = u_ij v_kl.
Corep tensor_prod(const Corep& u, const Corep& v);
/// Entrywise star [u_ij^*].
Corep adjoint(const Corep& u);

/// Basis of {T : (T (x) 1) U = V (T (x) 1)}, T of shape size(v) x size(u).
std::vector<CMatrix> intertwiners(const Corep& u, const Corep& v, const Tolerance& tol = {});
bool is_irreducible(const Corep& u, const Tolerance& tol = {});

struct Unitarized {
  Corep unitary;
  CMatrix y;  // (y (x) 1) U = V (y (x) 1)
};

/// y = sqrt((id (x) h)(U^* U)). Throws NotInvertible.
Unitarized unitarize(const Corep& u, const Functional& haar, const Tolerance& tol = {});

struct IrrSummand {
  Corep irrep;                      // unitary irreducible representative
  std::size_t multiplicity = 0;
  std::vector<CMatrix> isometries;  // T_r : size(irrep) -> size(U), orthogonal ranges
};

struct IrrDecomposition {
  std::vector<IrrSummand> summands;
  /// max |sum_r (T_r (x) 1) U^a (T_r^* (x) 1) - U|
  double completeness = 0.0;
};

/// Decomposes a unitary corep. Classes are ordered trivial first, then by
/// dimension, then by discovery.
IrrDecomposition decompose(const Corep& u, const Tolerance& tol = {}, std::uint64_t seed = 0);

/// Regular corep: u_kj = sum_c Delta_{(k,c),j} e_c.
Corep regular_corep(const HopfPtr& h);

/// One unitary representative per class, from the regular corep; bases are
/// rotated so that Q is diagonal and nonincreasing. Throws
/// InconsistentConditions if the dimension count or the coefficient span
/// fails.
std::vector<Corep> irr_table(const HopfPtr& h, const Functional& haar, const Tolerance& tol = {},
                             std::uint64_t seed = 0);

struct QMatrix {
  CMatrix q;
  double d = 0.0;  // Tr Q
};

/// Validates positivity and Tr Q = Tr Q^-1 >= n. Throws InconsistentQData.
void check_qmatrix(const QMatrix& q, const Tolerance& tol = {});

/// M_lj = sum_i h(u_ij u_il^*), Q = c M with Tr Q = Tr Q^-1. Throws SingularGram.
QMatrix q_matrix_gram(const Corep& alpha, const Functional& haar, const Tolerance& tol = {});

/// Solves (Q (x) 1) U = ((id (x) S^2) U) (Q (x) 1) for positive Q. Throws
/// NoSolution or MissingAntipode.
QMatrix q_matrix_antipode(const Corep& alpha, const Tolerance& tol = {});

/// Max deviation from
///   h(u^a_ij (u^b_kl)^*) = [a=b] [i=k] Q_lj / d
///   h((u^a_ij)^* u^b_kl) = [a=b] [j=l] (Q^-1)_ki / d
double orthogonality_residual(const std::vector<Corep>& irreps, const std::vector<QMatrix>& qs,
                              const Functional& haar);

/// Haar values on the coefficients of a single block, without a host algebra.
/// Used for synthetic data with Q != 1.
struct CoefficientModel {
  std::size_t n = 0;
  CMatrix gram1;  // h(u_ij u_kl^*) at [(i,j),(k,l)]
  CMatrix gram2;  // h(u_ij^* u_kl) at [(i,j),(k,l)]
  CMatrix s2;     // S^2 on span{u_ij}, coefficient coordinates

  /// Values dictated by the orthogonality relations, S^2 U = (Q (x) 1) U (Q^-1 (x) 1).
  static CoefficientModel from_q(const CMatrix& q);
  /// Q extracted from gram1 as in q_matrix_gram.
  QMatrix q_matrix() const;
};

struct KacReport {
  bool q_identity = false;
  bool s2_identity = false;
  bool haar_tracial = false;
  bool dims_equal = false;

  bool all_true() const { return q_identity && s2_identity && haar_tracial && dims_equal; }
  bool consistent() const {
    return all_true() || (!q_identity && !s2_identity && !haar_tracial && !dims_equal);
  }
};

/// Evaluates the four Kac conditions; throws InconsistentConditions when they
/// disagree.
KacReport is_kac(const HopfPtr& h, const Tolerance& tol = {}, std::uint64_t seed = 0);
KacReport is_kac(const std::vector<CoefficientModel>& blocks, const Tolerance& tol = {});

}  // namespace qg
