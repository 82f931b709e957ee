#pragma once

// The dual discrete quantum group: block algebra, Fourier transform, the
// morphism attached to a corepresentation, dual coproduct and counit, Haar
// weights and the modular element.

#include "qg/corep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qg {

/// Direct sum of full matrix algebras M_{n_1} + ... + M_{n_k} in the
/// matrix-unit basis; block b entry (i, j) sits at offset(b) + i n_b + j.
class BlockAlgebra {
 public:
  BlockAlgebra() = default;
  explicit BlockAlgebra(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t offset(std::size_t b) const { return offsets_[b]; }
  std::size_t dim() const { return dim_; }
  std::size_t index(std::size_t b, std::size_t i, std::size_t j) const {
    return offsets_[b] + i * sizes_[b] + j;
  }

  CMatrix block(const CVector& x, std::size_t b) const;
  std::vector<CMatrix> split(const CVector& x) const;
  CVector join(const std::vector<CMatrix>& blocks) const;

  CVector multiply(const CVector& x, const CVector& y) const;
  CVector adjoint(const CVector& x) const;
  CVector unit() const;
  CMatrix star_matrix() const;
  /// Dense structure tensors; only sensible for small dimensions.
  StructureAlgebra structure(const std::string& label_prefix = "e") const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

struct IrrBlock {
  std::string id;
  std::size_t n = 0;
  QMatrix q;
};

/// Irreducible data of a compact quantum group. Finite sources carry the host,
/// unitary representatives (the blocks of W) and the Haar state; truncated
/// sources carry only the Q family.
struct IrrData {
  std::vector<IrrBlock> blocks;
  HopfPtr host;
  std::vector<Corep> reps;
  std::optional<Functional> haar;

  bool finite() const { return host != nullptr; }
};

IrrData irrdata_from_host(const HopfPtr& h, const Tolerance& tol = {}, std::uint64_t seed = 0);
/// Throws InconsistentQData.
IrrData truncated_irrdata(const std::vector<std::pair<std::string, CMatrix>>& qs,
                          const Tolerance& tol = {});

struct DualAlgebra {
  BlockAlgebra algebra;
  std::vector<std::string> ids;
  /// Index of the trivial block, when known.
  std::optional<std::size_t> trivial;
};

/// Throws InconsistentQData.
DualAlgebra build_dual(const IrrData& src, const Tolerance& tol = {});

/// Rows (b, j, i) hold the covector a -> h(a v^b_ij^*) for a family of coreps.
CMatrix fourier_rows(const std::vector<Corep>& blocks, const Functional& haar);

/// F(a)_b = sum_ij e_ji h(a u^b_ij^*), as a dimA_hat x dimA matrix.
CMatrix fourier_matrix(const IrrData& src);
/// F^-1(x) = sum_b d_b sum_ij (Q_b^-1 x_b)_ji u^b_ij.
CMatrix fourier_inverse_matrix(const IrrData& src);
/// Rows (b, i, j) are the coordinates of u^b_ij.
CMatrix coefficient_matrix(const IrrData& src);

CVector fourier(const IrrData& src, const CVector& a);
CVector fourier_inv(const IrrData& src, const CVector& x);

/// Covectors of the left and right Haar weights on the flat block coordinates.
CVector hhat_L_covector(const IrrData& src);
CVector hhat_R_covector(const IrrData& src);
Complex hhat_L(const IrrData& src, const CVector& x);
Complex hhat_R(const IrrData& src, const CVector& x);

struct PhiResult {
  CMatrix phi;  // dim B x dim A_hat
  BlockAlgebra target;
  double unital_residual = 0.0;
  double star_residual = 0.0;
  double multiplicative_residual = 0.0;
  double w_residual = 0.0;  // |(Phi (x) id) W - V|
  std::size_t span_rank = 0;
  bool passed = false;
};

/// Phi = F_V o F^-1 for V = (+)_b V_b with V_b a unitary corep over the host,
/// B = (+)_b M_{size V_b}. Throws NotACorep or NotUnitary.
PhiResult phi_from_corep(const IrrData& src, const std::vector<Corep>& v, const Tolerance& tol = {},
                         std::uint64_t seed = 0, std::size_t pairs = 100);

/// The corep family W_23 W_13: block (a, b) has entries
/// [(i,k),(j,l)] = u^b_kl u^a_ij.
std::vector<Corep> w23_w13(const IrrData& src);

/// Delta_hat as a (D^2 x D) matrix on flat block coordinates.
CMatrix dual_comult_matrix(const IrrData& src, const Tolerance& tol = {});
CVector dual_comult(const IrrData& src, const CVector& x, const Tolerance& tol = {});
/// Trivial-block component.
Complex dual_counit(const IrrData& src, const CVector& x);
CVector dual_counit_covector(const IrrData& src);

/// (A_hat, Delta_hat, e_hat) as a Hopf algebra; the antipode is solved for.
HopfPtr dual_quantum_group(const IrrData& src, const Tolerance& tol = {});

/// Coassociativity, counit laws, (e_hat (x) id) W = 1 and the two invariances.
VerificationReport verify_dual_invariance(const IrrData& src, const Tolerance& tol = {});

struct ModularReport {
  bool finite = false;
  bool q_identity = false;
  double trace_residual = 0.0;  // max |Tr Q - Tr Q^-1|
  bool trace_bound = false;     // Tr Q >= n
  double weight_identity_residual = 0.0;  // |hR(x) - hL(QxQ)| on a basis
  double lr_gap = 0.0;                    // max |hL - hR| on matrix units
  std::optional<std::size_t> witness;     // flat index of the gap witness
  std::optional<double> left_modular_residual;
  std::optional<double> right_modular_residual;
  bool passed = false;
};

ModularReport modular_report(const IrrData& src, const Tolerance& tol = {});

struct UnimodularityReport {
  std::optional<bool> haar_tracial;
  bool weights_equal = false;
  bool q_identity = false;
  std::optional<bool> s2_identity;
  bool antipode_bounded = true;
  bool all_true() const;
};

/// Throws InconsistentConditions when the evaluated conditions disagree.
UnimodularityReport unimodularity_report(const IrrData& src, const Tolerance& tol = {});
UnimodularityReport unimodularity_report(const HopfPtr& h, const Tolerance& tol = {},
                                         std::uint64_t seed = 0);

struct BidualityResult {
  bool isomorphic = false;
  CMatrix map;  // H -> dual of the dual, flat block coordinates
  std::string variant;
  HopfPtr bidual;
};

BidualityResult biduality_check(const HopfPtr& h, const Tolerance& tol = {}, std::uint64_t seed = 0);

}  // namespace qg
