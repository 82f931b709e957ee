#pragma once

// Finite-dimensional (co/bi/Hopf) *-algebras as structure tensors.

#include "qg/group.hpp"
#include "qg/tenscore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qg {

/// Unital associative *-algebra on C^dim.
///
/// mult is dim x dim^2; column (i*dim + j) holds e_i e_j. star holds J with
/// *(v) = J conj(v). gram, when present, is a faithful positive inner product
/// <x, y> = x^H gram y in which left multiplication is a *-representation.
struct StructureAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  CMatrix mult;
  CVector unit;
  CMatrix star;
  std::optional<CMatrix> gram;

  CVector basis(std::size_t i) const;
  CVector multiply(const CVector& x, const CVector& y) const;
  CVector adjoint(const CVector& x) const;
  /// Matrix of y -> x y.
  CMatrix left_regular(const CVector& x) const;
  /// Matrix of y -> y x.
  CMatrix right_regular(const CVector& x) const;
  /// Product in A (x) A of two tensors given in the leftmost-major layout.
  CVector multiply_tensor(const CVector& x, const CVector& y) const;
  bool is_commutative(const Tolerance& tol = {}) const;
};

/// Counital coassociative coalgebra: delta is dim^2 x dim, counit a covector.
struct StructureCoalgebra {
  std::size_t dim = 0;
  CMatrix delta;
  CVector counit;

  CVector comultiply(const CVector& x) const { return delta * x; }
  Complex counit_of(const CVector& x) const { return pair(counit, x); }
  bool is_cocommutative(const Tolerance& tol = {}) const;
};

struct HopfData {
  std::string name;
  StructureAlgebra alg;
  StructureCoalgebra coalg;
  std::optional<CMatrix> antipode;

  std::size_t dim() const { return alg.dim; }
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, bool pass);
  /// Records a residual judged against tol (scale 1).
  void add(std::string name, double residual, const Tolerance& tol);
  void append(const VerificationReport& other, const std::string& prefix = "");
  bool passed() const;
  double max_residual() const;
  const CheckResult* find(const std::string& name) const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

VerificationReport verify_algebra(const StructureAlgebra& a, const Tolerance& tol = {});
VerificationReport verify_coalgebra(const StructureCoalgebra& c, const Tolerance& tol = {});

/// Full *-Hopf check, including the algebra and coalgebra axioms.
/// Throws Error(MissingAntipode) when h carries no antipode.
VerificationReport verify_hopf(const HopfData& h, const Tolerance& tol = {});

/// Bialgebra part only (no antipode needed).
VerificationReport verify_bialgebra(const HopfData& h, const Tolerance& tol = {});

/// m o (f1 (x) f2) o Delta for maps C^{dim c} -> C^{dim a}.
CMatrix convolve_maps(const CMatrix& f1, const CMatrix& f2, const StructureCoalgebra& c,
                      const StructureAlgebra& a);

/// Solves S * id = e o eps = id * S. Returns nullopt when no solution exists
/// or the solution is not unique.
std::optional<CMatrix> find_antipode(const HopfData& b, const Tolerance& tol = {});

HopfData opposite(const HopfData& h);
HopfData coopposite(const HopfData& h);
HopfData opcoopposite(const HopfData& h);

/// The dual *-Hopf algebra in the dual basis.
HopfData dual_hopf(const HopfData& h);

/// Span rank of {(1 (x) b) Delta(a)} and {(a (x) 1) Delta(b)} equals dim^2.
bool check_cancellation(const HopfData& h, const Tolerance& tol = {});

/// Characters (unital multiplicative functionals) of a finite-dimensional
/// *-algebra, as covectors, sorted deterministically. Non-commutative inputs
/// are first reduced modulo their commutator ideal.
std::vector<CVector> algebra_characters(const StructureAlgebra& a, const Tolerance& tol = {},
                                        std::uint64_t seed = 0);

/// All a with Delta(a) = a (x) a and eps(a) = 1. Throws
/// Error(InconsistentConditions) if the set is not closed under m and S.
std::vector<CVector> grouplikes(const HopfData& h, const Tolerance& tol = {},
                                std::uint64_t seed = 0);

struct ReconstructedGroup {
  FiniteGroupSpec group;
  /// characters[g] is the point evaluation at group element g.
  std::vector<CVector> characters;
};

/// Rebuilds the finite group whose function algebra is h. Throws
/// Error(NotCommutative) for non-commutative algebras.
ReconstructedGroup gelfand_reconstruct(const HopfData& h, const Tolerance& tol = {},
                                       std::uint64_t seed = 0);

/// pi maps the space of h2 to h1; true iff pi is unital, multiplicative,
/// *-preserving and Delta_1 o pi = (pi (x) pi) o Delta_2.
bool check_morphism(const CMatrix& pi, const HopfData& h1, const HopfData& h2,
                    const Tolerance& tol = {});

}  // namespace qg
