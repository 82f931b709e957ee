#pragma once

// Built-in groups, Hopf algebras, magic unitaries, presentations and
// synthetic dual data.

#include "qg/dualqg.hpp"
#include "qg/freestar.hpp"
#include "qg/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qg {

FiniteGroupSpec cyclic_group(std::size_t n);
/// Full symmetric group on n points, identity first, then lexicographic.
FiniteGroupSpec symmetric_group(std::size_t n);
/// Symmetries of a square acting on its 4 vertices.
FiniteGroupSpec dihedral_group_d4();
FiniteGroupSpec quaternion_group();
/// Closure of the generating permutations; (a*b)(x) = a(b(x)).
FiniteGroupSpec permutation_group(std::string name,
                                  const std::vector<std::vector<std::size_t>>& generators);

/// "Z1".."Z12", "S3", "S4", "D4", "Q8". Throws InvalidInput.
FiniteGroupSpec group_by_name(const std::string& name);
/// Z2..Z12, S3, S4, D4, Q8.
std::vector<std::string> catalog_group_names();

/// Basis = group elements, Delta g = g (x) g, S g = g^-1, g^* = g^-1.
HopfPtr group_algebra(const FiniteGroupSpec& g);
/// Basis = point masses, Delta(f)(x, y) = f(xy), pointwise conjugation.
HopfPtr function_algebra(const FiniteGroupSpec& g);
/// The two-element idempotent monoid {1, z}: a bialgebra without antipode.
HopfPtr monoid_bialgebra();

/// u_ij = indicator of {g : g(j) = i} in the function algebra of g.
/// Throws InvalidInput when g carries no permutation action.
Corep defining_corep(const HopfPtr& functions, const FiniteGroupSpec& g);

using MagicMatrix = std::vector<std::vector<CMatrix>>;

/// [[1-p, p, 0, 0], [p, 1-p, 0, 0], [0, 0, 1-q, q], [0, 0, q, 1-q]].
/// Throws InvalidInput unless p and q are projections of equal size.
MagicMatrix magic_block_example(const CMatrix& p, const CMatrix& q, const Tolerance& tol = {});
/// 0/1 scalar entries of a permutation matrix, u_ij = [perm[j] = i].
MagicMatrix permutation_magic(const std::vector<std::size_t>& perm);
/// Random rank-one projection in M_m.
CMatrix random_rank_one_projection(std::size_t m, std::uint64_t seed);

/// Generators u11..unn, rules by completion. Throws InvalidInput for n < 1.
Presentation sn_plus_presentation(std::size_t n);
/// Generators a, g with the five relations and the matrix coproduct.
/// Throws InvalidInput for q = 0.
Presentation suq2_presentation(double q);

/// Q = diag(t, 1/t, 1, ..., 1) per block. Throws InvalidInput for t <= 0 or n = 0.
IrrData synthetic_nonkac(const std::vector<std::pair<std::size_t, double>>& blocks,
                         const Tolerance& tol = {});

}  // namespace qg
