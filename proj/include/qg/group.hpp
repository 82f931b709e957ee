#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qg {

/// A finite group given by its Cayley table: cayley[a][b] = a*b.
struct FiniteGroupSpec {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> cayley;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;
  /// Optional faithful action on {0..degree-1}: permutations[g][x] = g(x),
  /// with (a*b)(x) = a(b(x)).
  std::vector<std::vector<std::size_t>> permutations;

  /// Builds a spec from a table, deriving identity and inverses.
  static FiniteGroupSpec from_table(std::string name,
                                    std::vector<std::vector<std::size_t>> table);

  /// Latin square, associativity, identity and inverse consistency.
  /// Throws Error(InvalidInput) describing the first violation.
  void validate() const;

  std::size_t mul(std::size_t a, std::size_t b) const { return cayley[a][b]; }
  bool is_abelian() const;
};

/// Searches for an isomorphism between two Cayley tables by backtracking
/// over images of a generating set. Returns phi with phi[a] in `b`.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupSpec& a,
                                                         const FiniteGroupSpec& b);

/// Checks that phi is a bijective homomorphism a -> b.
bool is_isomorphism(const FiniteGroupSpec& a, const FiniteGroupSpec& b,
                    const std::vector<std::size_t>& phi);

}  // namespace qg
