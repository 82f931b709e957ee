#pragma once

// Free *-algebra presentations, word polynomials and rewriting.

#include "qg/hopfcore.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qg {

/// A generator or its formal adjoint; `leg` tags the factor in A (x) A.
struct Letter {
  std::uint32_t gen = 0;
  bool star = false;
  std::uint8_t leg = 0;

  std::uint32_t rank() const { return gen * 2 + (star ? 1 : 0); }
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Degree-lexicographic order: length first, then (leg, rank) letter by letter.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

class WordPoly {
 public:
  using Terms = std::map<Word, Complex, WordOrder>;

  WordPoly() = default;
  static WordPoly constant(Complex c);
  static WordPoly monomial(Word w, Complex c = 1.0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  double max_coeff() const;

  void add_term(const Word& w, Complex c);
  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  WordPoly operator+(const WordPoly& o) const;
  WordPoly operator-(const WordPoly& o) const;
  WordPoly operator*(const WordPoly& o) const;
  WordPoly operator*(Complex c) const;
  /// Reverses words, toggles stars, conjugates coefficients.
  WordPoly star() const;
  bool operator==(const WordPoly& o) const;

  /// Coefficients at or below this magnitude are dropped.
  static constexpr double kDrop = 1e-12;

 private:
  Terms terms_;
};

struct RewriteRule {
  Word lhs;
  WordPoly rhs;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::map<std::string, double> parameters;
  std::vector<WordPoly> relations;
  std::vector<RewriteRule> rules;
  /// Image of each generator in the tensor square (letters with leg 0 or 1);
  /// empty when no coproduct is declared.
  std::vector<WordPoly> delta;

  /// Throws InvalidInput on unknown names.
  std::uint32_t generator_index(const std::string& name) const;
};

/// Exhaustive leftmost rewriting, memoised per word. Throws
/// StepLimitExceeded when more than max_steps rewrites are needed.
WordPoly normal_form(const WordPoly& p, const Presentation& pres, std::size_t max_steps = 200000);

/// Normal form in A (x) A: letters are sorted by leg, then each leg is reduced.
WordPoly tensor_normal_form(const WordPoly& p, const Presentation& pres,
                            std::size_t max_steps = 200000);

/// Parses e.g. "g a", "a* a - 1", "2 u11 u12 + 0.5". Parameter names act as
/// scalars. Throws InvalidInput.
WordPoly parse_poly(const std::string& text, const Presentation& pres);
std::string to_string(const WordPoly& p, const Presentation& pres);

/// Degree-truncated completion of the relations to a rule set under WordOrder.
/// Overlaps producing words longer than degree_cap are not explored.
std::vector<RewriteRule> complete_rules(const std::vector<WordPoly>& relations,
                                        std::size_t degree_cap);

/// Overlap and inclusion ambiguities of the rule set (up to max_degree) whose
/// two reductions disagree, as printed overlap words.
std::vector<std::string> confluence_failures(const Presentation& pres, std::size_t max_degree);

/// Entries p = p^* = p^2, rows and columns summing to 1 and the derived
/// orthogonality relations. Throws DimensionMismatch for non-square input.
VerificationReport validate_magic(const std::vector<std::vector<CMatrix>>& u,
                                  const Tolerance& tol = {});

/// Substitutes matrices for the generators and checks every relation.
VerificationReport eval_hom(const Presentation& pres, const std::map<std::string, CMatrix>& assignment,
                            const Tolerance& tol = {});

/// Delta(r) for every relation r, reduced in the tensor square.
VerificationReport delta_well_defined(const Presentation& pres, std::size_t degree_cap = 6,
                                      std::size_t max_steps = 200000);
VerificationReport delta_well_defined(const Presentation& pres, const std::vector<WordPoly>& delta,
                                      std::size_t degree_cap = 6, std::size_t max_steps = 200000);

}  // namespace qg
