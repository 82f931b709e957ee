#include "support.hpp"

#include <doctest.h>

using namespace qg;
using namespace qgtest;

namespace {

WordPoly random_word_poly(std::mt19937_64& rng, std::size_t gens, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree), g(0, gens - 1);
  std::uniform_int_distribution<int> coin(0, 1), terms(1, 3);
  std::normal_distribution<double> c;
  WordPoly p;
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (std::size_t k = len(rng); k > 0; --k)
      w.push_back({static_cast<std::uint32_t>(g(rng)), coin(rng) == 1, 0});
    p.add_term(w, Complex(c(rng), c(rng)));
  }
  return p;
}

// a^k (g*)^l g^m or (a*)^k (g*)^l g^m
bool pbw_shaped(const Word& w) {
  std::size_t i = 0;
  if (i < w.size() && w[i].gen == 0) {
    const bool star = w[i].star;
    while (i < w.size() && w[i].gen == 0 && w[i].star == star) ++i;
  }
  while (i < w.size() && w[i].gen == 1 && w[i].star) ++i;
  while (i < w.size() && w[i].gen == 1 && !w[i].star) ++i;
  return i == w.size();
}

Presentation looping() {
  Presentation p;
  p.name = "loop";
  p.generators = {"x"};
  p.rules.push_back({Word{{0, false, 0}}, WordPoly::monomial(Word{{0, false, 0}, {0, false, 0}})});
  return p;
}

std::map<std::string, CMatrix> magic_assignment(const MagicMatrix& u) {
  std::map<std::string, CMatrix> out;
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t k = 0; k < u.size(); ++k)
      out["u" + std::to_string(j + 1) + std::to_string(k + 1)] = u[j][k];
  return out;
}

}  // namespace

TEST_CASE("word polynomial arithmetic") {
  const Presentation p = suq2_presentation(2.0);
  const WordPoly a = parse_poly("a", p), g = parse_poly("g", p);
  CHECK((a * g).degree() == 2);
  CHECK((a - a).is_zero());
  CHECK((a + a) == a * 2.0);
  CHECK((a * g).star() == parse_poly("g* a*", p));
  CHECK((parse_poly("2 a", p) * Complex(0.0, 1.0)).star() == parse_poly("a*", p) * Complex(0.0, -2.0));
  CHECK(WordPoly::constant(0.0).is_zero());
  CHECK(parse_poly("a + 1e-14 g", p) == a);
  CHECK(parse_poly("q a", p) == a * 2.0);
  CHECK(WordOrder()(Word{{1, false, 0}}, Word{{0, false, 0}, {0, false, 0}}));
  CHECK(WordOrder()(Word{{0, false, 0}}, Word{{0, true, 0}}));
}

TEST_CASE("parse and print") {
  const Presentation p = suq2_presentation(2.0);
  CHECK(to_string(parse_poly("g a", p), p) == "g a");
  CHECK(to_string(parse_poly("a* a - 1", p), p) == "-1 + a* a");
  CHECK(to_string(WordPoly(), p) == "0");
  CHECK(to_string(parse_poly("0.25 g*", p), p) == "0.25 g*");
  CHECK_THROWS_AS(parse_poly("a + % b", p), Error);
  CHECK_THROWS_AS(parse_poly("b", p), Error);
  CHECK_THROWS_AS(parse_poly("a +", p), Error);
  const Word t{{0, false, 0}, {1, false, 1}};
  CHECK(to_string(WordPoly::monomial(t), p) == "a (x) g");
}

TEST_CASE("SU_q(2) rewriting") {
  const Presentation p = suq2_presentation(2.0);
  CHECK(to_string(normal_form(parse_poly("g a", p), p), p) == "0.5 a g");
  CHECK(to_string(normal_form(parse_poly("a* a", p), p), p) == "1 - g* g");
  CHECK(to_string(normal_form(parse_poly("a a*", p), p), p) == "1 - 4 g* g");
  CHECK(to_string(normal_form(parse_poly("g g*", p), p), p) == "g* g");
  CHECK(normal_form(parse_poly("a* a + g* g - 1", p), p).is_zero());
  CHECK(normal_form(parse_poly("a g - q g a", p), p).is_zero());
  for (double q : {0.5, 1.0, 2.0}) {
    const Presentation s = suq2_presentation(q);
    for (const auto& r : s.relations) CHECK(normal_form(r, s).is_zero());
  }
  // q = 1 is commutative
  const Presentation one = suq2_presentation(1.0);
  CHECK(normal_form(parse_poly("a g - g a", one), one).is_zero());
  CHECK_THROWS_AS(suq2_presentation(0.0), Error);
}

TEST_CASE("normal_form is idempotent and PBW-shaped") {
  for (double q : {0.5, 2.0}) {
    const Presentation p = suq2_presentation(q);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
      const WordPoly w = random_word_poly(rng, 2, 6);
      const WordPoly nf = normal_form(w, p);
      CHECK(normal_form(nf, p) == nf);
      for (const auto& [word, c] : nf.terms()) CHECK(pbw_shaped(word));
    }
  }
}

TEST_CASE("SU_q(2) rules are confluent") {
  CHECK(confluence_failures(suq2_presentation(2.0), 4).empty());
  CHECK(confluence_failures(suq2_presentation(0.5), 4).empty());
}

TEST_CASE("S_n^+ rewriting") {
  const Presentation p = sn_plus_presentation(3);
  CHECK(p.generators.size() == 9);
  for (const char* zero : {"u11 u12", "u21 u23", "u13 u23", "u32 u12"})
    CHECK(normal_form(parse_poly(zero, p), p).is_zero());
  CHECK(normal_form(parse_poly("u11 u11 - u11", p), p).is_zero());
  CHECK(normal_form(parse_poly("u22* - u22", p), p).is_zero());
  CHECK(normal_form(parse_poly("u11 + u12 + u13 - 1", p), p).is_zero());
  CHECK(normal_form(parse_poly("u12 + u22 + u32 - 1", p), p).is_zero());
  for (const auto& r : p.relations) CHECK(normal_form(r, p).is_zero());
  CHECK_THROWS_AS(sn_plus_presentation(0), Error);
  std::mt19937_64 rng(62);
  for (int t = 0; t < 50; ++t) {
    const WordPoly nf = normal_form(random_word_poly(rng, 9, 4), p);
    CHECK(normal_form(nf, p) == nf);
  }
}

TEST_CASE("completion of a small presentation") {
  Presentation p;
  p.generators = {"x", "y"};
  // y x = x y and x x = x
  p.relations = {parse_poly("y x - x y", p), parse_poly("x x - x", p)};
  p.rules = complete_rules(p.relations, 4);
  CHECK(normal_form(parse_poly("y x y x - x y y", p), p).is_zero());
  CHECK(confluence_failures(p, 4).empty());
  // x y -> x and y x -> y disagree on x y x
  Presentation half = p;
  half.rules = {{Word{{0, false, 0}, {1, false, 0}}, parse_poly("x", p)},
                {Word{{1, false, 0}, {0, false, 0}}, parse_poly("y", p)}};
  CHECK_FALSE(confluence_failures(half, 3).empty());
}

TEST_CASE("non-terminating rules hit the step limit") {
  const Presentation p = looping();
  try {
    normal_form(parse_poly("x", p), p, 1000);
    FAIL("expected StepLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StepLimitExceeded);
  }
}

TEST_CASE("validate_magic") {
  std::vector<std::size_t> perm{0, 1, 2, 3};
  int count = 0;
  do {
    CHECK(validate_magic(permutation_magic(perm)).passed());
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 24);

  const CMatrix p = random_rank_one_projection(2, 1), q = random_rank_one_projection(2, 2);
  const MagicMatrix u = magic_block_example(p, q);
  const VerificationReport r = validate_magic(u);
  CHECK(r.passed());
  CHECK(r.find("row_orthogonality") != nullptr);
  // p and q do not commute
  CHECK(max_abs(p * q - q * p) > 1e-3);

  MagicMatrix idem = u;
  idem[0][0] = 0.5 * CMatrix::Identity(2, 2);
  idem[0][1] = 0.5 * CMatrix::Identity(2, 2);
  const VerificationReport ri = validate_magic(idem);
  REQUIRE(ri.first_failure() != nullptr);
  CHECK(ri.first_failure()->name == "idempotent_entries");

  MagicMatrix sa = u;
  CMatrix n = CMatrix::Zero(2, 2);
  n(0, 1) = 1.0;
  sa[2][2] += n;
  CHECK(validate_magic(sa).first_failure()->name == "selfadjoint_entries");

  MagicMatrix rows = u;
  rows[3][3] = CMatrix::Zero(2, 2);
  rows[3][2] = CMatrix::Zero(2, 2);
  CHECK_FALSE(validate_magic(rows).passed());
  CHECK(validate_magic(rows).find("row_sums")->pass == false);

  MagicMatrix ragged = u;
  ragged[1].pop_back();
  CHECK_THROWS_AS(validate_magic(ragged), Error);
}

TEST_CASE("magic_block_example") {
  const CMatrix z = CMatrix::Zero(2, 2), one = CMatrix::Identity(2, 2);
  const MagicMatrix u0 = magic_block_example(z, z);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) CHECK(max_abs(u0[j][k] - (j == k ? one : z)) == 0.0);
  const MagicMatrix u1 = magic_block_example(one, z);
  CHECK(max_abs(u1[0][1] - one) == 0.0);
  CHECK(max_abs(u1[0][0]) == 0.0);
  CHECK(validate_magic(u1).passed());
  CHECK_THROWS_AS(magic_block_example(2.0 * one, z), Error);
  CHECK_THROWS_AS(magic_block_example(one, CMatrix::Zero(3, 3)), Error);
}

TEST_CASE("eval_hom") {
  const Presentation s4 = sn_plus_presentation(4);
  const MagicMatrix u = magic_block_example(random_rank_one_projection(2, 3), random_rank_one_projection(2, 4));
  const auto assignment = magic_assignment(u);
  CHECK(validate_magic(u).passed());
  CHECK(eval_hom(s4, assignment).passed());
  CHECK(eval_hom(s4, magic_assignment(permutation_magic({2, 0, 3, 1}))).passed());

  // unitary conjugation keeps relations
  std::mt19937_64 rng(63);
  const CMatrix w = Eigen::HouseholderQR<CMatrix>(random_matrix(2, 2, rng)).householderQ();
  std::map<std::string, CMatrix> conj;
  for (const auto& [k, m] : assignment) conj[k] = w * m * w.adjoint();
  CHECK(eval_hom(s4, conj).passed());

  for (double q : {0.5, 1.0, 2.0}) {
    const Presentation p = suq2_presentation(q);
    CMatrix a(1, 1), g = CMatrix::Zero(1, 1);
    a(0, 0) = std::polar(1.0, 0.7);
    CHECK(eval_hom(p, {{"a", a}, {"g", g}}).passed());
  }
  const Presentation p2 = suq2_presentation(2.0);
  const CMatrix one = CMatrix::Identity(1, 1);
  const VerificationReport bad = eval_hom(p2, {{"a", one}, {"g", one}});
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.find("relation_3")->pass);
  CHECK_THROWS_AS(eval_hom(p2, {{"a", one}}), Error);
  CHECK_THROWS_AS(eval_hom(p2, {{"a", one}, {"g", CMatrix::Identity(2, 2)}}), Error);
}

TEST_CASE("coproducts are well defined") {
  for (double q : {0.5, 1.0, 2.0}) {
    const VerificationReport r = delta_well_defined(suq2_presentation(q), 6);
    CHECK(r.passed());
    CHECK(r.checks.size() == 5);
  }
  for (std::size_t n : {2, 3}) CHECK(delta_well_defined(sn_plus_presentation(n), 6).passed());

  const Presentation p = suq2_presentation(2.0);
  std::vector<WordPoly> wrong = p.delta;
  wrong[0] = WordPoly::monomial(Word{{0, false, 0}, {0, false, 1}});
  CHECK_FALSE(delta_well_defined(p, wrong, 6).passed());
  // degree cap below the image degree
  const VerificationReport capped = delta_well_defined(p, 3);
  CHECK_FALSE(capped.passed());
  CHECK(capped.find("delta_relation_0_above_degree_cap") != nullptr);
  CHECK_THROWS_AS(delta_well_defined(p, std::vector<WordPoly>{}, 6), Error);
}

TEST_CASE("tensor normal form") {
  const Presentation p = suq2_presentation(2.0);
  // (1 (x) a)(g (x) 1) = g (x) a
  const WordPoly x = WordPoly::monomial(Word{{0, false, 1}, {1, false, 0}});
  CHECK(to_string(tensor_normal_form(x, p), p) == "g (x) a");
  // (a* (x) 1)(a (x) 1) reduces on the first leg
  const WordPoly y = WordPoly::monomial(Word{{0, true, 0}, {0, false, 0}});
  CHECK(to_string(tensor_normal_form(y, p), p) == "1 - g* g");
}
