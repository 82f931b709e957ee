#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qg;
using namespace qgtest;

TEST_CASE("built-in groups are valid") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    const FiniteGroupSpec g = group_by_name(name);
    CHECK_NOTHROW(g.validate());
    CHECK(g.name == name);
    CHECK(g.labels.size() == g.order);
    CHECK(g.permutations.size() == g.order);
    for (std::size_t a = 0; a < g.order; ++a)
      for (std::size_t b = 0; b < g.order; ++b) {
        const auto& pa = g.permutations[a];
        const auto& pb = g.permutations[b];
        const auto& pab = g.permutations[g.mul(a, b)];
        for (std::size_t x = 0; x < pa.size(); ++x) CHECK(pab[x] == pa[pb[x]]);
      }
  }
  CHECK(catalog_group_names().size() == 15);
  CHECK(group_by_name("Z1").order == 1);
  CHECK_THROWS_AS(group_by_name("Z13"), Error);
  CHECK_THROWS_AS(group_by_name("A5"), Error);
}

TEST_CASE("group orders and abelianness") {
  const std::pair<const char*, std::size_t> orders[] = {{"Z7", 7}, {"S3", 6}, {"S4", 24}, {"D4", 8}, {"Q8", 8}};
  for (const auto& [name, n] : orders) CHECK(group_by_name(name).order == n);
  CHECK(group_by_name("Z12").is_abelian());
  CHECK_FALSE(group_by_name("S3").is_abelian());
  CHECK_FALSE(group_by_name("D4").is_abelian());
  CHECK_FALSE(group_by_name("Q8").is_abelian());
  CHECK_FALSE(find_isomorphism(dihedral_group_d4(), quaternion_group()));
  CHECK(symmetric_group(3).labels.front() == "e");
}

TEST_CASE("quaternion relations") {
  const FiniteGroupSpec g = quaternion_group();
  auto at = [&](const std::string& l) {
    return static_cast<std::size_t>(std::find(g.labels.begin(), g.labels.end(), l) - g.labels.begin());
  };
  CHECK(g.mul(at("i"), at("j")) == at("k"));
  CHECK(g.mul(at("j"), at("i")) == at("-k"));
  CHECK(g.mul(at("i"), at("i")) == at("-1"));
  CHECK(g.inverse[at("k")] == at("-k"));
}

TEST_CASE("from_table validation") {
  CHECK_THROWS_AS(FiniteGroupSpec::from_table("bad", {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroupSpec::from_table("bad", {{0, 1, 2}, {1, 2, 0}}), Error);
  // Latin square that is not associative
  const FiniteGroupSpec loop = FiniteGroupSpec::from_table(
      "loop", {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  CHECK_THROWS_AS(loop.validate(), Error);
  CHECK_THROWS_AS(group_algebra(loop), Error);
  const FiniteGroupSpec z3 = FiniteGroupSpec::from_table("z3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3.identity == 0);
  CHECK(z3.inverse == std::vector<std::size_t>{0, 2, 1});
  CHECK(find_isomorphism(z3, cyclic_group(3)));
  CHECK_THROWS_AS(permutation_group("bad", {{0, 1}, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(permutation_group("bad", {}), Error);
  CHECK(permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}).order == 6);
}

TEST_CASE("group and function algebras") {
  const HopfPtr z1 = group_algebra(cyclic_group(1));
  CHECK(z1->dim() == 1);
  CHECK(verify_hopf(*z1).passed());
  const HopfPtr z2 = group_algebra(cyclic_group(2));
  CHECK(max_abs(*z2->antipode - CMatrix::Identity(2, 2)) == 0.0);
  const HopfPtr s3 = group_algebra(symmetric_group(3));
  CHECK(s3->dim() == 6);
  CHECK_FALSE(s3->alg.is_commutative());
  CHECK(s3->coalg.is_cocommutative());
  const HopfPtr f3 = function_algebra(symmetric_group(3));
  CHECK(f3->alg.is_commutative());
  CHECK_FALSE(f3->coalg.is_cocommutative());
  const HopfPtr fz2 = function_algebra(cyclic_group(2));
  CHECK(fz2->alg.is_commutative());
  CHECK(fz2->coalg.is_cocommutative());
  CHECK(s3->name == "C[S3]");
  CHECK(f3->name == "C(S3)");
  CHECK(f3->alg.labels[0] == "delta_e");
}

TEST_CASE("commutativity of the dual") {
  for (const char* name : {"Z4", "S3", "Q8", "D4"}) {
    const FiniteGroupSpec g = group_by_name(name);
    for (const HopfPtr& h : {group_algebra(g), function_algebra(g)}) {
      const HopfData d = dual_hopf(*h);
      CHECK(h->alg.is_commutative() == d.coalg.is_cocommutative());
      CHECK(h->coalg.is_cocommutative() == d.alg.is_commutative());
    }
  }
}

TEST_CASE("monoid bialgebra") {
  const HopfPtr m = monoid_bialgebra();
  CHECK(m->dim() == 2);
  CHECK_FALSE(m->antipode);
  CHECK(verify_bialgebra(*m).passed());
}

TEST_CASE("defining corep") {
  const FiniteGroupSpec g = symmetric_group(4);
  const HopfPtr f = function_algebra(g);
  const Corep u = defining_corep(f, g);
  CHECK(u.size() == 4);
  CHECK(is_corep(u));
  // entries of each row sum to 1 in C(G)
  for (std::size_t i = 0; i < 4; ++i) {
    CVector s = CVector::Zero(24);
    for (std::size_t j = 0; j < 4; ++j) s += u.entry(i, j);
    CHECK(max_abs(s - f->alg.unit) == 0.0);
  }
  // the same indicators in the group algebra are not a corep
  CHECK_FALSE(is_corep(defining_corep(group_algebra(g), g)));
  FiniteGroupSpec bare = FiniteGroupSpec::from_table("z2", {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(defining_corep(function_algebra(bare), bare), Error);
}

TEST_CASE("random rank-one projections") {
  const CMatrix p = random_rank_one_projection(3, 9);
  CHECK(max_abs(p * p - p) < 1e-12);
  CHECK(max_abs(p - p.adjoint()) < 1e-12);
  CHECK(std::abs(p.trace() - 1.0) < 1e-12);
  CHECK(max_abs(p - random_rank_one_projection(3, 9)) == 0.0);
  CHECK(max_abs(p - random_rank_one_projection(3, 10)) > 1e-6);
}

TEST_CASE("permutation_magic") {
  const MagicMatrix u = permutation_magic({1, 2, 0});
  CHECK(u.size() == 3);
  CHECK(u[1][0](0, 0) == Complex(1.0));
  CHECK(u[0][0](0, 0) == Complex(0.0));
}

TEST_CASE("presentations") {
  const Presentation s = sn_plus_presentation(2);
  CHECK(s.generators.size() == 4);
  CHECK(s.delta.size() == 4);
  CHECK(std::set<std::string>(s.generators.begin(), s.generators.end()) ==
        std::set<std::string>{"u11", "u12", "u21", "u22"});
  const Presentation q = suq2_presentation(2.0);
  CHECK(q.relations.size() == 5);
  CHECK(q.parameters.at("q") == 2.0);
  CHECK(q.generator_index("g") == 1);
  CHECK_THROWS_AS(q.generator_index("b"), Error);
  CHECK_THROWS_AS(suq2_presentation(std::numeric_limits<double>::infinity()), Error);
  // n = 1: the single generator is the unit
  const Presentation one = sn_plus_presentation(1);
  CHECK(to_string(normal_form(parse_poly("u11", one), one), one) == "1");
}

TEST_CASE("synthetic non-Kac data") {
  const IrrData a = synthetic_nonkac({{2, 2.0}});
  REQUIRE(a.blocks.size() == 1);
  CHECK(std::abs(a.blocks[0].q.q(0, 0) - 2.0) == 0.0);
  CHECK(std::abs(a.blocks[0].q.q(1, 1) - 0.5) == 0.0);
  CHECK(a.blocks[0].q.d == 2.5);
  CHECK(std::abs(a.blocks[0].q.q.inverse().trace().real() - 2.5) < 1e-15);

  const IrrData b = synthetic_nonkac({{1, 1.0}});
  CHECK(max_abs(b.blocks[0].q.q - CMatrix::Identity(1, 1)) == 0.0);
  CHECK(modular_report(b).q_identity);

  const ModularReport m = modular_report(synthetic_nonkac({{2, 3.0}, {1, 1.0}}));
  CHECK(m.lr_gap > 0.1);

  const IrrData c = synthetic_nonkac({{4, 5.0}});
  CHECK(c.blocks[0].q.d == doctest::Approx(5.0 + 0.2 + 2.0));
  CHECK(c.blocks[0].q.d >= 4.0);
  CHECK_THROWS_AS(synthetic_nonkac({{2, 0.0}}), Error);
  CHECK_THROWS_AS(synthetic_nonkac({{2, -1.0}}), Error);
  CHECK_THROWS_AS(synthetic_nonkac({{0, 1.0}}), Error);
  CHECK_THROWS_AS(synthetic_nonkac({}), Error);
  CHECK(synthetic_nonkac({{3, 2.0}}).blocks[0].id == "irr0");
}
