#include "support.hpp"

#include <doctest.h>

using namespace qg;
using namespace qgtest;

TEST_CASE("counit is the unit of convolution") {
  const HopfPtr h = function_algebra(symmetric_group(3));
  std::mt19937_64 rng(31);
  const Functional phi(h, random_vector(6, rng));
  const Functional eps = Functional::counit(h);
  CHECK(max_abs(convolve_functionals(eps, phi).coeffs - phi.coeffs) < 1e-12);
  CHECK(max_abs(convolve_functionals(phi, eps).coeffs - phi.coeffs) < 1e-12);
}

TEST_CASE("convolution is associative and dual to the product") {
  const HopfPtr h = function_algebra(quaternion_group());
  std::mt19937_64 rng(32);
  const Functional a(h, random_vector(8, rng)), b(h, random_vector(8, rng)), c(h, random_vector(8, rng));
  const CVector left = convolve_functionals(convolve_functionals(a, b), c).coeffs;
  const CVector right = convolve_functionals(a, convolve_functionals(b, c)).coeffs;
  CHECK(max_abs(left - right) < 1e-11);
  // on C(G) convolution of point masses is the group law
  const FiniteGroupSpec g = quaternion_group();
  const Functional d2(h, basis(8, 2)), d4(h, basis(8, 4));
  const CVector prod = convolve_functionals(d2, d4).coeffs;
  CHECK(max_abs(prod - basis(8, static_cast<Eigen::Index>(g.mul(2, 4)))) < 1e-14);
}

TEST_CASE("convolution across hosts is rejected") {
  const Functional a = Functional::counit(function_algebra(cyclic_group(3)));
  const Functional b = Functional::counit(group_algebra(cyclic_group(3)));
  try {
    convolve_functionals(a, b);
    FAIL("expected HostMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HostMismatch);
  }
}

TEST_CASE("states") {
  const HopfPtr f = function_algebra(cyclic_group(4));
  CHECK(is_state(Functional::counit(f)));
  CHECK_FALSE(is_state(Functional(f, -1.0 * f->coalg.counit)));
  CVector w(4);
  w << 0.7, 0.5, -0.1, -0.1;
  CHECK_FALSE(is_state(Functional(f, w)));
  const HopfPtr g = group_algebra(symmetric_group(3));
  CHECK(is_state(Functional::counit(g)));
  // positive definite functions on S3 are bounded by their value at e
  CHECK(is_state(Functional(g, basis(6, 0) + basis(6, 1))));
  CHECK_FALSE(is_state(Functional(g, basis(6, 0) + 2.0 * basis(6, 1))));
}

TEST_CASE("Haar state of the function algebra is the uniform measure") {
  const HopfPtr h = function_algebra(cyclic_group(2));
  const HaarResult r = haar_solve(h);
  CHECK(r.method == HaarMethod::Solve);
  CHECK(std::abs(r.state.coeffs(0) - 0.5) < 1e-12);
  CHECK(std::abs(r.state.coeffs(1) - 0.5) < 1e-12);
  CHECK(is_tracial(r.state));
}

TEST_CASE("Haar state of the group algebra reads the identity coefficient") {
  const FiniteGroupSpec g = cyclic_group(5);
  const HopfPtr h = group_algebra(g);
  const HaarResult r = haar_solve(h);
  CHECK(max_abs(r.state.coeffs - basis(5, static_cast<Eigen::Index>(g.identity))) < 1e-12);
}

TEST_CASE("no Haar state on the monoid bialgebra") {
  try {
    haar_solve(monoid_bialgebra());
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSolution);
  }
}

TEST_CASE("Cesaro means converge to the solved Haar state") {
  for (const HopfPtr& h : {function_algebra(symmetric_group(3)), group_algebra(symmetric_group(3)),
                           function_algebra(cyclic_group(7))}) {
    CAPTURE(h->name);
    const HaarResult s = haar_solve(h);
    const HaarResult c = haar_cesaro(h);
    CHECK(c.method == HaarMethod::Cesaro);
    CHECK(c.iterations > 0);
    CHECK(max_abs(s.state.coeffs - c.state.coeffs) <= 1e-6);
  }
}

TEST_CASE("Cesaro with an explicit omega and its failure modes") {
  const HopfPtr h = function_algebra(cyclic_group(3));
  CVector w(3);
  w << 0.2, 0.5, 0.3;
  const HaarResult r = haar_cesaro(h, Functional(h, w));
  CHECK(max_abs(r.state.coeffs - CVector::Constant(3, 1.0 / 3.0)) < 1e-6);
  // a point mass at a generator never mixes in one step
  CHECK_THROWS_AS(haar_cesaro(h, Functional(h, basis(3, 1)), 1), Error);
  CHECK_THROWS_AS(haar_cesaro(h, Functional(h, -1.0 * w)), Error);
  CHECK_THROWS_AS(haar_cesaro(h, Functional::counit(function_algebra(cyclic_group(4)))), Error);
}

TEST_CASE("Haar invariance h * phi = phi(1) h") {
  const HopfPtr h = function_algebra(dihedral_group_d4());
  const Functional haar = haar_solve(h).state;
  std::mt19937_64 rng(33);
  for (int t = 0; t < 5; ++t) {
    const Functional phi(h, random_vector(8, rng));
    const Complex mass = phi(h->alg.unit);
    CHECK(max_abs(convolve_functionals(haar, phi).coeffs - mass * haar.coeffs) < 1e-11);
    CHECK(max_abs(convolve_functionals(phi, haar).coeffs - mass * haar.coeffs) < 1e-11);
  }
  CHECK(haar_identity_residual(haar) < 1e-11);
  CHECK(haar_identity_residual(Functional::counit(h)) > 0.1);
}

TEST_CASE("default faithful state") {
  for (const HopfPtr& h : {group_algebra(quaternion_group()), function_algebra(cyclic_group(5))}) {
    const Functional w = default_faithful_state(h, 0);
    CHECK(is_state(w));
    CHECK(max_abs(w.coeffs - default_faithful_state(h, 0).coeffs) == 0.0);
    CHECK(max_abs(w.coeffs - default_faithful_state(h, 1).coeffs) > 1e-6);
  }
}

TEST_CASE("Haar states of finite quantum groups are tracial") {
  for (const char* name : {"S3", "Q8", "D4"}) {
    const FiniteGroupSpec g = group_by_name(name);
    CHECK(is_tracial(haar_solve(group_algebra(g)).state));
    CHECK(is_tracial(haar_solve(function_algebra(g)).state));
  }
  // reading one coefficient separates conjugate elements
  const HopfPtr cg = group_algebra(symmetric_group(3));
  CHECK_FALSE(is_tracial(Functional(cg, basis(6, 1))));
}

TEST_CASE("Functional validates its coefficients") {
  const HopfPtr h = function_algebra(cyclic_group(3));
  CHECK_THROWS_AS(Functional(h, CVector::Zero(2)), Error);
  CHECK_THROWS_AS(Functional(nullptr, CVector::Zero(2)), Error);
}
