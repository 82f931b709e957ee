#include "qg/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qg {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

}  // namespace

Functional::Functional(HopfPtr h, CVector c) : host(std::move(h)), coeffs(std::move(c)) {
  if (!host) throw Error(ErrorKind::InvalidInput, "functional without host");
  if (coeffs.size() != ix(host->dim())) {
    throw Error(ErrorKind::DimensionMismatch, "functional length differs from host dimension");
  }
  if (!all_finite(coeffs)) throw Error(ErrorKind::InvalidInput, "non-finite functional");
}

Functional Functional::counit(const HopfPtr& h) { return Functional(h, h->coalg.counit); }

bool same_host(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->dim() != b->dim()) return false;
  return a->alg.mult == b->alg.mult && a->coalg.delta == b->coalg.delta;
}

Functional convolve_functionals(const Functional& phi, const Functional& psi) {
  if (!same_host(phi.host, psi.host)) {
    throw Error(ErrorKind::HostMismatch, "convolution of functionals on different hosts");
  }
  return Functional(phi.host, phi.host->coalg.delta.transpose() * kron(phi.coeffs, psi.coeffs));
}

bool is_state(const Functional& phi, const Tolerance& tol) {
  const auto& a = phi.host->alg;
  if (!tol.accepts(std::abs(phi(a.unit) - 1.0))) return false;
  const auto n = ix(a.dim);
  CMatrix gram(n, n);
  for (Idx j = 0; j < n; ++j) {
    const CMatrix r = a.right_regular(a.basis(static_cast<std::size_t>(j)));
    // phi(b_i^* b_j) for all i
    const CVector row = phi.coeffs.transpose() * r * a.star;
    gram.col(j) = row;
  }
  return psd_check(gram, tol);
}

bool is_tracial(const Functional& phi, const Tolerance& tol) {
  const auto& a = phi.host->alg;
  const std::size_t n = a.dim;
  const CMatrix vals = phi.coeffs.transpose() * a.mult;
  const double scale = std::max(1.0, max_abs(vals));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!tol.accepts(std::abs(vals(0, ix(i * n + j)) - vals(0, ix(j * n + i))), scale))
        return false;
  return true;
}

double haar_identity_residual(const Functional& haar) {
  const auto n = ix(haar.host->dim());
  double res = 0.0;
  for (Idx k = 0; k < n; ++k) {
    CVector mu = CVector::Zero(n);
    mu(k) = 1.0;
    const Functional m(haar.host, mu);
    const CVector target = m(haar.host->alg.unit) * haar.coeffs;
    res = std::max(res, max_abs(convolve_functionals(haar, m).coeffs - target));
    res = std::max(res, max_abs(convolve_functionals(m, haar).coeffs - target));
  }
  return res;
}

HaarResult haar_solve(const HopfPtr& h, const Tolerance& tol) {
  if (!check_cancellation(*h, tol)) {
    throw Error(ErrorKind::NoSolution, "no Haar state: cancellation rules fail for " + h->name);
  }
  const auto n = ix(h->dim());
  const CMatrix& d = h->coalg.delta;
  const CVector& unit = h->alg.unit;
  CMatrix sys = CMatrix::Zero(2 * n * n + 1, n);
  CMatrix rhs = CMatrix::Zero(2 * n * n + 1, 1);
  for (Idx k = 0; k < n; ++k)
    for (Idx i = 0; i < n; ++i) {
      const Idx row = k * n + i;
      for (Idx j = 0; j < n; ++j) {
        sys(row, j) += d(i * n + j, k);          // (id (x) h) Delta(e_k)
        sys(n * n + row, j) += d(j * n + i, k);  // (h (x) id) Delta(e_k)
      }
      sys(row, k) -= unit(i);
      sys(n * n + row, k) -= unit(i);
    }
  sys.row(2 * n * n) = unit.transpose();
  rhs(2 * n * n, 0) = 1.0;
  auto sol = solve_linear(sys, rhs, tol);
  if (!sol) throw Error(ErrorKind::NoSolution, "no invariant functional for " + h->name);
  if (sol->nullspace.cols() > 0) {
    throw Error(ErrorKind::NoSolution, "invariant functional is not unique for " + h->name);
  }
  HaarResult out;
  out.state = Functional(h, sol->solution.col(0));
  out.method = HaarMethod::Solve;
  out.residual = std::max(sol->residual, haar_identity_residual(out.state));
  out.iterations = 0;
  if (!is_state(out.state, tol.scaled(10.0))) {
    throw Error(ErrorKind::NotAState, "invariant functional is not positive for " + h->name);
  }
  return out;
}

Functional default_faithful_state(const HopfPtr& h, std::uint64_t seed) {
  const auto& a = h->alg;
  const auto n = ix(a.dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  CMatrix m(n, n);
  for (Idx j = 0; j < n; ++j)
    for (Idx i = 0; i < n; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
  const CMatrix p = m.adjoint() * m;
  CMatrix r = CMatrix::Identity(n, n), rinv = CMatrix::Identity(n, n);
  if (a.gram) {
    r = sqrt_psd(*a.gram);
    rinv = r.inverse();
  }
  const Complex tr = p.trace();
  CVector w(n);
  for (Idx k = 0; k < n; ++k) {
    const CMatrix l = r * a.left_regular(a.basis(static_cast<std::size_t>(k))) * rinv;
    w(k) = (l * p).trace() / tr;
  }
  return Functional(h, w);
}

HaarResult haar_cesaro(const HopfPtr& h, const std::optional<Functional>& omega,
                       std::size_t max_iter, const Tolerance& tol, std::uint64_t seed) {
  Functional power = omega ? *omega : default_faithful_state(h, seed);
  if (!same_host(power.host, h)) throw Error(ErrorKind::HostMismatch, "omega lives elsewhere");
  if (!is_state(power, tol.scaled(10.0))) {
    throw Error(ErrorKind::NotAState, "Cesaro seed functional is not a state");
  }
  // mean of omega^1 .. omega^N, N doubling each step
  Functional mean = power;
  double diff = INFINITY;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const Functional shifted = convolve_functionals(power, mean);
    Functional next(h, 0.5 * (mean.coeffs + shifted.coeffs));
    next.coeffs /= next(h->alg.unit);
    diff = max_abs(next.coeffs - mean.coeffs);
    mean = std::move(next);
    if (diff < tol.abs_tol) {
      HaarResult out;
      out.state = mean;
      out.method = HaarMethod::Cesaro;
      out.residual = diff;
      out.iterations = it;
      return out;
    }
    power = convolve_functionals(power, power);
    // squaring amplifies any drift of the total mass
    power.coeffs /= power(h->alg.unit);
  }
  throw Error(ErrorKind::NoConvergence,
              "Cesaro means did not settle; last step difference " + std::to_string(diff));
}

}  // namespace qg
