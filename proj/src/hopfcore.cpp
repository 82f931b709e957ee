#include "qg/hopfcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace qg {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

CMatrix block_of(const CMatrix& mult, std::size_t n, std::size_t i) {
  return mult.block(0, ix(i * n), ix(n), ix(n));
}

double residual(const CMatrix& a, const CMatrix& b) { return max_abs(a - b); }

}  // namespace

// ---------------------------------------------------------------------------
// StructureAlgebra / StructureCoalgebra

CVector StructureAlgebra::basis(std::size_t i) const {
  CVector v = CVector::Zero(ix(dim));
  v(ix(i)) = 1.0;
  return v;
}

CVector StructureAlgebra::multiply(const CVector& x, const CVector& y) const {
  return mult * kron(x, y);
}

CVector StructureAlgebra::adjoint(const CVector& x) const { return star * x.conjugate(); }

CMatrix StructureAlgebra::left_regular(const CVector& x) const {
  CMatrix l = CMatrix::Zero(ix(dim), ix(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x(ix(i)) != Complex(0.0)) l += x(ix(i)) * block_of(mult, dim, i);
  }
  return l;
}

CMatrix StructureAlgebra::right_regular(const CVector& x) const {
  CMatrix r(ix(dim), ix(dim));
  for (std::size_t j = 0; j < dim; ++j) r.col(ix(j)) = block_of(mult, dim, j) * x;
  return r;
}

CVector StructureAlgebra::multiply_tensor(const CVector& x, const CVector& y) const {
  const auto n = ix(dim);
  CVector z = CVector::Zero(n * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      const Complex xab = x(a * n + b);
      if (xab == Complex(0.0)) continue;
      for (Idx c = 0; c < n; ++c)
        for (Idx d = 0; d < n; ++d) {
          const Complex ycd = y(c * n + d);
          if (ycd == Complex(0.0)) continue;
          z += (xab * ycd) * kron(CVector(mult.col(a * n + c)), CVector(mult.col(b * n + d)));
        }
    }
  return z;
}

bool StructureAlgebra::is_commutative(const Tolerance& tol) const {
  const CMatrix swapped = mult * flip(dim, dim);
  return tol.accepts(residual(mult, swapped), max_abs(mult));
}

bool StructureCoalgebra::is_cocommutative(const Tolerance& tol) const {
  const CMatrix swapped = flip(dim, dim) * delta;
  return tol.accepts(residual(delta, swapped), max_abs(delta));
}

// ---------------------------------------------------------------------------
// VerificationReport

void VerificationReport::add(std::string name, double r, bool pass) {
  checks.push_back({std::move(name), r, pass});
}

void VerificationReport::add(std::string name, double r, const Tolerance& tol) {
  checks.push_back({std::move(name), r, std::isfinite(r) && tol.accepts(r)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.residual, c.pass});
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Axiom verification

VerificationReport verify_algebra(const StructureAlgebra& a, const Tolerance& tol) {
  VerificationReport rep;
  const std::size_t n = a.dim;
  const auto nn = ix(n);
  const bool shapes = a.mult.rows() == nn && a.mult.cols() == nn * nn && a.unit.size() == nn &&
                      a.star.rows() == nn && a.star.cols() == nn;
  if (!shapes) {
    rep.add("shapes", INFINITY, false);
    return rep;
  }
  const bool finite = all_finite(a.mult) && all_finite(a.unit) && all_finite(a.star);
  rep.add("finite_entries", finite ? 0.0 : INFINITY, finite);
  if (!finite) return rep;

  std::vector<CMatrix> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = block_of(a.mult, n, i);

  // (e_i e_j) e_k = e_i (e_j e_k)  <=>  L_{e_i e_j} = L_i L_j
  double assoc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector p = a.mult.col(ix(i * n + j));
      CMatrix lp = CMatrix::Zero(nn, nn);
      for (std::size_t l = 0; l < n; ++l)
        if (p(ix(l)) != Complex(0.0)) lp += p(ix(l)) * left[l];
      assoc = std::max(assoc, residual(lp, left[i] * left[j]));
    }
  rep.add("associativity", assoc, tol);

  const CMatrix id = CMatrix::Identity(nn, nn);
  rep.add("left_unit", residual(a.left_regular(a.unit), id), tol);
  rep.add("right_unit", residual(a.right_regular(a.unit), id), tol);

  rep.add("star_involutive", residual(a.star * a.star.conjugate(), id), tol);
  double anti = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector lhs = a.adjoint(a.mult.col(ix(i * n + j)));
      const CVector rhs = a.multiply(a.star.col(ix(j)), a.star.col(ix(i)));
      anti = std::max(anti, residual(lhs, rhs));
    }
  rep.add("star_antimultiplicative", anti, tol);
  rep.add("unit_selfadjoint", residual(a.adjoint(a.unit), a.unit), tol);
  return rep;
}

VerificationReport verify_coalgebra(const StructureCoalgebra& c, const Tolerance& tol) {
  VerificationReport rep;
  const std::size_t n = c.dim;
  const auto nn = ix(n);
  if (c.delta.rows() != nn * nn || c.delta.cols() != nn || c.counit.size() != nn) {
    rep.add("shapes", INFINITY, false);
    return rep;
  }
  const bool finite = all_finite(c.delta) && all_finite(c.counit);
  rep.add("finite_entries", finite ? 0.0 : INFINITY, finite);
  if (!finite) return rep;

  const std::size_t dims2[] = {n, n};
  const CMatrix eps_row = c.counit.transpose();
  double coassoc = 0.0, left = 0.0, right = 0.0, sweedler = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const CVector d = c.delta.col(ix(k));
    const CVector lhs = apply_on_leg(c.delta, d, dims2, 0);
    const CVector rhs = apply_on_leg(c.delta, d, dims2, 1);
    coassoc = std::max(coassoc, residual(lhs, rhs));

    CVector ek = CVector::Zero(nn);
    ek(ix(k)) = 1.0;
    left = std::max(left, residual(apply_on_leg(eps_row, d, dims2, 0), ek));
    right = std::max(right, residual(apply_on_leg(eps_row, d, dims2, 1), ek));

    // sum over the terms c_(1) eps(c_(2)) of Delta(e_k)
    CVector acc = CVector::Zero(nn);
    for (Idx i = 0; i < nn; ++i)
      for (Idx j = 0; j < nn; ++j) acc(i) += d(i * nn + j) * c.counit(j);
    sweedler = std::max(sweedler, residual(acc, ek));
  }
  rep.add("coassociativity", coassoc, tol);
  rep.add("left_counit", left, tol);
  rep.add("right_counit", right, tol);
  rep.add("sweedler_counit", sweedler, tol);
  return rep;
}

VerificationReport verify_bialgebra(const HopfData& h, const Tolerance& tol) {
  VerificationReport rep;
  rep.append(verify_algebra(h.alg, tol), "algebra.");
  rep.append(verify_coalgebra(h.coalg, tol), "coalgebra.");
  if (!rep.passed() || h.alg.dim != h.coalg.dim) {
    if (h.alg.dim != h.coalg.dim) rep.add("dimensions", INFINITY, false);
    return rep;
  }
  const std::size_t n = h.dim();
  const auto nn = ix(n);
  const auto& a = h.alg;
  const auto& c = h.coalg;

  double dmul = 0.0, emul = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector prod = a.mult.col(ix(i * n + j));
      const CVector lhs = c.delta * prod;
      const CVector rhs = a.multiply_tensor(c.delta.col(ix(i)), c.delta.col(ix(j)));
      dmul = std::max(dmul, residual(lhs, rhs));
      emul = std::max(emul, std::abs(c.counit_of(prod) - c.counit(ix(i)) * c.counit(ix(j))));
    }
  rep.add("delta_multiplicative", dmul, tol);
  rep.add("counit_multiplicative", emul, tol);
  rep.add("delta_unital", residual(c.delta * a.unit, kron(a.unit, a.unit)), tol);
  rep.add("counit_unital", std::abs(c.counit_of(a.unit) - 1.0), tol);

  // Delta is a *-morphism: Delta(x*) = (* (x) *) Delta(x)
  const CMatrix star2 = kron(a.star, a.star);
  double dstar = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const CVector lhs = c.delta * a.star.col(ix(k));
    const CVector rhs = star2 * CVector(c.delta.col(ix(k))).conjugate();
    dstar = std::max(dstar, residual(lhs, rhs));
  }
  rep.add("delta_star", dstar, tol);
  (void)nn;
  return rep;
}

VerificationReport verify_hopf(const HopfData& h, const Tolerance& tol) {
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, "verify_hopf: " + h.name);
  VerificationReport rep = verify_bialgebra(h, tol);
  if (!rep.passed()) return rep;
  const std::size_t n = h.dim();
  const auto nn = ix(n);
  const CMatrix& s = *h.antipode;
  if (s.rows() != nn || s.cols() != nn) {
    rep.add("antipode_shape", INFINITY, false);
    return rep;
  }
  const auto& a = h.alg;
  const auto& c = h.coalg;
  const CMatrix id = CMatrix::Identity(nn, nn);
  const CMatrix eeps = a.unit * c.counit.transpose();

  rep.add("antipode_left", residual(convolve_maps(s, id, c, a), eeps), tol);
  rep.add("antipode_right", residual(convolve_maps(id, s, c, a), eeps), tol);

  double anti_m = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector lhs = s * a.mult.col(ix(i * n + j));
      const CVector rhs = a.multiply(s.col(ix(j)), s.col(ix(i)));
      anti_m = std::max(anti_m, residual(lhs, rhs));
    }
  rep.add("antipode_antimultiplicative", anti_m, tol);

  const CMatrix ss = kron(s, s);
  const CMatrix tau = flip(n, n);
  rep.add("antipode_anticomultiplicative", residual(c.delta * s, ss * tau * c.delta), tol);

  // *oSo*oS = id, with * antilinear: x -> J conj(S J conj(S x))
  const CMatrix chain = a.star * s.conjugate() * a.star.conjugate() * s;
  rep.add("star_antipode_involution", residual(chain, id), tol);
  return rep;
}

CMatrix convolve_maps(const CMatrix& f1, const CMatrix& f2, const StructureCoalgebra& c,
                      const StructureAlgebra& a) {
  if (f1.cols() != ix(c.dim) || f2.cols() != ix(c.dim) || f1.rows() != ix(a.dim) ||
      f2.rows() != ix(a.dim)) {
    throw Error(ErrorKind::DimensionMismatch, "convolve_maps: map shapes");
  }
  const CMatrix both = kron(f1, f2);
  return a.mult * both * c.delta;
}

std::optional<CMatrix> find_antipode(const HopfData& b, const Tolerance& tol) {
  const std::size_t n = b.dim();
  const auto nn = ix(n);
  const auto& m = b.alg.mult;
  const auto& d = b.coalg.delta;
  // unknown S(k, a) stored at a*n + k (column-major S)
  CMatrix sys = CMatrix::Zero(2 * nn * nn, nn * nn);
  CMatrix rhs = CMatrix::Zero(2 * nn * nn, 1);
  for (Idx c = 0; c < nn; ++c) {
    for (Idx p = 0; p < nn; ++p) {
      const Idx row = c * nn + p;
      rhs(row, 0) = b.coalg.counit(c) * b.alg.unit(p);
      rhs(nn * nn + row, 0) = rhs(row, 0);
    }
    for (Idx a = 0; a < nn; ++a)
      for (Idx bb = 0; bb < nn; ++bb) {
        const Complex dab = d(a * nn + bb, c);
        if (dab == Complex(0.0)) continue;
        for (Idx k = 0; k < nn; ++k) {
          // S * id: sum D S(k,a) e_k e_b ;  id * S: sum D S(k,b) e_a e_k
          sys.block(c * nn, a * nn + k, nn, 1) += dab * m.col(k * nn + bb);
          sys.block(nn * nn + c * nn, bb * nn + k, nn, 1) += dab * m.col(a * nn + k);
        }
      }
  }
  auto sol = solve_linear(sys, rhs, tol);
  if (!sol || sol->nullspace.cols() > 0) return std::nullopt;
  return CMatrix(Eigen::Map<const CMatrix>(sol->solution.data(), nn, nn));
}

// ---------------------------------------------------------------------------
// Opposites and duality

namespace {

CMatrix inverse_antipode(const HopfData& h) {
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, h.name);
  Eigen::FullPivLU<CMatrix> lu(*h.antipode);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularAntipode, h.name);
  return lu.inverse();
}

}  // namespace

HopfData opposite(const HopfData& h) {
  HopfData out = h;
  out.name = h.name + "^op";
  out.alg.mult = h.alg.mult * flip(h.dim(), h.dim());
  out.antipode = inverse_antipode(h);
  return out;
}

HopfData coopposite(const HopfData& h) {
  HopfData out = h;
  out.name = h.name + "^cop";
  out.coalg.delta = flip(h.dim(), h.dim()) * h.coalg.delta;
  out.antipode = inverse_antipode(h);
  return out;
}

HopfData opcoopposite(const HopfData& h) {
  HopfData out = h;
  out.name = h.name + "^opcop";
  out.alg.mult = h.alg.mult * flip(h.dim(), h.dim());
  out.coalg.delta = flip(h.dim(), h.dim()) * h.coalg.delta;
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, h.name);
  return out;
}

HopfData dual_hopf(const HopfData& h) {
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, "dual_hopf: " + h.name);
  const std::size_t n = h.dim();
  HopfData out;
  out.name = h.name + "'";
  out.alg.dim = n;
  out.coalg.dim = n;
  for (const auto& l : h.alg.labels) out.alg.labels.push_back("f_" + l);
  out.alg.mult = h.coalg.delta.transpose();
  out.alg.unit = h.coalg.counit;
  out.coalg.delta = h.alg.mult.transpose();
  out.coalg.counit = h.alg.unit;
  out.antipode = h.antipode->transpose();
  // (f*)(a) = conj(f(S(a)*))  =>  J' = S^T J^H
  out.alg.star = h.antipode->transpose() * h.alg.star.adjoint();
  return out;
}

bool check_cancellation(const HopfData& h, const Tolerance& tol) {
  const std::size_t n = h.dim();
  const auto nn = ix(n);
  const std::size_t dims2[] = {n, n};
  CMatrix right_vecs(nn * nn, nn * nn), left_vecs(nn * nn, nn * nn);
  std::vector<CMatrix> rmul(n), lmul(n);
  for (std::size_t b = 0; b < n; ++b) {
    rmul[b] = h.alg.right_regular(h.alg.basis(b));
    lmul[b] = h.alg.left_regular(h.alg.basis(b));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const CVector da = h.coalg.delta.col(ix(a));
    for (std::size_t b = 0; b < n; ++b) {
      right_vecs.col(ix(a * n + b)) = apply_on_leg(rmul[b], da, dims2, 1);
      const CVector db = h.coalg.delta.col(ix(b));
      left_vecs.col(ix(a * n + b)) = apply_on_leg(lmul[a], db, dims2, 0);
    }
  }
  const CMatrix both[] = {right_vecs, left_vecs};
  for (const auto& m : both) {
    std::vector<CMatrix> cols;
    cols.reserve(n * n);
    for (Idx k = 0; k < m.cols(); ++k) cols.emplace_back(m.col(k));
    if (rank_of_span(cols, tol) != n * n) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Characters, group-likes, reconstruction

namespace {

CMatrix orthonormal_columns(const CMatrix& m, const Tolerance& tol) {
  if (m.cols() == 0) return CMatrix(m.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Idx r = 0;
  const double cut = std::max(tol.abs_tol, tol.rel_tol * (s.size() ? s(0) : 0.0));
  for (Idx i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

bool lex_less(const CVector& a, const CVector& b) {
  for (Idx i = 0; i < a.size(); ++i) {
    const double ar = std::round(a(i).real() * 1e8), br = std::round(b(i).real() * 1e8);
    if (ar != br) return ar > br;
    const double ai = std::round(a(i).imag() * 1e8), bi = std::round(b(i).imag() * 1e8);
    if (ai != bi) return ai > bi;
  }
  return false;
}

}  // namespace

std::vector<CVector> algebra_characters(const StructureAlgebra& a, const Tolerance& tol,
                                        std::uint64_t seed) {
  const std::size_t n = a.dim;
  const auto nn = ix(n);

  // commutator ideal
  CMatrix ideal(nn, 0);
  {
    CMatrix comm(nn, nn * nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        comm.col(ix(i * n + j)) = a.mult.col(ix(i * n + j)) - a.mult.col(ix(j * n + i));
    ideal = orthonormal_columns(comm, tol);
    std::vector<CMatrix> lmul(n), rmul(n);
    for (std::size_t i = 0; i < n; ++i) {
      lmul[i] = a.left_regular(a.basis(i));
      rmul[i] = a.right_regular(a.basis(i));
    }
    while (ideal.cols() > 0 && ideal.cols() < nn) {
      CMatrix grown(nn, ideal.cols() * (2 * nn + 1));
      grown.leftCols(ideal.cols()) = ideal;
      for (std::size_t i = 0; i < n; ++i) {
        grown.middleCols(ideal.cols() * (1 + 2 * ix(i)), ideal.cols()) = lmul[i] * ideal;
        grown.middleCols(ideal.cols() * (2 + 2 * ix(i)), ideal.cols()) = rmul[i] * ideal;
      }
      CMatrix next = orthonormal_columns(grown, tol);
      if (next.cols() == ideal.cols()) break;
      ideal = next;
    }
  }
  if (ideal.cols() == nn) return {};

  // quotient by the ideal: coordinates Q = V^H with V spanning the complement
  CMatrix v = ideal.cols() == 0 ? CMatrix(CMatrix::Identity(nn, nn))
                                : nullspace(CMatrix(ideal.adjoint()), tol);
  const CMatrix q = v.adjoint();
  const auto k = v.cols();
  CMatrix qmult(k, k * k);
  for (Idx i = 0; i < k; ++i)
    for (Idx j = 0; j < k; ++j) qmult.col(i * k + j) = q * a.multiply(v.col(i), v.col(j));
  const CVector qunit = q * a.unit;
  const CMatrix qstar = q * a.star * v.conjugate();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<CVector> chars;
  for (int attempt = 0; attempt < 8; ++attempt) {
    CVector x(k);
    for (Idx i = 0; i < k; ++i) x(i) = Complex(gauss(rng), gauss(rng));
    const CVector herm = x + qstar * x.conjugate();
    CMatrix lh = CMatrix::Zero(k, k);
    for (Idx i = 0; i < k; ++i) lh += herm(i) * qmult.block(0, i * k, k, k);
    Eigen::ComplexEigenSolver<CMatrix> es(lh.transpose());
    const auto& ev = es.eigenvalues();
    double gap = INFINITY;
    for (Idx i = 0; i < k; ++i)
      for (Idx j = i + 1; j < k; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (gap <= 100.0 * tol.abs_tol * scale && attempt < 7) continue;

    chars.clear();
    for (Idx i = 0; i < k; ++i) {
      CVector w = es.eigenvectors().col(i);
      const Complex norm = pair(w, qunit);
      if (std::abs(norm) < tol.abs_tol) continue;
      w /= norm;
      const CVector chi = q.transpose() * w;
      // keep only genuinely multiplicative functionals
      double err = std::abs(pair(chi, a.unit) - 1.0);
      for (std::size_t r = 0; r < n && err < 1e-6; ++r)
        for (std::size_t s = 0; s < n; ++s)
          err = std::max(err, std::abs(pair(chi, a.mult.col(ix(r * n + s))) -
                                       chi(ix(r)) * chi(ix(s))));
      if (tol.scaled(1e3).accepts(err, 1.0)) chars.push_back(chi);
    }
    break;
  }
  std::sort(chars.begin(), chars.end(), lex_less);
  return chars;
}

std::vector<CVector> grouplikes(const HopfData& h, const Tolerance& tol, std::uint64_t seed) {
  const HopfData dual = dual_hopf(h);
  // a is group-like iff f -> f(a) is a character of the dual algebra
  std::vector<CVector> out;
  for (const auto& chi : algebra_characters(dual.alg, tol, seed)) {
    const CVector& g = chi;
    const double err = std::max(max_abs(h.coalg.delta * g - kron(g, g)),
                                std::abs(h.coalg.counit_of(g) - 1.0));
    if (tol.scaled(1e3).accepts(err, 1.0)) out.push_back(g);
  }
  auto index_of = [&](const CVector& v) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (max_abs(out[i] - v) < 1e-6) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  for (const auto& x : out) {
    if (index_of(*h.antipode * x) < 0)
      throw Error(ErrorKind::InconsistentConditions, "group-likes not closed under S");
    for (const auto& y : out)
      if (index_of(h.alg.multiply(x, y)) < 0)
        throw Error(ErrorKind::InconsistentConditions, "group-likes not closed under m");
  }
  return out;
}

ReconstructedGroup gelfand_reconstruct(const HopfData& h, const Tolerance& tol,
                                       std::uint64_t seed) {
  if (!h.alg.is_commutative(tol)) {
    throw Error(ErrorKind::NotCommutative, "gelfand_reconstruct: " + h.name);
  }
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, h.name);
  ReconstructedGroup out;
  out.characters = algebra_characters(h.alg, tol, seed);
  const auto& chars = out.characters;
  const std::size_t order = chars.size();
  if (order != h.dim()) {
    throw Error(ErrorKind::InconsistentConditions, "character count differs from dimension");
  }
  auto locate = [&](const CVector& f) -> std::size_t {
    for (std::size_t i = 0; i < order; ++i)
      if (tol.scaled(1e3).accepts(max_abs(chars[i] - f), 1.0)) return i;
    throw Error(ErrorKind::InconsistentConditions, "product of characters is not a character");
  };
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i][j] = locate(h.coalg.delta.transpose() * kron(chars[i], chars[j]));
  out.group = FiniteGroupSpec::from_table(h.name + "-points", std::move(table));
  out.group.validate();
  if (out.group.identity != locate(h.coalg.counit)) {
    throw Error(ErrorKind::InconsistentConditions, "identity differs from the counit");
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (out.group.inverse[i] != locate(h.antipode->transpose() * chars[i]))
      throw Error(ErrorKind::InconsistentConditions, "inverse differs from the antipode");
  }
  // label points by the basis element a point mass sits on, when there is one
  for (std::size_t i = 0; i < order; ++i) {
    Idx where = 0;
    const double peak = chars[i].cwiseAbs().maxCoeff(&where);
    const bool point_mass = std::abs(peak - 1.0) < 1e-6 &&
                            chars[i].cwiseAbs().sum() < 1.0 + 1e-6 &&
                            static_cast<std::size_t>(where) < h.alg.labels.size();
    out.group.labels[i] = point_mass ? h.alg.labels[static_cast<std::size_t>(where)]
                                     : "chi" + std::to_string(i);
  }
  return out;
}

bool check_morphism(const CMatrix& pi, const HopfData& h1, const HopfData& h2,
                    const Tolerance& tol) {
  const std::size_t n1 = h1.dim(), n2 = h2.dim();
  if (pi.rows() != ix(n1) || pi.cols() != ix(n2)) {
    throw Error(ErrorKind::DimensionMismatch, "check_morphism: pi shape");
  }
  const double scale = std::max(1.0, max_abs(pi));
  if (!tol.accepts(max_abs(pi * h2.alg.unit - h1.alg.unit), scale)) return false;
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const CVector lhs = pi * h2.alg.mult.col(ix(i * n2 + j));
      const CVector rhs = h1.alg.multiply(pi.col(ix(i)), pi.col(ix(j)));
      if (!tol.accepts(max_abs(lhs - rhs), scale * scale)) return false;
    }
  if (!tol.accepts(max_abs(pi * h2.alg.star - h1.alg.star * pi.conjugate()), scale)) return false;
  const CMatrix lhs = h1.coalg.delta * pi;
  const CMatrix rhs = kron(pi, pi) * h2.coalg.delta;
  return tol.accepts(max_abs(lhs - rhs), scale * scale);
}

}  // namespace qg
