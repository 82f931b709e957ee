#include "qg/dualqg.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <random>

namespace qg {

namespace {

using Idx = Eigen::Index;
using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

void require_finite(const IrrData& src, const char* what) {
  if (!src.finite() || !src.haar || src.reps.size() != src.blocks.size()) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " needs a finite source");
  }
}

std::vector<std::size_t> sizes_of(const IrrData& src) {
  std::vector<std::size_t> s;
  for (const auto& b : src.blocks) s.push_back(b.n);
  return s;
}

std::vector<std::size_t> sizes_of(const std::vector<Corep>& v) {
  std::vector<std::size_t> s;
  for (const auto& c : v) s.push_back(c.size());
  return s;
}

bool is_unit_corep(const Corep& u) {
  return u.size() == 1 && max_abs(u.entry(0, 0) - u.host()->alg.unit) < 1e-6;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockAlgebra

BlockAlgebra::BlockAlgebra(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  for (auto n : sizes_) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "empty block");
    offsets_.push_back(dim_);
    dim_ += n * n;
  }
}

CMatrix BlockAlgebra::block(const CVector& x, std::size_t b) const {
  const auto n = ix(sizes_[b]);
  return Eigen::Map<const RowMat>(x.data() + offsets_[b], n, n);
}

std::vector<CMatrix> BlockAlgebra::split(const CVector& x) const {
  if (x.size() != ix(dim_)) throw Error(ErrorKind::DimensionMismatch, "block vector length");
  std::vector<CMatrix> out;
  for (std::size_t b = 0; b < sizes_.size(); ++b) out.push_back(block(x, b));
  return out;
}

CVector BlockAlgebra::join(const std::vector<CMatrix>& blocks) const {
  if (blocks.size() != sizes_.size()) throw Error(ErrorKind::DimensionMismatch, "block count");
  CVector x(ix(dim_));
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    const auto n = ix(sizes_[b]);
    if (blocks[b].rows() != n || blocks[b].cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "block shape");
    }
    Eigen::Map<RowMat>(x.data() + offsets_[b], n, n) = blocks[b];
  }
  return x;
}

CVector BlockAlgebra::multiply(const CVector& x, const CVector& y) const {
  CVector z(ix(dim_));
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    const auto n = ix(sizes_[b]);
    Eigen::Map<RowMat>(z.data() + offsets_[b], n, n) =
        Eigen::Map<const RowMat>(x.data() + offsets_[b], n, n) *
        Eigen::Map<const RowMat>(y.data() + offsets_[b], n, n);
  }
  return z;
}

CVector BlockAlgebra::adjoint(const CVector& x) const {
  CVector z(ix(dim_));
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    const auto n = ix(sizes_[b]);
    Eigen::Map<RowMat>(z.data() + offsets_[b], n, n) =
        Eigen::Map<const RowMat>(x.data() + offsets_[b], n, n).adjoint();
  }
  return z;
}

CVector BlockAlgebra::unit() const {
  CVector u = CVector::Zero(ix(dim_));
  for (std::size_t b = 0; b < sizes_.size(); ++b)
    for (std::size_t i = 0; i < sizes_[b]; ++i) u(ix(index(b, i, i))) = 1.0;
  return u;
}

CMatrix BlockAlgebra::star_matrix() const {
  CMatrix j = CMatrix::Zero(ix(dim_), ix(dim_));
  for (std::size_t b = 0; b < sizes_.size(); ++b)
    for (std::size_t r = 0; r < sizes_[b]; ++r)
      for (std::size_t c = 0; c < sizes_[b]; ++c) j(ix(index(b, c, r)), ix(index(b, r, c))) = 1.0;
  return j;
}

StructureAlgebra BlockAlgebra::structure(const std::string& label_prefix) const {
  StructureAlgebra a;
  a.dim = dim_;
  const auto d = ix(dim_);
  a.mult = CMatrix::Zero(d, d * d);
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    const std::size_t n = sizes_[b];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a.labels.push_back(label_prefix + std::to_string(b) + "_" + std::to_string(i) +
                           std::to_string(j));
        for (std::size_t l = 0; l < n; ++l)
          a.mult(ix(index(b, i, l)), ix(index(b, i, j)) * d + ix(index(b, j, l))) = 1.0;
      }
  }
  a.unit = unit();
  a.star = star_matrix();
  return a;
}

// ---------------------------------------------------------------------------
// Sources

IrrData irrdata_from_host(const HopfPtr& h, const Tolerance& tol, std::uint64_t seed) {
  IrrData src;
  src.host = h;
  src.haar = haar_solve(h, tol).state;
  src.reps = irr_table(h, *src.haar, tol, seed);
  for (std::size_t k = 0; k < src.reps.size(); ++k) {
    src.blocks.push_back(
        {"irr" + std::to_string(k), src.reps[k].size(), q_matrix_gram(src.reps[k], *src.haar, tol)});
  }
  return src;
}

IrrData truncated_irrdata(const std::vector<std::pair<std::string, CMatrix>>& qs,
                          const Tolerance& tol) {
  if (qs.empty()) throw Error(ErrorKind::InconsistentQData, "no blocks");
  IrrData src;
  for (const auto& [id, q] : qs) {
    QMatrix qm{q, q.trace().real()};
    check_qmatrix(qm, tol);
    src.blocks.push_back({id, static_cast<std::size_t>(q.rows()), qm});
  }
  return src;
}

DualAlgebra build_dual(const IrrData& src, const Tolerance& tol) {
  if (src.blocks.empty()) throw Error(ErrorKind::InconsistentQData, "no blocks");
  DualAlgebra out;
  std::size_t total = 0;
  for (const auto& b : src.blocks) {
    if (b.q.q.rows() != ix(b.n)) throw Error(ErrorKind::InconsistentQData, "Q size differs from n");
    check_qmatrix(b.q, tol.scaled(10.0));
    out.ids.push_back(b.id);
    total += b.n * b.n;
  }
  out.algebra = BlockAlgebra(sizes_of(src));
  if (src.finite()) {
    if (total != src.host->dim()) {
      throw Error(ErrorKind::InconsistentQData, "sum of n^2 differs from the host dimension");
    }
    for (std::size_t k = 0; k < src.reps.size(); ++k)
      if (is_unit_corep(src.reps[k])) {
        out.trivial = k;
        break;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier transform and weights

CMatrix fourier_rows(const std::vector<Corep>& blocks, const Functional& haar) {
  const auto& alg = haar.host->alg;
  const BlockAlgebra layout(sizes_of(blocks));
  CMatrix rows(ix(layout.dim()), ix(alg.dim));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t m = blocks[b].size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const CMatrix r = alg.right_regular(alg.adjoint(blocks[b].entry(i, j)));
        rows.row(ix(layout.index(b, j, i))) = haar.coeffs.transpose() * r;
      }
  }
  return rows;
}

CMatrix fourier_matrix(const IrrData& src) {
  require_finite(src, "fourier");
  return fourier_rows(src.reps, *src.haar);
}

CMatrix fourier_inverse_matrix(const IrrData& src) {
  require_finite(src, "fourier_inv");
  const BlockAlgebra layout(sizes_of(src));
  CMatrix out = CMatrix::Zero(ix(src.host->dim()), ix(layout.dim()));
  for (std::size_t b = 0; b < src.blocks.size(); ++b) {
    const std::size_t n = src.blocks[b].n;
    const CMatrix qi = src.blocks[b].q.q.inverse();
    const double d = src.blocks[b].q.d;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        auto col = out.col(ix(layout.index(b, k, l)));
        for (std::size_t j = 0; j < n; ++j) col += d * qi(ix(j), ix(k)) * src.reps[b].entry(l, j);
      }
  }
  return out;
}

CMatrix coefficient_matrix(const IrrData& src) {
  require_finite(src, "coefficient_matrix");
  const BlockAlgebra layout(sizes_of(src));
  CMatrix c(ix(layout.dim()), ix(src.host->dim()));
  for (std::size_t b = 0; b < src.reps.size(); ++b)
    for (std::size_t i = 0; i < src.blocks[b].n; ++i)
      for (std::size_t j = 0; j < src.blocks[b].n; ++j)
        c.row(ix(layout.index(b, i, j))) = src.reps[b].entry(i, j).transpose();
  return c;
}

CVector fourier(const IrrData& src, const CVector& a) { return fourier_matrix(src) * a; }

CVector fourier_inv(const IrrData& src, const CVector& x) { return fourier_inverse_matrix(src) * x; }

namespace {

CVector weight_covector(const IrrData& src, bool left) {
  const BlockAlgebra layout(sizes_of(src));
  CVector w(ix(layout.dim()));
  for (std::size_t b = 0; b < src.blocks.size(); ++b) {
    const auto& blk = src.blocks[b];
    const CMatrix m = left ? CMatrix(blk.q.q.inverse()) : blk.q.q;
    for (std::size_t i = 0; i < blk.n; ++i)
      for (std::size_t j = 0; j < blk.n; ++j) w(ix(layout.index(b, i, j))) = blk.q.d * m(ix(j), ix(i));
  }
  return w;
}

}  // namespace

CVector hhat_L_covector(const IrrData& src) { return weight_covector(src, true); }
CVector hhat_R_covector(const IrrData& src) { return weight_covector(src, false); }
Complex hhat_L(const IrrData& src, const CVector& x) { return pair(hhat_L_covector(src), x); }
Complex hhat_R(const IrrData& src, const CVector& x) { return pair(hhat_R_covector(src), x); }

// ---------------------------------------------------------------------------
// Morphism attached to a corepresentation

PhiResult phi_from_corep(const IrrData& src, const std::vector<Corep>& v, const Tolerance& tol,
                         std::uint64_t seed, std::size_t pairs) {
  require_finite(src, "phi_from_corep");
  if (v.empty()) throw Error(ErrorKind::InvalidInput, "empty corep family");
  for (const auto& block : v) {
    if (!same_host(block.host(), src.host)) throw Error(ErrorKind::HostMismatch, "phi_from_corep");
    if (!is_corep(block, tol)) throw Error(ErrorKind::NotACorep, "phi_from_corep: V is not a corep");
    if (!is_unitary(block, tol)) throw Error(ErrorKind::NotUnitary, "phi_from_corep: V is not unitary");
  }
  PhiResult out;
  const BlockAlgebra dual(sizes_of(src));
  out.target = BlockAlgebra(sizes_of(v));
  out.phi = fourier_rows(v, *src.haar) * fourier_inverse_matrix(src);
  const CMatrix& phi = out.phi;

  out.unital_residual = max_abs(phi * dual.unit() - out.target.unit());
  out.star_residual = max_abs(phi * dual.star_matrix() - out.target.star_matrix() * phi.conjugate());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_vec = [&](Idx n) {
    CVector x(n);
    for (Idx i = 0; i < n; ++i) x(i) = Complex(gauss(rng), gauss(rng));
    return x;
  };
  double mult = 0.0;
  for (std::size_t p = 0; p < pairs; ++p) {
    const CVector x = random_vec(ix(dual.dim())), y = random_vec(ix(dual.dim()));
    const CVector lhs = phi * dual.multiply(x, y);
    const CVector rhs = out.target.multiply(phi * x, phi * y);
    mult = std::max(mult, max_abs(lhs - rhs) / std::max(1.0, max_abs(rhs)));
  }
  out.multiplicative_residual = mult;

  CMatrix vcoeff(ix(out.target.dim()), ix(src.host->dim()));
  for (std::size_t b = 0; b < v.size(); ++b)
    for (std::size_t i = 0; i < v[b].size(); ++i)
      for (std::size_t j = 0; j < v[b].size(); ++j)
        vcoeff.row(ix(out.target.index(b, i, j))) = v[b].entry(i, j).transpose();
  out.w_residual = max_abs(phi * coefficient_matrix(src) - vcoeff);

  // span{Phi(x) b} contains span{Phi(1) b}
  const CVector one = phi * dual.unit();
  std::vector<CMatrix> span;
  for (std::size_t p = 0; p < out.target.dim(); ++p) {
    CVector e = CVector::Zero(ix(out.target.dim()));
    e(ix(p)) = 1.0;
    span.emplace_back(out.target.multiply(one, e));
  }
  out.span_rank = rank_of_span(span, tol);

  out.passed = tol.accepts(out.unital_residual) && tol.accepts(out.star_residual) &&
               tol.scaled(10.0).accepts(out.multiplicative_residual) && tol.accepts(out.w_residual) &&
               out.span_rank == out.target.dim();
  return out;
}

std::vector<Corep> w23_w13(const IrrData& src) {
  require_finite(src, "w23_w13");
  const auto& alg = src.host->alg;
  std::vector<Corep> out;
  for (const auto& ua : src.reps)
    for (const auto& ub : src.reps) {
      const std::size_t na = ua.size(), nb = ub.size(), m = na * nb;
      std::vector<CVector> entries(m * m);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const CMatrix left = alg.left_regular(ub.entry(k, l));
          for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
              entries[(i * nb + k) * m + (j * nb + l)] = left * ua.entry(i, j);
        }
      out.emplace_back(src.host, m, std::move(entries));
    }
  return out;
}

CMatrix dual_comult_matrix(const IrrData& src, const Tolerance& tol) {
  require_finite(src, "dual_comult");
  const PhiResult r = phi_from_corep(src, w23_w13(src), tol);
  if (!r.passed) {
    throw Error(ErrorKind::InconsistentConditions, "W23 W13 does not define a *-homomorphism");
  }
  const BlockAlgebra dual(sizes_of(src));
  const auto d = ix(dual.dim());
  CMatrix delta(d * d, d);
  std::size_t b = 0;
  for (std::size_t a1 = 0; a1 < src.blocks.size(); ++a1)
    for (std::size_t a2 = 0; a2 < src.blocks.size(); ++a2, ++b) {
      const std::size_t na = src.blocks[a1].n, nb = src.blocks[a2].n;
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < nb; ++k)
          for (std::size_t j = 0; j < na; ++j)
            for (std::size_t l = 0; l < nb; ++l) {
              const auto from = r.target.index(b, i * nb + k, j * nb + l);
              const auto to = ix(dual.index(a1, i, j)) * d + ix(dual.index(a2, k, l));
              delta.row(to) = r.phi.row(ix(from));
            }
    }
  return delta;
}

CVector dual_comult(const IrrData& src, const CVector& x, const Tolerance& tol) {
  return dual_comult_matrix(src, tol) * x;
}

CVector dual_counit_covector(const IrrData& src) {
  const DualAlgebra dual = build_dual(src);
  if (!dual.trivial) throw Error(ErrorKind::InvalidInput, "source has no trivial block");
  CVector e = CVector::Zero(ix(dual.algebra.dim()));
  e(ix(dual.algebra.offset(*dual.trivial))) = 1.0;
  return e;
}

Complex dual_counit(const IrrData& src, const CVector& x) {
  return pair(dual_counit_covector(src), x);
}

HopfPtr dual_quantum_group(const IrrData& src, const Tolerance& tol) {
  require_finite(src, "dual_quantum_group");
  auto h = std::make_shared<HopfData>();
  const BlockAlgebra dual(sizes_of(src));
  h->name = src.host->name + "^";
  h->alg = dual.structure();
  h->coalg.dim = dual.dim();
  h->coalg.delta = dual_comult_matrix(src, tol);
  h->coalg.counit = dual_counit_covector(src);
  h->antipode = find_antipode(*h, tol);
  return h;
}

// ---------------------------------------------------------------------------
// Reports

VerificationReport verify_dual_invariance(const IrrData& src, const Tolerance& tol) {
  require_finite(src, "verify_dual_invariance");
  VerificationReport rep;
  const BlockAlgebra dual(sizes_of(src));
  const std::size_t d = dual.dim();
  StructureCoalgebra co;
  co.dim = d;
  co.delta = dual_comult_matrix(src, tol);
  co.counit = dual_counit_covector(src);
  rep.append(verify_coalgebra(co, tol), "dual.");

  const CVector w_counit = coefficient_matrix(src).transpose() * co.counit;
  rep.add("counit_on_W", max_abs(w_counit - src.host->alg.unit), tol);

  const CVector hl = hhat_L_covector(src), hr = hhat_R_covector(src);
  const std::size_t dims[] = {d, d};
  const CVector one = dual.unit();
  double left = 0.0, right = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const CVector dx = co.delta.col(ix(k));
    left = std::max(left, max_abs(apply_on_leg(hl.transpose(), dx, dims, 1) - hl(ix(k)) * one));
    right = std::max(right, max_abs(apply_on_leg(hr.transpose(), dx, dims, 0) - hr(ix(k)) * one));
  }
  rep.add("hhat_L_left_invariance", left, tol);
  rep.add("hhat_R_right_invariance", right, tol);
  return rep;
}

ModularReport modular_report(const IrrData& src, const Tolerance& tol) {
  ModularReport r;
  r.finite = src.finite();
  const BlockAlgebra dual(sizes_of(src));
  const std::size_t d = dual.dim();
  std::vector<CMatrix> qb, q2, qm2;
  r.q_identity = true;
  r.trace_bound = true;
  for (const auto& b : src.blocks) {
    const auto n = ix(b.n);
    const CMatrix qi = b.q.q.inverse();
    qb.push_back(b.q.q);
    q2.push_back(b.q.q * b.q.q);
    qm2.push_back(qi * qi);
    r.q_identity = r.q_identity && tol.accepts(max_abs(b.q.q - CMatrix::Identity(n, n)));
    const double tr = b.q.q.trace().real(), tri = qi.trace().real();
    r.trace_residual = std::max(r.trace_residual, std::abs(tr - tri));
    r.trace_bound = r.trace_bound && tr >= static_cast<double>(b.n) - tol.abs_tol;
  }
  const CVector hl = hhat_L_covector(src), hr = hhat_R_covector(src);
  for (std::size_t k = 0; k < d; ++k) {
    CVector x = CVector::Zero(ix(d));
    x(ix(k)) = 1.0;
    auto blocks = dual.split(x);
    for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] = qb[b] * blocks[b] * qb[b];
    r.weight_identity_residual =
        std::max(r.weight_identity_residual, std::abs(hr(ix(k)) - pair(hl, dual.join(blocks))));
    const double gap = std::abs(hl(ix(k)) - hr(ix(k)));
    if (gap > r.lr_gap) {
      r.lr_gap = gap;
      r.witness = k;
    }
  }
  r.passed = tol.accepts(r.trace_residual) && r.trace_bound &&
             tol.accepts(r.weight_identity_residual, std::max(1.0, hl.cwiseAbs().maxCoeff()));
  if (r.finite) {
    const CMatrix delta = dual_comult_matrix(src, tol);
    const std::size_t dims[] = {d, d};
    const CVector sq = dual.join(q2), sqi = dual.join(qm2);
    double left = 0.0, right = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const CVector dx = delta.col(ix(k));
      left = std::max(left, max_abs(apply_on_leg(hl.transpose(), dx, dims, 0) - hl(ix(k)) * sq));
      right = std::max(right, max_abs(apply_on_leg(hr.transpose(), dx, dims, 1) - hr(ix(k)) * sqi));
    }
    r.left_modular_residual = left;
    r.right_modular_residual = right;
    r.passed = r.passed && tol.accepts(left) && tol.accepts(right);
  }
  return r;
}

bool UnimodularityReport::all_true() const {
  return haar_tracial.value_or(true) && weights_equal && q_identity && s2_identity.value_or(true) &&
         antipode_bounded;
}

UnimodularityReport unimodularity_report(const IrrData& src, const Tolerance& tol) {
  UnimodularityReport u;
  const ModularReport m = modular_report(src, tol);
  u.weights_equal = tol.accepts(m.lr_gap);
  u.q_identity = m.q_identity;
  if (src.finite()) {
    u.haar_tracial = is_tracial(*src.haar, tol.scaled(10.0));
    if (src.host->antipode) {
      const auto n = ix(src.host->dim());
      const CMatrix s2 = *src.host->antipode * *src.host->antipode;
      u.s2_identity = tol.scaled(10.0).accepts(max_abs(s2 - CMatrix::Identity(n, n)));
    }
  }
  std::vector<bool> vals{u.weights_equal, u.q_identity};
  if (u.haar_tracial) vals.push_back(*u.haar_tracial);
  if (u.s2_identity) vals.push_back(*u.s2_identity);
  if (std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) != vals.end()) {
    throw Error(ErrorKind::InconsistentConditions, "unimodularity conditions disagree");
  }
  return u;
}

UnimodularityReport unimodularity_report(const HopfPtr& h, const Tolerance& tol, std::uint64_t seed) {
  return unimodularity_report(irrdata_from_host(h, tol, seed), tol);
}

BidualityResult biduality_check(const HopfPtr& h, const Tolerance& tol, std::uint64_t seed) {
  BidualityResult out;
  if (!h->antipode) throw Error(ErrorKind::MissingAntipode, h->name);
  const IrrData first = irrdata_from_host(h, tol, seed);
  const HopfPtr dual = dual_quantum_group(first, tol);
  const IrrData second = irrdata_from_host(dual, tol, seed);
  out.bidual = dual_quantum_group(second, tol);
  const CMatrix c1 = coefficient_matrix(first);
  const CMatrix c2 = coefficient_matrix(second);
  if (c2.rows() != ix(h->dim())) return out;
  // (Phi_2 (x) id) W_2 = flip(W) gives Phi_2 = C1^T C2^-1 : bidual -> H^op
  const CMatrix psi = c2 * c1.transpose().inverse();
  const std::pair<std::string, CMatrix> candidates[] = {
      {"psi o S", psi * *h->antipode},
      {"psi", psi},
  };
  const Tolerance loose = tol.scaled(100.0);
  for (const auto& [name, map] : candidates) {
    if (check_morphism(map, *out.bidual, *h, loose)) {
      out.isomorphic = Eigen::FullPivLU<CMatrix>(map).isInvertible();
      out.map = map;
      out.variant = name;
      if (out.isomorphic) break;
    }
  }
  return out;
}

}  // namespace qg
