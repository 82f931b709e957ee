#include "qg/corep.hpp"

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

void require_same_host(const Corep& u, const Corep& v) {
  if (!same_host(u.host(), v.host())) {
    throw Error(ErrorKind::HostMismatch, "coreps over different hosts");
  }
}

CVector zero_entry(const HopfPtr& h) { return CVector::Zero(ix(h->dim())); }

}  // namespace

// ---------------------------------------------------------------------------
// Corep

Corep::Corep(HopfPtr host, std::size_t size, std::vector<CVector> entries)
    : host_(std::move(host)), size_(size), entries_(std::move(entries)) {
  if (!host_) throw Error(ErrorKind::InvalidInput, "corep without host");
  if (size_ == 0 || entries_.size() != size_ * size_) {
    throw Error(ErrorKind::DimensionMismatch, "corep entry count differs from size^2");
  }
  for (const auto& e : entries_) {
    if (e.size() != ix(host_->dim())) {
      throw Error(ErrorKind::DimensionMismatch, "corep entry length differs from host dimension");
    }
  }
}

Corep Corep::trivial(const HopfPtr& host) { return Corep(host, 1, {host->alg.unit}); }

Corep Corep::scalar(const HopfPtr& host, const CVector& a) { return Corep(host, 1, {a}); }

Corep Corep::sandwich(const CMatrix& t, const CMatrix& r) const {
  const auto n = ix(size_);
  if (t.cols() != n || r.rows() != n || t.rows() != r.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "sandwich shapes");
  }
  const auto m = t.rows();
  std::vector<CVector> out(static_cast<std::size_t>(m * m), zero_entry(host_));
  // (U R) first, then T (U R)
  std::vector<CVector> ur(static_cast<std::size_t>(n * m), zero_entry(host_));
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      const CVector& u = entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      for (Idx b = 0; b < m; ++b)
        if (r(j, b) != Complex(0.0)) ur[static_cast<std::size_t>(i * m + b)] += r(j, b) * u;
    }
  for (Idx a = 0; a < m; ++a)
    for (Idx i = 0; i < n; ++i) {
      if (t(a, i) == Complex(0.0)) continue;
      for (Idx b = 0; b < m; ++b)
        out[static_cast<std::size_t>(a * m + b)] += t(a, i) * ur[static_cast<std::size_t>(i * m + b)];
    }
  return Corep(host_, static_cast<std::size_t>(m), std::move(out));
}

Corep Corep::times(const Corep& other) const {
  require_same_host(*this, other);
  if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "corep product sizes");
  const std::size_t n = size_;
  std::vector<CVector> out(n * n, zero_entry(host_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const CMatrix l = host_->alg.left_regular(entry(i, k));
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += l * other.entry(k, j);
    }
  return Corep(host_, n, std::move(out));
}

Corep Corep::star() const {
  const std::size_t n = size_;
  std::vector<CVector> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = host_->alg.adjoint(entry(j, i));
  return Corep(host_, n, std::move(out));
}

Corep Corep::map_entries(const CMatrix& f) const {
  std::vector<CVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(f * e);
  return Corep(host_, size_, std::move(out));
}

CMatrix Corep::contract(const Functional& phi) const {
  if (!same_host(phi.host, host_)) throw Error(ErrorKind::HostMismatch, "contract");
  const auto n = ix(size_);
  CMatrix out(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      out(i, j) = phi(entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return out;
}

// ---------------------------------------------------------------------------
// Predicates and operations

double corep_residual(const Corep& u) {
  const std::size_t n = u.size();
  const auto& delta = u.host()->coalg.delta;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVector rhs = CVector::Zero(delta.rows());
      for (std::size_t k = 0; k < n; ++k) rhs += kron(u.entry(i, k), u.entry(k, j));
      res = std::max(res, max_abs(delta * u.entry(i, j) - rhs));
    }
  return res;
}

bool is_corep(const Corep& u, const Tolerance& tol) {
  double scale = 1.0;
  for (const auto& e : u.entries()) scale = std::max(scale, max_abs(e));
  if (!tol.accepts(corep_residual(u), scale * scale)) return false;
  // left multiplication by U on columns of M_n(A)
  const std::size_t n = u.size(), d = u.host()->dim();
  CMatrix l(ix(n * d), ix(n * d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      l.block(ix(i * d), ix(k * d), ix(d), ix(d)) = u.host()->alg.left_regular(u.entry(i, k));
  Eigen::BDCSVD<CMatrix> svd(l);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > std::max(tol.abs_tol, tol.rel_tol * s(0));
}

double unitarity_residual(const Corep& u) {
  const std::size_t n = u.size();
  const CVector& one = u.host()->alg.unit;
  const Corep s = u.star();
  const Corep a = s.times(u), b = u.times(s);
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector target = i == j ? one : CVector(CVector::Zero(one.size()));
      res = std::max({res, max_abs(a.entry(i, j) - target), max_abs(b.entry(i, j) - target)});
    }
  return res;
}

bool is_unitary(const Corep& u, const Tolerance& tol) { return tol.accepts(unitarity_residual(u)); }

Corep direct_sum(const Corep& u, const Corep& v) {
  require_same_host(u, v);
  const std::size_t n = u.size(), m = v.size(), t = n + m;
  std::vector<CVector> out(t * t, zero_entry(u.host()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * t + j] = u.entry(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[(n + i) * t + n + j] = v.entry(i, j);
  return Corep(u.host(), t, std::move(out));
}

Corep tensor_prod(const Corep& u, const Corep& v) {
  require_same_host(u, v);
  const std::size_t n = u.size(), m = v.size(), t = n * m;
  const auto& alg = u.host()->alg;
  std::vector<CVector> out(t * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix l = alg.left_regular(u.entry(i, j));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < m; ++q) out[(i * m + k) * t + j * m + q] = l * v.entry(k, q);
    }
  return Corep(u.host(), t, std::move(out));
}

Corep adjoint(const Corep& u) {
  std::vector<CVector> out;
  for (const auto& e : u.entries()) out.push_back(u.host()->alg.adjoint(e));
  return Corep(u.host(), u.size(), std::move(out));
}

std::vector<CMatrix> intertwiners(const Corep& u, const Corep& v, const Tolerance& tol) {
  require_same_host(u, v);
  const std::size_t nu = u.size(), nv = v.size(), unknowns = nu * nv;
  const auto d = ix(u.host()->dim());
  // equation (i, j): sum_k T_ik u_kj - sum_k v_ik T_kj = 0, accumulated as B^H B
  CMatrix gram = CMatrix::Zero(ix(unknowns), ix(unknowns));
  std::vector<std::size_t> idx;
  CMatrix b(d, ix(nu + nv));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      idx.clear();
      for (std::size_t k = 0; k < nu; ++k) {
        b.col(ix(idx.size())) = u.entry(k, j);
        idx.push_back(i * nu + k);
      }
      for (std::size_t k = 0; k < nv; ++k) {
        b.col(ix(idx.size())) = -v.entry(i, k);
        idx.push_back(k * nu + j);
      }
      const CMatrix local = b.adjoint() * b;
      for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = 0; q < idx.size(); ++q) gram(ix(idx[p]), ix(idx[q])) += local(ix(p), ix(q));
    }
  const CMatrix basis = gram_nullspace(gram, tol);
  std::vector<CMatrix> out;
  for (Idx c = 0; c < basis.cols(); ++c) {
    CMatrix t(ix(nv), ix(nu));
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t k = 0; k < nu; ++k) t(ix(i), ix(k)) = basis(ix(i * nu + k), c);
    out.push_back(std::move(t));
  }
  return out;
}

bool is_irreducible(const Corep& u, const Tolerance& tol) { return intertwiners(u, u, tol).size() == 1; }

Unitarized unitarize(const Corep& u, const Functional& haar, const Tolerance& tol) {
  if (!is_corep(u, tol.scaled(100.0))) {
    throw Error(ErrorKind::NotInvertible, "unitarize: input is not an invertible corep");
  }
  CMatrix p = u.star().times(u).contract(haar);
  p = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= std::max(tol.abs_tol, tol.rel_tol * es.eigenvalues().maxCoeff())) {
    throw Error(ErrorKind::NotInvertible, "unitarize: (id (x) h)(U^* U) is singular");
  }
  Unitarized out;
  out.y = sqrt_psd(p);
  out.unitary = u.sandwich(out.y, out.y.inverse());
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

bool is_trivial_corep(const Corep& u) {
  return u.size() == 1 && max_abs(u.entry(0, 0) - u.host()->alg.unit) < 1e-6;
}

// Splits the invariant subspace spanned by the orthonormal columns of `frame`
// into irreducible pieces.
void split(const Corep& u, const CMatrix& frame, const Tolerance& tol, std::mt19937_64& rng,
           std::vector<CMatrix>& pieces) {
  const Corep sub = u.sandwich(frame.adjoint(), frame);
  const auto comm = intertwiners(sub, sub, tol);
  if (comm.size() <= 1) {
    pieces.push_back(frame);
    return;
  }
  std::normal_distribution<double> gauss;
  const auto k = frame.cols();
  for (int attempt = 0; attempt < 16; ++attempt) {
    CMatrix x = CMatrix::Zero(k, k);
    for (const auto& t : comm) x += Complex(gauss(rng), gauss(rng)) * t;
    const CMatrix herm = x + x.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    const double sep = 100.0 * std::sqrt(tol.abs_tol) * scale;
    std::vector<std::pair<Idx, Idx>> clusters;  // [start, end)
    Idx start = 0;
    for (Idx i = 1; i <= ev.size(); ++i) {
      if (i == ev.size() || ev(i) - ev(i - 1) > sep) {
        clusters.emplace_back(start, i);
        start = i;
      }
    }
    if (clusters.size() < 2) continue;
    for (const auto& [a, b] : clusters) {
      const CMatrix part = frame * es.eigenvectors().middleCols(a, b - a);
      split(u, part, tol, rng, pieces);
    }
    return;
  }
  throw Error(ErrorKind::NoConvergence, "decompose: commutant element with simple spectrum not found");
}

}  // namespace

IrrDecomposition decompose(const Corep& u, const Tolerance& tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = ix(u.size());
  std::vector<CMatrix> pieces;
  split(u, CMatrix::Identity(n, n), tol, rng, pieces);

  IrrDecomposition out;
  for (const auto& frame : pieces) {
    const Corep sub = u.sandwich(frame.adjoint(), frame);
    bool placed = false;
    for (auto& s : out.summands) {
      if (s.irrep.size() != sub.size()) continue;
      const auto r = intertwiners(s.irrep, sub, tol);
      if (r.empty()) continue;
      CMatrix t = r.front();
      t /= std::sqrt((t.adjoint() * t).trace().real() / static_cast<double>(t.cols()));
      s.isometries.push_back(frame * t);
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) out.summands.push_back({sub, 1, {frame}});
  }
  std::stable_sort(out.summands.begin(), out.summands.end(), [](const auto& a, const auto& b) {
    const bool ta = is_trivial_corep(a.irrep), tb = is_trivial_corep(b.irrep);
    if (ta != tb) return ta;
    return a.irrep.size() < b.irrep.size();
  });

  std::vector<CVector> sum(u.entries().size(), zero_entry(u.host()));
  for (const auto& s : out.summands)
    for (const auto& t : s.isometries) {
      const Corep part = s.irrep.sandwich(t, t.adjoint());
      for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += part.entries()[e];
    }
  double res = 0.0;
  for (std::size_t e = 0; e < sum.size(); ++e) res = std::max(res, max_abs(sum[e] - u.entries()[e]));
  out.completeness = res;
  return out;
}

Corep regular_corep(const HopfPtr& h) {
  const std::size_t n = h->dim();
  const auto& d = h->coalg.delta;
  std::vector<CVector> entries(n * n, CVector::Zero(ix(n)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) entries[k * n + j](ix(c)) = d(ix(k * n + c), ix(j));
  return Corep(h, n, std::move(entries));
}

std::vector<Corep> irr_table(const HopfPtr& h, const Functional& haar, const Tolerance& tol,
                             std::uint64_t seed) {
  const Corep reg = unitarize(regular_corep(h), haar, tol).unitary;
  const IrrDecomposition dec = decompose(reg, tol, seed);
  std::vector<Corep> reps;
  std::size_t count = 0;
  std::vector<CMatrix> coeffs;
  for (const auto& s : dec.summands) {
    Corep rep = s.irrep;
    const QMatrix q = q_matrix_gram(rep, haar, tol);
    const auto m = ix(rep.size());
    CMatrix offdiag = q.q;
    offdiag.diagonal().setZero();
    bool sorted = true;
    for (Idx i = 1; i < m; ++i) sorted = sorted && q.q(i, i).real() <= q.q(i - 1, i - 1).real() + 1e-8;
    if (max_abs(q.q - CMatrix::Identity(m, m)) > 1e-8 && (max_abs(offdiag) > 1e-10 || !sorted)) {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(q.q);
      const CMatrix r = es.eigenvectors().rowwise().reverse();
      rep = rep.sandwich(r.adjoint(), r);
    }
    count += rep.size() * rep.size();
    for (const auto& e : rep.entries()) coeffs.emplace_back(e);
    reps.push_back(std::move(rep));
  }
  if (count != h->dim()) {
    throw Error(ErrorKind::InconsistentConditions, "sum of squared irrep dimensions differs from dim");
  }
  if (rank_of_span(coeffs, tol.scaled(100.0)) != h->dim()) {
    throw Error(ErrorKind::InconsistentConditions, "irrep coefficients do not span the algebra");
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Q-matrices

namespace {

// h(x y^*)
Complex haar_xy_star(const Functional& haar, const CVector& x, const CVector& y) {
  const auto& a = haar.host->alg;
  return haar(a.multiply(x, a.adjoint(y)));
}

QMatrix normalized(CMatrix m) {
  m = 0.5 * (m + m.adjoint());
  const double tm = m.trace().real();
  const double tinv = m.inverse().trace().real();
  QMatrix q;
  q.q = std::sqrt(tinv / tm) * m;
  q.d = q.q.trace().real();
  return q;
}

bool positive_definite(const CMatrix& m, double floor) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > floor;
}

}  // namespace

void check_qmatrix(const QMatrix& q, const Tolerance& tol) {
  const auto n = q.q.rows();
  if (n == 0 || q.q.cols() != n) throw Error(ErrorKind::InconsistentQData, "Q is not square");
  if (!all_finite(q.q)) throw Error(ErrorKind::InconsistentQData, "Q has non-finite entries");
  const double scale = std::max(1.0, max_abs(q.q));
  if (!tol.accepts(max_abs(q.q - q.q.adjoint()), scale)) {
    throw Error(ErrorKind::InconsistentQData, "Q is not Hermitian");
  }
  if (!positive_definite(q.q, tol.abs_tol)) {
    throw Error(ErrorKind::InconsistentQData, "Q is not positive definite");
  }
  const double tr = q.q.trace().real(), trinv = q.q.inverse().trace().real();
  if (!tol.accepts(std::abs(tr - trinv), std::max(tr, trinv))) {
    throw Error(ErrorKind::InconsistentQData, "Tr Q differs from Tr Q^-1");
  }
  if (tr < static_cast<double>(n) - tol.abs_tol - tol.rel_tol * n) {
    throw Error(ErrorKind::InconsistentQData, "Tr Q is smaller than the block size");
  }
  if (!tol.accepts(std::abs(q.d - tr), tr)) {
    throw Error(ErrorKind::InconsistentQData, "quantum dimension differs from Tr Q");
  }
}

QMatrix q_matrix_gram(const Corep& alpha, const Functional& haar, const Tolerance& tol) {
  const std::size_t n = alpha.size();
  CMatrix m = CMatrix::Zero(ix(n), ix(n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        m(ix(l), ix(j)) += haar_xy_star(haar, alpha.entry(i, j), alpha.entry(i, l));
  if (!positive_definite(m, std::max(tol.abs_tol, tol.rel_tol * max_abs(m)))) {
    throw Error(ErrorKind::SingularGram, "coefficient Gram matrix is not positive definite");
  }
  return normalized(m);
}

QMatrix q_matrix_antipode(const Corep& alpha, const Tolerance& tol) {
  const auto& h = *alpha.host();
  if (!h.antipode) throw Error(ErrorKind::MissingAntipode, h.name);
  const CMatrix s2 = *h.antipode * *h.antipode;
  const auto ts = intertwiners(alpha, alpha.map_entries(s2), tol);
  if (ts.empty()) throw Error(ErrorKind::NoSolution, "no intertwiner from U to (id (x) S^2) U");
  CMatrix t = ts.front();
  const Complex tr = t.trace();
  if (std::abs(tr) < tol.abs_tol) throw Error(ErrorKind::NoSolution, "intertwiner has zero trace");
  t *= std::conj(tr) / std::abs(tr);
  if (!positive_definite(t, tol.abs_tol)) {
    throw Error(ErrorKind::NoSolution, "intertwiner is not a multiple of a positive matrix");
  }
  return normalized(t);
}

double orthogonality_residual(const std::vector<Corep>& irreps, const std::vector<QMatrix>& qs,
                              const Functional& haar) {
  if (irreps.size() != qs.size()) throw Error(ErrorKind::DimensionMismatch, "one Q per irrep");
  const auto& alg = haar.host->alg;
  std::vector<CMatrix> qinv;
  for (const auto& q : qs) qinv.push_back(q.q.inverse());
  double res = 0.0;
  for (std::size_t a = 0; a < irreps.size(); ++a)
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      const auto& ua = irreps[a];
      const auto& ub = irreps[b];
      const std::size_t na = ua.size(), nb = ub.size();
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
          const CVector& x = ua.entry(i, j);
          const CMatrix lx = alg.left_regular(x);
          const CVector xs = alg.adjoint(x);
          const CMatrix lxs = alg.left_regular(xs);
          for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t l = 0; l < nb; ++l) {
              const CVector& y = ub.entry(k, l);
              const CVector ys = alg.adjoint(y);
              Complex e1 = 0.0, e2 = 0.0;
              if (a == b && i == k) e1 = qs[a].q(ix(l), ix(j)) / qs[a].d;
              if (a == b && j == l) e2 = qinv[a](ix(k), ix(i)) / qs[a].d;
              res = std::max(res, std::abs(haar(lx * ys) - e1));
              res = std::max(res, std::abs(haar(lxs * y) - e2));
            }
        }
    }
  return res;
}

CoefficientModel CoefficientModel::from_q(const CMatrix& q) {
  const auto n = q.rows();
  const CMatrix qi = q.inverse();
  const double d = q.trace().real();
  CoefficientModel m;
  m.n = static_cast<std::size_t>(n);
  m.gram1 = CMatrix::Zero(n * n, n * n);
  m.gram2 = CMatrix::Zero(n * n, n * n);
  m.s2 = CMatrix::Zero(n * n, n * n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      for (Idx k = 0; k < n; ++k)
        for (Idx l = 0; l < n; ++l) {
          if (i == k) m.gram1(i * n + j, k * n + l) = q(l, j) / d;
          if (j == l) m.gram2(i * n + j, k * n + l) = qi(k, i) / d;
          // S^2(u_kl) = sum_ij Q_ki u_ij Q^-1_jl
          m.s2(i * n + j, k * n + l) = q(k, i) * qi(j, l);
        }
  return m;
}

QMatrix CoefficientModel::q_matrix() const {
  const auto nn = ix(n);
  CMatrix m = CMatrix::Zero(nn, nn);
  for (Idx l = 0; l < nn; ++l)
    for (Idx j = 0; j < nn; ++j)
      for (Idx i = 0; i < nn; ++i) m(l, j) += gram1(i * nn + j, i * nn + l);
  return normalized(m);
}

KacReport is_kac(const std::vector<CoefficientModel>& blocks, const Tolerance& tol) {
  KacReport r{true, true, true, true};
  for (const auto& b : blocks) {
    const auto nn = ix(b.n);
    const QMatrix q = b.q_matrix();
    r.q_identity = r.q_identity && tol.accepts(max_abs(q.q - CMatrix::Identity(nn, nn)));
    r.s2_identity = r.s2_identity && tol.accepts(max_abs(b.s2 - CMatrix::Identity(nn * nn, nn * nn)));
    r.haar_tracial = r.haar_tracial && tol.accepts(max_abs(b.gram1 - b.gram2.transpose()));
    r.dims_equal = r.dims_equal && tol.accepts(std::abs(q.d - static_cast<double>(b.n)));
  }
  if (!r.consistent()) throw Error(ErrorKind::InconsistentConditions, "Kac conditions disagree");
  return r;
}

KacReport is_kac(const HopfPtr& h, const Tolerance& tol, std::uint64_t seed) {
  if (!h->antipode) throw Error(ErrorKind::MissingAntipode, h->name);
  const Functional haar = haar_solve(h, tol).state;
  const auto reps = irr_table(h, haar, tol, seed);
  const Tolerance loose = tol.scaled(10.0);
  KacReport r{true, true, true, true};
  for (const auto& u : reps) {
    const auto nn = ix(u.size());
    const QMatrix q = q_matrix_gram(u, haar, tol);
    r.q_identity = r.q_identity && loose.accepts(max_abs(q.q - CMatrix::Identity(nn, nn)));
    r.dims_equal = r.dims_equal && loose.accepts(std::abs(q.d - static_cast<double>(u.size())));
  }
  const auto n = ix(h->dim());
  const CMatrix s2 = *h->antipode * *h->antipode;
  r.s2_identity = loose.accepts(max_abs(s2 - CMatrix::Identity(n, n)));
  r.haar_tracial = is_tracial(haar, loose);
  if (!r.consistent()) throw Error(ErrorKind::InconsistentConditions, "Kac conditions disagree");
  return r;
}

}  // namespace qg
