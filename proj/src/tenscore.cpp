#include "qg/tenscore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::MissingAntipode: return "MissingAntipode";
    case ErrorKind::SingularAntipode: return "SingularAntipode";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::InconsistentConditions: return "InconsistentConditions";
    case ErrorKind::NotACorep: return "NotACorep";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::InconsistentQData: return "InconsistentQData";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Tolerance::Tolerance(double abs, double rel) : abs_tol(abs), rel_tol(rel) {
  if (!(abs >= 0.0 && abs < 1.0) || !(rel >= 0.0 && rel < 1.0)) {
    throw Error(ErrorKind::InvalidInput, "tolerances must lie in [0, 1)");
  }
}

bool Tolerance::accepts(double residual, double scale) const {
  return residual <= abs_tol + rel_tol * scale;
}

Tolerance Tolerance::scaled(double factor) const {
  return Tolerance(std::min(abs_tol * factor, 0.5), std::min(rel_tol * factor, 0.5));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix flip(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw Error(ErrorKind::InvalidInput, "flip needs positive dimensions");
  const auto nn = static_cast<Eigen::Index>(n);
  const auto mm = static_cast<Eigen::Index>(m);
  CMatrix out = CMatrix::Zero(nn * mm, nn * mm);
  for (Eigen::Index i = 0; i < nn; ++i) {
    for (Eigen::Index j = 0; j < mm; ++j) out(j * nn + i, i * mm + j) = 1.0;
  }
  return out;
}

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::span<const std::size_t> dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

}  // namespace

CMatrix leg_embed(const CMatrix& x, std::span<const std::size_t> legs,
                  std::span<const std::size_t> dims) {
  std::size_t sub = 1;
  std::vector<bool> used(dims.size(), false);
  for (auto leg : legs) {
    if (leg >= dims.size() || used[leg]) {
      throw Error(ErrorKind::DimensionMismatch, "leg_embed: invalid leg list");
    }
    used[leg] = true;
    sub *= dims[leg];
  }
  if (static_cast<std::size_t>(x.rows()) != sub || static_cast<std::size_t>(x.cols()) != sub) {
    throw Error(ErrorKind::DimensionMismatch, "leg_embed: operator shape does not match legs");
  }
  std::vector<std::size_t> sub_dims;
  for (auto leg : legs) sub_dims.push_back(dims[leg]);

  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                            std::multiplies<>());
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
  for (std::size_t r = 0; r < total; ++r) {
    auto rd = digits_of(r, dims);
    std::vector<std::size_t> rs(legs.size());
    for (std::size_t k = 0; k < legs.size(); ++k) rs[k] = rd[legs[k]];
    const auto r_sub = index_of(rs, sub_dims);
    for (std::size_t c_sub = 0; c_sub < sub; ++c_sub) {
      auto cs = digits_of(c_sub, sub_dims);
      auto cd = rd;
      for (std::size_t k = 0; k < legs.size(); ++k) cd[legs[k]] = cs[k];
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(index_of(cd, dims))) =
          x(static_cast<Eigen::Index>(r_sub), static_cast<Eigen::Index>(c_sub));
    }
  }
  return out;
}

CVector apply_on_leg(const CMatrix& op, const CVector& v, std::span<const std::size_t> dims,
                     std::size_t leg) {
  if (leg >= dims.size() || static_cast<std::size_t>(op.cols()) != dims[leg]) {
    throw Error(ErrorKind::DimensionMismatch, "apply_on_leg: operator does not fit leg");
  }
  std::size_t pre = 1, post = 1;
  for (std::size_t k = 0; k < leg; ++k) pre *= dims[k];
  for (std::size_t k = leg + 1; k < dims.size(); ++k) post *= dims[k];
  const auto d_in = static_cast<Eigen::Index>(dims[leg]);
  const auto d_out = op.rows();
  if (static_cast<std::size_t>(v.size()) != pre * dims[leg] * post) {
    throw Error(ErrorKind::DimensionMismatch, "apply_on_leg: vector size mismatch");
  }
  const auto P = static_cast<Eigen::Index>(pre);
  const auto Q = static_cast<Eigen::Index>(post);
  CVector out = CVector::Zero(P * d_out * Q);
  for (Eigen::Index p = 0; p < P; ++p) {
    // view the (d_in x post) slab as a matrix and multiply from the left
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> in(
        v.data() + p * d_in * Q, d_in, Q);
    Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> o(
        out.data() + p * d_out * Q, d_out, Q);
    o.noalias() = op * in;
  }
  return out;
}

std::size_t rank_of_span(std::span<const CMatrix> vectors, const Tolerance& tol) {
  if (vectors.empty()) return 0;
  const auto len = vectors.front().size();
  CMatrix stacked(len, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != len) {
      throw Error(ErrorKind::DimensionMismatch, "rank_of_span: shapes differ");
    }
    stacked.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const CVector>(vectors[k].data(), len);
  }
  Eigen::BDCSVD<CMatrix> svd(stacked);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= tol.abs_tol) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) >= tol.rel_tol * s(0) && s(i) > tol.abs_tol) ++r;
  }
  return r;
}

bool psd_check(const CMatrix& g, const Tolerance& tol) {
  if (g.rows() != g.cols()) throw Error(ErrorKind::DimensionMismatch, "psd_check: not square");
  if (g.size() == 0) return true;
  const double scale = max_abs(g);
  if (!tol.accepts(max_abs(g - g.adjoint()), scale)) return false;
  const CMatrix herm = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol.abs_tol;
}

CMatrix nullspace(const CMatrix& a, const Tolerance& tol) {
  const auto n = a.cols();
  if (a.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double cut = std::max(tol.abs_tol, tol.rel_tol * smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

CMatrix gram_nullspace(const CMatrix& gram, const Tolerance& tol) {
  const auto n = gram.cols();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (gram + gram.adjoint()));
  const auto& ev = es.eigenvalues();  // ascending
  const double smax = std::sqrt(std::max(ev(n - 1), 0.0));
  const double cut = std::max(tol.abs_tol, std::sqrt(tol.rel_tol) * smax);
  Eigen::Index k = 0;
  while (k < n && std::sqrt(std::max(ev(k), 0.0)) <= cut) ++k;
  return es.eigenvectors().leftCols(k);
}

std::optional<LinearSolution> solve_linear(const CMatrix& a, const CMatrix& b,
                                           const Tolerance& tol) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_linear: shapes");
  const auto n = a.cols();
  LinearSolution out;
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double cut = std::max(tol.abs_tol, tol.rel_tol * smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) ++rank;
  }
  const CMatrix& u = svd.matrixU();
  const CMatrix& v = svd.matrixV();
  CMatrix coeffs = u.leftCols(rank).adjoint() * b;
  for (Eigen::Index i = 0; i < rank; ++i) coeffs.row(i) /= s(i);
  out.solution = v.leftCols(rank) * coeffs;
  out.nullspace = v.rightCols(n - rank);
  out.residual = max_abs(a * out.solution - b);
  if (!tol.accepts(out.residual, std::max(1.0, max_abs(b)))) return std::nullopt;
  return out;
}

CMatrix sqrt_psd(const CMatrix& p) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (p + p.adjoint()));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const CMatrix& m) {
  return m.allFinite();
}

}  // namespace qg
