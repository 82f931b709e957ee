// Acceptance run: one PASS/FAIL line per criterion.

#include "qg/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace qg;

namespace {

using Idx = Eigen::Index;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
  void within(double value, double bound, const std::string& what) {
    if (!(value <= bound)) {
      std::ostringstream s;
      s << what << " = " << value << " > " << bound;
      require(false, s.str());
    }
  }
};

struct Entry {
  std::string group;
  FiniteGroupSpec spec;
  HopfPtr h;
};

std::vector<Entry> catalog_entries() {
  std::vector<Entry> out;
  for (const auto& name : catalog_group_names()) {
    const FiniteGroupSpec g = group_by_name(name);
    out.push_back({name, g, group_algebra(g)});
    out.push_back({name, g, function_algebra(g)});
  }
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = catalog_entries();
  return all;
}

// irreducible data is shared by several criteria
const IrrData& irr_of(const HopfPtr& h) {
  static std::map<const HopfData*, IrrData> cache;
  auto it = cache.find(h.get());
  if (it == cache.end()) it = cache.emplace(h.get(), irrdata_from_host(h)).first;
  return it->second;
}

CVector unit_vec(Idx n, Idx i) {
  CVector v = CVector::Zero(n);
  v(i) = 1.0;
  return v;
}

CVector random_vec(Idx n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (Idx i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

std::vector<std::size_t> block_sizes(const IrrData& src) {
  std::vector<std::size_t> out;
  for (const auto& b : src.blocks) out.push_back(b.n);
  return out;
}

// (Delta_hat (x) id) W = W23 W13 read off against the coefficients of W
CMatrix comult_oracle(const IrrData& src) {
  const auto& alg = src.host->alg;
  const BlockAlgebra dual(block_sizes(src));
  const auto d = static_cast<Idx>(dual.dim());
  CMatrix v(d * d, static_cast<Idx>(alg.dim));
  for (std::size_t a = 0; a < src.blocks.size(); ++a)
    for (std::size_t b = 0; b < src.blocks.size(); ++b)
      for (std::size_t i = 0; i < src.blocks[a].n; ++i)
        for (std::size_t j = 0; j < src.blocks[a].n; ++j)
          for (std::size_t k = 0; k < src.blocks[b].n; ++k)
            for (std::size_t l = 0; l < src.blocks[b].n; ++l)
              v.row(static_cast<Idx>(dual.index(a, i, j)) * d + static_cast<Idx>(dual.index(b, k, l))) =
                  alg.multiply(src.reps[b].entry(k, l), src.reps[a].entry(i, j)).transpose();
  const auto s = solve_linear(coefficient_matrix(src).transpose(), v.transpose(), Tolerance());
  if (!s) throw Error(ErrorKind::NoSolution, "coefficient matrix is singular");
  return s->solution.transpose();
}

// --- criteria ---------------------------------------------------------------

void axioms(Outcome& o) {
  for (const auto& e : entries()) {
    const std::string n = e.h->name;
    const VerificationReport a = verify_algebra(e.h->alg), c = verify_coalgebra(e.h->coalg);
    const VerificationReport h = verify_hopf(*e.h);
    o.require(a.passed() && c.passed() && h.passed(), n + " axioms");
    o.within(std::max({a.max_residual(), c.max_residual(), h.max_residual()}), 1e-9, n + " residual");
    o.require(check_cancellation(*e.h), n + " cancellation");
  }
  o.note << entries().size() << " entries";
}

void antipodes(Outcome& o) {
  double worst = 0.0;
  for (const auto& e : entries()) {
    HopfData bare = *e.h;
    bare.antipode.reset();
    const auto s = find_antipode(bare);
    o.require(s.has_value(), e.h->name + " antipode found");
    if (s) worst = std::max(worst, max_abs(*s - *e.h->antipode));
  }
  o.within(worst, 1e-9, "antipode error");
  o.require(!find_antipode(*monoid_bialgebra()), "monoid has no antipode");
  o.note << "max error " << worst;
}

void haar(Outcome& o) {
  double worst = 0.0;
  std::size_t iters = 0;
  for (const auto& e : entries()) {
    const HaarResult s = haar_solve(e.h);
    const HaarResult c = haar_cesaro(e.h, std::nullopt, 10000, Tolerance(), 0);
    worst = std::max(worst, max_abs(s.state.coeffs - c.state.coeffs));
    iters = std::max(iters, c.iterations);
    if (e.h->name.rfind("C[", 0) == 0) {
      const auto id = static_cast<Idx>(e.spec.identity);
      o.within(max_abs(s.state.coeffs - unit_vec(static_cast<Idx>(e.spec.order), id)), 1e-12,
               e.h->name + " identity coefficient");
    }
  }
  o.within(worst, 1e-6, "solve vs cesaro");
  o.note << "max gap " << worst << ", max iterations " << iters;
}

void representations(Outcome& o) {
  const FiniteGroupSpec s3 = symmetric_group(3);
  const HopfPtr f = function_algebra(s3);
  const IrrDecomposition d = decompose(defining_corep(f, s3));
  std::vector<std::size_t> dims;
  for (const auto& s : d.summands) dims.push_back(s.irrep.size());
  o.require(dims == std::vector<std::size_t>{1, 2}, "defining corep dims");
  double worst = d.completeness;
  for (const auto& e : entries()) {
    const IrrData& src = irr_of(e.h);
    std::size_t sum = 0;
    for (const auto& b : src.blocks) sum += b.n * b.n;
    o.require(sum == e.spec.order, e.h->name + " dimension count");
    const IrrDecomposition r = decompose(regular_corep(e.h));
    worst = std::max(worst, r.completeness);
  }
  o.within(worst, 1e-8, "reassembly");
  o.note << "max reassembly " << worst;
}

void orthogonality(Outcome& o) {
  double orth = 0.0, agree = 0.0, qdev = 0.0;
  for (const auto& e : entries()) {
    const IrrData& src = irr_of(e.h);
    std::vector<QMatrix> qs;
    for (std::size_t k = 0; k < src.reps.size(); ++k) {
      const QMatrix a = src.blocks[k].q;
      const QMatrix b = q_matrix_antipode(src.reps[k]);
      const auto n = static_cast<Idx>(src.blocks[k].n);
      agree = std::max(agree, max_abs(a.q - b.q));
      qdev = std::max(qdev, max_abs(a.q - CMatrix::Identity(n, n)));
      qs.push_back(a);
    }
    orth = std::max(orth, orthogonality_residual(src.reps, qs, *src.haar));
    const KacReport k = is_kac(e.h);
    o.require(k.all_true() && k.consistent(), e.h->name + " Kac conditions");
  }
  o.within(orth, 1e-8, "orthogonality");
  o.within(agree, 1e-8, "gram vs antipode");
  o.within(qdev, 1e-8, "Q - 1");
  o.note << "orthogonality " << orth << ", Q agreement " << agree;
}

std::vector<HopfPtr> dual_hosts() {
  return {function_algebra(symmetric_group(3)), group_algebra(cyclic_group(6))};
}

void fourier_checks(Outcome& o) {
  double round = 0.0, coeff = 0.0;
  for (const HopfPtr& h : dual_hosts()) {
    const IrrData& src = irr_of(h);
    const DualAlgebra dual = build_dual(src);
    const auto n = static_cast<Idx>(h->dim());
    const CMatrix f = fourier_matrix(src), fi = fourier_inverse_matrix(src);
    round = std::max({round, max_abs(fi * f - CMatrix::Identity(n, n)), max_abs(f * fi - CMatrix::Identity(n, n))});
    o.require(dual.trivial.has_value(), h->name + " trivial block");
    const CVector e = unit_vec(n, static_cast<Idx>(dual.algebra.offset(*dual.trivial)));
    o.within(max_abs(f * h->alg.unit - e), 1e-9, h->name + " F(1)");
    for (std::size_t b = 0; b < src.blocks.size(); ++b) {
      const std::size_t m = src.blocks[b].n;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          CVector want = CVector::Zero(n);
          for (std::size_t r = 0; r < m; ++r)
            want(static_cast<Idx>(dual.algebra.index(b, r, i))) =
                src.blocks[b].q.q(static_cast<Idx>(r), static_cast<Idx>(j)) / src.blocks[b].q.d;
          coeff = std::max(coeff, max_abs(f * src.reps[b].entry(i, j) - want));
        }
    }
  }
  o.within(round, 1e-9, "roundtrip");
  o.within(coeff, 1e-9, "coefficients");
  o.note << "roundtrip " << round << ", coefficients " << coeff;
}

void main_theorem(Outcome& o) {
  double id_err = 0.0, eps_err = 0.0, delta_err = 0.0, mult = 0.0, w = 0.0;
  for (const HopfPtr& h : dual_hosts()) {
    const IrrData& src = irr_of(h);
    const auto n = static_cast<Idx>(h->dim());
    const PhiResult pid = phi_from_corep(src, src.reps, Tolerance(), 0, 100);
    const PhiResult peps = phi_from_corep(src, {Corep::trivial(h)}, Tolerance(), 0, 100);
    const PhiResult pdel = phi_from_corep(src, w23_w13(src), Tolerance(), 0, 100);
    id_err = std::max(id_err, max_abs(pid.phi - CMatrix::Identity(n, n)));
    eps_err = std::max(eps_err, max_abs(peps.phi.row(0).transpose() - dual_counit_covector(src)));
    delta_err = std::max(delta_err, max_abs(dual_comult_matrix(src) - comult_oracle(src)));
    for (const PhiResult* p : {&pid, &peps, &pdel}) {
      mult = std::max({mult, p->multiplicative_residual, p->star_residual});
      w = std::max(w, p->w_residual);
      o.require(p->span_rank == p->target.dim(), h->name + " nondegenerate");
    }
  }
  o.within(id_err, 1e-9, "Phi(W) - id");
  o.within(eps_err, 1e-9, "Phi(1) - counit");
  o.within(delta_err, 1e-9, "Phi(W23 W13) - Delta_hat");
  o.within(mult, 1e-8, "multiplicativity");
  o.within(w, 1e-9, "(Phi (x) id) W - V");
  o.note << "id " << id_err << ", counit " << eps_err << ", coproduct " << delta_err << ", mult " << mult;
}

void dual_structure(Outcome& o) {
  double worst = 0.0;
  for (const HopfPtr& h : dual_hosts()) {
    const VerificationReport r = verify_dual_invariance(irr_of(h));
    o.require(r.passed(), h->name + " dual invariance");
    worst = std::max(worst, r.max_residual());
  }
  o.within(worst, 1e-8, "dual residual");
  for (const HopfPtr& h : {group_algebra(cyclic_group(3)), function_algebra(symmetric_group(3))}) {
    const BidualityResult b = biduality_check(h);
    o.require(b.isomorphic && b.bidual, h->name + " biduality");
    if (b.bidual) o.require(check_morphism(b.map, *b.bidual, *h, Tolerance().scaled(100.0)), h->name + " morphism");
  }
  o.note << "max residual " << worst;
}

void nonkac(Outcome& o) {
  const IrrData src = synthetic_nonkac({{2, 2.0}, {1, 1.0}});
  for (const auto& b : src.blocks) {
    const double tr = b.q.q.trace().real(), tri = b.q.q.inverse().trace().real();
    o.require(tr == tri, b.id + " Tr Q = Tr Q^-1");
    o.require(tr >= static_cast<double>(b.n), b.id + " Tr Q >= n");
  }
  const BlockAlgebra dual(block_sizes(src));
  std::mt19937_64 rng(0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const CVector x = random_vec(static_cast<Idx>(dual.dim()), rng);
    auto blocks = dual.split(x);
    for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] = src.blocks[b].q.q * blocks[b] * src.blocks[b].q.q;
    worst = std::max(worst, std::abs(hhat_R(src, x) - hhat_L(src, dual.join(blocks))));
  }
  o.within(worst, 1e-10, "hR(x) - hL(QxQ)");
  const ModularReport m = modular_report(src);
  o.require(m.witness.has_value(), "witness");
  double gap = 0.0;
  if (m.witness) {
    const CVector x = unit_vec(static_cast<Idx>(dual.dim()), static_cast<Idx>(*m.witness));
    gap = std::abs(hhat_L(src, x) - hhat_R(src, x));
  }
  o.require(gap >= 0.1, "witness gap");
  o.note << "identity " << worst << ", witness gap " << gap;
}

WordPoly random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), letter(0, 3);
  Word w;
  for (int k = len(rng); k > 0; --k) {
    const int l = letter(rng);
    w.push_back({static_cast<std::uint32_t>(l / 2), l % 2 == 1, 0});
  }
  return WordPoly::monomial(w);
}

void rewriting(Outcome& o) {
  std::size_t words = 0;
  for (double q : {0.5, 2.0}) {
    const Presentation p = suq2_presentation(q);
    std::mt19937_64 rng(0);
    for (int t = 0; t < 500; ++t, ++words) {
      const WordPoly nf = normal_form(random_word(rng), p);
      o.require(normal_form(nf, p) == nf, "idempotence");
    }
    const Word a{{0, false, 0}}, as{{0, true, 0}}, g{{1, false, 0}}, gs{{1, true, 0}};
    auto cat = [](Word x, const Word& y) {
      x.insert(x.end(), y.begin(), y.end());
      return x;
    };
    o.require(normal_form(WordPoly::monomial(cat(g, a)), p) == WordPoly::monomial(cat(a, g), 1.0 / q),
              "g a -> a g / q");
    o.require(normal_form(WordPoly::monomial(cat(as, a)), p) ==
                  WordPoly::constant(1.0) - WordPoly::monomial(cat(gs, g)),
              "a* a -> 1 - g* g");
  }
  for (double q : {0.5, 1.0, 2.0})
    o.require(delta_well_defined(suq2_presentation(q), 6).passed(), "SU_q(2) coproduct, q = " + std::to_string(q));
  for (std::size_t n : {2, 3, 4})
    o.require(delta_well_defined(sn_plus_presentation(n), 6).passed(), "S_n^+ coproduct, n = " + std::to_string(n));
  o.note << words << " random words";
}

void magic(Outcome& o) {
  std::vector<std::size_t> perm{0, 1, 2, 3};
  int count = 0;
  do {
    o.require(validate_magic(permutation_magic(perm)).passed(), "permutation matrix");
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  o.require(count == 24, "24 permutations");
  MagicMatrix sample;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const MagicMatrix u =
        magic_block_example(random_rank_one_projection(2, 2 * s), random_rank_one_projection(2, 2 * s + 1));
    o.require(validate_magic(u).passed(), "block example");
    if (s == 0) sample = u;
  }
  MagicMatrix idem = sample, sums = sample, orth = sample;
  idem[0][0] *= 0.5;
  sums[2][2] = CMatrix::Zero(2, 2);
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = 1.0;
  orth[0][0] = x;
  orth[0][1] = x;
  int caught = 0;
  for (const MagicMatrix* m : {&idem, &sums, &orth}) caught += validate_magic(*m).passed() ? 0 : 1;
  o.require(caught == 3, "defect mutants rejected");
  o.note << count << " permutations, 50 block examples, " << caught << "/3 mutants rejected";
}

void reconstruction(Outcome& o) {
  for (const auto& name : catalog_group_names()) {
    const FiniteGroupSpec g = group_by_name(name);
    const ReconstructedGroup r = gelfand_reconstruct(*function_algebra(g));
    const auto iso = find_isomorphism(r.group, g);
    o.require(iso && is_isomorphism(r.group, g, *iso), name + " reconstruction");

    const HopfPtr h = group_algebra(g);
    const auto gl = grouplikes(*h);
    o.require(gl.size() == g.order, name + " group-like count");
    auto member = [&](const CVector& v) {
      for (const auto& w : gl)
        if (max_abs(v - w) <= 1e-9) return true;
      return false;
    };
    bool closed = true;
    for (const auto& a : gl) {
      closed = closed && member(*h->antipode * a);
      for (const auto& b : gl) closed = closed && member(h->alg.multiply(a, b));
    }
    o.require(closed, name + " group-likes closed");
  }
  o.note << catalog_group_names().size() << " groups";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"axiom suite", axioms},
      {"antipode solver", antipodes},
      {"Haar agreement", haar},
      {"representation theory", representations},
      {"orthogonality", orthogonality},
      {"Fourier transform", fourier_checks},
      {"universal morphism", main_theorem},
      {"dual structure", dual_structure},
      {"non-Kac witnesses", nonkac},
      {"rewriting", rewriting},
      {"magic unitaries", magic},
      {"reconstruction", reconstruction},
  };
  int failures = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", k, name, secs, o.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
