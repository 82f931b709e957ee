#include "qg/catalog.hpp"
#include "qg/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace qg;

namespace {

struct Options {
  std::string file;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string method = "solve";
  std::size_t max_iter = 10000;
  std::string corep = "regular";
  std::string truncated;
  std::string expr;
  std::size_t degree_cap = 6;
};

// load-phase failures are input errors
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

int emit(const Json& j, bool passed) {
  std::cout << j.dump(2) << "\n";
  return passed ? 0 : 1;
}

Json matrix_list(const std::vector<CMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

Json haar_json(const HaarResult& r, const Tolerance& tol) {
  return {{"method", r.method == HaarMethod::Solve ? "solve" : "cesaro"},
          {"state", vector_to_json(r.state.coeffs)},
          {"residual", round12(r.residual)},
          {"iterations", r.iterations},
          {"tracial", is_tracial(r.state, tol)}};
}

int cmd_verify(const Options& o, const Tolerance& tol) {
  const Json spec = load([&] { return load_json_file(o.file); });
  const std::string kind = load([&] { return spec_kind(spec); });
  Json out{{"command", "verify"}, {"kind", kind}};
  VerificationReport rep;
  if (kind == "algebra") {
    const StructureAlgebra a = load([&] { return algebra_from_json(spec); });
    rep = verify_algebra(a, tol);
  } else if (kind == "hopf" || kind == "group") {
    const HopfPtr h = load([&] { return hopf_from_json(spec); });
    out["name"] = h->name;
    out["dim"] = h->dim();
    if (h->antipode) {
      rep = verify_hopf(*h, tol);
    } else {
      rep = verify_bialgebra(*h, tol);
      const auto s = find_antipode(*h, tol);
      rep.add("antipode_exists", 0.0, s.has_value());
    }
    rep.add("cancellation", 0.0, check_cancellation(*h, tol));
  } else if (kind == "presentation") {
    const Presentation p = load([&] { return presentation_from_json(spec); });
    out["name"] = p.name;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      const WordPoly nf = normal_form(p.relations[r], p);
      rep.add("relation_" + std::to_string(r) + "_reduces_to_zero", nf.max_coeff(), nf.is_zero());
    }
    if (!p.delta.empty()) rep.append(delta_well_defined(p, o.degree_cap), "");
  } else if (kind == "magic") {
    const MagicMatrix u = load([&] { return magic_from_json(spec); });
    rep = validate_magic(u, tol);
  } else {
    const IrrData src = load([&] { return irrdata_from_json(spec, tol); });
    const DualAlgebra d = build_dual(src, tol);
    rep.add("qdata", 0.0, true);
    out["blocks"] = d.algebra.sizes();
  }
  out["report"] = report_to_json(rep);
  out["passed"] = rep.passed();
  if (const auto* f = rep.first_failure()) out["first_failure"] = f->name;
  return emit(out, rep.passed());
}

int cmd_haar(const Options& o, const Tolerance& tol) {
  const Json spec = load([&] { return load_json_file(o.file); });
  const HopfPtr h = load([&] { return hopf_from_json(spec); });
  if (o.method != "solve" && o.method != "cesaro" && o.method != "both") {
    throw InputError("method must be solve, cesaro or both");
  }
  Json out{{"command", "haar"}, {"name", h->name}, {"labels", h->alg.labels}};
  bool passed = true;
  std::optional<HaarResult> solved, averaged;
  if (o.method != "cesaro") {
    solved = haar_solve(h, tol);
    out["solve"] = haar_json(*solved, tol);
  }
  if (o.method != "solve") {
    averaged = haar_cesaro(h, std::nullopt, o.max_iter, tol, o.seed);
    out["cesaro"] = haar_json(*averaged, tol);
  }
  if (solved && averaged) {
    const double gap = max_abs(solved->state.coeffs - averaged->state.coeffs);
    out["agreement"] = round12(gap);
    passed = gap <= 10.0 * o.tol;
  }
  const HaarResult& r = solved ? *solved : *averaged;
  out["state"] = vector_to_json(r.state.coeffs);
  out["tracial"] = is_tracial(r.state, tol);
  out["passed"] = passed;
  return emit(out, passed);
}

int cmd_decompose(const Options& o, const Tolerance& tol) {
  const Json spec = load([&] { return load_json_file(o.file); });
  const HopfPtr h = load([&] { return hopf_from_json(spec); });
  const auto coreps = load([&] { return coreps_from_json(spec, h); });
  const auto it = coreps.find(o.corep);
  if (it == coreps.end()) throw InputError("no corep named '" + o.corep + "'");
  Json out{{"command", "decompose"}, {"name", h->name}, {"corep", o.corep}};
  if (!is_corep(it->second, tol)) {
    out["error"] = "input is not a corepresentation";
    out["residual"] = round12(corep_residual(it->second));
    return emit(out, false);
  }
  const Functional haar = haar_solve(h, tol).state;
  Corep u = it->second;
  if (!is_unitary(u, tol)) u = unitarize(u, haar, tol).unitary;
  const IrrDecomposition dec = decompose(u, tol, o.seed);
  std::vector<Corep> irreps;
  std::vector<QMatrix> qs;
  Json summands = Json::array();
  std::vector<std::size_t> dims;
  for (const auto& s : dec.summands) {
    const QMatrix q = q_matrix_gram(s.irrep, haar, tol);
    irreps.push_back(s.irrep);
    qs.push_back(q);
    dims.push_back(s.irrep.size());
    summands.push_back({{"dim", s.irrep.size()},
                        {"multiplicity", s.multiplicity},
                        {"intertwiners", matrix_list(s.isometries)},
                        {"q", matrix_to_json(q.q)},
                        {"quantum_dimension", round12(q.d)}});
  }
  const double orth = orthogonality_residual(irreps, qs, haar);
  const KacReport kac = is_kac(h, tol, o.seed);
  out["dims"] = dims;
  out["summands"] = summands;
  out["completeness_residual"] = round12(dec.completeness);
  out["orthogonality_residual"] = round12(orth);
  out["kac"] = {{"q_identity", kac.q_identity},
                {"s2_identity", kac.s2_identity},
                {"haar_tracial", kac.haar_tracial},
                {"dims_equal", kac.dims_equal},
                {"kac", kac.all_true()}};
  const bool passed = tol.scaled(10.0).accepts(dec.completeness, 1.0) && tol.scaled(10.0).accepts(orth, 1.0);
  out["passed"] = passed;
  return emit(out, passed);
}

Json modular_json(const ModularReport& m) {
  Json j{{"finite", m.finite},
         {"q_identity", m.q_identity},
         {"trace_residual", round12(m.trace_residual)},
         {"trace_bound", m.trace_bound},
         {"weight_identity_residual", round12(m.weight_identity_residual)},
         {"hhat_lr_gap", round12(m.lr_gap)},
         {"passed", m.passed}};
  j["witness"] = m.witness ? Json(*m.witness) : Json(nullptr);
  if (m.left_modular_residual) j["left_modular_residual"] = round12(*m.left_modular_residual);
  if (m.right_modular_residual) j["right_modular_residual"] = round12(*m.right_modular_residual);
  return j;
}

Json unimodular_json(const UnimodularityReport& u) {
  Json j{{"weights_equal", u.weights_equal},
         {"q_identity", u.q_identity},
         {"antipode_bounded", u.antipode_bounded},
         {"all_true", u.all_true()}};
  j["haar_tracial"] = u.haar_tracial ? Json(*u.haar_tracial) : Json(nullptr);
  j["s2_identity"] = u.s2_identity ? Json(*u.s2_identity) : Json(nullptr);
  return j;
}

int cmd_dual(const Options& o, const Tolerance& tol) {
  const std::string path = o.truncated.empty() ? o.file : o.truncated;
  if (path.empty()) throw InputError("dual needs a spec file");
  const Json spec = load([&] { return load_json_file(path); });
  const std::string kind = load([&] { return spec_kind(spec); });
  Json out{{"command", "dual"}};
  if (kind == "irrdata") {
    const IrrData src = load([&] { return irrdata_from_json(spec, tol); });
    const DualAlgebra d = build_dual(src, tol);
    const ModularReport m = modular_report(src, tol);
    out["truncated"] = true;
    out["blocks"] = d.algebra.sizes();
    out["ids"] = d.ids;
    out["modular"] = modular_json(m);
    out["unimodularity"] = unimodular_json(unimodularity_report(src, tol));
    out["passed"] = m.passed;
    return emit(out, m.passed);
  }
  if (!o.truncated.empty()) throw InputError("--truncated expects an irrdata spec");
  const HopfPtr h = load([&] { return hopf_from_json(spec); });
  const IrrData src = irrdata_from_host(h, tol, o.seed);
  const DualAlgebra d = build_dual(src, tol);
  const CMatrix f = fourier_matrix(src);
  const CMatrix finv = fourier_inverse_matrix(src);
  const auto D = f.rows();
  const double roundtrip = std::max(max_abs(finv * f - CMatrix::Identity(f.cols(), f.cols())),
                                    max_abs(f * finv - CMatrix::Identity(D, D)));
  const VerificationReport inv = verify_dual_invariance(src, tol);
  const ModularReport m = modular_report(src, tol);
  const UnimodularityReport u = unimodularity_report(src, tol);
  const BidualityResult bi = biduality_check(h, tol, o.seed);
  out["truncated"] = false;
  out["name"] = h->name;
  out["blocks"] = d.algebra.sizes();
  out["ids"] = d.ids;
  out["fourier_roundtrip_residual"] = round12(roundtrip);
  out["invariance"] = report_to_json(inv);
  out["modular"] = modular_json(m);
  out["unimodularity"] = unimodular_json(u);
  out["biduality"] = {{"isomorphic", bi.isomorphic}, {"variant", bi.variant}};
  const bool passed = tol.accepts(roundtrip, 1.0) && inv.passed() && m.passed && bi.isomorphic;
  out["passed"] = passed;
  return emit(out, passed);
}

int cmd_rewrite(const Options& o, const Tolerance&) {
  const Json spec = load([&] { return load_json_file(o.file); });
  const Presentation p = load([&] { return presentation_from_json(spec); });
  Json out{{"command", "rewrite"}, {"name", p.name}};
  if (!o.expr.empty()) {
    const WordPoly in = load([&] { return parse_poly(o.expr, p); });
    const WordPoly nf = normal_form(in, p);
    out["input"] = to_string(in, p);
    out["normal_form"] = to_string(nf, p);
    out["passed"] = true;
    return emit(out, true);
  }
  VerificationReport rep;
  if (!p.delta.empty()) rep = delta_well_defined(p, o.degree_cap);
  const auto failures = confluence_failures(p, 4);
  rep.add("confluence", static_cast<double>(failures.size()), failures.empty());
  out["rules"] = p.rules.size();
  out["report"] = report_to_json(rep);
  out["passed"] = rep.passed();
  return emit(out, rep.passed());
}

int cmd_magic(const Options& o, const Tolerance& tol) {
  const Json spec = load([&] { return load_json_file(o.file); });
  const MagicMatrix u = load([&] { return magic_from_json(spec); });
  const VerificationReport rep = validate_magic(u, tol);
  Json out{{"command", "magic"}, {"n", u.size()}, {"report", report_to_json(rep)}, {"passed", rep.passed()}};
  if (const auto* f = rep.first_failure()) out["first_failure"] = f->name;
  return emit(out, rep.passed());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantum groups: axioms, Haar states, corepresentations and duals"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("QG_TOL")) {
    try {
      o.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: QG_TOL is not a number\n";
      return 2;
    }
  }
  auto common = [&](CLI::App* sub, bool file_required = true) {
    auto* f = sub->add_option("file", o.file, "JSON spec file");
    if (file_required) f->required();
    sub->add_option("--tol", o.tol, "absolute and relative tolerance");
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto* verify = app.add_subcommand("verify", "check every axiom of a spec");
  common(verify);
  verify->add_option("--degree-cap", o.degree_cap, "degree cap for coproduct checks");
  auto* haar = app.add_subcommand("haar", "Haar state");
  common(haar);
  haar->add_option("--method", o.method, "solve, cesaro or both");
  haar->add_option("--max-iter", o.max_iter, "averaging steps for cesaro");
  auto* dec = app.add_subcommand("decompose", "irreducible decomposition of a corepresentation");
  common(dec);
  dec->add_option("--corep", o.corep, "corep name (regular, defining or from the file)");
  auto* dual = app.add_subcommand("dual", "dual discrete quantum group");
  common(dual, false);
  dual->add_option("--truncated", o.truncated, "irrdata spec with Q matrices only");
  auto* rewrite = app.add_subcommand("rewrite", "normal forms in a presentation");
  common(rewrite);
  rewrite->add_option("--expr", o.expr, "polynomial to normalise");
  rewrite->add_option("--degree-cap", o.degree_cap, "degree cap for coproduct checks");
  auto* magic = app.add_subcommand("magic", "validate a magic unitary");
  common(magic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  Tolerance tol;
  try {
    tol = Tolerance(o.tol, o.tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (*verify) return cmd_verify(o, tol);
    if (*haar) return cmd_haar(o, tol);
    if (*dec) return cmd_decompose(o, tol);
    if (*dual) return cmd_dual(o, tol);
    if (*rewrite) return cmd_rewrite(o, tol);
    if (*magic) return cmd_magic(o, tol);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json out{{"error", to_string(e.kind())}, {"message", e.what()}, {"passed", false}};
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  return 2;
}
