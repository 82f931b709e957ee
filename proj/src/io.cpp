#include "qg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qg {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string("bad index in ") + what);
  const auto v = j.get<std::size_t>();
  if (v >= bound) bad(std::string("index out of range in ") + what);
  return v;
}

double number(const Json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in " + path + ": " + e.what());
  }
}

std::string spec_kind(const Json& j) {
  if (!j.is_object()) bad("spec must be a JSON object");
  const Json& v = field(j, "version");
  if (!v.is_string() || v.get<std::string>() != "1") bad("unsupported schema version");
  const Json& k = field(j, "kind");
  if (!k.is_string()) bad("kind must be a string");
  const auto kind = k.get<std::string>();
  for (const char* known : {"algebra", "hopf", "group", "presentation", "irrdata", "magic"})
    if (kind == known) return kind;
  bad("unknown kind '" + kind + "'");
}

Json complex_to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("expected a complex number [re, im]");
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("expected a dense matrix");
  const auto r = static_cast<Eigen::Index>(j.size());
  const auto c = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) bad("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

StructureAlgebra algebra_from_json(const Json& j) {
  StructureAlgebra a;
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) bad("dim must be a positive integer");
  a.dim = d.get<std::size_t>();
  const auto n = static_cast<Eigen::Index>(a.dim);
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) a.labels.push_back(l.get<std::string>());
    if (a.labels.size() != a.dim) bad("labels length differs from dim");
  } else {
    for (std::size_t i = 0; i < a.dim; ++i) a.labels.push_back("e" + std::to_string(i));
  }
  a.mult = CMatrix::Zero(n, n * n);
  for (const auto& t : field(j, "mult")) {
    if (!t.is_array() || t.size() != 5) bad("mult entries are [i, j, k, re, im]");
    const auto i = index_of(t[0], a.dim, "mult");
    const auto p = index_of(t[1], a.dim, "mult");
    const auto q = index_of(t[2], a.dim, "mult");
    a.mult(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p * a.dim + q)) +=
        Complex(number(t[3]), number(t[4]));
  }
  a.unit = vector_from_json(field(j, "unit"));
  if (a.unit.size() != n) bad("unit length differs from dim");
  const Json& star = field(j, "star");
  if (!field(star, "conjugate").is_boolean() || !star["conjugate"].get<bool>()) {
    bad("star must be antilinear (conjugate: true)");
  }
  a.star = matrix_from_json(field(star, "J"));
  if (a.star.rows() != n || a.star.cols() != n) bad("star J has the wrong shape");
  if (j.contains("gram")) {
    a.gram = matrix_from_json(j["gram"]);
    if (a.gram->rows() != n || a.gram->cols() != n) bad("gram has the wrong shape");
  }
  return a;
}

FiniteGroupSpec group_from_json(const Json& j) {
  FiniteGroupSpec g;
  if (j.contains("builtin")) {
    g = group_by_name(j["builtin"].get<std::string>());
  } else {
    const Json& t = field(j, "cayley");
    std::vector<std::vector<std::size_t>> table;
    try {
      table = t.get<std::vector<std::vector<std::size_t>>>();
    } catch (const Json::exception&) {
      bad("cayley must be a table of indices");
    }
    g = FiniteGroupSpec::from_table(j.value("name", std::string("G")), std::move(table));
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("permutations")) {
      g.permutations = j["permutations"].get<std::vector<std::vector<std::size_t>>>();
      if (g.permutations.size() != g.order) bad("one permutation per element required");
      for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
          for (std::size_t x = 0; x < g.permutations[a].size(); ++x)
            if (g.permutations[g.mul(a, b)][x] != g.permutations[a][g.permutations[b][x]]) {
              bad("permutations do not form an action");
            }
    }
    g.validate();
  }
  if (j.contains("name")) g.name = j["name"].get<std::string>();
  return g;
}

HopfPtr hopf_from_json(const Json& j) {
  const std::string kind = spec_kind(j);
  try {
    if (kind == "group") {
      const FiniteGroupSpec g = group_from_json(j);
      const std::string c = field(j, "construction").get<std::string>();
      if (c == "group_algebra") return group_algebra(g);
      if (c == "function_algebra") return function_algebra(g);
      bad("construction must be group_algebra or function_algebra");
    }
    if (kind != "hopf") bad("expected a hopf or group spec, got " + kind);
    HopfData h;
    h.name = j.value("name", std::string("H"));
    h.alg = algebra_from_json(j);
    const std::size_t n = h.alg.dim;
    const auto N = static_cast<Eigen::Index>(n);
    h.coalg.dim = n;
    h.coalg.delta = CMatrix::Zero(N * N, N);
    for (const auto& t : field(j, "delta")) {
      if (!t.is_array() || t.size() != 4) bad("delta entries are [i, j*dim+k, re, im]");
      const auto i = index_of(t[0], n, "delta");
      const auto p = index_of(t[1], n * n, "delta");
      h.coalg.delta(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(i)) +=
          Complex(number(t[2]), number(t[3]));
    }
    h.coalg.counit = vector_from_json(field(j, "counit"));
    if (h.coalg.counit.size() != N) bad("counit length differs from dim");
    if (j.contains("antipode")) {
      CMatrix s = CMatrix::Zero(N, N);
      for (const auto& t : j["antipode"]) {
        if (!t.is_array() || t.size() != 4) bad("antipode entries are [i, j, re, im]");
        const auto i = index_of(t[0], n, "antipode");
        const auto k = index_of(t[1], n, "antipode");
        s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) += Complex(number(t[2]), number(t[3]));
      }
      h.antipode = s;
    }
    return std::make_shared<const HopfData>(std::move(h));
  } catch (const Json::exception& e) {
    bad(std::string("schema error: ") + e.what());
  }
}

namespace {

void sparse_push(Json& arr, std::initializer_list<std::size_t> idx, Complex z) {
  if (std::abs(z) == 0.0) return;
  Json t = Json::array();
  for (auto i : idx) t.push_back(i);
  t.push_back(round12(z.real()));
  t.push_back(round12(z.imag()));
  arr.push_back(t);
}

}  // namespace

Json hopf_to_json(const HopfData& h) {
  const std::size_t n = h.dim();
  Json j;
  j["version"] = "1";
  j["kind"] = "hopf";
  j["name"] = h.name;
  j["dim"] = n;
  j["labels"] = h.alg.labels;
  Json mult = Json::array(), delta = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const auto col = static_cast<Eigen::Index>(p * n + q);
        sparse_push(mult, {i, p, q}, h.alg.mult(static_cast<Eigen::Index>(i), col));
        sparse_push(delta, {i, p * n + q}, h.coalg.delta(col, static_cast<Eigen::Index>(i)));
      }
  j["mult"] = mult;
  j["unit"] = vector_to_json(h.alg.unit);
  j["star"] = {{"J", matrix_to_json(h.alg.star)}, {"conjugate", true}};
  if (h.alg.gram) j["gram"] = matrix_to_json(*h.alg.gram);
  j["delta"] = delta;
  j["counit"] = vector_to_json(h.coalg.counit);
  if (h.antipode) {
    Json s = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        sparse_push(s, {i, k}, (*h.antipode)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
    j["antipode"] = s;
  }
  return j;
}

std::map<std::string, Corep> coreps_from_json(const Json& j, const HopfPtr& host) {
  std::map<std::string, Corep> out;
  out.emplace("regular", regular_corep(host));
  if (spec_kind(j) == "group" && j.value("construction", std::string()) == "function_algebra") {
    const FiniteGroupSpec g = group_from_json(j);
    if (g.permutations.size() == g.order) out.emplace("defining", defining_corep(host, g));
  }
  if (!j.contains("coreps")) return out;
  const std::size_t d = host->dim();
  try {
    for (const auto& [name, c] : j["coreps"].items()) {
      const Json& sz = field(c, "size");
      if (!sz.is_number_integer() || sz.get<long long>() < 1) bad("corep size must be positive");
      const auto m = sz.get<std::size_t>();
      std::vector<CVector> entries(m * m, CVector::Zero(static_cast<Eigen::Index>(d)));
      for (const auto& t : field(c, "coeffs")) {
        if (!t.is_array() || t.size() != 5) bad("corep coeffs are [i, j, k, re, im]");
        const auto i = index_of(t[0], m, "corep");
        const auto k = index_of(t[1], m, "corep");
        const auto b = index_of(t[2], d, "corep");
        entries[i * m + k](static_cast<Eigen::Index>(b)) += Complex(number(t[3]), number(t[4]));
      }
      out.insert_or_assign(name, Corep(host, m, std::move(entries)));
    }
  } catch (const Json::exception& e) {
    bad(std::string("schema error: ") + e.what());
  }
  return out;
}

Json corep_to_json(const Corep& u) {
  Json coeffs = Json::array();
  const std::size_t d = u.host()->dim();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t k = 0; k < u.size(); ++k)
      for (std::size_t b = 0; b < d; ++b) sparse_push(coeffs, {i, k, b}, u.entry(i, k)(static_cast<Eigen::Index>(b)));
  return {{"size", u.size()}, {"coeffs", coeffs}};
}

namespace {

WordPoly poly_from_json(const Json& t, const Presentation& pres) {
  if (t.is_string()) return parse_poly(t.get<std::string>(), pres);
  if (!t.is_array()) bad("polynomial must be a string or a list of [coeff, word] terms");
  WordPoly p;
  for (const auto& term : t) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_string()) bad("terms are [coeff, word]");
    p += parse_poly(term[1].get<std::string>(), pres) * complex_from_json(term[0]);
  }
  return p;
}

WordPoly tensor_from_json(const Json& t, const Presentation& pres) {
  if (!t.is_array()) bad("delta images are lists of [coeff, left, right]");
  WordPoly p;
  for (const auto& term : t) {
    if (!term.is_array() || term.size() != 3 || !term[1].is_string() || !term[2].is_string()) {
      bad("delta terms are [coeff, left, right]");
    }
    const WordPoly left = parse_poly(term[1].get<std::string>(), pres);
    const WordPoly parsed = parse_poly(term[2].get<std::string>(), pres);
    WordPoly right;
    for (const auto& [w, c] : parsed.terms()) {
      Word w1 = w;
      for (auto& l : w1) l.leg = 1;
      right.add_term(w1, c);
    }
    p += left * right * complex_from_json(term[0]);
  }
  return p;
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
  if (spec_kind(j) != "presentation") bad("expected a presentation spec");
  try {
    if (j.contains("builtin")) {
      const std::string b = j["builtin"].get<std::string>();
      if (b == "suq2") return suq2_presentation(number(field(j, "q")));
      if (b == "sn_plus") {
        const Json& n = field(j, "n");
        if (!n.is_number_integer() || n.get<long long>() < 1) bad("n must be a positive integer");
        return sn_plus_presentation(n.get<std::size_t>());
      }
      bad("unknown builtin presentation " + b);
    }
    Presentation pres;
    pres.name = j.value("name", std::string("P"));
    pres.generators = field(j, "generators").get<std::vector<std::string>>();
    if (pres.generators.empty()) bad("no generators");
    if (j.contains("parameters"))
      for (const auto& [k, v] : j["parameters"].items()) pres.parameters[k] = number(v);
    for (const auto& r : field(j, "relations")) pres.relations.push_back(poly_from_json(r, pres));
    if (j.contains("rules")) {
      for (const auto& r : j["rules"]) {
        const WordPoly lhs = parse_poly(field(r, "lhs").get<std::string>(), pres);
        if (lhs.terms().size() != 1 || std::abs(lhs.terms().begin()->second - Complex(1.0)) > 0) {
          bad("rule left-hand sides must be single words");
        }
        pres.rules.push_back({lhs.terms().begin()->first, poly_from_json(field(r, "rhs"), pres)});
      }
    } else {
      pres.rules = complete_rules(pres.relations, j.value("completion_degree", std::size_t{3}));
    }
    if (j.contains("delta")) {
      pres.delta.resize(pres.generators.size());
      std::vector<bool> seen(pres.generators.size(), false);
      for (const auto& [g, img] : j["delta"].items()) {
        const auto k = pres.generator_index(g);
        pres.delta[k] = tensor_from_json(img, pres);
        seen[k] = true;
      }
      for (bool s : seen)
        if (!s) bad("delta must give an image for every generator");
    }
    return pres;
  } catch (const Json::exception& e) {
    bad(std::string("schema error: ") + e.what());
  }
}

IrrData irrdata_from_json(const Json& j, const Tolerance& tol) {
  if (spec_kind(j) != "irrdata") bad("expected an irrdata spec");
  try {
    if (j.contains("synthetic")) {
      std::vector<std::pair<std::size_t, double>> blocks;
      for (const auto& b : j["synthetic"]) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer()) bad("synthetic blocks are [n, t]");
        blocks.emplace_back(b[0].get<std::size_t>(), number(b[1]));
      }
      return synthetic_nonkac(blocks, tol);
    }
    std::vector<std::pair<std::string, CMatrix>> qs;
    std::size_t k = 0;
    for (const auto& b : field(j, "blocks")) {
      const std::string id = b.value("id", "irr" + std::to_string(k));
      qs.emplace_back(id, matrix_from_json(field(b, "q")));
      if (b.contains("n") && b["n"].get<long long>() != qs.back().second.rows()) {
        bad("block n differs from the size of q");
      }
      ++k;
    }
    return truncated_irrdata(qs, tol);
  } catch (const Json::exception& e) {
    bad(std::string("schema error: ") + e.what());
  }
}

MagicMatrix magic_from_json(const Json& j) {
  if (spec_kind(j) != "magic") bad("expected a magic spec");
  try {
    if (j.contains("block_example")) {
      const Json& b = j["block_example"];
      return magic_block_example(matrix_from_json(field(b, "p")), matrix_from_json(field(b, "q")));
    }
    MagicMatrix u;
    for (const auto& row : field(j, "entries")) {
      u.emplace_back();
      for (const auto& e : row) u.back().push_back(matrix_from_json(e));
    }
    if (u.empty()) bad("empty magic matrix");
    return u;
  } catch (const Json::exception& e) {
    bad(std::string("schema error: ") + e.what());
  }
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"residual", round12(c.residual)}, {"pass", c.pass}});
  return {{"passed", r.passed()}, {"max_residual", round12(r.max_residual())}, {"checks", checks}};
}

}  // namespace qg
