#include "qg/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace qg {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

std::string cycle_label(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    s += "(";
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      s += std::to_string(y + 1);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

FiniteGroupSpec from_elements(std::string name, std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroupSpec g = FiniteGroupSpec::from_table(std::move(name), std::move(table));
  g.permutations = elems;
  g.labels.clear();
  for (const auto& p : elems) g.labels.push_back(cycle_label(p));
  g.validate();
  return g;
}

}  // namespace

FiniteGroupSpec cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  FiniteGroupSpec g = FiniteGroupSpec::from_table("Z" + std::to_string(n), std::move(table));
  g.labels.clear();
  for (std::size_t a = 0; a < n; ++a) g.labels.push_back(std::to_string(a));
  // rotation of the n-gon vertices
  for (std::size_t a = 0; a < n; ++a) {
    Perm p(n);
    for (std::size_t x = 0; x < n; ++x) p[x] = (x + a) % n;
    g.permutations.push_back(p);
  }
  g.validate();
  return g;
}

FiniteGroupSpec permutation_group(std::string name, const std::vector<Perm>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::size_t deg = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != deg) throw Error(ErrorKind::InvalidInput, "generators act on different sets");
    std::vector<std::size_t> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t x = 0; x < deg; ++x)
      if (s[x] != x) throw Error(ErrorKind::InvalidInput, "generator is not a permutation");
  }
  Perm id(deg);
  for (std::size_t x = 0; x < deg; ++x) id[x] = x;
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& s : generators) {
        Perm r = compose(s, p);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return from_elements(std::move(name), {seen.begin(), seen.end()});
}

FiniteGroupSpec symmetric_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "symmetric group on 0 points");
  Perm p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = x;
  std::vector<Perm> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_elements("S" + std::to_string(n), all);
}

FiniteGroupSpec dihedral_group_d4() {
  return permutation_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

FiniteGroupSpec quaternion_group() {
  // units +-1, +-i, +-j, +-k as (sign, axis), axis 0 = 1
  std::vector<std::pair<int, int>> elems;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) elems.emplace_back(sign, axis);
  // basis products: table[a][b] = (sign, axis) of e_a e_b
  const std::array<std::array<std::pair<int, int>, 4>, 4> prod{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto find = [&](int sign, int axis) {
    return static_cast<std::size_t>(
        std::find(elems.begin(), elems.end(), std::make_pair(sign, axis)) - elems.begin());
  };
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const auto [s, ax] = prod[static_cast<std::size_t>(elems[a].second)]
                               [static_cast<std::size_t>(elems[b].second)];
      table[a][b] = find(s * elems[a].first * elems[b].first, ax);
    }
  FiniteGroupSpec g = FiniteGroupSpec::from_table("Q8", std::move(table));
  g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // left regular action
  for (std::size_t a = 0; a < 8; ++a) {
    Perm p(8);
    for (std::size_t x = 0; x < 8; ++x) p[x] = g.cayley[a][x];
    g.permutations.push_back(p);
  }
  g.validate();
  return g;
}

FiniteGroupSpec group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "D4") return dihedral_group_d4();
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::size_t n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 12) return cyclic_group(n);
  }
  throw Error(ErrorKind::InvalidInput, "unknown group " + name);
}

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("Z" + std::to_string(n));
  for (const char* s : {"S3", "S4", "D4", "Q8"}) out.emplace_back(s);
  return out;
}

namespace {

std::vector<std::string> group_labels(const FiniteGroupSpec& g) {
  if (g.labels.size() == g.order) return g.labels;
  std::vector<std::string> out;
  for (std::size_t a = 0; a < g.order; ++a) out.push_back("g" + std::to_string(a));
  return out;
}

}  // namespace

HopfPtr group_algebra(const FiniteGroupSpec& g) {
  g.validate();
  const std::size_t n = g.order;
  const auto N = static_cast<Eigen::Index>(n);
  HopfData h;
  h.name = "C[" + g.name + "]";
  h.alg.dim = n;
  h.alg.labels = group_labels(g);
  h.alg.mult = CMatrix::Zero(N, N * N);
  h.alg.unit = CVector::Zero(N);
  h.alg.unit(static_cast<Eigen::Index>(g.identity)) = 1.0;
  h.alg.star = CMatrix::Zero(N, N);
  h.alg.gram = CMatrix::Identity(N, N);
  h.coalg.dim = n;
  h.coalg.delta = CMatrix::Zero(N * N, N);
  h.coalg.counit = CVector::Ones(N);
  CMatrix s = CMatrix::Zero(N, N);
  for (std::size_t a = 0; a < n; ++a) {
    const auto A = static_cast<Eigen::Index>(a);
    const auto inv = static_cast<Eigen::Index>(g.inverse[a]);
    for (std::size_t b = 0; b < n; ++b)
      h.alg.mult(static_cast<Eigen::Index>(g.mul(a, b)), static_cast<Eigen::Index>(a * n + b)) = 1.0;
    h.alg.star(inv, A) = 1.0;
    h.coalg.delta(A * N + A, A) = 1.0;
    s(inv, A) = 1.0;
  }
  h.antipode = s;
  return std::make_shared<const HopfData>(std::move(h));
}

HopfPtr function_algebra(const FiniteGroupSpec& g) {
  g.validate();
  const std::size_t n = g.order;
  const auto N = static_cast<Eigen::Index>(n);
  HopfData h;
  h.name = "C(" + g.name + ")";
  h.alg.dim = n;
  for (const auto& l : group_labels(g)) h.alg.labels.push_back("delta_" + l);
  h.alg.mult = CMatrix::Zero(N, N * N);
  h.alg.unit = CVector::Ones(N);
  h.alg.star = CMatrix::Identity(N, N);
  h.alg.gram = CMatrix::Identity(N, N);
  h.coalg.dim = n;
  h.coalg.delta = CMatrix::Zero(N * N, N);
  h.coalg.counit = CVector::Zero(N);
  h.coalg.counit(static_cast<Eigen::Index>(g.identity)) = 1.0;
  CMatrix s = CMatrix::Zero(N, N);
  for (std::size_t a = 0; a < n; ++a) {
    const auto A = static_cast<Eigen::Index>(a);
    h.alg.mult(A, A * N + A) = 1.0;
    s(static_cast<Eigen::Index>(g.inverse[a]), A) = 1.0;
    for (std::size_t b = 0; b < n; ++b)
      h.coalg.delta(static_cast<Eigen::Index>(a * n + b), static_cast<Eigen::Index>(g.mul(a, b))) = 1.0;
  }
  h.antipode = s;
  return std::make_shared<const HopfData>(std::move(h));
}

HopfPtr monoid_bialgebra() {
  // basis 1, z with z^2 = z, Delta z = z (x) z
  HopfData h;
  h.name = "monoid{1,z}";
  h.alg.dim = 2;
  h.alg.labels = {"1", "z"};
  h.alg.mult = CMatrix::Zero(2, 4);
  h.alg.mult(0, 0) = 1.0;
  h.alg.mult(1, 1) = 1.0;
  h.alg.mult(1, 2) = 1.0;
  h.alg.mult(1, 3) = 1.0;
  h.alg.unit = CVector::Zero(2);
  h.alg.unit(0) = 1.0;
  h.alg.star = CMatrix::Identity(2, 2);
  h.coalg.dim = 2;
  h.coalg.delta = CMatrix::Zero(4, 2);
  h.coalg.delta(0, 0) = 1.0;
  h.coalg.delta(3, 1) = 1.0;
  h.coalg.counit = CVector::Ones(2);
  return std::make_shared<const HopfData>(std::move(h));
}

Corep defining_corep(const HopfPtr& functions, const FiniteGroupSpec& g) {
  if (g.permutations.size() != g.order) {
    throw Error(ErrorKind::InvalidInput, "group " + g.name + " has no permutation action");
  }
  if (!functions || functions->dim() != g.order) {
    throw Error(ErrorKind::DimensionMismatch, "host is not the function algebra of " + g.name);
  }
  const std::size_t m = g.permutations.front().size();
  std::vector<CVector> entries(m * m, CVector::Zero(static_cast<Eigen::Index>(g.order)));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t j = 0; j < m; ++j) entries[g.permutations[a][j] * m + j](static_cast<Eigen::Index>(a)) = 1.0;
  return Corep(functions, m, std::move(entries));
}

MagicMatrix magic_block_example(const CMatrix& p, const CMatrix& q, const Tolerance& tol) {
  if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows()) {
    throw Error(ErrorKind::InvalidInput, "p and q must be square of equal size");
  }
  for (const CMatrix* x : {&p, &q}) {
    const double scale = std::max(1.0, max_abs(*x));
    if (!tol.accepts(max_abs(*x - x->adjoint()), scale) || !tol.accepts(max_abs(*x * *x - *x), scale)) {
      throw Error(ErrorKind::InvalidInput, "input is not a projection");
    }
  }
  const auto m = p.rows();
  const CMatrix id = CMatrix::Identity(m, m);
  const CMatrix z = CMatrix::Zero(m, m);
  return {{id - p, p, z, z}, {p, id - p, z, z}, {z, z, id - q, q}, {z, z, q, id - q}};
}

MagicMatrix permutation_magic(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  MagicMatrix u(n, std::vector<CMatrix>(n, CMatrix::Zero(1, 1)));
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n) throw Error(ErrorKind::InvalidInput, "not a permutation");
    u[perm[j]][j](0, 0) = 1.0;
  }
  return u;
}

CMatrix random_rank_one_projection(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  CVector v(static_cast<Eigen::Index>(m));
  for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v * v.adjoint();
}

namespace {

WordPoly gen(std::uint32_t index, bool star = false, std::uint8_t leg = 0) {
  return WordPoly::monomial({Letter{index, star, leg}});
}

std::vector<std::vector<std::uint32_t>> sn_indices(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> id(n, std::vector<std::uint32_t>(n));
  std::uint32_t next = 0;
  const std::size_t m = n - 1;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) id[a][b] = next++;
  for (std::size_t a = 0; a < m; ++a) id[a][m] = next++;
  for (std::size_t b = 0; b < m; ++b) id[m][b] = next++;
  id[m][m] = next++;
  return id;
}

}  // namespace

Presentation sn_plus_presentation(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "S_n^+ needs n >= 1");
  static std::mutex mu;
  static std::map<std::size_t, Presentation> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto id = sn_indices(n);
  Presentation pres;
  pres.name = "S" + std::to_string(n) + "+";
  pres.generators.resize(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      pres.generators[id[j][k]] = "u" + std::to_string(j + 1) + std::to_string(k + 1);
  const WordPoly one = WordPoly::constant(1.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const auto u = gen(id[j][k]);
      pres.relations.push_back(gen(id[j][k], true) - u);
      pres.relations.push_back(u * u - u);
    }
  for (std::size_t j = 0; j < n; ++j) {
    WordPoly row = one * -1.0, col = one * -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      row += gen(id[j][k]);
      col += gen(id[k][j]);
    }
    pres.relations.push_back(row);
    pres.relations.push_back(col);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (k == l) continue;
        pres.relations.push_back(gen(id[j][k]) * gen(id[j][l]));
        pres.relations.push_back(gen(id[k][j]) * gen(id[l][j]));
      }
  pres.rules = complete_rules(pres.relations, 3);
  pres.delta.resize(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      WordPoly d;
      for (std::size_t l = 0; l < n; ++l) d += gen(id[j][l], false, 0) * gen(id[l][k], false, 1);
      pres.delta[id[j][k]] = d;
    }
  cache.emplace(n, pres);
  return pres;
}

Presentation suq2_presentation(double q) {
  if (q == 0.0 || !std::isfinite(q)) throw Error(ErrorKind::InvalidInput, "q must be a nonzero real");
  Presentation pres;
  pres.name = "SU_q(2)";
  pres.generators = {"a", "g"};
  pres.parameters = {{"q", q}};
  const WordPoly a = gen(0), as = gen(0, true), g = gen(1), gs = gen(1, true);
  const WordPoly one = WordPoly::constant(1.0);
  pres.relations = {
      as * a + gs * g - one,
      a * as + gs * g * (q * q) - one,
      gs * g - g * gs,
      a * g - g * a * q,
      a * gs - gs * a * q,
  };
  auto rule = [](const WordPoly& lhs, const WordPoly& rhs) {
    return RewriteRule{lhs.terms().begin()->first, rhs};
  };
  pres.rules = {
      rule(g * a, a * g * (1.0 / q)),
      rule(gs * a, a * gs * (1.0 / q)),
      rule(g * as, as * g * q),
      rule(gs * as, as * gs * q),
      rule(g * gs, gs * g),
      rule(as * a, one - gs * g),
      rule(a * as, one - gs * g * (q * q)),
  };
  auto leg = [](std::uint32_t i, bool s, std::uint8_t l) { return gen(i, s, l); };
  pres.delta = {
      leg(0, false, 0) * leg(0, false, 1) - leg(1, true, 0) * leg(1, false, 1) * q,
      leg(1, false, 0) * leg(0, false, 1) + leg(0, true, 0) * leg(1, false, 1),
  };
  return pres;
}

IrrData synthetic_nonkac(const std::vector<std::pair<std::size_t, double>>& blocks, const Tolerance& tol) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "no blocks");
  std::vector<std::pair<std::string, CMatrix>> qs;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto [n, t] = blocks[k];
    if (n == 0) throw Error(ErrorKind::InvalidInput, "block of size 0");
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidInput, "t must be positive");
    CMatrix q = CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    if (n >= 2) {
      q(0, 0) = t;
      q(1, 1) = 1.0 / t;
    }
    qs.emplace_back("irr" + std::to_string(k), q);
  }
  return truncated_irrdata(qs, tol);
}

}  // namespace qg
