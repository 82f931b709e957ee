#include "qg/group.hpp"

#include "qg/tenscore.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace qg {

FiniteGroupSpec FiniteGroupSpec::from_table(std::string name,
                                            std::vector<std::vector<std::size_t>> table) {
  FiniteGroupSpec g;
  g.name = std::move(name);
  g.order = table.size();
  g.cayley = std::move(table);
  if (g.order == 0) throw Error(ErrorKind::InvalidInput, "empty Cayley table");
  for (const auto& row : g.cayley) {
    if (row.size() != g.order) throw Error(ErrorKind::InvalidInput, "Cayley table is not square");
    for (auto v : row) {
      if (v >= g.order) throw Error(ErrorKind::InvalidInput, "Cayley entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < g.order && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < g.order && ok; ++a) ok = g.cayley[e][a] == a && g.cayley[a][e] == a;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidInput, "Cayley table has no identity");
  g.inverse.assign(g.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) {
      if (g.cayley[a][b] == g.identity) g.inverse[a] = b;
    }
    if (g.inverse[a] == g.order) throw Error(ErrorKind::InvalidInput, "element without inverse");
  }
  for (std::size_t a = 0; a < g.order; ++a) g.labels.push_back(std::to_string(a));
  return g;
}

void FiniteGroupSpec::validate() const {
  if (order == 0 || cayley.size() != order) throw Error(ErrorKind::InvalidInput, "bad order");
  for (const auto& row : cayley) {
    if (row.size() != order) throw Error(ErrorKind::InvalidInput, "Cayley table is not square");
    std::vector<bool> seen(order, false);
    for (auto v : row) {
      if (v >= order || seen[v]) throw Error(ErrorKind::InvalidInput, "row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    std::vector<bool> seen(order, false);
    for (std::size_t a = 0; a < order; ++a) {
      if (seen[cayley[a][b]]) throw Error(ErrorKind::InvalidInput, "column is not a permutation");
      seen[cayley[a][b]] = true;
    }
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw Error(ErrorKind::InvalidInput, "Cayley table is not associative");
  if (identity >= order) throw Error(ErrorKind::InvalidInput, "identity out of range");
  for (std::size_t a = 0; a < order; ++a) {
    if (cayley[identity][a] != a || cayley[a][identity] != a)
      throw Error(ErrorKind::InvalidInput, "identity is not neutral");
  }
  if (inverse.size() != order) throw Error(ErrorKind::InvalidInput, "inverse map has wrong size");
  for (std::size_t a = 0; a < order; ++a) {
    if (inverse[a] >= order || cayley[a][inverse[a]] != identity ||
        cayley[inverse[a]][a] != identity)
      throw Error(ErrorKind::InvalidInput, "inverse map inconsistent");
  }
  if (!labels.empty() && labels.size() != order)
    throw Error(ErrorKind::InvalidInput, "label count differs from order");
  if (!permutations.empty()) {
    if (permutations.size() != order) throw Error(ErrorKind::InvalidInput, "permutation count");
    const auto deg = permutations.front().size();
    for (std::size_t a = 0; a < order; ++a) {
      if (permutations[a].size() != deg) throw Error(ErrorKind::InvalidInput, "permutation degree");
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t x = 0; x < deg; ++x)
          if (permutations[cayley[a][b]][x] != permutations[a][permutations[b][x]])
            throw Error(ErrorKind::InvalidInput, "permutations do not realise the table");
    }
  }
}

bool FiniteGroupSpec::is_abelian() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (cayley[a][b] != cayley[b][a]) return false;
  return true;
}

namespace {

std::size_t element_order(const FiniteGroupSpec& g, std::size_t a) {
  std::size_t k = 1;
  for (std::size_t x = a; x != g.identity; x = g.mul(x, a)) ++k;
  return k;
}

std::vector<std::size_t> generating_set(const FiniteGroupSpec& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> in(g.order, false);
  in[g.identity] = true;
  std::size_t covered = 1;
  while (covered < g.order) {
    std::size_t pick = 0;
    while (in[pick]) ++pick;
    gens.push_back(pick);
    std::deque<std::size_t> queue;
    for (std::size_t a = 0; a < g.order; ++a)
      if (in[a]) queue.push_back(a);
    while (!queue.empty()) {
      auto a = queue.front();
      queue.pop_front();
      for (auto s : gens) {
        auto b = g.mul(a, s);
        if (!in[b]) {
          in[b] = true;
          ++covered;
          queue.push_back(b);
        }
      }
    }
  }
  return gens;
}

// Extends generator images to a map on all of `a`; nullopt on inconsistency.
std::optional<std::vector<std::size_t>> extend(const FiniteGroupSpec& a, const FiniteGroupSpec& b,
                                               const std::vector<std::size_t>& gens,
                                               const std::vector<std::size_t>& images) {
  std::vector<std::size_t> phi(a.order, b.order);
  phi[a.identity] = b.identity;
  std::deque<std::size_t> queue{a.identity};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = a.mul(x, gens[k]);
      auto img = b.mul(phi[x], images[k]);
      if (phi[y] == b.order) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

}  // namespace

bool is_isomorphism(const FiniteGroupSpec& a, const FiniteGroupSpec& b,
                    const std::vector<std::size_t>& phi) {
  if (a.order != b.order || phi.size() != a.order) return false;
  std::vector<bool> hit(b.order, false);
  for (auto v : phi) {
    if (v >= b.order || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t x = 0; x < a.order; ++x)
    for (std::size_t y = 0; y < a.order; ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupSpec& a,
                                                         const FiniteGroupSpec& b) {
  if (a.order != b.order) return std::nullopt;
  const auto gens = generating_set(a);
  std::vector<std::size_t> gen_order;
  for (auto s : gens) gen_order.push_back(element_order(a, s));
  std::vector<std::size_t> b_order(b.order);
  for (std::size_t y = 0; y < b.order; ++y) b_order[y] = element_order(b, y);

  std::vector<std::size_t> images(gens.size());
  std::optional<std::vector<std::size_t>> result;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      auto phi = extend(a, b, gens, images);
      if (phi && is_isomorphism(a, b, *phi)) {
        result = std::move(phi);
        return true;
      }
      return false;
    }
    for (std::size_t y = 0; y < b.order; ++y) {
      if (b_order[y] != gen_order[k]) continue;
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  search(0);
  return result;
}

}  // namespace qg
