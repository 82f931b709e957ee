#include "qg/freestar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace qg {

// ---------------------------------------------------------------------------
// Words and polynomials

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].leg != b[i].leg) return a[i].leg < b[i].leg;
    if (a[i].rank() != b[i].rank()) return a[i].rank() < b[i].rank();
  }
  return false;
}

WordPoly WordPoly::constant(Complex c) { return monomial({}, c); }

WordPoly WordPoly::monomial(Word w, Complex c) {
  WordPoly p;
  p.add_term(w, c);
  return p;
}

std::size_t WordPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

double WordPoly::max_coeff() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void WordPoly::add_term(const Word& w, Complex c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (std::abs(c) > kDrop) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= kDrop) terms_.erase(it);
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WordPoly WordPoly::operator+(const WordPoly& o) const {
  WordPoly r = *this;
  r += o;
  return r;
}

WordPoly WordPoly::operator-(const WordPoly& o) const {
  WordPoly r = *this;
  r -= o;
  return r;
}

WordPoly WordPoly::operator*(const WordPoly& o) const {
  WordPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

WordPoly WordPoly::operator*(Complex c) const {
  WordPoly r;
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

WordPoly WordPoly::star() const {
  WordPoly r;
  for (const auto& [w, c] : terms_) {
    Word s(w.rbegin(), w.rend());
    for (auto& l : s) l.star = !l.star;
    r.add_term(s, std::conj(c));
  }
  return r;
}

bool WordPoly::operator==(const WordPoly& o) const {
  WordPoly d = *this - o;
  return d.max_coeff() <= 1e-9;
}

std::uint32_t Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) throw Error(ErrorKind::InvalidInput, "unknown generator " + name);
  return static_cast<std::uint32_t>(it - generators.begin());
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

bool same_letter(const Letter& a, const Letter& b) { return a.gen == b.gen && a.star == b.star; }

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!same_letter(w[pos + k], lhs[k])) return false;
  return true;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (const auto& l : w) h = h * 1000003u + l.rank() * 4u + l.leg;
    return h;
  }
};

class Rewriter {
 public:
  Rewriter(const std::vector<RewriteRule>& rules, std::size_t max_steps)
      : rules_(rules), max_steps_(max_steps) {}

  WordPoly reduce(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) out += word(w) * c;
    return out;
  }

  const WordPoly& word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    if (++steps_ > max_steps_ || depth_ > kMaxDepth) {
      throw Error(ErrorKind::StepLimitExceeded, "rewriting did not terminate");
    }
    ++depth_;
    WordPoly result;
    bool rewritten = false;
    for (std::size_t pos = 0; pos < w.size() && !rewritten; ++pos) {
      for (const auto& rule : rules_) {
        if (!matches_at(w, pos, rule.lhs)) continue;
        for (const auto& [t, c] : rule.rhs.terms()) {
          Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), t.begin(), t.end());
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()),
                      w.end());
          for (auto& l : next) l.leg = 0;
          result += word(next) * c;
        }
        rewritten = true;
        break;
      }
    }
    if (!rewritten) result = WordPoly::monomial(w);
    --depth_;
    return cache_.emplace(w, std::move(result)).first->second;
  }

 private:
  static constexpr std::size_t kMaxDepth = 20000;
  const std::vector<RewriteRule>& rules_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::size_t depth_ = 0;
  std::unordered_map<Word, WordPoly, WordHash> cache_;
};

Word with_leg(Word w, std::uint8_t leg) {
  for (auto& l : w) l.leg = leg;
  return w;
}

}  // namespace

WordPoly normal_form(const WordPoly& p, const Presentation& pres, std::size_t max_steps) {
  Rewriter r(pres.rules, max_steps);
  WordPoly base;
  for (const auto& [w, c] : p.terms()) base.add_term(with_leg(w, 0), c);
  return r.reduce(base);
}

WordPoly tensor_normal_form(const WordPoly& p, const Presentation& pres, std::size_t max_steps) {
  Rewriter r(pres.rules, max_steps);
  WordPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word w0, w1;
    for (const auto& l : w) (l.leg == 0 ? w0 : w1).push_back(l);
    const WordPoly left = r.word(with_leg(w0, 0));
    const WordPoly right = r.word(with_leg(w1, 0));
    for (const auto& [a, ca] : left.terms())
      for (const auto& [b, cb] : right.terms()) {
        Word t = a;
        const Word b1 = with_leg(b, 1);
        t.insert(t.end(), b1.begin(), b1.end());
        out.add_term(t, c * ca * cb);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and printing

WordPoly parse_poly(const std::string& text, const Presentation& pres) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> WordPoly {
    throw Error(ErrorKind::InvalidInput, "cannot parse '" + text + "': " + why);
  };
  WordPoly total;
  bool expect_term = true;
  double sign = 1.0;
  skip();
  if (pos == text.size()) fail("empty expression");
  while (true) {
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -sign : sign;
      ++pos;
      continue;
    }
    if (!expect_term) break;
    Complex coeff = sign;
    Word word;
    bool any = false;
    while (true) {
      skip();
      if (pos >= text.size() || text[pos] == '+' || text[pos] == '-') break;
      const char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        std::size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(text.substr(pos), &used);
        } catch (const std::exception&) {
          fail("bad number");
        }
        coeff *= v;
        pos += used;
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
          ++end;
        const std::string name = text.substr(pos, end - pos);
        pos = end;
        bool star = false;
        if (pos < text.size() && text[pos] == '*') {
          star = true;
          ++pos;
        }
        if (auto it = pres.parameters.find(name); it != pres.parameters.end() && !star) {
          coeff *= it->second;
        } else {
          word.push_back({pres.generator_index(name), star, 0});
        }
        any = true;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
    }
    if (!any) fail("missing term");
    total.add_term(word, coeff);
    sign = 1.0;
    skip();
    if (pos >= text.size()) break;
  }
  return total;
}

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string format_word(const Word& w, const Presentation& pres) {
  std::string s;
  std::uint8_t leg = w.empty() ? 0 : w.front().leg;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += w[i].leg != leg ? " (x) " : " ";
    leg = w[i].leg;
    s += w[i].gen < pres.generators.size() ? pres.generators[w[i].gen]
                                           : "x" + std::to_string(w[i].gen);
    if (w[i].star) s += "*";
  }
  if (!w.empty() && w.front().leg == 1) s = "1 (x) " + s;
  if (!w.empty() && w.back().leg == 0 && std::any_of(w.begin(), w.end(), [](auto& l) { return l.leg; }))
    s += " (x) 1";
  return s;
}

}  // namespace

std::string to_string(const WordPoly& p, const Presentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool real = std::abs(c.imag()) <= WordPoly::kDrop;
    std::string mag;
    bool negative = false;
    if (real) {
      negative = c.real() < 0;
      const double a = std::abs(c.real());
      if (std::abs(a - 1.0) > 1e-15 || w.empty()) mag = format_number(a);
    } else {
      mag = "(" + format_number(c.real()) + (c.imag() < 0 ? "-" : "+") +
            format_number(std::abs(c.imag())) + "i)";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body = mag;
    if (!w.empty()) body += (mag.empty() ? "" : " ") + format_word(w, pres);
    out += body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Completion and confluence

namespace {

std::pair<Word, Complex> lead(const WordPoly& p) {
  const auto& t = *p.terms().rbegin();
  return {t.first, t.second};
}

RewriteRule to_rule(const WordPoly& p) {
  auto [w, c] = lead(p);
  WordPoly rhs;
  for (const auto& [t, v] : p.terms())
    if (!(t == w)) rhs.add_term(t, -v / c);
  return {w, rhs};
}

bool contains(const Word& big, const Word& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i + small.size() <= big.size(); ++i)
    if (matches_at(big, i, small)) return true;
  return false;
}

WordPoly wrap(const Word& pre, const WordPoly& p, const Word& post) {
  WordPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word t = pre;
    t.insert(t.end(), w.begin(), w.end());
    t.insert(t.end(), post.begin(), post.end());
    r.add_term(t, c);
  }
  return r;
}

WordPoly rule_poly(const RewriteRule& r) { return WordPoly::monomial(r.lhs) - r.rhs; }

// S-polynomials of the overlaps a.lhs = u v, b.lhs = v w, |v| >= 1, and of
// b.lhs occurring inside a.lhs.
std::vector<std::pair<Word, WordPoly>> ambiguities(const RewriteRule& a, const RewriteRule& b,
                                                   std::size_t cap) {
  std::vector<std::pair<Word, WordPoly>> out;
  const Word& la = a.lhs;
  const Word& lb = b.lhs;
  for (std::size_t k = 1; k < std::min(la.size(), lb.size()) + 0; ++k) {
    if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(), lb.begin(), same_letter))
      continue;
    Word w = la;
    w.insert(w.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    if (w.size() > cap) continue;
    const Word tail(lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    const Word head(la.begin(), la.end() - static_cast<std::ptrdiff_t>(k));
    out.emplace_back(w, wrap({}, a.rhs, tail) - wrap(head, b.rhs, {}));
  }
  if (lb.size() < la.size() && la.size() <= cap) {
    for (std::size_t i = 0; i + lb.size() <= la.size(); ++i) {
      if (!matches_at(la, i, lb)) continue;
      const Word head(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(i));
      const Word tail(la.begin() + static_cast<std::ptrdiff_t>(i + lb.size()), la.end());
      out.emplace_back(la, a.rhs - wrap(head, b.rhs, tail));
    }
  }
  return out;
}

}  // namespace

std::vector<RewriteRule> complete_rules(const std::vector<WordPoly>& relations,
                                        std::size_t degree_cap) {
  std::vector<RewriteRule> rules;
  std::vector<WordPoly> pending(relations.begin(), relations.end());
  const WordOrder less;
  std::size_t guard = 0;
  while (!pending.empty()) {
    if (++guard > 1000000) throw Error(ErrorKind::StepLimitExceeded, "completion did not settle");
    auto smallest = std::min_element(pending.begin(), pending.end(), [&](const auto& x, const auto& y) {
      if (x.is_zero() || y.is_zero()) return x.is_zero() && !y.is_zero();
      return less(lead(x).first, lead(y).first);
    });
    WordPoly p = std::move(*smallest);
    pending.erase(smallest);
    p = Rewriter(rules, 10000000).reduce(p);
    if (p.is_zero() || lead(p).first.size() > degree_cap) continue;
    RewriteRule fresh = to_rule(p);
    std::vector<RewriteRule> keep;
    for (auto& r : rules) {
      if (contains(r.lhs, fresh.lhs)) {
        pending.push_back(rule_poly(r));
      } else {
        keep.push_back(std::move(r));
      }
    }
    rules = std::move(keep);
    rules.push_back(fresh);
    for (const auto& r : rules) {
      for (auto& [w, s] : ambiguities(fresh, r, degree_cap)) pending.push_back(std::move(s));
      if (&r != &rules.back())
        for (auto& [w, s] : ambiguities(r, fresh, degree_cap)) pending.push_back(std::move(s));
    }
  }
  // right-hand sides fully reduced
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::vector<RewriteRule> others;
    for (std::size_t j = 0; j < rules.size(); ++j)
      if (j != i) others.push_back(rules[j]);
    rules[i].rhs = Rewriter(others, 10000000).reduce(rules[i].rhs);
  }
  std::sort(rules.begin(), rules.end(),
            [&](const RewriteRule& a, const RewriteRule& b) { return less(a.lhs, b.lhs); });
  return rules;
}

std::vector<std::string> confluence_failures(const Presentation& pres, std::size_t max_degree) {
  std::vector<std::string> out;
  for (const auto& a : pres.rules)
    for (const auto& b : pres.rules)
      for (const auto& [w, s] : ambiguities(a, b, max_degree)) {
        if (!normal_form(s, pres).is_zero()) out.push_back(to_string(WordPoly::monomial(w), pres));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Representations

VerificationReport validate_magic(const std::vector<std::vector<CMatrix>>& u, const Tolerance& tol) {
  const std::size_t n = u.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty magic matrix");
  for (const auto& row : u)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "magic matrix is not square");
  const auto m = u[0][0].rows();
  for (const auto& row : u)
    for (const auto& e : row)
      if (e.rows() != m || e.cols() != m) {
        throw Error(ErrorKind::DimensionMismatch, "magic entries differ in shape");
      }
  const CMatrix id = CMatrix::Identity(m, m);
  double sa = 0.0, idem = 0.0, rows = 0.0, cols = 0.0, rorth = 0.0, corth = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    CMatrix rs = CMatrix::Zero(m, m), cs = CMatrix::Zero(m, m);
    for (std::size_t k = 0; k < n; ++k) {
      const CMatrix& p = u[j][k];
      sa = std::max(sa, max_abs(p - p.adjoint()));
      idem = std::max(idem, max_abs(p * p - p));
      rs += u[j][k];
      cs += u[k][j];
      for (std::size_t l = 0; l < n; ++l) {
        if (l == k) continue;
        rorth = std::max(rorth, max_abs(u[j][k] * u[j][l]));
        corth = std::max(corth, max_abs(u[k][j] * u[l][j]));
      }
    }
    rows = std::max(rows, max_abs(rs - id));
    cols = std::max(cols, max_abs(cs - id));
  }
  VerificationReport rep;
  rep.add("selfadjoint_entries", sa, tol);
  rep.add("idempotent_entries", idem, tol);
  rep.add("row_sums", rows, tol);
  rep.add("column_sums", cols, tol);
  rep.add("row_orthogonality", rorth, tol);
  rep.add("column_orthogonality", corth, tol);
  return rep;
}

namespace {

CMatrix evaluate(const WordPoly& p, const std::vector<CMatrix>& gens, Eigen::Index m) {
  CMatrix out = CMatrix::Zero(m, m);
  for (const auto& [w, c] : p.terms()) {
    CMatrix t = CMatrix::Identity(m, m);
    for (const auto& l : w) t = t * (l.star ? CMatrix(gens[l.gen].adjoint()) : gens[l.gen]);
    out += c * t;
  }
  return out;
}

}  // namespace

VerificationReport eval_hom(const Presentation& pres, const std::map<std::string, CMatrix>& assignment,
                            const Tolerance& tol) {
  std::vector<CMatrix> gens;
  Eigen::Index m = -1;
  for (const auto& g : pres.generators) {
    auto it = assignment.find(g);
    if (it == assignment.end()) throw Error(ErrorKind::InvalidInput, "no matrix for generator " + g);
    if (m < 0) m = it->second.rows();
    if (it->second.rows() != m || it->second.cols() != m) {
      throw Error(ErrorKind::DimensionMismatch, "generator matrices differ in shape");
    }
    gens.push_back(it->second);
  }
  VerificationReport rep;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const double res = max_abs(evaluate(pres.relations[r], gens, m));
    rep.add("relation_" + std::to_string(r), res, tol);
  }
  return rep;
}

VerificationReport delta_well_defined(const Presentation& pres, std::size_t degree_cap,
                                      std::size_t max_steps) {
  return delta_well_defined(pres, pres.delta, degree_cap, max_steps);
}

VerificationReport delta_well_defined(const Presentation& pres, const std::vector<WordPoly>& delta,
                                      std::size_t degree_cap, std::size_t max_steps) {
  if (delta.size() != pres.generators.size()) {
    throw Error(ErrorKind::InvalidInput, "coproduct must give one image per generator");
  }
  std::vector<WordPoly> images_star;
  for (const auto& d : delta) images_star.push_back(d.star());
  VerificationReport rep;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    WordPoly image;
    bool too_long = false;
    for (const auto& [w, c] : pres.relations[r].terms()) {
      WordPoly t = WordPoly::constant(c);
      for (const auto& l : w) t = t * (l.star ? images_star[l.gen] : delta[l.gen]);
      if (t.degree() > degree_cap) too_long = true;
      image += t;
    }
    const std::string name = "delta_relation_" + std::to_string(r);
    if (too_long) {
      rep.add(name + "_above_degree_cap", INFINITY, false);
      continue;
    }
    const WordPoly nf = tensor_normal_form(image, pres, max_steps);
    rep.add(name, nf.max_coeff(), nf.is_zero());
  }
  return rep;
}

}  // namespace qg
