#include "hibi/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace hibi {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  std::vector<std::pair<int, int>> merged;
  for (auto& [v, e] : exps_) {
    if (e == 0) continue;
    if (e < 0) throw invalid_input("negative exponent");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  exps_ = std::move(merged);
}

Monomial Monomial::var(int v, int e) { return Monomial({{v, e}}); }

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(int v) const {
  for (auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

bool Monomial::squarefree() const {
  for (auto& [v, e] : exps_)
    if (e > 1) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> out = a.exps_;
  out.insert(out.end(), b.exps_.begin(), b.exps_.end());
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0, j = 0;
  while (i < a.exps_.size() || j < b.exps_.size()) {
    if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first))
      out.push_back(a.exps_[i++]);
    else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first)
      out.push_back(b.exps_[j++]);
    else {
      out.emplace_back(a.exps_[i].first, std::max(a.exps_[i].second, b.exps_[j].second));
      ++i, ++j;
    }
  }
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0, j = 0;
  while (i < a.exps_.size() && j < b.exps_.size()) {
    if (a.exps_[i].first < b.exps_[j].first)
      ++i;
    else if (b.exps_[j].first < a.exps_[i].first)
      ++j;
    else {
      out.emplace_back(a.exps_[i].first, std::min(a.exps_[i].second, b.exps_[j].second));
      ++i, ++j;
    }
  }
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& b) const {
  size_t j = 0;
  for (auto& [v, e] : exps_) {
    while (j < b.exps_.size() && b.exps_[j].first < v) ++j;
    if (j == b.exps_.size() || b.exps_[j].first != v || b.exps_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& b) const {
  assert(divides(b));
  std::vector<std::pair<int, int>> out;
  size_t i = 0;
  for (auto& [v, e] : b.exps_) {
    int sub = 0;
    while (i < exps_.size() && exps_[i].first < v) ++i;
    if (i < exps_.size() && exps_[i].first == v) sub = exps_[i].second;
    if (e - sub > 0) out.emplace_back(v, e - sub);
  }
  return Monomial(std::move(out));
}

bool Monomial::coprime(const Monomial& b) const {
  size_t i = 0, j = 0;
  while (i < exps_.size() && j < b.exps_.size()) {
    if (exps_[i].first < b.exps_[j].first)
      ++i;
    else if (b.exps_[j].first < exps_[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> priority) {
  return {Kind::degrevlex, std::move(priority)};
}
MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
  return {Kind::lex, std::move(priority)};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  int n = static_cast<int>(priority.size());
  // materialize by rank (variable count is small everywhere this runs)
  std::vector<int> ea(n, 0), eb(n, 0);
  for (auto& [v, e] : a.exps()) ea[priority[v]] = e;
  for (auto& [v, e] : b.exps()) eb[priority[v]] = e;
  if (kind == Kind::degrevlex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // scan from the smallest variable rank; the monomial with more of the
    // first differing (smaller) variable is the smaller one
    for (int r = 0; r < n; ++r)
      if (ea[r] != eb[r]) return ea[r] > eb[r] ? -1 : 1;
    return 0;
  }
  for (int r = n - 1; r >= 0; --r)
    if (ea[r] != eb[r]) return ea[r] > eb[r] ? 1 : -1;
  return 0;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Monomial, Rat>> merged;
  for (auto& [m, c] : terms_) {
    if (!merged.empty() && merged.back().first == m)
      merged.back().second += c;
    else
      merged.emplace_back(m, c);
  }
  terms_.clear();
  for (auto& [m, c] : merged)
    if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Polynomial Polynomial::term(const Monomial& m, const Rat& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::binomial(const Monomial& plus, const Monomial& minus) {
  Polynomial p;
  p.terms_.emplace_back(plus, Rat(1));
  p.terms_.emplace_back(minus, Rat(-1));
  p.normalize();
  return p;
}

const std::pair<Monomial, Rat>& Polynomial::leading_term(const MonomialOrder& ord) const {
  assert(!terms_.empty());
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].first, terms_[best].first) > 0) best = i;
  return terms_[best];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.terms_ = a.terms_;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  out.normalize();
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.terms_ = a.terms_;
  out.terms_.reserve(out.terms_.size() + b.terms_.size());
  for (auto& [m, c] : b.terms_) out.terms_.emplace_back(m, -c);
  out.normalize();
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
  out.normalize();
  return out;
}

Polynomial Polynomial::scaled(const Monomial& m, const Rat& c) const {
  Polynomial out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (auto& [mm, cc] : terms_) out.terms_.emplace_back(mm * m, cc * c);
  out.normalize();
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  const Rat lc = leading_term(ord).second;
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (auto& [m, c] : terms_) out.terms_.emplace_back(m, c / lc);
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    if (i) s += " + ";
    s += c.str();
    for (auto& [v, e] : m.exps()) {
      s += "*" + var_names[v];
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) return Polynomial::zero();
  const auto& [lmf, lcf] = f.leading_term(ord);
  const auto& [lmg, lcg] = g.leading_term(ord);
  Monomial l = lcm(lmf, lmg);
  return f.scaled(lmf.divide_into(l), Rat(1) / lcf) -
         g.scaled(lmg.divide_into(l), Rat(1) / lcg);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& ord) {
  Polynomial h = f, remainder;
  while (!h.is_zero()) {
    const auto& [lm, lc] = h.leading_term(ord);
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      const auto& [lmg, lcg] = g.leading_term(ord);
      if (lmg.divides(lm)) {
        h = h - g.scaled(lmg.divide_into(lm), lc / lcg);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial::term(lm, lc);
      h = h - Polynomial::term(lm, lc);
    }
  }
  return remainder;
}

namespace {

void interreduce(std::vector<Polynomial>& G, const MonomialOrder& ord) {
  // drop generators whose leading term another one divides
  for (size_t i = 0; i < G.size();) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading_term(ord).first.divides(G[i].leading_term(ord).first))
        redundant = true;
    }
    if (redundant)
      G.erase(G.begin() + static_cast<long>(i));
    else
      ++i;
  }
  // tail-reduce each generator against the others, make monic
  for (size_t i = 0; i < G.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(G.size() - 1);
    for (size_t j = 0; j < G.size(); ++j)
      if (j != i) others.push_back(G[j]);
    G[i] = normal_form(G[i], others, ord).monic(ord);
  }
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_term(ord).first, b.leading_term(ord).first) < 0;
  });
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& ord,
                                   const BuchbergerLimits& limits) {
  if (static_cast<int>(ord.priority.size()) > limits.max_variables)
    throw bound_exceeded("variable count above the Groebner bound");
  std::vector<Polynomial> G;
  for (auto& f : gens)
    if (!f.is_zero()) G.push_back(f.monic(ord));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  long long processed = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (++processed > limits.max_pairs)
      throw bound_exceeded("Groebner pair queue limit reached");
    const Monomial& a = G[i].leading_term(ord).first;
    const Monomial& b = G[j].leading_term(ord).first;
    if (a.coprime(b)) continue;  // product criterion
    Polynomial s = normal_form(spoly(G[i], G[j], ord), G, ord);
    if (s.is_zero()) continue;
    G.push_back(s.monic(ord));
    for (size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  interreduce(G, ord);
  return G;
}

std::vector<Monomial> initial_ideal(std::span<const Polynomial> gb,
                                    const MonomialOrder& ord) {
  std::vector<Monomial> lead;
  for (const auto& g : gb)
    if (!g.is_zero()) lead.push_back(g.leading_term(ord).first);
  std::sort(lead.begin(), lead.end());
  lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < lead.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < lead.size() && !redundant; ++j)
      if (i != j && lead[j].divides(lead[i])) redundant = true;
    if (!redundant) out.push_back(lead[i]);
  }
  return out;
}

bool is_squarefree(std::span<const Monomial> monomials) {
  for (const auto& m : monomials)
    if (!m.squarefree()) return false;
  return true;
}

}  // namespace hibi
