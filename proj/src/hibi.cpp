#include "hibi/hibi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hibi {

Polynomial JoinMeetBinomial::polynomial() const {
  return Polynomial::binomial(Monomial::var(a) * Monomial::var(b),
                              Monomial::var(meet) * Monomial::var(join));
}

std::vector<Polynomial> JoinMeetIdeal::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.polynomial());
  return out;
}

MonomialOrder JoinMeetIdeal::order() const {
  return MonomialOrder::degrevlex(linext_rank);
}

MonomialOrder JoinMeetIdeal::order_for(const std::vector<int>& extension,
                                       MonomialOrder::Kind kind) const {
  std::vector<int> rank(extension.size());
  for (size_t i = 0; i < extension.size(); ++i) rank[extension[i]] = static_cast<int>(i);
  return {kind, rank};
}

std::vector<std::string> JoinMeetIdeal::variable_names() const {
  std::vector<std::string> names;
  names.reserve(lattice.size());
  for (int i = 0; i < lattice.size(); ++i)
    names.push_back("x[" + lattice.base().label(i) + "]");
  return names;
}

namespace {

JoinMeetIdeal build_ideal(Lattice lat, std::vector<int> linext, bool distributive) {
  JoinMeetIdeal ideal;
  ideal.lattice = std::move(lat);
  ideal.distributive = distributive;
  ideal.linext = std::move(linext);
  ideal.linext_rank.assign(ideal.linext.size(), -1);
  for (size_t i = 0; i < ideal.linext.size(); ++i)
    ideal.linext_rank[ideal.linext[i]] = static_cast<int>(i);
  const Lattice& l = ideal.lattice;
  // one generator per unordered incomparable pair, ordered by the extension
  for (int ra = 0; ra < l.size(); ++ra)
    for (int rb = ra + 1; rb < l.size(); ++rb) {
      int a = ideal.linext[ra], b = ideal.linext[rb];
      if (l.base().comparable(a, b)) continue;
      ideal.generators.push_back({a, b, l.meet(a, b), l.join(a, b)});
    }
  return ideal;
}

}  // namespace

JoinMeetIdeal hibi_ideal(const DistributiveLattice& l) {
  // linear extension: ideals ordered by size, ties by irreducible mask
  std::vector<int> ext(l.size());
  std::iota(ext.begin(), ext.end(), 0);
  std::sort(ext.begin(), ext.end(), [&](int a, int b) {
    int pa = __builtin_popcountll(l.ideal_mask(a));
    int pb = __builtin_popcountll(l.ideal_mask(b));
    if (pa != pb) return pa < pb;
    return l.ideal_mask(a) < l.ideal_mask(b);
  });
  return build_ideal(l.lattice(), std::move(ext), true);
}

JoinMeetIdeal join_meet_ideal(const Lattice& l) {
  return build_ideal(l, l.base().linear_extension(), false);
}

bool semigroup_member(const SemigroupElement& h, const Poset& p) {
  if (static_cast<int>(h.w.size()) != p.size())
    throw invalid_input("exponent vector size differs from the poset");
  if (h.w0 < 0) return false;
  for (int i = 0; i < p.size(); ++i)
    if (h.w[i] < 0 || h.w[i] > h.w0) return false;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && h.w[i] < h.w[j]) return false;
  return true;
}

Int standard_monomial_count(const Lattice& l, int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  int n = l.size();
  std::vector<Int> ways(n, 1);  // multichains of current length ending here
  for (int step = 1; step < k; ++step) {
    std::vector<Int> next(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (l.base().leq(a, b)) next[b] += ways[a];
    ways = std::move(next);
  }
  Int total = 0;
  for (auto& v : ways) total += v;
  return total;
}

std::vector<std::vector<int>> standard_monomials(const Lattice& l, int k,
                                                 long long cap) {
  Int count = standard_monomial_count(l, k);
  if (count > cap) throw bound_exceeded("too many standard monomials to list");
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < l.size(); ++e) {
      if (!cur.empty() && !l.base().leq(cur.back(), e)) continue;
      cur.push_back(e);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

namespace {

GroebnerReport observations(const JoinMeetIdeal& ideal, const MonomialOrder& ord,
                            const BuchbergerLimits& limits) {
  GroebnerReport rep;
  auto gens = ideal.polynomials();
  auto gb = buchberger(gens, ord, limits);
  rep.basis_size = gb.size();

  std::vector<Polynomial> sorted_gens = gens;
  for (auto& g : sorted_gens) g = g.monic(ord);
  std::sort(sorted_gens.begin(), sorted_gens.end());
  std::vector<Polynomial> sorted_gb = gb;
  std::sort(sorted_gb.begin(), sorted_gb.end());
  rep.reduced_basis_equals_generators = sorted_gens == sorted_gb;

  auto ini = initial_ideal(gb, ord);
  rep.initial_ideal_squarefree = is_squarefree(ini);
  std::set<Monomial> expect;
  for (const auto& g : ideal.generators)
    expect.insert(Monomial::var(g.a) * Monomial::var(g.b));
  rep.initial_ideal_is_incomparable_products =
      expect == std::set<Monomial>(ini.begin(), ini.end());
  return rep;
}

}  // namespace

GroebnerReport verify_groebner_generators(const DistributiveLattice& l,
                                          const BuchbergerLimits& limits) {
  JoinMeetIdeal ideal = hibi_ideal(l);
  GroebnerReport rep = observations(ideal, ideal.order(), limits);
  if (!rep.ok())
    throw theorem_violated(
        "reduced Groebner basis of a distributive join-meet ideal differs "
        "from its generators");
  return rep;
}

GroebnerReport groebner_observations(const JoinMeetIdeal& ideal,
                                     const MonomialOrder& ord,
                                     const BuchbergerLimits& limits) {
  return observations(ideal, ord, limits);
}

GeneralizedHibi generalized_hibi_generators(const Poset& p, int r,
                                            long long max_size) {
  std::vector<std::vector<uint64_t>> tuples;
  GeneralizedHibi out{multichain_lattice(p, r, max_size, &tuples), {}, false};
  out.ideal = hibi_ideal(out.multichains);

  // Expansion check in the x_{k,l} variables: the monomial of a multichain
  // has exponent 1 at (k, l) exactly when element l enters at step k, that
  // is, lies in I_k \ I_{k-1} (with I_0 empty and I_r = P).
  int n = p.size();
  uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  auto exp_matrix = [&](int elem) {
    std::vector<uint64_t> rows(r);  // row k-1 = indicator of I_k \ I_{k-1}
    uint64_t prev = 0;
    for (int k = 1; k <= r; ++k) {
      uint64_t ik = (k == r) ? full : tuples[elem][k - 1];
      rows[k - 1] = ik & ~prev;
      prev = ik;
    }
    return rows;
  };
  auto add = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    // rows are 0/1 disjoint within one matrix, so count entries per cell
    std::vector<std::vector<int>> sum(r, std::vector<int>(n, 0));
    for (int k = 0; k < r; ++k)
      for (int x = 0; x < n; ++x)
        sum[k][x] = int((a[k] >> x) & 1u) + int((b[k] >> x) & 1u);
    return sum;
  };
  for (const auto& g : out.ideal.generators) {
    auto lhs = add(exp_matrix(g.a), exp_matrix(g.b));
    auto rhs = add(exp_matrix(g.meet), exp_matrix(g.join));
    if (lhs != rhs)
      throw theorem_violated("monomial identity fails for a multichain pair");
  }
  out.monomial_identity_verified = true;
  return out;
}

}  // namespace hibi
