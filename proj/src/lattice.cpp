#include "hibi/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hibi {

Lattice Lattice::from_poset(const Poset& p) {
  int n = p.size();
  if (n == 0) throw invalid_input("a lattice must be nonempty");
  Lattice l;
  l.base_ = p;
  l.join_.assign(static_cast<size_t>(n) * n, -1);
  l.meet_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int z = 0; z < n; ++z) {
        if (p.leq(a, z) && p.leq(b, z)) {
          bool least = true;
          for (int w = 0; w < n && least; ++w)
            if (p.leq(a, w) && p.leq(b, w) && !p.leq(z, w)) least = false;
          if (least) lub = z;
        }
        if (p.leq(z, a) && p.leq(z, b)) {
          bool greatest = true;
          for (int w = 0; w < n && greatest; ++w)
            if (p.leq(w, a) && p.leq(w, b) && !p.leq(w, z)) greatest = false;
          if (greatest) glb = z;
        }
      }
      if (lub < 0)
        throw invalid_input("not a lattice: no join for '" + p.label(a) +
                            "', '" + p.label(b) + "'");
      if (glb < 0)
        throw invalid_input("not a lattice: no meet for '" + p.label(a) +
                            "', '" + p.label(b) + "'");
      l.join_[l.idx(a, b)] = l.join_[l.idx(b, a)] = lub;
      l.meet_[l.idx(a, b)] = l.meet_[l.idx(b, a)] = glb;
    }
  for (int a = 0; a < n; ++a) {
    if (p.is_minimal(a)) {
      if (l.bottom_ >= 0 && l.bottom_ != a)
        throw invalid_input("not a lattice: two minimal elements");
      l.bottom_ = a;
    }
    if (p.is_maximal(a)) {
      if (l.top_ >= 0 && l.top_ != a)
        throw invalid_input("not a lattice: two maximal elements");
      l.top_ = a;
    }
  }
  return l;
}

bool is_distributive(const Lattice& l, Triple* witness) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z))) {
          if (witness) *witness = {x, y, z};
          return false;
        }
  return true;
}

namespace {

// longest-path rank from bottom; valid when the lattice is graded
std::vector<int> rank_from_bottom(const Lattice& l) {
  const Poset& p = l.base();
  std::vector<int> rho(p.size(), 0);
  for (int x : p.linear_extension())
    for (int y : p.lower_covers(x)) rho[x] = std::max(rho[x], rho[y] + 1);
  return rho;
}

}  // namespace

ModularityReport is_modular(const Lattice& l) {
  ModularityReport rep;
  int n = l.size();

  rep.by_rank_condition = is_pure(l.base());
  if (rep.by_rank_condition) {
    auto rho = rank_from_bottom(l);
    for (int x = 0; x < n && rep.by_rank_condition; ++x)
      for (int y = 0; y < n; ++y)
        if (rho[x] + rho[y] != rho[l.meet(x, y)] + rho[l.join(x, y)]) {
          rep.by_rank_condition = false;
          rep.rank_witness = Triple{x, y, -1};
          break;
        }
  }

  rep.by_pentagon_freeness = true;
  for (int a = 0; a < n && rep.by_pentagon_freeness; ++a)
    for (int b = 0; b < n && rep.by_pentagon_freeness; ++b) {
      if (!l.base().less(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (l.base().comparable(a, c) || l.base().comparable(b, c)) continue;
        if (l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c)) {
          rep.by_pentagon_freeness = false;
          rep.pentagon_witness = Triple{a, b, c};
          break;
        }
      }
    }

  if (rep.by_rank_condition != rep.by_pentagon_freeness)
    throw theorem_violated("modularity characterizations disagree");
  rep.modular = rep.by_pentagon_freeness;
  return rep;
}

std::optional<Triple> find_diamond(const Lattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (l.base().comparable(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (l.base().comparable(x, z) || l.base().comparable(y, z)) continue;
        int m = l.meet(x, y), j = l.join(x, y);
        if (l.meet(x, z) == m && l.meet(y, z) == m && l.join(x, z) == j &&
            l.join(y, z) == j)
          return Triple{x, y, z};
      }
    }
  return std::nullopt;
}

std::pair<Poset, std::vector<int>> join_irreducibles(const Lattice& l) {
  std::vector<int> elems;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    if (l.base().lower_covers(x).size() == 1) elems.push_back(x);
  }
#ifndef NDEBUG
  // definitional cross-check: x != bottom and x = y v z forces x in {y, z}
  for (int x = 0; x < l.size(); ++x) {
    bool by_def = x != l.bottom();
    for (int y = 0; y < l.size() && by_def; ++y)
      for (int z = 0; z < l.size(); ++z)
        if (y != x && z != x && l.join(y, z) == x) {
          by_def = false;
          break;
        }
    bool by_covers = x != l.bottom() && l.base().lower_covers(x).size() == 1;
    assert(by_def == by_covers);
  }
#endif
  return {subposet(l.base(), elems), elems};
}

DistributiveLattice DistributiveLattice::from_lattice(Lattice l) {
  Triple w;
  if (!is_distributive(l, &w))
    throw invalid_input("lattice is not distributive (witness: " +
                        l.base().label(w[0]) + ", " + l.base().label(w[1]) +
                        ", " + l.base().label(w[2]) + ")");
  DistributiveLattice dl;
  auto [ji, elems] = join_irreducibles(l);
  if (ji.size() > 63) throw bound_exceeded("more than 63 join-irreducibles");
  dl.ji_ = std::move(ji);
  dl.ji_elems_ = std::move(elems);
  int n = l.size();
  dl.masks_.assign(n, 0);
  for (int e = 0; e < n; ++e)
    for (size_t k = 0; k < dl.ji_elems_.size(); ++k)
      if (l.base().leq(dl.ji_elems_[k], e)) dl.masks_[e] |= uint64_t{1} << k;
  // Birkhoff correspondence: must be injective and an order isomorphism
  // onto the down-sets of the irreducible poset.
  std::set<uint64_t> distinct(dl.masks_.begin(), dl.masks_.end());
  if (static_cast<int>(distinct.size()) != n)
    throw theorem_violated("irreducible down-sets fail to separate elements");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l.base().leq(a, b) != ((dl.masks_[a] & ~dl.masks_[b]) == 0))
        throw theorem_violated("irreducible down-set map is not an order isomorphism");
  long long ideal_total = count_ideals(dl.ji_, n + 1);
  if (ideal_total != n)
    throw theorem_violated("element count differs from the ideal count of the irreducible poset");
  dl.lat_ = std::move(l);
  return dl;
}

namespace {

std::string ideal_label(const Poset& p, uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < p.size(); ++i)
    if (mask >> i & 1u) {
      if (!first) s += ",";
      s += p.label(i);
      first = false;
    }
  return s + "}";
}

}  // namespace

DistributiveLattice DistributiveLattice::ideal_lattice(const Poset& p,
                                                       long long max_size) {
  if (p.size() > 63) throw bound_exceeded("ideal lattice limited to 63-element posets");
  auto masks = ideal_masks(p, max_size);
  int n = static_cast<int>(masks.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto m : masks) labels.push_back(ideal_label(p, m));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = (masks[i] & ~masks[j]) == 0;
  Lattice l = Lattice::from_poset(Poset::from_leq(labels, std::move(leq)));
  // joins and meets must agree with union and intersection
  std::map<uint64_t, int> pos;
  for (int i = 0; i < n; ++i) pos[masks[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (l.join(i, j) != pos[masks[i] | masks[j]] ||
          l.meet(i, j) != pos[masks[i] & masks[j]])
        throw theorem_violated("ideal lattice joins/meets differ from union/intersection");
    }
  DistributiveLattice dl = from_lattice(std::move(l));
  // round trip: the irreducible poset is isomorphic to p
  if (!isomorphic(dl.ji(), p))
    throw theorem_violated("irreducibles of the ideal lattice fail to recover the poset");
  return dl;
}

int DistributiveLattice::element_of_mask(uint64_t mask) const {
  for (int e = 0; e < size(); ++e)
    if (masks_[e] == mask) return e;
  throw invalid_input("no element with the requested irreducible down-set");
}

DistributiveLattice multichain_lattice(const Poset& p, int r, long long max_size,
                                       std::vector<std::vector<uint64_t>>* tuples_out) {
  if (r < 2) throw invalid_input("multichain lattices need r >= 2");
  auto ideals = ideal_masks(p, max_size);
  // nested (r-1)-tuples of ideals
  std::vector<std::vector<uint64_t>> tuples;
  std::vector<uint64_t> cur(r - 1);
  std::function<void(int)> rec = [&](int k) {
    if (k == r - 1) {
      tuples.push_back(cur);
      if (static_cast<long long>(tuples.size()) > max_size)
        throw bound_exceeded("multichain lattice larger than the configured bound");
      return;
    }
    for (uint64_t m : ideals) {
      if (k > 0 && (cur[k - 1] & ~m) != 0) continue;
      cur[k] = m;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(tuples.begin(), tuples.end());
  int n = static_cast<int>(tuples.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto& t : tuples) {
    std::string s;
    for (int k = 0; k < r - 1; ++k) {
      if (k) s += "<=";
      s += ideal_label(p, t[k]);
    }
    labels.push_back(s);
  }
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int k = 0; k < r - 1 && le; ++k)
        if (tuples[i][k] & ~tuples[j][k]) le = false;
      leq[i][j] = le;
    }
  Lattice l = Lattice::from_poset(Poset::from_leq(labels, std::move(leq)));
  // componentwise union/intersection must be the join/meet
  std::map<std::vector<uint64_t>, int> pos;
  for (int i = 0; i < n; ++i) pos[tuples[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<uint64_t> u(r - 1), v(r - 1);
      for (int k = 0; k < r - 1; ++k) {
        u[k] = tuples[i][k] | tuples[j][k];
        v[k] = tuples[i][k] & tuples[j][k];
      }
      if (l.join(i, j) != pos[u] || l.meet(i, j) != pos[v])
        throw theorem_violated("multichain joins/meets differ from componentwise union/intersection");
    }
  if (tuples_out) *tuples_out = tuples;
  return DistributiveLattice::from_lattice(std::move(l));
}

IsoWitness multichain_irreducibles_iso(const Poset& p, int r) {
  DistributiveLattice dl = multichain_lattice(p, r);
  const Poset& ji = dl.ji();
  Poset product = cartesian_product(p, chain(r - 1, "k"));
  // canonical candidate: (x, k) -> r-1-k empty ideals then k copies of the
  // principal ideal of x
  int n = p.size();
  std::vector<uint64_t> principal(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(y, x)) principal[x] |= uint64_t{1} << y;
  auto tuple_label = [&](int x, int k) {
    std::string s;
    for (int i = 0; i < r - 1; ++i) {
      if (i) s += "<=";
      s += ideal_label(p, (i >= r - 1 - k) ? principal[x] : 0);
    }
    return s;
  };
  IsoWitness w;
  if (ji.size() == product.size()) {
    std::vector<int> map(product.size(), -1);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int k = 1; k <= r - 1 && ok; ++k) {
        int prod_idx = x * (r - 1) + (k - 1);
        std::string lbl = tuple_label(x, k);
        int hit = -1;
        for (int j = 0; j < ji.size(); ++j)
          if (ji.label(j) == lbl) hit = j;
        if (hit < 0)
          ok = false;
        else
          map[prod_idx] = hit;
      }
    if (ok) {
      for (int a = 0; a < product.size() && ok; ++a)
        for (int b = 0; b < product.size() && ok; ++b)
          if (product.leq(a, b) != ji.leq(map[a], map[b])) ok = false;
    }
    if (ok) {
      std::vector<int> sorted = map;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (ok) {
      w.map = map;
      w.canonical = true;
      return w;
    }
  }
  auto found = find_isomorphism(product, ji);
  if (!found)
    throw theorem_violated(
        "no isomorphism between the multichain irreducibles and the product poset");
  w.map = *found;
  return w;
}

namespace {

void all_maximal_chains_from(const Poset& p, int x, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  cur.push_back(x);
  if (p.is_maximal(x)) {
    out.push_back(cur);
  } else {
    for (int y : p.upper_covers(x)) all_maximal_chains_from(p, y, cur, out);
  }
  cur.pop_back();
}

std::vector<std::vector<int>> all_maximal_chains(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int x : p.minimal_elements()) all_maximal_chains_from(p, x, cur, out);
  return out;
}

}  // namespace

std::vector<ChainDecomposition> canonical_chain_decompositions(const Poset& p) {
  auto maximal = all_maximal_chains(p);
  int n = p.size();
  std::vector<uint64_t> chain_mask(maximal.size(), 0);
  for (size_t c = 0; c < maximal.size(); ++c)
    for (int x : maximal[c]) chain_mask[c] |= uint64_t{1} << x;
  std::vector<ChainDecomposition> out;
  std::vector<size_t> picked;
  std::function<void(uint64_t)> rec = [&](uint64_t covered) {
    if (covered == (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)) {
      ChainDecomposition d;
      for (size_t c : picked) {
        d.chains.push_back(maximal[c]);
        d.lengths.push_back(static_cast<int>(maximal[c].size()) - 1);
      }
      std::sort(d.lengths.begin(), d.lengths.end());
      out.push_back(std::move(d));
      return;
    }
    // branch on the chains covering the lowest uncovered element; every
    // decomposition is generated exactly once this way
    int first_uncovered = __builtin_ctzll(~covered);
    for (size_t c = 0; c < maximal.size(); ++c) {
      if (chain_mask[c] & covered) continue;
      if (!(chain_mask[c] >> first_uncovered & 1u)) continue;
      picked.push_back(c);
      rec(covered | chain_mask[c]);
      picked.pop_back();
    }
  };
  if (n > 0 && n <= 63) rec(0);
  return out;
}

HyperPlanarReport hyper_planar_report(const Poset& p) {
  HyperPlanarReport rep;
  rep.decompositions = canonical_chain_decompositions(p);
  rep.hyper_planar = !rep.decompositions.empty();
  if (!rep.hyper_planar) return rep;
  rep.d = static_cast<int>(rep.decompositions.front().chains.size());
  for (const auto& d : rep.decompositions)
    if (static_cast<int>(d.chains.size()) != rep.d)
      throw theorem_violated("chain decompositions of different sizes");

  // in-chain height of every element, per decomposition
  rep.regular = true;
  for (const auto& d : rep.decompositions) {
    std::vector<int> chain_height(p.size(), -1);
    for (const auto& c : d.chains)
      for (size_t i = 0; i < c.size(); ++i) chain_height[c[i]] = static_cast<int>(i);
    for (int x = 0; x < p.size() && rep.regular; ++x)
      for (int y = 0; y < p.size(); ++y)
        if (p.less(x, y) && chain_height[x] >= chain_height[y]) {
          rep.regular = false;
          break;
        }
    if (!rep.regular) break;
  }

  if (rep.regular) {
    // side facts that hold for regular decompositions
    std::vector<int> height_p(p.size(), 0);
    for (int x : p.linear_extension())
      for (int y : p.lower_covers(x)) height_p[x] = std::max(height_p[x], height_p[y] + 1);
    std::vector<int> ref_lengths = rep.decompositions.front().lengths;
    for (const auto& d : rep.decompositions) {
      std::vector<int> chain_height(p.size(), -1);
      for (const auto& c : d.chains)
        for (size_t i = 0; i < c.size(); ++i) chain_height[c[i]] = static_cast<int>(i);
      for (int x = 0; x < p.size(); ++x)
        if (chain_height[x] != height_p[x])
          throw theorem_violated("in-chain height differs from poset height on a regular decomposition");
      if (d.lengths != ref_lengths)
        throw theorem_violated("length multisets differ across regular decompositions");
      int longest = *std::max_element(d.lengths.begin(), d.lengths.end());
      if (longest != rank(p))
        throw theorem_violated("longest chain in a regular decomposition misses the poset rank");
    }
  }
  return rep;
}

}  // namespace hibi
