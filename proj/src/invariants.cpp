#include "hibi/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hibi {

HilbertData hilbert_data(const DistributiveLattice& l) {
  HilbertData data;
  data.f = chain_counts(l.base());
  int d = l.ji().size() + 1;
  if (static_cast<int>(data.f.size()) != d)
    throw theorem_violated("maximal chains of the lattice do not have |P|+1 elements");
  data.dim = d;
  data.projdim = l.size() - l.ji().size() - 1;

  // h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}
  std::vector<std::vector<Int>> pascal(d + 1);
  for (int m = 0; m <= d; ++m) {
    pascal[m].assign(m + 1, 1);
    for (int k = 1; k < m; ++k) pascal[m][k] = pascal[m - 1][k - 1] + pascal[m - 1][k];
  }
  std::vector<Int> h(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    Int fi = (i == 0) ? Int(1) : data.f[i - 1];
    for (int k = 0; k + i <= d && k <= d - i; ++k) {
      Int term = fi * pascal[d - i][k];
      if (k % 2) term = -term;
      h[i + k] += term;
    }
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  for (const Int& c : h)
    if (c < 0) throw theorem_violated("negative h-vector entry");
  if (h.empty() || h[0] != 1) throw theorem_violated("h-vector does not start with 1");
  if (h.size() > 1 && h[1] != l.size() - d)
    throw theorem_violated("h_1 differs from |L| - dim");
  Int total = 0;
  for (const Int& c : h) total += c;
  if (total != data.f.back())
    throw theorem_violated("h-vector total differs from the maximal chain count");
  data.h = std::move(h);
  data.reg = static_cast<int>(data.h.size()) - 1;
  data.a_invariant = data.reg - data.dim;
  return data;
}

int regularity_formula(const Poset& p) { return p.size() - rank(p) - 1; }

int regularity_checked(const DistributiveLattice& l) {
  HilbertData data = hilbert_data(l);
  int by_formula = regularity_formula(l.ji());
  if (data.reg != by_formula)
    throw theorem_violated("deg h = " + std::to_string(data.reg) +
                           " but |P|-rank P-1 = " + std::to_string(by_formula));
  return data.reg;
}

bool is_strict_map(const OrderReversingMap& v, const Poset& p) {
  if (static_cast<int>(v.values.size()) != p.size()) return false;
  for (int x = 0; x < p.size(); ++x) {
    if (v.values[x] < 1) return false;  // below +infinity with value 0
    if (v.values[x] >= v.at_bottom) return false;
  }
  for (auto& [lo, hi] : p.covers())
    if (v.values[lo] <= v.values[hi]) return false;
  return true;
}

bool is_order_reversing_difference(const OrderReversingMap& v,
                                   const OrderReversingMap& u, const Poset& p) {
  // v - u must be nonnegative and order reversing on the hat poset
  if (v.at_bottom < u.at_bottom) return false;
  for (int x = 0; x < p.size(); ++x)
    if (v.values[x] < u.values[x]) return false;
  auto diff = [&](int x) { return v.values[x] - u.values[x]; };
  int dbot = v.at_bottom - u.at_bottom;
  for (int x = 0; x < p.size(); ++x) {
    if (diff(x) > dbot) return false;  // -infinity sits below x
    for (int y = 0; y < p.size(); ++y)
      if (p.less(x, y) && diff(y) > diff(x)) return false;  // wrong slope
  }
  // top: difference at +infinity is 0, so every element needs diff >= 0 (done)
  return true;
}

OrderReversingMap depth_map(const Poset& p) {
  HatStats st = hat_stats(p);
  return {st.depth, st.rank_hat};
}

namespace {

struct StrictMapSearch {
  const Poset& p;
  int cap;
  std::vector<int> order;        // reverse linear extension: maximal first
  std::vector<int> values;       // current assignment
  std::vector<int> height_hat;   // for the upper bound
  std::vector<uint64_t> downsets;
  std::vector<OrderReversingMap> minimals;

  explicit StrictMapSearch(const Poset& p) : p(p) {
    cap = p.size() + 1;
    auto ext = p.linear_extension();
    order.assign(ext.rbegin(), ext.rend());
    values.assign(p.size(), 0);
    height_hat = hat_stats(p).height;
    downsets = ideal_masks(p, 1 << 20);
  }

  // value histogram for the surjectivity pruning
  std::vector<int> count;

  void run() {
    count.assign(cap + 1, 0);
    descend(0, 0);
  }

  void descend(size_t idx, int current_max) {
    if (idx == order.size()) {
      finish(current_max);
      return;
    }
    int x = order[idx];
    int lo = 1;
    for (int y : p.upper_covers(x)) lo = std::max(lo, values[y] + 1);
    int hi = cap - height_hat[x];
    int remaining = static_cast<int>(order.size() - idx);
    for (int val = lo; val <= hi; ++val) {
      values[x] = val;
      ++count[val];
      int new_max = std::max(current_max, val);
      // minimal maps take every value up to their degree; prune when the
      // holes below the running maximum cannot all be filled
      int holes = 0;
      for (int c = 1; c <= new_max; ++c)
        if (count[c] == 0) ++holes;
      if (holes <= remaining - 1) descend(idx + 1, new_max);
      --count[val];
    }
    values[x] = 0;
  }

  void finish(int current_max) {
    int w0 = current_max + 1;
    for (int c = 1; c < w0; ++c)
      if (count[c] == 0) return;  // not gap-free
    OrderReversingMap v{values, w0};
    // staircase necessity: every consecutive value pair must sit on a cover
    // of the hat poset, otherwise a threshold down-set can be subtracted
    std::vector<char> stair(w0 + 1, 0);
    for (auto& [lo, hi] : p.covers())
      if (v.values[lo] == v.values[hi] + 1) stair[v.values[lo]] = 1;
    for (int x = 0; x < p.size(); ++x) {
      if (p.is_maximal(x) && v.values[x] == 1) stair[1] = 1;
      if (p.is_minimal(x) && v.values[x] == w0 - 1) stair[w0] = 1;
    }
    for (int c = 1; c <= w0; ++c)
      if (!stair[c]) return;
    if (minimal_against_downsets(v)) minimals.push_back(v);
  }

  bool minimal_against_downsets(const OrderReversingMap& v) const {
    for (uint64_t d : downsets) {
      // candidate down-set of the hat poset: d together with -infinity
      bool subtractable = true;
      for (auto& [lo, hi] : p.covers()) {
        bool lo_in = d >> lo & 1u, hi_in = d >> hi & 1u;
        if (lo_in && !hi_in && v.values[lo] - v.values[hi] < 2) {
          subtractable = false;
          break;
        }
      }
      if (subtractable)
        for (int x = 0; x < p.size() && subtractable; ++x) {
          if (p.is_maximal(x) && (d >> x & 1u) && v.values[x] < 2)
            subtractable = false;  // cover to +infinity
          if (p.is_minimal(x) && !(d >> x & 1u) && v.at_bottom - v.values[x] < 2)
            subtractable = false;  // cover from -infinity
        }
      if (subtractable) return false;  // v - indicator stays strict
    }
    return true;
  }
};

CanonicalData assemble(const Poset& p, std::vector<OrderReversingMap> minimals) {
  CanonicalData data;
  data.rank_hat = rank(p) + 2;
  std::sort(minimals.begin(), minimals.end());
  data.minimals = std::move(minimals);
  data.type = static_cast<int>(data.minimals.size());
  for (const auto& v : data.minimals) data.degrees.push_back(v.at_bottom);
  if (data.degrees.empty() || data.degrees.front() != data.rank_hat)
    throw theorem_violated("lowest canonical degree differs from rank of the hat poset");
  data.gorenstein = data.type == 1;
  data.level = std::all_of(data.degrees.begin(), data.degrees.end(),
                           [&](int d) { return d == data.rank_hat; });
  data.pseudo_gorenstein =
      std::count(data.degrees.begin(), data.degrees.end(), data.rank_hat) == 1;
  return data;
}

}  // namespace

CanonicalData minimal_strict_maps(const Poset& p, int max_elements) {
  if (p.size() > max_elements)
    throw bound_exceeded("strict-map census limited to " +
                         std::to_string(max_elements) + " elements");
  if (p.size() == 0) {
    CanonicalData data;
    data.rank_hat = 1;  // the hat poset of the empty poset is a single edge
    data.minimals = {OrderReversingMap{{}, 1}};
    data.type = 1;
    data.degrees = {1};
    data.gorenstein = data.pseudo_gorenstein = data.level = true;
    return data;
  }
  StrictMapSearch search(p);
  search.run();
  return assemble(p, std::move(search.minimals));
}

bool is_minimal_strict_map(const OrderReversingMap& v, const Poset& p) {
  if (!is_strict_map(v, p)) return false;
  StrictMapSearch search(p);
  return search.minimal_against_downsets(v);
}

bool pseudo_gorenstein_by_stats(const Poset& p) {
  HatStats st = hat_stats(p);
  for (int x = 0; x < p.size(); ++x)
    if (st.height[x] + st.depth[x] != st.rank_hat) return false;
  return true;
}

bool pseudo_gorenstein_checked(const Poset& p, int max_elements) {
  bool by_stats = pseudo_gorenstein_by_stats(p);
  CanonicalData canon = minimal_strict_maps(p, max_elements);
  HilbertData hd = hilbert_data(DistributiveLattice::ideal_lattice(p));
  long long lowest =
      std::count(canon.degrees.begin(), canon.degrees.end(), canon.rank_hat);
  if (hd.h.back() != lowest)
    throw theorem_violated(
        "top h coefficient differs from the census of lowest-degree maps");
  bool by_h = hd.h.back() == 1;
  if (by_stats != by_h || by_stats != canon.pseudo_gorenstein)
    throw theorem_violated("pseudo-Gorenstein characterizations disagree");
  return by_stats;
}

LevelSufficiency level_sufficient(const Poset& p) {
  LevelSufficiency s;
  s.upper = s.lower = true;
  for (int x = 0; x < p.size(); ++x) {
    std::vector<int> filter, ideal;
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) filter.push_back(y);
      if (p.leq(y, x)) ideal.push_back(y);
    }
    if (!is_pure(subposet(p, filter))) s.upper = false;
    if (!is_pure(subposet(p, ideal))) s.lower = false;
  }
  return s;
}

bool level_necessary(const Poset& p) {
  HatStats st = hat_stats(p);
  for (auto& [lo, hi] : p.covers())
    if (st.height[hi] + st.depth[lo] > st.rank_hat + 1) return false;
  return true;
}

bool level_cover_condition(const Poset& p) {
  HatStats st = hat_stats(p);
  for (auto& [lo, hi] : p.covers())
    if (st.depth[lo] != st.depth[hi] + 1 && st.height[hi] != st.height[lo] + 1)
      return false;
  return true;
}

RegularPlanarLevelReport level_regular_planar(const Poset& p, int max_elements) {
  RegularPlanarLevelReport rep;
  HyperPlanarReport hp = hyper_planar_report(p);
  rep.applicable = hp.hyper_planar && hp.regular && hp.d == 2;
  if (!rep.applicable) return rep;
  rep.condition_b = level_necessary(p);
  if (rep.condition_b != level_cover_condition(p))
    throw theorem_violated("cover condition differs from the height-depth bound "
                           "on a regular planar poset");
  CanonicalData canon = minimal_strict_maps(p, max_elements);
  rep.level = canon.level;
  if (rep.level != rep.condition_b)
    throw theorem_violated("levelness differs from the height-depth bound on a "
                           "regular planar poset");
  if (rep.level) {
    int rk = rank(p);
    for (const auto& d : hp.decompositions)
      for (const auto& c : d.chains) {
        if (static_cast<int>(c.size()) - 1 != rk) continue;
        for (const auto& v : canon.minimals)
          if (v.values[c.back()] != 1)
            throw theorem_violated(
                "a minimal map misses value 1 on top of a rank-long chain");
      }
  }
  return rep;
}

GeneralizedComparison generalized_comparison(const Poset& p, int r,
                                             int max_elements) {
  if (r < 2) throw invalid_input("generalized comparison needs r >= 2");
  GeneralizedComparison cmp;
  cmp.r = r;
  Poset pr = cartesian_product(p, chain(r - 1, "k"));
  if (pr.size() > max_elements)
    throw bound_exceeded("product poset above the strict-map census bound");

  // height/depth shifts: (x, i) gains i-1 height and r-1-i depth
  HatStats base = hat_stats(p), ext = hat_stats(pr);
  cmp.stats_shift_verified = true;
  for (int x = 0; x < p.size(); ++x)
    for (int i = 1; i <= r - 1; ++i) {
      int idx = x * (r - 1) + (i - 1);
      if (ext.height[idx] != base.height[x] + (i - 1) ||
          ext.depth[idx] != base.depth[x] + (r - 1 - i))
        throw theorem_violated("height/depth shift identity fails");
    }
  if (ext.rank_hat != base.rank_hat + (r - 2))
    throw theorem_violated("hat rank shift identity fails");

  cmp.base = minimal_strict_maps(p, max_elements);
  cmp.extended = minimal_strict_maps(pr, max_elements);

  cmp.type_monotone = cmp.base.type <= cmp.extended.type;
  cmp.pseudo_gorenstein_equivalent =
      cmp.base.pseudo_gorenstein == cmp.extended.pseudo_gorenstein;
  cmp.level_descends = !cmp.extended.level || cmp.base.level;
  if (!cmp.type_monotone) throw theorem_violated("type fails to grow with r");
  if (!cmp.pseudo_gorenstein_equivalent)
    throw theorem_violated("pseudo-Gorenstein property differs between P and the product");
  if (!cmp.level_descends)
    throw theorem_violated("level property fails to descend from the product");
  if (pseudo_gorenstein_by_stats(p) != pseudo_gorenstein_by_stats(pr))
    throw theorem_violated("stats criterion differs between P and the product");

  // degree-shift embedding of minimal maps
  cmp.embedding_minimal = true;
  for (const auto& v : cmp.base.minimals) {
    OrderReversingMap image;
    image.values.assign(pr.size(), 0);
    for (int x = 0; x < p.size(); ++x)
      for (int i = 1; i <= r - 1; ++i)
        image.values[x * (r - 1) + (i - 1)] = v.values[x] + (r - 1 - i);
    image.at_bottom = v.at_bottom + (r - 2);
    if (!is_strict_map(image, pr))
      throw theorem_violated("degree-shift embedding leaves the strict maps");
    if (!std::binary_search(cmp.extended.minimals.begin(),
                            cmp.extended.minimals.end(), image)) {
      cmp.embedding_minimal = false;
      throw theorem_violated("degree-shift embedding misses the minimal maps");
    }
  }
  return cmp;
}

ExtremalFlags extremal_classification(int reg, bool gorenstein) {
  ExtremalFlags f;
  f.extremal_cm = reg == 1;
  f.nearly_extremal_cm = reg == 2;
  f.extremal_gorenstein = gorenstein && reg == 2;
  f.nearly_extremal_gorenstein = gorenstein && reg == 3;
  return f;
}

}  // namespace hibi
