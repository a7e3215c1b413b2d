#include "hibi/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hibi {

namespace {

void check_distinct_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw invalid_input("duplicate label: " + l);
}

}  // namespace

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  check_distinct_labels(labels);
  int n = static_cast<int>(labels.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[labels[i]] = i;

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& [a, b] : cover_pairs) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw invalid_input("unknown label: " + a);
    if (ib == idx.end()) throw invalid_input("unknown label: " + b);
    leq[ia->second][ib->second] = 1;
  }
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i])
        throw invalid_input("cycle detected between '" + labels[i] + "' and '" +
                            labels[j] + "'");
  return from_leq(labels, std::move(leq));
}

Poset Poset::from_leq(std::vector<std::string> labels,
                      std::vector<std::vector<char>> leq) {
  check_distinct_labels(labels);
  Poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.finalize();
  return p;
}

void Poset::finalize() {
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq_[i].size()) != n)
      throw invalid_input("relation matrix is not square");
    if (!leq_[i][i]) throw invalid_input("relation is not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw invalid_input("relation is not antisymmetric");
      if (leq_[i][j])
        for (int k = 0; k < n; ++k)
          if (leq_[j][k] && !leq_[i][k])
            throw invalid_input("relation is not transitive");
    }
  covers_.clear();
  up_.assign(n, {});
  down_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != a && z != b && leq_[a][z] && leq_[z][b]) cover = false;
      if (cover) {
        covers_.emplace_back(a, b);
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw invalid_input("unknown label: " + label);
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_minimal(i)) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> indeg(n_, 0), order;
  for (auto& [a, b] : covers_) (void)a, ++indeg[b];
  std::vector<int> ready;
  for (int i = 0; i < n_; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<int>());
    int x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (int y : up_[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  return order;
}

Poset chain(int k, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= k; ++i) labels.push_back(prefix + std::to_string(i));
  for (int i = 1; i < k; ++i) covers.emplace_back(labels[i - 1], labels[i]);
  return Poset::from_covers(labels, covers);
}

Poset antichain(int k, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(prefix + std::to_string(i));
  return Poset::from_covers(labels, {});
}

namespace {

std::vector<std::string> merged_labels(const Poset& p, const Poset& q) {
  std::set<std::string> seen(p.labels().begin(), p.labels().end());
  for (const auto& l : q.labels())
    if (seen.count(l)) throw invalid_input("label clash: " + l);
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  return labels;
}

}  // namespace

Poset direct_sum(const Poset& p, const Poset& q) {
  auto labels = merged_labels(p, q);
  int n = p.size(), m = q.size();
  std::vector<std::vector<char>> leq(n + m, std::vector<char>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = p.leq(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[n + i][n + j] = q.leq(i, j);
  return Poset::from_leq(labels, leq);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  auto labels = merged_labels(p, q);
  int n = p.size(), m = q.size();
  std::vector<std::vector<char>> leq(n + m, std::vector<char>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = p.leq(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[n + i][n + j] = q.leq(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) leq[i][n + j] = 1;
  return Poset::from_leq(labels, leq);
}

Poset cartesian_product(const Poset& p, const Poset& q) {
  int n = p.size(), m = q.size();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<std::vector<char>> leq(n * m, std::vector<char>(n * m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l)
          leq[i * m + j][k * m + l] = p.leq(i, k) && q.leq(j, l);
  return Poset::from_leq(labels, leq);
}

Poset dual(const Poset& p) {
  int n = p.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = p.leq(j, i);
  return Poset::from_leq(p.labels(), leq);
}

Poset interval(const Poset& p, const std::string& x, const std::string& y) {
  int a = p.index_of(x), b = p.index_of(y);
  if (!p.leq(a, b))
    throw invalid_input("not comparable: '" + x + "' <= '" + y + "' fails");
  std::vector<int> elems;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(a, z) && p.leq(z, b)) elems.push_back(z);
  return subposet(p, elems);
}

Poset subposet(const Poset& p, const std::vector<int>& elements) {
  int m = static_cast<int>(elements.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int e : elements) labels.push_back(p.label(e));
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i][j] = p.leq(elements[i], elements[j]);
  return Poset::from_leq(labels, leq);
}

bool is_connected(const Poset& p) {
  int n = p.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y)
      if (!seen[y] && (p.comparable(x, y)) && y != x) {
        // comparability walk suffices: Hasse-connectivity equals it
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

// Longest/shortest cover-path DP below each element (edge counts).
void path_dp(const Poset& p, std::vector<int>& longest, std::vector<int>& shortest) {
  auto order = p.linear_extension();
  int n = p.size();
  longest.assign(n, 0);
  shortest.assign(n, 0);
  for (int x : order) {
    if (p.is_minimal(x)) continue;
    int lo = INT32_MAX, hi = 0;
    for (int y : p.lower_covers(x)) {
      lo = std::min(lo, shortest[y]);
      hi = std::max(hi, longest[y]);
    }
    shortest[x] = lo + 1;
    longest[x] = hi + 1;
  }
}

}  // namespace

int rank(const Poset& p) {
  std::vector<int> lo, hi;
  path_dp(p, hi, lo);
  int r = 0;
  for (int x = 0; x < p.size(); ++x) r = std::max(r, hi[x]);
  return r;
}

bool is_pure(const Poset& p) {
  // Pure iff longest == shortest cover-path from a minimal element at every
  // node and all maximal elements sit at the same level.
  std::vector<int> hi, lo;
  path_dp(p, hi, lo);
  for (int x = 0; x < p.size(); ++x)
    if (hi[x] != lo[x]) return false;
  int top = -1;
  for (int x = 0; x < p.size(); ++x) {
    if (!p.is_maximal(x)) continue;
    if (top < 0) top = hi[x];
    if (hi[x] != top) return false;
  }
  return true;
}

std::vector<std::vector<int>> chains(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto order = p.linear_extension();
  std::function<void(int)> extend = [&](int last) {
    for (int next = 0; next < p.size(); ++next) {
      if (next == last || !p.less(last, next)) continue;
      cur.push_back(next);
      out.push_back(cur);
      extend(next);
      cur.pop_back();
    }
  };
  for (int x = 0; x < p.size(); ++x) {
    cur = {x};
    out.push_back(cur);
    extend(x);
  }
  return out;
}

std::vector<Int> chain_counts(const Poset& p) {
  int n = p.size();
  auto order = p.linear_extension();
  std::vector<Int> result;
  // ending[x] = number of chains of the current size ending at x
  std::vector<Int> ending(n, 1);
  Int total = n;
  while (total > 0) {
    result.push_back(total);
    std::vector<Int> next(n, 0);
    total = 0;
    for (int x : order) {
      Int s = 0;
      for (int y = 0; y < n; ++y)
        if (p.less(y, x)) s += ending[y];
      next[x] = s;
      total += s;
    }
    ending = std::move(next);
  }
  return result;
}

HatStats hat_stats(const Poset& p) {
  HatStats st;
  int n = p.size();
  st.height.assign(n, 1);
  st.depth.assign(n, 1);
  auto order = p.linear_extension();
  for (int x : order)
    for (int y : p.lower_covers(x))
      st.height[x] = std::max(st.height[x], st.height[y] + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int y : p.upper_covers(*it))
      st.depth[*it] = std::max(st.depth[*it], st.depth[y] + 1);
  st.rank_hat = rank(p) + 2;
  return st;
}

std::vector<uint64_t> ideal_masks(const Poset& p, long long cap) {
  int n = p.size();
  if (n > 63) throw bound_exceeded("ideal enumeration limited to 63 elements");
  std::vector<uint64_t> strict_down(n, 0);
  for (int x : p.linear_extension()) {
    uint64_t m = 0;
    for (int y : p.lower_covers(x)) m |= strict_down[y] | (uint64_t{1} << y);
    strict_down[x] = m;
  }
  std::vector<uint64_t> out = {0};
  std::set<uint64_t> seen = {0};
  for (size_t q = 0; q < out.size(); ++q) {
    uint64_t s = out[q];
    for (int j = 0; j < n; ++j) {
      if (s >> j & 1u) continue;
      if ((strict_down[j] & ~s) != 0) continue;
      uint64_t t = s | (uint64_t{1} << j);
      if (seen.insert(t).second) {
        out.push_back(t);
        if (static_cast<long long>(out.size()) > cap)
          throw bound_exceeded("more order ideals than the configured bound");
      }
    }
  }
  std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

namespace {

// Backtracking isomorphism search with (indegree, outdegree, height, depth)
// class pruning.
struct IsoSearch {
  const Poset& p;
  const Poset& q;
  std::vector<int> map, used;
  std::vector<long long> sig_p, sig_q;

  IsoSearch(const Poset& p, const Poset& q) : p(p), q(q) {
    map.assign(p.size(), -1);
    used.assign(q.size(), 0);
    sig_p = signatures(p);
    sig_q = signatures(q);
  }

  static std::vector<long long> signatures(const Poset& r) {
    HatStats st = hat_stats(r);
    std::vector<long long> sig(r.size());
    for (int x = 0; x < r.size(); ++x) {
      long long below = 0, above = 0;
      for (int y = 0; y < r.size(); ++y) {
        if (r.less(y, x)) ++below;
        if (r.less(x, y)) ++above;
      }
      sig[x] = (((below * 1000 + above) * 1000 + st.height[x]) * 1000 + st.depth[x]);
    }
    return sig;
  }

  bool extend(int i) {
    if (i == p.size()) return true;
    for (int j = 0; j < q.size(); ++j) {
      if (used[j] || sig_p[i] != sig_q[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        if (p.leq(i, k) != q.leq(j, map[k])) ok = false;
        if (p.leq(k, i) != q.leq(map[k], j)) ok = false;
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  IsoSearch s(p, q);
  {
    auto a = s.sig_p, b = s.sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (s.extend(0)) return s.map;
  return std::nullopt;
}

bool isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

namespace {

// Lexicographically minimal encoding of the relation matrix over all
// permutations. The encoding appends, for each newly placed element i, the
// entries leq(j,i), leq(i,j) for j < i; this is prefix-stable, so branches
// whose prefix already exceeds the current best can be cut.
struct CanonicalSearch {
  const Poset& p;
  std::vector<char> best, cur;
  std::vector<int> perm;
  std::vector<char> used;

  explicit CanonicalSearch(const Poset& p) : p(p) {
    int n = p.size();
    best.assign(static_cast<size_t>(n) * (n - 1), 2);  // sentinel above any key
    used.assign(n, 0);
    cur.reserve(best.size());
  }

  // -1/0/+1: cur (as prefix) versus best
  int cmp_prefix() const {
    for (size_t k = 0; k < cur.size(); ++k) {
      if (cur[k] < best[k]) return -1;
      if (cur[k] > best[k]) return 1;
    }
    return 0;
  }

  void run(int i) {
    int n = p.size();
    if (i == n) {
      if (cmp_prefix() < 0) best = cur;
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      size_t base = cur.size();
      for (int j = 0; j < i; ++j) {
        cur.push_back(static_cast<char>(p.leq(perm[j], cand)));
        cur.push_back(static_cast<char>(p.leq(cand, perm[j])));
      }
      if (cmp_prefix() <= 0) {
        perm.push_back(cand);
        used[cand] = 1;
        run(i + 1);
        used[cand] = 0;
        perm.pop_back();
      }
      cur.resize(base);
    }
  }
};

}  // namespace

std::vector<char> canonical_key(const Poset& p) {
  if (p.size() == 0) return {};
  CanonicalSearch s(p);
  s.run(0);
  return s.best;
}

}  // namespace hibi
