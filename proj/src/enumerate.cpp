#include "hibi/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace hibi {

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Poset poset_from_downsets(const std::vector<uint32_t>& down, int n) {
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int j = 0; j < n; ++j) {
    leq[j][j] = 1;
    for (int i = 0; i < j; ++i)
      if (down[j] >> i & 1u) leq[i][j] = 1;
  }
  return Poset::from_leq(numeric_labels(n), std::move(leq));
}

// Enumerates naturally labeled posets on {0..n-1} (identity is a linear
// extension): element j picks a strict down-set D_j closed under the
// previously chosen ones. `prefix_ok` can prune on the partial poset.
void walk_natural(int n, int j, std::vector<uint32_t>& down,
                  const std::function<bool(const std::vector<uint32_t>&, int)>& prefix_ok,
                  const std::function<void(const std::vector<uint32_t>&)>& leaf) {
  if (j == n) {
    leaf(down);
    return;
  }
  uint32_t all = (j == 0) ? 0u : ((1u << j) - 1u);
  for (uint32_t d = 0;; ++d) {
    bool closed = true;
    for (int i = 0; i < j && closed; ++i)
      if ((d >> i & 1u) && (down[i] & ~d)) closed = false;
    if (closed) {
      down[j] = d;
      if (prefix_ok(down, j + 1)) walk_natural(n, j + 1, down, prefix_ok, leaf);
    }
    if (d == all) break;
  }
  down[j] = 0;
}

long long count_ideals_masks(const std::vector<uint32_t>& down, int n, long long cap) {
  // Down-sets of the prefix poset, abort once the count passes cap.
  long long count = 0;
  std::vector<uint32_t> stack = {0u};
  std::set<uint32_t> seen = {0u};
  while (!stack.empty()) {
    uint32_t s = stack.back();
    stack.pop_back();
    if (++count > cap) return count;
    for (int j = 0; j < n; ++j) {
      if (s >> j & 1u) continue;
      if ((down[j] & ~s) != 0) continue;  // some lower element missing
      uint32_t t = s | (1u << j);
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return count;
}

}  // namespace

long long count_ideals(const Poset& p, long long cap) {
  int n = p.size();
  std::vector<uint32_t> down(n, 0);
  for (auto& [a, b] : p.covers()) down[b] |= 1u << a;
  // close downward so the mask check above sees the full strict down-set
  auto order = p.linear_extension();
  std::vector<uint32_t> full(n, 0);
  for (int x : order) {
    uint32_t m = 0;
    for (int y : p.lower_covers(x)) m |= full[y] | (1u << y);
    full[x] = m;
  }
  return count_ideals_masks(full, n, cap);
}

void enumerate_posets(int max_n, bool dedup_iso,
                      const std::function<void(const Poset&)>& visit,
                      int hard_limit) {
  if (max_n > hard_limit)
    throw bound_exceeded("poset enumeration bound " + std::to_string(hard_limit) +
                         " exceeded (asked for " + std::to_string(max_n) + ")");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<uint32_t> down(n, 0);
    if (dedup_iso) {
      std::map<std::vector<char>, Poset> classes;
      walk_natural(
          n, 0, down, [](const std::vector<uint32_t>&, int) { return true; },
          [&](const std::vector<uint32_t>& d) {
            Poset p = poset_from_downsets(d, n);
            auto key = canonical_key(p);
            classes.emplace(std::move(key), std::move(p));
          });
      for (auto& [key, p] : classes) visit(p);
    } else {
      // All labeled partial orders: permutation closure of the natural ones.
      std::set<std::vector<char>> matrices;
      walk_natural(
          n, 0, down, [](const std::vector<uint32_t>&, int) { return true; },
          [&](const std::vector<uint32_t>& d) {
            Poset p = poset_from_downsets(d, n);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
              std::vector<char> mat(static_cast<size_t>(n) * n);
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                  mat[static_cast<size_t>(i) * n + j] =
                      static_cast<char>(p.leq(perm[i], perm[j]));
              matrices.insert(std::move(mat));
            } while (std::next_permutation(perm.begin(), perm.end()));
          });
      for (const auto& mat : matrices) {
        std::vector<std::vector<char>> leq(n, std::vector<char>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) leq[i][j] = mat[static_cast<size_t>(i) * n + j];
        visit(Poset::from_leq(numeric_labels(n), std::move(leq)));
      }
    }
  }
}

std::vector<Poset> all_posets_upto(int max_n, int hard_limit) {
  std::vector<Poset> out;
  enumerate_posets(max_n, true, [&](const Poset& p) { out.push_back(p); },
                   hard_limit);
  return out;
}

std::vector<Poset> all_posets_with_ideal_count_upto(int max_ideals) {
  std::vector<Poset> out;
  std::set<std::vector<char>> seen;
  {
    // the empty poset: its ideal lattice is the one-point lattice
    out.push_back(Poset::from_leq({}, {}));
  }
  int max_n = static_cast<int>(max_ideals) - 1;
  if (max_n > 31) throw bound_exceeded("ideal-capped enumeration limited to 31 elements");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<uint32_t> down(n, 0);
    // close the down-sets on the fly: D_j as chosen is already the full
    // strict down-set because of the closure constraint in walk_natural.
    walk_natural(
        n, 0, down,
        [&](const std::vector<uint32_t>& d, int m) {
          return count_ideals_masks(d, m, max_ideals) <= max_ideals;
        },
        [&](const std::vector<uint32_t>& d) {
          Poset p = poset_from_downsets(d, n);
          if (seen.insert(canonical_key(p)).second) out.push_back(p);
        });
  }
  return out;
}

}  // namespace hibi
