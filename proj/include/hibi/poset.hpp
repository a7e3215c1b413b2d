#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/bigint.hpp"
#include "hibi/errors.hpp"

namespace hibi {

/// Finite poset with named elements. The relation is stored as a full
/// n x n boolean matrix (reflexive, antisymmetric, transitive; checked at
/// construction) together with its transitive reduction (the cover pairs).
/// Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Build from cover pairs (a, b) meaning "b covers a". Redundant pairs
  /// (any comparable pairs, in fact) are accepted and normalized away.
  static Poset from_covers(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& cover_pairs);

  /// Build from an explicit relation matrix; leq[a][b] means a <= b.
  static Poset from_leq(std::vector<std::string> labels,
                        std::vector<std::vector<char>> leq);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool less(int a, int b) const { return a != b && leq_[a][b] != 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws invalid_input

  /// Cover pairs (lower, upper): the transitive reduction of the relation.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return up_[a]; }
  const std::vector<int>& lower_covers(int a) const { return down_[a]; }

  bool is_minimal(int a) const { return down_[a].empty(); }
  bool is_maximal(int a) const { return up_[a].empty(); }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Elements in a fixed linear extension (minimal-first, ties by index).
  std::vector<int> linear_extension() const;

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && leq_ == o.leq_;
  }

 private:
  void finalize();  // derive covers/up/down, validate axioms

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
};

// Constructions (labels must be disjoint for the sums; LabelClash otherwise).
Poset chain(int k, const std::string& prefix = "");
Poset antichain(int k, const std::string& prefix = "");
Poset direct_sum(const Poset& p, const Poset& q);
Poset ordinal_sum(const Poset& p, const Poset& q);
Poset cartesian_product(const Poset& p, const Poset& q);
Poset dual(const Poset& p);
Poset interval(const Poset& p, const std::string& x, const std::string& y);
/// Subposet induced on the given element indices (order inherited).
Poset subposet(const Poset& p, const std::vector<int>& elements);

bool is_connected(const Poset& p);

/// Length (edge count) of a longest chain.
int rank(const Poset& p);

/// True iff all maximal chains have the same length.
bool is_pure(const Poset& p);

/// All nonempty chains, each as a sorted list of element indices.
std::vector<std::vector<int>> chains(const Poset& p);

/// chain_counts(p)[k] = number of chains with k+1 elements (so index 0
/// counts singletons). Computed by DP in exact integers.
std::vector<Int> chain_counts(const Poset& p);

/// Heights and depths measured in the hat poset (virtual +-infinity, never
/// materialized): height(x) = longest chain of P ending at x, + 1, and
/// dually for depth. rank_hat = rank(P) + 2.
struct HatStats {
  std::vector<int> height;
  std::vector<int> depth;
  int rank_hat = 0;
};
HatStats hat_stats(const Poset& p);

/// All order-ideal bitmasks of p (poset of at most 63 elements), sorted by
/// (popcount, value). Throws bound_exceeded past the cap.
std::vector<uint64_t> ideal_masks(const Poset& p, long long cap = 1 << 20);

// Isomorphism machinery. canonical_key is the lexicographically minimal
// relation-matrix encoding over all permutations; intended for small n.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);
bool isomorphic(const Poset& p, const Poset& q);
std::vector<char> canonical_key(const Poset& p);

}  // namespace hibi
