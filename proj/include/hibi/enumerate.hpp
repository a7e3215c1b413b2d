#pragma once

#include <functional>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// Visits partial orders on {1..n} for every n <= max_n. With dedup_iso set,
/// one representative per isomorphism class is yielded (canonical form =
/// minimal relation-matrix key over all permutations); otherwise every
/// labeled partial order is yielded. Deterministic order either way.
/// Throws bound_exceeded when max_n > hard_limit.
void enumerate_posets(int max_n, bool dedup_iso,
                      const std::function<void(const Poset&)>& visit,
                      int hard_limit = 6);

/// Convenience: representatives up to isomorphism, n <= max_n.
std::vector<Poset> all_posets_upto(int max_n, int hard_limit = 6);

/// Representatives (up to isomorphism) of all posets with at most
/// max_ideals order ideals, any element count for which that is possible
/// (at most max_ideals - 1 elements). Used to sweep all distributive
/// lattices of bounded size. Prunes by the ideal count, so large n is fine.
std::vector<Poset> all_posets_with_ideal_count_upto(int max_ideals);

/// Number of order ideals of p, counting stops early at cap+1.
long long count_ideals(const Poset& p, long long cap);

}  // namespace hibi
