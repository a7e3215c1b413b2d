#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// Finite lattice: a poset together with exhaustively verified join/meet
/// tables and a unique minimum and maximum.
class Lattice {
 public:
  /// Verifies that every pair has a least upper bound and a greatest lower
  /// bound; throws invalid_input naming a witness pair otherwise.
  static Lattice from_poset(const Poset& p);

  const Poset& base() const { return base_; }
  int size() const { return base_.size(); }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * base_.size() + b; }
  Poset base_;
  std::vector<int> join_, meet_;
  int bottom_ = -1, top_ = -1;
};

/// Witness for a failed distributive law: x, y, z with
/// x v (y ^ z) != (x v y) ^ (x v z).
using Triple = std::array<int, 3>;

bool is_distributive(const Lattice& l, Triple* witness = nullptr);

struct ModularityReport {
  bool modular = false;
  // route (a): graded with rank identity; route (b): pentagon-freeness
  bool by_rank_condition = false;
  bool by_pentagon_freeness = false;
  std::optional<Triple> rank_witness;       // x, y violating the identity (z unused)
  std::optional<Triple> pentagon_witness;   // a < b, c spanning a pentagon
};

/// Decides modularity two independent ways and checks they agree
/// (theorem_violated if not, which would indicate a bug).
ModularityReport is_modular(const Lattice& l);

/// Diamond sublattice witness (three pairwise incomparable elements with a
/// common meet and a common join), if any.
std::optional<Triple> find_diamond(const Lattice& l);

/// Join-irreducible elements: not the bottom and covering exactly one
/// element. Returns the subposet plus the lattice indices it came from.
std::pair<Poset, std::vector<int>> join_irreducibles(const Lattice& l);

/// Distributive lattice with its Birkhoff data: the poset of
/// join-irreducibles and, per element, the order ideal of irreducibles
/// below it. The correspondence is verified to be an order isomorphism.
class DistributiveLattice {
 public:
  static DistributiveLattice from_lattice(Lattice l);
  /// Lattice of all order ideals of p (inclusion; union/intersection).
  static DistributiveLattice ideal_lattice(const Poset& p, long long max_size = 1 << 20);

  const Lattice& lattice() const { return lat_; }
  const Poset& base() const { return lat_.base(); }
  int size() const { return lat_.size(); }
  const Poset& ji() const { return ji_; }
  /// Lattice index of the k-th join-irreducible.
  const std::vector<int>& ji_elements() const { return ji_elems_; }
  /// Bitmask over ji() of the irreducibles below lattice element e.
  uint64_t ideal_mask(int e) const { return masks_[e]; }
  /// Element whose irreducible down-set is the given mask (must exist).
  int element_of_mask(uint64_t mask) const;

 private:
  Lattice lat_;
  Poset ji_;
  std::vector<int> ji_elems_;
  std::vector<uint64_t> masks_;
};

/// Lattice of r-multichains I_1 <= ... <= I_{r-1} (<= P) of order ideals of
/// p, ordered componentwise; joins/meets are componentwise union and
/// intersection. Element labels list the member ideals. When tuples_out is
/// given it receives, per lattice element, the r-1 nested ideal bitmasks.
DistributiveLattice multichain_lattice(const Poset& p, int r, long long max_size = 1 << 20,
                                       std::vector<std::vector<uint64_t>>* tuples_out = nullptr);

/// Explicit order isomorphism between the join-irreducible poset of
/// multichain_lattice(p, r) and the cartesian product p x chain(r-1):
/// (x, k) corresponds to the multichain holding k trailing copies of the
/// principal ideal of x. The canonical map is verified; if it fails, a
/// backtracking search runs, and theorem_violated is raised when no
/// isomorphism exists at all.
struct IsoWitness {
  std::vector<int> map;  // product poset index -> ji poset index
  bool canonical = false;
};
IsoWitness multichain_irreducibles_iso(const Poset& p, int r);

/// Partition of a poset into chains, each of which is maximal as a chain
/// of the whole poset.
struct ChainDecomposition {
  std::vector<std::vector<int>> chains;  // each sorted bottom-up
  std::vector<int> lengths;              // edge counts, sorted ascending
};

/// All partitions of p into maximal chains ("canonical" decompositions).
std::vector<ChainDecomposition> canonical_chain_decompositions(const Poset& p);

struct HyperPlanarReport {
  bool hyper_planar = false;  // at least one decomposition exists
  int d = 0;                  // number of chains (same in all decompositions)
  bool regular = false;
  std::vector<ChainDecomposition> decompositions;
};

/// Checks Definition-style regularity: for every decomposition and every
/// cross relation x < y the in-chain height of x is strictly below that of
/// y. On regular instances two side facts are asserted: in-chain heights
/// agree with poset heights, and length multisets agree across
/// decompositions (theorem_violated otherwise).
HyperPlanarReport hyper_planar_report(const Poset& p);

}  // namespace hibi
