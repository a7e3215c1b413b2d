#pragma once

#include <string>
#include <vector>

#include "hibi/algebra.hpp"
#include "hibi/lattice.hpp"

namespace hibi {

/// One defining binomial x_a x_b - x_meet x_join for an incomparable pair.
struct JoinMeetBinomial {
  int a, b, meet, join;  // lattice element indices, a before b in the
                         // linear extension
  Polynomial polynomial() const;
};

/// Join-meet ideal of a finite lattice: one generator per unordered
/// incomparable pair, ordered by the recorded linear extension. For
/// distributive lattices this is the Hibi ideal.
struct JoinMeetIdeal {
  Lattice lattice;
  bool distributive = false;
  std::vector<int> linext;       // lattice indices, smallest first
  std::vector<int> linext_rank;  // element -> position in linext
  std::vector<JoinMeetBinomial> generators;

  std::vector<Polynomial> polynomials() const;
  /// Reverse lexicographic order induced by x_a < x_b whenever a comes
  /// before b in the linear extension.
  MonomialOrder order() const;
  MonomialOrder order_for(const std::vector<int>& extension,
                          MonomialOrder::Kind kind) const;
  std::vector<std::string> variable_names() const;
};

JoinMeetIdeal hibi_ideal(const DistributiveLattice& l);
JoinMeetIdeal join_meet_ideal(const Lattice& l);

/// Exponent data of a monomial t^{w0} x^w of the ambient polynomial ring;
/// w is indexed by the poset elements.
struct SemigroupElement {
  long long w0 = 0;
  std::vector<long long> w;
};

/// Membership in the toric semigroup of the Hibi ring of I(P):
/// 0 <= w_i <= w0 for all i, and w_i >= w_j whenever p_i <= p_j.
bool semigroup_member(const SemigroupElement& h, const Poset& p);

/// Number of degree-k standard monomials (= k-multichains of L).
Int standard_monomial_count(const Lattice& l, int k);
/// The multichains themselves, for small instances (bound guarded).
std::vector<std::vector<int>> standard_monomials(const Lattice& l, int k,
                                                 long long cap = 2'000'000);

struct GroebnerReport {
  bool reduced_basis_equals_generators = false;
  bool initial_ideal_is_incomparable_products = false;
  bool initial_ideal_squarefree = false;
  size_t basis_size = 0;
  bool ok() const {
    return reduced_basis_equals_generators &&
           initial_ideal_is_incomparable_products && initial_ideal_squarefree;
  }
};

/// Runs Buchberger on the Hibi ideal with the linear-extension degrevlex
/// order and checks the three conclusions that hold for distributive
/// lattices. Throws theorem_violated when a conclusion fails on a
/// distributive input.
GroebnerReport verify_groebner_generators(const DistributiveLattice& l,
                                          const BuchbergerLimits& limits = {});

/// Same computation for an arbitrary lattice ideal and an arbitrary order:
/// no theorem is asserted, the observations are just reported.
GroebnerReport groebner_observations(const JoinMeetIdeal& ideal,
                                     const MonomialOrder& ord,
                                     const BuchbergerLimits& limits = {});

struct GeneralizedHibi {
  DistributiveLattice multichains;  // lattice of r-multichains
  JoinMeetIdeal ideal;
  bool monomial_identity_verified = false;
};

/// Defining binomials of the generalized construction on r-multichains,
/// together with the expansion check psi(I) psi(J) = psi(I^J) psi(IvJ)
/// carried out in the x_{k,l} variables for every incomparable pair.
GeneralizedHibi generalized_hibi_generators(const Poset& p, int r,
                                            long long max_size = 1 << 20);

}  // namespace hibi
