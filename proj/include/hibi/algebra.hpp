#pragma once

#include <span>
#include <string>
#include <vector>

#include "hibi/bigint.hpp"
#include "hibi/errors.hpp"

namespace hibi {

/// Sparse monomial: (variable index, exponent) pairs, sorted by variable,
/// no zero exponents stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> exps);
  static Monomial var(int v, int e = 1);

  int degree() const;
  int exponent(int v) const;
  bool is_one() const { return exps_.empty(); }
  bool squarefree() const;
  const std::vector<std::pair<int, int>>& exps() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& b) const;
  /// b / *this; caller guarantees divisibility.
  Monomial divide_into(const Monomial& b) const;
  bool coprime(const Monomial& b) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }  // structural

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Total monomial order: lex or degrevlex, on variables ranked by a priority
/// permutation (priority[v] = rank of variable v; higher rank = bigger
/// variable).
struct MonomialOrder {
  enum class Kind { lex, degrevlex };
  Kind kind = Kind::degrevlex;
  std::vector<int> priority;

  static MonomialOrder degrevlex(std::vector<int> priority);
  static MonomialOrder lex(std::vector<int> priority);
  /// -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Polynomial with exact rational coefficients; canonical (no zero terms),
/// structural equality. Terms are kept sorted by the structural monomial
/// order; leading terms are found per monomial order on demand.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial term(const Monomial& m, const Rat& c);
  static Polynomial binomial(const Monomial& plus, const Monomial& minus);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }

  const std::pair<Monomial, Rat>& leading_term(const MonomialOrder& ord) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Monomial& m, const Rat& c) const;  // c * m * this
  Polynomial monic(const MonomialOrder& ord) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  void normalize();
  std::vector<std::pair<Monomial, Rat>> terms_;
};

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Remainder of multivariate division: no remainder term is divisible by a
/// leading term of G. Deterministic: reducers are tried in list order and
/// the leading term is reduced first.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& ord);

struct BuchbergerLimits {
  int max_variables = 40;
  long long max_pairs = 2'000'000;
};

/// Reduced Groebner basis: pairwise auto-reduced, monic, sorted by leading
/// term ascending; unique for (ideal, order). The coprime-leading-term
/// criterion is the only pair-skipping optimization.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& ord,
                                   const BuchbergerLimits& limits = {});

/// Minimal monomial generators of the initial ideal of a Groebner basis.
std::vector<Monomial> initial_ideal(std::span<const Polynomial> gb,
                                    const MonomialOrder& ord);
bool is_squarefree(std::span<const Monomial> monomials);

}  // namespace hibi
