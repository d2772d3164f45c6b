#ifndef TOWOG_ORACLE_HPP
#define TOWOG_ORACLE_HPP

#include <vector>

#include "towog/toric.hpp"

namespace towog {

/// Resource limits for the Buchberger loop: a cap on S-pair reductions and on
/// the total exponent degree of any monomial handled.
struct OracleBudget {
  long max_spairs = 200000;
  long max_degree = 600;
};

/// Sparse polynomial over Q used inside the saturation engine. Exponent
/// vectors have uniform length within one computation; index 0 is the
/// auxiliary elimination variable when one is in play. The toric inputs keep
/// every polynomial a pure difference of two monomials; the engine asserts
/// that shape after each reduction.
struct SparseBinomialPoly {
  struct Term {
    std::vector<long long> expo;
    Rat coeff;
  };
  std::vector<Term> terms;  // strictly descending in the active monomial order

  bool is_zero() const { return terms.empty(); }
};

/// Block elimination order: compare the first `aux_vars` exponents first,
/// then graded reverse lexicographic on the remaining (edge) variables with
/// ascending edge id breaking ties.
struct MonomialOrder {
  int aux_vars = 0;

  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const std::vector<long long>& a, const std::vector<long long>& b) const;
  bool less(const std::vector<long long>& a, const std::vector<long long>& b) const {
    return compare(a, b) < 0;
  }
};

/// Total order on binomials used for printed output: ascending degree, ties
/// by the edge monomial order on the plus then minus parts.
bool binomial_order_less(const Binomial& a, const Binomial& b);

SparseBinomialPoly s_polynomial(const SparseBinomialPoly& f, const SparseBinomialPoly& g,
                                const MonomialOrder& order);

/// Full normal form of f modulo G (every term reduced). Deterministic:
/// always rewrites the largest reducible term by the first divisor in G.
SparseBinomialPoly reduce(const SparseBinomialPoly& f, const std::vector<SparseBinomialPoly>& g,
                          const MonomialOrder& order);

struct GroebnerResult {
  std::vector<SparseBinomialPoly> basis;  // reduced basis, sorted by leading term
  bool complete = false;                  // false when a budget was exhausted
};

/// Buchberger loop with normal S-pair selection (minimal lcm degree, then
/// index order). Results are inter-reduced; `complete` reports whether every
/// pair within budget was processed.
GroebnerResult buchberger(std::vector<SparseBinomialPoly> gens, const MonomialOrder& order,
                          const OracleBudget& budget);

/// A lattice basis of the integer kernel of A, one binomial per basis vector.
/// Computed by unimodular row reduction of [A^T | I]: the rows whose left
/// block vanishes carry a basis of the saturated kernel lattice in their
/// right block.
std::vector<Binomial> lattice_ideal_generators(const IncidenceMatrix& a);

struct SaturationResult {
  std::vector<Binomial> basis;
  bool certified = false;
};

/// Markov basis of the toric ideal of A: adjoins one auxiliary variable t
/// with the relation t*e_1*...*e_mu - 1 to the lattice basis ideal, computes
/// a Groebner basis in the block elimination order, and intersects with the
/// edge ring. When Buchberger finishes within budget the result is
/// minimalized and certified; otherwise the partial basis is returned
/// uncertified.
SaturationResult saturate_markov_basis(const IncidenceMatrix& a, const OracleBudget& budget = {});

/// Extracts a minimal generating set: drops every element that reduces to
/// zero against the ideal generated by the others. Elements must lie in the
/// kernel of A (errc::not_in_kernel).
std::vector<Binomial> minimalize(const std::vector<Binomial>& basis, const IncidenceMatrix& a,
                                 const OracleBudget& budget = {});

/// True iff f lies in the ideal generated by `basis` (normal form test
/// against a Groebner closure of the basis). Throws errc::budget_exceeded if
/// the closure cannot be completed within budget.
bool verify_membership(const Binomial& f, const std::vector<Binomial>& basis,
                       const OracleBudget& budget = {});

}  // namespace towog

#endif
