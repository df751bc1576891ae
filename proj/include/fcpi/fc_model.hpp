#pragma once

#include <vector>

#include "fcpi/presentation.hpp"

namespace fcpi {

/// The model group on G0..Gn: commuting G1..Gn, braid-like relators
/// (G0 Gi)^2 = (Gi G0)^2, and one commutator of conjugates
/// [M(I)^-1 G0 M(I), M(J)^-1 G0 M(J)] per unordered disjoint pair of
/// nonempty I, J with |I| + |J| <= n-1. M(I) multiplies in ascending order.
GroupPresentation fc_model_presentation(int n);

/// S(eps) = { i : eps_i = -1 } (1-based indices, ascending).
std::vector<int> epsilon_support(const std::vector<int>& eps);

/// The word M_eps^-1 G0 M_eps over the model generators, M_eps the product
/// of Gi over S(eps). Throws std::domain_error for eps = (-1,...,-1).
Word gamma_epsilon_word(const std::vector<int>& eps);

/// Exact LP test: do H_eps1, H_eps2 and the open positive orthant meet?
bool epsilon_pair_feasible_lp(const std::vector<int>& eps1, const std::vector<int>& eps2);

/// The combinatorial criterion: with K = S1 & S2, I = S1 - K, J = S2 - K,
/// the pair is feasible iff I and J are nonempty and I + J + K misses an index.
bool epsilon_pair_feasible_combinatorial(const std::vector<int>& eps1,
                                         const std::vector<int>& eps2);

struct EpsilonRelation {
  std::vector<int> eps1, eps2;
  Word relator;          // [M_eps1^-1 G0 M_eps1, M_eps2^-1 G0 M_eps2]
  Word relator_reduced;  // same with the common part K cancelled
};

/// All feasible unordered epsilon pairs with their commutator relators,
/// feasibility decided by the exact LP. Canonical pair order.
std::vector<EpsilonRelation> fc_epsilon_relations(int n);

/// The (I, J) relator [M(I)^-1 G0 M(I), M(J)^-1 G0 M(J)] over G0..Gn.
Word model_pair_relator(const std::vector<int>& I, const std::vector<int>& J);

/// Just the (I, J) commutator family of the model presentation.
std::vector<Word> fc_model_pair_relators(int n);

}  // namespace fcpi
