#include "fcpi/fc_model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fcpi/lp.hpp"

namespace fcpi {

namespace {

// Letter of Gi: G0 is letter 1, Gi is letter i+1.
int gen_letter(int i) { return i + 1; }

Word conjugated_g0(const std::vector<int>& subset) {
  Word m;
  for (int i : subset) m.push_back(gen_letter(i));
  Word w = inverse_word(m);
  w.push_back(gen_letter(0));
  w.insert(w.end(), m.begin(), m.end());
  return w;
}

Word commutator(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  const Word ai = inverse_word(a);
  const Word bi = inverse_word(b);
  w.insert(w.end(), ai.begin(), ai.end());
  w.insert(w.end(), bi.begin(), bi.end());
  return cyclic_reduce(w);
}

std::vector<int> mask_to_set(int mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask & (1 << (i - 1))) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> epsilon_support(const std::vector<int>& eps) {
  std::vector<int> out;
  for (size_t i = 0; i < eps.size(); ++i)
    if (eps[i] < 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

GroupPresentation fc_model_presentation(int n) {
  GroupPresentation p;
  for (int i = 0; i <= n; ++i) p.generators.push_back("G" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      p.relators.push_back(commutator({gen_letter(i)}, {gen_letter(j)}));
  for (int i = 1; i <= n; ++i) {
    // (G0 Gi)^2 (Gi G0)^-2
    const int a = gen_letter(0), b = gen_letter(i);
    p.relators.push_back(cyclic_reduce({a, b, a, b, -a, -b, -a, -b}));
  }
  for (auto& r : fc_model_pair_relators(n)) p.relators.push_back(std::move(r));
  return p;
}

std::vector<Word> fc_model_pair_relators(int n) {
  // Unordered disjoint nonempty pairs with |I| + |J| <= n - 1, I lex-before J.
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) subsets.push_back(mask_to_set(mask, n));
  std::sort(subsets.begin(), subsets.end());
  std::vector<Word> out;
  for (size_t a = 0; a < subsets.size(); ++a) {
    for (size_t b = a + 1; b < subsets.size(); ++b) {
      const auto& I = subsets[a];
      const auto& J = subsets[b];
      if (static_cast<int>(I.size() + J.size()) > n - 1) continue;
      std::vector<int> inter;
      std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(inter));
      if (!inter.empty()) continue;
      out.push_back(model_pair_relator(I, J));
    }
  }
  return out;
}

Word model_pair_relator(const std::vector<int>& I, const std::vector<int>& J) {
  return commutator(conjugated_g0(I), conjugated_g0(J));
}

Word gamma_epsilon_word(const std::vector<int>& eps) {
  const auto s = epsilon_support(eps);
  if (s.size() == eps.size())
    throw std::domain_error("gamma_epsilon is undefined for the all-minus vector");
  return conjugated_g0(s);
}

bool epsilon_pair_feasible_lp(const std::vector<int>& eps1, const std::vector<int>& eps2) {
  const int n = static_cast<int>(eps1.size());
  StrictSystem sys;
  sys.num_vars = n;
  for (int i = 0; i < n; ++i) {
    LinearCondition row;
    row.coeff.assign(n, Rat(0));
    row.coeff[i] = 1;
    row.rhs = 0;
    row.rel = LinearCondition::Rel::Gt;
    sys.rows.push_back(std::move(row));
  }
  for (const auto* eps : {&eps1, &eps2}) {
    LinearCondition row;
    row.coeff.resize(n);
    for (int i = 0; i < n; ++i) row.coeff[i] = (*eps)[i];
    row.rhs = 1;
    row.rel = LinearCondition::Rel::Eq;
    sys.rows.push_back(std::move(row));
  }
  return strict_feasible_system(sys);
}

bool epsilon_pair_feasible_combinatorial(const std::vector<int>& eps1,
                                         const std::vector<int>& eps2) {
  const int n = static_cast<int>(eps1.size());
  const auto s1 = epsilon_support(eps1);
  const auto s2 = epsilon_support(eps2);
  std::vector<int> k, i, j;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(k));
  std::set_difference(s1.begin(), s1.end(), k.begin(), k.end(), std::back_inserter(i));
  std::set_difference(s2.begin(), s2.end(), k.begin(), k.end(), std::back_inserter(j));
  return !i.empty() && !j.empty() &&
         static_cast<int>(i.size() + j.size() + k.size()) < n;
}

std::vector<EpsilonRelation> fc_epsilon_relations(int n) {
  std::vector<std::vector<int>> all;
  for (int k = 0; k < (1 << n); ++k) {
    std::vector<int> eps(n);
    for (int i = 0; i < n; ++i) eps[i] = ((k >> (n - 1 - i)) & 1) ? -1 : 1;
    all.push_back(std::move(eps));
  }
  std::vector<EpsilonRelation> out;
  for (size_t a = 0; a < all.size(); ++a) {
    for (size_t b = a + 1; b < all.size(); ++b) {
      if (!epsilon_pair_feasible_lp(all[a], all[b])) continue;
      EpsilonRelation rel;
      rel.eps1 = all[a];
      rel.eps2 = all[b];
      rel.relator = commutator(conjugated_g0(epsilon_support(all[a])),
                               conjugated_g0(epsilon_support(all[b])));
      const auto s1 = epsilon_support(all[a]);
      const auto s2 = epsilon_support(all[b]);
      std::vector<int> k, i, j;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(k));
      std::set_difference(s1.begin(), s1.end(), k.begin(), k.end(), std::back_inserter(i));
      std::set_difference(s2.begin(), s2.end(), k.begin(), k.end(), std::back_inserter(j));
      rel.relator_reduced = model_pair_relator(i, j);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

}  // namespace fcpi
