#include "fcpi/gamma.hpp"

#include <algorithm>
#include <map>

#include "fcpi/errors.hpp"

namespace fcpi {

std::vector<int> gamma_orbit_cells(const QuotientComplex2& q) {
  const Arrangement& arr = q.full.arr;
  const int n = arr.dimension;
  if (!arr.fc) throw StructuralError("gamma cells exist only for F_C arrangements");

  SignVec sigma0(arr.size());
  for (int j = 0; j < arr.size(); ++j)
    sigma0[j] = arr.hyperplanes[j].kind == Hyperplane::Kind::Epsilon ? -1 : 1;
  const auto s0 = q.full.chamber_index.find(sigma0);
  if (s0 == q.full.chamber_index.end()) throw StructuralError("sigma_0 not found");

  std::vector<int> gamma(n + 1, -1);
  {
    // gamma_0: cross the all-plus epsilon wall outward, take the return arrow.
    std::vector<int> all_plus(n, 1);
    const int h = arr.epsilon_index(all_plus);
    SignVec wall = sigma0;
    wall[h] = 0;
    const auto wit = q.full.wall_index.find(wall);
    if (wit == q.full.wall_index.end()) throw StructuralError("tau_0 wall not found");
    SignVec sigma1 = sigma0;
    sigma1[h] = 1;
    const auto s1 = q.full.chamber_index.find(sigma1);
    if (s1 == q.full.chamber_index.end()) throw StructuralError("chamber across tau_0 not found");
    const auto cit = q.full.cell1_index.find({s1->second, wit->second});
    if (cit == q.full.cell1_index.end()) throw StructuralError("gamma_0 cell not found");
    gamma[0] = q.cell1_orbit[cit->second];
  }
  for (int i = 1; i <= n; ++i) {
    SignVec wall = sigma0;
    wall[arr.coordinate_index(i)] = 0;
    const auto wit = q.full.wall_index.find(wall);
    if (wit == q.full.wall_index.end()) throw StructuralError("tau_i wall not found");
    const auto cit = q.full.cell1_index.find({s0->second, wit->second});
    if (cit == q.full.cell1_index.end()) throw StructuralError("gamma_i cell not found");
    gamma[i] = q.cell1_orbit[cit->second];
  }
  return gamma;
}

std::optional<GroupPresentation> rename_to_model_generators(const QuotientComplex2& q,
                                                            const GroupPresentation& raw,
                                                            const TietzeResult& simplified) {
  const int n = q.full.arr.dimension;
  const int old_gens = static_cast<int>(simplified.presentation.generators.size());
  if (old_gens != n + 1) return std::nullopt;

  std::map<std::string, int> raw_pos;
  for (size_t i = 0; i < raw.generators.size(); ++i)
    raw_pos[raw.generators[i]] = static_cast<int>(i);
  const auto gamma = gamma_orbit_cells(q);

  // Mixed alphabet: 1..old_gens are the survivors, old_gens+1+i is G_i.
  // Each G_i is defined by the trace image of its gamma cell; eliminating
  // every survivor rewrites the relators over G0..Gn.
  std::vector<Word> defs(n + 1);
  for (int i = 0; i <= n; ++i) {
    const auto it = raw_pos.find("e" + std::to_string(gamma[i]));
    if (it == raw_pos.end()) return std::nullopt;
    Word d{-(old_gens + 1 + i)};
    const Word& img = simplified.image_of_input[it->second];
    d.insert(d.end(), img.begin(), img.end());
    defs[i] = d;
  }
  std::vector<Word> relators = simplified.presentation.relators;

  std::vector<char> alive(old_gens + 1, 1);
  int remaining = old_gens;
  while (remaining > 0) {
    int def_idx = -1, gen = 0, pos = -1;
    for (int i = 0; i <= n && def_idx < 0; ++i) {
      for (size_t p = 0; p < defs[i].size(); ++p) {
        const int g = std::abs(defs[i][p]);
        if (g > old_gens || !alive[g]) continue;
        int count = 0;
        for (int letter : defs[i])
          if (std::abs(letter) == g) ++count;
        if (count == 1) {
          def_idx = i;
          gen = g;
          pos = static_cast<int>(p);
          break;
        }
      }
    }
    if (def_idx < 0) return std::nullopt;
    Word r = defs[def_idx];
    std::rotate(r.begin(), r.begin() + pos, r.end());
    Word rest(r.begin() + 1, r.end());
    const Word replacement = r[0] > 0 ? inverse_word(rest) : rest;
    defs[def_idx] = {};  // consumed
    alive[gen] = 0;
    --remaining;
    for (auto& rel : relators) rel = substitute(rel, gen, replacement);
    for (auto& d : defs)
      if (!d.empty()) d = substitute(d, gen, replacement);
  }
  // Any unconsumed definition must now be a tautology G_i = word(G);
  // a nontrivial residue means the gamma words were not a basis.
  for (const auto& d : defs)
    if (!cyclic_reduce(d).empty()) return std::nullopt;

  GroupPresentation out;
  for (int i = 0; i <= n; ++i) out.generators.push_back("G" + std::to_string(i));
  for (const auto& r : relators) {
    Word w;
    for (int letter : r) {
      const int g = std::abs(letter) - old_gens;
      if (g <= 0) return std::nullopt;
      w.push_back(letter > 0 ? g : -g);
    }
    w = cyclic_reduce(w);
    if (!w.empty()) out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace fcpi
