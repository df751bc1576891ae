#include "fcpi/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fcpi {

namespace {

// Sort key: shorter relators first, then lexicographic; keeps every pass
// deterministic regardless of how relators were produced.
void normalize_relators(std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (seen.insert(canonical_cyclic(w)).second) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  relators = std::move(out);
}

int count_occurrences(const Word& w, int gen) {
  int c = 0;
  for (int letter : w)
    if (std::abs(letter) == gen) ++c;
  return c;
}

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, long long budget) {
  const int n = static_cast<int>(p.generators.size());
  std::vector<char> alive(n + 1, 1);  // 1-based
  std::vector<Word> relators = p.relators;
  std::vector<Word> image(n);
  for (int g = 1; g <= n; ++g) image[g - 1] = {g};

  TietzeResult res;
  normalize_relators(relators);
  for (;;) {
    // A relator of length one kills its generator outright.
    int trivial_gen = 0;
    for (const auto& r : relators)
      if (r.size() == 1) {
        trivial_gen = std::abs(r[0]);
        break;
      }
    if (trivial_gen) {
      if (budget <= 0) {
        res.budget_exhausted = true;
        break;
      }
      alive[trivial_gen] = 0;
      for (auto& r : relators) r = substitute(r, trivial_gen, {});
      for (auto& w : image) w = substitute(w, trivial_gen, {});
      normalize_relators(relators);
      --budget;
      continue;
    }

    // Otherwise eliminate a generator some relator isolates: the relator
    // r = g^e u defines g, and g is replaced everywhere by the rest of r.
    int pick_rel = -1, pick_gen = 0, pick_pos = -1;
    for (size_t ri = 0; ri < relators.size() && pick_rel < 0; ++ri) {
      const Word& r = relators[ri];
      for (size_t pos = 0; pos < r.size(); ++pos) {
        const int g = std::abs(r[pos]);
        if (count_occurrences(r, g) == 1) {
          pick_rel = static_cast<int>(ri);
          pick_gen = g;
          pick_pos = static_cast<int>(pos);
          break;
        }
      }
    }
    if (pick_rel < 0) break;  // fixpoint
    if (budget <= 0) {
      res.budget_exhausted = true;
      break;
    }

    Word r = relators[pick_rel];
    std::rotate(r.begin(), r.begin() + pick_pos, r.end());
    Word rest(r.begin() + 1, r.end());
    const Word replacement = r[0] > 0 ? inverse_word(rest) : rest;
    relators.erase(relators.begin() + pick_rel);
    alive[pick_gen] = 0;
    for (auto& rel : relators) rel = substitute(rel, pick_gen, replacement);
    for (auto& w : image) w = substitute(w, pick_gen, replacement);
    normalize_relators(relators);
    --budget;
  }

  // Compact to surviving generators, preserving names and order.
  std::vector<int> new_index(n + 1, 0);
  for (int g = 1; g <= n; ++g) {
    if (!alive[g]) continue;
    new_index[g] = static_cast<int>(res.presentation.generators.size()) + 1;
    res.presentation.generators.push_back(p.generators[g - 1]);
  }
  auto remap = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
      const int g = new_index[std::abs(letter)];
      out.push_back(letter > 0 ? g : -g);
    }
    return out;
  };
  for (const auto& r : relators) res.presentation.relators.push_back(remap(r));
  res.image_of_input.reserve(n);
  for (const auto& w : image) res.image_of_input.push_back(remap(w));
  return res;
}

}  // namespace fcpi
