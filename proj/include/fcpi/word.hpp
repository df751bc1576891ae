#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace fcpi {

/// A word in a free group: nonzero letters, +g for a generator (1-based),
/// -g for its inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

/// Replaces every occurrence of generator `gen` (1-based) by `repl`.
inline Word substitute(const Word& w, int gen, const Word& repl) {
  Word out;
  const Word repl_inv = inverse_word(repl);
  for (int letter : w) {
    if (letter == gen)
      out.insert(out.end(), repl.begin(), repl.end());
    else if (letter == -gen)
      out.insert(out.end(), repl_inv.begin(), repl_inv.end());
    else
      out.push_back(letter);
  }
  return free_reduce(out);
}

/// Deletes every letter whose generator satisfies the predicate.
template <typename Pred>
Word delete_letters(const Word& w, Pred drop) {
  Word out;
  for (int letter : w)
    if (!drop(std::abs(letter))) out.push_back(letter);
  return out;
}

/// Canonical form of a relator up to cyclic rotation and inversion:
/// the lexicographically smallest rotation of the word or its inverse.
inline Word canonical_cyclic(const Word& w_in) {
  const Word w = cyclic_reduce(w_in);
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, inverse_word(w)}) {
    Word rot = base;
    for (size_t k = 0; k < base.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace fcpi
