#pragma once

#include "fcpi/presentation.hpp"

namespace fcpi {

struct TietzeResult {
  GroupPresentation presentation;
  bool budget_exhausted = false;
  /// Image of each input generator as a word over the output generators.
  std::vector<Word> image_of_input;
};

/// Deterministic greedy simplification by elementary Tietze moves: free and
/// cyclic reduction, relator deduplication up to rotation/inversion, removal
/// of generators isolated by a relator (shortest defining relator first).
/// The output presents a group isomorphic to the input's. Stops at a
/// fixpoint or after `budget` elimination steps (flag set when it runs out).
TietzeResult tietze_simplify(const GroupPresentation& p, long long budget = 10000);

}  // namespace fcpi
