#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace fcpi {

using Rat = mpq_class;

/// One linear condition on x in Q^n. `Eq` means <coeff,x> = rhs,
/// `Gt` means <coeff,x> > rhs (strict).
struct LinearCondition {
  enum class Rel { Eq, Gt };
  std::vector<Rat> coeff;
  Rat rhs;
  Rel rel = Rel::Gt;
};

/// A conjunction of exact equalities and strict inequalities.
struct StrictSystem {
  int num_vars = 0;
  std::vector<LinearCondition> rows;
};

struct StrictWitness {
  Rat slack;                // optimal common slack t, capped at 1
  std::vector<Rat> point;   // a point achieving it
};

/// Decides nonemptiness of the open polyhedron described by `sys`.
///
/// Strict inequalities are handled by maximizing a common slack t subject to
/// <a,x> - b >= t for every strict row, the equalities, and t <= 1. The
/// system is feasible iff the optimum is positive. All arithmetic is exact
/// over the rationals; the simplex uses Bland's rule and therefore
/// terminates. Returns the witness point on success.
std::optional<StrictWitness> strict_witness(const StrictSystem& sys);

inline bool strict_feasible_system(const StrictSystem& sys) {
  return strict_witness(sys).has_value();
}

}  // namespace fcpi
