// Test-only reference implementations, deliberately independent of the
// library's solvers: Fourier-Motzkin feasibility, brute-force homomorphism
// counting, and the classical line-arrangement region count.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fcpi/arrangement.hpp"
#include "fcpi/finite_group.hpp"
#include "fcpi/lp.hpp"
#include "fcpi/presentation.hpp"

namespace fcpi::testing {

// Strict-system feasibility by substitution of equalities followed by
// Fourier-Motzkin elimination. Exponential, fine for tiny systems.
inline bool fme_feasible(StrictSystem sys) {
  // Equalities: substitute one variable at a time.
  for (;;) {
    int row = -1, var = -1;
    for (size_t r = 0; r < sys.rows.size() && row < 0; ++r) {
      if (sys.rows[r].rel != LinearCondition::Rel::Eq) continue;
      for (int v = 0; v < sys.num_vars; ++v)
        if (sgn(sys.rows[r].coeff[v]) != 0) {
          row = static_cast<int>(r);
          var = v;
          break;
        }
      if (row < 0) {
        // 0 = rhs
        if (sgn(sys.rows[r].rhs) != 0) return false;
        sys.rows.erase(sys.rows.begin() + r);
        --r;
      }
    }
    if (row < 0) break;
    // x_var = (rhs - rest) / c
    const LinearCondition eq = sys.rows[row];
    sys.rows.erase(sys.rows.begin() + row);
    const Rat c = eq.coeff[var];
    for (auto& r : sys.rows) {
      if (sgn(r.coeff[var]) == 0) continue;
      const Rat f = r.coeff[var] / c;
      for (int v = 0; v < sys.num_vars; ++v) r.coeff[v] -= f * eq.coeff[v];
      r.rhs -= f * eq.rhs;
      r.coeff[var] = 0;
    }
  }

  // Strict inequalities <a,x> > b; eliminate variables one by one.
  for (int var = 0; var < sys.num_vars; ++var) {
    std::vector<LinearCondition> lower, upper, rest;
    for (auto& r : sys.rows) {
      const int s = sgn(r.coeff[var]);
      if (s > 0)
        lower.push_back(r);
      else if (s < 0)
        upper.push_back(r);
      else
        rest.push_back(r);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo: c x > b - rest_lo (c>0);  up: -d x > b' - rest_up (d>0)
        LinearCondition combo;
        combo.coeff.assign(sys.num_vars, Rat(0));
        const Rat c = lo.coeff[var];
        const Rat d = -up.coeff[var];
        for (int v = 0; v < sys.num_vars; ++v)
          combo.coeff[v] = d * lo.coeff[v] + c * up.coeff[v];
        combo.rhs = d * lo.rhs + c * up.rhs;
        combo.coeff[var] = 0;
        combo.rel = LinearCondition::Rel::Gt;
        rest.push_back(std::move(combo));
      }
    }
    sys.rows = std::move(rest);
  }
  for (const auto& r : sys.rows)
    if (sgn(r.rhs) >= 0) return false;  // needs 0 > rhs
  return true;
}

inline StrictSystem system_from_signs(const Arrangement& arr, const SignVec& signs) {
  StrictSystem sys;
  sys.num_vars = arr.dimension;
  for (int j = 0; j < arr.size(); ++j) {
    LinearCondition row;
    row.coeff.resize(arr.dimension);
    const int s = signs[j];
    for (int i = 0; i < arr.dimension; ++i)
      row.coeff[i] = (s == 0 ? 1 : s) * arr.hyperplanes[j].normal[i];
    row.rhs = (s == 0 ? 1 : s) * arr.hyperplanes[j].offset;
    row.rel = s == 0 ? LinearCondition::Rel::Eq : LinearCondition::Rel::Gt;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

// Full enumeration of generator images, no pruning.
inline long long naive_hom_count(const GroupPresentation& p, const FiniteGroupTable& t) {
  const int g = static_cast<int>(p.generators.size());
  long long total = 0;
  std::vector<int> images(g, 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = t.identity;
      for (int letter : r) {
        const int img = images[std::abs(letter) - 1];
        acc = t.times(acc, letter > 0 ? img : t.inverse[img]);
      }
      if (acc != t.identity) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int k = g - 1;
    while (k >= 0 && images[k] == t.order - 1) images[k--] = 0;
    if (k < 0) break;
    ++images[k];
  }
  return total;
}

// Regions of a line arrangement in the plane: 1 + L + sum over intersection
// points of (multiplicity - 1). Exact rational intersections.
inline long long line_arrangement_regions(const Arrangement& arr) {
  struct Pt {
    Rat x, y;
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
  };
  std::map<Pt, std::set<int>> points;
  const int m = arr.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& a = arr.hyperplanes[i];
      const auto& b = arr.hyperplanes[j];
      const Rat det = Rat(a.normal[0]) * b.normal[1] - Rat(a.normal[1]) * b.normal[0];
      if (sgn(det) == 0) continue;
      Pt p;
      p.x = (Rat(a.offset) * b.normal[1] - Rat(b.offset) * a.normal[1]) / det;
      p.y = (Rat(a.normal[0]) * b.offset - Rat(b.normal[0]) * a.offset) / det;
      points[p].insert(i);
      points[p].insert(j);
    }
  }
  long long total = 1 + m;
  for (const auto& [p, lines] : points) total += static_cast<long long>(lines.size()) - 1;
  return total;
}

// Codim-1 face count of a line arrangement: each line is split into one more
// piece than it carries intersection points.
inline long long line_arrangement_segments(const Arrangement& arr) {
  long long total = 0;
  const int m = arr.size();
  for (int i = 0; i < m; ++i) {
    std::set<std::pair<std::string, std::string>> pts;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const auto& a = arr.hyperplanes[i];
      const auto& b = arr.hyperplanes[j];
      const Rat det = Rat(a.normal[0]) * b.normal[1] - Rat(a.normal[1]) * b.normal[0];
      if (sgn(det) == 0) continue;
      const Rat x = (Rat(a.offset) * b.normal[1] - Rat(b.offset) * a.normal[1]) / det;
      const Rat y = (Rat(a.normal[0]) * b.offset - Rat(b.normal[0]) * a.offset) / det;
      pts.insert({x.get_str(), y.get_str()});
    }
    total += static_cast<long long>(pts.size()) + 1;
  }
  return total;
}

}  // namespace fcpi::testing
