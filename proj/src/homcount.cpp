#include "fcpi/homcount.hpp"

#include <omp.h>

#include <algorithm>

#include "fcpi/errors.hpp"

namespace fcpi {

namespace {

struct CompiledLetter {
  int gen;  // 0-based
  bool inverted;
};

struct CompiledRelator {
  std::vector<CompiledLetter> letters;
  int max_gen = -1;
};

// Relators bucketed by the highest generator they mention: each is checked
// the moment that generator receives an image.
std::vector<std::vector<CompiledRelator>> compile_by_last_gen(const GroupPresentation& p) {
  const int g = static_cast<int>(p.generators.size());
  std::vector<std::vector<CompiledRelator>> by_gen(std::max(g, 1));
  for (const auto& r : p.relators) {
    CompiledRelator cr;
    for (int letter : r) {
      cr.letters.push_back({std::abs(letter) - 1, letter < 0});
      cr.max_gen = std::max(cr.max_gen, std::abs(letter) - 1);
    }
    if (cr.max_gen >= 0) by_gen[cr.max_gen].push_back(std::move(cr));
  }
  return by_gen;
}

// images[0..level] are assigned; checks level's relators, then extends.
long long expand(const FiniteGroupTable& t,
                 const std::vector<std::vector<CompiledRelator>>& by_gen,
                 std::vector<int>& images, int level, int num_gens, long long& budget) {
  for (const auto& r : by_gen[level]) {
    budget -= static_cast<long long>(r.letters.size());
    if (budget < 0) throw BudgetError("hom-count lookup budget exceeded");
    int acc = t.identity;
    for (const auto& l : r.letters) {
      const int v = l.inverted ? t.inverse[images[l.gen]] : images[l.gen];
      acc = t.times(acc, v);
    }
    if (acc != t.identity) return 0;
  }
  if (level + 1 == num_gens) return 1;
  long long total = 0;
  for (int img = 0; img < t.order; ++img) {
    images[level + 1] = img;
    total += expand(t, by_gen, images, level + 1, num_gens, budget);
  }
  return total;
}

long long count_impl(const GroupPresentation& p, const FiniteGroupTable& t, long long budget,
                     bool parallel) {
  const int g = static_cast<int>(p.generators.size());
  if (g == 0) return 1;
  const auto by_gen = compile_by_last_gen(p);

  // The budget is split evenly over the first generator's images so the
  // serial and parallel schedules consume it identically.
  const long long slice = budget / t.order;
  std::vector<long long> counts(t.order, 0);
  std::vector<char> failed(t.order, 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int img = 0; img < t.order; ++img) {
    std::vector<int> images(g);
    images[0] = img;
    long long local = slice;
    try {
      counts[img] = expand(t, by_gen, images, 0, g, local);
    } catch (const BudgetError&) {
      failed[img] = 1;
    }
  }

  for (char f : failed)
    if (f) throw BudgetError("hom-count lookup budget exceeded");
  long long total = 0;
  for (long long c : counts) total += c;
  return total;
}

}  // namespace

long long count_homs(const GroupPresentation& p, const FiniteGroupTable& t, long long budget) {
  return count_impl(p, t, budget, true);
}

long long count_homs_serial(const GroupPresentation& p, const FiniteGroupTable& t,
                            long long budget) {
  return count_impl(p, t, budget, false);
}

}  // namespace fcpi
