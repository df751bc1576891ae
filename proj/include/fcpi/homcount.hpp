#pragma once

#include <cstdint>

#include "fcpi/finite_group.hpp"
#include "fcpi/presentation.hpp"

namespace fcpi {

/// Default cap on multiplication-table lookups per count (overridable by the
/// FCPI_HOM_BUDGET environment variable at the CLI level).
constexpr long long kDefaultHomBudget = 1'000'000'000;

/// Exact number of homomorphisms from the presented group into the finite
/// group: generator images enumerated by backtracking, every relator checked
/// as soon as its last generator is assigned. Throws BudgetError when the
/// lookup budget runs out (never returns a wrong count).
///
/// The parallel variant splits on the image of the first generator and sums
/// the per-image counts in order; totals match the serial reference.
long long count_homs(const GroupPresentation& p, const FiniteGroupTable& t,
                     long long budget = kDefaultHomBudget);
long long count_homs_serial(const GroupPresentation& p, const FiniteGroupTable& t,
                            long long budget = kDefaultHomBudget);

}  // namespace fcpi
