#pragma once

#include <optional>

#include "fcpi/quotient.hpp"
#include "fcpi/tietze.hpp"

namespace fcpi {

/// Orbit 1-cells of the distinguished loops: gamma[i] for i = 1..n is the
/// type-2 loop of sigma_0 on x_i = 0; gamma[0] is the inward arrow over the
/// wall of sigma_0 on the all-plus epsilon plane (the cell whose class is
/// inverse to the outward arrow, which lies in the spanning complex).
std::vector<int> gamma_orbit_cells(const QuotientComplex2& q);

/// Renames a simplified spanning-mode presentation's generators to G0..Gn by
/// following the gamma cells through the elimination trace. Succeeds only
/// when the trace maps each gamma cell to a single distinct generator and
/// those cover the whole generator set.
std::optional<GroupPresentation> rename_to_model_generators(const QuotientComplex2& q,
                                                            const GroupPresentation& raw,
                                                            const TietzeResult& simplified);

}  // namespace fcpi
