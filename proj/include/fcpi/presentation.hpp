#pragma once

#include <string>
#include <vector>

#include "fcpi/quotient.hpp"
#include "fcpi/word.hpp"

namespace fcpi {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // stored cyclically reduced, letters 1-based

  bool operator==(const GroupPresentation&) const = default;
};

/// Number of epsilon hyperplanes separating the chamber from the origin
/// (the origin side of every eps.x = 1 is the minus side).
int height(const Arrangement& arr, const Face& chamber);

/// The spanning complex: the all-0-cells subcomplex built from
/// height-increasing type-1 arrows and interior discs based at their unique
/// height-minimizing vertex, plus a spanning tree inside the 1-cells.
struct SpanningData {
  std::vector<int> orbit_height;  // per quotient 0-cell
  std::vector<char> spanning1;    // per quotient 1-cell
  std::vector<char> spanning2;    // per quotient 2-cell
  std::vector<char> tree;         // subset of spanning1
  int base_orbit = -1;            // the height-0 orbit (sigma_0)
  bool h1_trivial = false;        // H_1(S; Z) vanishes (Smith normal form)
};
SpanningData spanning_cells(const QuotientComplex2& q);

enum class PresentationMode { Tree, SpanningComplex };

/// Presentation of the fundamental group of the quotient 2-complex.
/// Tree mode: generators are the 1-cells outside the spanning tree, one
/// relator per 2-cell with tree letters deleted. SpanningComplex mode:
/// generators are the non-spanning type-1 cells and all type-2 cells;
/// spanning 1-cell letters are deleted and spanning 2-cells dropped.
/// Raw generators are named e<orbit-cell-id>.
GroupPresentation presentation_from_complex(const QuotientComplex2& q, const SpanningData& s,
                                            PresentationMode mode);

/// Line format: "gens: a b c" then one "rel: a b^-1 ..." per relator.
std::string presentation_to_text(const GroupPresentation& p);
GroupPresentation presentation_from_text(const std::string& text);

}  // namespace fcpi
