#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fcpi/arrangement.hpp"

namespace fcpi {

/// Directed 1-cell: the arrow from `source` across `wall` to `target`.
struct Cell1 {
  int source = -1;
  int wall = -1;
  int target = -1;
  int hyperplane = -1;  // the wall's supporting hyperplane

  bool operator==(const Cell1&) const = default;
};

/// 2-cell attached along the two shortest galleries from `base` to the
/// chamber opposite `face2`. The boundary relator is
/// word(gallery1) * word(gallery2)^-1, gallery1 being the arc whose first
/// crossing has the smaller hyperplane index. Letters are signed 1-based
/// Cell1 indices: +(i+1) forward, -(i+1) reversed.
struct Cell2 {
  int base = -1;
  int face2 = -1;
  int flat = -1;
  std::vector<int> gallery1;
  std::vector<int> gallery2;
  std::vector<int> boundary;

  bool operator==(const Cell2&) const = default;
};

struct Complex2 {
  Arrangement arr;
  FaceSet faces;
  std::vector<Cell1> cells1;
  std::vector<Cell2> cells2;

  std::map<SignVec, int> chamber_index;
  std::map<SignVec, int> wall_index;
  std::map<SignVec, int> face2_index;
  std::map<std::pair<int, int>, int> cell1_index;  // (source, wall) -> cell

  long long euler() const {
    return static_cast<long long>(faces.chambers.size()) -
           static_cast<long long>(cells1.size()) + static_cast<long long>(cells2.size());
  }
};

/// The chamber on the opposite side of `f`: flips sigma exactly where f is
/// zero. Requires f's closure condition (signs agree where f is nonzero).
Face opposite_chamber(const Face& sigma, const Face& f);

/// The two shortest galleries around the codim-2 face, as sequences of
/// Cell1 indices, ordered by the smaller first-crossing hyperplane index.
std::pair<std::vector<int>, std::vector<int>> galleries(const Complex2& cx, int chamber,
                                                        int face2);

Complex2 build_salvetti_2_skeleton(const Arrangement& arr);

}  // namespace fcpi
