#pragma once

#include <vector>

#include "fcpi/salvetti.hpp"

namespace fcpi {

/// An element of the sign-flip group: entrywise products, all-ones identity.
struct SignFlip {
  std::vector<int8_t> g;  // entries in {-1, +1}

  bool identity() const {
    for (int8_t v : g)
      if (v != 1) return false;
    return true;
  }
  bool operator==(const SignFlip&) const = default;
};

/// All 2^n flips in the canonical order (+1 sorts before -1 per coordinate).
std::vector<SignFlip> all_sign_flips(int n);

/// How a flip permutes the hyperplane list: plane j maps onto plane perm[j],
/// with its linear form scaled by mult[j]. Throws StructuralError when the
/// arrangement is not stable under the flip.
struct HyperplaneAction {
  std::vector<int> perm;
  std::vector<int8_t> mult;
};
HyperplaneAction action_on_hyperplanes(const Arrangement& arr, const SignFlip& g);

/// Image of a face's sign vector under the flip.
SignVec act_signs(const HyperplaneAction& action, const SignVec& signs);
SignVec act_signs(const Arrangement& arr, const SignFlip& g, const SignVec& signs);

/// True iff no nonidentity flip fixes any 0-, 1- or 2-cell.
bool verify_free_action(const Complex2& cx);

enum class OneCellType { Type1, Type2 };          // epsilon wall / coordinate wall
enum class DiscType { Interior, Boundary, Coordinate };

struct OrbitCell0 {
  int rep = -1;  // upstairs chamber index
  int orbit_size = 0;
};

struct OrbitCell1 {
  int rep = -1;  // upstairs Cell1 index
  OneCellType type = OneCellType::Type1;
  int source = -1;  // orbit 0-cell indices
  int target = -1;
  int hyperplane = -1;  // rep's supporting hyperplane
  int orbit_size = 0;
};

struct OrbitCell2 {
  int rep = -1;  // upstairs Cell2 index
  DiscType type = DiscType::Interior;
  std::vector<int> boundary;  // signed 1-based orbit 1-cell letters
  int orbit_size = 0;
};

struct QuotientComplex2 {
  Complex2 full;  // the covering complex, kept for lifts
  int group_order = 1;
  std::vector<OrbitCell0> cells0;
  std::vector<OrbitCell1> cells1;
  std::vector<OrbitCell2> cells2;
  std::vector<int> chamber_orbit;  // upstairs chamber -> orbit index
  std::vector<int> cell1_orbit;
  std::vector<int> cell2_orbit;

  long long euler() const {
    return static_cast<long long>(cells0.size()) - static_cast<long long>(cells1.size()) +
           static_cast<long long>(cells2.size());
  }
};

/// Orbit complex of the sign-flip action. Representatives are chosen in the
/// closed positive orthant (all coordinate signs +) where the orbit has one;
/// attaching words are projected from the representative's lift.
QuotientComplex2 build_quotient(const Complex2& cx);

/// The projected boundary word of upstairs cell `cell2` (any lift).
std::vector<int> project_boundary(const QuotientComplex2& q, int cell2);

}  // namespace fcpi
