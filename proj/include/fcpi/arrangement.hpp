#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcpi/lp.hpp"

namespace fcpi {

/// Sign vector over the hyperplane list: entries in {-1, 0, +1}.
/// Canonical order everywhere is lexicographic with -1 < 0 < +1.
using SignVec = std::vector<int8_t>;

std::string sign_vec_to_string(const SignVec& s);

struct Hyperplane {
  enum class Kind { Epsilon, Coordinate };
  std::vector<long> normal;
  long offset = 0;
  Kind kind = Kind::Epsilon;
  /// Epsilon planes carry their full sign pattern; coordinate planes {i} (1-based).
  std::vector<int> tag;

  bool operator==(const Hyperplane&) const = default;
};

/// A relatively open cell of the stratification, as a feasible sign vector.
struct Face {
  SignVec signs;
  int codim = 0;

  bool operator==(const Face&) const = default;
};

enum class FlatClass { EpsilonPair, MixedTriple, CoordinatePair, Other };

/// A codimension-2 intersection flat with its maximal containing set.
struct Flat2 {
  std::vector<int> zero_hyperplanes;  // sorted hyperplane indices
  FlatClass cls = FlatClass::Other;

  bool operator==(const Flat2&) const = default;
};

struct Arrangement {
  int dimension = 0;
  bool fc = false;  // built by build_fc_arrangement (enables F_C-only checks)
  std::vector<Hyperplane> hyperplanes;

  bool operator==(const Arrangement&) const = default;

  int size() const { return static_cast<int>(hyperplanes.size()); }

  /// Index of H_eps in the canonical ordering (F_C arrangements only).
  int epsilon_index(const std::vector<int>& eps) const;
  /// Index of the coordinate hyperplane x_i = 0, i 1-based.
  int coordinate_index(int i) const;

  /// Validates the structural invariants (nonzero primitive normals,
  /// pairwise distinct planes, F_C shape when tagged). Throws StructuralError.
  void validate() const;
};

/// The F_C arrangement in dimension n: the 2^n planes eps.x = 1 in
/// lexicographic eps order (+1 before -1), then the n coordinate planes.
Arrangement build_fc_arrangement(int n);

/// Exact signs of <a,p> - b at a rational point, in hyperplane order.
SignVec signs_at_point(const Arrangement& arr, const std::vector<Rat>& p);

/// True iff some x satisfies <a_j,x> - b_j  >0 / <0 / =0 exactly as signs
/// prescribes. Exact slack-maximization LP; total function.
bool strict_feasible(const Arrangement& arr, const SignVec& signs);

/// Witness point for a feasible prescription, if any.
std::optional<std::vector<Rat>> witness_point(const Arrangement& arr, const SignVec& signs);

/// Batched feasibility: result[i] == strict_feasible(arr, candidates[i]).
/// Candidates are evaluated concurrently; output order matches input order.
std::vector<char> feasible_batch(const Arrangement& arr, const std::vector<SignVec>& candidates);

/// All chambers by breadth-first wall crossing from an interior seed point,
/// sorted canonically.
std::vector<Face> enumerate_chambers(const Arrangement& arr);

/// Reference oracle: test all 2^|H| full sign vectors. Parallel and serial
/// variants return identical output; both sorted canonically.
std::vector<Face> enumerate_chambers_exhaustive(const Arrangement& arr);
std::vector<Face> enumerate_chambers_exhaustive_serial(const Arrangement& arr);

/// Every codim-1 face (exactly one zero entry), sorted canonically.
std::vector<Face> enumerate_codim1_faces(const Arrangement& arr, const std::vector<Face>& chambers);

/// All nonempty codim-2 flats with maximal hyperplane sets, classified.
/// Empty for dimension < 2. Parallel pairs contribute nothing.
std::vector<Flat2> enumerate_flats2(const Arrangement& arr);

/// All codim-2 faces; face2_flat[i] is the index of the flat carrying face i.
struct Codim2Faces {
  std::vector<Face> faces;
  std::vector<int> face_flat;
};
Codim2Faces enumerate_codim2_faces(const Arrangement& arr, const std::vector<Face>& chambers,
                                   const std::vector<Flat2>& flats);

/// Everything the 2-skeleton needs, enumerated once.
struct FaceSet {
  std::vector<Face> chambers;
  std::vector<Face> walls;
  std::vector<Flat2> flats;
  std::vector<Face> faces2;
  std::vector<int> face2_flat;
};
FaceSet enumerate_all(const Arrangement& arr);

}  // namespace fcpi
