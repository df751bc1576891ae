#pragma once

#include <string>
#include <vector>

namespace fcpi {

/// Multiplication table of a small finite group; axioms are checked once
/// at construction.
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<int> mul;  // row-major: mul[a * order + b] = a * b
  std::vector<std::string> element_names;
  int identity = -1;
  std::vector<int> inverse;

  int times(int a, int b) const { return mul[a * order + b]; }

  /// Throws StructuralError if the table is not a group.
  void validate() const;
};

FiniteGroupTable cyclic_group(int k);
FiniteGroupTable symmetric_group_3();
FiniteGroupTable dihedral_group_8();
FiniteGroupTable alternating_group_4();

/// The default battery: C2, C3, S3, D4, A4.
std::vector<FiniteGroupTable> default_battery();

/// Subset of the default battery by name ("C2", "C3", "S3", "D4", "A4").
std::vector<FiniteGroupTable> battery_by_names(const std::vector<std::string>& names);

}  // namespace fcpi
