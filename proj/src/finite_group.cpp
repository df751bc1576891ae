#include "fcpi/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fcpi/errors.hpp"

namespace fcpi {

void FiniteGroupTable::validate() const {
  if (order <= 0 || static_cast<int>(mul.size()) != order * order)
    throw StructuralError("group table has wrong size");
  for (int v : mul)
    if (v < 0 || v >= order) throw StructuralError("group table entry out of range");
  if (identity < 0 || identity >= order) throw StructuralError("missing identity");
  for (int a = 0; a < order; ++a)
    if (times(identity, a) != a || times(a, identity) != a)
      throw StructuralError("identity law fails");
  if (static_cast<int>(inverse.size()) != order) throw StructuralError("missing inverses");
  for (int a = 0; a < order; ++a)
    if (times(a, inverse[a]) != identity || times(inverse[a], a) != identity)
      throw StructuralError("inverse law fails");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (times(times(a, b), c) != times(a, times(b, c)))
          throw StructuralError("associativity fails");
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

std::string perm_name(const Perm& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

// Closure of the generating permutations, elements sorted lexicographically.
FiniteGroupTable permutation_group(const std::string& name, int points,
                                   const std::vector<Perm>& gens) {
  Perm id(points);
  for (int i = 0; i < points; ++i) id[i] = i;
  std::set<Perm> elements{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Perm q = compose(g, p);
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<Perm> elems(elements.begin(), elements.end());
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

  FiniteGroupTable t;
  t.name = name;
  t.order = static_cast<int>(elems.size());
  t.mul.resize(t.order * t.order);
  t.inverse.resize(t.order);
  for (int a = 0; a < t.order; ++a) {
    t.element_names.push_back(perm_name(elems[a]));
    for (int b = 0; b < t.order; ++b) t.mul[a * t.order + b] = index[compose(elems[a], elems[b])];
  }
  t.identity = index[id];
  for (int a = 0; a < t.order; ++a) {
    Perm inv(points);
    for (int x = 0; x < points; ++x) inv[elems[a][x]] = x;
    t.inverse[a] = index[inv];
  }
  t.validate();
  return t;
}

}  // namespace

FiniteGroupTable cyclic_group(int k) {
  FiniteGroupTable t;
  t.name = "C" + std::to_string(k);
  t.order = k;
  t.mul.resize(k * k);
  t.inverse.resize(k);
  for (int a = 0; a < k; ++a) {
    t.element_names.push_back(std::to_string(a));
    for (int b = 0; b < k; ++b) t.mul[a * k + b] = (a + b) % k;
    t.inverse[a] = (k - a) % k;
  }
  t.identity = 0;
  t.validate();
  return t;
}

FiniteGroupTable symmetric_group_3() {
  return permutation_group("S3", 3, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroupTable dihedral_group_8() {
  // Square corner rotation and a reflection.
  return permutation_group("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

FiniteGroupTable alternating_group_4() {
  return permutation_group("A4", 4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
}

std::vector<FiniteGroupTable> default_battery() {
  return {cyclic_group(2), cyclic_group(3), symmetric_group_3(), dihedral_group_8(),
          alternating_group_4()};
}

std::vector<FiniteGroupTable> battery_by_names(const std::vector<std::string>& names) {
  std::vector<FiniteGroupTable> out;
  for (const auto& n : names) {
    if (n == "C2")
      out.push_back(cyclic_group(2));
    else if (n == "C3")
      out.push_back(cyclic_group(3));
    else if (n == "S3")
      out.push_back(symmetric_group_3());
    else if (n == "D4")
      out.push_back(dihedral_group_8());
    else if (n == "A4")
      out.push_back(alternating_group_4());
    else
      throw ParseError("unknown battery group: " + n);
  }
  return out;
}

}  // namespace fcpi
