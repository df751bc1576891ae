#include "fcpi/quotient.hpp"

#include <algorithm>
#include <map>

#include "fcpi/errors.hpp"

namespace fcpi {

std::vector<SignFlip> all_sign_flips(int n) {
  std::vector<SignFlip> out;
  out.reserve(1u << n);
  for (int k = 0; k < (1 << n); ++k) {
    SignFlip g;
    g.g.resize(n);
    for (int i = 0; i < n; ++i) g.g[i] = ((k >> (n - 1 - i)) & 1) ? -1 : 1;
    out.push_back(std::move(g));
  }
  return out;
}

HyperplaneAction action_on_hyperplanes(const Arrangement& arr, const SignFlip& g) {
  HyperplaneAction act;
  const int m = arr.size();
  act.perm.resize(m);
  act.mult.resize(m);
  std::map<std::pair<std::vector<long>, long>, int> index;
  for (int j = 0; j < m; ++j)
    index[{arr.hyperplanes[j].normal, arr.hyperplanes[j].offset}] = j;
  for (int j = 0; j < m; ++j) {
    std::vector<long> image(arr.dimension);
    for (int i = 0; i < arr.dimension; ++i) image[i] = g.g[i] * arr.hyperplanes[j].normal[i];
    auto it = index.find({image, arr.hyperplanes[j].offset});
    if (it != index.end()) {
      act.perm[j] = it->second;
      act.mult[j] = 1;
      continue;
    }
    for (auto& v : image) v = -v;
    it = index.find({image, -arr.hyperplanes[j].offset});
    if (it != index.end()) {
      act.perm[j] = it->second;
      act.mult[j] = -1;
      continue;
    }
    throw StructuralError("arrangement is not stable under the sign flip");
  }
  return act;
}

SignVec act_signs(const HyperplaneAction& action, const SignVec& signs) {
  SignVec out(signs.size());
  for (size_t j = 0; j < signs.size(); ++j)
    out[action.perm[j]] = static_cast<int8_t>(action.mult[j] * signs[j]);
  return out;
}

SignVec act_signs(const Arrangement& arr, const SignFlip& g, const SignVec& signs) {
  return act_signs(action_on_hyperplanes(arr, g), signs);
}

namespace {

struct GroupData {
  std::vector<SignFlip> flips;
  std::vector<std::vector<int>> chamber_perm;  // per flip
  std::vector<std::vector<int>> wall_perm;
  std::vector<std::vector<int>> face2_perm;
};

GroupData group_data(const Complex2& cx) {
  GroupData gd;
  gd.flips = all_sign_flips(cx.arr.dimension);
  for (const auto& g : gd.flips) {
    const auto action = action_on_hyperplanes(cx.arr, g);
    std::vector<int> cp(cx.faces.chambers.size());
    for (size_t i = 0; i < cx.faces.chambers.size(); ++i) {
      auto it = cx.chamber_index.find(act_signs(action, cx.faces.chambers[i].signs));
      if (it == cx.chamber_index.end()) throw StructuralError("flip does not permute chambers");
      cp[i] = it->second;
    }
    std::vector<int> wp(cx.faces.walls.size());
    for (size_t i = 0; i < cx.faces.walls.size(); ++i) {
      auto it = cx.wall_index.find(act_signs(action, cx.faces.walls[i].signs));
      if (it == cx.wall_index.end()) throw StructuralError("flip does not permute walls");
      wp[i] = it->second;
    }
    std::vector<int> fp(cx.faces.faces2.size());
    for (size_t i = 0; i < cx.faces.faces2.size(); ++i) {
      auto it = cx.face2_index.find(act_signs(action, cx.faces.faces2[i].signs));
      if (it == cx.face2_index.end())
        throw StructuralError("flip does not permute codim-2 faces");
      fp[i] = it->second;
    }
    gd.chamber_perm.push_back(std::move(cp));
    gd.wall_perm.push_back(std::move(wp));
    gd.face2_perm.push_back(std::move(fp));
  }
  return gd;
}

int image_cell1(const Complex2& cx, const GroupData& gd, int flip, int cell) {
  const Cell1& c = cx.cells1[cell];
  auto it = cx.cell1_index.find(
      {gd.chamber_perm[flip][c.source], gd.wall_perm[flip][c.wall]});
  if (it == cx.cell1_index.end()) throw StructuralError("flip does not permute 1-cells");
  return it->second;
}

bool chamber_in_positive_orthant(const Arrangement& arr, const SignVec& s) {
  for (int j = 0; j < arr.size(); ++j)
    if (arr.hyperplanes[j].kind == Hyperplane::Kind::Coordinate && s[j] != 1) return false;
  return true;
}

}  // namespace

bool verify_free_action(const Complex2& cx) {
  const auto gd = group_data(cx);
  for (size_t f = 0; f < gd.flips.size(); ++f) {
    if (gd.flips[f].identity()) continue;
    for (size_t i = 0; i < cx.faces.chambers.size(); ++i)
      if (gd.chamber_perm[f][i] == static_cast<int>(i)) return false;
    for (size_t i = 0; i < cx.cells1.size(); ++i)
      if (image_cell1(cx, gd, static_cast<int>(f), static_cast<int>(i)) == static_cast<int>(i))
        return false;
    for (size_t i = 0; i < cx.cells2.size(); ++i) {
      const Cell2& c = cx.cells2[i];
      if (gd.chamber_perm[f][c.base] == c.base &&
          gd.face2_perm[f][c.face2] == c.face2)
        return false;
    }
  }
  return true;
}

QuotientComplex2 build_quotient(const Complex2& cx) {
  QuotientComplex2 q;
  q.full = cx;
  const Complex2& full = q.full;
  if (!verify_free_action(full)) throw StructuralError("sign-flip action is not free");
  const auto gd = group_data(full);
  q.group_order = static_cast<int>(gd.flips.size());

  auto make_orbits = [&](size_t count, auto image, auto better_rep) {
    std::vector<int> orbit(count, -1);
    std::vector<int> reps;
    std::vector<int> sizes;
    for (size_t i = 0; i < count; ++i) {
      if (orbit[i] >= 0) continue;
      std::vector<int> members;
      for (size_t f = 0; f < gd.flips.size(); ++f) members.push_back(image(f, static_cast<int>(i)));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      int rep = members.front();
      for (int m : members)
        if (better_rep(m, rep)) rep = m;
      const int idx = static_cast<int>(reps.size());
      for (int m : members) orbit[m] = idx;
      reps.push_back(rep);
      sizes.push_back(static_cast<int>(members.size()));
    }
    return std::make_tuple(orbit, reps, sizes);
  };

  // 0-cells: prefer the positive-orthant member, then lexicographic order.
  auto chamber_better = [&](int a, int b) {
    const bool pa = chamber_in_positive_orthant(full.arr, full.faces.chambers[a].signs);
    const bool pb = chamber_in_positive_orthant(full.arr, full.faces.chambers[b].signs);
    if (pa != pb) return pa;
    return full.faces.chambers[a].signs < full.faces.chambers[b].signs;
  };
  auto [orbit0, reps0, sizes0] =
      make_orbits(full.faces.chambers.size(),
                  [&](size_t f, int i) { return gd.chamber_perm[f][i]; }, chamber_better);
  q.chamber_orbit = orbit0;
  // Reindex orbits canonically by representative chamber index.
  {
    std::vector<int> order(reps0.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return reps0[a] < reps0[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (auto& o : q.chamber_orbit) o = rank[o];
    q.cells0.resize(reps0.size());
    for (size_t i = 0; i < reps0.size(); ++i)
      q.cells0[rank[i]] = OrbitCell0{reps0[i], sizes0[i]};
  }

  auto cell1_better = [&](int a, int b) {
    const Cell1& ca = full.cells1[a];
    const Cell1& cb = full.cells1[b];
    const bool pa = chamber_in_positive_orthant(full.arr, full.faces.chambers[ca.source].signs);
    const bool pb = chamber_in_positive_orthant(full.arr, full.faces.chambers[cb.source].signs);
    if (pa != pb) return pa;
    return a < b;
  };
  auto [orbit1, reps1, sizes1] = make_orbits(
      full.cells1.size(), [&](size_t f, int i) { return image_cell1(full, gd, static_cast<int>(f), i); },
      cell1_better);
  q.cell1_orbit = orbit1;
  {
    std::vector<int> order(reps1.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return reps1[a] < reps1[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (auto& o : q.cell1_orbit) o = rank[o];
    q.cells1.resize(reps1.size());
    for (size_t i = 0; i < reps1.size(); ++i) {
      const Cell1& c = full.cells1[reps1[i]];
      OrbitCell1 oc;
      oc.rep = reps1[i];
      oc.orbit_size = sizes1[i];
      oc.hyperplane = c.hyperplane;
      oc.type = full.arr.hyperplanes[c.hyperplane].kind == Hyperplane::Kind::Epsilon
                    ? OneCellType::Type1
                    : OneCellType::Type2;
      oc.source = q.chamber_orbit[c.source];
      oc.target = q.chamber_orbit[c.target];
      q.cells1[rank[i]] = std::move(oc);
    }
  }

  auto cell2_better = [&](int a, int b) {
    const Cell2& ca = full.cells2[a];
    const Cell2& cb = full.cells2[b];
    const bool pa = chamber_in_positive_orthant(full.arr, full.faces.chambers[ca.base].signs);
    const bool pb = chamber_in_positive_orthant(full.arr, full.faces.chambers[cb.base].signs);
    if (pa != pb) return pa;
    return a < b;
  };
  std::map<std::pair<int, int>, int> cell2_index;
  for (size_t k = 0; k < full.cells2.size(); ++k)
    cell2_index[{full.cells2[k].base, full.cells2[k].face2}] = static_cast<int>(k);
  auto image_cell2 = [&](size_t f, int i) {
    const Cell2& c = full.cells2[i];
    auto it = cell2_index.find({gd.chamber_perm[f][c.base], gd.face2_perm[f][c.face2]});
    if (it == cell2_index.end()) throw StructuralError("flip does not permute 2-cells");
    return it->second;
  };
  auto [orbit2, reps2, sizes2] = make_orbits(full.cells2.size(), image_cell2, cell2_better);
  q.cell2_orbit = orbit2;
  {
    std::vector<int> order(reps2.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return reps2[a] < reps2[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (auto& o : q.cell2_orbit) o = rank[o];
    q.cells2.resize(reps2.size());
    for (size_t i = 0; i < reps2.size(); ++i) {
      const Cell2& c = full.cells2[reps2[i]];
      OrbitCell2 oc;
      oc.rep = reps2[i];
      oc.orbit_size = sizes2[i];
      switch (full.faces.flats[c.flat].cls) {
        case FlatClass::EpsilonPair: oc.type = DiscType::Interior; break;
        case FlatClass::MixedTriple: oc.type = DiscType::Boundary; break;
        case FlatClass::CoordinatePair: oc.type = DiscType::Coordinate; break;
        case FlatClass::Other:
          throw StructuralError("unclassified flat in quotient");
      }
      for (int letter : c.boundary) {
        const int cell = std::abs(letter) - 1;
        const int img = q.cell1_orbit[cell] + 1;
        oc.boundary.push_back(letter > 0 ? img : -img);
      }
      q.cells2[rank[i]] = std::move(oc);
    }
  }
  return q;
}

std::vector<int> project_boundary(const QuotientComplex2& q, int cell2) {
  std::vector<int> out;
  for (int letter : q.full.cells2[cell2].boundary) {
    const int cell = std::abs(letter) - 1;
    const int img = q.cell1_orbit[cell] + 1;
    out.push_back(letter > 0 ? img : -img);
  }
  return out;
}

}  // namespace fcpi
