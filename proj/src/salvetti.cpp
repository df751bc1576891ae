#include "fcpi/salvetti.hpp"

#include <algorithm>
#include <cassert>

#include "fcpi/errors.hpp"

namespace fcpi {

namespace {

struct Ray {
  Rat x, y;
  int hyperplane;  // position within the flat's zero set
};

// Counterclockwise angular order with an arbitrary fixed start; exact.
bool ray_less(const Ray& a, const Ray& b) {
  auto half = [](const Ray& r) {
    return (sgn(r.y) > 0 || (sgn(r.y) == 0 && sgn(r.x) > 0)) ? 0 : 1;
  };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const Rat cross = a.x * b.y - a.y * b.x;
  return sgn(cross) > 0;
}

// Exact coordinates of v in the basis (u1, u2); v must lie in the span.
std::pair<Rat, Rat> coords_in_span(const std::vector<long>& u1,
                                   const std::vector<long>& u2,
                                   const std::vector<long>& v) {
  const int n = static_cast<int>(u1.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rat det = Rat(u1[i]) * u2[j] - Rat(u1[j]) * u2[i];
      if (sgn(det) == 0) continue;
      Rat alpha = (Rat(v[i]) * u2[j] - Rat(v[j]) * u2[i]) / det;
      Rat beta = (Rat(u1[i]) * v[j] - Rat(u1[j]) * v[i]) / det;
      for (int k = 0; k < n; ++k) {
        if (alpha * u1[k] + beta * u2[k] != v[k])
          throw StructuralError("flat normal is not in the span of its basis");
      }
      return {alpha, beta};
    }
  }
  throw StructuralError("degenerate basis for a codim-2 flat");
}

}  // namespace

Face opposite_chamber(const Face& sigma, const Face& f) {
  if (sigma.signs.size() != f.signs.size())
    throw IncidenceError("sign vectors have different lengths");
  Face out = sigma;
  for (size_t j = 0; j < f.signs.size(); ++j) {
    if (f.signs[j] == 0) {
      out.signs[j] = static_cast<int8_t>(-sigma.signs[j]);
    } else if (f.signs[j] != sigma.signs[j]) {
      throw IncidenceError("face is not in the chamber's closure");
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> galleries(const Complex2& cx, int chamber,
                                                        int face2) {
  const Arrangement& arr = cx.arr;
  const Face& sigma = cx.faces.chambers[chamber];
  const Face& tau = cx.faces.faces2[face2];
  const Flat2& flat = cx.faces.flats[cx.faces.face2_flat[face2]];
  const auto& zeros = flat.zero_hyperplanes;
  const int m = static_cast<int>(zeros.size());

  for (size_t j = 0; j < tau.signs.size(); ++j)
    if (tau.signs[j] != 0 && tau.signs[j] != sigma.signs[j])
      throw IncidenceError("codim-2 face is not in the chamber's closure");

  // Localize at the flat: each plane through it traces a line through the
  // origin of a transverse 2-plane; nu gives the line's normal there.
  const auto& u1 = arr.hyperplanes[zeros[0]].normal;
  int second = -1;
  std::vector<std::pair<Rat, Rat>> nu(m);
  for (int k = 1; k < m && second < 0; ++k) {
    bool indep = false;
    const auto& cand = arr.hyperplanes[zeros[k]].normal;
    for (size_t i = 0; i < u1.size() && !indep; ++i)
      for (size_t j = i + 1; j < u1.size(); ++j)
        if (Rat(u1[i]) * cand[j] != Rat(u1[j]) * cand[i]) {
          indep = true;
          break;
        }
    if (indep) second = k;
  }
  if (second < 0) throw StructuralError("flat zero set has rank < 2");
  const auto& u2 = arr.hyperplanes[zeros[second]].normal;
  for (int k = 0; k < m; ++k) nu[k] = coords_in_span(u1, u2, arr.hyperplanes[zeros[k]].normal);

  std::vector<Ray> rays;
  rays.reserve(2 * m);
  for (int k = 0; k < m; ++k) {
    rays.push_back(Ray{-nu[k].second, nu[k].first, k});
    rays.push_back(Ray{nu[k].second, -nu[k].first, k});
  }
  std::sort(rays.begin(), rays.end(), ray_less);

  // Sector between consecutive rays, with its local sign pattern.
  const int cycle = 2 * m;
  std::vector<SignVec> sector(cycle, SignVec(m));
  for (int k = 0; k < cycle; ++k) {
    const Ray& r1 = rays[k];
    const Ray& r2 = rays[(k + 1) % cycle];
    const Rat wx = r1.x + r2.x, wy = r1.y + r2.y;
    for (int h = 0; h < m; ++h) {
      const int s = sgn(nu[h].first * wx + nu[h].second * wy);
      if (s == 0) throw StructuralError("sector representative lies on a local line");
      sector[k][h] = static_cast<int8_t>(s);
    }
  }

  SignVec local(m);
  for (int h = 0; h < m; ++h) local[h] = sigma.signs[zeros[h]];
  int start = -1;
  for (int k = 0; k < cycle; ++k)
    if (sector[k] == local) {
      start = k;
      break;
    }
  if (start < 0) throw StructuralError("chamber's local sector not found");
  for (int h = 0; h < m; ++h)
    if (sector[(start + m) % cycle][h] != -local[h])
      throw StructuralError("antipodal sector mismatch");

  // Walk both arcs from the chamber's sector to the antipodal one.
  auto lift = [&](int sector_idx) {
    SignVec s = sigma.signs;
    for (int h = 0; h < m; ++h) s[zeros[h]] = sector[sector_idx][h];
    auto it = cx.chamber_index.find(s);
    if (it == cx.chamber_index.end()) throw StructuralError("gallery chamber missing");
    return it->second;
  };
  auto walk = [&](int dir) {
    std::vector<int> word;
    int cur = start;
    for (int i = 0; i < m; ++i) {
      const int crossed_ray = dir > 0 ? (cur + 1) % cycle : cur;
      const int h = rays[crossed_ray].hyperplane;
      const int next = (cur + dir + cycle) % cycle;
      const int src = lift(cur);
      SignVec w = cx.faces.chambers[src].signs;
      w[zeros[h]] = 0;
      auto wit = cx.wall_index.find(w);
      if (wit == cx.wall_index.end()) throw StructuralError("gallery wall missing");
      auto cit = cx.cell1_index.find({src, wit->second});
      if (cit == cx.cell1_index.end()) throw StructuralError("gallery 1-cell missing");
      word.push_back(cit->second);
      cur = next;
    }
    return word;
  };
  std::vector<int> ccw = walk(+1);
  std::vector<int> cw = walk(-1);

  auto first_hyperplane = [&](const std::vector<int>& w) {
    return cx.cells1[w.front()].hyperplane;
  };
  if (first_hyperplane(ccw) <= first_hyperplane(cw)) return {std::move(ccw), std::move(cw)};
  return {std::move(cw), std::move(ccw)};
}

Complex2 build_salvetti_2_skeleton(const Arrangement& arr) {
  Complex2 cx;
  cx.arr = arr;
  cx.faces = enumerate_all(arr);

  for (size_t i = 0; i < cx.faces.chambers.size(); ++i)
    cx.chamber_index[cx.faces.chambers[i].signs] = static_cast<int>(i);
  for (size_t i = 0; i < cx.faces.walls.size(); ++i)
    cx.wall_index[cx.faces.walls[i].signs] = static_cast<int>(i);
  for (size_t i = 0; i < cx.faces.faces2.size(); ++i)
    cx.face2_index[cx.faces.faces2[i].signs] = static_cast<int>(i);

  // Two directed 1-cells per wall, ordered by (wall, source chamber).
  for (size_t w = 0; w < cx.faces.walls.size(); ++w) {
    const Face& wall = cx.faces.walls[w];
    int hyperplane = -1;
    for (size_t j = 0; j < wall.signs.size(); ++j)
      if (wall.signs[j] == 0) hyperplane = static_cast<int>(j);
    int side[2];
    for (int s = 0; s < 2; ++s) {
      SignVec c = wall.signs;
      c[hyperplane] = static_cast<int8_t>(s == 0 ? -1 : 1);
      auto it = cx.chamber_index.find(c);
      if (it == cx.chamber_index.end())
        throw StructuralError("wall side is not a chamber");
      side[s] = it->second;
    }
    if (side[1] < side[0]) std::swap(side[0], side[1]);
    for (int s = 0; s < 2; ++s) {
      Cell1 cell;
      cell.source = side[s];
      cell.target = side[1 - s];
      cell.wall = static_cast<int>(w);
      cell.hyperplane = hyperplane;
      cx.cell1_index[{cell.source, cell.wall}] = static_cast<int>(cx.cells1.size());
      cx.cells1.push_back(cell);
    }
  }

  // One 2-cell per (adjacent chamber, codim-2 face) pair.
  for (size_t f = 0; f < cx.faces.faces2.size(); ++f) {
    const Face& tau = cx.faces.faces2[f];
    for (size_t c = 0; c < cx.faces.chambers.size(); ++c) {
      const Face& sigma = cx.faces.chambers[c];
      bool adjacent = true;
      for (size_t j = 0; j < tau.signs.size() && adjacent; ++j)
        if (tau.signs[j] != 0 && tau.signs[j] != sigma.signs[j]) adjacent = false;
      if (!adjacent) continue;
      Cell2 cell;
      cell.base = static_cast<int>(c);
      cell.face2 = static_cast<int>(f);
      cell.flat = cx.faces.face2_flat[f];
      auto [g1, g2] = galleries(cx, cell.base, cell.face2);
      cell.gallery1 = std::move(g1);
      cell.gallery2 = std::move(g2);
      for (int e : cell.gallery1) cell.boundary.push_back(e + 1);
      for (auto it = cell.gallery2.rbegin(); it != cell.gallery2.rend(); ++it)
        cell.boundary.push_back(-(*it + 1));
      cx.cells2.push_back(std::move(cell));
    }
  }
  return cx;
}

}  // namespace fcpi
