#include "fcpi/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fcpi/errors.hpp"

namespace fcpi {

namespace {

constexpr int kMaxDimension = 12;
constexpr int kMaxExhaustiveBits = 24;

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

StrictSystem system_for_signs(const Arrangement& arr, const SignVec& signs) {
  StrictSystem sys;
  sys.num_vars = arr.dimension;
  sys.rows.reserve(arr.hyperplanes.size());
  for (size_t j = 0; j < arr.hyperplanes.size(); ++j) {
    const auto& h = arr.hyperplanes[j];
    LinearCondition row;
    row.coeff.resize(arr.dimension);
    const int s = signs[j];
    if (s == 0) {
      for (int i = 0; i < arr.dimension; ++i) row.coeff[i] = h.normal[i];
      row.rhs = h.offset;
      row.rel = LinearCondition::Rel::Eq;
    } else {
      for (int i = 0; i < arr.dimension; ++i) row.coeff[i] = s * h.normal[i];
      row.rhs = s * h.offset;
      row.rel = LinearCondition::Rel::Gt;
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

// Exact infeasibility certificate from parallel hyperplane pairs: both
// constraints bound the same linear value v = <a_j, x>, so an empty interval
// settles the query without an LP. Purely an accelerator; answers never
// change.
bool parallel_pair_infeasible(const Arrangement& arr, const SignVec& signs) {
  const int m = arr.size();
  for (int j = 0; j < m; ++j) {
    const auto& nj = arr.hyperplanes[j].normal;
    for (int k = j + 1; k < m; ++k) {
      const auto& nk = arr.hyperplanes[k].normal;
      int dir = 0;
      bool same = true, opposite = true;
      for (size_t i = 0; i < nj.size(); ++i) {
        if (nk[i] != nj[i]) same = false;
        if (nk[i] != -nj[i]) opposite = false;
      }
      if (same)
        dir = 1;
      else if (opposite)
        dir = -1;
      else
        continue;

      // Constraints on v: sign s applied to d*v - b.
      bool has_lo = false, has_hi = false, has_eq = false;
      long long lo = 0, hi = 0, eq = 0;
      bool contradiction = false;
      auto apply = [&](int s, long long b, int d) {
        if (s == 0) {
          const long long v = d * b;
          if (has_eq && eq != v) contradiction = true;
          has_eq = true;
          eq = v;
        } else if (s * d > 0) {
          const long long bound = s > 0 ? b : -b;  // v > bound (strict)
          if (!has_lo || bound > lo) lo = bound;
          has_lo = true;
        } else {
          const long long bound = s > 0 ? -b : b;  // v < bound (strict)
          if (!has_hi || bound < hi) hi = bound;
          has_hi = true;
        }
      };
      apply(signs[j], arr.hyperplanes[j].offset, 1);
      apply(signs[k], arr.hyperplanes[k].offset, dir);
      if (contradiction) return true;
      if (has_eq && ((has_lo && eq <= lo) || (has_hi && eq >= hi))) return true;
      if (has_lo && has_hi && lo >= hi) return true;
    }
  }
  return false;
}

}  // namespace

std::string sign_vec_to_string(const SignVec& s) {
  std::string out;
  out.reserve(s.size());
  for (int8_t v : s) out.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
  return out;
}

int Arrangement::epsilon_index(const std::vector<int>& eps) const {
  int k = 0;
  for (int i = 0; i < dimension; ++i) k = (k << 1) | (eps[i] < 0 ? 1 : 0);
  return k;
}

int Arrangement::coordinate_index(int i) const { return (1 << dimension) + (i - 1); }

void Arrangement::validate() const {
  if (dimension < 1) throw StructuralError("arrangement dimension must be >= 1");
  std::set<std::pair<std::vector<long>, long>> seen;
  for (const auto& h : hyperplanes) {
    if (static_cast<int>(h.normal.size()) != dimension)
      throw StructuralError("hyperplane normal has wrong dimension");
    long g = h.offset < 0 ? -h.offset : h.offset;
    bool nonzero = false;
    for (long v : h.normal) {
      if (v != 0) nonzero = true;
      g = gcd_ll(g, v);
    }
    if (!nonzero) throw StructuralError("hyperplane normal is zero");
    if (g != 1) throw StructuralError("hyperplane data is not primitive");
    if (!seen.insert({h.normal, h.offset}).second)
      throw StructuralError("duplicate hyperplane");
    if (h.kind == Hyperplane::Kind::Epsilon) {
      if (h.offset != 1) throw StructuralError("epsilon plane must have offset 1");
      for (long v : h.normal)
        if (v != 1 && v != -1) throw StructuralError("epsilon normal entries must be +-1");
    } else {
      int nz = 0;
      for (long v : h.normal)
        if (v != 0) ++nz;
      if (nz != 1 || h.offset != 0)
        throw StructuralError("coordinate plane must be x_i = 0");
    }
  }
  if (fc) {
    const int n = dimension;
    if (size() != (1 << n) + n) throw StructuralError("F_C arrangement has wrong size");
  }
}

Arrangement build_fc_arrangement(int n) {
  if (n < 1) throw CapacityError("dimension must be at least 1");
  if (n > kMaxDimension) throw CapacityError("dimension exceeds the configured limit");
  Arrangement arr;
  arr.dimension = n;
  arr.fc = true;
  arr.hyperplanes.reserve((1u << n) + n);
  for (int k = 0; k < (1 << n); ++k) {
    Hyperplane h;
    h.kind = Hyperplane::Kind::Epsilon;
    h.normal.resize(n);
    h.tag.resize(n);
    for (int i = 0; i < n; ++i) {
      const int bit = (k >> (n - 1 - i)) & 1;
      h.normal[i] = bit ? -1 : 1;
      h.tag[i] = static_cast<int>(h.normal[i]);
    }
    h.offset = 1;
    arr.hyperplanes.push_back(std::move(h));
  }
  for (int i = 1; i <= n; ++i) {
    Hyperplane h;
    h.kind = Hyperplane::Kind::Coordinate;
    h.normal.assign(n, 0);
    h.normal[i - 1] = 1;
    h.offset = 0;
    h.tag = {i};
    arr.hyperplanes.push_back(std::move(h));
  }
  arr.validate();
  return arr;
}

SignVec signs_at_point(const Arrangement& arr, const std::vector<Rat>& p) {
  SignVec out(arr.hyperplanes.size());
  for (size_t j = 0; j < arr.hyperplanes.size(); ++j) {
    const auto& h = arr.hyperplanes[j];
    Rat v = -Rat(h.offset);
    for (int i = 0; i < arr.dimension; ++i) v += h.normal[i] * p[i];
    out[j] = static_cast<int8_t>(sgn(v));
  }
  return out;
}

bool strict_feasible(const Arrangement& arr, const SignVec& signs) {
  if (parallel_pair_infeasible(arr, signs)) return false;
  return strict_feasible_system(system_for_signs(arr, signs));
}

std::optional<std::vector<Rat>> witness_point(const Arrangement& arr, const SignVec& signs) {
  auto w = strict_witness(system_for_signs(arr, signs));
  if (!w) return std::nullopt;
  return std::move(w->point);
}

std::vector<char> feasible_batch(const Arrangement& arr, const std::vector<SignVec>& candidates) {
  std::vector<char> out(candidates.size(), 0);
  const long long count = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) out[i] = strict_feasible(arr, candidates[i]) ? 1 : 0;
  return out;
}

std::vector<Face> enumerate_chambers(const Arrangement& arr) {
  // Seed: the chamber of (d, d^2, ...) for the first denominator d that puts
  // the point off every hyperplane. For F_C, d = 1/2 lands in sigma_0.
  SignVec seed;
  for (int den = 2;; ++den) {
    std::vector<Rat> p(arr.dimension);
    Rat v(1, den);
    for (int i = 0; i < arr.dimension; ++i) {
      p[i] = v;
      v /= den;
    }
    seed = signs_at_point(arr, p);
    if (std::none_of(seed.begin(), seed.end(), [](int8_t s) { return s == 0; })) break;
    if (den > 1000) throw StructuralError("could not find a generic seed point");
  }

  std::set<SignVec> known;
  known.insert(seed);
  std::vector<SignVec> frontier{seed};
  const int m = arr.size();
  while (!frontier.empty()) {
    // Distinct untested walls touching the frontier, in canonical order.
    std::map<SignVec, std::vector<SignVec>> wall_to_sources;
    for (const auto& c : frontier) {
      for (int j = 0; j < m; ++j) {
        SignVec w = c;
        w[j] = 0;
        SignVec nb = c;
        nb[j] = static_cast<int8_t>(-c[j]);
        if (!known.count(nb)) wall_to_sources[w].push_back(nb);
      }
    }
    std::vector<SignVec> walls;
    walls.reserve(wall_to_sources.size());
    for (const auto& [w, _] : wall_to_sources) walls.push_back(w);
    const auto ok = feasible_batch(arr, walls);
    std::vector<SignVec> next;
    for (size_t k = 0; k < walls.size(); ++k) {
      if (!ok[k]) continue;
      for (const auto& nb : wall_to_sources[walls[k]])
        if (known.insert(nb).second) next.push_back(nb);
    }
    frontier = std::move(next);
  }

  std::vector<Face> out;
  out.reserve(known.size());
  for (const auto& s : known) out.push_back(Face{s, 0});
  return out;
}

std::vector<Face> enumerate_chambers_exhaustive(const Arrangement& arr) {
  const int m = arr.size();
  if (m > kMaxExhaustiveBits) throw CapacityError("too many hyperplanes for exhaustive search");
  const long long total = 1ll << m;
  std::vector<char> ok(total, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < total; ++k) {
    SignVec s(m);
    for (int j = 0; j < m; ++j) s[j] = ((k >> j) & 1) ? 1 : -1;
    ok[k] = strict_feasible(arr, s) ? 1 : 0;
  }
  std::vector<Face> out;
  for (long long k = 0; k < total; ++k) {
    if (!ok[k]) continue;
    SignVec s(m);
    for (int j = 0; j < m; ++j) s[j] = ((k >> j) & 1) ? 1 : -1;
    out.push_back(Face{std::move(s), 0});
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.signs < b.signs; });
  return out;
}

std::vector<Face> enumerate_chambers_exhaustive_serial(const Arrangement& arr) {
  const int m = arr.size();
  if (m > kMaxExhaustiveBits) throw CapacityError("too many hyperplanes for exhaustive search");
  const long long total = 1ll << m;
  std::vector<Face> out;
  for (long long k = 0; k < total; ++k) {
    SignVec s(m);
    for (int j = 0; j < m; ++j) s[j] = ((k >> j) & 1) ? 1 : -1;
    if (strict_feasible(arr, s)) out.push_back(Face{std::move(s), 0});
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.signs < b.signs; });
  return out;
}

std::vector<Face> enumerate_codim1_faces(const Arrangement& arr, const std::vector<Face>& chambers) {
  std::set<SignVec> candidates;
  const int m = arr.size();
  for (const auto& c : chambers) {
    for (int j = 0; j < m; ++j) {
      SignVec w = c.signs;
      w[j] = 0;
      candidates.insert(std::move(w));
    }
  }
  std::vector<SignVec> cand(candidates.begin(), candidates.end());
  const auto ok = feasible_batch(arr, cand);
  std::vector<Face> out;
  for (size_t k = 0; k < cand.size(); ++k)
    if (ok[k]) out.push_back(Face{cand[k], 1});
  return out;
}

namespace {

// Exact coordinates of v in the basis (u1, u2), if v lies in their span.
std::optional<std::pair<Rat, Rat>> span_coords(const std::vector<long>& u1,
                                               const std::vector<long>& u2,
                                               const std::vector<long>& v) {
  const int n = static_cast<int>(u1.size());
  int p = -1, q = -1;
  Rat det;
  for (int i = 0; i < n && q < 0; ++i) {
    for (int j = i + 1; j < n; ++j) {
      det = Rat(u1[i]) * u2[j] - Rat(u1[j]) * u2[i];
      if (sgn(det) != 0) {
        p = i;
        q = j;
        break;
      }
    }
  }
  if (q < 0) return std::nullopt;  // u1, u2 dependent
  Rat alpha = (Rat(v[p]) * u2[q] - Rat(v[q]) * u2[p]) / det;
  Rat beta = (Rat(u1[p]) * v[q] - Rat(u1[q]) * v[p]) / det;
  for (int i = 0; i < n; ++i)
    if (alpha * u1[i] + beta * u2[i] != v[i]) return std::nullopt;
  return std::make_pair(alpha, beta);
}

FlatClass classify_flat(const Arrangement& arr, const std::vector<int>& zeros) {
  int eps = 0, coord = 0;
  for (int j : zeros) {
    if (arr.hyperplanes[j].kind == Hyperplane::Kind::Epsilon)
      ++eps;
    else
      ++coord;
  }
  if (eps == 2 && coord == 0) return FlatClass::EpsilonPair;
  if (eps == 2 && coord == 1) return FlatClass::MixedTriple;
  if (eps == 0 && coord == 2) return FlatClass::CoordinatePair;
  return FlatClass::Other;
}

}  // namespace

std::vector<Flat2> enumerate_flats2(const Arrangement& arr) {
  std::vector<Flat2> out;
  if (arr.dimension < 2) return out;
  const int m = arr.size();
  std::set<std::vector<int>> seen;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& hi = arr.hyperplanes[i];
      const auto& hj = arr.hyperplanes[j];
      // Maximal containing set: every plane whose (normal, offset) is an
      // exact combination of the pair's. Dependent pairs are parallel or
      // equal and contribute no codim-2 flat.
      std::vector<int> zeros;
      bool independent = true;
      for (int h = 0; h < m; ++h) {
        auto c = span_coords(hi.normal, hj.normal, arr.hyperplanes[h].normal);
        if (h == j && !c) {
          independent = false;
          break;
        }
        if (!c) continue;
        if (c->first * hi.offset + c->second * hj.offset == arr.hyperplanes[h].offset)
          zeros.push_back(h);
      }
      if (!independent) continue;
      if (!seen.insert(zeros).second) continue;
      Flat2 f;
      f.zero_hyperplanes = std::move(zeros);
      f.cls = classify_flat(arr, f.zero_hyperplanes);
      if (arr.fc && f.cls == FlatClass::Other)
        throw StructuralError("F_C flat fails the classification trichotomy");
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Flat2& a, const Flat2& b) {
    return a.zero_hyperplanes < b.zero_hyperplanes;
  });
  return out;
}

Codim2Faces enumerate_codim2_faces(const Arrangement& arr, const std::vector<Face>& chambers,
                                   const std::vector<Flat2>& flats) {
  std::map<SignVec, int> cand_flat;
  for (const auto& c : chambers) {
    for (size_t fi = 0; fi < flats.size(); ++fi) {
      SignVec s = c.signs;
      for (int j : flats[fi].zero_hyperplanes) s[j] = 0;
      cand_flat.emplace(std::move(s), static_cast<int>(fi));
    }
  }
  std::vector<SignVec> cand;
  cand.reserve(cand_flat.size());
  for (const auto& [s, _] : cand_flat) cand.push_back(s);
  const auto ok = feasible_batch(arr, cand);
  Codim2Faces out;
  for (size_t k = 0; k < cand.size(); ++k) {
    if (!ok[k]) continue;
    out.faces.push_back(Face{cand[k], 2});
    out.face_flat.push_back(cand_flat[cand[k]]);
  }
  return out;
}

FaceSet enumerate_all(const Arrangement& arr) {
  FaceSet fs;
  fs.chambers = enumerate_chambers(arr);
  fs.walls = enumerate_codim1_faces(arr, fs.chambers);
  fs.flats = enumerate_flats2(arr);
  auto c2 = enumerate_codim2_faces(arr, fs.chambers, fs.flats);
  fs.faces2 = std::move(c2.faces);
  fs.face2_flat = std::move(c2.face_flat);
  return fs;
}

}  // namespace fcpi
