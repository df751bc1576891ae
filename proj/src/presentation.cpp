#include "fcpi/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fcpi/errors.hpp"
#include "fcpi/smith.hpp"

namespace fcpi {

int height(const Arrangement& arr, const Face& chamber) {
  int h = 0;
  for (int j = 0; j < arr.size(); ++j)
    if (arr.hyperplanes[j].kind == Hyperplane::Kind::Epsilon && chamber.signs[j] > 0) ++h;
  return h;
}

namespace {

// 0-cell orbits appearing in a disc's closure: endpoints of boundary letters.
std::vector<int> disc_vertices(const QuotientComplex2& q, const OrbitCell2& disc) {
  std::vector<int> v;
  for (int letter : disc.boundary) {
    const OrbitCell1& e = q.cells1[std::abs(letter) - 1];
    v.push_back(e.source);
    v.push_back(e.target);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SpanningData spanning_cells(const QuotientComplex2& q) {
  SpanningData s;
  const Arrangement& arr = q.full.arr;

  s.orbit_height.resize(q.cells0.size());
  for (size_t i = 0; i < q.cells0.size(); ++i)
    s.orbit_height[i] = height(arr, q.full.faces.chambers[q.cells0[i].rep]);
  for (size_t i = 0; i < q.cells0.size(); ++i) {
    if (s.orbit_height[i] != 0) continue;
    if (s.base_orbit >= 0) throw StructuralError("height-0 orbit is not unique");
    s.base_orbit = static_cast<int>(i);
  }
  if (s.base_orbit < 0) throw StructuralError("no height-0 orbit found");

  s.spanning1.assign(q.cells1.size(), 0);
  for (size_t i = 0; i < q.cells1.size(); ++i) {
    const OrbitCell1& e = q.cells1[i];
    if (e.type == OneCellType::Type1 &&
        s.orbit_height[e.target] == s.orbit_height[e.source] + 1)
      s.spanning1[i] = 1;
  }

  s.spanning2.assign(q.cells2.size(), 0);
  for (size_t i = 0; i < q.cells2.size(); ++i) {
    const OrbitCell2& d = q.cells2[i];
    if (d.type != DiscType::Interior) continue;
    const auto vertices = disc_vertices(q, d);
    int min_h = s.orbit_height[vertices.front()];
    for (int v : vertices) min_h = std::min(min_h, s.orbit_height[v]);
    int at_min = 0;
    for (int v : vertices)
      if (s.orbit_height[v] == min_h) ++at_min;
    if (at_min != 1)
      throw StructuralError("interior disc has no unique height-minimizing vertex");
    const int base_orbit = q.chamber_orbit[q.full.cells2[d.rep].base];
    if (s.orbit_height[base_orbit] == min_h) s.spanning2[i] = 1;
  }
  for (size_t i = 0; i < q.cells2.size(); ++i) {
    if (!s.spanning2[i]) continue;
    for (int letter : q.cells2[i].boundary)
      if (!s.spanning1[std::abs(letter) - 1])
        throw StructuralError("spanning disc boundary leaves the spanning complex");
  }

  // Spanning tree inside the spanning 1-cells, BFS from the base orbit.
  s.tree.assign(q.cells1.size(), 0);
  std::vector<char> reached(q.cells0.size(), 0);
  reached[s.base_orbit] = 1;
  std::vector<int> frontier{s.base_orbit};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (size_t e = 0; e < q.cells1.size(); ++e) {
        if (!s.spanning1[e]) continue;
        const OrbitCell1& c = q.cells1[e];
        int other = -1;
        if (c.source == v && !reached[c.target]) other = c.target;
        if (c.target == v && !reached[c.source]) other = c.source;
        if (other < 0) continue;
        reached[other] = 1;
        s.tree[e] = 1;
        next.push_back(other);
      }
    }
    frontier = std::move(next);
  }
  for (char r : reached)
    if (!r) throw StructuralError("spanning 1-cells do not connect the quotient complex");

  // H_1(S) via Smith normal form of the boundary matrices.
  std::vector<int> col_of_edge(q.cells1.size(), -1);
  int num_edges = 0;
  for (size_t e = 0; e < q.cells1.size(); ++e)
    if (s.spanning1[e]) col_of_edge[e] = num_edges++;
  IntMat d1(q.cells0.size(), std::vector<mpz_class>(std::max(num_edges, 1), 0));
  for (size_t e = 0; e < q.cells1.size(); ++e) {
    if (!s.spanning1[e]) continue;
    d1[q.cells1[e].source][col_of_edge[e]] -= 1;
    d1[q.cells1[e].target][col_of_edge[e]] += 1;
  }
  int num_discs = 0;
  for (char f : s.spanning2) num_discs += f;
  IntMat d2(std::max(num_edges, 1), std::vector<mpz_class>(std::max(num_discs, 1), 0));
  int col = 0;
  for (size_t i = 0; i < q.cells2.size(); ++i) {
    if (!s.spanning2[i]) continue;
    for (int letter : q.cells2[i].boundary) {
      const int e = std::abs(letter) - 1;
      d2[col_of_edge[e]][col] += letter > 0 ? 1 : -1;
    }
    ++col;
  }
  const auto f1 = smith_invariant_factors(d1);
  const auto f2 = smith_invariant_factors(d2);
  const long long rank1 = static_cast<long long>(f1.size());
  const long long rank2 = static_cast<long long>(f2.size());
  bool torsion_free = true;
  for (const auto& d : f2)
    if (d != 1) torsion_free = false;
  s.h1_trivial = (num_edges - rank1 - rank2 == 0) && torsion_free;
  return s;
}

GroupPresentation presentation_from_complex(const QuotientComplex2& q, const SpanningData& s,
                                            PresentationMode mode) {
  std::vector<char> is_generator(q.cells1.size(), 0);
  std::vector<char> drop_letter(q.cells1.size(), 0);
  if (mode == PresentationMode::Tree) {
    for (size_t e = 0; e < q.cells1.size(); ++e) {
      is_generator[e] = !s.tree[e];
      drop_letter[e] = s.tree[e];
    }
  } else {
    for (size_t e = 0; e < q.cells1.size(); ++e) {
      is_generator[e] = !s.spanning1[e];
      drop_letter[e] = s.spanning1[e];
    }
  }

  GroupPresentation p;
  std::vector<int> gen_of_cell(q.cells1.size(), 0);
  for (size_t e = 0; e < q.cells1.size(); ++e) {
    if (!is_generator[e]) continue;
    gen_of_cell[e] = static_cast<int>(p.generators.size()) + 1;
    p.generators.push_back("e" + std::to_string(e));
  }

  for (size_t i = 0; i < q.cells2.size(); ++i) {
    if (mode == PresentationMode::SpanningComplex && s.spanning2[i]) continue;
    Word w;
    for (int letter : q.cells2[i].boundary) {
      const int e = std::abs(letter) - 1;
      if (drop_letter[e]) continue;
      const int gen = gen_of_cell[e];
      w.push_back(letter > 0 ? gen : -gen);
    }
    w = cyclic_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

std::string presentation_to_text(const GroupPresentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators) {
    out << "rel:";
    for (int letter : r) {
      out << ' ' << p.generators[std::abs(letter) - 1];
      if (letter < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

GroupPresentation presentation_from_text(const std::string& text) {
  GroupPresentation p;
  std::istringstream in(text);
  std::string line;
  bool have_gens = false;
  std::map<std::string, int> index;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "gens:") {
      if (have_gens) throw ParseError("duplicate gens line");
      have_gens = true;
      std::string name;
      while (ls >> name) {
        if (index.count(name)) throw ParseError("duplicate generator name: " + name);
        index[name] = static_cast<int>(p.generators.size()) + 1;
        p.generators.push_back(name);
      }
    } else if (head == "rel:") {
      if (!have_gens) throw ParseError("rel line before gens line");
      Word w;
      std::string tok;
      while (ls >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
          inv = true;
          tok = tok.substr(0, tok.size() - 3);
        }
        auto it = index.find(tok);
        if (it == index.end()) throw ParseError("undeclared generator: " + tok);
        w.push_back(inv ? -it->second : it->second);
      }
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError("unrecognized line: " + line);
    }
  }
  if (!have_gens) throw ParseError("missing gens line");
  return p;
}

}  // namespace fcpi
