#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fcpi/errors.hpp"
#include "fcpi/presentation.hpp"
#include "fcpi/verify.hpp"

using namespace fcpi;

namespace {

SignVec sv(const std::string& s) {
  SignVec out;
  for (char c : s) out.push_back(c == '+' ? 1 : (c == '-' ? -1 : 0));
  return out;
}

}  // namespace

TEST_CASE("word operations") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({2, 1, -1, -2, 3}) == Word{3});
  CHECK(cyclic_reduce({1, 2, 3, -2, -1}) == Word{3});
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  CHECK(substitute({1, 2, -1}, 1, {3, 4}) == Word{3, 4, 2, -4, -3});
  CHECK(free_reduce(Word{}) == Word{});

  // Canonical cyclic form identifies rotations and inverses.
  const Word w{1, 2, -3, 2};
  Word r = w;
  std::rotate(r.begin(), r.begin() + 2, r.end());
  CHECK(canonical_cyclic(w) == canonical_cyclic(r));
  CHECK(canonical_cyclic(w) == canonical_cyclic(inverse_word(w)));
  CHECK(canonical_cyclic({1, -1}) == Word{});
}

TEST_CASE("height of chambers") {
  const auto arr = build_fc_arrangement(2);
  // sigma_0: every epsilon plane on the origin side.
  CHECK(height(arr, Face{sv("----++"), 0}) == 0);
  // One separating plane: x+y=1.
  CHECK(height(arr, Face{sv("+---++"), 0}) == 1);
  // Height ignores coordinate walls.
  CHECK(height(arr, Face{sv("----+-"), 0}) == 0);

  // Wall laws across every 1-cell.
  const auto cx = build_salvetti_2_skeleton(arr);
  for (const auto& c : cx.cells1) {
    const int dh =
        height(arr, cx.faces.chambers[c.target]) - height(arr, cx.faces.chambers[c.source]);
    if (arr.hyperplanes[c.hyperplane].kind == Hyperplane::Kind::Epsilon)
      CHECK(std::abs(dh) == 1);
    else
      CHECK(dh == 0);
  }
}

TEST_CASE("spanning complex data") {
  {
    const auto q = build_quotient(build_salvetti_2_skeleton(build_fc_arrangement(1)));
    const auto sd = spanning_cells(q);
    CHECK(std::count(sd.spanning1.begin(), sd.spanning1.end(), char(1)) == 1);
    CHECK(std::count(sd.tree.begin(), sd.tree.end(), char(1)) == 1);
    CHECK(sd.h1_trivial);
  }
  for (int n : {2, 3}) {
    const auto q = build_quotient(build_salvetti_2_skeleton(build_fc_arrangement(n)));
    const auto sd = spanning_cells(q);
    CHECK(sd.h1_trivial);
    CHECK(std::count(sd.tree.begin(), sd.tree.end(), char(1)) ==
          static_cast<long long>(q.cells0.size()) - 1);
    // Tree edges are spanning, spanning cells are type 1 and ascending.
    for (size_t e = 0; e < q.cells1.size(); ++e) {
      if (sd.tree[e]) CHECK(sd.spanning1[e]);
      if (sd.spanning1[e]) {
        CHECK(q.cells1[e].type == OneCellType::Type1);
        CHECK(sd.orbit_height[q.cells1[e].target] == sd.orbit_height[q.cells1[e].source] + 1);
      }
    }
    if (n == 2) {
      CHECK(std::count(sd.spanning1.begin(), sd.spanning1.end(), char(1)) == 3);
      CHECK(std::count(sd.spanning2.begin(), sd.spanning2.end(), char(1)) == 0);
    }
    // Height zero exactly at the base orbit.
    CHECK(std::count(sd.orbit_height.begin(), sd.orbit_height.end(), 0) == 1);
    CHECK(sd.orbit_height[sd.base_orbit] == 0);
  }
}

TEST_CASE("presentations of the quotient group") {
  {
    const auto q = build_quotient(build_salvetti_2_skeleton(build_fc_arrangement(1)));
    const auto sd = spanning_cells(q);
    const auto tree = presentation_from_complex(q, sd, PresentationMode::Tree);
    CHECK(tree.generators.size() == 2);
    CHECK(tree.relators.empty());
    const auto span = presentation_from_complex(q, sd, PresentationMode::SpanningComplex);
    CHECK(span.generators.size() == 2);
    CHECK(span.relators.empty());
  }
  {
    const auto q = build_quotient(build_salvetti_2_skeleton(build_fc_arrangement(2)));
    const auto sd = spanning_cells(q);
    const auto span = presentation_from_complex(q, sd, PresentationMode::SpanningComplex);
    CHECK(span.generators.size() == 7);
    CHECK(span.relators.size() == 7);
    const auto tree = presentation_from_complex(q, sd, PresentationMode::Tree);
    CHECK(abelianization(tree) == abelianization(span));

    // Relators use declared generators only and are cyclically reduced.
    for (const auto& r : span.relators) {
      CHECK(!r.empty());
      CHECK(r == cyclic_reduce(r));
      for (int letter : r) {
        CHECK(letter != 0);
        CHECK(std::abs(letter) <= static_cast<int>(span.generators.size()));
      }
    }
  }
}

TEST_CASE("presentation text round-trip") {
  GroupPresentation p;
  p.generators = {"a", "b", "c"};
  p.relators = {{1, 2, -1, -2}, {3, 3}};
  const auto text = presentation_to_text(p);
  CHECK(text == "gens: a b c\nrel: a b a^-1 b^-1\nrel: c c\n");
  CHECK(presentation_from_text(text) == p);

  CHECK_THROWS_AS(presentation_from_text("gens: a\nrel: b\n"), ParseError);
  CHECK_THROWS_AS(presentation_from_text("rel: a\n"), ParseError);
  CHECK_THROWS_AS(presentation_from_text("gens: a a\n"), ParseError);
  CHECK_THROWS_AS(presentation_from_text("bogus\n"), ParseError);
}
