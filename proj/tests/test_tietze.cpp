#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcpi/fc_model.hpp"
#include "fcpi/presentation.hpp"
#include "fcpi/quotient.hpp"
#include "fcpi/tietze.hpp"
#include "fcpi/verify.hpp"
#include "oracles.hpp"

using namespace fcpi;

TEST_CASE("elementary moves") {
  // A relator that isolates c = a^-1 b a eliminates c.
  GroupPresentation p;
  p.generators = {"a", "b", "c"};
  p.relators = {{-3, -1, 2, 1}};
  const auto r = tietze_simplify(p);
  CHECK(r.presentation.generators == std::vector<std::string>{"a", "b"});
  CHECK(r.presentation.relators.empty());
  CHECK_FALSE(r.budget_exhausted);
  // The trace rewrites c over the survivors: c = a^-1 b a.
  CHECK(r.image_of_input[0] == Word{1});
  CHECK(r.image_of_input[1] == Word{2});
  CHECK(r.image_of_input[2] == Word{-1, 2, 1});

  // Free reduction kills the relator a a^-1 outright.
  p.generators = {"a"};
  p.relators = {{1, -1}};
  CHECK(tietze_simplify(p).presentation.relators.empty());
  CHECK(tietze_simplify(p).presentation.generators.size() == 1);

  // A length-one relator kills its generator everywhere.
  p.generators = {"a", "b"};
  p.relators = {{2}, {1, 2, 1, 2}};
  const auto r2 = tietze_simplify(p);
  CHECK(r2.presentation.generators == std::vector<std::string>{"a"});
  REQUIRE(r2.presentation.relators.size() == 1);
  CHECK(r2.presentation.relators[0] == Word{1, 1});

  // Duplicate relators (up to rotation and inversion) collapse.
  p.generators = {"a", "b"};
  p.relators = {{1, 2}, {2, 1}, {-2, -1}};
  const auto r3 = tietze_simplify(p, 0);
  CHECK(r3.presentation.relators.size() == 1);
}

TEST_CASE("budget exhaustion is flagged") {
  GroupPresentation p;
  p.generators = {"a", "b"};
  p.relators = {{2, 1, 1}};
  const auto r = tietze_simplify(p, 0);
  CHECK(r.budget_exhausted);
  CHECK(r.presentation.generators.size() == 2);
  const auto full = tietze_simplify(p, 10);
  CHECK_FALSE(full.budget_exhausted);
  CHECK(full.presentation.generators.size() == 1);
}

TEST_CASE("simplification preserves the group on the battery") {
  // Deterministic random presentations; Tietze output must be
  // battery-indistinguishable from the input.
  std::mt19937 rng(20240811);
  const auto battery = battery_by_names({"C2", "C3", "S3"});
  for (int trial = 0; trial < 30; ++trial) {
    GroupPresentation p;
    const int gens = 2 + static_cast<int>(rng() % 3);
    for (int g = 0; g < gens; ++g) p.generators.push_back("g" + std::to_string(g));
    const int rels = 1 + static_cast<int>(rng() % 3);
    for (int r = 0; r < rels; ++r) {
      Word w;
      const int len = 2 + static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) {
        const int g = 1 + static_cast<int>(rng() % gens);
        w.push_back((rng() % 2) ? g : -g);
      }
      p.relators.push_back(std::move(w));
    }
    const auto simplified = tietze_simplify(p).presentation;
    CHECK(abelianization(p) == abelianization(simplified));
    for (const auto& t : battery)
      CHECK(count_homs(p, t) == count_homs(simplified, t));
  }
}

TEST_CASE("simplifying the quotient presentations preserves the group") {
  for (int n : {1, 2}) {
    const auto q = build_quotient(build_salvetti_2_skeleton(build_fc_arrangement(n)));
    const auto sd = spanning_cells(q);
    for (auto mode : {PresentationMode::Tree, PresentationMode::SpanningComplex}) {
      const auto p = presentation_from_complex(q, sd, mode);
      const auto cmp =
          compare_presentations(p, tietze_simplify(p).presentation, default_battery());
      for (const auto& c : cmp.checks) {
        CAPTURE(c.name);
        CHECK(c.status == "pass");
      }
    }
  }
}

TEST_CASE("fixpoint leaves no isolating relator") {
  const auto p = fc_model_presentation(2);
  const auto r = tietze_simplify(p);
  for (const auto& rel : r.presentation.relators) {
    for (int letter : rel) {
      int count = 0;
      for (int l2 : rel)
        if (std::abs(l2) == std::abs(letter)) ++count;
      CHECK(count != 1);
    }
  }
}
