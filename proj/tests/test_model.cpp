#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fcpi/fc_model.hpp"
#include "fcpi/verify.hpp"

using namespace fcpi;

TEST_CASE("model presentation shapes") {
  const auto p1 = fc_model_presentation(1);
  CHECK(p1.generators == std::vector<std::string>{"G0", "G1"});
  REQUIRE(p1.relators.size() == 1);
  CHECK(p1.relators[0] == Word{1, 2, 1, 2, -1, -2, -1, -2});

  const auto p2 = fc_model_presentation(2);
  CHECK(p2.generators.size() == 3);
  REQUIRE(p2.relators.size() == 3);
  CHECK(p2.relators[0] == Word{2, 3, -2, -3});                    // [G1, G2]
  CHECK(p2.relators[1] == Word{1, 2, 1, 2, -1, -2, -1, -2});      // (G0 G1)^2 = (G1 G0)^2
  CHECK(p2.relators[2] == Word{1, 3, 1, 3, -1, -3, -1, -3});

  const auto p3 = fc_model_presentation(3);
  CHECK(p3.generators.size() == 4);
  CHECK(p3.relators.size() == 9);  // 3 commutators + 3 braid + 3 pairs

  const auto p4 = fc_model_presentation(4);
  // 6 commutators + 4 braid + pairs: ({i},{j}) with |I|+|J| <= 3 gives
  // 6 singleton pairs + 12 pairs of shapes (1,2): total 6 + 4 + 18 = 28.
  CHECK(p4.generators.size() == 5);
  CHECK(p4.relators.size() == 28);
}

TEST_CASE("gamma words") {
  CHECK(gamma_epsilon_word({1, 1}) == Word{1});
  CHECK(gamma_epsilon_word({-1, 1}) == Word{-2, 1, 2});
  CHECK(gamma_epsilon_word({-1, -1, 1}) == Word{-3, -2, 1, 2, 3});
  CHECK_THROWS_AS(gamma_epsilon_word({-1, -1}), std::domain_error);
  CHECK(epsilon_support({-1, 1, -1}) == std::vector<int>{1, 3});
}

TEST_CASE("epsilon pair feasibility") {
  // (-1,1,1) and (1,-1,1): meet in the open octant.
  CHECK(epsilon_pair_feasible_lp({-1, 1, 1}, {1, -1, 1}));
  CHECK(epsilon_pair_feasible_combinatorial({-1, 1, 1}, {1, -1, 1}));

  // Antipodal pairs are parallel planes.
  CHECK_FALSE(epsilon_pair_feasible_lp({-1, 1, 1}, {1, -1, -1}));
  CHECK_FALSE(epsilon_pair_feasible_combinatorial({-1, 1, 1}, {1, -1, -1}));

  // Nested supports never meet in the orthant.
  CHECK_FALSE(epsilon_pair_feasible_lp({-1, 1, 1}, {-1, -1, 1}));
  CHECK_FALSE(epsilon_pair_feasible_combinatorial({-1, 1, 1}, {-1, -1, 1}));

  // The all-plus plane meets nothing in a commuting pair (I empty).
  CHECK_FALSE(epsilon_pair_feasible_lp({1, 1, 1}, {-1, 1, 1}));

  // K nonempty but the complement is exhausted: (-1,-1,1) vs (-1,1,-1).
  CHECK_FALSE(epsilon_pair_feasible_lp({-1, -1, 1}, {-1, 1, -1}));
  CHECK_FALSE(epsilon_pair_feasible_combinatorial({-1, -1, 1}, {-1, 1, -1}));

  // LP and the combinatorial criterion agree on every pair for n <= 4.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<int>> eps;
    for (int k = 0; k < (1 << n); ++k) {
      std::vector<int> e(n);
      for (int i = 0; i < n; ++i) e[i] = ((k >> (n - 1 - i)) & 1) ? -1 : 1;
      eps.push_back(std::move(e));
    }
    for (size_t a = 0; a < eps.size(); ++a)
      for (size_t b = a + 1; b < eps.size(); ++b)
        CHECK(epsilon_pair_feasible_lp(eps[a], eps[b]) ==
              epsilon_pair_feasible_combinatorial(eps[a], eps[b]));
  }
}

TEST_CASE("epsilon relators reduce onto the model pair family") {
  // n=3: the pair eps=(-1,1,1), eps'=(1,-1,1) gives [G1^-1 G0 G1, G2^-1 G0 G2].
  const auto rels = fc_epsilon_relations(3);
  bool found = false;
  const std::vector<int> ea{-1, 1, 1}, eb{1, -1, 1};
  for (const auto& r : rels) {
    if ((r.eps1 == ea && r.eps2 == eb) || (r.eps1 == eb && r.eps2 == ea)) {
      found = true;
      CHECK(canonical_cyclic(r.relator) == canonical_cyclic(model_pair_relator({1}, {2})));
      CHECK(canonical_cyclic(r.relator_reduced) ==
            canonical_cyclic(model_pair_relator({1}, {2})));
    }
  }
  CHECK(found);

  for (int n = 2; n <= 4; ++n) {
    std::set<Word> reduced;
    for (const auto& r : fc_epsilon_relations(n))
      reduced.insert(canonical_cyclic(r.relator_reduced));
    std::set<Word> expected;
    for (const auto& w : fc_model_pair_relators(n)) expected.insert(canonical_cyclic(w));
    CHECK(reduced == expected);
  }
}

TEST_CASE("K cancellation changes the word but not the class") {
  // eps = (-1,-1,1,1), eps' = (-1,1,-1,1): K = {1}, I = {2}, J = {3}.
  const std::vector<int> e1{-1, -1, 1, 1}, e2{-1, 1, -1, 1};
  REQUIRE(epsilon_pair_feasible_lp(e1, e2));
  bool found = false;
  for (const auto& r : fc_epsilon_relations(4)) {
    if ((r.eps1 == e1 && r.eps2 == e2) || (r.eps1 == e2 && r.eps2 == e1)) {
      found = true;
      CHECK(canonical_cyclic(r.relator_reduced) ==
            canonical_cyclic(model_pair_relator({2}, {3})));
      CHECK(canonical_cyclic(r.relator) != canonical_cyclic(r.relator_reduced));
    }
  }
  CHECK(found);
}
