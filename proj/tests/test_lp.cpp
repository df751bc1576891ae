#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcpi/arrangement.hpp"
#include "fcpi/lp.hpp"
#include "oracles.hpp"

using namespace fcpi;

namespace {

SignVec sv(const std::string& s) {
  SignVec out;
  for (char c : s) out.push_back(c == '+' ? 1 : (c == '-' ? -1 : 0));
  return out;
}

}  // namespace

TEST_CASE("slack LP on hand-checked systems") {
  // x > 0, x < 1: feasible with slack 1/2 at x = 1/2 capped by t <= 1 rules.
  StrictSystem sys;
  sys.num_vars = 1;
  sys.rows.push_back({{Rat(1)}, Rat(0), LinearCondition::Rel::Gt});
  sys.rows.push_back({{Rat(-1)}, Rat(-1), LinearCondition::Rel::Gt});
  auto w = strict_witness(sys);
  REQUIRE(w.has_value());
  CHECK(w->slack == Rat(1, 2));
  CHECK(w->point[0] == Rat(1, 2));

  // x > 0, x < 0: empty.
  sys.rows[1] = {{Rat(-1)}, Rat(0), LinearCondition::Rel::Gt};
  CHECK_FALSE(strict_feasible_system(sys));

  // x > 1 alone: open and unbounded, slack capped at 1.
  sys.rows = {{{Rat(1)}, Rat(1), LinearCondition::Rel::Gt}};
  w = strict_witness(sys);
  REQUIRE(w.has_value());
  CHECK(w->slack == 1);

  // Equalities only: x = 3 with x = 3 again.
  sys.rows = {{{Rat(1)}, Rat(3), LinearCondition::Rel::Eq},
              {{Rat(2)}, Rat(6), LinearCondition::Rel::Eq}};
  w = strict_witness(sys);
  REQUIRE(w.has_value());
  CHECK(w->point[0] == 3);

  // Inconsistent equalities.
  sys.rows = {{{Rat(1)}, Rat(3), LinearCondition::Rel::Eq},
              {{Rat(1)}, Rat(4), LinearCondition::Rel::Eq}};
  CHECK_FALSE(strict_feasible_system(sys));

  // sum_x > 1 and sum_(-x) > 1 cannot both hold.
  sys.num_vars = 2;
  sys.rows = {{{Rat(1), Rat(1)}, Rat(1), LinearCondition::Rel::Gt},
              {{Rat(-1), Rat(-1)}, Rat(1), LinearCondition::Rel::Gt}};
  CHECK_FALSE(strict_feasible_system(sys));
}

TEST_CASE("strict_feasible on the n=2 arrangement") {
  const auto arr = build_fc_arrangement(2);
  // Hyperplane order: x+y=1, x-y=1, -x+y=1, -x-y=1, x=0, y=0.

  // The chamber of (0.1, 0.1): all epsilon planes minus, both coordinates plus.
  CHECK(strict_feasible(arr, sv("----++")));
  CHECK(signs_at_point(arr, {Rat(1, 10), Rat(1, 10)}) == sv("----++"));

  // Zero on x+y=1 and x-y=1 forces the point (1,0), which violates y > 0.
  CHECK_FALSE(strict_feasible(arr, sv("00--++")));
  // The same flat with y free of a sign works on the y = 0 side.
  CHECK(strict_feasible(arr, sv("00--+0")));

  // Witness points land in the prescribed cell.
  const auto w = witness_point(arr, sv("+---++"));
  REQUIRE(w.has_value());
  CHECK(signs_at_point(arr, *w) == sv("+---++"));
}

TEST_CASE("simplex agrees with Fourier-Motzkin on every sign vector") {
  for (int n : {1, 2}) {
    const auto arr = build_fc_arrangement(n);
    const int m = arr.size();
    long long total = 1;
    for (int j = 0; j < m; ++j) total *= 3;
    for (long long code = 0; code < total; ++code) {
      SignVec s(m);
      long long c = code;
      for (int j = 0; j < m; ++j) {
        s[j] = static_cast<int8_t>(c % 3 - 1);
        c /= 3;
      }
      const bool lp = strict_feasible(arr, s);
      const bool fm = testing::fme_feasible(testing::system_from_signs(arr, s));
      if (lp != fm) {
        CAPTURE(sign_vec_to_string(s));
        CHECK(lp == fm);
      }
    }
  }
}

TEST_CASE("batched feasibility matches the scalar path") {
  const auto arr = build_fc_arrangement(2);
  std::vector<SignVec> cand;
  for (int k = 0; k < 64; ++k) {
    SignVec s(6);
    for (int j = 0; j < 6; ++j) s[j] = ((k >> j) & 1) ? 1 : -1;
    cand.push_back(std::move(s));
  }
  const auto batch = feasible_batch(arr, cand);
  for (size_t i = 0; i < cand.size(); ++i)
    CHECK(static_cast<bool>(batch[i]) == strict_feasible(arr, cand[i]));
}

TEST_CASE("empty arrangement has one chamber") {
  Arrangement arr;
  arr.dimension = 1;
  CHECK(strict_feasible(arr, {}));
}
