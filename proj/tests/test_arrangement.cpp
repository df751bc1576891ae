#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fcpi/arrangement.hpp"
#include "fcpi/errors.hpp"
#include "fcpi/io.hpp"
#include "oracles.hpp"

using namespace fcpi;

TEST_CASE("F_C arrangement construction") {
  const auto a1 = build_fc_arrangement(1);
  CHECK(a1.size() == 3);
  const auto a2 = build_fc_arrangement(2);
  CHECK(a2.size() == 6);
  const auto a3 = build_fc_arrangement(3);
  CHECK(a3.size() == 11);

  // n=2 planes in order: x+y=1, x-y=1, -x+y=1, -x-y=1, x=0, y=0.
  CHECK(a2.hyperplanes[0].normal == std::vector<long>{1, 1});
  CHECK(a2.hyperplanes[1].normal == std::vector<long>{1, -1});
  CHECK(a2.hyperplanes[2].normal == std::vector<long>{-1, 1});
  CHECK(a2.hyperplanes[3].normal == std::vector<long>{-1, -1});
  for (int j = 0; j < 4; ++j) {
    CHECK(a2.hyperplanes[j].offset == 1);
    CHECK(a2.hyperplanes[j].kind == Hyperplane::Kind::Epsilon);
  }
  CHECK(a2.hyperplanes[4].normal == std::vector<long>{1, 0});
  CHECK(a2.hyperplanes[5].normal == std::vector<long>{0, 1});
  CHECK(a2.hyperplanes[4].offset == 0);
  CHECK(a2.hyperplanes[5].kind == Hyperplane::Kind::Coordinate);
  CHECK(a2.epsilon_index({1, 1}) == 0);
  CHECK(a2.epsilon_index({1, -1}) == 1);
  CHECK(a2.epsilon_index({-1, 1}) == 2);
  CHECK(a2.epsilon_index({-1, -1}) == 3);
  CHECK(a2.coordinate_index(1) == 4);
  CHECK(a2.coordinate_index(2) == 5);

  CHECK_THROWS_AS(build_fc_arrangement(0), CapacityError);
  CHECK_THROWS_AS(build_fc_arrangement(13), CapacityError);
}

TEST_CASE("chamber enumeration matches the exhaustive oracle") {
  for (int n : {1, 2, 3}) {
    const auto arr = build_fc_arrangement(n);
    const auto bfs = enumerate_chambers(arr);
    const auto parallel = enumerate_chambers_exhaustive(arr);
    const auto serial = enumerate_chambers_exhaustive_serial(arr);
    CHECK(bfs == parallel);
    CHECK(parallel == serial);
    CHECK(static_cast<long long>(bfs.size()) % (1ll << n) == 0);
  }
  CHECK(enumerate_chambers(build_fc_arrangement(1)).size() == 4);
  CHECK(enumerate_chambers(build_fc_arrangement(2)).size() == 16);
}

TEST_CASE("n=2 chamber count agrees with the region formula") {
  const auto arr = build_fc_arrangement(2);
  CHECK(testing::line_arrangement_regions(arr) == 16);
  CHECK(enumerate_chambers(arr).size() == 16);
}

TEST_CASE("codim-1 faces") {
  {
    const auto arr = build_fc_arrangement(1);
    const auto walls = enumerate_codim1_faces(arr, enumerate_chambers(arr));
    CHECK(walls.size() == 3);
  }
  const auto arr = build_fc_arrangement(2);
  const auto chambers = enumerate_chambers(arr);
  const auto walls = enumerate_codim1_faces(arr, chambers);
  CHECK(walls.size() == 20);
  CHECK(testing::line_arrangement_segments(arr) == 20);

  std::set<SignVec> chamber_set;
  for (const auto& c : chambers) chamber_set.insert(c.signs);
  for (const auto& w : walls) {
    int zero = -1, zeros = 0;
    for (size_t j = 0; j < w.signs.size(); ++j)
      if (w.signs[j] == 0) {
        zero = static_cast<int>(j);
        ++zeros;
      }
    CHECK(zeros == 1);
    for (int s : {-1, 1}) {
      SignVec side = w.signs;
      side[zero] = static_cast<int8_t>(s);
      CHECK(chamber_set.count(side) == 1);
    }
  }
}

TEST_CASE("codim-2 flats and their classification") {
  CHECK(enumerate_flats2(build_fc_arrangement(1)).empty());

  const auto arr = build_fc_arrangement(2);
  const auto flats = enumerate_flats2(arr);
  CHECK(flats.size() == 5);

  std::set<std::vector<int>> sets;
  for (const auto& f : flats) sets.insert(f.zero_hyperplanes);
  // The flat at (1,0) lies on y=0, x+y=1 and x-y=1.
  CHECK(sets.count({0, 1, 5}) == 1);
  // The origin lies on both coordinate axes only.
  CHECK(sets.count({4, 5}) == 1);
  // Parallel pair x+y=1, -x-y=1 contributes nothing.
  for (const auto& f : flats) CHECK(f.zero_hyperplanes != std::vector<int>{0, 3});

  int mixed = 0, coord = 0, eps = 0;
  for (const auto& f : flats) {
    if (f.cls == FlatClass::MixedTriple) ++mixed;
    if (f.cls == FlatClass::CoordinatePair) ++coord;
    if (f.cls == FlatClass::EpsilonPair) ++eps;
  }
  CHECK(mixed == 4);
  CHECK(coord == 1);
  CHECK(eps == 0);  // antipodal epsilon pairs are parallel at n=2

  // n=3 has honest epsilon-pair flats.
  const auto flats3 = enumerate_flats2(build_fc_arrangement(3));
  bool has_eps = false;
  for (const auto& f : flats3) {
    CHECK(f.cls != FlatClass::Other);
    if (f.cls == FlatClass::EpsilonPair) has_eps = true;
  }
  CHECK(has_eps);
}

TEST_CASE("codim-2 faces sit on their flats") {
  const auto arr = build_fc_arrangement(2);
  const auto fs = enumerate_all(arr);
  // Five flats, each a single point at n=2, give five codim-2 faces.
  CHECK(fs.faces2.size() == 5);
  for (size_t i = 0; i < fs.faces2.size(); ++i) {
    const auto& zeros = fs.flats[fs.face2_flat[i]].zero_hyperplanes;
    for (size_t j = 0; j < fs.faces2[i].signs.size(); ++j) {
      const bool in_flat = std::find(zeros.begin(), zeros.end(), static_cast<int>(j)) != zeros.end();
      CHECK((fs.faces2[i].signs[j] == 0) == in_flat);
    }
  }
}

TEST_CASE("arrangement serialization round-trips") {
  for (int n : {1, 2, 3}) {
    const auto arr = build_fc_arrangement(n);
    const auto text = serialize_arrangement(arr);
    const auto back = parse_arrangement(text);
    CHECK(back == arr);
    CHECK(serialize_arrangement(back) == text);
  }
  CHECK_THROWS_AS(parse_arrangement("{"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("{\"dimension\":1}"), ParseError);
}

TEST_CASE("validate rejects malformed arrangements") {
  auto arr = build_fc_arrangement(2);
  arr.hyperplanes[0].normal = {0, 0};
  CHECK_THROWS_AS(arr.validate(), StructuralError);

  arr = build_fc_arrangement(2);
  arr.hyperplanes[1] = arr.hyperplanes[0];
  CHECK_THROWS_AS(arr.validate(), StructuralError);

  arr = build_fc_arrangement(2);
  arr.hyperplanes.pop_back();
  CHECK_THROWS_AS(arr.validate(), StructuralError);  // F_C size mismatch
}
