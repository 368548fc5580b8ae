#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "honlb/filtration.hpp"
#include "random_networks.hpp"

using namespace honlb;
using honlb::testing::fixture;

TEST_CASE("square with filled chord filtration") {
  auto f = build_filtration(fixture("square_chord_filled.json"));
  std::vector<std::pair<Tuple, double>> expected = {
      {{0}, 0.0},    {{1}, 0.0},    {{2}, 0.0},    {{3}, 0.0},
      {{0, 1}, 0.1}, {{1, 2}, 0.2}, {{2, 3}, 0.3}, {{0, 3}, 0.5},
      {{1, 3}, 0.7}, {{0, 1, 3}, 0.8}};
  REQUIRE(f.entries.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(f.entries[i].simplex.vertices == expected[i].first);
    CHECK(f.entries[i].birth == expected[i].second);
  }
  CHECK(f.max_dim() == 2);
  CHECK(build_filtration(fixture("square_chord_filled.json"), 1).max_dim() == 1);
}

TEST_CASE("single node") {
  HighOrderNetwork net(0, Mode::Dissimilarity, {"a"}, {{{"a"}, 0.0}});
  auto f = build_filtration(net);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0].simplex.dim() == 0);
}

TEST_CASE("rejects proximity and invalid networks") {
  HighOrderNetwork p(1, Mode::Proximity, {"a"}, {{{"a"}, 1.0}});
  CHECK_THROWS_AS(build_filtration(p), std::invalid_argument);
  HighOrderNetwork bad(1, Mode::Dissimilarity, {"a", "b"},
                       {{{"a"}, 0.3}, {{"b"}, 0.0}, {{"a", "b"}, 0.1}});
  CHECK_THROWS_AS(build_filtration(bad), std::invalid_argument);
}

TEST_CASE("tuples over unlisted faces are left out") {
  // edge listed at 1 over an unlisted node
  HighOrderNetwork net(2, Mode::Dissimilarity, {"a", "b", "c"},
                       {{{"a"}, 0.1}, {{"b"}, 0.2}, {{"a", "b"}, 1.0},
                        {{"a", "c"}, 1.0}, {{"a", "b", "c"}, 1.0}});
  auto f = build_filtration(net);
  CHECK(f.entries.size() == 3);
}

TEST_CASE("face before coface, births monotone, faces born no later") {
  testing::Rng rng(2024);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = testing::pick(rng, 1, 6);
    const int order = static_cast<int>(testing::pick(rng, 0, 3));
    auto net = testing::random_strict_dissimilarity(rng, n, order, 0.7);
    auto f = build_filtration(net);
    std::map<Tuple, std::pair<std::size_t, double>> seen;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      const auto& e = f.entries[i];
      if (i > 0) CHECK(f.entries[i - 1].birth <= e.birth);
      for (const auto& [face, sign] : boundary(e.simplex)) {
        auto it = seen.find(face.vertices);
        REQUIRE(it != seen.end());
        CHECK(it->second.second < e.birth);  // strict network
      }
      seen[e.simplex.vertices] = {i, e.birth};
    }
    // every listed tuple whose faces are listed made it in
    std::size_t listed = 0;
    for (const auto& [key, value] : net.weights()) {
      (void)value;
      ++listed;
    }
    CHECK(f.entries.size() == listed);
  }
}

TEST_CASE("boundary") {
  auto b = boundary(Simplex{{0, 1, 2}});
  REQUIRE(b.size() == 3);
  CHECK(b[0].first.vertices == Tuple{1, 2});
  CHECK(b[0].second == 1);
  CHECK(b[1].first.vertices == Tuple{0, 2});
  CHECK(b[1].second == -1);
  CHECK(b[2].first.vertices == Tuple{0, 1});
  CHECK(b[2].second == 1);
  CHECK(boundary(Simplex{{4}}).empty());

  // boundary of boundary cancels over Z/2, every simplex up to dim 3 on 5
  // vertices
  for (unsigned mask = 1; mask < 32; ++mask) {
    Simplex s;
    for (NodeIndex v = 0; v < 5; ++v)
      if (mask >> v & 1u) s.vertices.push_back(v);
    if (s.dim() > 3) continue;
    std::map<Tuple, int> parity;
    for (const auto& [face, sign] : boundary(s))
      for (const auto& [ff, sign2] : boundary(face)) parity[ff.vertices] ^= 1;
    for (const auto& [t, p] : parity) CHECK(p == 0);
  }
}
