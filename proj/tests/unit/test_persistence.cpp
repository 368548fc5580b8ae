#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "honlb/bottleneck.hpp"
#include "honlb/persistence.hpp"
#include "oracles.hpp"
#include "random_networks.hpp"

using namespace honlb;
using honlb::testing::fixture;
using honlb::testing::same_points;

using Pts = std::vector<DiagramPoint>;

TEST_CASE("square with filled chord diagrams") {
  auto d = diagrams_of(fixture("square_chord_filled.json"), 1);
  REQUIRE(d.size() == 2);
  CHECK(d[0].dim == 0);
  CHECK(d[1].dim == 1);
  CHECK(same_points(d[1].points, Pts{{0.7, 0.8}, {0.5, 1.0}}, 1e-12));
  CHECK(same_points(d[0].points, Pts{{0, 1}, {0, 0.1}, {0, 0.2}, {0, 0.3}},
                    1e-12));
  CHECK(same_points(d[0].points,
                    testing::union_find_zero_dim(fixture("square_chord_filled.json")), 0));
}

TEST_CASE("loops") {
  CHECK(same_points(diagrams_of(fixture("triangle.json"), 1)[1].points,
                    Pts{{0.5, 1}}, 1e-12));
  CHECK(same_points(diagrams_of(fixture("square.json"), 1)[1].points,
                    Pts{{0.5, 1}}, 1e-12));
  CHECK(same_points(diagrams_of(fixture("square_chord.json"), 1)[1].points,
                    Pts{{0.5, 1}, {0.7, 1}}, 1e-12));
}

TEST_CASE("tight pair diagrams") {
  auto dx = diagrams_of(fixture("tight_x.json"), 1);
  auto dy = diagrams_of(fixture("tight_y.json"), 1);
  CHECK(same_points(dx[0].points, Pts{{0, 1}, {0.12, 0.42}, {0.2, 0.32}}, 1e-9));
  CHECK(same_points(dx[1].points, Pts{{0.6, 1}}, 1e-9));
  // the largest edge of Y is 0.51, so the loop is born there
  CHECK(same_points(dy[0].points, Pts{{0.1, 1}, {0.21, 0.5}, {0.25, 0.39}},
                    1e-9));
  CHECK(same_points(dy[1].points, Pts{{0.51, 1}}, 1e-9));
}

TEST_CASE("proximity networks are dualized") {
  auto x = fixture("tight_x.json");
  auto px = dual(x);
  auto a = diagrams_of(x, 1);
  auto b = diagrams_of(px, 1);
  for (int k = 0; k < 2; ++k) CHECK(same_points(a[k].points, b[k].points, 1e-12));
}

TEST_CASE("0-dim persistence matches union-find") {
  testing::Rng rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = testing::pick(rng, 1, 8);
    auto net = testing::random_strict_dissimilarity(rng, n, 1, 0.6);
    auto d = diagrams_of(net, 0);
    CHECK(same_points(d[0].points, testing::union_find_zero_dim(net), 0));
  }
}

TEST_CASE("0-dim point count equals node count") {
  testing::Rng rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    // edges strictly above their nodes: every merge leaves a point
    const std::size_t n = testing::pick(rng, 1, 7);
    auto net = testing::random_full_strict(rng, n, 1);
    auto d = diagrams_of(net, 0);
    std::size_t alive = 0;
    for (const auto& p : d[0].points) alive += p.death == 1.0;
    CHECK(alive == 1);  // complete graph is connected
    CHECK(d[0].points.size() == n);
  }
}

TEST_CASE("prune") {
  PersistenceDiagram d{1, {{0.5, 1.0}, {0.7, 0.8}}};
  CHECK(prune(d, 0).points == d.points);
  CHECK(prune(d, 0.2).points == Pts{{0.5, 1.0}});
  CHECK_THROWS_AS(prune(d, -0.1), std::invalid_argument);

  testing::Rng rng(10);
  for (int rep = 0; rep < 100; ++rep) {
    PersistenceDiagram r{0, testing::random_diagram(rng, 6)};
    const double t = testing::uniform(rng, 0.0, 0.5);
    CHECK(bottleneck_distance(r, prune(r, t)) <= t / 2 + 1e-12);
  }
}

TEST_CASE("diagram CSV") {
  std::ostringstream os;
  write_diagrams_csv(os, diagrams_of(fixture("square_chord_filled.json"), 1));
  const auto text = os.str();
  CHECK(text.rfind("dim,birth,death\n", 0) == 0);
  CHECK(text.find("\n1,0.7,0.8\n") != std::string::npos);
  CHECK(text.find("\n1,0.5,1\n") != std::string::npos);
}
