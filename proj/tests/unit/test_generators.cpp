#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "honlb/generators.hpp"
#include "honlb/network_io.hpp"
#include "honlb/persistence.hpp"

using namespace honlb;

TEST_CASE("model names") {
  CHECK(parse_model("er") == Model::ErdosRenyi);
  CHECK(parse_model("gauss") == Model::GaussianKernel);
  CHECK(parse_model("corr") == Model::Correlation);
  CHECK_THROWS_AS(parse_model("ba"), std::invalid_argument);
}

TEST_CASE("domains") {
  CHECK(parse_domain("square") == Domain::Square);
  CHECK(parse_domain("disk") == Domain::Disk);
  CHECK_THROWS_AS(parse_domain("circle"), std::invalid_argument);

  // square points are at most sqrt(2) apart, disk points up to 2
  const double floor = std::exp(-2.0 / (2.0 * 0.5 * 0.5));
  GenConfig c;
  c.model = Model::GaussianKernel;
  c.n = 40;
  c.seed = 11;
  c.tau = 0.0;
  auto lowest = [](const HighOrderNetwork& net) {
    double m = 1.0;
    for (const auto& [key, w] : net.weights()) m = std::min(m, w);
    return m;
  };
  CHECK(lowest(generate(c)) >= floor - 1e-15);
  c.domain = Domain::Disk;
  CHECK(lowest(generate(c)) < floor);
}

TEST_CASE("config checks") {
  GenConfig c;
  c.n = 0;
  CHECK_THROWS_AS(generate(c), std::invalid_argument);
  c = GenConfig{};
  c.sigma = 0;
  CHECK_THROWS_AS(generate(c), std::invalid_argument);
  c = GenConfig{};
  c.tau = 1.0;
  CHECK_THROWS_AS(generate(c), std::invalid_argument);
  c = GenConfig{};
  c.feature_dim = 0;
  CHECK_THROWS_AS(generate(c), std::invalid_argument);
}

TEST_CASE("weights stay above tau and inside [0, 1]") {
  for (Model m : {Model::ErdosRenyi, Model::GaussianKernel, Model::Correlation}) {
    GenConfig c;
    c.model = m;
    c.n = 25;
    c.seed = 3;
    auto net = generate(c);
    CHECK(net.order() == 1);
    CHECK(net.mode() == Mode::Proximity);
    CHECK(net.size() == 25);
    for (const auto& [key, w] : net.weights()) {
      CHECK(key.size() == 2);
      CHECK(w > c.tau);
      CHECK(w <= 1.0);
    }
  }
}

TEST_CASE("determinism and seed sensitivity") {
  GenConfig c;
  c.model = Model::Correlation;
  c.n = 12;
  c.seed = 99;
  CHECK(network_to_json(generate(c)) == network_to_json(generate(c)));
  GenConfig other = c;
  other.seed = 100;
  CHECK(network_to_json(generate(c)) != network_to_json(generate(other)));

  // edge values do not depend on how many nodes are drawn
  GenConfig small = c, large = c;
  small.model = large.model = Model::ErdosRenyi;
  small.n = 5;
  large.n = 9;
  auto a = generate(small), b = generate(large);
  for (NodeIndex i = 0; i < 5; ++i)
    for (NodeIndex j = i + 1; j < 5; ++j)
      CHECK(a.value({i, j}) == b.value({i, j}));
}

TEST_CASE("gaussian kernel with coincident points") {
  GenConfig c;
  c.model = Model::GaussianKernel;
  c.n = 2;
  c.tau = 0.0;
  c.sigma = 1e6;  // every distance negligible
  auto net = generate(c);
  CHECK(net.value({0, 1}) == doctest::Approx(1.0));
  CHECK(net.value({0, 1}) == net.value({1, 0}));
}

TEST_CASE("correlation weights concentrate near one half") {
  double total = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenConfig c;
    c.model = Model::Correlation;
    c.n = 30;
    c.tau = 0.0;
    c.seed = seed;
    auto net = generate(c);
    for (const auto& [key, w] : net.weights()) {
      total += w;
      ++count;
    }
  }
  const double mean = total / static_cast<double>(count);
  CHECK(mean >= 0.45);
  CHECK(mean <= 0.55);
}

TEST_CASE("lift_pairwise") {
  GenConfig c;
  c.n = 10;
  c.seed = 4;
  auto raw = generate(c);
  auto net = lift_pairwise(raw);
  CHECK(validate(net).empty());
  auto d = dual(net);
  for (NodeIndex i = 0; i < 10; ++i) CHECK(d.value({i}) == 0.0);
  for (const auto& [key, w] : raw.weights())
    CHECK(d.value(key) == doctest::Approx(1.0 - w));
  // removed edges never enter before 1
  for (NodeIndex i = 0; i < 10; ++i)
    for (NodeIndex j = i + 1; j < 10; ++j)
      if (!raw.explicit_value({i, j})) CHECK(d.value({i, j}) == 1.0);
  auto dg = diagrams_of(net, 0);
  for (const auto& p : dg[0].points) CHECK(p.birth == 0.0);

  CHECK_THROWS_AS(lift_pairwise(d), std::invalid_argument);
}
