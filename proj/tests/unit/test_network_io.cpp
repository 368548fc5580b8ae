#include "doctest.h"
#include "fixtures.hpp"
#include "honlb/format.hpp"
#include "honlb/network_io.hpp"
#include "random_networks.hpp"

using namespace honlb;

TEST_CASE("JSON round trip") {
  auto net = testing::fixture("strict_four_node.json");
  CHECK(network_from_json(network_to_json(net)) == net);
  testing::Rng rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    auto r = testing::random_strict_dissimilarity(rng, 4, 2);
    CHECK(network_from_json(network_to_json(r)) == r);
    CHECK(network_from_json(network_to_json(dual(r))) == dual(r));
  }
}

TEST_CASE("JSON layout") {
  HighOrderNetwork net(1, Mode::Proximity, {"b", "a"},
                       {{{"a"}, 1.0}, {{"b", "a"}, 0.1}});
  CHECK(network_to_json(net) ==
        "{\n  \"order\": 1,\n  \"mode\": \"proximity\",\n"
        "  \"nodes\": [\"a\", \"b\"],\n  \"weights\": [\n"
        "    {\"tuple\": [\"a\"], \"value\": 1},\n"
        "    {\"tuple\": [\"a\", \"b\"], \"value\": 0.1}\n  ]\n}\n");
  HighOrderNetwork bare(0, Mode::Dissimilarity, {"a"});
  CHECK(network_from_json(network_to_json(bare)) == bare);
}

TEST_CASE("bad JSON") {
  CHECK_THROWS_AS(network_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(network_from_json("{\"order\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(
      network_from_json(
          "{\"order\": 1, \"mode\": \"other\", \"nodes\": [\"a\"]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      network_from_json("{\"order\": 1, \"mode\": \"proximity\", \"nodes\": "
                        "[\"a\"], \"weights\": [{\"tuple\": [\"z\"], "
                        "\"value\": 0.5}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(read_network("/nonexistent/net.json"), std::runtime_error);
}

TEST_CASE("shortest real formatting") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(2.0 / 19.0) == "0.10526315789473684");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
