#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "honlb/bottleneck.hpp"
#include "honlb/exact_distance.hpp"
#include "oracles.hpp"
#include "random_networks.hpp"

using namespace honlb;
using honlb::testing::fixture;

namespace {

HighOrderNetwork relabel(const HighOrderNetwork& net,
                         const std::vector<NodeIndex>& perm) {
  WeightMap w;
  for (const auto& [key, value] : net.weights()) {
    Tuple t;
    for (NodeIndex v : key) t.push_back(perm[v]);
    w[canonical(t)] = value;
  }
  return HighOrderNetwork::from_indices(net.order(), net.mode(), net.nodes(),
                                        std::move(w));
}

}  // namespace

TEST_CASE("correspondence_difference") {
  auto x = fixture("tight_x.json");
  auto y = fixture("tight_y.json");
  auto c = Correspondence::from_ids(x, y, {{"x1", "y1"}, {"x2", "y3"}, {"x3", "y2"}});
  CHECK(correspondence_difference(x, y, c, 1) == doctest::Approx(0.1));
  CHECK(correspondence_difference(x, y, c, 0) == doctest::Approx(0.1));
  CHECK(correspondence_difference(x, x, Correspondence::identity(3), 1) == 0.0);

  auto x7 = fixture("augment_x.json");
  auto y7 = fixture("augment_y.json");
  auto c7 = Correspondence::from_ids(x7, y7, {{"x1", "y1"}, {"x2", "y3"}, {"x3", "y3"}});
  // worst tuples: (x1,x2)/(y1,y3) = |0.9-0.7| and (x2,x3)/(y3,y3) = |0.2-0.1|
  CHECK(correspondence_difference(x7, y7, c7, 1) == doctest::Approx(0.2));
  CHECK(correspondence_difference(x7, y7, c7, 1) ==
        testing::gamma_by_tuples(x7, y7, c7, 1));

  auto bad = Correspondence::from_ids(x, y, {{"x1", "y1"}});
  CHECK_THROWS_AS(correspondence_difference(x, y, bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(correspondence_difference(x, y, c, 2), std::out_of_range);
}

TEST_CASE("differences agree with the tuple definition") {
  testing::Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int order = static_cast<int>(testing::pick(rng, 0, 2));
    auto x = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 4), order);
    auto y = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 4), order);
    auto c = testing::random_correspondence(rng, x.size(), y.size());
    auto all = correspondence_differences(x, y, c);
    for (int k = 0; k <= order; ++k) {
      CHECK(all[k] == testing::gamma_by_tuples(x, y, c, k));
      if (k > 0) CHECK(all[k - 1] <= all[k]);
    }
  }
}

TEST_CASE("exact distances on the tight pair") {
  auto x = fixture("tight_x.json");
  auto y = fixture("tight_y.json");
  auto [d1, witness] = exact_k_order_distance(x, y, 1);
  CHECK(d1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(witness.covers(3, 3));
  CHECK(correspondence_difference(x, y, witness, 1) == d1);
  CHECK(exact_pnorm_distance(x, y, kInfNorm) == doctest::Approx(0.1));
  CHECK(zero_order_distance(x, y) == doctest::Approx(0.1));
  CHECK(upper_bound_distance(x, y, kInfNorm) >= 0.1 - 1e-12);

  auto lb = pnorm_lower_bound(x, y, kInfNorm);
  REQUIRE(lb.entries.size() == 2);
  CHECK(lb.dims == std::vector<int>{0});
  CHECK(lb.entries[0] == doctest::Approx(0.1));
  CHECK(lb.entries[1] == doctest::Approx(0.1));
  CHECK(lb.combined == doctest::Approx(0.1));
}

TEST_CASE("identical and relabelled networks are at distance 0") {
  testing::Rng rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = testing::random_strict_dissimilarity(rng, 3, 2);
    std::vector<NodeIndex> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto y = relabel(x, perm);
    CHECK(exact_k_order_distance(x, y, 2).first == 0.0);
    CHECK(exact_pnorm_distance(x, y, 1.0) == 0.0);
    CHECK(upper_bound_distance(x, x, 2.0) == 0.0);
    auto lb = pnorm_lower_bound(x, y, 2.0);
    for (double v : lb.entries) CHECK(v == 0.0);
  }
}

TEST_CASE("zero_order_distance") {
  HighOrderNetwork a(0, Mode::Dissimilarity, {"a"}, {{{"a"}, 0.0}});
  HighOrderNetwork b(0, Mode::Dissimilarity, {"b"}, {{{"b"}, 1.0}});
  CHECK(zero_order_distance(a, b) == 1.0);
  CHECK(zero_order_distance(a, a) == 0.0);

  // brute force over every correspondence on the tight pair node values
  auto x = fixture("tight_x.json");
  auto y = fixture("tight_y.json");
  CHECK(zero_order_distance(x, y) ==
        doctest::Approx(testing::exact_k_order_unpruned(x, y, 0)));

  testing::Rng rng(33);
  for (int rep = 0; rep < 50; ++rep) {
    auto p = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 4), 0);
    auto q = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 4), 0);
    CHECK(zero_order_distance(p, q) == testing::exact_k_order_unpruned(p, q, 0));
  }
}

TEST_CASE("minimal covers give the same minimum as all covers") {
  testing::Rng rng(34);
  for (int rep = 0; rep < 60; ++rep) {
    const int order = static_cast<int>(testing::pick(rng, 0, 2));
    auto x = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    auto y = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    for (int k = 0; k <= order; ++k)
      CHECK(exact_k_order_distance(x, y, k).first ==
            testing::exact_k_order_unpruned(x, y, k));
  }
}

TEST_CASE("exact distance is below random correspondences") {
  testing::Rng rng(35);
  for (int rep = 0; rep < 100; ++rep) {
    const int order = static_cast<int>(testing::pick(rng, 0, 2));
    auto x = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    auto y = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    const double d = exact_k_order_distance(x, y, order).first;
    for (int t = 0; t < 20; ++t) {
      auto c = testing::random_correspondence(rng, x.size(), y.size());
      CHECK(d <= correspondence_difference(x, y, c, order));
    }
  }
}

TEST_CASE("sandwich and symmetry") {
  testing::Rng rng(36);
  for (int rep = 0; rep < 60; ++rep) {
    const int order = static_cast<int>(testing::pick(rng, 0, 2));
    auto x = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    auto y = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 3), order);
    for (double p : {1.0, 2.0, kInfNorm}) {
      const double exact = exact_pnorm_distance(x, y, p);
      CHECK(exact == doctest::Approx(exact_pnorm_distance(y, x, p)));
      CHECK(upper_bound_distance(x, y, p) >= exact - 1e-12);
      std::vector<double> per_order;
      for (int k = 0; k <= order; ++k)
        per_order.push_back(exact_k_order_distance(x, y, k).first);
      CHECK(pnorm(per_order, p) <= exact + 1e-12);
    }
    CHECK(exact_pnorm_distance(x, y, kInfNorm) ==
          exact_k_order_distance(x, y, order).first);
  }
}

TEST_CASE("upper bound keeps the exact 0-order term") {
  testing::Rng rng(37);
  for (int rep = 0; rep < 30; ++rep) {
    auto x = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 6), 1);
    auto y = testing::random_strict_dissimilarity(rng, testing::pick(rng, 1, 6), 1);
    auto c = nearest_value_correspondence(x, y);
    CHECK(c.covers(x.size(), y.size()));
    CHECK(correspondence_difference(x, y, c, 0) == zero_order_distance(x, y));
  }
}

TEST_CASE("bound arguments") {
  auto x = fixture("square_chord_filled.json");
  CHECK(default_bound_dims(2) == std::vector<int>{0, 1});
  auto lb = pnorm_lower_bound(x, x, 1.0, {0, 0});
  CHECK(lb.entries.size() == 3);
  CHECK_THROWS_AS(pnorm_lower_bound(x, x, 1.0, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pnorm_lower_bound(x, x, 1.0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(pnorm_lower_bound(x, dual(x), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pnorm(std::vector<double>{1.0}, 0.5), std::invalid_argument);

  // enumeration cap
  HighOrderNetwork big(0, Mode::Dissimilarity, {"a", "b", "c", "d", "e"});
  CHECK_THROWS_AS(exact_k_order_distance(big, big, 0), std::length_error);
}

TEST_CASE("proximity pairs bound like their duals") {
  testing::Rng rng(38);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = testing::random_strict_dissimilarity(rng, 3, 2);
    auto y = testing::random_strict_dissimilarity(rng, 3, 2);
    auto a = pnorm_lower_bound(x, y, 2.0);
    auto b = pnorm_lower_bound(dual(x), dual(y), 2.0);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      CHECK(a.entries[i] == doctest::Approx(b.entries[i]).epsilon(1e-12));
    CHECK(exact_pnorm_distance(x, y, 2.0) ==
          doctest::Approx(exact_pnorm_distance(dual(x), dual(y), 2.0)));
  }
}
