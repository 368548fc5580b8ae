#pragma once

#include <cstdint>
#include <string_view>

#include "honlb/network.hpp"

namespace honlb {

enum class Model { ErdosRenyi, GaussianKernel, Correlation };

std::string_view to_string(Model model);
Model parse_model(std::string_view text);  // er | gauss | corr

// Where the Gaussian kernel model samples its points: the unit square, or the
// disk of radius 1 about the origin.
enum class Domain { Square, Disk };

std::string_view to_string(Domain domain);
Domain parse_domain(std::string_view text);  // square | disk

struct GenConfig {
  Model model = Model::ErdosRenyi;
  std::size_t n = 30;
  std::uint64_t seed = 0;
  double sigma = 0.5;
  Domain domain = Domain::Square;
  std::size_t feature_dim = 30;
  double tau = 0.2;

  void check() const;
};

// Pairwise proximities of order 1; only edges above tau are listed. Node
// values are left unlisted, see lift_pairwise.
//
// Every random draw comes from its own engine seeded by (seed, purpose, i, j),
// so values never depend on generation order.
HighOrderNetwork generate(const GenConfig& cfg);

// Sets every node proximity to 1, so nodes enter the dual filtration at 0.
HighOrderNetwork lift_pairwise(const HighOrderNetwork& net);

}  // namespace honlb
