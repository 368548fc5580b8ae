#pragma once

#include <array>
#include <string>
#include <vector>

#include "honlb/network.hpp"
#include "honlb/persistence.hpp"

namespace honlb::testing {

// Connected components by union-find with the elder rule; components alive
// at the end die at 1. Sorted, zero-persistence points dropped.
std::vector<DiagramPoint> union_find_zero_dim(const HighOrderNetwork& dissim);

// Gamma^k straight from the definition: every ordered (k+1)-tuple of pairs.
double gamma_by_tuples(const HighOrderNetwork& nx, const HighOrderNetwork& ny,
                       const Correspondence& c, int k);

// Minimum over all covering subsets of X x Y, no pruning.
double exact_k_order_unpruned(const HighOrderNetwork& nx,
                              const HighOrderNetwork& ny, int k);

// Fewest errors of a straight-line split, by sweeping the normal direction
// through one angle in every arc between critical directions and trying
// every threshold.
std::size_t linear_errors_by_sweep(
    const std::vector<std::array<double, 2>>& coords,
    const std::vector<std::string>& classes);

// Multisets of points compared with a tolerance after sorting.
bool same_points(std::vector<DiagramPoint> a, std::vector<DiagramPoint> b,
                 double tol);

}  // namespace honlb::testing
