#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "honlb/network.hpp"

namespace honlb {

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

// p-norm of a nonnegative vector; p = kInfNorm gives the maximum.
double pnorm(const std::vector<double>& v, double p);

// Largest |r_X^k - r_Y^k| over all (k+1)-tuples of pairs of `c`, repeats
// allowed.
double correspondence_difference(const HighOrderNetwork& nx,
                                 const HighOrderNetwork& ny,
                                 const Correspondence& c, int k);

// Differences for orders 0..min(order) under one correspondence.
std::vector<double> correspondence_differences(const HighOrderNetwork& nx,
                                               const HighOrderNetwork& ny,
                                               const Correspondence& c);

inline constexpr std::size_t kEnumerationCap = 20;  // |X| * |Y|

// Exact distances by enumerating correspondences; |X| * |Y| <= 20.
std::pair<double, Correspondence> exact_k_order_distance(
    const HighOrderNetwork& nx, const HighOrderNetwork& ny, int k);
double exact_pnorm_distance(const HighOrderNetwork& nx,
                            const HighOrderNetwork& ny, double p);

// Two-sided best match of the node values.
double zero_order_distance(const HighOrderNetwork& nx,
                           const HighOrderNetwork& ny);

// Each node paired with the node of closest value on the other side.
Correspondence nearest_value_correspondence(const HighOrderNetwork& nx,
                                            const HighOrderNetwork& ny);

// p-norm difference under nearest_value_correspondence.
double upper_bound_distance(const HighOrderNetwork& nx,
                            const HighOrderNetwork& ny, double p);

struct BoundVector {
  std::vector<double> entries;  // entries[0] exact 0-order, then one per order
  std::vector<int> dims;        // dims[l-1]: diagram dimension used for order l
  double p = kInfNorm;
  double combined = 0.0;
};

// Default diagram dimension per order l = 1..K is l - 1.
std::vector<int> default_bound_dims(int order);

BoundVector pnorm_lower_bound(const HighOrderNetwork& nx,
                              const HighOrderNetwork& ny, double p,
                              const std::vector<int>& dims);
BoundVector pnorm_lower_bound(const HighOrderNetwork& nx,
                              const HighOrderNetwork& ny, double p);

}  // namespace honlb
