#pragma once

#include <cstddef>
#include <vector>

#include "honlb/persistence.hpp"

namespace honlb {

// min(||q - qt||_inf, max(pers q, pers qt) / 2)
double matching_cost(const DiagramPoint& q, const DiagramPoint& qt);

// Bottleneck distance with diagonal padding. Threshold search over the
// candidate costs; each threshold is decided with two maximum matchings on
// the sparse graph of real-to-real pairs.
double bottleneck_distance(const PersistenceDiagram& dx,
                           const PersistenceDiagram& dy);
double bottleneck_distance(const std::vector<DiagramPoint>& x,
                           const std::vector<DiagramPoint>& y);

// Both sides padded to m_x + m_y slots. Slot i < m_x on the left is point
// x[i], slot j < m_y on the right is point y[j]; higher slots are diagonal.
struct Matching {
  struct Pair {
    std::size_t left = 0;
    std::size_t right = 0;
    double cost = 0.0;
  };
  std::vector<Pair> pairs;  // sorted by left slot
  double value = 0.0;
};

// Optimal bijection of the padded sets, found on the full padded graph.
Matching bottleneck_matching(const std::vector<DiagramPoint>& x,
                             const std::vector<DiagramPoint>& y);

inline constexpr std::size_t kBruteForceCap = 7;

// Exhaustive search over all assignments; at most kBruteForceCap points per
// side.
double bottleneck_bruteforce(const std::vector<DiagramPoint>& x,
                             const std::vector<DiagramPoint>& y);
double bottleneck_bruteforce(const PersistenceDiagram& dx,
                             const PersistenceDiagram& dy);

}  // namespace honlb
