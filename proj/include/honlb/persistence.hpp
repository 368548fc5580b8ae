#pragma once

#include <iosfwd>
#include <vector>

#include "honlb/filtration.hpp"
#include "honlb/network.hpp"

namespace honlb {

struct DiagramPoint {
  double birth = 0.0;
  double death = 1.0;

  double persistence() const { return death - birth; }
  auto operator<=>(const DiagramPoint&) const = default;
};

struct PersistenceDiagram {
  int dim = 0;
  std::vector<DiagramPoint> points;  // multiset, kept sorted
};

// Z/2 persistence of dimensions 0..max_hom_dim. Features still alive at the
// end die at 1; pairs with birth == death are dropped.
std::vector<PersistenceDiagram> compute_persistence(const Filtration& f,
                                                    int max_hom_dim);

// Keeps points with persistence strictly above `min_persistence`.
PersistenceDiagram prune(const PersistenceDiagram& d, double min_persistence);

// Diagrams of dims 0..max_hom_dim of a network in either mode; proximity
// networks are dualized first.
std::vector<PersistenceDiagram> diagrams_of(const HighOrderNetwork& net,
                                            int max_hom_dim);

// `dim,birth,death` with a header row.
void write_diagrams_csv(std::ostream& os,
                        const std::vector<PersistenceDiagram>& diagrams);

}  // namespace honlb
