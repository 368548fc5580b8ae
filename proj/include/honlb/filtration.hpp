#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "honlb/network.hpp"

namespace honlb {

struct Simplex {
  Tuple vertices;  // strictly increasing

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Simplex&) const = default;
};

struct FiltrationEntry {
  Simplex simplex;
  double birth = 0.0;
};

// Entries ordered by (birth, dim, vertices): faces always precede cofaces.
struct Filtration {
  std::vector<FiltrationEntry> entries;
  std::size_t node_count = 0;

  int max_dim() const;
};

// One entry per listed tuple of size <= min(max_dim, order) + 1, born at its
// dissimilarity. Unlisted tuples sit at 1 and are left out, together with
// listed tuples that have an unlisted face (those are born at 1 as well).
Filtration build_filtration(const HighOrderNetwork& net, int max_dim);
inline Filtration build_filtration(const HighOrderNetwork& net) {
  return build_filtration(net, net.order());
}

// Faces [v_0..^v_l..v_k] with sign (-1)^l.
std::vector<std::pair<Simplex, int>> boundary(const Simplex& s);

// `dim,birth,v1;v2;...` with a header row. Vertices print as node
// identifiers when `names` is given, indices otherwise.
void write_filtration_csv(std::ostream& os, const Filtration& f,
                          const std::vector<std::string>& names = {});

}  // namespace honlb
