#include "honlb/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>

#include "honlb/format.hpp"

namespace honlb {

namespace {

using Column = std::vector<std::uint32_t>;  // sorted row indices

// c += other over Z/2
void add_into(Column& c, const Column& other, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(c.begin(), c.end(), other.begin(),
                                other.end(), std::back_inserter(scratch));
  c.swap(scratch);
}

constexpr std::uint32_t kNone = UINT32_MAX;

}  // namespace

std::vector<PersistenceDiagram> compute_persistence(const Filtration& f,
                                                    int max_hom_dim) {
  if (max_hom_dim < 0) throw std::invalid_argument("max_hom_dim must be >= 0");
  const std::size_t n = f.entries.size();

  std::map<Tuple, std::uint32_t, ShortLex> position;
  for (std::size_t i = 0; i < n; ++i)
    position.emplace(f.entries[i].simplex.vertices,
                     static_cast<std::uint32_t>(i));

  const int top = std::min(max_hom_dim + 1, f.max_dim());
  std::vector<Column> columns(n);
  std::vector<std::uint32_t> pivot_owner(n, kNone);  // row -> column
  std::vector<bool> cleared(n, false);
  Column scratch;
  Tuple face;

  // Highest dimension first so pivots clear the columns they kill.
  for (int d = top; d >= 1; --d) {
    for (std::size_t j = 0; j < n; ++j) {
      const Tuple& v = f.entries[j].simplex.vertices;
      if (static_cast<int>(v.size()) - 1 != d || cleared[j]) continue;
      Column& col = columns[j];
      face.resize(v.size() - 1);
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (i != skip) face[w++] = v[i];
        col.push_back(position.at(face));
      }
      std::sort(col.begin(), col.end());
      while (!col.empty() && pivot_owner[col.back()] != kNone)
        add_into(col, columns[pivot_owner[col.back()]], scratch);
      if (!col.empty()) {
        pivot_owner[col.back()] = static_cast<std::uint32_t>(j);
        cleared[col.back()] = true;
      }
    }
  }

  std::vector<PersistenceDiagram> out(max_hom_dim + 1);
  for (int k = 0; k <= max_hom_dim; ++k) out[k].dim = k;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = f.entries[i].simplex.dim();
    if (d > max_hom_dim) continue;
    // Nonempty reduced column: the simplex kills a class rather than births
    // one. Otherwise it births a class that dies at its pivot owner, if any.
    if (!columns[i].empty()) continue;
    const double birth = f.entries[i].birth;
    const double death = pivot_owner[i] == kNone
                             ? 1.0
                             : f.entries[pivot_owner[i]].birth;
    if (death > birth) out[d].points.push_back({birth, death});
  }
  for (auto& dgm : out) std::sort(dgm.points.begin(), dgm.points.end());
  return out;
}

PersistenceDiagram prune(const PersistenceDiagram& d, double min_persistence) {
  if (!(min_persistence >= 0.0))
    throw std::invalid_argument("prune threshold must be >= 0");
  PersistenceDiagram out{d.dim, {}};
  for (const auto& p : d.points)
    if (p.persistence() > min_persistence) out.points.push_back(p);
  return out;
}

std::vector<PersistenceDiagram> diagrams_of(const HighOrderNetwork& net,
                                            int max_hom_dim) {
  if (net.mode() == Mode::Proximity)
    return diagrams_of(dual(net), max_hom_dim);
  return compute_persistence(build_filtration(net, max_hom_dim + 1),
                             max_hom_dim);
}

void write_diagrams_csv(std::ostream& os,
                        const std::vector<PersistenceDiagram>& diagrams) {
  os << "dim,birth,death\n";
  for (const auto& dgm : diagrams)
    for (const auto& p : dgm.points)
      os << dgm.dim << ',' << format_real(p.birth) << ','
         << format_real(p.death) << '\n';
}

}  // namespace honlb
