#include "honlb/filtration.hpp"

#include <algorithm>
#include <set>
#include <ostream>
#include <stdexcept>

#include "honlb/format.hpp"

namespace honlb {

int Filtration::max_dim() const {
  int d = -1;
  for (const auto& e : entries) d = std::max(d, e.simplex.dim());
  return d;
}

Filtration build_filtration(const HighOrderNetwork& net, int max_dim) {
  if (net.mode() != Mode::Dissimilarity)
    throw std::invalid_argument(
        "filtrations are built from dissimilarity networks; dualize first");
  if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
  if (auto bad = validate(net, false); !bad.empty())
    throw std::invalid_argument("network fails validation: " +
                                describe(net, bad.front()));

  const std::size_t cap =
      static_cast<std::size_t>(std::min(max_dim, net.order())) + 1;
  Filtration f;
  f.node_count = net.size();
  // A listed tuple with an unlisted face is dropped. Keys arrive shortest
  // first, so a face is decided before any of its cofaces.
  std::set<Tuple, ShortLex> present;
  Tuple face;
  for (const auto& [key, value] : net.weights()) {
    if (key.size() > cap) break;
    bool ok = true;
    if (key.size() > 1) {
      face.resize(key.size() - 1);
      for (std::size_t skip = 0; skip < key.size() && ok; ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < key.size(); ++i)
          if (i != skip) face[w++] = key[i];
        ok = present.count(face) > 0;
      }
    }
    if (!ok) continue;
    present.insert(present.end(), key);
    f.entries.push_back({Simplex{key}, value});
  }

  std::sort(f.entries.begin(), f.entries.end(),
            [](const FiltrationEntry& a, const FiltrationEntry& b) {
              if (a.birth != b.birth) return a.birth < b.birth;
              if (a.simplex.vertices.size() != b.simplex.vertices.size())
                return a.simplex.vertices.size() < b.simplex.vertices.size();
              return a.simplex.vertices < b.simplex.vertices;
            });
  return f;
}

std::vector<std::pair<Simplex, int>> boundary(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.vertices.size() < 2) return out;
  for (std::size_t l = 0; l < s.vertices.size(); ++l) {
    Simplex face;
    face.vertices.reserve(s.vertices.size() - 1);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
      if (i != l) face.vertices.push_back(s.vertices[i]);
    out.emplace_back(std::move(face), l % 2 == 0 ? 1 : -1);
  }
  return out;
}

void write_filtration_csv(std::ostream& os, const Filtration& f,
                          const std::vector<std::string>& names) {
  os << "dim,birth,vertices\n";
  for (const auto& e : f.entries) {
    os << e.simplex.dim() << ',' << format_real(e.birth) << ',';
    for (std::size_t i = 0; i < e.simplex.vertices.size(); ++i)
    {
      os << (i ? ";" : "");
      if (names.empty())
        os << e.simplex.vertices[i];
      else
        os << names.at(e.simplex.vertices[i]);
    }
    os << '\n';
  }
}

}  // namespace honlb
