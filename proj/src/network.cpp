#include "honlb/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace honlb {

std::string_view to_string(Mode mode) {
  return mode == Mode::Dissimilarity ? "dissimilarity" : "proximity";
}

Mode parse_mode(std::string_view text) {
  if (text == "dissimilarity") return Mode::Dissimilarity;
  if (text == "proximity") return Mode::Proximity;
  throw std::invalid_argument("unknown network mode '" + std::string(text) +
                              "'");
}

Tuple canonical(std::span<const NodeIndex> tuple) {
  Tuple out(tuple.begin(), tuple.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HighOrderNetwork::HighOrderNetwork(int order, Mode mode,
                                   std::vector<std::string> nodes,
                                   const std::vector<Entry>& weights)
    : order_(order), mode_(mode), nodes_(std::move(nodes)) {
  if (order_ < 0) throw std::invalid_argument("network order must be >= 0");
  if (nodes_.empty()) throw std::invalid_argument("network has no nodes");
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw std::invalid_argument("duplicate node identifier");

  for (const auto& entry : weights) {
    Tuple raw;
    raw.reserve(entry.tuple.size());
    for (const auto& id : entry.tuple) raw.push_back(require_index(id));
    Tuple key = canonical(raw);
    check_entry(key, entry.value);
    if (!weights_.emplace(std::move(key), entry.value).second)
      throw std::invalid_argument("tuple listed twice after canonicalization");
  }
}

HighOrderNetwork HighOrderNetwork::from_indices(int order, Mode mode,
                                                std::vector<std::string> nodes,
                                                WeightMap weights) {
  HighOrderNetwork net;
  net.order_ = order;
  net.mode_ = mode;
  net.nodes_ = std::move(nodes);
  if (order < 0) throw std::invalid_argument("network order must be >= 0");
  if (net.nodes_.empty()) throw std::invalid_argument("network has no nodes");
  for (std::size_t i = 1; i < net.nodes_.size(); ++i)
    if (!(net.nodes_[i - 1] < net.nodes_[i]))
      throw std::invalid_argument("node identifiers must be sorted and unique");
  for (const auto& [key, value] : weights) {
    if (canonical(key) != key)
      throw std::invalid_argument("tuple key is not canonical");
    net.check_entry(key, value);
  }
  net.weights_ = std::move(weights);
  return net;
}

void HighOrderNetwork::check_entry(const Tuple& key, double value) const {
  if (key.empty()) throw std::invalid_argument("empty tuple");
  if (key.size() > static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("tuple larger than network order allows");
  if (key.back() >= nodes_.size())
    throw std::invalid_argument("tuple references unknown node");
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("relationship value outside [0,1]");
}

std::optional<NodeIndex> HighOrderNetwork::index_of(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex HighOrderNetwork::require_index(std::string_view id) const {
  auto idx = index_of(id);
  if (!idx)
    throw std::invalid_argument("unknown node '" + std::string(id) + "'");
  return *idx;
}

double HighOrderNetwork::value(std::span<const NodeIndex> tuple) const {
  Tuple key = canonical(tuple);
  if (key.empty()) throw std::invalid_argument("empty tuple");
  if (key.size() > static_cast<std::size_t>(order_) + 1)
    throw std::out_of_range("tuple has more unique nodes than order + 1");
  auto it = weights_.find(key);
  return it == weights_.end() ? default_weight() : it->second;
}

double HighOrderNetwork::value_of(const std::vector<std::string>& ids) const {
  Tuple raw;
  for (const auto& id : ids) raw.push_back(require_index(id));
  return value(raw);
}

std::optional<double> HighOrderNetwork::explicit_value(const Tuple& key) const {
  auto it = weights_.find(key);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Correspondence Correspondence::from_pairs(
    std::vector<std::pair<NodeIndex, NodeIndex>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Correspondence{std::move(pairs)};
}

Correspondence Correspondence::from_ids(
    const HighOrderNetwork& x, const HighOrderNetwork& y,
    const std::vector<std::pair<std::string, std::string>>& ids) {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  pairs.reserve(ids.size());
  for (const auto& [a, b] : ids)
    pairs.emplace_back(x.require_index(a), y.require_index(b));
  return from_pairs(std::move(pairs));
}

Correspondence Correspondence::identity(std::size_t n) {
  Correspondence c;
  for (std::size_t i = 0; i < n; ++i)
    c.pairs.emplace_back(static_cast<NodeIndex>(i), static_cast<NodeIndex>(i));
  return c;
}

bool Correspondence::covers(std::size_t x_size, std::size_t y_size) const {
  std::vector<bool> seen_x(x_size, false), seen_y(y_size, false);
  for (const auto& [a, b] : pairs) {
    if (a >= x_size || b >= y_size) return false;
    seen_x[a] = true;
    seen_y[b] = true;
  }
  return std::all_of(seen_x.begin(), seen_x.end(), [](bool s) { return s; }) &&
         std::all_of(seen_y.begin(), seen_y.end(), [](bool s) { return s; });
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const HighOrderNetwork& net, bool strict) {
  std::vector<Violation> report;
  const bool increasing = net.mode() == Mode::Dissimilarity;
  for (const auto& [key, value] : net.weights()) {
    if (key.size() < 2) continue;
    Tuple facet(key.size() - 1);
    for (std::size_t skip = 0; skip < key.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < key.size(); ++i)
        if (i != skip) facet[w++] = key[i];
      const double fv = net.value(facet);
      const bool weak_ok = increasing ? value >= fv : value <= fv;
      const bool strict_ok = increasing ? value > fv : value < fv;
      if (!weak_ok || (strict && !strict_ok))
        report.push_back({key, facet, value, fv, weak_ok});
    }
  }
  return report;
}

std::string describe(const HighOrderNetwork& net, const Violation& v) {
  auto name = [&](const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += net.nodes()[t[i]];
    }
    return s + ")";
  };
  std::ostringstream os;
  os << name(v.tuple) << " = " << v.value
     << (net.mode() == Mode::Dissimilarity ? " below " : " above ")
     << (v.strict_only ? "or equal to " : "") << "facet " << name(v.facet)
     << " = " << v.facet_value;
  return os.str();
}

HighOrderNetwork dual(const HighOrderNetwork& net) {
  WeightMap flipped;
  for (const auto& [key, value] : net.weights())
    flipped.emplace_hint(flipped.end(), key, 1.0 - value);
  const Mode mode = net.mode() == Mode::Dissimilarity ? Mode::Proximity
                                                       : Mode::Dissimilarity;
  return HighOrderNetwork::from_indices(net.order(), mode, net.nodes(),
                                        std::move(flipped));
}

HighOrderNetwork truncate(const HighOrderNetwork& net, int k) {
  if (k < 0 || k > net.order())
    throw std::out_of_range("truncation order outside [0, order]");
  WeightMap kept;
  for (const auto& [key, value] : net.weights())
    if (key.size() <= static_cast<std::size_t>(k) + 1)
      kept.emplace_hint(kept.end(), key, value);
  return HighOrderNetwork::from_indices(k, net.mode(), net.nodes(),
                                        std::move(kept));
}

namespace {

// Lists tuples of augmented nodes (indices into `c.pairs`) of size
// 1..order+1 whose projection through `side` is listed in `net`.
template <typename Project>
WeightMap augmented_weights(const HighOrderNetwork& net,
                            const Correspondence& c, Project side) {
  WeightMap out;
  const std::size_t m = c.pairs.size();
  const std::size_t max_size =
      std::min<std::size_t>(m, static_cast<std::size_t>(net.order()) + 1);
  Tuple pick;
  Tuple projected;
  // Depth-first enumeration of increasing index sets.
  auto visit = [&](auto&& self, NodeIndex next) -> void {
    if (!pick.empty()) {
      projected.clear();
      for (NodeIndex a : pick) projected.push_back(side(c.pairs[a]));
      Tuple key = canonical(projected);
      if (auto v = net.explicit_value(key)) out.emplace(pick, *v);
    }
    if (pick.size() == max_size) return;
    for (NodeIndex a = next; a < m; ++a) {
      pick.push_back(a);
      self(self, a + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

}  // namespace

std::pair<HighOrderNetwork, HighOrderNetwork> augment(
    const HighOrderNetwork& x, const HighOrderNetwork& y,
    const Correspondence& c) {
  if (!c.covers(x.size(), y.size()))
    throw std::invalid_argument("correspondence does not cover both node sets");

  // Node names must sort in pair order so that index a of the augmented
  // networks is pair a of the correspondence.
  std::vector<std::string> names;
  names.reserve(c.pairs.size());
  const std::size_t width = std::to_string(c.pairs.size()).size();
  for (std::size_t a = 0; a < c.pairs.size(); ++a) {
    std::string idx = std::to_string(a);
    idx.insert(0, width - idx.size(), '0');
    names.push_back("a" + idx + ":" + x.nodes()[c.pairs[a].first] + "|" +
                    y.nodes()[c.pairs[a].second]);
  }

  auto ax = augmented_weights(x, c, [](const auto& p) { return p.first; });
  auto ay = augmented_weights(y, c, [](const auto& p) { return p.second; });
  return {HighOrderNetwork::from_indices(x.order(), x.mode(), names,
                                         std::move(ax)),
          HighOrderNetwork::from_indices(y.order(), y.mode(), names,
                                         std::move(ay))};
}

HighOrderNetwork normalize_counts(const CountTable& raw, std::uint64_t total) {
  if (total == 0) throw std::invalid_argument("total count must be positive");
  WeightMap weights;
  for (const auto& [key, count] : raw.counts) {
    if (count > total)
      throw std::invalid_argument("tuple count exceeds total count");
    weights.emplace_hint(weights.end(), key,
                         static_cast<double>(count) / static_cast<double>(total));
  }
  return HighOrderNetwork::from_indices(raw.order, Mode::Proximity, raw.nodes,
                                        std::move(weights));
}

HighOrderNetwork apply_epsilon(const HighOrderNetwork& net, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  for (const auto& v : validate(net, false))
    throw std::invalid_argument("epsilon pass needs a weakly valid network: " +
                                describe(net, v));

  const bool increasing = net.mode() == Mode::Dissimilarity;
  // Adjusted values are written in place; ShortLex order guarantees facets
  // are final before their cofaces are visited.
  WeightMap adjusted = net.weights();
  auto read = [&](const Tuple& key) {
    auto it = adjusted.find(key);
    return it == adjusted.end() ? net.default_weight() : it->second;
  };
  Tuple facet;
  for (auto& [key, value] : adjusted) {
    if (key.size() < 2) continue;
    double extreme = increasing ? 0.0 : 1.0;
    facet.resize(key.size() - 1);
    for (std::size_t skip = 0; skip < key.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < key.size(); ++i)
        if (i != skip) facet[w++] = key[i];
      const double fv = read(facet);
      extreme = increasing ? std::max(extreme, fv) : std::min(extreme, fv);
    }
    if (increasing && value <= extreme)
      value = std::min(1.0, extreme + epsilon);
    else if (!increasing && value >= extreme)
      value = std::max(0.0, extreme - epsilon);
  }
  return HighOrderNetwork::from_indices(net.order(), net.mode(), net.nodes(),
                                        std::move(adjusted));
}

}  // namespace honlb
