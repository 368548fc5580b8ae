#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace honlb {

using NodeIndex = std::uint32_t;

// Sorted, duplicate-free list of node indices. Every relationship value is
// stored under the canonical form of its tuple.
using Tuple = std::vector<NodeIndex>;

// Shorter tuples first, then lexicographic. Nodes precede edges precede
// triangles, which is the order used for serialization.
struct ShortLex {
  bool operator()(const Tuple& a, const Tuple& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WeightMap = std::map<Tuple, double, ShortLex>;

enum class Mode { Dissimilarity, Proximity };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Sort and drop repeated indices.
Tuple canonical(std::span<const NodeIndex> tuple);

// A weighted high order network over a finite node set. Relationship values
// r^k live on canonical tuples of size 1..order+1; reads of permuted or
// repeated tuples resolve to the canonical key, so symmetry and identity hold
// by construction. Unlisted tuples carry default_weight().
//
// Node identifiers are kept in lexicographic order, so index order equals
// identifier order.
class HighOrderNetwork {
 public:
  struct Entry {
    std::vector<std::string> tuple;
    double value = 0.0;
  };

  HighOrderNetwork(int order, Mode mode, std::vector<std::string> nodes,
                   const std::vector<Entry>& weights = {});

  // `nodes` must already be strictly increasing; keys must be canonical.
  static HighOrderNetwork from_indices(int order, Mode mode,
                                       std::vector<std::string> nodes,
                                       WeightMap weights);

  int order() const { return order_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const WeightMap& weights() const { return weights_; }

  double default_weight() const {
    return mode_ == Mode::Dissimilarity ? 1.0 : 0.0;
  }

  std::optional<NodeIndex> index_of(std::string_view id) const;
  NodeIndex require_index(std::string_view id) const;

  // r^k of any tuple whose unique elements number at most order()+1.
  double value(std::span<const NodeIndex> tuple) const;
  double value(std::initializer_list<NodeIndex> tuple) const {
    return value(std::span<const NodeIndex>(tuple.begin(), tuple.size()));
  }
  // Value by identifiers; convenient in tests and tools.
  double value_of(const std::vector<std::string>& ids) const;

  std::optional<double> explicit_value(const Tuple& key) const;

  bool operator==(const HighOrderNetwork&) const = default;

 private:
  HighOrderNetwork() = default;
  void check_entry(const Tuple& key, double value) const;

  int order_ = 0;
  Mode mode_ = Mode::Dissimilarity;
  std::vector<std::string> nodes_;
  WeightMap weights_;
};

// A covering relation between the node sets of two networks.
struct Correspondence {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;  // sorted, unique

  static Correspondence from_pairs(
      std::vector<std::pair<NodeIndex, NodeIndex>> pairs);
  static Correspondence from_ids(
      const HighOrderNetwork& x, const HighOrderNetwork& y,
      const std::vector<std::pair<std::string, std::string>>& ids);
  static Correspondence identity(std::size_t n);

  bool covers(std::size_t x_size, std::size_t y_size) const;
  bool operator==(const Correspondence&) const = default;
};

struct Violation {
  Tuple tuple;
  Tuple facet;
  double value = 0.0;
  double facet_value = 0.0;
  bool strict_only = false;  // holds weakly, fails only the strict check
};

// Checks the order increasing (dissimilarity) or order decreasing
// (proximity) property on every listed tuple against each of its facets.
// Violations are reported, never thrown.
std::vector<Violation> validate(const HighOrderNetwork& net,
                                bool strict = false);

std::string describe(const HighOrderNetwork& net, const Violation& v);

// w -> 1 - w on every listed tuple; the mode and the implicit default flip.
HighOrderNetwork dual(const HighOrderNetwork& net);

// Keeps relationship functions of orders 0..k.
HighOrderNetwork truncate(const HighOrderNetwork& net, int k);

// Networks indexed by the pairs of `c`. Each output keeps the order of its
// source; a tuple of pairs takes the value of its projected tuple, and is
// listed whenever that projected tuple is listed.
std::pair<HighOrderNetwork, HighOrderNetwork> augment(
    const HighOrderNetwork& x, const HighOrderNetwork& y,
    const Correspondence& c);

// Raw co-occurrence counts over canonical tuples.
struct CountTable {
  int order = 0;
  std::vector<std::string> nodes;  // strictly increasing
  std::map<Tuple, std::uint64_t, ShortLex> counts;
};

// Proximity network with every count divided by `total`.
HighOrderNetwork normalize_counts(const CountTable& raw, std::uint64_t total);

inline constexpr double kDefaultEpsilon = 1.0 / 1000.0;

// Turns weak ties with facets into strict inequalities: a dissimilarity that
// does not exceed its largest facet becomes that facet plus epsilon, a
// proximity that does not fall below its smallest facet becomes that facet
// minus epsilon. Tuples are visited shortest first so adjustments cascade.
// Requires a weakly valid network.
HighOrderNetwork apply_epsilon(const HighOrderNetwork& net,
                               double epsilon = kDefaultEpsilon);

}  // namespace honlb
