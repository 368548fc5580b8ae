#include "honlb/exact_distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "honlb/bottleneck.hpp"
#include "honlb/persistence.hpp"

namespace honlb {

namespace {

void require_same_mode(const HighOrderNetwork& nx, const HighOrderNetwork& ny) {
  if (nx.mode() != ny.mode())
    throw std::invalid_argument(
        "networks must share a mode; dualize one of them first");
}

int common_order(const HighOrderNetwork& nx, const HighOrderNetwork& ny) {
  return std::min(nx.order(), ny.order());
}

// gamma[k] for k = 0..top. A (k+1)-tuple of pairs with repeats reads the same
// values as the set of its distinct pairs, so distinct subsets of at most k+1
// pairs are enough.
std::vector<double> differences_up_to(const HighOrderNetwork& nx,
                                      const HighOrderNetwork& ny,
                                      const Correspondence& c, int top) {
  std::vector<double> by_size(static_cast<std::size_t>(top) + 2, 0.0);
  const std::size_t m = c.pairs.size();
  const std::size_t max_size = std::min<std::size_t>(m, top + 1);
  std::vector<std::size_t> pick;
  Tuple tx, ty;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (!pick.empty()) {
      tx.clear();
      ty.clear();
      for (std::size_t a : pick) {
        tx.push_back(c.pairs[a].first);
        ty.push_back(c.pairs[a].second);
      }
      double& slot = by_size[pick.size()];
      slot = std::max(slot, std::abs(nx.value(tx) - ny.value(ty)));
    }
    if (pick.size() == max_size) return;
    for (std::size_t a = next; a < m; ++a) {
      pick.push_back(a);
      self(self, a + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<double> gamma(static_cast<std::size_t>(top) + 1);
  double running = 0.0;
  for (int k = 0; k <= top; ++k) {
    running = std::max(running, by_size[k + 1]);
    gamma[k] = running;
  }
  return gamma;
}

void check_correspondence(const HighOrderNetwork& nx,
                          const HighOrderNetwork& ny,
                          const Correspondence& c) {
  if (!c.covers(nx.size(), ny.size()))
    throw std::invalid_argument("correspondence does not cover both node sets");
}

// Calls fn(c) for every minimal covering correspondence. The differences only
// grow when pairs are added, so minimal covers attain every minimum.
template <typename Fn>
void for_each_minimal_cover(std::size_t nx, std::size_t ny, Fn&& fn) {
  const std::size_t bits = nx * ny;
  if (bits > kEnumerationCap)
    throw std::length_error("exact distance limited to |X|*|Y| <= " +
                            std::to_string(kEnumerationCap));
  std::vector<int> deg_x(nx), deg_y(ny);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << bits); ++mask) {
    std::fill(deg_x.begin(), deg_x.end(), 0);
    std::fill(deg_y.begin(), deg_y.end(), 0);
    for (std::size_t b = 0; b < bits; ++b)
      if (mask >> b & 1u) {
        ++deg_x[b / ny];
        ++deg_y[b % ny];
      }
    if (std::count(deg_x.begin(), deg_x.end(), 0) ||
        std::count(deg_y.begin(), deg_y.end(), 0))
      continue;
    bool minimal = true;
    for (std::size_t b = 0; b < bits && minimal; ++b)
      if ((mask >> b & 1u) && deg_x[b / ny] > 1 && deg_y[b % ny] > 1)
        minimal = false;
    if (!minimal) continue;
    Correspondence c;
    for (std::size_t b = 0; b < bits; ++b)
      if (mask >> b & 1u)
        c.pairs.emplace_back(static_cast<NodeIndex>(b / ny),
                             static_cast<NodeIndex>(b % ny));
    fn(c);
  }
}

}  // namespace

double pnorm(const std::vector<double>& v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

double correspondence_difference(const HighOrderNetwork& nx,
                                 const HighOrderNetwork& ny,
                                 const Correspondence& c, int k) {
  require_same_mode(nx, ny);
  check_correspondence(nx, ny, c);
  if (k < 0 || k > common_order(nx, ny))
    throw std::out_of_range("order k outside [0, min order]");
  return differences_up_to(nx, ny, c, k).back();
}

std::vector<double> correspondence_differences(const HighOrderNetwork& nx,
                                               const HighOrderNetwork& ny,
                                               const Correspondence& c) {
  require_same_mode(nx, ny);
  check_correspondence(nx, ny, c);
  return differences_up_to(nx, ny, c, common_order(nx, ny));
}

std::pair<double, Correspondence> exact_k_order_distance(
    const HighOrderNetwork& nx, const HighOrderNetwork& ny, int k) {
  require_same_mode(nx, ny);
  if (k < 0 || k > common_order(nx, ny))
    throw std::out_of_range("order k outside [0, min order]");
  double best = kInfNorm;
  Correspondence witness;
  for_each_minimal_cover(nx.size(), ny.size(), [&](const Correspondence& c) {
    const double g = differences_up_to(nx, ny, c, k).back();
    if (g < best) {
      best = g;
      witness = c;
    }
  });
  return {best, witness};
}

double exact_pnorm_distance(const HighOrderNetwork& nx,
                            const HighOrderNetwork& ny, double p) {
  require_same_mode(nx, ny);
  const int top = common_order(nx, ny);
  double best = kInfNorm;
  for_each_minimal_cover(nx.size(), ny.size(), [&](const Correspondence& c) {
    best = std::min(best, pnorm(differences_up_to(nx, ny, c, top), p));
  });
  return best;
}

namespace {

std::vector<std::pair<double, NodeIndex>> sorted_node_values(
    const HighOrderNetwork& net) {
  std::vector<std::pair<double, NodeIndex>> v;
  v.reserve(net.size());
  for (NodeIndex i = 0; i < net.size(); ++i) v.emplace_back(net.value({i}), i);
  std::sort(v.begin(), v.end());
  return v;
}

// Entry of `sorted` closest in value to `target`; lower value on ties.
std::pair<double, NodeIndex> nearest(
    const std::vector<std::pair<double, NodeIndex>>& sorted, double target) {
  auto it = std::lower_bound(
      sorted.begin(), sorted.end(), target,
      [](const auto& e, double t) { return e.first < t; });
  if (it == sorted.end()) return sorted.back();
  if (it == sorted.begin()) return *it;
  auto prev = std::prev(it);
  return target - prev->first <= it->first - target ? *prev : *it;
}

}  // namespace

double zero_order_distance(const HighOrderNetwork& nx,
                           const HighOrderNetwork& ny) {
  require_same_mode(nx, ny);
  const auto vx = sorted_node_values(nx);
  const auto vy = sorted_node_values(ny);
  double d = 0.0;
  for (const auto& [v, i] : vx) d = std::max(d, std::abs(v - nearest(vy, v).first));
  for (const auto& [v, i] : vy) d = std::max(d, std::abs(v - nearest(vx, v).first));
  return d;
}

Correspondence nearest_value_correspondence(const HighOrderNetwork& nx,
                                            const HighOrderNetwork& ny) {
  const auto vx = sorted_node_values(nx);
  const auto vy = sorted_node_values(ny);
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (const auto& [v, i] : vx) pairs.emplace_back(i, nearest(vy, v).second);
  for (const auto& [v, j] : vy) pairs.emplace_back(nearest(vx, v).second, j);
  return Correspondence::from_pairs(std::move(pairs));
}

double upper_bound_distance(const HighOrderNetwork& nx,
                            const HighOrderNetwork& ny, double p) {
  return pnorm(
      correspondence_differences(nx, ny, nearest_value_correspondence(nx, ny)),
      p);
}

std::vector<int> default_bound_dims(int order) {
  std::vector<int> dims;
  for (int l = 1; l <= order; ++l) dims.push_back(l - 1);
  return dims;
}

BoundVector pnorm_lower_bound(const HighOrderNetwork& nx,
                              const HighOrderNetwork& ny, double p,
                              const std::vector<int>& dims) {
  require_same_mode(nx, ny);
  const int order = common_order(nx, ny);
  if (dims.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("expected one diagram dimension per order 1.." +
                                std::to_string(order));
  int top = 0;
  for (std::size_t l = 1; l <= dims.size(); ++l) {
    if (dims[l - 1] < 0 || dims[l - 1] >= static_cast<int>(l))
      throw std::invalid_argument("diagram dimension for order " +
                                  std::to_string(l) + " must lie in [0, " +
                                  std::to_string(l - 1) + "]");
    top = std::max(top, dims[l - 1]);
  }

  BoundVector out;
  out.dims = dims;
  out.p = p;
  out.entries.push_back(zero_order_distance(nx, ny));
  if (!dims.empty()) {
    const auto dx = diagrams_of(nx, top);
    const auto dy = diagrams_of(ny, top);
    for (int k : dims) out.entries.push_back(bottleneck_distance(dx[k], dy[k]));
  }
  out.combined = pnorm(out.entries, p);
  return out;
}

BoundVector pnorm_lower_bound(const HighOrderNetwork& nx,
                              const HighOrderNetwork& ny, double p) {
  return pnorm_lower_bound(nx, ny, p,
                           default_bound_dims(common_order(nx, ny)));
}

}  // namespace honlb
