#include "honlb/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace honlb {

namespace {

double linf(const DiagramPoint& a, const DiagramPoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double half(const DiagramPoint& p) { return 0.5 * p.persistence(); }

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp on a bipartite graph stored as adjacency lists of the left
// side. Returns the matching as left -> right (kFree when unmatched).
class MaxMatching {
 public:
  MaxMatching(const std::vector<std::vector<std::size_t>>& adj,
              std::size_t right_count)
      : adj_(adj),
        match_left_(adj.size(), kFree),
        match_right_(right_count, kFree),
        dist_(adj.size()) {}

  std::size_t run() {
    std::size_t size = 0;
    // greedy start
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (std::size_t v : adj_[u])
        if (match_right_[v] == kFree) {
          match_left_[u] = v;
          match_right_[v] = u;
          ++size;
          break;
        }
    while (bfs())
      for (std::size_t u = 0; u < adj_.size(); ++u)
        if (match_left_[u] == kFree && dfs(u)) ++size;
    return size;
  }

  const std::vector<std::size_t>& left() const { return match_left_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kFree;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kFree) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      std::size_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kFree;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
};

// Points of one diagram indexed by birth for window scans.
struct SortedSide {
  explicit SortedSide(const std::vector<DiagramPoint>& pts) : pts(pts) {
    order.resize(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pts[a].birth < pts[b].birth;
    });
    births.reserve(pts.size());
    for (std::size_t i : order) births.push_back(pts[i].birth);
  }

  // Calls fn(j) for every point j with linf(p, pts[j]) <= t.
  template <typename Fn>
  void for_each_within(const DiagramPoint& p, double t, Fn&& fn) const {
    const double slack = 1e-12;
    auto it = std::lower_bound(births.begin(), births.end(),
                               p.birth - t - slack);
    for (std::size_t k = static_cast<std::size_t>(it - births.begin());
         k < births.size() && births[k] <= p.birth + t + slack; ++k) {
      const std::size_t j = order[k];
      if (linf(p, pts[j]) <= t) fn(j);
    }
  }

  const std::vector<DiagramPoint>& pts;
  std::vector<std::size_t> order;
  std::vector<double> births;
};

// Every point of `from` with half persistence above t matched to a point of
// `to` within t.
bool heavy_side_matchable(const std::vector<DiagramPoint>& from,
                          const SortedSide& to, double t) {
  std::vector<std::vector<std::size_t>> adj;
  for (const auto& p : from) {
    if (!(half(p) > t)) continue;
    adj.emplace_back();
    to.for_each_within(p, t, [&](std::size_t j) { adj.back().push_back(j); });
    if (adj.back().empty()) return false;
  }
  if (adj.size() > to.pts.size()) return false;
  return MaxMatching(adj, to.pts.size()).run() == adj.size();
}

// A perfect matching of the padded sets within t exists iff the real-to-real
// pairs within t admit a matching covering every heavy point on both sides.
// Matchings covering each side's heavy points separately combine into one
// covering both (Mendelsohn-Dulmage).
bool feasible(const std::vector<DiagramPoint>& x, const SortedSide& sx,
              const std::vector<DiagramPoint>& y, const SortedSide& sy,
              double t) {
  return heavy_side_matchable(x, sy, t) && heavy_side_matchable(y, sx, t);
}

std::vector<DiagramPoint> off_diagonal(const std::vector<DiagramPoint>& pts) {
  std::vector<DiagramPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    if (p.death > p.birth) out.push_back(p);
  return out;
}

// Value of pairing points by rank of persistence; any bijection bounds the
// optimum from above.
double rank_pairing_cost(std::vector<DiagramPoint> x,
                         std::vector<DiagramPoint> y) {
  auto by_pers = [](const DiagramPoint& a, const DiagramPoint& b) {
    return a.persistence() > b.persistence();
  };
  std::sort(x.begin(), x.end(), by_pers);
  std::sort(y.begin(), y.end(), by_pers);
  double worst = 0.0;
  for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
    if (i < x.size() && i < y.size())
      worst = std::max(worst, matching_cost(x[i], y[i]));
    else
      worst = std::max(worst, half(i < x.size() ? x[i] : y[i]));
  }
  return worst;
}

}  // namespace

double matching_cost(const DiagramPoint& q, const DiagramPoint& qt) {
  return std::min(linf(q, qt), std::max(half(q), half(qt)));
}

double bottleneck_distance(const std::vector<DiagramPoint>& x_in,
                           const std::vector<DiagramPoint>& y_in) {
  const auto x = off_diagonal(x_in);
  const auto y = off_diagonal(y_in);
  if (x.empty() && y.empty()) return 0.0;

  const SortedSide sx(x), sy(y);
  if (feasible(x, sx, y, sy, 0.0)) return 0.0;

  const double hi = rank_pairing_cost(x, y);
  std::vector<double> cand;
  for (const auto& p : x)
    if (half(p) <= hi) cand.push_back(half(p));
  for (const auto& p : y)
    if (half(p) <= hi) cand.push_back(half(p));
  for (const auto& p : x)
    sy.for_each_within(p, hi, [&](std::size_t j) {
      cand.push_back(linf(p, y[j]));
    });
  cand.push_back(hi);

  // Smallest feasible candidate; selection instead of a full sort.
  auto first = cand.begin(), last = cand.end();
  double best = hi;
  while (first != last) {
    auto mid = first + (last - first) / 2;
    std::nth_element(first, mid, last);
    if (feasible(x, sx, y, sy, *mid)) {
      best = *mid;
      last = mid;
    } else {
      first = mid + 1;
    }
  }
  return best;
}

double bottleneck_distance(const PersistenceDiagram& dx,
                           const PersistenceDiagram& dy) {
  if (dx.dim != dy.dim)
    throw std::invalid_argument("bottleneck between diagrams of different "
                                "dimensions");
  return bottleneck_distance(dx.points, dy.points);
}

Matching bottleneck_matching(const std::vector<DiagramPoint>& x,
                             const std::vector<DiagramPoint>& y) {
  const std::size_t mx = x.size(), my = y.size(), slots = mx + my;
  auto cost = [&](std::size_t i, std::size_t j) {
    if (i < mx && j < my) return matching_cost(x[i], y[j]);
    if (i < mx) return half(x[i]);
    if (j < my) return half(y[j]);
    return 0.0;
  };

  Matching result;
  if (slots == 0) return result;

  std::vector<double> values;
  values.reserve(slots * slots);
  for (std::size_t i = 0; i < slots; ++i)
    for (std::size_t j = 0; j < slots; ++j) values.push_back(cost(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::vector<std::size_t>> adj(slots);
  auto try_threshold = [&](double t) {
    for (std::size_t i = 0; i < slots; ++i) {
      adj[i].clear();
      for (std::size_t j = 0; j < slots; ++j)
        if (cost(i, j) <= t) adj[i].push_back(j);
    }
    MaxMatching mm(adj, slots);
    const bool perfect = mm.run() == slots;
    return std::make_pair(perfect, mm.left());
  };

  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (try_threshold(values[mid]).first)
      hi = mid;
    else
      lo = mid + 1;
  }
  const auto [ok, left] = try_threshold(values[lo]);
  if (!ok) throw std::logic_error("no perfect matching at the largest cost");
  for (std::size_t i = 0; i < slots; ++i) {
    const double c = cost(i, left[i]);
    result.pairs.push_back({i, left[i], c});
    result.value = std::max(result.value, c);
  }
  return result;
}

double bottleneck_bruteforce(const std::vector<DiagramPoint>& x,
                             const std::vector<DiagramPoint>& y) {
  if (x.size() > kBruteForceCap || y.size() > kBruteForceCap)
    throw std::length_error("brute-force bottleneck limited to " +
                            std::to_string(kBruteForceCap) +
                            " points per diagram");
  // Each x goes to a distinct y or to the diagonal; leftover y go to the
  // diagonal. Diagonal-to-diagonal pairs cost nothing.
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> used(y.size(), false);
  auto rec = [&](auto&& self, std::size_t i, double worst) -> void {
    if (i == x.size()) {
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!used[j]) worst = std::max(worst, half(y[j]));
      best = std::min(best, worst);
      return;
    }
    self(self, i + 1, std::max(worst, half(x[i])));
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      self(self, i + 1, std::max(worst, matching_cost(x[i], y[j])));
      used[j] = false;
    }
  };
  rec(rec, 0, 0.0);
  return best;
}

double bottleneck_bruteforce(const PersistenceDiagram& dx,
                             const PersistenceDiagram& dy) {
  if (dx.dim != dy.dim)
    throw std::invalid_argument("bottleneck between diagrams of different "
                                "dimensions");
  return bottleneck_bruteforce(dx.points, dy.points);
}

}  // namespace honlb
