#include "honlb/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace honlb {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::ErdosRenyi: return "er";
    case Model::GaussianKernel: return "gauss";
    case Model::Correlation: return "corr";
  }
  return "?";
}

Model parse_model(std::string_view text) {
  if (text == "er") return Model::ErdosRenyi;
  if (text == "gauss") return Model::GaussianKernel;
  if (text == "corr") return Model::Correlation;
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected er, gauss or corr)");
}

std::string_view to_string(Domain domain) {
  return domain == Domain::Square ? "square" : "disk";
}

Domain parse_domain(std::string_view text) {
  if (text == "square") return Domain::Square;
  if (text == "disk") return Domain::Disk;
  throw std::invalid_argument("unknown domain '" + std::string(text) +
                              "' (expected square or disk)");
}

void GenConfig::check() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (feature_dim < 1) throw std::invalid_argument("feature_dim must be >= 1");
  if (!(tau >= 0.0 && tau < 1.0))
    throw std::invalid_argument("tau must lie in [0, 1)");
}

namespace {

enum Stream : std::uint32_t { kEdge = 1, kPoint = 2, kFeature = 3 };

class Draws {
 public:
  Draws(std::uint64_t seed, Stream purpose, std::uint32_t i, std::uint32_t j) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(purpose), i, j};
    engine_.seed(seq);
  }

  // [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  double normal() {
    if (spare_) {
      spare_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
  bool spare_ = false;
  double cached_ = 0.0;
};

std::vector<std::string> node_names(std::size_t n) {
  const std::size_t width = std::to_string(n - 1).size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    names.push_back("n" + std::string(width - s.size(), '0') + s);
  }
  return names;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t d = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    ma += a[t];
    mb += b[t];
  }
  ma /= static_cast<double>(d);
  mb /= static_cast<double>(d);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    sab += (a[t] - ma) * (b[t] - mb);
    saa += (a[t] - ma) * (a[t] - ma);
    sbb += (b[t] - mb) * (b[t] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace

HighOrderNetwork generate(const GenConfig& cfg) {
  cfg.check();
  const std::size_t n = cfg.n;
  const auto idx = [](std::size_t i) { return static_cast<std::uint32_t>(i); };

  std::vector<std::array<double, 2>> points;
  std::vector<std::vector<double>> features;
  if (cfg.model == Model::GaussianKernel) {
    for (std::size_t i = 0; i < n; ++i) {
      Draws r(cfg.seed, kPoint, idx(i), 0);
      const double u = r.uniform();
      const double v = r.uniform();
      if (cfg.domain == Domain::Square) {
        points.push_back({u, v});
      } else {
        const double rad = std::sqrt(u);
        const double angle = 2.0 * std::numbers::pi * v;
        points.push_back({rad * std::cos(angle), rad * std::sin(angle)});
      }
    }
  } else if (cfg.model == Model::Correlation) {
    for (std::size_t i = 0; i < n; ++i) {
      Draws r(cfg.seed, kFeature, idx(i), 0);
      std::vector<double> u(cfg.feature_dim);
      for (double& v : u) v = r.normal();
      features.push_back(std::move(u));
    }
  }

  WeightMap weights;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double w = 0.0;
      switch (cfg.model) {
        case Model::ErdosRenyi:
          w = Draws(cfg.seed, kEdge, idx(i), idx(j)).uniform();
          break;
        case Model::GaussianKernel: {
          const double dx = points[i][0] - points[j][0];
          const double dy = points[i][1] - points[j][1];
          w = std::exp(-(dx * dx + dy * dy) / (2.0 * cfg.sigma * cfg.sigma));
          break;
        }
        case Model::Correlation:
          w = std::clamp(pearson(features[i], features[j]) / 2.0 + 0.5, 0.0,
                         1.0);
          break;
      }
      if (w > cfg.tau) weights.emplace(Tuple{idx(i), idx(j)}, w);
    }
  }
  return HighOrderNetwork::from_indices(1, Mode::Proximity, node_names(n),
                                        std::move(weights));
}

HighOrderNetwork lift_pairwise(const HighOrderNetwork& net) {
  if (net.mode() != Mode::Proximity)
    throw std::invalid_argument("lift_pairwise expects a proximity network");
  if (net.order() != 1)
    throw std::invalid_argument("lift_pairwise expects an order 1 network");
  WeightMap weights = net.weights();
  for (NodeIndex i = 0; i < net.size(); ++i) weights[Tuple{i}] = 1.0;
  return HighOrderNetwork::from_indices(1, Mode::Proximity, net.nodes(),
                                        std::move(weights));
}

}  // namespace honlb
