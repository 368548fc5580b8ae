#include "honlb/matrix.hpp"

#include <omp.h>

#include <stdexcept>

#include "honlb/bottleneck.hpp"

namespace honlb {

namespace {

DistanceMatrix empty_matrix(const std::vector<std::string>& labels,
                            const std::vector<PersistenceDiagram>& diagrams) {
  if (labels.size() != diagrams.size())
    throw std::invalid_argument("one label per diagram required");
  DistanceMatrix m;
  m.labels = labels;
  const auto n = static_cast<Eigen::Index>(labels.size());
  m.values = Eigen::MatrixXd::Zero(n, n);
  return m;
}

}  // namespace

DistanceMatrix bottleneck_matrix_serial(
    const std::vector<std::string>& labels,
    const std::vector<PersistenceDiagram>& diagrams) {
  auto m = empty_matrix(labels, diagrams);
  const auto n = static_cast<Eigen::Index>(labels.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = bottleneck_distance(diagrams[i], diagrams[j]);
      m.values(i, j) = d;
      m.values(j, i) = d;
    }
  return m;
}

DistanceMatrix bottleneck_matrix(const std::vector<std::string>& labels,
                                 const std::vector<PersistenceDiagram>& diagrams,
                                 int workers) {
  auto m = empty_matrix(labels, diagrams);
  const auto n = static_cast<long>(labels.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  // each (i, j) cell is written by exactly one iteration
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      const double d = bottleneck_distance(diagrams[i], diagrams[j]);
      m.values(i, j) = d;
      m.values(j, i) = d;
    }
  return m;
}

}  // namespace honlb
