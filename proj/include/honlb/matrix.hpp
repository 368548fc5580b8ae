#pragma once

#include <string>
#include <vector>

#include "honlb/embed.hpp"
#include "honlb/persistence.hpp"

namespace honlb {

// Bottleneck distances between every pair of diagrams.
DistanceMatrix bottleneck_matrix_serial(
    const std::vector<std::string>& labels,
    const std::vector<PersistenceDiagram>& diagrams);

// Same values as the serial version; rows are shared among `workers` OpenMP
// threads (0 means the OpenMP default).
DistanceMatrix bottleneck_matrix(const std::vector<std::string>& labels,
                                 const std::vector<PersistenceDiagram>& diagrams,
                                 int workers = 0);

}  // namespace honlb
