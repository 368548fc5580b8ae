#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace honlb {

struct DistanceMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;

  // Throws unless square, labelled, symmetric to 1e-12, zero on the
  // diagonal and nonnegative.
  void check() const;
};

struct Embedding2D {
  std::vector<std::string> labels;
  std::vector<std::string> classes;  // empty, or one per label
  std::vector<std::array<double, 2>> coords;
};

// Classical MDS onto the two leading eigenpairs of the double-centred
// squared distances. Each eigenvector's first nonzero entry is made
// positive; negative eigenvalues give a zero coordinate.
Embedding2D mds_embed(const DistanceMatrix& m);

// Fewest misclassified points over all lines, for exactly two classes (a
// single class gives 0). Points on a candidate line may fall to either side
// as a slight tilt or shift of the line allows.
std::size_t linear_boundary_errors(
    const std::vector<std::array<double, 2>>& coords,
    const std::vector<std::string>& classes);
std::size_t linear_boundary_errors(const Embedding2D& e);

// Sum over class pairs of linear_boundary_errors restricted to the pair.
std::size_t one_vs_one_linear_errors(const Embedding2D& e);

// Class of a label: text before the first '_', or the whole label.
std::string class_from_label(const std::string& label);

// `label,<labels...>` header, then one row per label.
void write_matrix_csv(std::ostream& os, const DistanceMatrix& m);
DistanceMatrix read_matrix_csv(std::istream& in);

// `label,class,x,y`
void write_embedding_csv(std::ostream& os, const Embedding2D& e);
Embedding2D read_embedding_csv(std::istream& in);

// Scatter plot: one marker shape per class (circle, diamond, square, ...).
void write_embedding_svg(std::ostream& os, const Embedding2D& e);

}  // namespace honlb
