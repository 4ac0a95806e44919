#include "mdm/degrees.hpp"

#include "mdm/errors.hpp"

namespace mdm {

IntMatrix DegreeMatrix::matrix() const {
  return IntMatrix::from_cols(cols, r);
}

DegreeMatrix degree_matrix(std::vector<ZVec> cols, std::vector<std::string> labels) {
  if (cols.empty()) throw EmptyInput("degree matrix needs at least one column");
  std::size_t r = cols[0].size();
  if (r == 0) throw EmptyInput("degree matrix needs a positive grading rank");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].size() != r)
      throw DimensionMismatch("column " + std::to_string(i + 1) + " has length " +
                              std::to_string(cols[i].size()) + ", expected " +
                              std::to_string(r));
    if (is_zero_vec(cols[i]))
      throw InvariantViolation("column " + std::to_string(i + 1) + " is zero");
  }
  DegreeMatrix d;
  d.n = cols.size();
  d.r = r;
  d.cols = std::move(cols);
  if (rank(d.matrix()) != r)
    throw InvariantViolation("columns span a proper subspace of Q^" + std::to_string(r));
  if (labels.empty()) {
    for (std::size_t i = 0; i < d.n; ++i) labels.push_back("x" + std::to_string(i + 1));
  } else if (labels.size() != d.n) {
    throw DimensionMismatch("got " + std::to_string(labels.size()) + " labels for " +
                            std::to_string(d.n) + " generators");
  }
  d.labels = std::move(labels);
  return d;
}

Cone effective_cone(const DegreeMatrix& d) {
  return cone_from_generators(d.r, d.cols);
}

Cone deletion_cone(const DegreeMatrix& d, std::size_t i) {
  if (i >= d.n) throw DimensionMismatch("no generator with index " + std::to_string(i + 1));
  std::vector<ZVec> gens;
  for (std::size_t j = 0; j < d.n; ++j)
    if (j != i) gens.push_back(d.cols[j]);
  return cone_from_generators(d.r, gens);
}

Cone moving_cone(const DegreeMatrix& d) {
  Cone m = deletion_cone(d, 0);
  for (std::size_t i = 1; i < d.n; ++i) m = intersect(m, deletion_cone(d, i));
  return m;
}

}  // namespace mdm
