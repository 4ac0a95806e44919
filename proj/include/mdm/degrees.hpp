#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdm/cone.hpp"
#include "mdm/linalg.hpp"
#include "mdm/numbers.hpp"

namespace mdm {

// Torus grading of a polynomial Cox ring: column i is the class of the i-th
// generator in Z^r. Columns may repeat; none may vanish, and together they
// must span Q^r.
struct DegreeMatrix {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<ZVec> cols;
  std::vector<std::string> labels;

  IntMatrix matrix() const;  // r x n, column i = cols[i]

  bool operator==(const DegreeMatrix&) const = default;
};

// Validates the grading data. Default labels are x1..xn.
DegreeMatrix degree_matrix(std::vector<ZVec> cols, std::vector<std::string> labels = {});

// Cone spanned by all generator classes.
Cone effective_cone(const DegreeMatrix& d);

// Cone spanned by all classes except the i-th (0-based).
Cone deletion_cone(const DegreeMatrix& d, std::size_t i);

// Intersection of all deletion cones: classes whose stable base locus has no
// divisorial part.
Cone moving_cone(const DegreeMatrix& d);

}  // namespace mdm
