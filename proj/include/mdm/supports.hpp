#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mdm/cone.hpp"
#include "mdm/degrees.hpp"

namespace mdm {

// Antichain of minimal semistable supports for a fixed character: a point of
// the linearized affine space is semistable exactly when the set of its
// nonvanishing coordinates contains one of these index sets. Indices are
// 0-based here and 1-based in serialized output.
struct SupportFamily {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> minimal;  // each sorted, family lex-sorted
  bool operator==(const SupportFamily&) const = default;
};

// Lazy cache of the cones cone(w_i : i in mask), shared between the chamber
// decomposition and the stability analysis.
class SubsetCones {
 public:
  explicit SubsetCones(const DegreeMatrix& d);
  const DegreeMatrix& degrees() const { return deg_; }
  const Cone& cone_of(std::uint32_t mask);
  bool member(std::uint32_t mask, const QVec& chi);

 private:
  DegreeMatrix deg_;
  std::map<std::uint32_t, Cone> cache_;
};

SupportFamily semistable_supports(SubsetCones& sc, const QVec& chi);
SupportFamily semistable_supports(const DegreeMatrix& d, const QVec& chi);

// True when every member of `fine` contains a member of `coarse`, i.e. the
// semistable locus for `fine` sits inside the one for `coarse`.
bool family_refines(const SupportFamily& fine, const SupportFamily& coarse);

}  // namespace mdm
