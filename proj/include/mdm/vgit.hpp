#pragma once

#include <optional>

#include "mdm/chambers.hpp"
#include "mdm/degrees.hpp"
#include "mdm/supports.hpp"

namespace mdm {

// Quotient-quality summary for one character. unstable_codim is empty when
// every support is semistable (the unstable locus is empty); isotropy_order
// is empty when no minimal support has full rank.
struct StabilityReport {
  bool weight_cone_member = false;
  bool ss_equals_s = false;
  std::optional<std::size_t> unstable_codim;
  std::optional<Int> isotropy_order;

  bool operator==(const StabilityReport&) const = default;
};

// Cone of characters admitting nonzero invariant sections. For a diagonal
// torus action those sections are monomials, so this is the effective cone.
Cone weight_cone(const DegreeMatrix& d);

// Same semistable locus, decided through the minimal support families.
bool git_equivalent(const DegreeMatrix& d, const QVec& chi1, const QVec& chi2);

// ss_equals_s holds when chi is interior to cone(w_i : i in I) for every
// minimal support I and each such I spans Q^r (finite stabilizers on the
// semistable locus). unstable_codim is n minus the largest non-semistable
// support size. isotropy_order is the lcm of the lattice indices of the
// full-rank minimal supports, a bound for the orders of isotropy groups.
StabilityReport stability_report(const DegreeMatrix& d, const QVec& chi);

// The chamber complex, re-checked against the variation-of-quotients
// properties: chambers are full dimensional, two interior points of one
// chamber carry the same family, and the family on a wall is coarser than
// the family of each adjacent interior. InternalInconsistency on failure.
ChamberComplex git_chambers(const DegreeMatrix& d);

}  // namespace mdm
