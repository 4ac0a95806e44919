#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdm/chambers.hpp"
#include "mdm/degrees.hpp"

namespace mdm {

// Gale dual of the grading: one ray per Cox generator in the fiber lattice
// Z^{n-r}, read off the saturated kernel of the degree matrix. dim is 0 when
// n == r (point fibers).
struct GaleData {
  std::size_t dim = 0;
  std::vector<ZVec> rays;
};

GaleData gale_dual(const DegreeMatrix& d);

// Section polyhedron P = {m : <v_i, m> >= -lift_i} of an integral lift of
// the class. points holds the lex-sorted lattice points when P is bounded;
// section_count is empty when P is unbounded and provably holds a lattice
// point (then there are infinitely many sections).
struct DivisorPolytope {
  QVec cls;
  ZVec lift;
  Polytope p;
  std::optional<Int> section_count;
  std::vector<ZVec> points;
};

DivisorPolytope divisor_polytope(const GaleData& g, const DegreeMatrix& d,
                                 const QVec& cls, std::size_t budget = 1000000);

// D = M + F with F the divisorial fixed part: fixed[i] is the minimum of
// <v_i, m> + lift_i over the sections, movable = cls - sum fixed[i] w_i.
// The section counts of cls and movable must agree and are checked.
struct MovableFixed {
  QVec movable;
  ZVec fixed;
  bool operator==(const MovableFixed&) const = default;
};

MovableFixed movable_fixed_decomposition(const GaleData& g, const DegreeMatrix& d,
                                         const QVec& cls, std::size_t budget = 1000000);

// Normal fan of the section polyhedron of a generic interior lattice class of
// the chamber; computed twice from independent interior choices and compared.
Fan model_fan(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
              const std::string& chamber_id);

// Two big classes contract the same way exactly when their section
// polyhedra have equal normal fans. NotBig outside the interior of Eff.
bool mori_equivalent(const GaleData& g, const DegreeMatrix& d, const QVec& cls1,
                     const QVec& cls2);

enum class BaseLocusKind { Semiample, MovableNotSemiample, Codim1Fixed, NotEffective };
std::string base_locus_kind_name(BaseLocusKind k);

// Stable-base-locus class of a lattice class: Semiample on the closed
// designated nef chamber, Codim1Fixed when every multiple up to the bound
// keeps a divisorial fixed part, MovableNotSemiample otherwise. The fixed
// parts are cross-checked against moving-cone membership.
BaseLocusKind base_locus_class(const GaleData& g, const DegreeMatrix& d,
                               const ChamberComplex& cc, const QVec& cls,
                               std::size_t multiple_bound = 12,
                               std::size_t budget = 1000000);

}  // namespace mdm
