#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdm/linalg.hpp"
#include "mdm/numbers.hpp"

namespace mdm {

// Closed rational polyhedral cone in Q^dim, held in a canonical two-sided
// description:
//
//   C = cone(rays) + rowspan(lineality)
//     = {x : facets . x >= 0, span_normals . x = 0}
//
// rays are primitive, orthogonal to the lineality space and lex-sorted; facet
// normals are primitive, lie in the linear span of C and are lex-sorted;
// lineality and span_normals hold HNF bases of saturated lattices. The form
// depends only on the point set, so equal cones compare equal as structs.
struct Cone {
  std::size_t dim = 0;
  std::vector<ZVec> rays;
  std::vector<ZVec> facets;
  IntMatrix lineality;
  IntMatrix span_normals;

  bool operator==(const Cone&) const = default;
};

Cone cone_from_system(std::size_t dim, const std::vector<ZVec>& ineqs,
                      const std::vector<ZVec>& eqs = {});
Cone cone_from_generators(std::size_t dim, const std::vector<ZVec>& gens,
                          const std::vector<ZVec>& lin_gens = {});
Cone dualize(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone linear_image(const IntMatrix& m, const Cone& c);  // image of c under x -> m x

std::size_t cone_dim(const Cone& c);
bool is_zero_cone(const Cone& c);
std::string cone_key(const Cone& c);  // injective rendering, usable as a map key
ZVec relint_point(const Cone& c);     // integral point in the relative interior

enum class Membership { Outside, Boundary, Interior };  // Interior = relative interior
Membership locate(const Cone& c, const QVec& x);
bool contains(const Cone& c, const QVec& x);
bool contains(const Cone& c, const ZVec& x);
bool in_relative_interior(const Cone& c, const QVec& x);
bool in_relative_interior(const Cone& c, const ZVec& x);

bool subcone_of(const Cone& inner, const Cone& outer);
bool is_face_of(const Cone& face, const Cone& c);  // improper face included
std::vector<Cone> facet_faces(const Cone& c);      // codimension-1 faces
std::vector<Cone> faces_of(const Cone& c);         // full face lattice, bottom to top

struct Fan {
  std::size_t dim = 0;
  std::vector<Cone> cones;  // maximal cones
  // index pairs (i < j) of cones meeting in a common facet of both
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
};

// Fills f.adjacency from scratch; assumes f passes fan_validate.
void fan_fill_adjacency(Fan& f);

struct FanReport {
  bool ok = true;
  std::string detail;  // first violation when !ok
};
// Pairwise intersections must be faces of both sides, and no cone may repeat.
FanReport fan_validate(const Fan& f);

// Same ambient dimension and the same set of maximal cones.
bool fan_equal(const Fan& a, const Fan& b);

// Exact covering test for a fan supported on a convex cone: every interior
// wall must be shared by exactly two pieces and every unshared wall must lie
// on the boundary of `whole`. Assumes the pieces pass fan_validate and that
// neighboring pieces meet along entire facets (true for fans cut out by a
// hyperplane arrangement).
bool support_covers(const std::vector<Cone>& pieces, const Cone& whole);

// Rational polyhedron {m : <normals[i], m> >= -offsets[i]} in Q^dim.
// vertices are representatives of the minimal faces (genuine vertices when
// the recession cone is pointed).
struct Polytope {
  std::size_t dim = 0;
  std::vector<ZVec> normals;
  ZVec offsets;
  std::vector<QVec> vertices;
  std::vector<ZVec> recession_rays;
  IntMatrix recession_lineality;
  bool bounded = true;
  bool empty = true;
};

Polytope polytope_build(std::size_t dim, const std::vector<ZVec>& normals, const ZVec& offsets);

// All integer points of a bounded polytope, lex-sorted. Unbounded input
// throws Unbounded; scanning more than `budget` candidate points throws
// PointBudgetExceeded.
std::vector<ZVec> lattice_points(const Polytope& p, std::size_t budget);

// Inner normal fan: one maximal cone per vertex, spanned by the normals of
// the constraints active there. Complete exactly when p is bounded.
Fan normal_fan(const Polytope& p);

}  // namespace mdm
