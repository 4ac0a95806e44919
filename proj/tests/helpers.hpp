#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mdm/chambers.hpp"
#include "mdm/degrees.hpp"
#include "mdm/errors.hpp"

namespace mdmtest {

inline mdm::DegreeMatrix p2_data() {
  return mdm::degree_matrix({{1}, {1}, {1}});
}
inline mdm::DegreeMatrix blpp2_data() {
  return mdm::degree_matrix({{1, -1}, {1, -1}, {1, 0}, {0, 1}});
}
inline mdm::DegreeMatrix flop_data() {
  return mdm::degree_matrix({{1}, {1}, {-1}, {-1}});
}
inline mdm::DegreeMatrix p1xp1_data() {
  return mdm::degree_matrix({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
}

// Draws gradings with n <= 6, r <= 3, entries in [-3,3] until one passes
// validation and admits a projective model.
inline mdm::DegreeMatrix random_presentation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rdist(1, 3), edist(-3, 3);
  for (;;) {
    const int r = rdist(rng);
    std::uniform_int_distribution<int> ndist(r, 6);
    const int n = ndist(rng);
    std::vector<mdm::ZVec> cols;
    for (int i = 0; i < n; ++i) {
      mdm::ZVec c(static_cast<std::size_t>(r));
      for (auto& e : c) e = edist(rng);
      cols.push_back(std::move(c));
    }
    try {
      mdm::DegreeMatrix d = mdm::degree_matrix(std::move(cols));
      (void)mdm::chamber_complex(d);
      return d;
    } catch (const mdm::Error&) {
      continue;
    }
  }
}

// Brute-force common refinement of the full-dimensional subset cones: split
// Eff along every facet hyperplane of every such cone, then glue cells whose
// sample points define the same intersection of containing cones. Deliberately
// avoids the production enumeration (different hyperplane set, pairwise
// intersection folding instead of one combined system).
inline std::set<std::string> refinement_keys(const mdm::DegreeMatrix& d) {
  using namespace mdm;
  Cone eff = effective_cone(d);
  std::vector<Cone> subs;
  const std::uint32_t full = (std::uint32_t{1} << d.n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<ZVec> gens;
    for (std::size_t i = 0; i < d.n; ++i)
      if (mask & (std::uint32_t{1} << i)) gens.push_back(d.cols[i]);
    Cone c = cone_from_generators(d.r, gens);
    if (cone_dim(c) == d.r) subs.push_back(std::move(c));
    if (mask == full) break;
  }
  std::set<std::string> nkeys;
  std::vector<ZVec> normals;
  for (const Cone& c : subs)
    for (ZVec g : c.facets) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        if (g[j] < 0) g = negate(g);
        break;
      }
      if (nkeys.insert(show_vec(g)).second) normals.push_back(g);
    }
  std::vector<Cone> cells{eff};
  for (const ZVec& nrm : normals) {
    std::vector<Cone> next;
    for (const Cone& c : cells) {
      std::vector<ZVec> ineqs = c.facets;
      ineqs.push_back(nrm);
      Cone pos = cone_from_system(c.dim, ineqs, c.span_normals.row_list());
      ineqs.back() = negate(nrm);
      Cone neg = cone_from_system(c.dim, ineqs, c.span_normals.row_list());
      if (cone_dim(pos) == d.r && cone_dim(neg) == d.r) {
        next.push_back(std::move(pos));
        next.push_back(std::move(neg));
      } else {
        next.push_back(c);
      }
    }
    cells = std::move(next);
  }
  std::set<std::string> keys;
  for (const Cone& cell : cells) {
    QVec s = to_rational(relint_point(cell));
    Cone lam = eff;
    for (const Cone& sub : subs)
      if (contains(sub, s)) lam = intersect(lam, sub);
    keys.insert(cone_key(lam));
  }
  return keys;
}

inline std::set<std::string> chamber_keys(const mdm::ChamberComplex& cc) {
  std::set<std::string> keys;
  for (const auto& ch : cc.chambers) keys.insert(mdm::cone_key(ch.cone));
  return keys;
}

}  // namespace mdmtest
