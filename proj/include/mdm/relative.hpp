#pragma once

#include <vector>

#include "mdm/chambers.hpp"

namespace mdm {

// Relative picture over a face sigma of a nef chamber: divisor classes modulo
// pullbacks from the base model. quotient_map has full row rank, kills exactly
// span(sigma), and its row count is the relative Picard rank.
struct RelativeContext {
  Cone base_face;
  IntMatrix quotient_map;
  std::size_t relative_dim = 0;
};

// Validates that the generated cone is a face of some chamber inside the
// moving cone; NotAFaceOfNefCone otherwise.
RelativeContext relative_context(const ChamberComplex& cc,
                                 const std::vector<QVec>& sigma_generators);

// Image of an absolute cone in the relative class space.
Cone relative_cone(const RelativeContext& ctx, const Cone& c);

// Projected star of the base face: one cone per in_mov chamber containing it.
// The star of a full chamber is the one-point fan in dimension zero.
Fan relative_mov_fan(const RelativeContext& ctx, const ChamberComplex& cc);

// Whether the model over sigma1 factors through the base model of sigma2,
// i.e. sigma2 is a face of sigma1.
bool factor_check(const ChamberComplex& cc, const std::vector<QVec>& sigma1,
                  const std::vector<QVec>& sigma2);

struct AxiomReport {
  bool q_factorial_model_exists = false;
  bool nef_polyhedral = false;
  bool mov_covered_by_sqm_nef_cones = false;
  bool fan_valid = false;
  bool operator==(const AxiomReport&) const = default;
};

// Checks the finite-collection axioms in the relative chamber model: some
// projected chamber is full dimensional, nef cones are polyhedral (true by
// construction, recorded), the projected star tiles the relative moving cone,
// and the star is a fan. Failures are reported, never thrown.
AxiomReport mdm_axiom_report(const RelativeContext& ctx, const ChamberComplex& cc);

// Same checks over explicitly supplied parts, so defective stars can be fed
// in by tests.
AxiomReport axiom_report_from_parts(const std::vector<Cone>& star_projected,
                                    const Cone& relative_mov);

}  // namespace mdm
