#include "mdm/relative.hpp"

#include <algorithm>
#include <string>

#include "mdm/errors.hpp"

namespace mdm {

namespace {
Cone face_cone_validated(const ChamberComplex& cc, const std::vector<QVec>& gens) {
  std::vector<ZVec> dirs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != cc.deg.r)
      throw DimensionMismatch("face generator " + std::to_string(i + 1) +
                              " has length " + std::to_string(gens[i].size()) +
                              ", expected " + std::to_string(cc.deg.r));
    if (!is_zero_vec(gens[i])) dirs.push_back(primitive(gens[i]));
  }
  Cone sigma = cone_from_generators(cc.deg.r, dirs);
  for (const auto& ch : cc.chambers)
    if (ch.in_mov && is_face_of(sigma, ch.cone)) return sigma;
  throw NotAFaceOfNefCone("the generated cone is not a face of any nef chamber");
}
}  // namespace

RelativeContext relative_context(const ChamberComplex& cc,
                                 const std::vector<QVec>& sigma_generators) {
  RelativeContext ctx;
  ctx.base_face = face_cone_validated(cc, sigma_generators);
  std::vector<ZVec> rows = ctx.base_face.rays;
  for (std::size_t i = 0; i < ctx.base_face.lineality.rows; ++i)
    rows.push_back(ctx.base_face.lineality.row(i));
  ctx.quotient_map = span_kernel(IntMatrix::from_rows(rows, cc.deg.r));
  ctx.relative_dim = ctx.quotient_map.rows;
  return ctx;
}

Cone relative_cone(const RelativeContext& ctx, const Cone& c) {
  if (c.dim != ctx.quotient_map.cols)
    throw DimensionMismatch("cone does not live in the absolute class space");
  if (ctx.relative_dim == 0) return Cone{};
  return linear_image(ctx.quotient_map, c);
}

Fan relative_mov_fan(const RelativeContext& ctx, const ChamberComplex& cc) {
  Fan f;
  f.dim = ctx.relative_dim;
  for (const auto& ch : cc.chambers)
    if (ch.in_mov && subcone_of(ctx.base_face, ch.cone))
      f.cones.push_back(relative_cone(ctx, ch.cone));
  fan_fill_adjacency(f);
  return f;
}

bool factor_check(const ChamberComplex& cc, const std::vector<QVec>& sigma1,
                  const std::vector<QVec>& sigma2) {
  Cone c1 = face_cone_validated(cc, sigma1);
  Cone c2 = face_cone_validated(cc, sigma2);
  return is_face_of(c2, c1);
}

AxiomReport mdm_axiom_report(const RelativeContext& ctx, const ChamberComplex& cc) {
  Fan star = relative_mov_fan(ctx, cc);
  return axiom_report_from_parts(star.cones, relative_cone(ctx, cc.mov));
}

AxiomReport axiom_report_from_parts(const std::vector<Cone>& star_projected,
                                    const Cone& relative_mov) {
  AxiomReport rep;
  rep.nef_polyhedral = true;
  for (const Cone& c : star_projected)
    if (cone_dim(c) == relative_mov.dim) {
      rep.q_factorial_model_exists = true;
      break;
    }
  Fan f;
  f.dim = relative_mov.dim;
  f.cones = star_projected;
  rep.fan_valid = fan_validate(f).ok;
  if (rep.fan_valid) {
    if (is_zero_cone(relative_mov))
      rep.mov_covered_by_sqm_nef_cones =
          std::find(star_projected.begin(), star_projected.end(), relative_mov) !=
          star_projected.end();
    else
      rep.mov_covered_by_sqm_nef_cones = support_covers(star_projected, relative_mov);
  }
  return rep;
}

}  // namespace mdm
