#include "mdm/toric.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "mdm/errors.hpp"

namespace mdm {

GaleData gale_dual(const DegreeMatrix& d) {
  IntMatrix k = span_kernel(d.matrix());
  GaleData g;
  g.dim = k.rows;
  for (std::size_t j = 0; j < d.n; ++j) g.rays.push_back(k.col(j));
  return g;
}

namespace {

ZVec integral_class(const QVec& cls) {
  ZVec z;
  z.reserve(cls.size());
  for (const Rat& c : cls) {
    if (denominator(c) != 1)
      throw NonIntegralLift("class entry " + show(c) + " is not an integer");
    z.push_back(numerator(c));
  }
  return z;
}

void check_pairing(const GaleData& g, const DegreeMatrix& d) {
  if (g.rays.size() != d.n || (d.n > d.r && g.dim != d.n - d.r))
    throw DimensionMismatch("gale data does not match the grading");
}

Int rat_floor(const Rat& q) {
  Int num = numerator(q), den = denominator(q);
  Int t = num / den;
  if (t * den > num) --t;
  return t;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// g_i(m) = <v_i, m> + a_i, the vanishing order of the i-th coordinate at the
// section with exponent vector a + V m. Nonnegative on the polyhedron.
Int order_at(const GaleData& g, const ZVec& lift, std::size_t i, const ZVec& m) {
  return dot(g.rays[i], m) + lift[i];
}

// Lattice points of P clipped to the bounding box of its vertices plus a
// fixed slack. Complete when P is bounded; a certified nonempty sample
// otherwise.
std::vector<ZVec> box_points(const Polytope& p, std::size_t budget) {
  if (p.bounded) return lattice_points(p, budget);
  const Int slack = 8;
  std::vector<ZVec> normals = p.normals;
  ZVec offsets = p.offsets;
  for (std::size_t j = 0; j < p.dim; ++j) {
    Int lo = 0, hi = 0;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      Int f = rat_floor(p.vertices[v][j]), c = rat_ceil(p.vertices[v][j]);
      if (v == 0 || f < lo) lo = f;
      if (v == 0 || c > hi) hi = c;
    }
    lo -= slack;
    hi += slack;
    ZVec e(p.dim, Int(0));
    e[j] = 1;
    normals.push_back(e);
    offsets.push_back(-lo);
    e[j] = -1;
    normals.push_back(e);
    offsets.push_back(hi);
  }
  return lattice_points(polytope_build(p.dim, normals, offsets), budget);
}

// Smallest fixed order of generator i over all lattice points, starting from
// the best sampled value and shrinking the admissible slab until it is empty
// or exhausted. Unbounded nonempty slabs cannot be certified.
Int descend_order(const GaleData& g, const ZVec& lift, std::size_t i,
                  const Polytope& p, Int best, std::size_t budget) {
  while (best > 0) {
    std::vector<ZVec> normals = p.normals;
    ZVec offsets = p.offsets;
    normals.push_back(negate(g.rays[i]));
    offsets.push_back(best - 1 - lift[i]);
    Polytope slab = polytope_build(p.dim, normals, offsets);
    if (slab.empty) break;
    if (!slab.bounded)
      throw BudgetExceeded("cannot certify the fixed multiplicity of generator " +
                           std::to_string(i + 1) + " over an unbounded slab");
    std::vector<ZVec> pts = lattice_points(slab, budget);
    if (pts.empty()) break;
    for (const ZVec& m : pts) best = std::min(best, order_at(g, lift, i, m));
  }
  return best;
}

}  // namespace

DivisorPolytope divisor_polytope(const GaleData& g, const DegreeMatrix& d,
                                 const QVec& cls, std::size_t budget) {
  check_pairing(g, d);
  if (cls.size() != d.r)
    throw DimensionMismatch("class has length " + std::to_string(cls.size()) +
                            ", expected " + std::to_string(d.r));
  ZVec zc = integral_class(cls);
  std::optional<ZVec> lift = integral_solve(d.matrix(), zc);
  if (!lift)
    throw NonIntegralLift("the class admits no integral lift through the grading");

  DivisorPolytope dp;
  dp.cls = cls;
  dp.lift = std::move(*lift);
  dp.p = polytope_build(g.dim, g.rays, dp.lift);
  if (dp.p.empty) {
    dp.section_count = Int(0);
  } else if (dp.p.bounded) {
    dp.points = lattice_points(dp.p, budget);
    dp.section_count = Int(dp.points.size());
  } else if (box_points(dp.p, budget).empty()) {
    throw BudgetExceeded(
        "unbounded section polyhedron with no lattice point near its vertices");
  }
  return dp;
}

MovableFixed movable_fixed_decomposition(const GaleData& g, const DegreeMatrix& d,
                                         const QVec& cls, std::size_t budget) {
  DivisorPolytope dp = divisor_polytope(g, d, cls, budget);
  std::vector<ZVec> samples = dp.p.bounded ? dp.points : box_points(dp.p, budget);
  if (samples.empty()) throw NotEffective("the class has no sections");

  MovableFixed mf;
  mf.fixed.assign(d.n, Int(0));
  for (std::size_t i = 0; i < d.n; ++i) {
    Int best = order_at(g, dp.lift, i, samples.front());
    for (const ZVec& m : samples) best = std::min(best, order_at(g, dp.lift, i, m));
    if (!dp.p.bounded) best = descend_order(g, dp.lift, i, dp.p, best, budget);
    mf.fixed[i] = best;
  }
  mf.movable = cls;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t k = 0; k < d.r; ++k)
      mf.movable[k] -= Rat(mf.fixed[i] * d.cols[i][k]);

  if (divisor_polytope(g, d, mf.movable, budget).section_count != dp.section_count)
    throw InternalInconsistency(
        "removing the fixed part changed the section count");
  return mf;
}

namespace {

// Smallest positive multiple of the class inside the image lattice of the
// grading, with its integral lift.
std::pair<ZVec, ZVec> scaled_lift(const DegreeMatrix& d, const ZVec& cls) {
  IntMatrix im = hermite_normal_form(d.matrix().transposed()).h;
  Int idx = 1;
  for (std::size_t k = 0; k < d.r; ++k) idx *= im.at(k, k);
  for (Int k = 1; k <= idx; ++k) {
    ZVec scaled(cls.size());
    for (std::size_t j = 0; j < cls.size(); ++j) scaled[j] = k * cls[j];
    if (std::optional<ZVec> lift = integral_solve(d.matrix(), scaled))
      return {std::move(scaled), std::move(*lift)};
  }
  throw InternalInconsistency("no multiple within the lattice index lifted");
}

Fan fan_of_class(const GaleData& g, const DegreeMatrix& d, const ZVec& cls) {
  return normal_fan(polytope_build(g.dim, g.rays, scaled_lift(d, cls).second));
}

}  // namespace

Fan model_fan(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
              const std::string& chamber_id) {
  check_pairing(g, d);
  const Chamber& ch = chamber_by_id(cc, chamber_id);
  ZVec first = relint_point(ch.cone);
  for (Int& x : first) x *= 2;
  ZVec second = first;
  const ZVec& shift =
      ch.cone.rays.empty() ? ch.cone.lineality.row(0) : ch.cone.rays.front();
  for (std::size_t j = 0; j < second.size(); ++j) second[j] += shift[j];

  Fan f = fan_of_class(g, d, first);
  if (!fan_equal(f, fan_of_class(g, d, second)))
    throw InternalInconsistency("two interior classes of chamber " + chamber_id +
                                " produced different model fans");
  fan_fill_adjacency(f);
  return f;
}

bool mori_equivalent(const GaleData& g, const DegreeMatrix& d, const QVec& cls1,
                     const QVec& cls2) {
  check_pairing(g, d);
  Cone eff = effective_cone(d);
  for (const QVec* cls : {&cls1, &cls2})
    if (!in_relative_interior(eff, *cls))
      throw NotBig("class " + show_vec(*cls) + " is not in the interior of the effective cone");
  return fan_equal(fan_of_class(g, d, integral_class(cls1)),
                   fan_of_class(g, d, integral_class(cls2)));
}

std::string base_locus_kind_name(BaseLocusKind k) {
  switch (k) {
    case BaseLocusKind::Semiample: return "semiample";
    case BaseLocusKind::MovableNotSemiample: return "movable_not_semiample";
    case BaseLocusKind::Codim1Fixed: return "codim1_fixed";
    case BaseLocusKind::NotEffective: return "not_effective";
  }
  throw InternalInconsistency("unknown base locus kind");
}

BaseLocusKind base_locus_class(const GaleData& g, const DegreeMatrix& d,
                               const ChamberComplex& cc, const QVec& cls,
                               std::size_t multiple_bound, std::size_t budget) {
  check_pairing(g, d);
  ZVec zc = integral_class(cls);
  if (!contains(cc.eff, cls)) return BaseLocusKind::NotEffective;
  if (contains(chamber_by_id(cc, cc.designated).cone, cls))
    return BaseLocusKind::Semiample;

  const bool in_mov = contains(cc.mov, cls);
  bool fixed_free = false;
  bool inconclusive = false;
  for (std::size_t m = 1; m <= multiple_bound && !fixed_free; ++m) {
    QVec mcls(d.r);
    for (std::size_t k = 0; k < d.r; ++k) mcls[k] = Rat(Int(m) * zc[k]);
    try {
      MovableFixed mf = movable_fixed_decomposition(g, d, mcls, budget);
      if (is_zero_vec(mf.fixed)) fixed_free = true;
    } catch (const NonIntegralLift&) {
      continue;  // this multiple is not a line bundle class
    } catch (const NotEffective&) {
      continue;  // no sections at this multiple
    } catch (const BudgetExceeded&) {
      inconclusive = true;
    } catch (const PointBudgetExceeded&) {
      inconclusive = true;
    }
  }

  if (fixed_free && !in_mov)
    throw InternalInconsistency(
        "a fixed-free multiple contradicts moving-cone membership");
  if (!fixed_free && in_mov)
    throw BudgetExceeded("no fixed-free multiple of a movable class within bound " +
                         std::to_string(multiple_bound));
  if (!fixed_free && inconclusive)
    throw BudgetExceeded("fixed parts could not be certified for every multiple");
  return fixed_free ? BaseLocusKind::MovableNotSemiample : BaseLocusKind::Codim1Fixed;
}

}  // namespace mdm
