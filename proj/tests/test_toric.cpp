#include <doctest.h>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "mdm/errors.hpp"
#include "mdm/toric.hpp"

using namespace mdm;
using namespace mdmtest;

namespace {
QVec q(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

// Doubled canonical interior point, the lattice class model_fan scales from.
QVec big_point(const Cone& c) {
  ZVec p = relint_point(c);
  for (Int& x : p) x *= 2;
  return to_rational(p);
}

std::set<std::string> cone_keys(const std::vector<Cone>& cs) {
  std::set<std::string> keys;
  for (const auto& c : cs) keys.insert(cone_key(c));
  return keys;
}

// Cone-arithmetic route to the base locus kind, compared against the
// section-counting route on whole grids below.
BaseLocusKind predicted_kind(const ChamberComplex& cc, const QVec& cls) {
  if (!contains(cc.eff, cls)) return BaseLocusKind::NotEffective;
  if (contains(chamber_by_id(cc, cc.designated).cone, cls))
    return BaseLocusKind::Semiample;
  if (contains(cc.mov, cls)) return BaseLocusKind::MovableNotSemiample;
  return BaseLocusKind::Codim1Fixed;
}
}  // namespace

TEST_CASE("gale dual recovers the fan rays of the standard models") {
  GaleData p2 = gale_dual(p2_data());
  CHECK(p2.dim == 2);
  CHECK(p2.rays == std::vector<ZVec>{{1, 0}, {0, 1}, {-1, -1}});

  GaleData bl = gale_dual(blpp2_data());
  CHECK(bl.dim == 2);
  CHECK(bl.rays == std::vector<ZVec>{{1, 0}, {0, 1}, {-1, -1}, {1, 1}});

  GaleData fl = gale_dual(flop_data());
  CHECK(fl.dim == 3);
  CHECK(fl.rays ==
        std::vector<ZVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});

  GaleData pp = gale_dual(p1xp1_data());
  CHECK(pp.dim == 2);
  CHECK(pp.rays == std::vector<ZVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("gale rays pair to zero with the degrees and span the fiber space") {
  std::mt19937_64 rng(20260815);
  std::vector<DegreeMatrix> data{p2_data(), blpp2_data(), flop_data(), p1xp1_data()};
  for (int t = 0; t < 3; ++t) data.push_back(random_presentation(rng));

  for (const DegreeMatrix& d : data) {
    GaleData g = gale_dual(d);
    REQUIRE(g.rays.size() == d.n);
    CHECK(g.dim == d.n - d.r);
    for (std::size_t k = 0; k < d.r; ++k)
      for (std::size_t l = 0; l < g.dim; ++l) {
        Int s = 0;
        for (std::size_t i = 0; i < d.n; ++i) s += d.cols[i][k] * g.rays[i][l];
        CHECK(s == 0);
      }
    if (g.dim > 0) CHECK(rank(IntMatrix::from_rows(g.rays, g.dim)) == g.dim);
  }
}

TEST_CASE("square gradings have point fibers and monomial section counts") {
  DegreeMatrix id2 = degree_matrix({{1, 0}, {0, 1}});
  GaleData g = gale_dual(id2);
  CHECK(g.dim == 0);
  REQUIRE(g.rays.size() == 2);
  CHECK(g.rays[0].empty());
  CHECK(g.rays[1].empty());

  CHECK(divisor_polytope(g, id2, q({0, 0})).section_count == Int(1));
  CHECK(divisor_polytope(g, id2, q({1, 0})).section_count == Int(1));
  CHECK(divisor_polytope(g, id2, q({-1, 0})).section_count == Int(0));

  // Index two image lattice: odd classes have no integral lift at all.
  DegreeMatrix dbl = degree_matrix({{2}});
  GaleData gd = gale_dual(dbl);
  CHECK(divisor_polytope(gd, dbl, q({2})).section_count == Int(1));
  CHECK(divisor_polytope(gd, dbl, q({-2})).section_count == Int(0));
  CHECK_THROWS_AS(divisor_polytope(gd, dbl, q({1})), NonIntegralLift);
  CHECK(mori_equivalent(gd, dbl, q({1}), q({2})));
}

TEST_CASE("section polyhedra count the graded pieces of the Cox ring") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);

  DivisorPolytope e = divisor_polytope(g, d, q({0, 1}));
  CHECK(e.section_count == Int(1));
  REQUIRE(e.points.size() == 1);
  CHECK(e.p.bounded);

  CHECK(divisor_polytope(g, d, q({1, 1})).section_count == Int(3));
  CHECK(divisor_polytope(g, d, q({1, 0})).section_count == Int(3));
  CHECK(divisor_polytope(g, d, q({2, -1})).section_count == Int(5));
  CHECK(divisor_polytope(g, d, q({2, 2})).section_count == Int(6));

  DivisorPolytope none = divisor_polytope(g, d, q({-1, 0}));
  CHECK(none.p.empty);
  CHECK(none.section_count == Int(0));
  CHECK(none.points.empty());

  // The chosen lift really lifts the class, and every reported point is a
  // section of nonnegative vanishing orders.
  DivisorPolytope h = divisor_polytope(g, d, q({1, 0}));
  for (std::size_t k = 0; k < d.r; ++k) {
    Int s = 0;
    for (std::size_t i = 0; i < d.n; ++i) s += d.cols[i][k] * h.lift[i];
    CHECK(Rat(s) == h.cls[k]);
  }
  for (const ZVec& m : h.points)
    for (std::size_t i = 0; i < d.n; ++i) CHECK(dot(g.rays[i], m) + h.lift[i] >= 0);

  QVec half{Rat(1) / 2, Rat(0)};
  CHECK_THROWS_AS(divisor_polytope(g, d, half), NonIntegralLift);
  CHECK_THROWS_AS(divisor_polytope(g, d, q({3, 0}), 2), PointBudgetExceeded);
}

TEST_CASE("unbounded section polyhedra report infinitely many sections") {
  DegreeMatrix d = flop_data();
  GaleData g = gale_dual(d);
  for (int c : {1, -1, 3, 0}) {
    DivisorPolytope dp = divisor_polytope(g, d, q({c}));
    CHECK_FALSE(dp.p.empty);
    CHECK_FALSE(dp.p.bounded);
    CHECK_FALSE(dp.section_count.has_value());
    CHECK(dp.points.empty());
  }
}

TEST_CASE("dilation and effectivity make the counts grow") {
  DegreeMatrix p2 = p2_data();
  GaleData g2 = gale_dual(p2);
  const int expected[] = {1, 3, 6, 10, 15};
  for (int k = 0; k <= 4; ++k)
    CHECK(divisor_polytope(g2, p2, q({k})).section_count == Int(expected[k]));
  CHECK(divisor_polytope(g2, p2, q({-1})).section_count == Int(0));

  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);
  for (int k = 0; k <= 4; ++k)
    CHECK(divisor_polytope(g, d, q({k, 0})).section_count == Int(expected[k]));

  DegreeMatrix pp = p1xp1_data();
  GaleData gp = gale_dual(pp);
  CHECK(divisor_polytope(gp, pp, q({1, 1})).section_count == Int(4));
  CHECK(divisor_polytope(gp, pp, q({2, 2})).section_count == Int(9));

  // Multiplying by a Cox generator embeds the sections.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      Int base = *divisor_polytope(g, d, q({a, b})).section_count;
      for (std::size_t i = 0; i < d.n; ++i) {
        QVec up = q({a, b});
        for (std::size_t k = 0; k < d.r; ++k) up[k] += Rat(d.cols[i][k]);
        CHECK(*divisor_polytope(g, d, up).section_count >= base);
      }
    }
}

TEST_CASE("fixed parts split off and leave the count unchanged") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);

  CHECK(movable_fixed_decomposition(g, d, q({1, 1})) ==
        MovableFixed{q({1, 0}), {0, 0, 0, 1}});
  CHECK(movable_fixed_decomposition(g, d, q({2, 2})) ==
        MovableFixed{q({2, 0}), {0, 0, 0, 2}});
  CHECK(movable_fixed_decomposition(g, d, q({0, 1})) ==
        MovableFixed{q({0, 0}), {0, 0, 0, 1}});
  CHECK(movable_fixed_decomposition(g, d, q({1, 0})) ==
        MovableFixed{q({1, 0}), {0, 0, 0, 0}});
  CHECK(movable_fixed_decomposition(g, d, q({2, -1})) ==
        MovableFixed{q({2, -1}), {0, 0, 0, 0}});
  CHECK(movable_fixed_decomposition(g, d, q({0, 0})) ==
        MovableFixed{q({0, 0}), {0, 0, 0, 0}});
  CHECK_THROWS_AS(movable_fixed_decomposition(g, d, q({-1, 0})), NotEffective);

  // Unbounded polyhedra: the descent certifies order zero for every
  // generator on both sides of the flop.
  DegreeMatrix df = flop_data();
  GaleData gf = gale_dual(df);
  CHECK(movable_fixed_decomposition(gf, df, q({1})) ==
        MovableFixed{q({1}), {0, 0, 0, 0}});
  CHECK(movable_fixed_decomposition(gf, df, q({-1})) ==
        MovableFixed{q({-1}), {0, 0, 0, 0}});

  // Decomposing is idempotent: the movable part carries no fixed part.
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      DivisorPolytope dp = divisor_polytope(g, d, q({a, b}));
      if (dp.p.empty) continue;
      MovableFixed mf = movable_fixed_decomposition(g, d, q({a, b}));
      ZVec zero(d.n, Int(0));
      CHECK(movable_fixed_decomposition(g, d, mf.movable) ==
            MovableFixed{mf.movable, zero});
      CHECK(divisor_polytope(g, d, mf.movable).section_count == dp.section_count);
    }
}

TEST_CASE("model fans name the toric varieties behind the chambers") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);
  ChamberComplex cc = chamber_complex(d);

  Location nef = locate_class(cc, q({2, -1}));
  REQUIRE(nef.kind == Location::Kind::Chamber);
  CHECK(nef.chamber == cc.designated);
  Location far = locate_class(cc, q({1, 1}));
  REQUIRE(far.kind == Location::Kind::Chamber);

  Fan blowup = model_fan(g, d, cc, nef.chamber);
  CHECK(blowup.dim == 2);
  CHECK(cone_keys(blowup.cones) ==
        cone_keys({cone_from_generators(2, {{1, 0}, {1, 1}}),
                   cone_from_generators(2, {{1, 1}, {0, 1}}),
                   cone_from_generators(2, {{0, 1}, {-1, -1}}),
                   cone_from_generators(2, {{-1, -1}, {1, 0}})}));

  Fan plane = model_fan(g, d, cc, far.chamber);
  CHECK(cone_keys(plane.cones) ==
        cone_keys({cone_from_generators(2, {{1, 0}, {0, 1}}),
                   cone_from_generators(2, {{0, 1}, {-1, -1}}),
                   cone_from_generators(2, {{-1, -1}, {1, 0}})}));
  CHECK_FALSE(fan_equal(blowup, plane));

  // Contracting the exceptional curve lands on the plane: the one-chamber
  // model of the plane presentation is the very same fan.
  DegreeMatrix p2 = p2_data();
  ChamberComplex cc2 = chamber_complex(p2);
  Fan plane2 = model_fan(gale_dual(p2), p2, cc2, cc2.designated);
  CHECK(fan_equal(plane, plane2));

  ChamberComplex ccp = chamber_complex(p1xp1_data());
  Fan quadric = model_fan(gale_dual(p1xp1_data()), p1xp1_data(), ccp, ccp.designated);
  CHECK(cone_keys(quadric.cones) ==
        cone_keys({cone_from_generators(2, {{1, 0}, {0, 1}}),
                   cone_from_generators(2, {{1, 0}, {0, -1}}),
                   cone_from_generators(2, {{-1, 0}, {0, 1}}),
                   cone_from_generators(2, {{-1, 0}, {0, -1}})}));

  CHECK_THROWS_AS(model_fan(g, d, cc, "C9"), InvariantViolation);

  // Determinism of the scaled interior choice.
  CHECK(fan_equal(model_fan(g, d, cc, nef.chamber), blowup));
}

TEST_CASE("the two small resolutions of the flop share rays but not cones") {
  DegreeMatrix d = flop_data();
  GaleData g = gale_dual(d);
  ChamberComplex cc = chamber_complex(d, q({1}));

  Location plus = locate_class(cc, q({1}));
  Location minus = locate_class(cc, q({-1}));
  REQUIRE(plus.kind == Location::Kind::Chamber);
  REQUIRE(minus.kind == Location::Kind::Chamber);

  Fan fp = model_fan(g, d, cc, plus.chamber);
  Fan fm = model_fan(g, d, cc, minus.chamber);
  CHECK(cone_keys(fp.cones) ==
        cone_keys({cone_from_generators(3, {{0, 1, 0}, {0, 0, 1}, {1, 1, -1}}),
                   cone_from_generators(3, {{1, 0, 0}, {0, 0, 1}, {1, 1, -1}})}));
  CHECK(cone_keys(fm.cones) ==
        cone_keys({cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                   cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, -1}})}));
  CHECK_FALSE(fan_equal(fp, fm));

  using Adj = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(fp.adjacency == Adj{{0, 1}});
  CHECK(fm.adjacency == Adj{{0, 1}});
}

TEST_CASE("mori equivalence separates the chambers") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);

  CHECK(mori_equivalent(g, d, q({2, -1}), q({3, -1})));
  CHECK(mori_equivalent(g, d, q({1, 1}), q({2, 1})));
  CHECK_FALSE(mori_equivalent(g, d, q({2, -1}), q({2, 1})));
  CHECK(mori_equivalent(g, d, q({2, 1}), q({2, -1})) ==
        mori_equivalent(g, d, q({2, -1}), q({2, 1})));

  for (QVec bad : {q({1, -1}), q({0, 1}), q({-1, 0})})
    CHECK_THROWS_AS(mori_equivalent(g, d, bad, q({2, -1})), NotBig);

  DegreeMatrix p2 = p2_data();
  GaleData g2 = gale_dual(p2);
  CHECK(mori_equivalent(g2, p2, q({1}), q({5})));
  CHECK_THROWS_AS(mori_equivalent(g2, p2, q({0}), q({1})), NotBig);

  // Across the flop the models differ; at the wall the polyhedron becomes a
  // cone over the singular contraction, distinct from both resolutions.
  DegreeMatrix df = flop_data();
  GaleData gf = gale_dual(df);
  CHECK(mori_equivalent(gf, df, q({1}), q({3})));
  CHECK(mori_equivalent(gf, df, q({-1}), q({-2})));
  CHECK_FALSE(mori_equivalent(gf, df, q({1}), q({-1})));
  CHECK_FALSE(mori_equivalent(gf, df, q({0}), q({1})));
  CHECK_FALSE(mori_equivalent(gf, df, q({0}), q({-1})));
}

TEST_CASE("base locus classification") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);
  ChamberComplex cc = chamber_complex(d);

  CHECK(base_locus_class(g, d, cc, q({1, 0})) == BaseLocusKind::Semiample);
  CHECK(base_locus_class(g, d, cc, q({2, -1})) == BaseLocusKind::Semiample);
  CHECK(base_locus_class(g, d, cc, q({0, 1})) == BaseLocusKind::Codim1Fixed);
  CHECK(base_locus_class(g, d, cc, q({1, 1})) == BaseLocusKind::Codim1Fixed);
  CHECK(base_locus_class(g, d, cc, q({-1, 0})) == BaseLocusKind::NotEffective);

  DegreeMatrix df = flop_data();
  GaleData gf = gale_dual(df);
  ChamberComplex ccf = chamber_complex(df, q({1}));
  CHECK(base_locus_class(gf, df, ccf, q({1})) == BaseLocusKind::Semiample);
  CHECK(base_locus_class(gf, df, ccf, q({0})) == BaseLocusKind::Semiample);
  CHECK(base_locus_class(gf, df, ccf, q({-1})) == BaseLocusKind::MovableNotSemiample);

  CHECK(base_locus_kind_name(BaseLocusKind::Semiample) == "semiample");
  CHECK(base_locus_kind_name(BaseLocusKind::MovableNotSemiample) ==
        "movable_not_semiample");
  CHECK(base_locus_kind_name(BaseLocusKind::Codim1Fixed) == "codim1_fixed");
  CHECK(base_locus_kind_name(BaseLocusKind::NotEffective) == "not_effective");

  // A starved point budget is surfaced, never silently resolved.
  CHECK_THROWS_AS(base_locus_class(g, d, cc, q({1, 1}), 12, 2), BudgetExceeded);
}

TEST_CASE("section counting and cone arithmetic agree on whole grids") {
  struct Row {
    DegreeMatrix d;
    std::optional<QVec> designated;
  };
  std::vector<Row> rows;
  rows.push_back({p2_data(), {}});
  rows.push_back({blpp2_data(), {}});
  rows.push_back({flop_data(), q({1})});
  rows.push_back({p1xp1_data(), {}});

  for (const Row& row : rows) {
    const DegreeMatrix& d = row.d;
    GaleData g = gale_dual(d);
    ChamberComplex cc = chamber_complex(d, row.designated);

    std::vector<QVec> grid;
    if (d.r == 1) {
      for (int a = -3; a <= 3; ++a) grid.push_back(q({a}));
    } else {
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) grid.push_back(q({a, b}));
    }

    for (const QVec& cls : grid) {
      // The returned kind is derived from fixed parts of actual sections;
      // it must land exactly where the chamber geometry says.
      CHECK(base_locus_class(g, d, cc, cls) == predicted_kind(cc, cls));

      // Classes interior to a chamber are Mori equivalent to that chamber's
      // canonical class and to no other. Wall classes are excluded: their
      // model coincides with the smaller side and equivalence is one-sided.
      const Chamber* home = nullptr;
      for (const Chamber& ch : cc.chambers)
        if (in_relative_interior(ch.cone, cls)) home = &ch;
      if (!home) continue;
      for (const Chamber& ch : cc.chambers)
        CHECK(mori_equivalent(g, d, cls, big_point(ch.cone)) ==
              (ch.id == home->id));
    }
  }
}

TEST_CASE("rebasing the grading or renaming generators changes nothing") {
  DegreeMatrix d = blpp2_data();
  GaleData g = gale_dual(d);

  // Same kernel after an unimodular change of the character basis.
  DegreeMatrix d2 = degree_matrix({{0, -1}, {0, -1}, {1, 0}, {1, 1}});
  GaleData g2 = gale_dual(d2);
  CHECK(g2.rays == g.rays);
  auto rebase = [](const QVec& c) { return QVec{c[0] + c[1], c[1]}; };
  for (QVec c : {q({1, 0}), q({1, 1}), q({2, -1}), q({2, 2}), q({0, 1})})
    CHECK(divisor_polytope(g2, d2, rebase(c)).section_count ==
          divisor_polytope(g, d, c).section_count);

  // Renaming generators permutes the rays up to a unimodular matching.
  DegreeMatrix d3 = degree_matrix({{0, 1}, {1, -1}, {1, -1}, {1, 0}});
  GaleData g3 = gale_dual(d3);
  CHECK(g3.rays == std::vector<ZVec>{{1, 0}, {0, 1}, {1, -1}, {-1, 0}});
  const std::size_t perm[] = {3, 0, 1, 2};
  std::vector<IntMatrix> matches;
  for (int u00 = -2; u00 <= 2; ++u00)
    for (int u01 = -2; u01 <= 2; ++u01)
      for (int u10 = -2; u10 <= 2; ++u10)
        for (int u11 = -2; u11 <= 2; ++u11) {
          Int det = Int(u00) * u11 - Int(u01) * u10;
          if (det != 1 && det != -1) continue;
          bool all = true;
          for (std::size_t j = 0; j < 4 && all; ++j) {
            const ZVec& v = g.rays[perm[j]];
            all = Int(u00) * v[0] + Int(u01) * v[1] == g3.rays[j][0] &&
                  Int(u10) * v[0] + Int(u11) * v[1] == g3.rays[j][1];
          }
          if (all)
            matches.push_back(IntMatrix::from_rows({{u00, u01}, {u10, u11}}, 2));
        }
  REQUIRE(matches.size() == 1);
  CHECK(matches[0] == IntMatrix::from_rows({{0, 1}, {1, -1}}, 2));

  for (QVec c : {q({1, 0}), q({1, 1}), q({2, -1}), q({0, 1})})
    CHECK(divisor_polytope(g3, d3, c).section_count ==
          divisor_polytope(g, d, c).section_count);
}
