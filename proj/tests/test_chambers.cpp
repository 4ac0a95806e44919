#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mdm/chambers.hpp"
#include "mdm/errors.hpp"

using namespace mdm;
using namespace mdmtest;

namespace {
QVec q(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

const Chamber& chamber_with_cone(const ChamberComplex& cc, const Cone& c) {
  for (const auto& ch : cc.chambers)
    if (ch.cone == c) return ch;
  throw std::runtime_error("no chamber with the requested cone");
}
}  // namespace

TEST_CASE("chamber decomposition of the blown-up plane") {
  ChamberComplex cc = chamber_complex(blpp2_data());
  CHECK(cc.eff == cone_from_generators(2, {{1, -1}, {0, 1}}));
  CHECK(cc.mov == cone_from_generators(2, {{1, -1}, {1, 0}}));
  REQUIRE(cc.chambers.size() == 2);

  const Chamber& nef = chamber_with_cone(cc, cone_from_generators(2, {{1, -1}, {1, 0}}));
  CHECK(nef.in_mov);
  CHECK(nef.exc.empty());
  CHECK(nef.supports.minimal ==
        std::vector<std::vector<std::size_t>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

  const Chamber& far = chamber_with_cone(cc, cone_from_generators(2, {{1, 0}, {0, 1}}));
  CHECK(!far.in_mov);
  CHECK(far.exc == std::vector<std::size_t>{3});
  CHECK(far.supports.minimal ==
        std::vector<std::vector<std::size_t>>{{0, 3}, {1, 3}, {2, 3}});

  CHECK(cc.designated == nef.id);

  REQUIRE(cc.walls.size() == 3);
  int fiber = 0, divisorial = 0, flip = 0;
  for (const Wall& w : cc.walls) {
    if (w.kind == WallKind::Fiber) {
      ++fiber;
      CHECK(w.b.empty());
    }
    if (w.kind == WallKind::Divisorial) {
      ++divisorial;
      CHECK(w.a == nef.id);
      CHECK(w.b == far.id);
      CHECK(w.cone == cone_from_generators(2, {{1, 0}}));
      CHECK(w.new_exc == std::vector<std::size_t>{3});
    }
    if (w.kind == WallKind::Flip) ++flip;
  }
  CHECK(fiber == 2);
  CHECK(divisorial == 1);
  CHECK(flip == 0);
}

TEST_CASE("wall classification on the blown-up plane") {
  ChamberComplex cc = chamber_complex(blpp2_data());
  const Chamber& nef = chamber_with_cone(cc, cone_from_generators(2, {{1, -1}, {1, 0}}));
  const Chamber& far = chamber_with_cone(cc, cone_from_generators(2, {{1, 0}, {0, 1}}));

  WallClass toward_fiber = classify_wall(cc, nef.id, cone_from_generators(2, {{1, -1}}));
  CHECK(toward_fiber.kind == WallKind::Fiber);
  CHECK(toward_fiber.target.empty());

  WallClass toward_far = classify_wall(cc, nef.id, cone_from_generators(2, {{1, 0}}));
  CHECK(toward_far.kind == WallKind::Divisorial);
  REQUIRE(toward_far.divisor_index.has_value());
  CHECK(*toward_far.divisor_index == 3);
  CHECK(toward_far.target == far.id);

  CHECK_THROWS_AS(classify_wall(cc, nef.id, cone_from_generators(2, {{1, 1}})), NotAFacet);
  CHECK_THROWS_AS(classify_wall(cc, nef.id, cone_from_generators(2, {})), NotAFacet);
  CHECK_THROWS_AS(classify_wall(cc, far.id, cone_from_generators(2, {{1, 0}})),
                  InvariantViolation);
  CHECK_THROWS_AS(classify_wall(cc, "C9", cone_from_generators(2, {{1, 0}})),
                  InvariantViolation);
}

TEST_CASE("chamber decomposition of the flop") {
  ChamberComplex cc = chamber_complex(flop_data(), QVec{Rat(1)});
  REQUIRE(cc.chambers.size() == 2);
  const Chamber& plus = chamber_with_cone(cc, cone_from_generators(1, {{1}}));
  const Chamber& minus = chamber_with_cone(cc, cone_from_generators(1, {{-1}}));
  CHECK(plus.in_mov);
  CHECK(minus.in_mov);
  CHECK(cc.designated == plus.id);

  REQUIRE(cc.walls.size() == 1);
  CHECK(cc.walls[0].kind == WallKind::Flip);
  CHECK(is_zero_cone(cc.walls[0].cone));

  WallClass across = classify_wall(cc, plus.id, cone_from_generators(1, {}));
  CHECK(across.kind == WallKind::Flip);
  CHECK(across.target == minus.id);

  Fan f = mov_fan(cc);
  CHECK(f.cones.size() == 2);
  CHECK(f.adjacency == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(fan_validate(f).ok);
  CHECK(support_covers(f.cones, cc.mov));
}

TEST_CASE("one-chamber fixtures") {
  ChamberComplex p2 = chamber_complex(p2_data());
  REQUIRE(p2.chambers.size() == 1);
  CHECK(p2.chambers[0].in_mov);
  CHECK(p2.chambers[0].cone == cone_from_generators(1, {{1}}));
  REQUIRE(p2.walls.size() == 1);
  CHECK(p2.walls[0].kind == WallKind::Fiber);

  ChamberComplex pp = chamber_complex(p1xp1_data());
  REQUIRE(pp.chambers.size() == 1);
  CHECK(pp.chambers[0].in_mov);
  CHECK(pp.walls.size() == 2);
  for (const Wall& w : pp.walls) CHECK(w.kind == WallKind::Fiber);
}

TEST_CASE("rejection when no model is projective") {
  CHECK_THROWS_AS(chamber_complex(degree_matrix({{1, 0}, {0, 1}})), NoProjectiveModel);
}

TEST_CASE("designated chamber selection") {
  CHECK_THROWS_AS(chamber_complex(blpp2_data(), q({1, 1})), InvariantViolation);
  CHECK_THROWS_AS(chamber_complex(blpp2_data(), q({1, 0})), InvariantViolation);
  CHECK_THROWS_AS(chamber_complex(blpp2_data(), q({1})), DimensionMismatch);
  ChamberComplex cc = chamber_complex(blpp2_data(), q({2, -1}));
  CHECK(cc.designated == chamber_with_cone(cc, cone_from_generators(2, {{1, -1}, {1, 0}})).id);

  ChamberComplex fl = chamber_complex(flop_data(), QVec{Rat(-2)});
  CHECK(fl.designated == chamber_with_cone(fl, cone_from_generators(1, {{-1}})).id);
}

TEST_CASE("class location") {
  ChamberComplex cc = chamber_complex(blpp2_data());
  const Chamber& nef = chamber_with_cone(cc, cone_from_generators(2, {{1, -1}, {1, 0}}));

  Location in = locate_class(cc, q({2, -1}));
  CHECK(in.kind == Location::Kind::Chamber);
  CHECK(in.chamber == nef.id);

  Location wall = locate_class(cc, q({1, 0}));
  CHECK(wall.kind == Location::Kind::Face);
  CHECK(wall.face == cone_from_generators(2, {{1, 0}}));
  CHECK(wall.incident.size() == 2);

  Location edge = locate_class(cc, q({0, 1}));
  CHECK(edge.kind == Location::Kind::Face);
  CHECK(edge.face == cone_from_generators(2, {{0, 1}}));
  CHECK(edge.incident.size() == 1);

  Location origin = locate_class(cc, q({0, 0}));
  CHECK(origin.kind == Location::Kind::Face);
  CHECK(is_zero_cone(origin.face));
  CHECK(origin.incident.size() == 2);

  Location out = locate_class(cc, q({0, -1}));
  CHECK(out.kind == Location::Kind::OutsideEff);
  Location out2 = locate_class(cc, q({-1, 3}));
  CHECK(out2.kind == Location::Kind::OutsideEff);
}

TEST_CASE("chamber ids are canonical") {
  ChamberComplex a = chamber_complex(blpp2_data());
  ChamberComplex b = chamber_complex(blpp2_data());
  REQUIRE(a.chambers.size() == b.chambers.size());
  for (std::size_t i = 0; i < a.chambers.size(); ++i) {
    CHECK(a.chambers[i].id == b.chambers[i].id);
    CHECK(a.chambers[i].cone == b.chambers[i].cone);
  }
}

TEST_CASE("decomposition matches the brute-force refinement") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    DegreeMatrix d = random_presentation(rng);
    ChamberComplex cc = chamber_complex(d);
    CHECK(chamber_keys(cc) == refinement_keys(d));
    for (const auto& ch : cc.chambers) {
      Location loc = locate_class(cc, to_rational(ch.sample));
      CHECK(loc.kind == Location::Kind::Chamber);
      CHECK(loc.chamber == ch.id);
    }
    Fan f = mov_fan(cc);
    CHECK(fan_validate(f).ok);
    CHECK(support_covers(f.cones, cc.mov));
  }
}
