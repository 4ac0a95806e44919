#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mdm/cone.hpp"
#include "mdm/degrees.hpp"
#include "mdm/supports.hpp"

namespace mdm {

enum class WallKind { Fiber, Divisorial, Flip };

std::string wall_kind_name(WallKind k);

// Facet shared by two chambers, or by a chamber and the outside of Eff
// (b empty). new_exc lists the generator indices whose deletion cones stop
// containing the far side (0-based).
struct Wall {
  std::string a;
  std::string b;
  Cone cone;
  WallKind kind = WallKind::Flip;
  std::vector<std::size_t> new_exc;
};

struct Chamber {
  std::string id;
  Cone cone;
  bool in_mov = false;
  std::vector<std::size_t> exc;  // 0-based generator indices
  SupportFamily supports;
  ZVec sample;  // interior lattice point the chamber was grown from
};

struct ChamberComplex {
  DegreeMatrix deg;
  Cone eff;
  Cone mov;
  std::vector<Chamber> chambers;  // sorted by id
  std::vector<Wall> walls;
  std::string designated;  // id of the distinguished nef chamber
};

// Full chamber decomposition of the effective cone. A designated point, when
// given, must lie in the interior of a chamber inside the moving cone; by
// default the first such chamber is designated.
ChamberComplex chamber_complex(const DegreeMatrix& d,
                               const std::optional<QVec>& designated_point = {});

const Chamber& chamber_by_id(const ChamberComplex& cc, const std::string& id);

// Fan whose maximal cones are the chambers inside the moving cone.
Fan mov_fan(const ChamberComplex& cc);

struct WallClass {
  WallKind kind = WallKind::Flip;
  std::optional<std::size_t> divisor_index;  // 0-based, set for Divisorial
  std::string target;                        // far chamber id, when there is one
};

// Classifies a facet of a chamber inside the moving cone.
WallClass classify_wall(const ChamberComplex& cc, const std::string& chamber_id,
                        const Cone& facet);

struct Location {
  enum class Kind { OutsideEff, Chamber, Face } kind = Kind::OutsideEff;
  std::string chamber;                   // set for Kind::Chamber
  Cone face;                             // smallest containing face, for Kind::Face
  std::vector<std::string> incident;     // chambers whose closure holds the class
};

Location locate_class(const ChamberComplex& cc, const QVec& x);

}  // namespace mdm
