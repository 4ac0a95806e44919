#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdm/chambers.hpp"

namespace mdm {

// Data of an elementary divisorial contraction: the grading of the contracted
// model together with the quotient q: Z^r -> Z^{r-1} killing the contracted
// class.
struct Reduction {
  DegreeMatrix reduced;
  IntMatrix q;
  std::size_t dropped = 0;  // 0-based index of the contracted generator
};

Reduction divisorial_reduction(const ChamberComplex& cc, std::size_t i);

struct MmpStep {
  WallKind kind = WallKind::Flip;
  Rat t;          // parameter of the crossing on the segment from ample to divisor
  QVec crossing;  // the wall point hit
  Cone wall;
  std::string from;
  std::string to;  // far chamber; empty when the wall leads out of Eff
  std::optional<std::size_t> contracted;  // 0-based, for divisorial steps

  bool operator==(const MmpStep&) const = default;
};

// One rank level of the program. After a divisorial step the walk restarts in
// the contracted model with the projected segment.
struct MmpStage {
  DegreeMatrix deg;
  std::string start;
  QVec ample;    // the ample point actually walked (perturbed one if any)
  QVec divisor;
  bool perturbed = false;
  Rat epsilon;   // 0 unless perturbed
  std::vector<MmpStep> steps;

  bool operator==(const MmpStage&) const = default;
};

struct MmpOutcome {
  enum class Kind { GoodMinimalModel, MoriFiberSpace } kind = Kind::GoodMinimalModel;
  std::string final_chamber;  // empty when contraction reached rank zero
  QVec final_class;           // divisor class on the last model
  Cone fiber_wall;            // face giving the fiber structure, for MoriFiberSpace

  bool operator==(const MmpOutcome&) const = default;
};

struct MmpTrace {
  std::vector<MmpStage> stages;
  MmpOutcome outcome;

  bool operator==(const MmpTrace&) const = default;
};

// Runs the program directed by `divisor` from the given chamber. The walk
// follows the straight segment from the ample point (default: the canonical
// interior point of the start chamber) and crosses one wall at a time;
// non-generic segments are retried from a deterministically perturbed ample
// point, recorded on the stage.
MmpTrace run_mmp(const ChamberComplex& cc, const std::string& start, const QVec& divisor,
                 const std::optional<QVec>& ample = {});

// Reruns the walk with the recorded stage-one inputs and checks that every
// step and the outcome reproduce exactly.
bool mmp_replay(const ChamberComplex& cc, const MmpTrace& trace);

}  // namespace mdm
