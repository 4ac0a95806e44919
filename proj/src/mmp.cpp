#include "mdm/mmp.hpp"

#include <set>

#include "mdm/errors.hpp"

namespace mdm {

Reduction divisorial_reduction(const ChamberComplex& cc, std::size_t i) {
  if (i >= cc.deg.n)
    throw DimensionMismatch("no generator with index " + std::to_string(i + 1));
  bool gained = false;
  for (const Wall& w : cc.walls)
    if (w.kind == WallKind::Divisorial && chamber_by_id(cc, w.a).in_mov &&
        w.new_exc == std::vector<std::size_t>{i}) {
      gained = true;
      break;
    }
  if (!gained)
    throw NotContractible("generator " + std::to_string(i + 1) +
                          " is not contracted across any divisorial wall");
  if (cc.deg.r == 1)
    throw InvariantViolation("contraction would drop the grading rank to zero");
  Reduction red;
  red.dropped = i;
  red.q = span_kernel(IntMatrix::from_rows({cc.deg.cols[i]}, cc.deg.r));
  std::vector<ZVec> cols;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < cc.deg.n; ++j) {
    if (j == i) continue;
    cols.push_back(mul(red.q, cc.deg.cols[j]));
    labels.push_back(cc.deg.labels[j]);
  }
  red.reduced = degree_matrix(std::move(cols), std::move(labels));
  return red;
}

namespace {

struct StageEnd {
  enum class Kind { Gmm, Fiber, Divisorial } kind = Kind::Gmm;
  std::string chamber;      // where the walk stood when it ended
  Cone wall;                // for Fiber and Divisorial
  std::size_t contracted = 0;
  QVec crossing;
};

QVec segment_point(const QVec& a, const QVec& d, const Rat& t) {
  QVec x(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) x[j] = a[j] + t * (d[j] - a[j]);
  return x;
}

// One straight walk at fixed rank. Returns nothing when the segment is
// non-generic (corner hit or simultaneous walls) and needs a perturbed start.
std::optional<std::pair<std::vector<MmpStep>, StageEnd>> try_walk(
    const ChamberComplex& cc, const std::string& start, const QVec& a, const QVec& d) {
  const Chamber* cur = &chamber_by_id(cc, start);
  std::set<std::string> visited{cur->id};
  std::vector<MmpStep> steps;
  Rat tprev(0);
  for (;;) {
    if (contains(cur->cone, d)) {
      StageEnd end;
      end.kind = StageEnd::Kind::Gmm;
      end.chamber = cur->id;
      return std::make_pair(steps, end);
    }
    const ZVec* exit_facet = nullptr;
    Rat texit;
    bool tie = false;
    for (const ZVec& g : cur->cone.facets) {
      Rat vd = dot(g, d);
      if (vd >= 0) continue;
      Rat va = dot(g, a);
      Rat t = va / (va - vd);
      if (!exit_facet || t < texit) {
        exit_facet = &g;
        texit = t;
        tie = false;
      } else if (t == texit) {
        tie = true;
      }
    }
    if (!exit_facet)
      throw InternalInconsistency("no exit facet although the divisor lies outside");
    if (tie || texit <= tprev) return std::nullopt;
    QVec x = segment_point(a, d, texit);
    std::vector<ZVec> eqs = cur->cone.span_normals.row_list();
    eqs.push_back(*exit_facet);
    Cone wall = cone_from_system(cc.deg.r, cur->cone.facets, eqs);
    if (!in_relative_interior(wall, x)) return std::nullopt;
    WallClass wc = classify_wall(cc, cur->id, wall);
    MmpStep st;
    st.kind = wc.kind;
    st.t = texit;
    st.crossing = x;
    st.wall = wall;
    st.from = cur->id;
    st.to = wc.target;
    st.contracted = wc.divisor_index;
    steps.push_back(std::move(st));
    StageEnd end;
    end.chamber = cur->id;
    end.wall = wall;
    end.crossing = x;
    switch (wc.kind) {
      case WallKind::Fiber:
        end.kind = StageEnd::Kind::Fiber;
        return std::make_pair(steps, end);
      case WallKind::Divisorial:
        end.kind = StageEnd::Kind::Divisorial;
        end.contracted = *wc.divisor_index;
        return std::make_pair(steps, end);
      case WallKind::Flip:
        cur = &chamber_by_id(cc, wc.target);
        if (!visited.insert(cur->id).second)
          throw InternalInconsistency("flip walk revisited chamber " + cur->id);
        tprev = texit;
        break;
    }
  }
}

}  // namespace

MmpTrace run_mmp(const ChamberComplex& cc, const std::string& start, const QVec& divisor,
                 const std::optional<QVec>& ample) {
  const Chamber& sc = chamber_by_id(cc, start);
  if (!sc.in_mov)
    throw InvariantViolation("start chamber " + start + " is not inside the moving cone");
  if (divisor.size() != cc.deg.r)
    throw DimensionMismatch("divisor length does not match the grading rank");
  QVec a = ample ? *ample : to_rational(relint_point(sc.cone));
  if (a.size() != cc.deg.r)
    throw DimensionMismatch("ample point length does not match the grading rank");
  if (!in_relative_interior(sc.cone, a))
    throw AmpleNotInterior("ample point is not interior to chamber " + start);

  MmpTrace trace;
  const std::size_t max_stages = cc.deg.r;
  ChamberComplex stage_cc = cc;
  std::string stage_start = start;
  QVec stage_a = a;
  QVec stage_d = divisor;
  for (;;) {
    MmpStage st;
    st.deg = stage_cc.deg;
    st.start = stage_start;
    st.ample = stage_a;
    st.divisor = stage_d;
    st.epsilon = Rat(0);
    auto walked = try_walk(stage_cc, stage_start, stage_a, stage_d);
    if (!walked) {
      // Slide the ample point toward boundary generators of its chamber until
      // the segment meets walls one at a time. Directions cycle so a tie that
      // is stable along one generator gets broken by another.
      const Cone& home = chamber_by_id(stage_cc, stage_start).cone;
      std::vector<ZVec> dirs = home.rays;
      for (std::size_t j = 0; j < home.lineality.rows; ++j) {
        dirs.push_back(home.lineality.row(j));
        dirs.push_back(negate(home.lineality.row(j)));
      }
      if (dirs.empty()) dirs.push_back(relint_point(home));
      for (int k = 1; k <= 96 && !walked; ++k) {
        const ZVec& delta = dirs[(k - 1) % dirs.size()];
        Int den = Int(1) << ((k - 1) / dirs.size() + 1);
        Rat eps = Rat(1) / Rat(den);
        QVec ap(stage_a.size());
        for (std::size_t j = 0; j < ap.size(); ++j) ap[j] = stage_a[j] + eps * delta[j];
        walked = try_walk(stage_cc, stage_start, ap, stage_d);
        if (walked) {
          st.perturbed = true;
          st.epsilon = eps;
          st.ample = ap;
        }
      }
      if (!walked)
        throw InternalInconsistency("no generic segment found after perturbation");
    }
    st.steps = walked->first;
    trace.stages.push_back(st);
    if (trace.stages.size() > max_stages)
      throw InternalInconsistency("more contraction stages than the grading rank");

    const StageEnd& end = walked->second;
    if (end.kind == StageEnd::Kind::Gmm) {
      trace.outcome.kind = MmpOutcome::Kind::GoodMinimalModel;
      trace.outcome.final_chamber = end.chamber;
      trace.outcome.final_class = stage_d;
      return trace;
    }
    if (end.kind == StageEnd::Kind::Fiber) {
      trace.outcome.kind = MmpOutcome::Kind::MoriFiberSpace;
      trace.outcome.final_chamber = end.chamber;
      trace.outcome.final_class = stage_d;
      trace.outcome.fiber_wall = end.wall;
      return trace;
    }
    if (stage_cc.deg.r == 1) {
      // rank drops to zero: nothing is left to make positive
      trace.outcome.kind = MmpOutcome::Kind::GoodMinimalModel;
      trace.outcome.final_chamber = "";
      trace.outcome.final_class = QVec{};
      return trace;
    }
    Reduction red = divisorial_reduction(stage_cc, end.contracted);
    QVec next_a = mul(red.q, end.crossing);
    QVec next_d = mul(red.q, stage_d);
    ChamberComplex next_cc = chamber_complex(red.reduced);
    std::string next_start;
    for (const auto& ch : next_cc.chambers)
      if (ch.in_mov && in_relative_interior(ch.cone, next_a)) {
        next_start = ch.id;
        break;
      }
    if (next_start.empty())
      throw InternalInconsistency(
          "image of the contracted wall is not interior to a nef chamber");
    stage_cc = std::move(next_cc);
    stage_start = std::move(next_start);
    stage_a = std::move(next_a);
    stage_d = std::move(next_d);
  }
}

bool mmp_replay(const ChamberComplex& cc, const MmpTrace& trace) {
  if (trace.stages.empty()) return false;
  const MmpStage& first = trace.stages[0];
  // Rerun from the ample point that was actually walked; that segment is
  // already generic, so the perturbation annotations are not expected back.
  MmpTrace again = run_mmp(cc, first.start, first.divisor, first.ample);
  if (!(again.outcome == trace.outcome)) return false;
  if (again.stages.size() != trace.stages.size()) return false;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const MmpStage& a = again.stages[i];
    const MmpStage& b = trace.stages[i];
    if (!(a.deg == b.deg && a.start == b.start && a.ample == b.ample &&
          a.divisor == b.divisor && a.steps == b.steps))
      return false;
  }
  return true;
}

}  // namespace mdm
