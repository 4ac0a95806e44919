#include "mdm/report.hpp"

#include <fstream>
#include <sstream>

#include "mdm/errors.hpp"

namespace mdm {

namespace {

Json show_array(const ZVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(show(x));
  return a;
}

Json show_array(const QVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(show(x));
  return a;
}

Json show_rows(const std::vector<ZVec>& rows) {
  Json a = Json::array();
  for (const ZVec& r : rows) a.push_back(show_array(r));
  return a;
}

Json one_based(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

Json supports_json(const SupportFamily& fam) {
  Json a = Json::array();
  for (const auto& s : fam.minimal) a.push_back(one_based(s));
  return a;
}

std::string outcome_name(MmpOutcome::Kind k) {
  return k == MmpOutcome::Kind::GoodMinimalModel ? "good_minimal_model"
                                                 : "mori_fiber_space";
}

Int parse_integer(const std::string& s) {
  Rat r = parse_rational(s);
  if (denominator(r) != 1) throw ParseError("not an integer: '" + s + "'");
  return numerator(r);
}

Int json_integer(const Json& e, const std::string& where) {
  if (e.is_number_integer()) return Int(e.get<std::int64_t>());
  if (e.is_string()) return parse_integer(e.get<std::string>());
  throw ParseError(where + " must be an integer or a quoted exact integer");
}

Rat json_rational(const Json& e, const std::string& where) {
  if (e.is_number_integer()) return Rat(e.get<std::int64_t>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw ParseError(where + " must be an integer or a quoted exact rational");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

InputSpec parse_input_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "n" && k != "rank" && k != "degrees" && k != "labels" &&
        k != "designated_chamber")
      throw ParseError(origin + ": unknown field '" + k + "'");
  }
  for (const char* k : {"n", "rank", "degrees"})
    if (!j.contains(k))
      throw ParseError(origin + ": missing field '" + std::string(k) + "'");
  if (!j["n"].is_number_unsigned() || !j["rank"].is_number_unsigned())
    throw ParseError(origin + ": 'n' and 'rank' must be nonnegative integers");

  InputSpec in;
  in.n = j["n"].get<std::size_t>();
  in.rank = j["rank"].get<std::size_t>();
  if (!j["degrees"].is_array())
    throw ParseError(origin + ": 'degrees' must be an array of integer vectors");
  if (j["degrees"].size() != in.n)
    throw ParseError(origin + ": declared n=" + std::to_string(in.n) + " but 'degrees' has " +
                     std::to_string(j["degrees"].size()) + " entries");
  for (std::size_t i = 0; i < in.n; ++i) {
    const Json& row = j["degrees"][i];
    const std::string where = origin + ": degrees[" + std::to_string(i + 1) + "]";
    if (!row.is_array() || row.size() != in.rank)
      throw ParseError(where + " must be a vector of length " + std::to_string(in.rank));
    ZVec col;
    for (const Json& e : row) col.push_back(json_integer(e, where));
    in.degrees.push_back(std::move(col));
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw ParseError(origin + ": 'labels' must be an array of strings");
    for (const Json& e : j["labels"]) {
      if (!e.is_string()) throw ParseError(origin + ": 'labels' must be an array of strings");
      in.labels.push_back(e.get<std::string>());
    }
  }
  if (j.contains("designated_chamber")) {
    const Json& dc = j["designated_chamber"];
    if (!dc.is_array())
      throw ParseError(origin + ": 'designated_chamber' must be a vector");
    QVec p;
    for (const Json& e : dc)
      p.push_back(json_rational(e, origin + ": designated_chamber"));
    in.designated_chamber = std::move(p);
  }
  return in;
}

InputSpec parse_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input_text(buf.str(), path);
}

DegreeMatrix input_degrees(const InputSpec& in) {
  DegreeMatrix d = degree_matrix(in.degrees, in.labels);
  if (d.r != in.rank)
    throw ParseError("declared rank=" + std::to_string(in.rank) + " but the columns live in Z^" +
                     std::to_string(d.r));
  return d;
}

QVec parse_class(const std::string& text) {
  QVec v;
  for (const std::string& part : split(text, ','))
    v.push_back(parse_rational(part));
  return v;
}

std::vector<QVec> parse_face(const std::string& text) {
  std::vector<QVec> gens;
  for (const std::string& part : split(text, ';')) gens.push_back(parse_class(part));
  return gens;
}

Json cone_json(const Cone& c) {
  Json j;
  j["ambient"] = c.dim;
  j["dim"] = cone_dim(c);
  j["rays"] = show_rows(c.rays);
  j["lineality"] = show_rows(c.lineality.row_list());
  j["facets"] = show_rows(c.facets);
  j["span_normals"] = show_rows(c.span_normals.row_list());
  return j;
}

Json fan_json(const Fan& f) {
  Json j;
  j["dim"] = f.dim;
  Json cones = Json::array();
  for (const Cone& c : f.cones) cones.push_back(cone_json(c));
  j["cones"] = std::move(cones);
  Json adj = Json::array();
  for (const auto& [a, b] : f.adjacency) adj.push_back(Json::array({a, b}));
  j["adjacency"] = std::move(adj);
  return j;
}

Json grading_json(const DegreeMatrix& d) {
  Json j;
  j["n"] = d.n;
  j["rank"] = d.r;
  j["degrees"] = show_rows(d.cols);
  j["labels"] = d.labels;
  return j;
}

Json chambers_json(const ChamberComplex& cc) {
  Json j;
  j["grading"] = grading_json(cc.deg);
  j["eff"] = cone_json(cc.eff);
  j["mov"] = cone_json(cc.mov);
  j["designated"] = cc.designated;
  Json chambers = Json::array();
  for (const Chamber& ch : cc.chambers) {
    Json c;
    c["id"] = ch.id;
    c["cone"] = cone_json(ch.cone);
    c["in_mov"] = ch.in_mov;
    c["exc"] = one_based(ch.exc);
    c["supports"] = supports_json(ch.supports);
    c["sample"] = show_array(ch.sample);
    chambers.push_back(std::move(c));
  }
  j["chambers"] = std::move(chambers);
  Json walls = Json::array();
  for (const Wall& w : cc.walls) {
    Json wj;
    Json between = Json::array({w.a});
    if (!w.b.empty()) between.push_back(w.b);
    wj["between"] = std::move(between);
    wj["kind"] = wall_kind_name(w.kind);
    wj["cone"] = cone_json(w.cone);
    wj["new_exc"] = one_based(w.new_exc);
    walls.push_back(std::move(wj));
  }
  j["walls"] = std::move(walls);
  return j;
}

Json mmp_json(const ChamberComplex& cc, const MmpTrace& trace) {
  if (!mmp_replay(cc, trace))
    throw InternalInconsistency("the recorded walk does not replay");
  Json j;
  Json stages = Json::array();
  for (const MmpStage& st : trace.stages) {
    Json sj;
    sj["grading"] = grading_json(st.deg);
    sj["start"] = st.start;
    sj["ample"] = show_array(st.ample);
    sj["divisor"] = show_array(st.divisor);
    sj["perturbed"] = st.perturbed;
    sj["epsilon"] = show(st.epsilon);
    Json steps = Json::array();
    for (const MmpStep& s : st.steps) {
      Json stepj;
      stepj["kind"] = wall_kind_name(s.kind);
      stepj["t"] = show(s.t);
      stepj["crossing"] = show_array(s.crossing);
      stepj["wall"] = cone_json(s.wall);
      stepj["from"] = s.from;
      stepj["to"] = s.to;
      stepj["contracted"] = s.contracted ? Json(*s.contracted + 1) : Json(nullptr);
      steps.push_back(std::move(stepj));
    }
    sj["steps"] = std::move(steps);
    stages.push_back(std::move(sj));
  }
  j["stages"] = std::move(stages);
  Json oj;
  oj["kind"] = outcome_name(trace.outcome.kind);
  oj["final_chamber"] = trace.outcome.final_chamber;
  oj["final_class"] = show_array(trace.outcome.final_class);
  oj["fiber_wall"] = trace.outcome.kind == MmpOutcome::Kind::MoriFiberSpace
                         ? cone_json(trace.outcome.fiber_wall)
                         : Json(nullptr);
  j["outcome"] = std::move(oj);
  j["replay"] = true;
  return j;
}

Json relative_json(const ChamberComplex& cc, const std::vector<QVec>& face) {
  RelativeContext ctx = relative_context(cc, face);
  AxiomReport ax = mdm_axiom_report(ctx, cc);
  if (!ax.q_factorial_model_exists || !ax.nef_polyhedral ||
      !ax.mov_covered_by_sqm_nef_cones || !ax.fan_valid)
    throw InternalInconsistency("relative chamber model axiom failed over the given face");
  Json j;
  j["base_face"] = cone_json(ctx.base_face);
  j["quotient_map"] = show_rows(ctx.quotient_map.row_list());
  j["relative_dim"] = ctx.relative_dim;
  j["relative_eff"] = cone_json(relative_cone(ctx, cc.eff));
  j["relative_mov"] = cone_json(relative_cone(ctx, cc.mov));
  const Cone& nef = chamber_by_id(cc, cc.designated).cone;
  j["relative_nef"] =
      subcone_of(ctx.base_face, nef) ? cone_json(relative_cone(ctx, nef)) : Json(nullptr);
  j["star"] = fan_json(relative_mov_fan(ctx, cc));
  Json axj;
  axj["q_factorial_model_exists"] = ax.q_factorial_model_exists;
  axj["nef_polyhedral"] = ax.nef_polyhedral;
  axj["mov_covered_by_sqm_nef_cones"] = ax.mov_covered_by_sqm_nef_cones;
  axj["fan_valid"] = ax.fan_valid;
  j["axioms"] = std::move(axj);
  return j;
}

namespace {

Json stability_json(const StabilityReport& rep) {
  Json j;
  j["weight_cone_member"] = rep.weight_cone_member;
  j["ss_equals_s"] = rep.ss_equals_s;
  j["unstable_codim"] = rep.unstable_codim ? Json(*rep.unstable_codim) : Json(nullptr);
  j["isotropy_order"] = rep.isotropy_order ? Json(show(*rep.isotropy_order)) : Json(nullptr);
  return j;
}

}  // namespace

Json vgit_json(const DegreeMatrix& d, const QVec& chi, const std::optional<QVec>& pair) {
  Json j;
  j["character"] = show_array(chi);
  j["weight_cone"] = cone_json(weight_cone(d));
  j["report"] = stability_json(stability_report(d, chi));
  j["supports"] = supports_json(semistable_supports(d, chi));
  if (pair) {
    j["pair_character"] = show_array(*pair);
    j["pair_report"] = stability_json(stability_report(d, *pair));
    j["pair_supports"] = supports_json(semistable_supports(d, *pair));
    j["git_equivalent"] = git_equivalent(d, chi, *pair);
  }
  return j;
}

Json model_json(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
                const std::string& chamber_id) {
  Json j;
  j["chamber"] = chamber_id;
  j["fan"] = fan_json(model_fan(g, d, cc, chamber_id));
  return j;
}

Json classify_json(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
                   const QVec& cls, std::size_t multiple_bound, std::size_t budget) {
  Json j;
  j["class"] = show_array(cls);
  j["kind"] = base_locus_kind_name(base_locus_class(g, d, cc, cls, multiple_bound, budget));
  Location loc = locate_class(cc, cls);
  Json lj;
  switch (loc.kind) {
    case Location::Kind::OutsideEff:
      lj["kind"] = "outside_eff";
      break;
    case Location::Kind::Chamber:
      lj["kind"] = "chamber";
      lj["chamber"] = loc.chamber;
      break;
    case Location::Kind::Face:
      lj["kind"] = "face";
      lj["face"] = cone_json(loc.face);
      lj["incident"] = loc.incident;
      break;
  }
  j["location"] = std::move(lj);
  return j;
}

Json sections_json(const GaleData& g, const DegreeMatrix& d, const QVec& cls,
                   std::size_t budget) {
  DivisorPolytope dp = divisor_polytope(g, d, cls, budget);
  Json j;
  j["class"] = show_array(dp.cls);
  j["lift"] = show_array(dp.lift);
  j["empty"] = dp.p.empty;
  j["bounded"] = dp.p.bounded;
  j["section_count"] = dp.section_count ? Json(show(*dp.section_count)) : Json(nullptr);
  j["points"] = show_rows(dp.points);
  const bool effective =
      !dp.p.empty && (!dp.section_count || *dp.section_count > 0);
  j["effective"] = effective;
  if (effective) {
    MovableFixed mf = movable_fixed_decomposition(g, d, cls, budget);
    j["movable"] = show_array(mf.movable);
    j["fixed"] = show_array(mf.fixed);
  }
  return j;
}

std::string dot_graph(const ChamberComplex& cc) {
  std::ostringstream os;
  os << "graph mori_chambers {\n";
  os << "  node [shape=box];\n";
  for (const Chamber& ch : cc.chambers) {
    os << "  \"" << ch.id << "\" [label=\"" << ch.id;
    if (ch.in_mov) os << " mov";
    if (ch.id == cc.designated) os << " nef";
    os << "\"];\n";
  }
  for (const Wall& w : cc.walls) {
    if (w.b.empty()) continue;
    os << "  \"" << w.a << "\" -- \"" << w.b << "\" [label=\"" << wall_kind_name(w.kind);
    if (w.kind == WallKind::Divisorial) {
      os << ":";
      for (std::size_t k = 0; k < w.new_exc.size(); ++k)
        os << (k ? "," : "") << w.new_exc[k] + 1;
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

namespace {

ZVec zvec_of(const Json& arr) {
  ZVec v;
  for (const Json& e : arr) v.push_back(parse_integer(e.get<std::string>()));
  return v;
}

std::vector<ZVec> zrows_of(const Json& arr) {
  std::vector<ZVec> rows;
  for (const Json& e : arr) rows.push_back(zvec_of(e));
  return rows;
}

bool looks_like_cone(const Json& j) {
  return j.is_object() && j.contains("ambient") && j.contains("rays") &&
         j.contains("facets") && j.contains("lineality") && j.contains("span_normals");
}

bool cone_rebuilds(const Json& j) {
  const std::size_t dim = j["ambient"].get<std::size_t>();
  Cone gens = cone_from_generators(dim, zrows_of(j["rays"]), zrows_of(j["lineality"]));
  Cone sys = cone_from_system(dim, zrows_of(j["facets"]), zrows_of(j["span_normals"]));
  return gens == sys && cone_json(gens) == j;
}

bool walk_cones(const Json& j) {
  if (looks_like_cone(j) && !cone_rebuilds(j)) return false;
  if (j.is_object() || j.is_array())
    for (const Json& e : j)
      if (!walk_cones(e)) return false;
  return true;
}

}  // namespace

bool round_trip_ok(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    return false;
  }
  return dump_report(j) == text && walk_cones(j);
}

Json error_json(const Error& e) {
  std::string what = e.what();
  const std::string prefix = e.kind + ": ";
  if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
  Json j;
  Json inner;
  inner["kind"] = e.kind;
  inner["what"] = what;
  j["error"] = std::move(inner);
  return j;
}

}  // namespace mdm
