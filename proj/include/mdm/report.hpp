#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "mdm/chambers.hpp"
#include "mdm/errors.hpp"
#include "mdm/mmp.hpp"
#include "mdm/relative.hpp"
#include "mdm/toric.hpp"
#include "mdm/vgit.hpp"

namespace mdm {

using Json = nlohmann::json;

// Mirror of the grading data as read from disk. Degrees may be given as JSON
// integers or as quoted exact integers; designated_chamber, when present, is
// an interior point of the intended nef chamber.
struct InputSpec {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<ZVec> degrees;
  std::vector<std::string> labels;
  std::optional<QVec> designated_chamber;

  bool operator==(const InputSpec&) const = default;
};

InputSpec parse_input_text(const std::string& text, const std::string& origin);
InputSpec parse_input(const std::string& path);
DegreeMatrix input_degrees(const InputSpec& in);

// Comma-separated exact rationals; parse_face splits on ';' first.
QVec parse_class(const std::string& text);
std::vector<QVec> parse_face(const std::string& text);

// Every number is rendered exactly through show(); cones carry both the
// generator and the inequality presentation.
Json cone_json(const Cone& c);
Json fan_json(const Fan& f);
Json grading_json(const DegreeMatrix& d);
Json chambers_json(const ChamberComplex& cc);
Json mmp_json(const ChamberComplex& cc, const MmpTrace& trace);
Json relative_json(const ChamberComplex& cc, const std::vector<QVec>& face);
Json vgit_json(const DegreeMatrix& d, const QVec& chi, const std::optional<QVec>& pair);
Json model_json(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
                const std::string& chamber_id);
Json classify_json(const GaleData& g, const DegreeMatrix& d, const ChamberComplex& cc,
                   const QVec& cls, std::size_t multiple_bound, std::size_t budget);
Json sections_json(const GaleData& g, const DegreeMatrix& d, const QVec& cls,
                   std::size_t budget);

// Chambers as nodes, interior walls as labeled edges.
std::string dot_graph(const ChamberComplex& cc);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump_report(const Json& j);

// Reparse-reserialize identity, plus reconstruction of every serialized cone
// from each of its two presentations.
bool round_trip_ok(const std::string& text);

Json error_json(const Error& e);

}  // namespace mdm
