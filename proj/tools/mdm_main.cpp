#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mdm/errors.hpp"
#include "mdm/report.hpp"

using namespace mdm;

namespace {

struct Budget {
  std::size_t points = 1000000;
  std::size_t multiples = 12;
};

Budget parse_budget(const std::string& text) {
  Budget b;
  if (text.empty()) return b;
  const auto comma = text.find(',');
  try {
    b.points = std::stoull(text.substr(0, comma));
    if (comma != std::string::npos) b.multiples = std::stoull(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("--budget expects POINTS or POINTS,MULTIPLES");
  }
  return b;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mori chambers, wall walks and toric models of a torus-graded Cox ring"};
  app.require_subcommand(1);

  std::string input, divisor, ample, start, face, character, pair, chamber_id;
  std::string budget_text, dot_path;

  CLI::App* chambers = app.add_subcommand(
      "chambers", "chamber decomposition of the effective cone, walls included");
  chambers->add_option("input", input, "input JSON file")->required();
  chambers->add_option("--dot", dot_path, "write the wall graph to this file");

  CLI::App* mov = app.add_subcommand("mov", "fan structure on the moving cone");
  mov->add_option("input", input, "input JSON file")->required();

  CLI::App* mmp =
      app.add_subcommand("mmp", "minimal model program directed by a divisor class");
  mmp->add_option("input", input, "input JSON file")->required();
  mmp->add_option("--divisor", divisor, "directing class, comma separated")->required();
  mmp->add_option("--ample", ample, "interior starting polarization");
  mmp->add_option("--start", start, "starting chamber id (default: designated)");

  CLI::App* relative =
      app.add_subcommand("relative", "relative picture over a face of the nef chamber");
  relative->add_option("input", input, "input JSON file")->required();
  relative->add_option("--face", face, "face generators, ';' separated vectors")->required();

  CLI::App* vgit = app.add_subcommand("vgit", "semistability data for a character");
  vgit->add_option("input", input, "input JSON file")->required();
  vgit->add_option("--character", character, "character, comma separated")->required();
  vgit->add_option("--pair", pair, "second character to compare against");

  CLI::App* model = app.add_subcommand("model", "toric model fan of a chamber");
  model->add_option("input", input, "input JSON file")->required();
  model->add_option("--chamber", chamber_id, "chamber id")->required();

  CLI::App* classify = app.add_subcommand("classify", "base locus class of a divisor");
  classify->add_option("input", input, "input JSON file")->required();
  classify->add_option("--divisor", divisor, "lattice class, comma separated")->required();
  classify->add_option("--budget", budget_text, "POINTS or POINTS,MULTIPLES");

  CLI::App* sections =
      app.add_subcommand("sections", "divisor polytope, sections and fixed part");
  sections->add_option("input", input, "input JSON file")->required();
  sections->add_option("--divisor", divisor, "lattice class, comma separated")->required();
  sections->add_option("--budget", budget_text, "POINTS or POINTS,MULTIPLES");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const InputSpec in = parse_input(input);
    const DegreeMatrix d = input_degrees(in);
    const Budget budget = parse_budget(budget_text);
    Json out;

    if (chambers->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      out = chambers_json(cc);
      if (!dot_path.empty()) write_text(dot_path, dot_graph(cc));
    } else if (mov->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      out["mov"] = cone_json(cc.mov);
      out["fan"] = fan_json(mov_fan(cc));
    } else if (mmp->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      std::optional<QVec> amp;
      if (!ample.empty()) amp = parse_class(ample);
      const std::string from = start.empty() ? cc.designated : start;
      out = mmp_json(cc, run_mmp(cc, from, parse_class(divisor), amp));
    } else if (relative->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      out = relative_json(cc, parse_face(face));
    } else if (vgit->parsed()) {
      std::optional<QVec> second;
      if (!pair.empty()) second = parse_class(pair);
      out = vgit_json(d, parse_class(character), second);
    } else if (model->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      out = model_json(gale_dual(d), d, cc, chamber_id);
    } else if (classify->parsed()) {
      ChamberComplex cc = chamber_complex(d, in.designated_chamber);
      out = classify_json(gale_dual(d), d, cc, parse_class(divisor), budget.multiples,
                          budget.points);
    } else if (sections->parsed()) {
      out = sections_json(gale_dual(d), d, parse_class(divisor), budget.points);
    }

    std::cout << dump_report(out);
    return 0;
  } catch (const Error& e) {
    std::cerr << dump_report(error_json(e));
    return 1;
  } catch (const std::exception& e) {
    Json j;
    Json inner;
    inner["kind"] = "Internal";
    inner["what"] = e.what();
    j["error"] = std::move(inner);
    std::cerr << dump_report(j);
    return 1;
  }
}
