// Copyright 2026 The sublat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublat/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sublat/c0.hpp"
#include "sublat/version.hpp"

namespace sublat {

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

Scalar parse_entry(const njson& value) {
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  if (value.is_number_integer()) return Scalar(value.get<long long>());
  if (value.is_number_float()) {
    throw std::invalid_argument("exact fractions required: decimal literal " + value.dump());
  }
  throw std::invalid_argument("exact fractions required: bad generator entry " + value.dump());
}

}  // namespace

InputDocument parse_subspace_document(const std::string& json_text) {
  njson j;
  try {
    j = njson::parse(json_text);
  } catch (const njson::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");

  if (auto it = j.find("format"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      throw std::invalid_argument("unsupported format version " + it->dump());
    }
  }

  InputDocument doc;
  auto points_it = j.find("points");
  if (points_it == j.end() || !points_it->is_array() || points_it->empty()) {
    throw std::invalid_argument("'points' must be a nonempty array of labels");
  }
  for (const auto& p : *points_it) {
    if (!p.is_string()) throw std::invalid_argument("point labels must be strings");
    doc.points.push_back(p.get<std::string>());
  }

  auto gens_it = j.find("generators");
  if (gens_it == j.end() || !gens_it->is_array()) {
    throw std::invalid_argument("'generators' must be an array of rows");
  }
  for (const auto& row : *gens_it) {
    if (!row.is_array()) throw std::invalid_argument("generator rows must be arrays");
    if (row.size() != doc.points.size()) {
      throw std::invalid_argument("ragged generator row: expected " +
                                  std::to_string(doc.points.size()) + " entries, got " +
                                  std::to_string(row.size()));
    }
    std::vector<Scalar> parsed;
    parsed.reserve(row.size());
    for (const auto& entry : row) parsed.push_back(parse_entry(entry));
    doc.generators.push_back(std::move(parsed));
  }

  if (auto it = j.find("mode"); it != j.end()) {
    const std::string m = it->is_string() ? it->get<std::string>() : it->dump();
    if (m == "lattice") {
      doc.mode = Mode::kLattice;
    } else if (m == "algebra") {
      doc.mode = Mode::kAlgebra;
    } else {
      throw std::invalid_argument("mode must be 'lattice' or 'algebra', got '" + m + "'");
    }
  }
  if (auto it = j.find("c0"); it != j.end()) {
    if (!it->is_boolean()) throw std::invalid_argument("'c0' must be a boolean");
    doc.c0 = it->get<bool>();
  }
  if (auto it = j.find("infinity_label"); it != j.end()) {
    if (!it->is_string()) throw std::invalid_argument("'infinity_label' must be a string");
    doc.infinity_label = it->get<std::string>();
  }
  return doc;
}

Subspace build_subspace(const InputDocument& doc) {
  SpacePtr space = make_space(doc.points);
  return make_subspace(std::move(space), doc.generators);
}

Subspace parse_subspace(const std::string& json_text) {
  return build_subspace(parse_subspace_document(json_text));
}

std::vector<std::vector<std::string>> echo_generators(const InputDocument& doc) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(doc.generators.size());
  for (const auto& row : doc.generators) {
    std::vector<std::string> printed;
    printed.reserve(row.size());
    for (const auto& v : row) printed.push_back(to_string(v));
    rows.push_back(std::move(printed));
  }
  return rows;
}

namespace {

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_dot(const RelationSystem& r) {
  const FiniteSpace& space = *r.space();

  std::vector<bool> zero(space.size(), false);
  for (const Relation& rel : r.relations()) {
    if (rel.t == rel.s) zero[space.index(rel.t)] = true;
  }

  std::ostringstream out;
  out << "digraph relations {\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << "  " << quote_dot(space.label(i));
    if (zero[i]) out << " [label=" << quote_dot(space.label(i) + " = 0") << "]";
    out << ";\n";
  }
  for (const Relation& rel : r.relations()) {
    if (rel.t == rel.s) continue;
    out << "  " << quote_dot(rel.t) << " -> " << quote_dot(rel.s);
    if (rel.lambda == 1) {
      out << " [dir=none, color=\"black:black\", label=\"λ=1\"]";
    } else {
      out << " [label=" << quote_dot("λ=" + to_string(rel.lambda)) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

ojson row_to_json(const std::vector<Scalar>& row) {
  ojson arr = ojson::array();
  for (const auto& v : row) arr.push_back(to_string(v));
  return arr;
}

ojson basis_to_json(const Basis& basis) {
  ojson arr = ojson::array();
  for (const auto& row : basis.vectors()) arr.push_back(row_to_json(row));
  return arr;
}

ojson relations_to_json(const RelationSystem& r) {
  ojson arr = ojson::array();
  for (const Relation& rel : r.relations()) {
    ojson item;
    item["t"] = rel.t;
    item["s"] = rel.s;
    item["lambda"] = to_string(rel.lambda);
    arr.push_back(std::move(item));
  }
  return arr;
}

ojson pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ojson arr = ojson::array();
  for (const auto& [x, y] : pairs) arr.push_back(ojson::array({x, y}));
  return arr;
}

ojson witness_to_json(const AnalysisReport& report) {
  if (report.witness_found) {
    const Witness& w = *report.witness_found;
    ojson item;
    item["found"] = true;
    item["op"] = to_string(w.op);
    item["f"] = row_to_json(w.f.values());
    item["g"] = row_to_json(w.g.values());
    item["combined"] = row_to_json(w.combined.values());
    return item;
  }
  if (!report.witness_note.empty()) {
    ojson item;
    item["found"] = false;
    item["note"] = report.witness_note;
    return item;
  }
  return nullptr;
}

struct CommandContext {
  std::string command;
  Mode mode = Mode::kLattice;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  bool c0 = false;
  std::string infinity_label;
  InputDocument doc;
  Subspace subject;  // over the input points
};

ojson report_header(const CommandContext& ctx) {
  ojson report;
  report["format"] = kFormatVersion;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["command"] = ctx.command;
  report["mode"] = to_string(ctx.mode);
  report["c0"] = ctx.c0;
  if (ctx.c0) report["infinity_label"] = ctx.infinity_label;
  report["seed"] = ctx.seed;
  report["budget"] = ctx.budget;
  ojson input;
  input["points"] = ctx.doc.points;
  input["generators"] = echo_generators(ctx.doc);
  report["input"] = std::move(input);
  return report;
}

int run_analyze(const CommandContext& ctx, std::ostream& out) {
  AnalysisReport analysis =
      ctx.c0 ? c0_analyze_report(compactify(ctx.subject.space, ctx.infinity_label), ctx.subject,
                                 ctx.mode, ctx.seed, ctx.budget)
             : analyze(ctx.subject, ctx.mode, ctx.seed, ctx.budget);

  ojson report = report_header(ctx);
  ojson body;
  body["dimension"] = ctx.subject.basis.rank();
  body["basis"] = basis_to_json(ctx.subject.basis);
  body["is_sublattice"] = analysis.is_sublattice;
  body["is_subalgebra"] = analysis.is_subalgebra;
  body["separates_points"] = analysis.separates_points;
  body["non_separated_pairs"] = pairs_to_json(analysis.non_separated_pairs);
  body["zero_set"] = analysis.zero_set;
  body["relations_lattice"] = relations_to_json(analysis.relations_lattice);
  body["relations_algebra"] = relations_to_json(analysis.relations_algebra);
  body["lattice_hull"] = basis_to_json(analysis.lattice_hull.basis);
  body["algebra_hull"] = basis_to_json(analysis.algebra_hull.basis);
  body["witness"] = witness_to_json(analysis);
  report["analysis"] = std::move(body);

  out << report.dump(2) << "\n";
  const bool holds = ctx.mode == Mode::kLattice ? analysis.is_sublattice : analysis.is_subalgebra;
  return holds ? kExitHolds : kExitFails;
}

// relations / hull / witness / dot share the same decision; they differ in
// what they print.
int run_single(const CommandContext& ctx, std::ostream& out) {
  RelationSystem relations = RelationSystem::empty(ctx.subject.space);
  Subspace the_hull = ctx.subject;
  bool holds = false;
  if (ctx.c0) {
    C0Analysis c0 = c0_analyze(compactify(ctx.subject.space, ctx.infinity_label), ctx.subject,
                               ctx.mode);
    relations = std::move(c0.relations);
    the_hull = std::move(c0.hull);
    holds = c0.holds;
  } else {
    relations = extract_relations(ctx.subject, ctx.mode);
    the_hull = hull(ctx.subject, ctx.mode);
    holds = compare(ctx.subject.basis, the_hull.basis) == SubspaceOrder::kEqual;
  }

  if (ctx.command == "dot") {
    out << emit_dot(relations);
    return holds ? kExitHolds : kExitFails;
  }

  ojson report = report_header(ctx);
  if (ctx.command == "relations") {
    report["relations"] = relations_to_json(relations);
  } else if (ctx.command == "hull") {
    report["hull"] = basis_to_json(the_hull.basis);
    report["dimension"] = the_hull.basis.rank();
  } else {  // witness
    report["holds"] = holds;
    ojson witness_json = nullptr;
    if (!holds) {
      std::optional<Witness> w;
      if (ctx.c0) {
        const CompactifiedSpace cs = compactify(ctx.subject.space, ctx.infinity_label);
        if (auto found = witness(embed_subspace(cs, ctx.subject), ctx.mode, ctx.seed,
                                 ctx.budget)) {
          w = Witness{restrict_to_base(cs, found->f), restrict_to_base(cs, found->g),
                      restrict_to_base(cs, found->combined), found->op};
        }
      } else {
        w = witness(ctx.subject, ctx.mode, ctx.seed, ctx.budget);
      }
      if (w) {
        ojson item;
        item["found"] = true;
        item["op"] = to_string(w->op);
        item["f"] = row_to_json(w->f.values());
        item["g"] = row_to_json(w->g.values());
        item["combined"] = row_to_json(w->combined.values());
        witness_json = std::move(item);
      } else {
        ojson item;
        item["found"] = false;
        item["note"] = "no explicit witness found within budget";
        witness_json = std::move(item);
      }
    }
    report["witness"] = std::move(witness_json);
  }
  out << report.dump(2) << "\n";
  return holds ? kExitHolds : kExitFails;
}

int run_check_member(const CommandContext& ctx, const std::string& function_text,
                     std::ostream& out) {
  std::vector<Scalar> values;
  std::string token;
  std::istringstream stream(function_text);
  while (std::getline(stream, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty entry in --function");
    values.push_back(parse_scalar(token.substr(begin, end - begin + 1)));
  }
  if (values.size() != ctx.subject.space->size()) {
    throw std::invalid_argument("--function needs " + std::to_string(ctx.subject.space->size()) +
                                " comma-separated values");
  }
  const FunctionVec f(ctx.subject.space, values);
  const bool is_member = member(f, ctx.subject);
  const bool by_pairs = member_by_pairs(f, ctx.subject);

  ojson report = report_header(ctx);
  report["function"] = row_to_json(values);
  report["member"] = is_member;
  report["member_by_pairs"] = by_pairs;
  out << report.dump(2) << "\n";
  return is_member ? kExitHolds : kExitFails;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact sublattice / subalgebra analysis of finite function spaces"};
  app.name(kToolName);
  app.require_subcommand(1);

  struct Options {
    std::string input;
    std::string mode;
    std::uint64_t seed = kDefaultSeed;
    std::size_t budget = kDefaultBudget;
    bool c0 = false;
    std::string infinity_label;
    std::string function;
  };
  Options opt;

  const std::vector<std::pair<std::string, std::string>> names = {
      {"analyze", "full structure report: decisions, relations, hulls, witness"},
      {"relations", "the canonical relation system of the subspace"},
      {"hull", "smallest sublattice / subalgebra containing the subspace"},
      {"witness", "counterexample pair when the structure is absent"},
      {"check-member", "membership of a function, globally and pair-by-pair"},
      {"dot", "relation graph in DOT format"},
  };
  for (const auto& [name, description] : names) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("input", opt.input, "subspace document (JSON), or - for stdin")->required();
    sub->add_option("--mode", opt.mode, "lattice or algebra")
        ->check(CLI::IsMember({"lattice", "algebra"}));
    sub->add_option("--seed", opt.seed, "seed for randomized search");
    sub->add_option("--budget", opt.budget, "attempt budget for randomized search");
    sub->add_flag("--c0", opt.c0, "treat the input as functions vanishing at infinity");
    sub->add_option("--infinity-label", opt.infinity_label,
                    "label for the point at infinity (with --c0)");
    if (name == "check-member") {
      sub->add_option("--function", opt.function, "comma-separated exact values, one per point")
          ->required();
    }
  }

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    InputDocument doc = parse_subspace_document(read_input(opt.input));

    // Command-line flags win over flags carried in the document.
    Mode mode = Mode::kLattice;
    if (!opt.mode.empty()) {
      mode = opt.mode == "algebra" ? Mode::kAlgebra : Mode::kLattice;
    } else if (doc.mode) {
      mode = *doc.mode;
    }
    std::string infinity_label = kDefaultInfinityLabel;
    if (!opt.infinity_label.empty()) {
      infinity_label = opt.infinity_label;
    } else if (doc.infinity_label) {
      infinity_label = *doc.infinity_label;
    }
    const bool c0 = opt.c0 || doc.c0.value_or(false);

    Subspace subject = build_subspace(doc);
    const CommandContext ctx{app.get_subcommands().front()->get_name(),
                             mode,
                             opt.seed,
                             opt.budget,
                             c0,
                             std::move(infinity_label),
                             std::move(doc),
                             std::move(subject)};

    if (ctx.command == "analyze") return run_analyze(ctx, out);
    if (ctx.command == "check-member") return run_check_member(ctx, opt.function, out);
    return run_single(ctx, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace sublat
