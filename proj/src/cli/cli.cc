// Copyright 2026 The PDM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdm/cli/cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdm/cg/generate.h"
#include "pdm/cli/targeted_ad.h"
#include "pdm/cli/trace_json.h"
#include "pdm/common/error.h"
#include "pdm/common/hash.h"
#include "pdm/netsim/builtin_scenarios.h"
#include "pdm/netsim/scenario_json.h"
#include "pdm/netsim/simulator.h"
#include "pdm/netsim/traffic.h"
#include "pdm/ops/execute.h"
#include "pdm/package/package_codec.h"
#include "pdm/package/package_json.h"
#include "pdm/semdesc/graph_codec.h"
#include "pdm/semdesc/mpeg7_import.h"
#include "pdm/semdesc/script_compiler.h"

namespace pdm::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "text";
  std::size_t k = cg::kDefaultTopK;
  double density = 1.0;
  int fps = cg::kDefaultFps;
  std::string mode;
  std::string target;
  bool emit_scenario = false;
  std::vector<std::string> inputs;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int validate();
  int compile();
  int generate();
  int simulate();
  int report();
  int demo();

 private:
  bool structured() const { return o_.format == "structured"; }
  cg::GenerateOptions generate_options() const { return {o_.density, o_.fps, o_.k}; }
  void emit(const std::string& text);
  void emit_bytes(const Bytes& bytes);
  int run_scenario(netsim::Scenario s, bool builtin);

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void Session::emit(const std::string& text) {
  if (o_.out_path.empty()) {
    out_ << text;
    return;
  }
  std::ofstream file(o_.out_path, std::ios::binary);
  if (!(file << text)) throw Error(ErrorCode::kIo, "cannot write " + o_.out_path);
  out_ << "wrote " << o_.out_path << "\n";
}

void Session::emit_bytes(const Bytes& bytes) {
  if (o_.out_path.empty()) {
    out_ << package::to_hex(bytes) << "\n";
    return;
  }
  std::ofstream file(o_.out_path, std::ios::binary);
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + o_.out_path);
  out_ << "wrote " << bytes.size() << " bytes to " << o_.out_path << "\n";
}

enum class InputKind { kSemanticXml, kPackage, kScenario, kPackageWire, kGraphWire };

InputKind classify(const fs::path& path, const std::string& data, json* parsed) {
  if (data.rfind("PDM1", 0) == 0) return InputKind::kPackageWire;
  if (data.rfind("SDG1", 0) == 0) return InputKind::kGraphWire;
  if (path.extension() == ".xml" || data.find('<') < data.find('{')) return InputKind::kSemanticXml;
  try {
    *parsed = json::parse(data);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return parsed->contains("broadcasters") ? InputKind::kScenario : InputKind::kPackage;
}

int Session::validate() {
  const fs::path path = o_.inputs.front();
  const std::string data = package::read_file(path);
  json parsed;
  ValidationReport report;
  std::vector<std::string> notes;
  switch (classify(path, data, &parsed)) {
    case InputKind::kSemanticXml: {
      auto imported = semdesc::import_mpeg7_detailed(data);
      notes = imported.warnings;
      report = semdesc::validate_graph(imported.graph);
      break;
    }
    case InputKind::kPackage:
      report = package::validate_package(package::package_from_json(parsed, path.parent_path()));
      break;
    case InputKind::kScenario:
      report = netsim::validate_scenario(netsim::scenario_from_json(parsed, path.parent_path()));
      break;
    case InputKind::kPackageWire: {
      auto bytes = to_bytes(data);
      report = package::validate_package(package::decode_package(bytes));
      break;
    }
    case InputKind::kGraphWire: {
      auto bytes = to_bytes(data);
      report = semdesc::validate_graph(semdesc::parse_graph(bytes));
      break;
    }
  }
  for (const auto& note : notes) out_ << "note: " << note << "\n";
  if (!report.empty()) out_ << report.render();
  out_ << path.string() << ": " << (report.ok() ? "valid" : "invalid") << "\n";
  return report.ok() ? kExitOk : kExitInvalid;
}

int Session::compile() {
  const fs::path path = o_.inputs.front();
  const std::string data = package::read_file(path);
  json parsed;
  const InputKind kind = classify(path, data, &parsed);
  if (kind == InputKind::kPackage) {
    if (!o_.target.empty() && o_.target != "wire") {
      throw CLI::ValidationError("--to", "packages compile to wire only");
    }
    auto p = package::package_from_json(parsed, path.parent_path());
    auto report = package::validate_package(p);
    if (!report.ok()) {
      err_ << report.render();
      return kExitInvalid;
    }
    emit_bytes(package::encode_package(p));
    return kExitOk;
  }
  if (kind != InputKind::kSemanticXml) {
    throw CLI::ValidationError("input", "expected a semantic description or a package file");
  }
  auto graph = semdesc::import_mpeg7(data);
  auto report = semdesc::validate_graph(graph);
  if (!report.ok()) {
    err_ << report.render();
    return kExitInvalid;
  }
  const std::string target = o_.target.empty() ? "script" : o_.target;
  if (target == "script") {
    emit(semdesc::compile_to_script(graph) + "\n");
  } else if (target == "graph") {
    emit_bytes(semdesc::serialize_graph(graph));
  } else if (target == "sizes") {
    const std::string script = semdesc::compile_to_script(graph);
    std::ostringstream text;
    text << "nodes: " << graph.nodes.size() << "\nrelations: " << graph.relations.size()
         << "\ngraph bytes: " << semdesc::graph_wire_size(graph)
         << "\nscript bytes: " << script.size() << "\n";
    emit(text.str());
  } else {
    throw CLI::ValidationError("--to", "semantic descriptions compile to script, graph or sizes");
  }
  return kExitOk;
}

int Session::generate() {
  std::vector<package::PromptPackage> packages;
  for (const auto& input : o_.inputs) {
    auto p = package::load_package_file(input);
    auto report = package::validate_package(p);
    if (!report.ok()) {
      err_ << input << ":\n" << report.render();
      return kExitInvalid;
    }
    packages.push_back(std::move(p));
  }
  std::string mode_name = o_.mode.empty() ? (packages.size() == 1 ? "single" : "async") : o_.mode;
  auto mode = ops::operation_mode_from_name(mode_name);
  if (!mode) throw CLI::ValidationError("--mode", "expected single, sync or async");
  const std::uint64_t seed = o_.seed.value_or(0);
  auto content = cg::generate_content(packages, *mode, seed, generate_options());
  if (structured()) {
    emit(content_to_json(content).dump(2) + "\n");
    if (!o_.out_path.empty()) out_ << "seed: " << seed << "\n";
  } else {
    emit("seed: " + std::to_string(seed) + "\n" + render_content_summary(content));
  }
  return kExitOk;
}

int Session::run_scenario(netsim::Scenario s, bool builtin) {
  if (o_.seed || builtin) {
    for (auto& a : s.agents) a.seed = o_.seed.value_or(0);
  }
  if (o_.emit_scenario) {
    emit(netsim::scenario_to_json(s).dump(2) + "\n");
    return kExitOk;
  }
  auto report = netsim::validate_scenario(s);
  if (!report.ok()) {
    err_ << report.render();
    return kExitInvalid;
  }
  auto trace = netsim::run_scenario(s);
  if (structured()) {
    emit(simulation_to_json(trace, s).dump(2) + "\n");
    if (!o_.out_path.empty()) {
      for (const auto& a : trace.agents) out_ << "seed: " << a.seed << "\n";
    }
    return kExitOk;
  }
  std::ostringstream text;
  text << "scenario: " << s.name << "\n";
  for (const auto& a : trace.agents) {
    text << "agent: " << a.agent_id << " (" << ops::operation_mode_name(a.mode) << ")\n"
         << "seed: " << a.seed << "\n"
         << "phases:\n"
         << render_phase_table(a.phases);
    if (a.content) {
      text << "timeline:\n" << render_timeline(*a.content)
           << "content hash: " << hex64(cg::content_hash(*a.content)) << "\n";
    } else {
      text << "no content\n";
    }
  }
  if (s.name == "targeted-ad") {
    for (const auto& a : s.agents) {
      std::set<std::string> attributes(a.attributes.begin(), a.attributes.end());
      auto merged = targeted_ad_assemble(attributes, netsim::targeted_ad_packages());
      text << "targeted ad for " << a.id << " {" << join(attributes) << "}: features {"
           << join(feature_set(merged)) << "}\n";
    }
  }
  text << "traffic:\n" << render_traffic(netsim::traffic_report(trace, s));
  emit(text.str());
  return kExitOk;
}

int Session::simulate() {
  return run_scenario(netsim::load_scenario_file(o_.inputs.front()), false);
}

int Session::demo() {
  const auto& names = netsim::builtin_scenario_names();
  if (std::find(names.begin(), names.end(), o_.inputs.front()) == names.end()) {
    std::string known;
    for (const auto& n : names) known += " " + n;
    throw CLI::ValidationError("name", "unknown demo '" + o_.inputs.front() + "'; one of:" + known);
  }
  return run_scenario(netsim::builtin_scenario(o_.inputs.front()), true);
}

int Session::report() {
  json trace;
  try {
    trace = json::parse(package::read_file(o_.inputs.front()));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, o_.inputs.front() + ": " + e.what());
  }
  auto r = traffic_from_trace(trace);
  if (structured()) {
    emit(traffic_to_json(r).dump(2) + "\n");
  } else {
    emit("traffic:\n" + render_traffic(r));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Prompt-driven media toolkit: semantic descriptions, prompt packages, content generation and network simulation."};
  app.name("pdm");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write the result to this path");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_generation = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "User seed (default 0)");
    sub->add_option("--k", o.k, "Top-k bound per package")->check(CLI::PositiveNumber);
    sub->add_option("--density", o.density, "Scene samples per narrative flag")->check(CLI::PositiveNumber);
    sub->add_option("--fps", o.fps, "Frame rate")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Validate a semantic description, package or scenario");
  validate->add_option("input", o.inputs, "File to validate")->required()->expected(1);
  add_output(validate);

  auto* compile = app.add_subcommand("compile", "Compile a semantic description or encode a package");
  compile->add_option("input", o.inputs, "MPEG-7 document or package JSON")->required()->expected(1);
  compile->add_option("--to", o.target, "script, graph or sizes for descriptions; wire for packages")
      ->check(CLI::IsMember({"script", "graph", "sizes", "wire"}));
  add_output(compile);

  auto* generate = app.add_subcommand("generate", "Generate content from prompt packages");
  generate->add_option("packages", o.inputs, "Package JSON files")->required();
  generate->add_option("--mode", o.mode, "single, sync or async")
      ->check(CLI::IsMember({"single", "sync", "async"}));
  add_generation(generate);
  add_output(generate);

  auto* simulate = app.add_subcommand("simulate", "Run a scenario file");
  simulate->add_option("scenario", o.inputs, "Scenario JSON")->required()->expected(1);
  simulate->add_option("--seed", o.seed, "Override every agent seed");
  add_output(simulate);

  auto* report = app.add_subcommand("report", "Traffic report from a structured simulation trace");
  report->add_option("trace", o.inputs, "Trace JSON written by simulate or demo")->required()->expected(1);
  add_output(report);

  auto* demo = app.add_subcommand("demo", "Run a bundled scenario");
  demo->add_option("name", o.inputs, "g1g2, coverage-traverse, transit-ads, signage or targeted-ad")
      ->required()
      ->expected(1);
  demo->add_option("--seed", o.seed, "Agent seed (default 0)");
  demo->add_flag("--emit-scenario", o.emit_scenario, "Print the scenario file instead of running it");
  add_output(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'pdm --help' for usage\n";
    return kExitUsage;
  }
  Session session(o, out, err);
  try {
    if (validate->parsed()) return session.validate();
    if (compile->parsed()) return session.compile();
    if (generate->parsed()) return session.generate();
    if (simulate->parsed()) return session.simulate();
    if (report->parsed()) return session.report();
    return session.demo();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace pdm::cli
