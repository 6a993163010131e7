// Copyright 2026 The Authors.
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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatmatch/corpus.hpp"
#include "flatmatch/errors.hpp"
#include "flatmatch/export.hpp"
#include "flatmatch/lattice.hpp"
#include "flatmatch/society.hpp"
#include "flatmatch/suites.hpp"

namespace flatmatch::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw InputError("cannot write " + config.out);
  file << text;
}

Lattice load_lattice(const RunConfig& config) {
  return build_lattice(parse_matroid(read_file(config.input)), config.flat_cap);
}

std::string summary(const Lattice& lat) {
  return "N=" + std::to_string(lat.size()) + " r=" + std::to_string(lat.rank()) +
         " atoms=" + std::to_string(lat.atoms().size()) +
         " hyperplanes=" + std::to_string(lat.hyperplanes().size());
}

}  // namespace

int cmd_build(const RunConfig& config, std::ostream& out) {
  const Lattice lat = load_lattice(config);
  out << summary(lat) << "\n";
  if (!config.out.empty()) emit(config, out, lattice_to_json(lat).dump(2) + "\n");
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Lattice lat = load_lattice(config);
  SuiteOptions opts;
  opts.exhaustive_cap = config.exhaustive_cap;
  opts.seed = config.seed;
  const VerificationReport report = full_verification(lat, opts);

  Json doc;
  doc["input"] = std::filesystem::path(config.input).filename().string();
  doc["summary"] = summary(lat);
  doc["mode"] = exhaustive_mode(lat, opts) ? "exhaustive" : "sampled";
  doc["exhaustive_cap"] = config.exhaustive_cap;
  doc["seed"] = config.seed;
  const Json body = report_to_json(report);
  doc["checks"] = body["checks"];
  doc["all_passed"] = body["all_passed"];
  emit(config, out, doc.dump(2) + "\n");
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_match(const RunConfig& config, std::ostream& out) {
  const Lattice lat = load_lattice(config);
  const DispatchResult result = match_dispatch(lat, config.strategy);
  Json doc;
  doc["input"] = std::filesystem::path(config.input).filename().string();
  doc["summary"] = summary(lat);
  const Json body = matching_report_to_json(lat, result);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  emit(config, out, doc.dump(2) + "\n");
  return result.report.verified ? kSuccess : kVerificationFailed;
}

int cmd_obstruct(const RunConfig& config, std::ostream& out) {
  const std::string text = read_file(config.input);
  const Society soc = looks_like_society(text)
                          ? parse_society(text)
                          : lattice_society(build_lattice(parse_matroid(text), config.flat_cap));
  const MaxEspousal best = max_espousal(soc);
  Json doc;
  doc["input"] = std::filesystem::path(config.input).filename().string();
  doc["M"] = soc.men().size();
  doc["W"] = soc.women().size();
  doc["deficiency"] = best.unmatched.size();
  doc["espousal"] = espousal_to_json(best.espousal);
  doc["total"] = best.unmatched.empty();
  bool ok = true;
  if (const auto witness = extract_obstruction(soc)) {
    const ObstructionVerdict verdict = verify_obstruction(*witness, soc);
    ok = verdict.ok;
    doc["witness"] = witness_to_json(*witness, verdict);
  } else {
    doc["witness"] = nullptr;
  }
  emit(config, out, doc.dump(2) + "\n");
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_export_dot(const RunConfig& config, std::ostream& out) {
  emit(config, out, lattice_to_dot(load_lattice(config)));
  return kSuccess;
}

int cmd_gen_corpus(const RunConfig& config, std::ostream& out) {
  if (config.out.empty()) throw InputError("gen-corpus needs --out <directory>");
  const std::filesystem::path dir(config.out);
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream file(dir / name, std::ios::binary);
    if (!file) throw InputError("cannot write " + (dir / name).string());
    file << text << "\n";
  };
  const auto corpus = standard_corpus(config.seed);
  for (const auto& entry : corpus) write(entry.name + ".json", matroid_to_json(entry.spec));
  // The two-men, one-woman society with deficiency one.
  write("society_2v1.json", R"({"kind":"society","M":2,"W":1,"edges":[[0,0],[1,0]]})");
  out << "wrote " << corpus.size() + 1 << " instances to " << dir.string() << "\n";
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric lattices of flats: construction, verification, matchings"};
  app.require_subcommand(1);
  RunConfig config;
  std::string strategy = "auto";

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", config.input, "instance file (JSON)");
    if (needs_input) in->required();
    sub->add_option("--out", config.out, "output path");
    sub->add_option("--seed", config.seed, "seed for randomized suites");
    sub->add_option("--flat-cap", config.flat_cap, "maximum number of flats");
  };
  auto* build = app.add_subcommand("build", "build the lattice of flats");
  add_common(build, true);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, true);
  verify->add_option("--exhaustive-cap", config.exhaustive_cap,
                     "largest lattice checked exhaustively");
  auto* match = app.add_subcommand("match", "compute an atom/hyperplane matching");
  add_common(match, true);
  match->add_option("--strategy", strategy, "hall, milner-shelah, bjorner or auto")
      ->check(CLI::IsMember({"hall", "milner-shelah", "bjorner", "auto"}));
  auto* obstruct = app.add_subcommand("obstruct", "extract and verify an obstruction");
  add_common(obstruct, true);
  auto* dot = app.add_subcommand("export-dot", "write the Hasse diagram as DOT");
  add_common(dot, true);
  auto* gen = app.add_subcommand("gen-corpus", "write the standard test instances");
  add_common(gen, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  config.strategy = *parse_strategy(strategy);

  try {
    if (build->parsed()) return cmd_build(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (match->parsed()) return cmd_match(config, out);
    if (obstruct->parsed()) return cmd_obstruct(config, out);
    if (dot->parsed()) return cmd_export_dot(config, out);
    return cmd_gen_corpus(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what();
    if (!e.field().empty()) err << " [field " << e.field() << "]";
    err << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "validation error (" << e.axiom() << "): " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace flatmatch::cli
