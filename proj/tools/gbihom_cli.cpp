// gbihom: command-line front end for graded BiHom matrix algebras.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gbihom/catalog.hpp"
#include "gbihom/io.hpp"

namespace {

using gbihom::Json;

enum Exit : int { kOk = 0, kFinding = 1, kMissing = 2, kSchema = 3 };

struct Flags {
  std::string path;
  std::string format = "human";
  bool lenient = false;
  bool timing = false;
  bool verify_witnesses = false;
  bool bases = false;
  bool oracle = false;
};

void render_human(const Json& j, int depth, std::ostream& out) {
  const std::string pad(2 * depth, ' ');
  auto scalar_like = [](const Json& x) {
    if (!x.is_array()) return !x.is_object();
    for (const auto& e : x)
      if (e.is_object()) return false;
    return true;
  };
  for (const auto& [k, v] : j.items()) {
    if (scalar_like(v)) {
      out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (v.is_object()) {
      out << pad << k << ":\n";
      render_human(v, depth + 1, out);
    } else {
      out << pad << k << ":\n";
      std::size_t i = 0;
      for (const auto& e : v) {
        out << pad << "  - [" << i++ << "]\n";
        render_human(e, depth + 2, out);
      }
    }
  }
}

void emit(const Json& report, const Flags& f) {
  if (f.format == "machine") std::cout << gbihom::canonical_dump(report);
  else render_human(report, 0, std::cout);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json arguments_json(const std::string& cmd, const Flags& f) {
  Json a{{"path", f.path}, {"lenient", f.lenient}};
  if (cmd == "classes") a["verify_witnesses"] = f.verify_witnesses;
  if (cmd == "decompose") a["bases"] = f.bases;
  if (cmd == "simplicity") a["oracle"] = f.oracle;
  return a;
}

// Loads, validates (for analysis commands) and runs one analysis command.
int run_analysis(const std::string& cmd, const Flags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!std::filesystem::is_regular_file(f.path)) {
    std::cerr << "gbihom: no such file: " << f.path << "\n";
    return kMissing;
  }
  auto text = read_file(f.path);
  if (!text) {
    std::cerr << "gbihom: cannot read " << f.path << "\n";
    return kMissing;
  }
  Json report{{"command", cmd},
              {"arguments", arguments_json(cmd, f)},
              {"schema_version", gbihom::kSchemaVersion},
              {"input", {{"sha256", gbihom::sha256_hex(*text)}, {"bytes", text->size()}}}};
  auto finish = [&](int code) {
    report["status"] = code == kOk ? "ok" : code == kFinding ? "finding" : "schema_error";
    if (f.timing)
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(report, f);
    return code;
  };

  gbihom::LoadedDocument doc;
  try {
    doc = gbihom::algebra_from_text(*text, {f.lenient});
  } catch (const gbihom::SchemaError& e) {
    std::cerr << "gbihom: " << e.what() << "\n";
    report["error"] = {{"kind", "SchemaError"}, {"location", e.location()}, {"message", e.what()}};
    return finish(kSchema);
  } catch (const gbihom::Error& e) {
    std::cerr << "gbihom: " << e.what() << "\n";
    report["error"] = {{"kind", "construction"}, {"message", e.what()}};
    return finish(kFinding);
  }
  for (const auto& w : doc.warnings) std::cerr << "gbihom: warning: " << w << "\n";
  if (!doc.warnings.empty()) report["warnings"] = doc.warnings;
  const auto& A = doc.algebra;

  try {
    auto validation = gbihom::validate(A);
    if (cmd == "validate") {
      report["result"] = gbihom::validation_json(validation);
      if (!validation.all_passed()) {
        const auto* bad = validation.first_failure();
        std::cerr << "gbihom: axiom " << bad->name << " fails: " << bad->witness << "\n";
      }
      return finish(validation.all_passed() ? kOk : kFinding);
    }
    if (!validation.all_passed()) {
      const auto* bad = validation.first_failure();
      std::cerr << "gbihom: input is not a graded BiHom-algebra: " << bad->name << ": " << bad->witness << "\n";
      report["validation"] = gbihom::validation_json(validation);
      return finish(kFinding);
    }
    if (cmd == "support") {
      report["result"] = gbihom::support_json(A);
      return finish(kOk);
    }
    if (cmd == "classes") {
      auto p = gbihom::classes(A);
      report["result"] = gbihom::partition_json(p, f.verify_witnesses ? &A : nullptr);
      if (f.verify_witnesses) {
        bool all = true;
        for (const auto& w : report["result"]["witnesses"]) all = all && w["verified"].get<bool>();
        report["result"]["all_witnesses_verified"] = all;
        if (!all) {
          std::cerr << "gbihom: a connection witness failed verification\n";
          return finish(kFinding);
        }
      }
      return finish(kOk);
    }
    if (cmd == "decompose") {
      report["result"] = gbihom::decomposition_json(gbihom::decompose(A), f.bases);
      return finish(kOk);
    }
    gbihom::SimplicityOptions opts;
    opts.run_oracle = f.oracle;
    auto r = gbihom::graded_simple(A, opts);
    report["result"] = gbihom::simplicity_json(r);
    const Json& res = report["result"];
    if (res.contains("oracle") && res["oracle"].contains("agrees_with_criterion") &&
        !res["oracle"]["agrees_with_criterion"].get<bool>()) {
      std::cerr << "gbihom: criterion and brute-force oracle disagree\n";
      return finish(kFinding);
    }
    return finish(kOk);
  } catch (const gbihom::Error& e) {
    std::cerr << "gbihom: " << e.what() << "\n";
    report["error"] = {{"kind", "finding"}, {"message", e.what()}};
    return finish(kFinding);
  }
}

int run_catalog_list(const Flags& f) {
  Json entries = Json::array();
  for (const auto& e : gbihom::catalog()) {
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"origin", e.origin},
                       {"expected",
                        {{"n", e.expected.n},
                         {"dim", e.expected.dim},
                         {"sigma_size", e.expected.sigma_size},
                         {"class_count", e.expected.class_count},
                         {"criterion", gbihom::to_string(e.expected.criterion)},
                         {"graded_simple", e.expected.graded_simple}}}});
  }
  emit({{"command", "catalog list"}, {"schema_version", gbihom::kSchemaVersion}, {"status", "ok"},
        {"result", {{"entries", entries}}}},
       f);
  return kOk;
}

int run_catalog_emit(const std::string& name, const std::string& out_path, const Flags& f) {
  try {
    const auto& entry = gbihom::catalog_entry(name);
    Json doc = gbihom::algebra_to_json(entry.build());
    doc["name"] = entry.name;
    std::string text = gbihom::canonical_dump(doc);
    if (out_path.empty()) {
      std::cout << text;
      return kOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "gbihom: cannot write " << out_path << "\n";
      return kMissing;
    }
    out << text;
    emit({{"command", "catalog emit"},
          {"status", "ok"},
          {"name", name},
          {"written", out_path},
          {"sha256", gbihom::sha256_hex(text)}},
         f);
    return kOk;
  } catch (const gbihom::InvalidInput& e) {
    std::cerr << "gbihom: " << e.what() << "\n";
    return kMissing;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of graded BiHom matrix algebras"};
  app.require_subcommand(1);
  Flags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    sub->add_flag("--lenient", f.lenient, "Warn about unknown keys instead of rejecting them");
    sub->add_flag("--timing", f.timing, "Include wall-clock timing in the report");
  };
  std::map<std::string, CLI::App*> analysis;
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"validate", "Check every structural axiom"},
      {"support", "Support, symmetry and component dimensions"},
      {"classes", "Connection classes with witnesses"},
      {"decompose", "Graded ideals, complement U, centre and directness"},
      {"simplicity", "Graded-simplicity criterion and sub-verdicts"}};
  for (const auto& [name, help] : cmds) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", f.path, "Input document (JSON)")->required();
    add_common(sub);
    analysis[name] = sub;
  }
  analysis["classes"]->add_flag("--verify-witnesses", f.verify_witnesses, "Replay every witness");
  analysis["decompose"]->add_flag("--bases", f.bases, "Include bases of ideals, U and the centre");
  analysis["simplicity"]->add_flag("--oracle", f.oracle, "Cross-check with brute-force graded-ideal enumeration");

  auto* cat = app.add_subcommand("catalog", "Built-in example algebras");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog entries");
  add_common(list);
  auto* emit_cmd = cat->add_subcommand("emit", "Write an entry as an input document");
  std::string name, out_path;
  emit_cmd->add_option("name", name, "Entry name")->required();
  emit_cmd->add_option("-o,--output", out_path, "Output file (stdout when omitted)");
  add_common(emit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMissing;
  }
  for (const auto& [cmd, sub] : analysis)
    if (sub->parsed()) return run_analysis(cmd, f);
  if (list->parsed()) return run_catalog_list(f);
  return run_catalog_emit(name, out_path, f);
}
