#include "ctlenum_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ctlenum/enumerate.hpp"
#include "ctlenum/error.hpp"
#include "ctlenum/modelcheck.hpp"
#include "ctlenum/reductions.hpp"

namespace ctlenum::cli {
namespace {

struct Config {
  std::string model_path;
  std::string formula_text;
  std::string formula_path;
  std::string oracle = "auto";
  std::optional<std::size_t> limit;
  bool stats = false;
  bool include_disconnected = false;
  std::string out_path;
  std::string reduce_kind;
  std::string input_path;
  std::string encoding = "negation";
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Formula load_formula(const Config& c) {
  if (!c.formula_path.empty()) return parse_formula(read_text(c.formula_path));
  return parse_formula(c.formula_text);
}

int cmd_check(const Config& c, std::ostream& out) {
  const KripkeModel m = read_model_file(c.model_path);
  out << (check(m, load_formula(c)) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_exists(const Config& c, std::ostream& out) {
  const KripkeModel m = read_model_file(c.model_path);
  const Formula f = load_formula(c);
  const bool connected = !c.include_disconnected;
  bool found;
  if (c.oracle == "brute") {
    found = !brute_force_enumerate(m, f, connected).empty();
  } else {
    auto oracle = make_oracle(*parse_oracle_kind(c.oracle), m, f, connected);
    found = oracle->extend(PartialDecision(ground_set(m).size()));
  }
  out << (found ? "true" : "false") << "\n";
  return kOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const KripkeModel m = read_model_file(c.model_path);
  const Formula f = load_formula(c);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw ModelError("cannot write " + c.out_path);
    sink = &file;
  }
  EnumerationStats stats;
  if (c.oracle == "brute") {
    auto solutions = brute_force_enumerate(m, f, !c.include_disconnected);
    if (c.limit && solutions.size() > *c.limit) {
      solutions.erase(solutions.begin() + static_cast<std::ptrdiff_t>(*c.limit),
                      solutions.end());
    }
    for (const Submodel& s : solutions) {
      *sink << canonical_serialize(m, s) << "\n" << std::flush;
    }
    stats.solutions = solutions.size();
  } else {
    EnumerationOptions opts;
    opts.oracle = *parse_oracle_kind(c.oracle);
    opts.connected = !c.include_disconnected;
    opts.limit = c.limit;
    stats = enumerate_submodels(m, f, opts, [&](const Submodel& s) {
      *sink << canonical_serialize(m, s) << "\n" << std::flush;
      return true;
    });
  }
  if (c.stats) *sink << stats.to_json() << "\n" << std::flush;
  return kOk;
}

int cmd_trim(const Config& c, std::ostream& out, std::ostream& err) {
  const Formula f = load_formula(c);
  try {
    out << render_formula(afag_trim(f).to_formula()) << "\n";
  } catch (const NotAFAGChain& e) {
    err << "error: " << e.what() << "\n";
    return kNotTrimmable;
  }
  return kOk;
}

int cmd_reduce(const Config& c, std::ostream& out) {
  std::optional<ReductionInstance> inst;
  if (c.reduce_kind == "sat-ag") {
    std::string text = c.formula_text;
    if (!c.input_path.empty()) text = read_text(c.input_path);
    if (!c.formula_path.empty()) text = read_text(c.formula_path);
    const SatEncoding enc =
        c.encoding == "relabel" ? SatEncoding::Relabel : SatEncoding::Negation;
    inst.emplace(sat_to_ag(parse_prop_formula(text), enc));
  } else {
    if (c.input_path.empty()) throw PreconditionError("--input is required");
    const HampathInstance h = read_digraph_file(c.input_path);
    if (c.reduce_kind == "hampath-af") inst.emplace(hampath_to_af(h));
    if (c.reduce_kind == "hampath-ax") inst.emplace(hampath_to_ax(h));
    if (c.reduce_kind == "hampath-au") inst.emplace(hampath_to_au(h));
    if (c.reduce_kind == "hampath-ar") inst.emplace(hampath_to_ar(h));
    if (c.reduce_kind == "hampath-ar-guarded") {
      inst.emplace(hampath_to_ar_guarded(h));
    }
  }
  namespace fs = std::filesystem;
  const fs::path dir = c.out_path.empty() ? fs::path(".") : fs::path(c.out_path);
  fs::create_directories(dir);
  const std::pair<std::string, std::string> files[] = {
      {"model.json", model_to_json(inst->model)},
      {"formula.txt", render_formula(inst->formula) + "\n"},
      {"provenance.json", inst->provenance.to_json()},
  };
  for (const auto& [name, content] : files) {
    const fs::path p = dir / name;
    std::ofstream f(p);
    if (!f) throw ModelError("cannot write " + p.string());
    f << content;
    out << p.string() << "\n";
  }
  return kOk;
}

void add_formula_options(CLI::App* cmd, Config& c) {
  auto* text = cmd->add_option("--formula", c.formula_text, "CTL formula text");
  auto* path =
      cmd->add_option("--formula-file", c.formula_path, "File holding the formula");
  text->excludes(path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"Enumerate submodels of rooted Kripke models satisfying CTL formulas",
               "ctlenum"};
  app.require_subcommand(1);
  const std::vector<std::string> oracles{"auto", "exhaustive", "monotone", "afag",
                                         "brute"};

  auto* check = app.add_subcommand("check", "Model-check the formula at the root");
  check->add_option("--model", c.model_path, "Model file (JSON)")->required();
  add_formula_options(check, c);

  auto* exists = app.add_subcommand("exists", "Decide whether a satisfying submodel exists");
  exists->add_option("--model", c.model_path, "Model file (JSON)")->required();
  add_formula_options(exists, c);
  exists->add_option("--oracle", c.oracle, "Extension oracle")
      ->check(CLI::IsMember(oracles));
  exists->add_flag("--include-disconnected", c.include_disconnected,
                   "Also accept submodels with unreachable worlds");

  auto* enumerate = app.add_subcommand("enumerate", "Stream all satisfying submodels");
  enumerate->add_option("--model", c.model_path, "Model file (JSON)")->required();
  add_formula_options(enumerate, c);
  enumerate->add_option("--oracle", c.oracle, "Extension oracle")
      ->check(CLI::IsMember(oracles));
  enumerate->add_option("--limit", c.limit, "Stop after N solutions")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--stats", c.stats, "Append a statistics record");
  enumerate->add_flag("--include-disconnected", c.include_disconnected,
                      "Also emit submodels with unreachable worlds");
  enumerate->add_option("--out", c.out_path, "Write the stream to a file");

  auto* trim = app.add_subcommand("trim", "Trim an AF/AG chain to its normal form");
  add_formula_options(trim, c);

  auto* reduce = app.add_subcommand("reduce", "Generate a hardness-reduction instance");
  reduce->add_option("kind", c.reduce_kind, "Construction")
      ->required()
      ->check(CLI::IsMember(
          {"sat-ag", "hampath-af", "hampath-ax", "hampath-au", "hampath-ar",
           "hampath-ar-guarded"}));
  reduce->add_option("--input", c.input_path,
                     "Digraph JSON, or a propositional formula file for sat-ag");
  add_formula_options(reduce, c);
  reduce->add_option("--encoding", c.encoding, "sat-ag negation handling")
      ->check(CLI::IsMember({"negation", "relabel"}));
  reduce->add_option("--out", c.out_path, "Output directory (default: .)");

  std::vector<std::string> argv_store{"ctlenum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const bool needs_formula = !reduce->parsed() || c.reduce_kind == "sat-ag";
    if (needs_formula && c.formula_text.empty() && c.formula_path.empty() &&
        c.input_path.empty()) {
      err << "error: --formula or --formula-file is required\n";
      return kInputError;
    }
    if (check->parsed()) return cmd_check(c, out);
    if (exists->parsed()) return cmd_exists(c, out);
    if (enumerate->parsed()) return cmd_enumerate(c, out);
    if (trim->parsed()) return cmd_trim(c, out, err);
    return cmd_reduce(c, out);
  } catch (const FragmentMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kFragmentMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ctlenum::cli
