#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "tricover/census.hpp"
#include "tricover/cycles.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/hypertree.hpp"
#include "tricover/json.hpp"
#include "tricover/solver.hpp"
#include "tricover/verify.hpp"

namespace {

using namespace tricover;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::string output = "-";
  std::size_t budget = 20;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Hypergraph load(const std::string& path) {
  try {
    return parse_h3(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string labels_of(const Hypergraph& h, const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ' ';
    out += h.label(v);
  }
  return out;
}

json component_json(const Hypergraph& h, const SolverOptions& solver) {
  const Bound bound = Bound::for_edges(h.num_edges());
  const bool acyclic = is_acyclic(h);
  json out = {{"n", h.num_vertices()},
              {"m", h.num_edges()},
              {"acyclic", acyclic},
              {"is_hypertree", check_hypertree(h)},
              {"bound_num", bound.num},
              {"bound_den", bound.den}};
  if (auto c = find_cycle(h)) out["cycle"] = cycle_json(h, *c);
  if (h.num_edges() <= solver.budget) {
    const SolveResult tau = exact_tau(h, solver);
    const SolveResult nu = exact_nu(h, solver);
    const ExtremalVerdict verdict = is_extremal(h, solver);
    json cover = json::array();
    for (VertexId v : tau.cover().vertices) cover.push_back(h.label(v));
    out["tau"] = tau.size;
    out["nu"] = nu.size;
    out["cover"] = cover;
    out["matching"] = nu.matching().edges;
    out["tight"] = tau.tight;
    out["has_pm"] = verdict.has_perfect_matching;
    out["extremal"] = verdict.extremal;
    out["explanation"] = verdict.explanation;
  } else if (acyclic) {
    out["has_pm"] = has_perfect_matching(h);
  }
  return out;
}

std::string component_text(const json& c) {
  std::ostringstream out;
  out << "  n=" << c["n"] << " m=" << c["m"] << " acyclic=" << (c["acyclic"].get<bool>() ? "yes" : "no")
      << " bound=" << c["bound_num"] << "/" << c["bound_den"] << "\n";
  if (c.contains("tau")) {
    out << "  tau=" << c["tau"] << " nu=" << c["nu"] << " tight=" << (c["tight"].get<bool>() ? "true" : "false")
        << "\n";
    out << "  " << c["explanation"].get<std::string>() << "\n";
  } else {
    out << "  tau, nu: skipped (more than budget edges)\n";
  }
  return out.str();
}

int cmd_analyze(const std::string& path, const Options& opt) {
  const Hypergraph h = load(path);
  SolverOptions solver;
  solver.budget = opt.budget;
  const auto parts = components(h);
  json doc = {{"n", h.num_vertices()},
              {"m", h.num_edges()},
              {"connected", parts.components.size() <= 1},
              {"components", json::array()}};
  for (const Hypergraph& piece : parts.components) doc["components"].push_back(component_json(piece, solver));

  if (opt.format == "json") {
    write_output(opt.output, doc.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "n=" << h.num_vertices() << " m=" << h.num_edges()
      << " connected=" << (doc["connected"].get<bool>() ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    out << "component " << i + 1 << ":\n" << component_text(doc["components"][i]);
  }
  write_output(opt.output, out.str());
  return kOk;
}

int cmd_cover(const std::string& path, const std::string& method, const Options& opt) {
  const Hypergraph h = load(path);
  SolveResult result;
  if (method == "exact") {
    SolverOptions solver;
    solver.budget = opt.budget;
    result = exact_tau(h, solver);
  } else if (method == "constructive") {
    result = constructive_cover(h);
  } else {
    Cover cover = hypertree_cover(h);
    result.size = cover.size();
    result.method = Method::hypertree;
    result.bound = Bound::for_edges(h.num_edges());
    result.tight = result.bound.attained_by(result.size);
    result.certificate = std::move(cover);
  }
  if (!is_cover(h, result.cover().vertices)) throw std::logic_error("produced certificate is not a cover");

  if (opt.format == "json") {
    write_output(opt.output, solve_json(h, result).dump(2) + "\n");
  } else {
    write_output(opt.output, "size " + std::to_string(result.size) + " (" + std::string(to_string(result.method)) +
                                 ", bound " + std::to_string(result.bound.num) + "/3): " +
                                 labels_of(h, result.cover().vertices) + "\n");
  }
  return kOk;
}

struct VerifyArgs {
  std::optional<std::string> path;
  std::size_t census = 0;
  std::size_t random = 0;
  std::size_t random_max_m = 10;
};

int cmd_verify(const VerifyArgs& args, const Options& opt) {
  if (!args.path && args.census == 0 && args.random == 0) {
    throw UsageError("verify needs an input file, --census or --random");
  }
  SuiteConfig config;
  config.census_max_m = args.census;
  config.random_count = args.random;
  config.random_max_m = args.random_max_m;
  config.seed = opt.seed;
  config.verify.solver.budget = opt.budget;
  if (args.path) config.extra.push_back(load(*args.path));
  const SuiteReport suite = run_suite(config);

  if (opt.format == "json") {
    json doc = suite_json(suite);
    if (args.path) {
      doc["reports"] = json::array();
      for (const Report& r : suite.reports) doc["reports"].push_back(report_json(r));
    }
    write_output(opt.output, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "instances " << suite.instances << ", passes " << suite.passes << ", failures " << suite.failures
        << ", fallbacks " << suite.fallbacks << "/" << suite.constructive_calls << "\n";
    if (args.path) {
      for (const Report& r : suite.reports) {
        out << "  " << r.instance_id << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
      }
    }
    for (const SuiteFailure& f : suite.failure_list) out << "FAIL " << f.check << " on " << f.key << "\n";
    write_output(opt.output, out.str());
  }
  return suite.ok() ? kOk : kVerifyFailed;
}

struct GenerateArgs {
  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 3;
  bool linear = false;
};

int cmd_generate(const GenerateArgs& args, const Options& opt) {
  Hypergraph h;
  if (args.family == "hypertree-pm") {
    if (args.m == 0) throw UsageError("hypertree-pm needs --m");
    h = gen_hypertree_pm(args.m, opt.seed);
  } else if (args.family == "random") {
    if (args.m == 0) throw UsageError("random needs --m");
    const std::size_t n = args.n == 0 ? 2 * args.m + 1 : args.n;
    h = gen_random_connected(n, args.m, opt.seed);
  } else if (args.family == "cycle") {
    h = gen_cycle(args.k, args.linear);
  } else if (args.family == "non-minimal-cycle") {
    h = gen_non_minimal_cycle(opt.seed).graph;
  } else {
    h = gen_intersecting_cycles(opt.seed);
  }
  write_output(opt.output, serialize_h3(h));
  return kOk;
}

int cmd_enumerate(std::size_t max_m, const Options& opt) {
  const auto census = enumerate_connected(max_m);
  if (opt.format == "json") {
    json doc = json::array();
    for (const Hypergraph& h : census) doc.push_back({{"key", canonical_key(h)}, {"h3", serialize_h3(h)}});
    write_output(opt.output, doc.dump(2) + "\n");
    return kOk;
  }
  std::string out;
  for (const Hypergraph& h : census) out += canonical_key(h) + "\n";
  write_output(opt.output, out);
  return kOk;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", opt.output, "Output file, '-' for stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex covers of connected 3-uniform hypergraphs"};
  app.require_subcommand(1);
  Options opt;

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Report n, m, acyclicity, tau, nu and tightness per component");
  analyze->add_option("path", analyze_path, "h3 file, '-' for stdin")->required();
  analyze->add_option("--budget", opt.budget, "Largest edge count solved exactly")->check(CLI::PositiveNumber);
  add_common(analyze, opt);

  std::string cover_path;
  std::string method = "constructive";
  auto* cover = app.add_subcommand("cover", "Print a verified vertex cover");
  cover->add_option("path", cover_path, "h3 file, '-' for stdin")->required();
  cover->add_option("--method", method, "Cover algorithm")
      ->check(CLI::IsMember({"exact", "constructive", "hypertree"}));
  cover->add_option("--budget", opt.budget, "Largest edge count solved exactly")->check(CLI::PositiveNumber);
  add_common(cover, opt);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suite on a file, the census or random instances");
  verify->add_option("path", verify_args.path, "h3 file, '-' for stdin");
  verify->add_option("--census", verify_args.census, "Enumerate all instances with up to this many edges")
      ->check(CLI::Range(0, 5));
  verify->add_option("--random", verify_args.random, "Number of random connected instances");
  verify->add_option("--random-max-m", verify_args.random_max_m, "Largest edge count of random instances")
      ->check(CLI::Range(1, 64));
  verify->add_option("--seed", opt.seed, "Seed of the random stream");
  verify->add_option("--budget", opt.budget, "Largest edge count solved exactly")->check(CLI::PositiveNumber);
  add_common(verify, opt);

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Write an instance of a family in h3 format");
  generate->add_option("family", gen_args.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"hypertree-pm", "random", "cycle", "non-minimal-cycle", "intersecting-cycles"}));
  generate->add_option("--m", gen_args.m, "Edge count");
  generate->add_option("--n", gen_args.n, "Vertex count (random; default 2m+1)");
  generate->add_option("--k", gen_args.k, "Cycle length");
  generate->add_flag("--linear", gen_args.linear, "Linear cycle with private middle vertices");
  generate->add_option("--seed", opt.seed, "Seed");
  generate->add_option("-o,--output", opt.output, "Output file, '-' for stdout");

  std::size_t enum_m = 2;
  auto* enumerate = app.add_subcommand("enumerate", "List the census of connected instances by canonical key");
  enumerate->add_option("--m", enum_m, "Largest edge count")->check(CLI::Range(1, 5));
  add_common(enumerate, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, opt);
    if (*cover) return cmd_cover(cover_path, method, opt);
    if (*verify) return cmd_verify(verify_args, opt);
    if (*generate) return cmd_generate(gen_args, opt);
    return cmd_enumerate(enum_m, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget)\n";
  }
  return kUsage;
}
