// swreg: generate, solve and benchmark switching linear regression
// instances, and run the Partition reduction.
//
// Exit codes: 0 success, 1 infeasible / "no" / failed extraction,
// 2 usage or input error, 3 caps exceeded.

#include "swreg/swreg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace swreg;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kCaps = 3;

void emit_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

PartitionInstance read_partition(const std::string& set, const std::string& file) {
  if (!set.empty() == !file.empty()) throw std::invalid_argument("give exactly one of --set or --file");
  if (!set.empty()) return parse_partition(set);
  std::ifstream in(file);
  if (!in) throw FormatError("cannot open '" + file + "'");
  std::string line;
  std::getline(in, line);
  return parse_partition(line);
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) sizes.push_back(std::stoi(item));
  return sizes;
}

struct GenerateArgs {
  int n = 2, d = 1, N = 10;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::string modes = "iid";
  double p_stay = 0.9;
  std::string x_dist = "gaussian";
  std::string out;
};

GeneratorSpec to_spec(const GenerateArgs& a) {
  GeneratorSpec spec;
  spec.n = a.n;
  spec.d = a.d;
  spec.N = a.N;
  spec.noise_sigma = a.sigma;
  spec.seed = a.seed;
  spec.p_stay = a.p_stay;
  if (a.modes == "iid") spec.mode_process = ModeProcess::iid_uniform;
  else if (a.modes == "markov") spec.mode_process = ModeProcess::markov;
  else throw std::invalid_argument("--modes must be iid or markov");
  if (a.x_dist == "gaussian") spec.x_distribution = XDistribution::gaussian;
  else if (a.x_dist == "uniform") spec.x_distribution = XDistribution::uniform_box;
  else throw std::invalid_argument("--x must be gaussian or uniform");
  return spec;
}

int run_generate(const GenerateArgs& a) {
  const GeneratorSpec spec = to_spec(a);
  Instance inst = generate_instance(spec);
  DatasetFile f{inst.data, spec.n, spec.seed, inst.truth_models, inst.truth_labels.q};
  if (a.out.empty() || a.out == "-")
    std::cout << dataset_to_json(f).dump(2) << '\n';
  else
    save_dataset(a.out, f);
  std::cerr << "generated N=" << spec.N << " d=" << spec.d << " n=" << spec.n
            << " sigma=" << spec.noise_sigma << " seed=" << spec.seed << '\n';
  return kOk;
}

struct SolveArgs {
  std::string data;
  int n = 2;
  std::string method = "enum";
  std::string loss = "squared";
  std::optional<double> epsilon;
  int restarts = 20;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string report;
};

int run_solve(const SolveArgs& a, SolverConfig cfg) {
  const DatasetFile file = load_dataset(a.data);
  const Method method = parse_method(a.method);
  const LossModel loss{parse_loss(a.loss)};
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  cfg.threads = a.threads;

  SolveReport report;
  std::optional<bool> decision;
  if (a.epsilon) {
    const DecisionResult r = decide_threshold({file.data, a.n, *a.epsilon}, loss, method, cfg);
    report = r.report;
    decision = r.yes;
  } else {
    report = solve(file.data, a.n, method, loss, cfg);
  }

  json j = report_to_json(report, file.data, loss, cfg.tol);
  if (decision) {
    j["epsilon"] = *a.epsilon;
    j["decision"] = *decision ? "yes" : "no";
  }
  if (file.truth_labels && a.n <= 4) {
    const int n = std::max(a.n, 1 + *std::max_element(file.truth_labels->begin(), file.truth_labels->end()));
    j["accuracy"] = label_accuracy(*file.truth_labels, report.labeling.q, n);
  }
  emit_json(j, a.report);

  std::cerr << report.method << ": cost " << report.cost << " (" << to_string(report.status)
            << "), " << report.candidates_examined << " candidates, " << report.elapsed_ms << " ms\n";
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  if (decision) {
    std::cerr << "decision: " << (*decision ? "yes" : "no") << '\n';
    return *decision ? kOk : kNo;
  }
  return report.status == Status::infeasible ? kNo : kOk;
}

struct PartitionArgs {
  std::string set, file, out, report;
  bool decide = false;
  std::string method = "brute";
};

int run_reduce(const PartitionArgs& a, const SolverConfig& cfg) {
  const PartitionInstance p = read_partition(a.set, a.file);
  const DecisionInstance inst = partition_to_instance(p);
  if (!a.out.empty()) {
    DatasetFile f{inst.data, inst.n, {}, {}, {}};
    save_dataset(a.out, f);
  }
  json j;
  j["partition"] = p.s;
  j["n"] = inst.n;
  j["epsilon"] = inst.epsilon;
  j["N"] = inst.data.size();
  j["d"] = inst.data.dim();
  if (a.out.empty()) j["dataset"] = dataset_to_json({inst.data, inst.n, {}, {}, {}});
  int code = kOk;
  if (a.decide) {
    const LossModel loss{LossKind::squared};
    const DecisionResult r = decide_threshold(inst, loss, parse_method(a.method), cfg);
    j["decision"] = r.yes ? "yes" : "no";
    j["best_cost"] = r.best_cost;
    j["report"] = report_to_json(r.report, inst.data, loss, cfg.tol);
    if (r.yes) {
      const PartitionSplit split = extract_partition_any(r.report.models, p, cfg.tol);
      j["subset"] = split.values;
      j["subset_indices"] = labels_to_json_form(split.indices);
    } else {
      code = kNo;
    }
    std::cerr << "partition " << (r.yes ? "exists" : "does not exist") << " (best cost " << r.best_cost
              << ")\n";
  }
  emit_json(j, a.report);
  return code;
}

int run_extract(const PartitionArgs& a, const SolverConfig& cfg) {
  const PartitionInstance p = read_partition(a.set, a.file);
  std::ifstream in(a.report);
  if (!in) throw FormatError("cannot open '" + a.report + "'");
  json rj;
  try {
    in >> rj;
  } catch (const json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  // Accept the summary written by reduce-partition --decide as well.
  if (rj.is_object() && !rj.contains("models") && rj.contains("report")) rj = json(rj["report"]);
  const SolveReport report = report_from_json(rj);
  try {
    const PartitionSplit split = extract_partition_any(report.models, p, cfg.tol);
    json j;
    j["subset"] = split.values;
    j["subset_indices"] = labels_to_json_form(split.indices);
    j["from_model"] = split.mode + 1;
    std::cout << j.dump(2) << '\n';
    return kOk;
  } catch (const std::runtime_error& e) {
    std::cerr << "extraction failed: " << e.what() << '\n';
    return kNo;
  }
}

struct BenchArgs {
  GenerateArgs gen;
  std::string method = "enum";
  std::string loss = "squared";
  std::string sizes = "20,50,100,200";
  double min_ms = 20.0;
  std::string out;
};

int run_bench(const BenchArgs& a, const SolverConfig& cfg) {
  GeneratorSpec spec = to_spec(a.gen);
  const auto sizes = parse_sizes(a.sizes);
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  spec.N = sizes.front();
  spec.validate();
  const BenchResult r =
      bench_scaling(parse_method(a.method), spec, sizes, {parse_loss(a.loss)}, cfg, a.min_ms);
  json j;
  j["method"] = a.method;
  j["sizes"] = r.sizes;
  j["times_ms"] = r.times_ms;
  j["fitted_exponent"] = r.fitted_exponent;
  j["log_linear_slope"] = r.log_linear_slope;
  j["exponent_bound"] = 2 * spec.d * spec.n * (spec.n - 1);
  j["within_bound"] = r.fitted_exponent <= 2.0 * spec.d * spec.n * (spec.n - 1);
  j["partial"] = r.partial;
  if (!r.note.empty()) j["note"] = r.note;
  emit_json(j, a.out);
  std::cerr << "fitted exponent " << r.fitted_exponent << '\n';
  return r.partial ? kCaps : kOk;
}

void add_generate_options(CLI::App* cmd, GenerateArgs& g) {
  cmd->add_option("--n", g.n, "number of modes");
  cmd->add_option("--d", g.d, "regressor dimension");
  cmd->add_option("--N", g.N, "number of points");
  cmd->add_option("--sigma", g.sigma, "output noise standard deviation");
  cmd->add_option("--seed", g.seed, "random seed");
  cmd->add_option("--modes", g.modes, "mode process: iid or markov");
  cmd->add_option("--p-stay", g.p_stay, "markov probability of keeping the mode");
  cmd->add_option("--x", g.x_dist, "regressor distribution: gaussian or uniform");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Globally optimal switching linear regression"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "draw a synthetic switching-regression instance");
  add_generate_options(generate, gen);
  generate->add_option("--out", gen.out, "output path (.csv or .json; JSON keeps ground truth)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and print a JSON report");
  solve_cmd->add_option("--data", solve_args.data, "dataset (.csv or .json)")->required();
  solve_cmd->add_option("--n", solve_args.n, "number of modes");
  solve_cmd->add_option("--method", solve_args.method, "brute | enum | noiseless | altmin")
      ->check(CLI::IsMember({"brute", "enum", "noiseless", "altmin"}));
  solve_cmd->add_option("--loss", solve_args.loss, "squared | absolute")
      ->check(CLI::IsMember({"squared", "absolute"}));
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "decide whether cost <= epsilon is reachable");
  solve_cmd->add_option("--restarts", solve_args.restarts, "altmin restarts");
  solve_cmd->add_option("--seed", solve_args.seed, "altmin seed");
  solve_cmd->add_option("--threads", solve_args.threads, "worker threads for candidate evaluation");
  solve_cmd->add_option("--report", solve_args.report, "write the report here instead of stdout");

  PartitionArgs part;
  auto* reduce = app.add_subcommand("reduce-partition", "compile a Partition instance to regression");
  reduce->add_option("--set", part.set, "comma-separated positive integers");
  reduce->add_option("--file", part.file, "file holding the comma-separated list on one line");
  reduce->add_option("--out", part.out, "write the dataset here (.csv or .json)");
  reduce->add_flag("--decide", part.decide, "solve the zero-threshold decision problem");
  reduce->add_option("--method", part.method, "exact method for --decide: brute | noiseless | enum");
  reduce->add_option("--report", part.report, "write the JSON summary here instead of stdout");

  PartitionArgs extract;
  auto* extract_cmd = app.add_subcommand("extract-partition", "read a partition off a zero-error report");
  extract_cmd->add_option("--set", extract.set, "comma-separated positive integers");
  extract_cmd->add_option("--file", extract.file, "file holding the list on one line");
  extract_cmd->add_option("--report", extract.report, "solver report JSON")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "measure runtime scaling in N");
  add_generate_options(bench_cmd, bench.gen);
  bench_cmd->add_option("--method", bench.method, "brute | enum | noiseless | altmin");
  bench_cmd->add_option("--loss", bench.loss, "squared | absolute");
  bench_cmd->add_option("--sizes", bench.sizes, "comma-separated increasing N values");
  bench_cmd->add_option("--min-ms", bench.min_ms, "minimum timed duration per size");
  bench_cmd->add_option("--out", bench.out, "write the JSON result here instead of stdout");
  bench.gen.sigma = 0.1;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const SolverConfig cfg = apply_env_overrides({});
    if (generate->parsed()) return run_generate(gen);
    if (solve_cmd->parsed()) return run_solve(solve_args, cfg);
    if (reduce->parsed()) return run_reduce(part, cfg);
    if (extract_cmd->parsed()) return run_extract(extract, cfg);
    if (bench_cmd->parsed()) return run_bench(bench, cfg);
  } catch (const CapsExceeded& e) {
    std::cerr << "caps exceeded: " << e.what() << '\n';
    return kCaps;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNo;
  }
  return kUsage;
}
