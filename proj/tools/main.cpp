// Copyright 2026 chising contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chising/bench.hpp"
#include "chising/embedding.hpp"
#include "chising/exact.hpp"
#include "chising/generators.hpp"
#include "chising/io.hpp"
#include "chising/subsample.hpp"
#include "chising/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct GenArgs {
  std::string family;
  int k = 2;
  std::uint64_t seed = 0;
  int p_percent = 23;
  std::string out;
  std::string logical_out;
  std::string emb_out;
  std::string faults_file;
  int extra_faults = 0;
};

struct SolveArgs {
  std::string instance;
  bool exact = false;
  bool selby = false;
  bool bf = false;
  int w = 3;
  std::uint64_t seed = 4711;
  double time_limit_s = 30.0;
  double perturb_frac = 0.20;
  std::string restart = "perturb";
  int width_cap = 20;
  std::optional<std::int64_t> target;
  std::optional<int> max_passes;
  std::string out;
  std::string trace_out;
};

struct BenchArgs {
  std::string dir;
  std::vector<std::string> files;
  std::string solvers = "dp";
  std::string seeds = "0";
  double time_s = 30.0;
  int w = 3;
  double perturb_frac = 0.20;
  std::string restart = "perturb";
  int width_cap = 20;
  int workers = 1;
  std::string format = "csv";
  std::string out;
};

struct VerifyArgs {
  std::string instance;
  std::string spins_file;
  std::optional<std::int64_t> expect;
};

struct EmbedArgs {
  int k = 16;
  std::string instance;
  std::string out;
  std::string emb_out;
};

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {std::stoull(text)};
  const std::uint64_t a = std::stoull(text.substr(0, dots));
  const std::uint64_t b = std::stoull(text.substr(dots + 2));
  if (b < a) throw std::invalid_argument("seed range end below start");
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
  return seeds;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << text;
}

void emit_report(const chising::SolveReport& rep, const SolveArgs& args) {
  std::cout << chising::report_to_json(rep);
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    if (!f) throw std::runtime_error("cannot write file: " + args.out);
    chising::write_spins(f, rep.spins);
  }
  if (!args.trace_out.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : rep.trace)
      arr.push_back({{"pass", t.pass},
                     {"elapsed_ms", t.elapsed_ms},
                     {"energy_num", t.energy_num},
                     {"best_num", t.best_num}});
    write_text(args.trace_out, arr.dump(2) + "\n");
  }
}

int run_gen(const GenArgs& args) {
  using namespace chising;
  if (args.out.empty()) {
    std::cerr << "gen: --out is required\n";
    return kExitUsage;
  }
  if (args.family == "k64ising" || args.family == "k64maxcut") {
    const auto res = args.family == "k64ising"
                         ? gen_k64_ising(args.k, args.p_percent, args.seed)
                         : gen_k64_maxcut(args.k, args.p_percent, args.seed);
    if (!res) {
      std::cerr << "gen: every draw was rejected at p = " << args.p_percent
                << "%; this density is not representable\n";
      return kExitFailure;
    }
    write_instance_file(args.out, res->embedded.physical);
    if (!args.logical_out.empty())
      write_instance_file(args.logical_out, res->logical);
    if (!args.emb_out.empty()) {
      std::ofstream f(args.emb_out);
      if (!f) throw std::runtime_error("cannot write file: " + args.emb_out);
      write_embedding(f, res->embedded.emb);
    }
    return kExitOk;
  }

  FaultPolicy faults;
  if (!args.faults_file.empty())
    faults.fixed = read_faults_file(args.faults_file, args.k);
  faults.extra_random_nodes = args.extra_faults;
  const IsingInstance inst = gen_family(args.family, args.k, faults, args.seed);
  write_instance_file(args.out, inst);
  return kExitOk;
}

chising::HeuristicConfig heuristic_config(std::uint64_t seed, int w,
                                          double time_s, double perturb_frac,
                                          const std::string& restart,
                                          int width_cap) {
  chising::HeuristicConfig cfg;
  cfg.w = w;
  cfg.seed = seed;
  cfg.time_limit_s = time_s;
  cfg.perturb_fraction = perturb_frac;
  cfg.width_cap = width_cap;
  if (restart == "perturb")
    cfg.restart = chising::RestartPolicy::kPerturbBest;
  else if (restart == "fresh")
    cfg.restart = chising::RestartPolicy::kFresh;
  else
    throw std::invalid_argument("unknown restart policy '" + restart +
                                "' (known: perturb, fresh)");
  return cfg;
}

int run_solve(const SolveArgs& args) {
  using namespace chising;
  const int chosen = int(args.exact) + int(args.selby) + int(args.bf);
  if (chosen > 1) {
    std::cerr << "solve: pick at most one of --exact, --selby, --bf\n";
    return kExitUsage;
  }
  const IsingInstance inst = read_instance_file(args.instance);
  SolveReport rep;
  if (args.selby) {
    auto cfg = heuristic_config(args.seed, args.w, args.time_limit_s,
                                args.perturb_frac, args.restart,
                                args.width_cap);
    cfg.target_num = args.target;
    cfg.max_passes = args.max_passes;
    rep = run_heuristic(inst, cfg);
  } else if (args.bf) {
    rep = brute_force(inst);
  } else {
    DpOptions opt;
    opt.width_cap = args.width_cap;
    rep = solve_exact(inst, opt);
  }
  emit_report(rep, args);
  if (rep.status == SolveStatus::kOptimal ||
      rep.status == SolveStatus::kHeuristic)
    return kExitOk;
  std::cerr << "solve: " << to_string(rep.status) << ": " << rep.message
            << "\n";
  return kExitFailure;
}

int run_bench(const BenchArgs& args) {
  using namespace chising;
  std::vector<std::string> paths = args.files;
  if (!args.dir.empty()) {
    for (const auto& entry : std::filesystem::directory_iterator(args.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".ising")
        paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    std::cerr << "bench: no instance files given\n";
    return kExitUsage;
  }

  std::vector<IsingInstance> storage;
  storage.reserve(paths.size());
  std::vector<std::pair<std::string, const IsingInstance*>> instances;
  for (const auto& p : paths) {
    IsingInstance inst = read_instance_file(p);
    const std::string stem = std::filesystem::path(p).stem().string();
    if (inst.meta.name.empty()) inst.meta.name = stem;
    if (inst.meta.family.empty())
      inst.meta.family = stem.substr(0, stem.find('-'));
    storage.push_back(std::move(inst));
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    instances.emplace_back(storage[i].meta.name, &storage[i]);

  std::vector<SolverSpec> solvers;
  std::vector<std::string> solver_order;
  std::stringstream names(args.solvers);
  std::string name;
  while (std::getline(names, name, ',')) {
    if (name.empty()) continue;
    solver_order.push_back(name);
    if (name == "bf") {
      solvers.push_back({name, [](const IsingInstance& in, std::uint64_t) {
                           return brute_force(in);
                         }});
    } else if (name == "dp") {
      const int cap = args.width_cap;
      solvers.push_back({name, [cap](const IsingInstance& in, std::uint64_t) {
                           DpOptions opt;
                           opt.width_cap = cap;
                           return solve_exact(in, opt);
                         }});
    } else if (name == "selby") {
      const BenchArgs a = args;
      solvers.push_back(
          {name, [a](const IsingInstance& in, std::uint64_t seed) {
             return run_heuristic(
                 in, heuristic_config(seed, a.w, a.time_s, a.perturb_frac,
                                      a.restart, a.width_cap));
           }});
    } else {
      std::cerr << "bench: unknown solver '" << name
                << "' (known: bf, dp, selby)\n";
      return kExitUsage;
    }
  }
  if (solvers.empty()) {
    std::cerr << "bench: no solvers selected\n";
    return kExitUsage;
  }

  BatchOptions opt;
  opt.workers = args.workers;
  opt.seeds = parse_seed_range(args.seeds);
  const std::vector<BenchRecord> records = run_batch(instances, solvers, opt);

  std::string payload;
  if (args.format == "csv") {
    payload = summary_to_csv(summarize(instances, records, solver_order));
  } else if (args.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
      nlohmann::ordered_json j;
      j["instance"] = rec.task.instance_name;
      j["solver"] = rec.task.solver_name;
      j["seed"] = rec.task.seed;
      j["status"] = to_string(rec.status);
      if (rec.energy_num)
        j["energy_num"] = *rec.energy_num;
      else
        j["energy_num"] = nullptr;
      j["gamma"] = rec.gamma;
      j["elapsed_ms"] = rec.elapsed_ms;
      if (!rec.message.empty()) j["message"] = rec.message;
      arr.push_back(std::move(j));
    }
    payload = arr.dump(2) + "\n";
  } else {
    std::cerr << "bench: unknown format '" << args.format << "'\n";
    return kExitUsage;
  }
  if (args.out.empty())
    std::cout << payload;
  else
    write_text(args.out, payload);
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  using namespace chising;
  const IsingInstance inst = read_instance_file(args.instance);
  const std::vector<std::int8_t> spins = read_spins_file(args.spins_file);
  if (spins.size() != inst.n()) {
    std::cerr << "verify: instance has " << inst.n() << " spins, file has "
              << spins.size() << "\n";
    return kExitFailure;
  }
  const std::int64_t e = inst.energy_num(spins);
  nlohmann::ordered_json j;
  j["n"] = inst.n();
  j["gamma"] = inst.gamma();
  j["energy_num"] = e;
  j["energy"] = e / gamma_denominator(inst);
  std::cout << j.dump(2) << "\n";
  if (args.expect && *args.expect != e) {
    std::cerr << "verify: energy numerator " << e << " does not match expected "
              << *args.expect << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_embed(const EmbedArgs& args) {
  using namespace chising;
  if (args.instance.empty()) {
    if (args.out.empty()) {
      std::cerr << "embed: --out is required\n";
      return kExitUsage;
    }
    const CliqueEmbedding emb = build_clique_embedding(args.k);
    validate_embedding(emb, ChimeraGraph(args.k));
    std::ofstream f(args.out);
    if (!f) throw std::runtime_error("cannot write file: " + args.out);
    write_embedding(f, emb);
    return kExitOk;
  }
  if (args.out.empty()) {
    std::cerr << "embed: --out is required\n";
    return kExitUsage;
  }
  const IsingInstance logical = read_instance_file(args.instance);
  const EmbeddedInstance embedded = embed_instance(logical, args.k);
  write_instance_file(args.out, embedded.physical);
  if (!args.emb_out.empty()) {
    std::ofstream f(args.emb_out);
    if (!f) throw std::runtime_error("cannot write file: " + args.emb_out);
    write_embedding(f, embedded.emb);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising ground states on Chimera graphs: generators, exact "
               "solvers, subgraph-sampling heuristic, benchmarks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "Generate a benchmark instance");
  cgen->add_option("--family", gen.family,
                   "mgw, rfr, selby, mis, k64ising, k64maxcut")
      ->required();
  cgen->add_option("--k", gen.k, "Chimera size C_k")->check(CLI::Range(1, 64));
  cgen->add_option("--seed", gen.seed, "RNG seed");
  cgen->add_option("--p", gen.p_percent, "k64 edge probability in percent")
      ->check(CLI::Range(0, 100));
  cgen->add_option("--out", gen.out, "output instance file")->required();
  cgen->add_option("--logical-out", gen.logical_out,
                   "also write the logical instance (k64 families)");
  cgen->add_option("--emb-out", gen.emb_out,
                   "also write the embedding chains (k64 families)");
  cgen->add_option("--faults", gen.faults_file, "fault list file");
  cgen->add_option("--extra-faults", gen.extra_faults,
                   "knock out this many extra random qubits")
      ->check(CLI::NonNegativeNumber);

  SolveArgs solve;
  auto* csolve = app.add_subcommand("solve", "Solve an instance file");
  csolve->add_option("instance", solve.instance, "instance file")->required();
  csolve->add_flag("--exact", solve.exact, "boundary DP solver (default)");
  csolve->add_flag("--selby", solve.selby, "subgraph-sampling heuristic");
  csolve->add_flag("--bf", solve.bf, "brute force (small instances)");
  csolve->add_option("--w", solve.w, "heuristic strip width");
  csolve->add_option("--seed", solve.seed, "heuristic seed");
  csolve->add_option("--time-limit", solve.time_limit_s,
                     "heuristic budget in seconds");
  csolve->add_option("--perturb-frac", solve.perturb_frac,
                     "fraction of cells redrawn between passes");
  csolve->add_option("--restart", solve.restart, "perturb or fresh");
  csolve->add_option("--width-cap", solve.width_cap, "DP width cap");
  csolve->add_option("--target", solve.target,
                     "stop when this energy numerator is reached");
  csolve->add_option("--max-passes", solve.max_passes,
                     "stop after this many passes");
  csolve->add_option("--out", solve.out, "write the best spins to this file");
  csolve->add_option("--trace", solve.trace_out,
                     "write the per-pass trace JSON to this file");

  BenchArgs bench;
  auto* cbench = app.add_subcommand("bench", "Run a solver batch");
  cbench->add_option("--dir", bench.dir, "directory of .ising files");
  cbench->add_option("files", bench.files, "instance files");
  cbench->add_option("--solvers", bench.solvers, "comma list: bf, dp, selby");
  cbench->add_option("--seeds", bench.seeds, "seed or inclusive range a..b");
  cbench->add_option("--time", bench.time_s, "per-run heuristic budget (s)");
  cbench->add_option("--w", bench.w, "heuristic strip width");
  cbench->add_option("--perturb-frac", bench.perturb_frac,
                     "fraction of cells redrawn between passes");
  cbench->add_option("--restart", bench.restart, "perturb or fresh");
  cbench->add_option("--width-cap", bench.width_cap, "DP width cap");
  cbench->add_option("--workers", bench.workers, "thread pool size")
      ->check(CLI::PositiveNumber);
  cbench->add_option("--format", bench.format, "csv or json");
  cbench->add_option("--out", bench.out, "output file (default stdout)");

  VerifyArgs verify;
  auto* cverify =
      app.add_subcommand("verify", "Re-evaluate a claimed configuration");
  cverify->add_option("instance", verify.instance, "instance file")
      ->required();
  cverify->add_option("--spins", verify.spins_file, "spin file")->required();
  cverify->add_option("--expect", verify.expect,
                      "expected energy numerator");

  EmbedArgs embed;
  auto* cembed = app.add_subcommand(
      "embed", "Write the clique embedding or embed a logical instance");
  cembed->add_option("--k", embed.k, "Chimera size C_k")
      ->check(CLI::Range(1, 64));
  cembed->add_option("--instance", embed.instance, "logical instance file");
  cembed->add_option("--out", embed.out, "output file");
  cembed->add_option("--emb-out", embed.emb_out,
                     "embedding chain file (with --instance)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (csolve->parsed()) return run_solve(solve);
    if (cbench->parsed()) return run_bench(bench);
    if (cverify->parsed()) return run_verify(verify);
    if (cembed->parsed()) return run_embed(embed);
  } catch (const std::exception& ex) {
    std::cerr << argv[0] << ": " << ex.what() << "\n";
    return kExitFailure;
  }
  std::cerr << "no subcommand given\n";
  return kExitUsage;
}
