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

#include "chising/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

namespace chising {

double t99_microseconds(double t_run_us, double p_success) {
  if (t_run_us < 0.0) throw std::invalid_argument("run time must be >= 0");
  if (!(p_success >= 0.0 && p_success <= 1.0))
    throw std::invalid_argument("success probability must lie in [0, 1]");
  if (p_success == 0.0) return std::numeric_limits<double>::infinity();
  if (p_success == 1.0) return t_run_us;
  return t_run_us * std::log(0.01) / std::log1p(-p_success);
}

double success_fraction(const std::vector<std::int64_t>& energies,
                        std::int64_t optimum_num) {
  if (energies.empty()) return 0.0;
  const auto hits = std::count_if(
      energies.begin(), energies.end(),
      [optimum_num](std::int64_t e) { return e <= optimum_num; });
  return static_cast<double>(hits) / static_cast<double>(energies.size());
}

GapResult gap_percent(std::int64_t achieved_num, std::int64_t best_num) {
  GapResult r;
  const auto diff = static_cast<double>(achieved_num - best_num);
  if (best_num == 0) {
    r.value = diff;
    r.relative = false;
  } else {
    r.value = 100.0 * diff / std::abs(static_cast<double>(best_num));
    r.relative = true;
  }
  return r;
}

std::vector<BenchRecord> run_batch(
    const std::vector<std::pair<std::string, const IsingInstance*>>& instances,
    const std::vector<SolverSpec>& solvers, const BatchOptions& opt) {
  if (opt.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (opt.seeds.empty()) throw std::invalid_argument("need at least one seed");

  struct Task {
    const IsingInstance* inst;
    const SolverSpec* solver;
    BenchTask key;
  };
  std::vector<Task> tasks;
  for (const auto& [name, inst] : instances) {
    if (inst == nullptr) throw std::invalid_argument("null instance pointer");
    for (const auto& solver : solvers)
      for (const std::uint64_t seed : opt.seeds)
        tasks.push_back({inst, &solver, {name, solver.name, seed}});
  }

  std::vector<BenchRecord> records(tasks.size());
  // Records live at fixed task indices, so the result is identical for any
  // worker count; only wall-clock scheduling differs.
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      BenchRecord& rec = records[i];
      rec.task = t.key;
      try {
        const SolveReport rep = t.solver->run(*t.inst, t.key.seed);
        rec.status = rep.status;
        rec.energy_num = rep.energy_num;
        rec.gamma = rep.gamma;
        rec.elapsed_ms = rep.elapsed_ms;
        if (rep.status == SolveStatus::kCapped ||
            rep.status == SolveStatus::kError)
          rec.message = rep.message.empty() ? "solver refused" : rep.message;
      } catch (const std::exception& ex) {
        rec.status = SolveStatus::kError;
        rec.message = ex.what();
      } catch (...) {
        rec.status = SolveStatus::kError;
        rec.message = "unknown solver failure";
      }
    }
  };

  if (opt.workers == 1 || tasks.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(opt.workers, tasks.size());
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::vector<FamilySummary> summarize(
    const std::vector<std::pair<std::string, const IsingInstance*>>& instances,
    const std::vector<BenchRecord>& records,
    const std::vector<std::string>& solver_order) {
  struct InstanceStats {
    std::string family;
    std::uint32_t nodes = 0;
    std::size_t edges = 0;
    std::optional<std::int64_t> best;
    bool opt_known = false;
  };
  std::map<std::string, InstanceStats> by_name;
  std::vector<std::string> family_order;
  for (const auto& [name, inst] : instances) {
    InstanceStats st;
    st.family = inst->meta.family.empty() ? "(none)" : inst->meta.family;
    st.nodes = static_cast<std::uint32_t>(inst->material_nodes().size());
    st.edges = inst->edges().size();
    by_name[name] = st;
    if (std::find(family_order.begin(), family_order.end(), st.family) ==
        family_order.end())
      family_order.push_back(st.family);
  }

  for (const auto& rec : records) {
    auto it = by_name.find(rec.task.instance_name);
    if (it == by_name.end() || !rec.energy_num) continue;
    auto& st = it->second;
    if (!st.best || *rec.energy_num < *st.best) st.best = *rec.energy_num;
    if (rec.status == SolveStatus::kOptimal) st.opt_known = true;
  }

  std::vector<FamilySummary> rows;
  for (const auto& fam : family_order) {
    FamilySummary row;
    row.family = fam;
    row.nodes_min = std::numeric_limits<std::uint32_t>::max();
    row.edges_min = std::numeric_limits<std::size_t>::max();
    double node_sum = 0.0, edge_sum = 0.0;
    for (const auto& [name, st] : by_name) {
      if (st.family != fam) continue;
      ++row.instances;
      row.nodes_min = std::min(row.nodes_min, st.nodes);
      row.nodes_max = std::max(row.nodes_max, st.nodes);
      row.edges_min = std::min(row.edges_min, st.edges);
      row.edges_max = std::max(row.edges_max, st.edges);
      node_sum += st.nodes;
      edge_sum += static_cast<double>(st.edges);
      if (st.opt_known) ++row.opt_known;
    }
    if (row.instances == 0) {
      row.nodes_min = 0;
      row.edges_min = 0;
      rows.push_back(row);
      continue;
    }
    row.nodes_avg = node_sum / row.instances;
    row.edges_avg = edge_sum / row.instances;

    for (const auto& solver : solver_order) row.best_by_solver.emplace_back(solver, 0);
    const std::string& gap_solver =
        solver_order.empty() ? std::string() : solver_order.back();
    double gap_sum = 0.0;
    int gap_count = 0;
    row.gap_max = 0.0;
    for (const auto& rec : records) {
      const auto it = by_name.find(rec.task.instance_name);
      if (it == by_name.end() || it->second.family != fam) continue;
      if (!rec.energy_num || !it->second.best) continue;
      if (*rec.energy_num <= *it->second.best) {
        for (auto& [solver, count] : row.best_by_solver)
          if (solver == rec.task.solver_name) ++count;
      }
      if (rec.task.solver_name == gap_solver) {
        const GapResult g = gap_percent(*rec.energy_num, *it->second.best);
        gap_sum += g.value;
        gap_count += 1;
        row.gap_max = std::max(row.gap_max, g.value);
      }
    }
    if (gap_count > 0) row.gap_avg = gap_sum / gap_count;
    rows.push_back(row);
  }
  return rows;
}

std::string summary_to_csv(const std::vector<FamilySummary>& rows) {
  std::string out =
      "family,instances,nodes_min,nodes_max,nodes_avg,edges_min,edges_max,"
      "edges_avg,opt_known";
  if (!rows.empty())
    for (const auto& [solver, count] : rows.front().best_by_solver)
      out += ",best_" + solver;
  out += ",gap_max,gap_avg\n";

  char buf[64];
  auto fmt = [&buf](const char* spec, double v) {
    std::snprintf(buf, sizeof buf, spec, v);
    return std::string(buf);
  };
  for (const auto& row : rows) {
    out += row.family;
    out += ',' + std::to_string(row.instances);
    out += ',' + std::to_string(row.nodes_min);
    out += ',' + std::to_string(row.nodes_max);
    out += ',' + fmt("%.2f", row.nodes_avg);
    out += ',' + std::to_string(row.edges_min);
    out += ',' + std::to_string(row.edges_max);
    out += ',' + fmt("%.2f", row.edges_avg);
    out += ',' + std::to_string(row.opt_known);
    for (const auto& [solver, count] : row.best_by_solver)
      out += ',' + std::to_string(count);
    out += ',' + fmt("%.4f", row.gap_max);
    out += ',' + fmt("%.4f", row.gap_avg);
    out += '\n';
  }
  return out;
}

TransformCounts transform_counts(const IsingInstance& inst) {
  const MaxCutInstance mc = ising_to_maxcut(inst);
  return {mc.non_isolated_count(), mc.edge_count()};
}

}  // namespace chising
