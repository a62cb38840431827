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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "chising/bench.hpp"
#include "chising/embedding.hpp"
#include "chising/exact.hpp"
#include "chising/generators.hpp"
#include "chising/io.hpp"
#include "chising/rng.hpp"
#include "chising/subsample.hpp"
#include "chising/transforms.hpp"

namespace py = pybind11;
using namespace chising;

namespace {

std::vector<std::int8_t> to_spins(const std::vector<int>& raw, std::uint32_t n) {
  if (raw.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " spins");
  std::vector<std::int8_t> spins(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != 1 && raw[i] != -1)
      throw std::invalid_argument("spins must be +1 or -1");
    spins[i] = static_cast<std::int8_t>(raw[i]);
  }
  return spins;
}

py::dict report_to_dict(const SolveReport& rep) {
  py::dict d;
  d["solver"] = rep.solver;
  d["status"] = std::string(to_string(rep.status));
  if (rep.energy_num) {
    d["energy_num"] = *rep.energy_num;
    d["energy"] = rep.energy();
  } else {
    d["energy_num"] = py::none();
    d["energy"] = py::none();
  }
  d["gamma"] = rep.gamma;
  py::list spins;
  for (const std::int8_t s : rep.spins) spins.append(int(s));
  d["spins"] = std::move(spins);
  d["elapsed_ms"] = rep.elapsed_ms;
  d["message"] = rep.message;
  if (rep.seed) d["seed"] = *rep.seed;
  py::list trace;
  for (const auto& t : rep.trace) {
    py::dict p;
    p["pass"] = t.pass;
    p["elapsed_ms"] = t.elapsed_ms;
    p["energy_num"] = t.energy_num;
    p["best_num"] = t.best_num;
    trace.append(std::move(p));
  }
  d["trace"] = std::move(trace);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ising ground states on Chimera graphs";

  py::class_<PortableRng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &PortableRng::next)
      .def("uniform_below", &PortableRng::uniform_below, py::arg("n"))
      .def("spin", &PortableRng::spin);

  py::class_<IsingInstance>(m, "Instance")
      .def_property_readonly("n", &IsingInstance::n)
      .def_property_readonly("gamma", &IsingInstance::gamma)
      .def_property_readonly(
          "family", [](const IsingInstance& i) { return i.meta.family; })
      .def_property_readonly("name",
                             [](const IsingInstance& i) { return i.meta.name; })
      .def_property_readonly("edge_count",
                             [](const IsingInstance& i) {
                               return i.edges().size();
                             })
      .def("edges",
           [](const IsingInstance& i) {
             py::list out;
             for (const auto& e : i.edges())
               out.append(py::make_tuple(e.u, e.v, e.num));
             return out;
           })
      .def("fields",
           [](const IsingInstance& i) { return i.fields(); })
      .def("energy_num",
           [](const IsingInstance& i, const std::vector<int>& spins) {
             return i.energy_num(to_spins(spins, i.n()));
           },
           py::arg("spins"))
      .def("material_count", [](const IsingInstance& i) {
        return i.material_nodes().size();
      });

  m.def("gen_family",
        [](const std::string& family, int k, std::uint64_t seed,
           int extra_faults) {
          FaultPolicy faults;
          faults.extra_random_nodes = extra_faults;
          return gen_family(family, k, faults, seed);
        },
        py::arg("family"), py::arg("k"), py::arg("seed"),
        py::arg("extra_faults") = 0);

  m.def("read_instance", &read_instance_file, py::arg("path"));
  m.def("write_instance", &write_instance_file, py::arg("path"),
        py::arg("instance"));

  m.def("chimera_counts",
        [](int k, bool with_field) {
          const ChimeraGraph g(k, with_field);
          return py::make_tuple(g.node_count(), g.edge_count());
        },
        py::arg("k"), py::arg("with_field") = false);

  m.def("brute_force",
        [](const IsingInstance& inst, int cap) {
          BruteForceOptions opt;
          opt.cap = cap;
          return report_to_dict(brute_force(inst, opt));
        },
        py::arg("instance"), py::arg("cap") = 24);

  m.def("solve_exact",
        [](const IsingInstance& inst, int width_cap) {
          DpOptions opt;
          opt.width_cap = width_cap;
          return report_to_dict(solve_exact(inst, opt));
        },
        py::arg("instance"), py::arg("width_cap") = 20);

  m.def("run_heuristic",
        [](const IsingInstance& inst, int w, std::uint64_t seed,
           double time_limit_s, std::optional<int> max_passes,
           std::optional<std::int64_t> target_num, const std::string& restart,
           double perturb_fraction) {
          HeuristicConfig cfg;
          cfg.w = w;
          cfg.seed = seed;
          cfg.time_limit_s = time_limit_s;
          cfg.max_passes = max_passes;
          cfg.target_num = target_num;
          cfg.perturb_fraction = perturb_fraction;
          if (restart == "perturb")
            cfg.restart = RestartPolicy::kPerturbBest;
          else if (restart == "fresh")
            cfg.restart = RestartPolicy::kFresh;
          else
            throw std::invalid_argument("restart must be 'perturb' or 'fresh'");
          return report_to_dict(run_heuristic(inst, cfg));
        },
        py::arg("instance"), py::arg("w") = 3, py::arg("seed") = 4711,
        py::arg("time_limit_s") = 30.0, py::arg("max_passes") = py::none(),
        py::arg("target_num") = py::none(), py::arg("restart") = "perturb",
        py::arg("perturb_fraction") = 0.20);

  m.def("preprocess_counts",
        [](const IsingInstance& inst) {
          const PreprocessResult pre = preprocess_dominated_fields(inst);
          return py::make_tuple(pre.reduced.n(), pre.fixed.size(),
                                pre.constant_num);
        },
        py::arg("instance"));

  m.def("maxcut_counts",
        [](const IsingInstance& inst) {
          const TransformCounts c = transform_counts(inst);
          return py::make_tuple(c.nodes, c.edges);
        },
        py::arg("instance"));

  m.def("t99_microseconds", &t99_microseconds, py::arg("t_run_us"),
        py::arg("p_success"));

  m.def("embed_clique",
        [](const IsingInstance& logical, int k) {
          const EmbeddedInstance e = embed_instance(logical, k);
          py::dict d;
          d["physical"] = e.physical;
          d["chains"] = e.emb.chains;
          d["chain_offset_num"] = e.chain_offset_num;
          return d;
        },
        py::arg("logical"), py::arg("k"));
}
