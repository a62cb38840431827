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

#include <chrono>
#include <vector>

#include "chising/exact.hpp"
#include "chising/generators.hpp"
#include "chising/ising.hpp"
#include "chising/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chising;

namespace {

struct Raw {
  std::vector<oracle::Edge> edges;
  std::vector<std::int64_t> fields;
};

IsingInstance random_instance(std::uint32_t n, int edge_pct,
                              std::uint64_t seed, Raw* raw = nullptr) {
  PortableRng rng(seed);
  IsingInstance inst(n, 10);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.uniform_below(100) >= std::uint64_t(edge_pct)) continue;
      const std::int64_t w = rng.uniform_int(-10, 10);
      if (w == 0) continue;
      inst.add_edge(u, v, w);
      if (raw) raw->edges.push_back({u, v, w});
    }
  for (std::uint32_t i = 0; i < n; ++i)
    inst.set_field(i, rng.uniform_int(-10, 10));
  if (raw) raw->fields = inst.fields();
  inst.finalize();
  return inst;
}

}  // namespace

TEST_CASE("brute force agrees with the enumeration oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Raw raw;
    const std::uint32_t n = 2 + std::uint32_t(seed % 11);
    const auto inst = random_instance(n, 40, seed, &raw);
    const auto rep = brute_force(inst);
    REQUIRE(rep.status == SolveStatus::kOptimal);
    const auto best = oracle::exhaustive_min(n, raw.edges, raw.fields);
    CHECK(*rep.energy_num == best.energy);
    CHECK(rep.spins.size() == n);
    CHECK(inst.energy_num(rep.spins) == best.energy);
    CHECK(*rep.lower_bound_num == best.energy);
  }
}

TEST_CASE("brute force reports immaterial spins as +1") {
  IsingInstance inst(6, 10);
  inst.add_edge(0, 1, 6);
  inst.add_edge(1, 4, -3);
  inst.finalize();
  const auto rep = brute_force(inst);
  REQUIRE(rep.status == SolveStatus::kOptimal);
  CHECK(rep.spins[2] == 1);
  CHECK(rep.spins[3] == 1);
  CHECK(rep.spins[5] == 1);
}

TEST_CASE("brute force refuses above its material cap") {
  IsingInstance chain(26, 10);
  for (std::uint32_t i = 0; i + 1 < 26; ++i) chain.add_edge(i, i + 1, 1);
  chain.finalize();
  CHECK(brute_force(chain).status == SolveStatus::kCapped);

  const auto small = random_instance(6, 80, 5);
  CHECK(brute_force(small, {.cap = 5}).status == SolveStatus::kCapped);
  CHECK(brute_force(small, {.cap = 6}).status == SolveStatus::kOptimal);
}

TEST_CASE("default sweep on a full chimera graph has the expected width") {
  CHECK(build_sweep(gen_family("mgw", 1, {}, 3)).width == 4);
  CHECK(build_sweep(gen_family("mgw", 2, {}, 3)).width == 12);
  CHECK(build_sweep(gen_family("mgw", 3, {}, 3)).width == 16);
  CHECK(build_sweep(gen_family("selby", 3, {}, 9)).width == 16);
}

TEST_CASE("sweep construction validates the order") {
  IsingInstance inst(4, 10);
  inst.add_edge(0, 1, 5);
  inst.finalize();
  const std::vector<std::uint32_t> dup{0, 0, 1};
  CHECK_THROWS_AS(build_sweep_with_order(inst, dup), std::invalid_argument);
  const std::vector<std::uint32_t> oob{0, 9};
  CHECK_THROWS_AS(build_sweep_with_order(inst, oob), std::invalid_argument);
  const std::vector<std::uint32_t> missing{0};
  CHECK_THROWS_AS(build_sweep_with_order(inst, missing),
                  std::invalid_argument);
}

TEST_CASE("immaterial nodes in a custom order drop in their own step") {
  IsingInstance inst(5, 10);
  inst.add_edge(0, 1, 7);
  inst.finalize();
  const std::vector<std::uint32_t> order{4, 0, 3, 1, 2};
  const auto dec = build_sweep_with_order(inst, order);
  REQUIRE(dec.steps.size() == 5);
  CHECK(dec.steps[0].self_drop);
  CHECK(dec.steps[2].self_drop);
  CHECK(dec.width <= 2);

  const auto rep = solve_dp(inst, dec);
  REQUIRE(rep.status == SolveStatus::kOptimal);
  CHECK(*rep.energy_num == -7);
  CHECK(rep.spins[2] == 1);
  CHECK(rep.spins[3] == 1);
  CHECK(rep.spins[4] == 1);
}

TEST_CASE("dp matches brute force on random instances") {
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    const std::uint32_t n = 2 + std::uint32_t(seed % 11);
    const int pct = 20 + int(seed % 60);
    const auto inst = random_instance(n, pct, seed);
    const auto bf = brute_force(inst);
    const auto dp = solve_dp(inst, build_sweep(inst));
    REQUIRE(bf.status == SolveStatus::kOptimal);
    REQUIRE(dp.status == SolveStatus::kOptimal);
    CHECK(*dp.energy_num == *bf.energy_num);
    CHECK(inst.energy_num(dp.spins) == *bf.energy_num);
    CHECK(*dp.lower_bound_num == *dp.energy_num);
  }
}

TEST_CASE("dp respects the width cap") {
  const auto inst = gen_family("mgw", 5, {}, 11);
  const auto dec = build_sweep(inst);
  CHECK(dec.width == 24);
  const auto rep = solve_dp(inst, dec);
  CHECK(rep.status == SolveStatus::kCapped);
  CHECK(rep.message.find("width") != std::string::npos);
  CHECK(!rep.energy_num.has_value());
}

TEST_CASE("dp refuses boundaries beyond its slot budget") {
  IsingInstance big(32, 0);
  for (std::uint32_t u = 0; u < 32; ++u)
    for (std::uint32_t v = u + 1; v < 32; ++v)
      big.add_edge(u, v, (u + v) % 2 ? 1 : -1);
  big.finalize();
  const auto dec = build_sweep(big);
  CHECK(dec.width == 31);
  DpOptions wide;
  wide.width_cap = 32;
  const auto rep = solve_dp(big, dec, wide);
  CHECK(rep.status == SolveStatus::kCapped);
  CHECK(rep.message.find("slots") != std::string::npos);
}

TEST_CASE("dp rejects weight masses that could overflow") {
  IsingInstance inst(3, 0);
  inst.add_edge(0, 1, std::int64_t(5'000'000'000'000'000'000));
  inst.finalize();
  const auto rep = solve_dp(inst, build_sweep(inst));
  CHECK(rep.status == SolveStatus::kError);
  CHECK(rep.message.find("overflow") != std::string::npos);
}

TEST_CASE("dp honors an expired deadline") {
  const auto inst = gen_family("rfr", 2, {}, 7);
  const auto dec = build_sweep(inst);
  DpOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const auto rep = solve_dp(inst, dec, opt);
  CHECK(rep.status == SolveStatus::kError);
  CHECK(rep.message == "deadline exceeded");
}

TEST_CASE("tie preferences break degenerate optima deterministically") {
  IsingInstance inst(2, 10);
  inst.add_edge(0, 1, 10);
  inst.finalize();
  const auto dec = build_sweep(inst);

  const std::vector<std::int8_t> plus{1, 1};
  const std::vector<std::int8_t> minus{-1, -1};
  DpOptions po;
  po.tie_pref = plus;
  DpOptions mo;
  mo.tie_pref = minus;

  const auto a = solve_dp(inst, dec, po);
  const auto b = solve_dp(inst, dec, po);
  const auto c = solve_dp(inst, dec, mo);
  REQUIRE(a.status == SolveStatus::kOptimal);
  CHECK(*a.energy_num == -10);
  CHECK(*c.energy_num == -10);
  CHECK(a.spins == b.spins);
  CHECK(a.spins != c.spins);
  CHECK(inst.energy_num(a.spins) == -10);
  CHECK(inst.energy_num(c.spins) == -10);

  const std::vector<std::int8_t> wrong_size{1};
  DpOptions bad;
  bad.tie_pref = wrong_size;
  CHECK_THROWS_AS(solve_dp(inst, dec, bad), std::invalid_argument);
}

TEST_CASE("conditional subproblems evaluate and optimize correctly") {
  for (std::uint64_t seed = 40; seed < 48; ++seed) {
    Raw raw;
    const auto inst = random_instance(12, 35, seed, &raw);
    const std::vector<std::uint32_t> free_nodes{2, 5, 7, 8, 11};
    PortableRng rng(seed + 1000);
    std::vector<std::int8_t> fixed(12);
    for (auto& s : fixed) s = std::int8_t(rng.spin());

    const auto cp = make_conditional(inst, free_nodes, fixed);
    CHECK(cp.sub.n() == free_nodes.size());
    CHECK(cp.sub_to_orig ==
          std::vector<std::uint32_t>(free_nodes.begin(), free_nodes.end()));

    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::int8_t> sub_s(free_nodes.size());
      for (auto& s : sub_s) s = std::int8_t(rng.spin());
      auto full = fixed;
      for (std::size_t i = 0; i < free_nodes.size(); ++i)
        full[free_nodes[i]] = sub_s[i];
      CHECK(cp.constant_num + cp.sub.energy_num(sub_s) ==
            oracle::energy(12, raw.edges, raw.fields, full));
    }

    const auto sub_best = brute_force(cp.sub);
    REQUIRE(sub_best.status == SolveStatus::kOptimal);
    const auto cond = oracle::exhaustive_conditional_min(
        12, raw.edges, raw.fields, free_nodes, fixed);
    CHECK(cp.constant_num + *sub_best.energy_num == cond.energy);
  }

  IsingInstance inst(3, 10);
  inst.add_edge(0, 1, 2);
  inst.finalize();
  const std::vector<std::uint32_t> unsorted{1, 0};
  const std::vector<std::int8_t> fixed{1, 1, 1};
  CHECK_THROWS_AS(make_conditional(inst, unsorted, fixed),
                  std::invalid_argument);
  const std::vector<std::int8_t> short_fixed{1, 1};
  const std::vector<std::uint32_t> ok{0};
  CHECK_THROWS_AS(make_conditional(inst, ok, short_fixed),
                  std::invalid_argument);
}

TEST_CASE("solve_exact wraps sweep construction and dp") {
  const auto inst = gen_family("rfr", 1, {}, 2026);
  const auto ex = solve_exact(inst);
  const auto bf = brute_force(inst);
  REQUIRE(ex.status == SolveStatus::kOptimal);
  REQUIRE(bf.status == SolveStatus::kOptimal);
  CHECK(*ex.energy_num == *bf.energy_num);
  CHECK(ex.solver == "exact");
  CHECK(ex.gamma == 10);
}

TEST_CASE("solvers accept instances with no material nodes") {
  IsingInstance inst(3, 10);
  inst.finalize();
  const auto bf = brute_force(inst);
  REQUIRE(bf.status == SolveStatus::kOptimal);
  CHECK(*bf.energy_num == 0);
  CHECK(bf.spins == std::vector<std::int8_t>{1, 1, 1});
  const auto dp = solve_exact(inst);
  REQUIRE(dp.status == SolveStatus::kOptimal);
  CHECK(*dp.energy_num == 0);
  CHECK(dp.spins == std::vector<std::int8_t>{1, 1, 1});
}
