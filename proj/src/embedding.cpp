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

#include "chising/embedding.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace chising {

namespace {

std::uint32_t qubit_id(int k, int r, int c, int side, int u) {
  return static_cast<std::uint32_t>(((r * k) + c) * 8 + side * 4 + u);
}

bool working_edge(const ChimeraGraph& g, std::uint32_t p, std::uint32_t q) {
  if (!g.is_working(p) || !g.is_working(q)) return false;
  const auto nb = g.neighbors(p);
  return std::binary_search(nb.begin(), nb.end(), q);
}

}  // namespace

CliqueEmbedding build_clique_embedding(int k) {
  if (k < 1) throw std::invalid_argument("clique embedding needs k >= 1");
  CliqueEmbedding emb;
  emb.k = k;
  emb.chains.resize(4u * k);
  for (int a = 0; a < 4 * k; ++a) {
    const int g = a / 4;
    const int u = a % 4;
    auto& chain = emb.chains[a];
    chain.reserve(k + 1);
    for (int r = 0; r <= g; ++r) chain.push_back(qubit_id(k, r, g, 0, u));
    for (int c = g; c < k; ++c) chain.push_back(qubit_id(k, g, c, 1, u));
  }
  return emb;
}

std::pair<std::uint32_t, std::uint32_t> crossing_coupler(
    const CliqueEmbedding& emb, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t nodes = emb.logical_nodes();
  if (a >= nodes || b >= nodes || a == b)
    throw std::invalid_argument("crossing_coupler: invalid logical pair (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ")");
  if (a > b) std::swap(a, b);
  const int ga = static_cast<int>(a) / 4;
  const int ua = static_cast<int>(a) % 4;
  const int gb = static_cast<int>(b) / 4;
  const int ub = static_cast<int>(b) % 4;
  return {qubit_id(emb.k, ga, gb, 0, ub), qubit_id(emb.k, ga, gb, 1, ua)};
}

void validate_embedding(const CliqueEmbedding& emb, const ChimeraGraph& g) {
  if (emb.k != g.k())
    throw std::invalid_argument("embedding built for k = " +
                                std::to_string(emb.k) + ", graph has k = " +
                                std::to_string(g.k()));
  std::vector<std::string> bad;
  std::vector<std::uint32_t> owner(g.id_space(), ChimeraGraph::npos);

  for (std::uint32_t a = 0; a < emb.logical_nodes(); ++a) {
    const auto& chain = emb.chains[a];
    for (std::uint32_t q : chain) {
      if (q >= owner.size()) {
        bad.push_back("chain " + std::to_string(a) + ": qubit " +
                      std::to_string(q) + " out of range");
        continue;
      }
      if (owner[q] != ChimeraGraph::npos)
        bad.push_back("qubit " + std::to_string(q) + " shared by chains " +
                      std::to_string(owner[q]) + " and " + std::to_string(a));
      owner[q] = a;
      if (!g.is_working(q))
        bad.push_back("chain " + std::to_string(a) + ": qubit " +
                      std::to_string(q) + " is faulty");
    }
    for (std::size_t t = 0; t + 1 < chain.size(); ++t)
      if (!working_edge(g, chain[t], chain[t + 1]))
        bad.push_back("chain " + std::to_string(a) + ": coupler (" +
                      std::to_string(chain[t]) + ", " +
                      std::to_string(chain[t + 1]) + ") unavailable");
  }

  for (std::uint32_t a = 0; a < emb.logical_nodes(); ++a)
    for (std::uint32_t b = a + 1; b < emb.logical_nodes(); ++b) {
      const auto [p, q] = crossing_coupler(emb, a, b);
      if (!working_edge(g, p, q))
        bad.push_back("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                      "): crossing coupler (" + std::to_string(p) + ", " +
                      std::to_string(q) + ") unavailable");
    }

  if (!bad.empty()) {
    std::string msg = "embedding invalid:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw std::runtime_error(msg);
  }
}

EmbeddedInstance embed_instance(const IsingInstance& logical, int k) {
  if (k < 1) throw std::invalid_argument("embed_instance needs k >= 1");
  if (logical.n() != 4u * static_cast<std::uint32_t>(k))
    throw std::invalid_argument(
        "logical instance must have exactly 4k = " + std::to_string(4 * k) +
        " nodes, got " + std::to_string(logical.n()));

  EmbeddedInstance out;
  out.emb = build_clique_embedding(k);
  out.chain_num = 10;
  out.chain_offset_num =
      -out.chain_num * static_cast<std::int64_t>(out.emb.logical_nodes()) * k;

  IsingInstance phys(8u * static_cast<std::uint32_t>(k) * k, 10);
  for (const auto& chain : out.emb.chains)
    for (std::size_t t = 0; t + 1 < chain.size(); ++t)
      phys.add_edge(chain[t], chain[t + 1], -out.chain_num);
  for (const auto& e : logical.edges()) {
    const auto [p, q] = crossing_coupler(out.emb, e.u, e.v);
    phys.add_edge(p, q, e.num);
  }
  for (std::uint32_t a = 0; a < logical.n(); ++a) {
    const std::int64_t h = logical.field(a);
    if (h == 0) continue;
    const std::uint32_t head = out.emb.chains[a].front();
    const std::uint32_t tail = out.emb.chains[a].back();
    phys.set_field(head, h - h / 2);
    phys.set_field(tail, h / 2);
  }
  phys.finalize();
  phys.attach_layout(std::make_shared<const ChimeraGraph>(k));
  phys.meta = logical.meta;
  out.physical = std::move(phys);
  return out;
}

std::vector<std::int8_t> decode_chains(const CliqueEmbedding& emb,
                                       std::span<const std::int8_t> physical) {
  std::vector<std::int8_t> logical(emb.logical_nodes(), 1);
  for (std::uint32_t a = 0; a < emb.logical_nodes(); ++a) {
    const auto& chain = emb.chains[a];
    int sum = 0;
    for (std::uint32_t q : chain) {
      if (q >= physical.size())
        throw std::invalid_argument("physical spin vector too short");
      sum += physical[q];
    }
    if (sum != 0) {
      logical[a] = sum > 0 ? 1 : -1;
    } else {
      const std::uint32_t low = *std::min_element(chain.begin(), chain.end());
      logical[a] = physical[low];
    }
  }
  return logical;
}

std::vector<std::int8_t> extend_to_chains(const CliqueEmbedding& emb,
                                          std::uint32_t physical_n,
                                          std::span<const std::int8_t> logical) {
  if (logical.size() != emb.logical_nodes())
    throw std::invalid_argument("logical spin vector size mismatch");
  std::vector<std::int8_t> physical(physical_n, 1);
  for (std::uint32_t a = 0; a < emb.logical_nodes(); ++a)
    for (std::uint32_t q : emb.chains[a]) {
      if (q >= physical_n)
        throw std::invalid_argument("physical size too small for embedding");
      physical[q] = logical[a];
    }
  return physical;
}

}  // namespace chising
