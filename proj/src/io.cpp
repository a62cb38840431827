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

#include "chising/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace chising {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  return f;
}

//! Line reader that skips blanks and '#' comments while tracking numbers.
struct LineReader {
  std::istream& is;
  int line_no = 0;

  //! Returns false at EOF; otherwise fills `tokens` from the next
  //! non-empty, non-comment line.
  bool next_tokens(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

std::int64_t parse_i64(const std::string& tok, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", line);
  }
  if (used != tok.size())
    throw ParseError("trailing characters in integer '" + tok + "'", line);
  return v;
}

std::uint32_t parse_node(const std::string& tok, std::uint64_t n, int line) {
  const std::int64_t v = parse_i64(tok, line);
  if (v < 0 || static_cast<std::uint64_t>(v) >= n)
    throw ParseError("node id " + tok + " out of range [0, " +
                     std::to_string(n) + ")", line);
  return static_cast<std::uint32_t>(v);
}

//! Attaches a fault-free C_k layout when the instance has exactly the
//! Chimera id space and every edge is a coupler of that graph.
void try_attach_layout(IsingInstance& inst) {
  const std::uint32_t n = inst.n();
  if (n == 0 || n % 8 != 0) return;
  const std::uint32_t cells = n / 8;
  const auto k = static_cast<std::uint32_t>(std::lround(std::sqrt(cells)));
  if (k == 0 || k * k != cells) return;
  auto g = std::make_shared<const ChimeraGraph>(static_cast<int>(k));
  for (const auto& e : inst.edges()) {
    const auto nb = g->neighbors(e.u);
    if (!std::binary_search(nb.begin(), nb.end(), e.v)) return;
  }
  inst.attach_layout(std::move(g));
}

void write_weight_lines(std::ostream& os, const std::vector<std::int64_t>& h,
                        const std::vector<WeightedEdge>& edges) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0) os << "h " << i << ' ' << h[i] << '\n';
  std::vector<WeightedEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (const auto& e : sorted)
    os << "J " << e.u << ' ' << e.v << ' ' << e.num << '\n';
}

}  // namespace

void write_instance(std::ostream& os, const IsingInstance& inst) {
  os << "ising " << inst.n() << ' ' << inst.edges().size() << ' '
     << inst.gamma() << '\n';
  write_weight_lines(os, inst.fields(), inst.edges());
}

void write_instance_file(const std::string& path, const IsingInstance& inst) {
  auto f = open_out(path);
  write_instance(f, inst);
}

IsingInstance read_instance(std::istream& is) {
  LineReader rd{is};
  std::vector<std::string> tok;
  if (!rd.next_tokens(tok)) throw ParseError("empty instance file", rd.line_no);
  if (tok.size() != 4 || tok[0] != "ising")
    throw ParseError("expected header 'ising <n> <m> <gamma>'", rd.line_no);
  const std::int64_t n = parse_i64(tok[1], rd.line_no);
  const std::int64_t m = parse_i64(tok[2], rd.line_no);
  const std::int64_t gamma = parse_i64(tok[3], rd.line_no);
  if (n < 0 || m < 0 || gamma < 0)
    throw ParseError("negative header field", rd.line_no);

  IsingInstance inst(static_cast<std::uint32_t>(n), static_cast<int>(gamma));
  std::vector<std::uint8_t> has_field(n, 0);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen_edges;
  std::int64_t edges_seen = 0;
  while (rd.next_tokens(tok)) {
    if (tok[0] == "h") {
      if (tok.size() != 3)
        throw ParseError("expected 'h <node> <numerator>'", rd.line_no);
      const std::uint32_t i = parse_node(tok[1], n, rd.line_no);
      if (has_field[i])
        throw ParseError("duplicate field for node " + tok[1], rd.line_no);
      has_field[i] = 1;
      inst.set_field(i, parse_i64(tok[2], rd.line_no));
    } else if (tok[0] == "J") {
      if (tok.size() != 4)
        throw ParseError("expected 'J <node> <node> <numerator>'", rd.line_no);
      const std::uint32_t u = parse_node(tok[1], n, rd.line_no);
      const std::uint32_t v = parse_node(tok[2], n, rd.line_no);
      const std::int64_t num = parse_i64(tok[3], rd.line_no);
      if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second)
        throw ParseError(
            "duplicate coupling (" + tok[1] + ", " + tok[2] + ")", rd.line_no);
      try {
        inst.add_edge(u, v, num, /*keep_zero=*/true);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), rd.line_no);
      }
      ++edges_seen;
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", rd.line_no);
    }
  }
  if (edges_seen != m)
    throw ParseError("header promised " + std::to_string(m) + " couplings, found " +
                     std::to_string(edges_seen), rd.line_no);
  inst.finalize();
  try_attach_layout(inst);
  return inst;
}

IsingInstance read_instance_file(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_instance(f);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what(), ex.line());
  }
}

void write_maxcut(std::ostream& os, const MaxCutInstance& mc) {
  os << "maxcut " << mc.node_count << ' ' << mc.edges.size() << ' '
     << mc.gamma << '\n';
  if (mc.field_node) os << "v " << *mc.field_node << '\n';
  std::vector<WeightedEdge> sorted = mc.edges;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (const auto& e : sorted)
    os << "c " << e.u << ' ' << e.v << ' ' << e.num << '\n';
}

void write_maxcut_file(const std::string& path, const MaxCutInstance& mc) {
  auto f = open_out(path);
  write_maxcut(f, mc);
}

MaxCutInstance read_maxcut(std::istream& is) {
  LineReader rd{is};
  std::vector<std::string> tok;
  if (!rd.next_tokens(tok)) throw ParseError("empty maxcut file", rd.line_no);
  if (tok.size() != 4 || tok[0] != "maxcut")
    throw ParseError("expected header 'maxcut <n> <m> <gamma>'", rd.line_no);
  const std::int64_t n = parse_i64(tok[1], rd.line_no);
  const std::int64_t m = parse_i64(tok[2], rd.line_no);
  const std::int64_t gamma = parse_i64(tok[3], rd.line_no);
  if (n < 0 || m < 0 || gamma < 0)
    throw ParseError("negative header field", rd.line_no);

  MaxCutInstance mc;
  mc.node_count = static_cast<std::uint32_t>(n);
  mc.gamma = static_cast<int>(gamma);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  while (rd.next_tokens(tok)) {
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError("expected 'v <node>'", rd.line_no);
      if (mc.field_node)
        throw ParseError("duplicate field node line", rd.line_no);
      mc.field_node = parse_node(tok[1], n, rd.line_no);
    } else if (tok[0] == "c") {
      if (tok.size() != 4)
        throw ParseError("expected 'c <node> <node> <weight>'", rd.line_no);
      std::uint32_t u = parse_node(tok[1], n, rd.line_no);
      std::uint32_t v = parse_node(tok[2], n, rd.line_no);
      if (u == v) throw ParseError("self loop on node " + tok[1], rd.line_no);
      if (u > v) std::swap(u, v);
      if (std::find(seen.begin(), seen.end(), std::pair(u, v)) != seen.end())
        throw ParseError("duplicate edge (" + tok[1] + ", " + tok[2] + ")",
                         rd.line_no);
      seen.emplace_back(u, v);
      mc.edges.push_back({u, v, parse_i64(tok[3], rd.line_no)});
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", rd.line_no);
    }
  }
  if (static_cast<std::int64_t>(mc.edges.size()) != m)
    throw ParseError("header promised " + std::to_string(m) + " edges, found " +
                     std::to_string(mc.edges.size()), rd.line_no);
  mc.total_weight_num = 0;
  for (const auto& e : mc.edges) mc.total_weight_num += e.num;
  return mc;
}

MaxCutInstance read_maxcut_file(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_maxcut(f);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what(), ex.line());
  }
}

ChimeraFaults read_faults(std::istream& is, int k) {
  if (k < 1) throw std::invalid_argument("read_faults needs k >= 1");
  LineReader rd{is};
  std::vector<std::string> tok;
  ChimeraFaults out;
  auto parse_coord = [&](std::size_t base) {
    ChimeraCoord c;
    const auto r = parse_i64(tok[base], rd.line_no);
    const auto col = parse_i64(tok[base + 1], rd.line_no);
    const auto s = parse_i64(tok[base + 2], rd.line_no);
    const auto u = parse_i64(tok[base + 3], rd.line_no);
    if (r < 0 || r >= k || col < 0 || col >= k || s < 0 || s > 1 || u < 0 ||
        u > 3)
      throw ParseError("coordinate out of range for C_" + std::to_string(k),
                       rd.line_no);
    c.row = static_cast<std::uint16_t>(r);
    c.col = static_cast<std::uint16_t>(col);
    c.side = static_cast<std::uint8_t>(s);
    c.unit = static_cast<std::uint8_t>(u);
    return c;
  };
  while (rd.next_tokens(tok)) {
    if (tok[0] == "node") {
      if (tok.size() != 5)
        throw ParseError("expected 'node <row> <col> <side> <unit>'",
                         rd.line_no);
      out.nodes.push_back(parse_coord(1));
    } else if (tok[0] == "coupler") {
      if (tok.size() != 9)
        throw ParseError("expected 'coupler' with two coordinates",
                         rd.line_no);
      out.couplers.emplace_back(parse_coord(1), parse_coord(5));
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", rd.line_no);
    }
  }
  return out;
}

ChimeraFaults read_faults_file(const std::string& path, int k) {
  auto f = open_in(path);
  try {
    return read_faults(f, k);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what(), ex.line());
  }
}

void write_faults(std::ostream& os, const ChimeraFaults& faults) {
  for (const auto& c : faults.nodes)
    os << "node " << c.row << ' ' << c.col << ' ' << int(c.side) << ' '
       << int(c.unit) << '\n';
  for (const auto& [a, b] : faults.couplers)
    os << "coupler " << a.row << ' ' << a.col << ' ' << int(a.side) << ' '
       << int(a.unit) << ' ' << b.row << ' ' << b.col << ' ' << int(b.side)
       << ' ' << int(b.unit) << '\n';
}

void write_embedding(std::ostream& os, const CliqueEmbedding& emb) {
  for (const auto& chain : emb.chains) {
    for (std::size_t t = 0; t < chain.size(); ++t)
      os << (t ? " " : "") << chain[t];
    os << '\n';
  }
}

CliqueEmbedding read_embedding(std::istream& is) {
  LineReader rd{is};
  std::vector<std::string> tok;
  CliqueEmbedding emb;
  while (rd.next_tokens(tok)) {
    std::vector<std::uint32_t> chain;
    chain.reserve(tok.size());
    for (const auto& t : tok) {
      const std::int64_t v = parse_i64(t, rd.line_no);
      if (v < 0) throw ParseError("negative qubit id", rd.line_no);
      chain.push_back(static_cast<std::uint32_t>(v));
    }
    emb.chains.push_back(std::move(chain));
  }
  if (emb.chains.empty() || emb.chains.size() % 4 != 0)
    throw ParseError("embedding must list 4k chains", rd.line_no);
  emb.k = static_cast<int>(emb.chains.size() / 4);
  return emb;
}

void write_spins(std::ostream& os, const std::vector<std::int8_t>& spins) {
  for (std::size_t i = 0; i < spins.size(); ++i)
    os << (i ? " " : "") << (spins[i] > 0 ? "+1" : "-1");
  os << '\n';
}

std::vector<std::int8_t> read_spins(std::istream& is) {
  LineReader rd{is};
  std::vector<std::string> tok;
  std::vector<std::int8_t> spins;
  while (rd.next_tokens(tok))
    for (const auto& t : tok) {
      if (t == "+1" || t == "1")
        spins.push_back(1);
      else if (t == "-1")
        spins.push_back(-1);
      else
        throw ParseError("expected '+1' or '-1', got '" + t + "'", rd.line_no);
    }
  return spins;
}

std::vector<std::int8_t> read_spins_file(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_spins(f);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what(), ex.line());
  }
}

std::string report_to_json(const SolveReport& rep, bool include_timing) {
  nlohmann::ordered_json j;
  j["solver"] = rep.solver;
  j["status"] = to_string(rep.status);
  if (rep.energy_num) {
    j["energy_num"] = *rep.energy_num;
    j["energy"] = rep.energy();
  } else {
    j["energy_num"] = nullptr;
    j["energy"] = nullptr;
  }
  j["gamma"] = rep.gamma;
  j["spins"] = nlohmann::ordered_json::array();
  for (const std::int8_t s : rep.spins) j["spins"].push_back(int(s));
  if (rep.lower_bound_num) j["lower_bound_num"] = *rep.lower_bound_num;
  if (rep.seed) j["seed"] = *rep.seed;
  if (!rep.message.empty()) j["message"] = rep.message;
  if (!rep.trace.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : rep.trace) {
      nlohmann::ordered_json p;
      p["pass"] = t.pass;
      if (include_timing) p["elapsed_ms"] = t.elapsed_ms;
      p["energy_num"] = t.energy_num;
      p["best_num"] = t.best_num;
      arr.push_back(std::move(p));
    }
    j["trace"] = std::move(arr);
  }
  if (include_timing) j["timing"] = {{"elapsed_ms", rep.elapsed_ms}};
  return j.dump(2) + "\n";
}

}  // namespace chising
