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

#ifndef CHISING_IO_HPP_
#define CHISING_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "chising/chimera.hpp"
#include "chising/embedding.hpp"
#include "chising/exact.hpp"
#include "chising/ising.hpp"
#include "chising/transforms.hpp"

namespace chising {

//! Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

//! Text formats are documented in docs/formats.md. Instances round-trip
//! byte-identically: write(read(x)) == x for files this library writes.

void write_instance(std::ostream& os, const IsingInstance& inst);
void write_instance_file(const std::string& path, const IsingInstance& inst);

//! Reads an instance and, when its shape matches a fault-free Chimera C_k
//! (n == 8k^2 and every edge is a coupler), attaches that layout.
IsingInstance read_instance(std::istream& is);
IsingInstance read_instance_file(const std::string& path);

void write_maxcut(std::ostream& os, const MaxCutInstance& mc);
void write_maxcut_file(const std::string& path, const MaxCutInstance& mc);
MaxCutInstance read_maxcut(std::istream& is);
MaxCutInstance read_maxcut_file(const std::string& path);

//! Fault list: `node r c s u` and `coupler r1 c1 s1 u1 r2 c2 s2 u2` lines.
ChimeraFaults read_faults(std::istream& is, int k);
ChimeraFaults read_faults_file(const std::string& path, int k);
void write_faults(std::ostream& os, const ChimeraFaults& faults);

//! Embedding: one line per logical node listing its chain's qubit ids.
void write_embedding(std::ostream& os, const CliqueEmbedding& emb);
CliqueEmbedding read_embedding(std::istream& is);

//! Spins: whitespace-separated +1 / -1 tokens (newlines allowed).
void write_spins(std::ostream& os, const std::vector<std::int8_t>& spins);
std::vector<std::int8_t> read_spins(std::istream& is);
std::vector<std::int8_t> read_spins_file(const std::string& path);

//! JSON solve report (schema documented in docs/formats.md). Deterministic
//! fields (solver, status, energy, spins, seed) are stable across runs;
//! timing lives under "timing" so outputs can be compared modulo it.
std::string report_to_json(const SolveReport& rep, bool include_timing = true);

}  // namespace chising

#endif  // CHISING_IO_HPP_
