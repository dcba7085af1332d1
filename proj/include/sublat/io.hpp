// Copyright 2026 The sublat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBLAT_IO_HPP_
#define SUBLAT_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sublat/analysis.hpp"
#include "sublat/relations.hpp"
#include "sublat/space.hpp"

namespace sublat {

// Exit codes of every CLI command.
inline constexpr int kExitHolds = 0;   // the queried property holds
inline constexpr int kExitFails = 1;   // the queried property fails
inline constexpr int kExitError = 2;   // malformed input or usage

// A parsed subspace document: point labels, generator rows and optional
// flags carried in the file. Command-line flags override file flags.
struct InputDocument {
  std::vector<std::string> points;
  std::vector<std::vector<Scalar>> generators;
  std::optional<Mode> mode;
  std::optional<bool> c0;
  std::optional<std::string> infinity_label;
};

// Parses a subspace document from JSON text. Fraction entries must be
// exact: strings "p/q" / "p" or JSON integers; decimals are rejected.
// Throws std::invalid_argument with a descriptive message.
InputDocument parse_subspace_document(const std::string& json_text);

// Document -> space and canonical subspace.
Subspace build_subspace(const InputDocument& doc);

// Convenience used throughout the tests: JSON text -> subspace.
Subspace parse_subspace(const std::string& json_text);

// Normalized echo of a parsed document (fraction strings in lowest terms).
// Parsing the echo reproduces the identical subspace.
std::vector<std::vector<std::string>> echo_generators(const InputDocument& doc);

// Relation graph in DOT format: one node per point, equality relations as
// undirected double edges, proportionality relations as directed labeled
// edges, zero relations as node annotations. Output is deterministic.
std::string emit_dot(const RelationSystem& r);

// Runs one CLI command (analyze | relations | hull | witness |
// check-member | dot) against the given argument list; writes the report
// to `out` and diagnostics to `err`; returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublat

#endif  // SUBLAT_IO_HPP_
