// Copyright 2026 The cind Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIND_IO_HPP_
#define CIND_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cind/countermodel.hpp"
#include "cind/diagram.hpp"
#include "cind/formula.hpp"
#include "cind/inference.hpp"
#include "cind/protocol.hpp"
#include "cind/rendering.hpp"

namespace cind {

using Json = nlohmann::json;

// {"vars": [...], "domains": {"a": ["0","1"]}, "runs": [{"a": "0"}, ...]}
Json protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const Json& j);

// Base labels, vertex count, edges with label arrays and direction flags, and
// [Δ] in canonical atom syntax. Loading replays the edge pairs as extension
// steps and checks the listed formulas.
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// Proof tree with diagrams embedded as extension-step lists.
Json trace_to_json(const ProofTrace& t);
ProofTrace trace_from_json(const Json& j);

// Protocol JSON plus "certificate", "goal" and "hypotheses".
Json refutation_to_json(const RefutationResult& r);
RefutationResult refutation_from_json(const Json& j);

// "(A1;A2;A3 | B1;B2;B3 | C1;C2;C3 | D)", each set as {a,b} or {}.
RenderTuple parse_tuple(std::string_view text);
std::string print_tuple(const RenderTuple& t);

// Line-oriented problem file:
//   var a b c
//   assume <atom>
//   goal <atom>
//   formula <formula>
// '#' starts a comment. Variables must be declared before use.
struct ProblemSpec {
  VarSet universe;
  std::vector<AtomicFormula> hypotheses;
  std::optional<AtomicFormula> goal;
  std::vector<Formula> formulas;
};

ProblemSpec parse_problem(std::string_view text);
std::string print_problem(const ProblemSpec& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cind

#endif  // CIND_IO_HPP_
