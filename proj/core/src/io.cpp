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

#include "cind/io.hpp"

#include <fstream>
#include <sstream>

#include "cind/error.hpp"

namespace cind {

namespace {

Json set_to_json(const VarSet& s) { return Json(s.names()); }

VarSet set_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of variable names");
  return VarSet(j.get<std::vector<std::string>>());
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ValidationError(std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

Json protocol_to_json(const Protocol& p) {
  Json domains = Json::object();
  for (std::size_t i = 0; i < p.var_count(); ++i) {
    domains[p.universe().names()[i]] = p.domain(i);
  }
  Json runs = Json::array();
  for (const auto& r : p.runs()) runs.push_back(Json(r));
  return Json{{"vars", set_to_json(p.universe())}, {"domains", domains}, {"runs", runs}};
}

Protocol protocol_from_json(const Json& j) {
  auto vars = field<std::vector<std::string>>(j, "vars");
  VarSet universe(vars);
  if (universe.size() != vars.size()) throw ValidationError("'vars' lists a variable twice");
  auto domains = field<std::map<std::string, std::vector<std::string>>>(j, "domains");
  const Json& runs_json = j.at("runs");
  if (!runs_json.is_array()) throw ValidationError("'runs' must be an array");
  std::vector<Run> runs;
  for (std::size_t i = 0; i < runs_json.size(); ++i) {
    try {
      runs.push_back(runs_json[i].get<Run>());
    } catch (const nlohmann::json::exception&) {
      throw ValidationError("run " + std::to_string(i) +
                            " must be an object mapping variables to string values");
    }
  }
  return Protocol(std::move(universe), std::move(domains), runs);
}

Json diagram_to_json(const Diagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"labels", set_to_json(e.labels)},
                     {"directed", e.directed}});
  }
  Json formulas = Json::array();
  for (const auto& f : d.formulas()) formulas.push_back(print_atom(f));
  return Json{{"base_labels", set_to_json(d.base_labels())},
              {"vertices", d.vertex_count()},
              {"edges", edges},
              {"formulas", formulas}};
}

Diagram diagram_from_json(const Json& j) {
  VarSet q = set_from_json(j.at("base_labels"));
  const Json& edges = j.at("edges");
  if (!edges.is_array() || edges.empty() || edges.size() % 2 == 0) {
    throw ValidationError("diagram edges must be the base edge followed by edge pairs");
  }
  auto edge = [&](std::size_t i) {
    const Json& e = edges[i];
    return LabeledEdge{field<VertexId>(e, "from"), field<VertexId>(e, "to"),
                       set_from_json(e.at("labels")), field<bool>(e, "directed")};
  };
  const LabeledEdge base = edge(0);
  if (base.from != kPlus || base.to != kMinus || base.labels != q) {
    throw ValidationError("first edge must join v+ and v- with the base labels");
  }
  Diagram d = Diagram::basic(q);
  for (std::size_t i = 1; i < edges.size(); i += 2) {
    const LabeledEdge left = edge(i);
    const LabeledEdge right = edge(i + 1);
    if (left.to != d.vertex_count() || right.to != left.to) {
      throw ValidationError("edges " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " must both end at new vertex " + std::to_string(d.vertex_count()));
    }
    const VarSet c = left.labels & right.labels;
    d = d.extend(left.from, right.from, left.labels - c, right.labels - c, c);
  }
  if (j.contains("formulas")) {
    std::set<AtomicFormula> listed;
    for (const auto& f : j.at("formulas")) listed.insert(parse_atom(f.get<std::string>()));
    if (listed != d.formulas()) {
      throw ValidationError("listed formulas differ from those consumed by the edges");
    }
  }
  if (j.contains("vertices") && j.at("vertices").get<std::size_t>() != d.vertex_count()) {
    throw ValidationError("vertex count disagrees with the edge list");
  }
  return d;
}

namespace {

Json steps_to_json(const Diagram& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps()) {
    steps.push_back({{"u", s.u}, {"v", s.v}, {"formula", print_atom(s.formula)}});
  }
  return Json{{"base_labels", set_to_json(d.base_labels())}, {"steps", steps}};
}

Diagram steps_from_json(const Json& j) {
  std::vector<ExtensionStep> steps;
  VertexId next = 2;
  for (const auto& s : j.at("steps")) {
    steps.push_back(ExtensionStep{field<VertexId>(s, "u"), field<VertexId>(s, "v"),
                                  parse_atom(field<std::string>(s, "formula")), next++});
  }
  return Diagram::from_steps(set_from_json(j.at("base_labels")), steps);
}

Rule rule_from_name(const std::string& name) {
  for (Rule r : {Rule::kHypothesis, Rule::kEmptySet, Rule::kSymmetry, Rule::kMonotonicity,
                 Rule::kDiagram}) {
    if (name == rule_name(r)) return r;
  }
  throw ValidationError("unknown proof rule '" + name + "'");
}

}  // namespace

Json trace_to_json(const ProofTrace& t) {
  Json j{{"rule", rule_name(t->rule)}, {"conclusion", print_atom(t->conclusion)}};
  if (t->rule == Rule::kMonotonicity) j["dropped"] = set_to_json(t->dropped);
  if (t->instance) {
    const auto& in = *t->instance;
    Json premises = Json::array();
    for (const auto& p : in.premises) premises.push_back(print_atom(p));
    j["instance"] = {{"diagram", steps_to_json(in.diagram)},
                     {"tuple", print_tuple(in.tuple)},
                     {"witness", {in.witness.w1, in.witness.w2}},
                     {"premises", premises},
                     {"antecedent", print_atom(in.antecedent)},
                     {"consequent", print_atom(in.consequent)}};
  }
  if (!t->children.empty()) {
    Json kids = Json::array();
    for (const auto& c : t->children) kids.push_back(trace_to_json(c));
    j["children"] = kids;
  }
  return j;
}

ProofTrace trace_from_json(const Json& j) {
  const Rule rule = rule_from_name(field<std::string>(j, "rule"));
  auto node = std::make_shared<ProofNode>(rule, parse_atom(field<std::string>(j, "conclusion")));
  if (j.contains("dropped")) node->dropped = set_from_json(j.at("dropped"));
  if (j.contains("instance")) {
    const Json& in = j.at("instance");
    const auto witness = field<std::vector<VertexId>>(in, "witness");
    if (witness.size() != 2) throw ValidationError("witness must be a vertex pair");
    std::set<AtomicFormula> premises;
    for (const auto& p : in.at("premises")) premises.insert(parse_atom(p.get<std::string>()));
    node->instance = AxiomInstance{steps_from_json(in.at("diagram")),
                                   parse_tuple(field<std::string>(in, "tuple")),
                                   Witness{witness[0], witness[1]},
                                   std::move(premises),
                                   parse_atom(field<std::string>(in, "antecedent")),
                                   parse_atom(field<std::string>(in, "consequent"))};
  }
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) node->children.push_back(trace_from_json(c));
  }
  return node;
}

Json refutation_to_json(const RefutationResult& r) {
  Json j = protocol_to_json(r.protocol());
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses()) hyps.push_back(print_atom(h));
  j["hypotheses"] = hyps;
  j["goal"] = print_atom(r.failing_goal());
  j["certificate"] = {{"run1", r.certificate().run1},
                      {"run2", r.certificate().run2},
                      {"condition", set_to_json(r.certificate().condition)}};
  return j;
}

RefutationResult refutation_from_json(const Json& j) {
  std::vector<AtomicFormula> hyps;
  for (const auto& h : j.at("hypotheses")) hyps.push_back(parse_atom(h.get<std::string>()));
  RefutationResult r(protocol_from_json(j), std::move(hyps),
                     parse_atom(field<std::string>(j, "goal")));
  const Json& cert = j.at("certificate");
  if (field<std::size_t>(cert, "run1") != r.certificate().run1 ||
      field<std::size_t>(cert, "run2") != r.certificate().run2 ||
      set_from_json(cert.at("condition")) != r.certificate().condition) {
    throw ValidationError("stored certificate does not match the protocol");
  }
  return r;
}

namespace {

std::string set_text(const VarSet& s) { return "{" + s.join() + "}"; }

}  // namespace

RenderTuple parse_tuple(std::string_view text) {
  auto fail = [&](const std::string& what) -> RenderTuple {
    throw ParseError("render tuple: " + what, 0);
  };
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    return fail("expected '(A1;A2;A3 | B1;B2;B3 | C1;C2;C3 | D)'");
  }
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<std::string_view> groups;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == '|') {
      groups.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (groups.size() != 4) return fail("expected four '|'-separated groups");
  std::vector<VarSet> sets;
  for (std::size_t g = 0; g < 4; ++g) {
    std::vector<std::string_view> parts;
    std::size_t s = 0;
    for (std::size_t i = 0; i <= groups[g].size(); ++i) {
      if (i == groups[g].size() || groups[g][i] == ';') {
        parts.push_back(groups[g].substr(s, i - s));
        s = i + 1;
      }
    }
    if (parts.size() != (g == 3 ? 1u : 3u)) {
      return fail(g == 3 ? "D group takes one set" : "each group takes three ';'-separated sets");
    }
    for (auto p : parts) sets.push_back(parse_varset(p));
  }
  RenderTuple t{sets[0], sets[1], sets[2], sets[3], sets[4],
                sets[5], sets[6], sets[7], sets[8], sets[9]};
  t.validate();
  return t;
}

std::string print_tuple(const RenderTuple& t) {
  return "(" + set_text(t.a1) + ";" + set_text(t.a2) + ";" + set_text(t.a3) + " | " +
         set_text(t.b1) + ";" + set_text(t.b2) + ";" + set_text(t.b3) + " | " +
         set_text(t.c1) + ";" + set_text(t.c2) + ";" + set_text(t.c3) + " | " + set_text(t.d) +
         ")";
}

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool declared = false;

  auto check_declared = [&](const VarSet& used, std::size_t at) {
    if (!declared || !used.is_subset_of(spec.universe)) {
      throw ParseError("line " + std::to_string(at) + ": undeclared variable(s) {" +
                           (used - spec.universe).join() + "}",
                       0, at);
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    std::getline(words, rest);

    try {
      if (keyword == "var") {
        std::istringstream names(rest);
        std::string name;
        while (names >> name) spec.universe.insert(name);
        declared = true;
      } else if (keyword == "assume") {
        AtomicFormula a = parse_atom(rest);
        check_declared(a.vars(), lineno);
        spec.hypotheses.push_back(std::move(a));
      } else if (keyword == "goal") {
        if (spec.goal) throw ParseError("line " + std::to_string(lineno) + ": second goal", 0, lineno);
        AtomicFormula a = parse_atom(rest);
        check_declared(a.vars(), lineno);
        spec.goal = std::move(a);
      } else if (keyword == "formula") {
        Formula f = parse_formula(rest);
        check_declared(free_vars(f), lineno);
        spec.formulas.push_back(std::move(f));
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'",
                         0, lineno);
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position(), lineno);
    } catch (const ValidationError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), 0, lineno);
    }
  }
  return spec;
}

std::string print_problem(const ProblemSpec& p) {
  std::string out = "var";
  for (const auto& v : p.universe) out += " " + v;
  out += "\n";
  for (const auto& h : p.hypotheses) out += "assume " + print_atom(h) + "\n";
  if (p.goal) out += "goal " + print_atom(*p.goal) + "\n";
  for (const auto& f : p.formulas) out += "formula " + print_formula(f) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace cind
