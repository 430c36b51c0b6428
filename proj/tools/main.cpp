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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cind/countermodel.hpp"
#include "cind/error.hpp"
#include "cind/inference.hpp"
#include "cind/io.hpp"
#include "cind/protocol.hpp"
#include "cind/rendering.hpp"
#include "selftest.hpp"

namespace {

using namespace cind;

enum Exit : int { kOk = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

struct Options {
  bool json = false;
  std::string dot;
  std::uint64_t seed = 0;
  std::size_t max_vertices = SearchBudget{}.max_diagram_vertices;
  std::size_t max_diagrams = SearchBudget{}.max_diagrams;
  std::size_t depth = SearchBudget{}.max_subgoal_depth;
  std::size_t rounds = SearchBudget{}.max_rounds;
  std::int64_t time_ms = SearchBudget{}.time_limit.count();
  std::size_t max_runs = RefuteBounds{}.max_runs;
  std::size_t max_domain = RefuteBounds{}.max_domain;
  std::size_t samples = RefuteBounds{}.random_samples;
  std::string input;
  std::string problem;
  std::vector<std::string> inputs;
  std::vector<std::string> formulas;
  std::string formulas_file;
  std::string trace_out;
  std::string out;
  std::string report_out;
  std::string tuple;
  std::string q;
  std::size_t chain_depth = 0;
};

class Report {
 public:
  Report(const Options& o, std::string command, int argc, char** argv)
      : json_(o.json), start_(std::chrono::steady_clock::now()) {
    Json echo = Json::array();
    for (int i = 0; i < argc; ++i) echo.push_back(argv[i]);
    doc_ = {{"command", command}, {"argv", echo}, {"artifacts", Json::object()}};
  }

  void say(const std::string& line) const {
    if (!json_) std::cout << line << '\n';
  }
  Json& doc() { return doc_; }
  void artifact(const std::string& kind, const std::string& path) {
    doc_["artifacts"][kind] = path;
    say("wrote " + kind + ": " + path);
  }

  int finish(const std::string& outcome, int code) {
    doc_["outcome"] = outcome;
    doc_["exit_code"] = code;
    doc_["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    if (json_) {
      std::cout << doc_.dump(2) << '\n';
    } else {
      std::cout << "outcome: " << outcome << '\n';
    }
    std::cout.flush();
    return code;
  }

 private:
  bool json_;
  std::chrono::steady_clock::time_point start_;
  Json doc_;
};

SearchBudget budget_from(const Options& o) {
  SearchBudget b;
  b.max_diagram_vertices = o.max_vertices;
  b.max_diagrams = o.max_diagrams;
  b.max_subgoal_depth = o.depth;
  b.max_rounds = o.rounds;
  b.time_limit = std::chrono::milliseconds(o.time_ms);
  b.validate();
  return b;
}

RefuteBounds bounds_from(const Options& o) {
  if (o.max_domain == 0) throw ValidationError("--max-domain must be positive");
  RefuteBounds r;
  r.max_domain = o.max_domain;
  r.max_runs = o.max_runs;
  r.random_samples = o.samples;
  r.seed = o.seed;
  return r;
}

Json budget_json(const SearchBudget& b) {
  return {{"max_vertices", b.max_diagram_vertices},
          {"max_diagrams", b.max_diagrams},
          {"depth", b.max_subgoal_depth},
          {"rounds", b.max_rounds},
          {"time_ms", b.time_limit.count()}};
}

Json bounds_json(const RefuteBounds& r) {
  return {{"max_domain", r.max_domain},
          {"max_runs", r.max_runs},
          {"samples", r.random_samples},
          {"seed", r.seed}};
}

ProblemSpec load_problem(const std::string& path, bool need_goal) {
  ProblemSpec spec;
  try {
    spec = parse_problem(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what(), e.position(),
                     e.line());
  }
  if (need_goal && !spec.goal) throw ValidationError(path + ": problem has no goal");
  return spec;
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

const ProofNode* first_diagram_step(const ProofTrace& t) {
  if (t->rule == Rule::kDiagram) return t.get();
  for (const auto& c : t->children) {
    if (const ProofNode* n = first_diagram_step(c)) return n;
  }
  return nullptr;
}

void emit_trace(Report& rep, const Options& o, const ProofTrace& trace) {
  TraceShape shape = trace_shape(trace);
  rep.doc()["trace_shape"] = {{"nodes", shape.nodes},
                              {"diagram_steps", shape.diagram_steps},
                              {"max_diagram_vertices", shape.max_diagram_vertices},
                              {"diagram_nesting", shape.diagram_nesting}};
  rep.say("proved " + print_atom(trace->conclusion) + " (" + std::to_string(shape.nodes) +
          " nodes, " + std::to_string(shape.diagram_steps) + " diagram steps, largest diagram " +
          std::to_string(shape.max_diagram_vertices) + " vertices)");
  if (!o.trace_out.empty()) {
    write_file(o.trace_out, trace_to_json(trace).dump(2) + "\n");
    rep.artifact("trace", o.trace_out);
  }
  if (!o.dot.empty()) {
    if (const ProofNode* n = first_diagram_step(trace)) {
      write_file(o.dot, to_dot(n->instance->diagram));
      rep.artifact("dot", o.dot);
    }
  }
}

void emit_refutation(Report& rep, const Options& o, const RefutationResult& r) {
  const auto& cert = r.certificate();
  rep.doc()["countermodel"] = refutation_to_json(r);
  rep.say("refuted " + print_atom(r.failing_goal()) + " by a protocol with " +
          std::to_string(r.protocol().run_count()) + " runs");
  rep.say("certificate: runs " + std::to_string(cert.run1) + " and " +
          std::to_string(cert.run2) + " agree on {" + cert.condition.join() +
          "} but no run merges them");
  if (!o.out.empty()) {
    write_file(o.out, refutation_to_json(r).dump(2) + "\n");
    rep.artifact("countermodel", o.out);
  }
}

std::string run_text(const Run& r) {
  std::string s = "{";
  for (const auto& [k, v] : r) s += (s.size() > 1 ? "," : "") + k + "=" + v;
  return s + "}";
}

int cmd_check(const Options& o, Report& rep) {
  Protocol p = protocol_from_json(load_json(o.input));
  std::vector<Formula> formulas;
  for (const auto& text : o.formulas) formulas.push_back(parse_formula(text));
  if (!o.formulas_file.empty()) {
    ProblemSpec spec = load_problem(o.formulas_file, false);
    for (const auto& f : spec.formulas) formulas.push_back(f);
    for (const auto& h : spec.hypotheses) formulas.push_back(Formula::atom(h));
    if (spec.goal) formulas.push_back(Formula::atom(*spec.goal));
  }
  if (formulas.empty()) throw ValidationError("no formulas to check");
  Json verdicts = Json::array();
  bool all = true;
  for (const auto& f : formulas) {
    if (!free_vars(f).is_subset_of(p.universe())) {
      throw ValidationError("formula " + print_formula(f) + " uses variables outside the protocol");
    }
    const bool holds = models(p, f);
    all = all && holds;
    Json v{{"formula", print_formula(f)}, {"verdict", holds ? "holds" : "fails"}};
    rep.say(print_formula(f) + ": " + (holds ? "holds" : "fails"));
    if (!holds && f.kind() == Formula::Kind::kAtom) {
      auto [i, j] = *find_violation(p, f.as_atom());
      v["certificate"] = {{"run1", i}, {"run2", j}};
      rep.say("  runs " + std::to_string(i) + " " + run_text(p.run(i)) + " and " +
              std::to_string(j) + " " + run_text(p.run(j)) + " cannot be merged");
    }
    verdicts.push_back(v);
  }
  rep.doc()["verdicts"] = verdicts;
  return rep.finish(all ? "holds" : "fails", all ? kOk : kNegative);
}

int cmd_prove(const Options& o, Report& rep) {
  ProblemSpec spec = load_problem(o.input, true);
  SearchBudget b = budget_from(o);
  rep.doc()["budget"] = budget_json(b);
  SearchStats stats;
  auto trace = derive(spec.hypotheses, *spec.goal, b, &stats);
  rep.doc()["stats"] = {{"diagrams", stats.diagrams},
                        {"instances", stats.instances},
                        {"subgoal_searches", stats.subgoal_searches},
                        {"rounds", stats.rounds},
                        {"lemmas", stats.lemmas},
                        {"out_of_time", stats.out_of_time}};
  if (!trace) {
    rep.say("no derivation of " + print_atom(*spec.goal) + " within budget");
    return rep.finish("unknown", kUnknown);
  }
  emit_trace(rep, o, *trace);
  return rep.finish("proved", kOk);
}

int cmd_refute(const Options& o, Report& rep) {
  ProblemSpec spec = load_problem(o.input, true);
  RefuteBounds r = bounds_from(o);
  rep.doc()["bounds"] = bounds_json(r);
  auto result = refute(spec.hypotheses, *spec.goal, r);
  if (!result) {
    rep.say("no countermodel to " + print_atom(*spec.goal) + " within bounds");
    return rep.finish("unknown", kUnknown);
  }
  emit_refutation(rep, o, *result);
  return rep.finish("refuted", kNegative);
}

int cmd_decide(const Options& o, Report& rep) {
  ProblemSpec spec = load_problem(o.input, true);
  SearchBudget b = budget_from(o);
  RefuteBounds r = bounds_from(o);
  rep.doc()["budget"] = budget_json(b);
  rep.doc()["bounds"] = bounds_json(r);
  Decision d = decide(spec.hypotheses, *spec.goal, b, r);
  if (auto* t = std::get_if<ProofTrace>(&d)) {
    emit_trace(rep, o, *t);
    return rep.finish("proved", kOk);
  }
  if (auto* c = std::get_if<RefutationResult>(&d)) {
    emit_refutation(rep, o, *c);
    return rep.finish("refuted", kNegative);
  }
  rep.say("neither proved nor refuted within budget");
  return rep.finish("unknown", kUnknown);
}

int cmd_render(const Options& o, Report& rep) {
  Diagram d = diagram_from_json(load_json(o.input));
  RenderTuple t = parse_tuple(o.tuple);
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(d));
    rep.artifact("dot", o.dot);
  }
  auto w = renders(d, t);
  if (!w) {
    rep.say("not rendered");
    return rep.finish("not rendered", kNegative);
  }
  auto name = [](VertexId v) {
    return v == kPlus ? std::string("v+") : v == kMinus ? std::string("v-")
                                                         : "v" + std::to_string(v - 1);
  };
  rep.doc()["witness"] = {w->w1, w->w2};
  rep.doc()["antecedent"] = print_atom(t.antecedent());
  rep.doc()["consequent"] = print_atom(t.consequent());
  rep.say("witness: (" + name(w->w1) + ", " + name(w->w2) + ")");
  rep.say("instance: " + print_atom(t.antecedent()) + " -> " + print_atom(t.consequent()));
  return rep.finish("rendered", kOk);
}

int cmd_compose(const Options& o, Report& rep) {
  std::vector<Protocol> ps;
  for (const auto& path : o.inputs) ps.push_back(protocol_from_json(load_json(path)));
  Protocol prod = compose(ps);
  rep.doc()["runs"] = prod.run_count();
  rep.say("product of " + std::to_string(ps.size()) + " protocols: " +
          std::to_string(prod.run_count()) + " runs");
  if (!o.out.empty()) {
    write_file(o.out, protocol_to_json(prod).dump(2) + "\n");
    rep.artifact("protocol", o.out);
  } else if (!o.json) {
    std::cout << protocol_to_json(prod).dump(2) << '\n';
  } else {
    rep.doc()["protocol"] = protocol_to_json(prod);
  }
  return rep.finish("composed", kOk);
}

int cmd_chain(const Options& o, Report& rep) {
  ProblemSpec spec = load_problem(o.input, false);
  VarSet q = parse_varset(o.q);
  if (!q.is_subset_of(spec.universe)) {
    throw ValidationError("q uses variables outside the declared universe");
  }
  ChainResult r = chain_protocol(spec.hypotheses, q, o.chain_depth, spec.universe);
  Json undischarged = Json::array();
  for (const auto& ob : r.undischarged) {
    undischarged.push_back({{"atom", print_atom(ob.atom)}, {"u", ob.u}, {"v", ob.v}});
  }
  Json consumed = Json::array();
  for (const auto& f : r.consumed) consumed.push_back(print_atom(f));
  Json holds = Json::object();
  for (const auto& h : spec.hypotheses) holds[print_atom(h)] = models_atomic(r.protocol, h);
  Json report{{"protocol", protocol_to_json(r.protocol)},
              {"diagram", diagram_to_json(r.diagram)},
              {"consumed", consumed},
              {"undischarged", undischarged},
              {"hypotheses_hold", holds}};
  rep.doc()["chain"] = {{"extensions", r.consumed.size()},
                        {"vertices", r.diagram.vertex_count()},
                        {"runs", r.protocol.run_count()},
                        {"undischarged", undischarged.size()},
                        {"hypotheses_hold", holds}};
  rep.say("chain: " + std::to_string(r.consumed.size()) + " extensions, " +
          std::to_string(r.protocol.run_count()) + " runs, " +
          std::to_string(r.undischarged.size()) + " undischarged obligations");
  for (const auto& ob : r.undischarged) {
    rep.say("  pending " + print_atom(ob.atom) + " at (" + std::to_string(ob.u) + ", " +
            std::to_string(ob.v) + ")");
  }
  if (!o.out.empty()) {
    write_file(o.out, protocol_to_json(r.protocol).dump(2) + "\n");
    rep.artifact("protocol", o.out);
  }
  if (!o.report_out.empty()) {
    write_file(o.report_out, report.dump(2) + "\n");
    rep.artifact("report", o.report_out);
  }
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(r.diagram));
    rep.artifact("dot", o.dot);
  }
  return rep.finish(r.undischarged.empty() ? "complete" : "partial", kOk);
}

// Reloads any artifact written by this tool and re-runs its validation.
int cmd_validate(const Options& o, Report& rep) {
  Json j = load_json(o.input);
  std::string kind;
  if (j.contains("certificate")) {
    RefutationResult r = refutation_from_json(j);
    kind = "countermodel";
  } else if (j.contains("rule")) {
    if (o.problem.empty()) throw ValidationError("validating a trace needs --problem");
    ProblemSpec spec = load_problem(o.problem, false);
    ProofTrace t = trace_from_json(j);
    TraceCheck check = verify_trace(t, spec.hypotheses);
    if (!check.ok) {
      rep.say("trace rejected: " + check.diagnostic);
      rep.doc()["diagnostic"] = check.diagnostic;
      return rep.finish("invalid", kNegative);
    }
    if (spec.goal && t->conclusion != *spec.goal) {
      rep.say("trace concludes " + print_atom(t->conclusion) + ", not the goal");
      return rep.finish("invalid", kNegative);
    }
    kind = "trace";
  } else if (j.contains("undischarged")) {
    Protocol p = protocol_from_json(j.at("protocol"));
    Diagram d = diagram_from_json(j.at("diagram"));
    if (vertex_class_protocol(d, p.universe()) != p) {
      throw ValidationError("chain protocol does not match its diagram");
    }
    kind = "chain report";
  } else if (j.contains("edges")) {
    diagram_from_json(j);
    kind = "diagram";
  } else {
    protocol_from_json(j);
    kind = "protocol";
  }
  rep.doc()["kind"] = kind;
  rep.say(kind + " is valid");
  return rep.finish("valid", kOk);
}

int cmd_selftest(const Options& o, Report& rep) {
  auto suites = tools::run_selftest(o.seed);
  Json results = Json::array();
  std::size_t failed = 0;
  for (const auto& s : suites) {
    failed += s.failed;
    results.push_back({{"suite", s.name}, {"passed", s.passed}, {"failed", s.failed}});
    rep.say((s.failed == 0 ? "PASS " : "FAIL ") + s.name + ": " + std::to_string(s.passed) +
            " passed, " + std::to_string(s.failed) + " failed" +
            (s.failed ? " (" + s.first_failure + ")" : ""));
  }
  rep.doc()["suites"] = results;
  rep.doc()["seed"] = o.seed;
  return rep.finish(failed == 0 ? "pass" : "fail", failed == 0 ? kOk : kNegative);
}

void add_budget(CLI::App* c, Options& o) {
  c->add_option("--max-vertices", o.max_vertices, "largest diagram tried");
  c->add_option("--max-diagrams", o.max_diagrams, "diagrams per goal search");
  c->add_option("--depth", o.depth, "subgoal recursion depth");
  c->add_option("--rounds", o.rounds, "forward saturation rounds");
  c->add_option("--time-ms", o.time_ms, "wall-clock limit in milliseconds");
}

void add_bounds(CLI::App* c, Options& o) {
  c->add_option("--max-runs", o.max_runs, "largest run set enumerated");
  c->add_option("--max-domain", o.max_domain, "largest per-variable domain");
  c->add_option("--samples", o.samples, "random protocols tried after enumeration");
  c->add_option("--seed", o.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cind: conditional independence checker, prover and model finder"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "print a single JSON report on stdout");

  auto* check = app.add_subcommand("check", "model-check formulas against a protocol file");
  check->add_option("protocol", o.input, "protocol JSON")->required();
  check->add_option("formulas", o.formulas, "formulas to check");
  check->add_option("--formulas-file", o.formulas_file, "problem file whose lines are checked");

  auto* prove = app.add_subcommand("prove", "search for a derivation");
  prove->add_option("problem", o.input, "problem file")->required();
  prove->add_option("--trace", o.trace_out, "write the proof trace here");
  prove->add_option("--dot", o.dot, "write the first diagram as DOT");
  add_budget(prove, o);

  auto* refute_cmd = app.add_subcommand("refute", "search for a countermodel");
  refute_cmd->add_option("problem", o.input, "problem file")->required();
  refute_cmd->add_option("--out", o.out, "write the countermodel here");
  add_bounds(refute_cmd, o);

  auto* decide_cmd = app.add_subcommand("decide", "alternate proof and countermodel search");
  decide_cmd->add_option("problem", o.input, "problem file")->required();
  decide_cmd->add_option("--trace", o.trace_out, "write the proof trace here");
  decide_cmd->add_option("--out", o.out, "write the countermodel here");
  decide_cmd->add_option("--dot", o.dot, "write the first diagram as DOT");
  add_budget(decide_cmd, o);
  add_bounds(decide_cmd, o);

  auto* render = app.add_subcommand("render", "test whether a diagram renders a tuple");
  render->add_option("diagram", o.input, "diagram JSON")->required();
  render->add_option("tuple", o.tuple, "(A1;A2;A3 | B1;B2;B3 | C1;C2;C3 | D)")->required();
  render->add_option("--dot", o.dot, "write the diagram as DOT");

  auto* compose_cmd = app.add_subcommand("compose", "product of protocols");
  compose_cmd->add_option("protocols", o.inputs, "protocol JSON files")->required();
  compose_cmd->add_option("--out", o.out, "write the product here");

  auto* chain = app.add_subcommand("chain", "bounded chain protocol from hypotheses");
  chain->add_option("problem", o.input, "problem file")->required();
  chain->add_option("--q", o.q, "base label set, e.g. {a,b}")->default_val("{}");
  chain->add_option("--depth", o.chain_depth, "number of extensions");
  chain->add_option("--out", o.out, "write the chain protocol here");
  chain->add_option("--report", o.report_out, "write the obligation report here");
  chain->add_option("--dot", o.dot, "write the final diagram as DOT");

  auto* validate = app.add_subcommand("validate", "reload and re-check a written artifact");
  validate->add_option("artifact", o.input, "JSON artifact")->required();
  validate->add_option("--problem", o.problem, "problem file for trace hypotheses");

  auto* selftest = app.add_subcommand("selftest", "regressions and seeded soundness sweeps");
  selftest->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep(o, sub->get_name(), argc, argv);
  try {
    if (sub == check) return cmd_check(o, rep);
    if (sub == prove) return cmd_prove(o, rep);
    if (sub == refute_cmd) return cmd_refute(o, rep);
    if (sub == decide_cmd) return cmd_decide(o, rep);
    if (sub == render) return cmd_render(o, rep);
    if (sub == compose_cmd) return cmd_compose(o, rep);
    if (sub == chain) return cmd_chain(o, rep);
    if (sub == validate) return cmd_validate(o, rep);
    return cmd_selftest(o, rep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed artifact: " << e.what() << '\n';
    return kInputError;
  }
}
