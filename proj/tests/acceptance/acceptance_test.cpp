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

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cind/countermodel.hpp"
#include "cind/inference.hpp"
#include "cind/io.hpp"
#include "cind/protocol.hpp"
#include "cind/rendering.hpp"
#include "oracles.hpp"

namespace {

using namespace cind;
using Clock = std::chrono::steady_clock;

AtomicFormula at(const char* text) { return parse_atom(text); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o = body();
  const double took = seconds_since(t0);
  if (limit_s > 0 && took >= limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %2d: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", id, title, took,
              o.detail.c_str());
  std::fflush(stdout);
}

Outcome check_trace(const std::optional<ProofTrace>& t, const std::vector<AtomicFormula>& hyps,
                    const AtomicFormula& goal) {
  if (!t) return {false, "no derivation"};
  if ((*t)->conclusion != goal) return {false, "root is not the goal"};
  TraceCheck c = verify_trace(*t, hyps);
  if (!c.ok) return {false, "trace rejected: " + c.diagnostic};
  return {true, ""};
}

// Same base labels and the same edge multiset up to renaming the added vertices.
bool same_shape(const Diagram& x, const Diagram& y) {
  if (x.vertex_count() != y.vertex_count() || x.base_labels() != y.base_labels()) return false;
  auto key = [](const LabeledEdge& e) {
    return std::make_tuple(e.from, e.to, e.labels.join(), e.directed);
  };
  std::vector<std::tuple<VertexId, VertexId, std::string, bool>> target;
  for (const auto& e : y.edges()) target.push_back(key(e));
  std::sort(target.begin(), target.end());
  std::vector<VertexId> perm(x.vertex_count() - 2);
  std::iota(perm.begin(), perm.end(), VertexId{2});
  do {
    auto map = [&](VertexId v) { return v < 2 ? v : perm[v - 2]; };
    std::vector<std::tuple<VertexId, VertexId, std::string, bool>> mapped;
    for (const auto& e : x.edges()) {
      mapped.emplace_back(map(e.from), map(e.to), e.labels.join(), e.directed);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Outcome contraction() {
  std::vector<AtomicFormula> hyps{at("a ||_{c} b"), at("a ||_{b,c} d")};
  auto t = derive(hyps, at("a ||_{c} b,d"), SearchBudget{});
  Outcome o = check_trace(t, hyps, at("a ||_{c} b,d"));
  if (!o.pass) return o;
  const auto shape = trace_shape(*t);
  if (shape.max_diagram_vertices > 3) return {false, "diagram larger than 3 vertices"};
  return {true, "largest diagram " + std::to_string(shape.max_diagram_vertices) + " vertices"};
}

Outcome weak_union() {
  std::vector<AtomicFormula> hyps{at("a,b ||_{c} d")};
  auto t = derive(hyps, at("a ||_{b,c} d"), SearchBudget{});
  Outcome o = check_trace(t, hyps, at("a ||_{b,c} d"));
  if (!o.pass) return o;
  if ((*t)->rule != Rule::kDiagram) return {false, "root is not a diagram step"};
  const AxiomInstance& in = *(*t)->instance;
  if (in.diagram.vertex_count() != 2 || !in.premises.empty()) {
    return {false, "instance does not use the basic diagram"};
  }
  return {true, "basic diagram, no premises"};
}

Outcome six_vertex() {
  std::vector<AtomicFormula> hyps{at("b ||_{a} c"), at("e ||_{b} d"), at("d ||_{c} f"),
                                  at("e ||_{d} f"), at("a ||_{e} f")};
  auto t = derive(hyps, at("e ||_{a} f"), SearchBudget{});
  Outcome o = check_trace(t, hyps, at("e ||_{a} f"));
  if (!o.pass) return o;
  if ((*t)->rule != Rule::kDiagram) return {false, "root is not a diagram step"};
  const Diagram& d = (*t)->instance->diagram;
  Diagram reference = Diagram::basic(VarSet{"a"})
                          .extend(kPlus, kMinus, at("b ||_{a} c"))
                          .extend(kPlus, 2, at("e ||_{b} d"))
                          .extend(2, kMinus, at("d ||_{c} f"))
                          .extend(3, 4, at("e ||_{d} f"));
  if (d.vertex_count() > 6) return {false, "diagram larger than 6 vertices"};
  if (!same_shape(d, reference)) return {false, "diagram differs from the reference shape"};
  return {true, "6 vertices, isomorphic to the reference diagram"};
}

Outcome chained() {
  std::vector<AtomicFormula> hyps{at("a,b ||_{} c"), at("a ||_{} b")};
  SearchBudget b;
  b.max_subgoal_depth = 1;
  auto t = derive(hyps, at("a ||_{} b,c"), b);
  Outcome o = check_trace(t, hyps, at("a ||_{} b,c"));
  if (!o.pass) return o;

  // The two-step route: weak union on the basic diagram gives a ||_{b} c,
  // which is the antecedent of the contraction instance on one extension.
  auto lemma = derive(hyps, at("a ||_{b} c"), b);
  if (!lemma || (*lemma)->rule != Rule::kDiagram ||
      (*lemma)->instance->diagram.vertex_count() != 2 || !(*lemma)->instance->premises.empty()) {
    return {false, "lemma a ||_{b} c not derived from the basic diagram"};
  }
  AxiomInstance step = axiom_instance(
      Diagram::basic(VarSet{}).extend(kPlus, kMinus, at("a ||_{} b")),
      RenderTuple{VarSet{"a"}, {}, {}, {}, VarSet{"c"}, VarSet{"b"}, {}, {}, {}, {}});
  ProofTrace chain = make_diagram_step(step, {make_hypothesis(at("a ||_{} b"))}, *lemma);
  TraceCheck c = verify_trace(chain, hyps);
  if (!c.ok) return {false, "chained trace rejected: " + c.diagnostic};
  const auto shape = trace_shape(*t);
  return {true, "search trace: " + std::to_string(shape.diagram_steps) +
                    " diagram step(s); chained two-step trace verifies"};
}

Outcome parity() {
  std::vector<Run> runs;
  for (int m = 0; m < 16; ++m) {
    if (__builtin_popcount(m) % 2) continue;
    runs.push_back({{"a", std::to_string(m & 1)},
                    {"b", std::to_string((m >> 1) & 1)},
                    {"c", std::to_string((m >> 2) & 1)},
                    {"d", std::to_string((m >> 3) & 1)}});
  }
  std::map<SecretVar, std::vector<Value>> dom;
  for (const char* v : {"a", "b", "c", "d"}) dom[v] = {"0", "1"};
  Protocol p(VarSet{"a", "b", "c", "d"}, dom, runs);
  const std::array<std::pair<const char*, bool>, 3> claims{
      {{"a ||_{c} b", true}, {"a ||_{c,d} b", false}, {"a ||_{} b", true}}};
  for (const auto& [text, expected] : claims) {
    const bool got = models(p, parse_formula(text));
    if (got != expected || oracle::naive_models(p.runs(), at(text)) != expected) {
      return {false, std::string(text) + " disagrees"};
    }
  }
  return {true, "holds / fails / holds"};
}

Outcome axiom_soundness() {
  oracle::Rng rng(1001);
  std::size_t violations = 0, structural = 0, diagram_checks = 0, exercised = 0;
  for (int i = 0; i < 1000; ++i) {
    const VarSet u = oracle::letters(1 + rng() % 4);
    Protocol p = random_protocol(u, 3, 10, rng());
    auto runs = p.runs();
    for (int k = 0; k < 5; ++k) {
      AtomicFormula f = oracle::random_atom(rng, u);
      if (!oracle::naive_models(runs, f)) continue;
      ++structural;
      if (!oracle::naive_models(runs, f.swapped())) ++violations;
      std::vector<std::string> kept;
      for (const auto& v : f.b()) {
        if (rng() % 2) kept.push_back(v);
      }
      if (!oracle::naive_models(runs, AtomicFormula(f.a(), VarSet(kept), f.c()))) ++violations;
    }
  }
  const VarSet u = oracle::letters(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<AtomicFormula> kb;
    for (int k = 0; k < 2; ++k) kb.push_back(oracle::random_atom(rng, u));
    AtomicFormula goal = oracle::random_atom(rng, u);
    Diagram d = oracle::random_chain(rng, goal.c(), kb, rng() % 4);
    auto all = renderings_for_goal(d, goal, u - goal.vars());
    const AxiomInstance& in = all[rng() % all.size()];
    bool hit = false;
    for (int t = 0; t < 50; ++t) {
      Protocol p = random_protocol(u, 2, 10, rng());
      auto runs = p.runs();
      bool premises = oracle::naive_models(runs, in.antecedent);
      for (const auto& f : in.premises) premises = premises && oracle::naive_models(runs, f);
      if (!premises) continue;
      ++diagram_checks;
      hit = true;
      if (!oracle::naive_models(runs, in.consequent)) ++violations;
    }
    if (hit) ++exercised;
  }
  return {violations == 0,
          std::to_string(violations) + " violations; " + std::to_string(structural) +
              " symmetry/monotonicity cases; " + std::to_string(exercised) +
              "/200 diagram instances exercised by " + std::to_string(diagram_checks) +
              " satisfying protocols"};
}

Outcome extension_stability() {
  oracle::Rng rng(1002);
  std::size_t violations = 0, extensions = 0;
  for (int i = 0; i < 500; ++i) {
    const VarSet u = oracle::letters(1 + rng() % 5);
    std::vector<AtomicFormula> kb;
    for (int k = 0; k < 3; ++k) kb.push_back(oracle::random_atom(rng, u));
    Diagram d = Diagram::basic(oracle::random_atom(rng, u).c());
    const std::size_t depth = 1 + rng() % 8;
    for (std::size_t s = 0; s < depth; ++s) {
      const AtomicFormula& f = kb[rng() % kb.size()];
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (VertexId x = 0; x < d.vertex_count(); ++x) {
        for (VertexId y = 0; y < d.vertex_count(); ++y) {
          bool ok = true;
          for (const auto& l : f.c()) ok = ok && oracle::bfs_connected(d, x, y, l);
          if (ok) pairs.emplace_back(x, y);
        }
      }
      auto [x0, y0] = pairs[rng() % pairs.size()];
      Diagram next = d.extend(x0, y0, f);
      ++extensions;
      for (VertexId x = 0; x < d.vertex_count(); ++x) {
        for (VertexId y = 0; y < d.vertex_count(); ++y) {
          for (const auto& l : u) {
            const bool before = oracle::bfs_connected(d, x, y, l);
            if (before != oracle::bfs_connected(next, x, y, l) ||
                before != next.connected(x, y, l)) {
              ++violations;
            }
          }
        }
      }
      d = next;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over " +
                               std::to_string(extensions) + " extensions"};
}

Outcome product() {
  oracle::Rng rng(1003);
  std::size_t violations = 0, pairs = 0;
  while (pairs < 200) {
    const VarSet u = oracle::letters(1 + rng() % 4);
    Protocol p = random_protocol(u, 2, 6, rng());
    Protocol q = random_protocol(u, 2, 6, rng());
    if (p.run_count() == 0 || q.run_count() == 0) continue;
    ++pairs;
    std::vector<Protocol> ps{p, q};
    auto prod_runs = compose(ps).runs();
    auto p_runs = p.runs(), q_runs = q.runs();
    for (int k = 0; k < 10; ++k) {
      AtomicFormula f = oracle::random_atom(rng, u);
      if (oracle::naive_models(prod_runs, f) !=
          (oracle::naive_models(p_runs, f) && oracle::naive_models(q_runs, f))) {
        ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over 2000 checks"};
}

Outcome transitivity() {
  std::vector<AtomicFormula> hyps{at("a ||_{} b"), at("b ||_{} c")};
  auto r = refute(hyps, at("a ||_{} c"), RefuteBounds{});
  if (!r) return {false, "no countermodel"};
  const Protocol& p = r->protocol();
  if (p.run_count() > 4) return {false, "countermodel has more than 4 runs"};
  for (std::size_t v = 0; v < p.var_count(); ++v) {
    if (p.domain(v).size() > 2) return {false, "domain is not binary"};
  }
  auto runs = p.runs();
  for (const auto& h : hyps) {
    if (!oracle::naive_models(runs, h)) return {false, "hypothesis fails on countermodel"};
  }
  if (oracle::naive_violation(runs, at("a ||_{} c")) !=
      std::make_optional(std::make_pair(r->certificate().run1, r->certificate().run2))) {
    return {false, "certificate does not re-validate"};
  }
  // Reload through the artifact format as an independent path.
  RefutationResult back = refutation_from_json(refutation_to_json(*r));
  (void)back;
  return {true, std::to_string(p.run_count()) + " runs"};
}

Outcome rendering_oracle() {
  const VarSet u = oracle::letters(4);
  const std::vector<AtomicFormula> kb{at("a ||_{c} b"), at("a,b ||_{} d"), at("c ||_{d} a")};
  std::size_t diagrams = 0, goals = 0, discrepancies = 0, instances = 0;
  std::vector<std::string> names = u.names();
  for (std::uint32_t qm = 0; qm < 16; ++qm) {
    std::vector<std::string> qv;
    for (int i = 0; i < 4; ++i) {
      if (qm & (1u << i)) qv.push_back(names[i]);
    }
    const VarSet q(qv);
    // Every diagram with at most 4 vertices, all ordered pairs including u = v.
    std::vector<Diagram> frontier{Diagram::basic(q)}, all{Diagram::basic(q)};
    while (!frontier.empty()) {
      std::vector<Diagram> next;
      for (const auto& d : frontier) {
        if (d.vertex_count() >= 4) continue;
        for (const auto& f : kb) {
          for (VertexId x = 0; x < d.vertex_count(); ++x) {
            for (VertexId y = 0; y < d.vertex_count(); ++y) {
              bool ok = true;
              for (const auto& l : f.c()) ok = ok && oracle::bfs_connected(d, x, y, l);
              if (ok) next.push_back(d.extend(x, y, f));
            }
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    // Goals: every atom with condition set q.
    std::vector<AtomicFormula> q_goals;
    const VarSet rest = u - q;
    const std::size_t r = rest.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < r; ++i) combos *= 3;
    for (std::size_t m = 0; m < combos; ++m) {
      std::vector<std::string> a, b;
      std::size_t x = m;
      for (const auto& v : rest) {
        if (x % 3 == 0) a.push_back(v);
        if (x % 3 == 1) b.push_back(v);
        x /= 3;
      }
      q_goals.emplace_back(VarSet(a), VarSet(b), q);
    }
    for (const auto& d : all) {
      ++diagrams;
      auto brute = oracle::brute_all_renderings(d, u);
      for (const auto& goal : q_goals) {
        ++goals;
        std::set<oracle::Rendered> got;
        for (const auto& in : renderings_for_goal(d, goal, u - goal.vars())) {
          got.insert({in.tuple, in.witness.w1, in.witness.w2});
        }
        instances += got.size();
        auto it = brute.find(goal);
        const std::set<oracle::Rendered> empty;
        if (got != (it == brute.end() ? empty : it->second)) ++discrepancies;
      }
    }
  }
  return {discrepancies == 0, std::to_string(discrepancies) + " discrepancies over " +
                                  std::to_string(diagrams) + " diagrams, " +
                                  std::to_string(goals) + " goals, " +
                                  std::to_string(instances) + " instances"};
}

Outcome exclusivity() {
  oracle::Rng rng(1004);
  std::array<SearchBudget, 3> budgets;
  std::array<RefuteBounds, 3> bounds;
  const std::array<std::size_t, 3> vertices{3, 4, 5}, diagrams{300, 1500, 4000},
      runs{3, 5, 6}, samples{0, 200, 1000};
  for (int s = 0; s < 3; ++s) {
    budgets[s].max_diagram_vertices = vertices[s];
    budgets[s].max_diagrams = diagrams[s];
    budgets[s].max_subgoal_depth = static_cast<std::size_t>(s);
    budgets[s].time_limit = std::chrono::milliseconds(1500);
    bounds[s].max_runs = runs[s];
    bounds[s].random_samples = samples[s];
    bounds[s].seed = static_cast<std::uint64_t>(s);
  }
  std::size_t proved = 0, refuted = 0, unknown = 0, overlaps = 0, bad = 0;
  for (int i = 0; i < 200; ++i) {
    const VarSet u = oracle::letters(1 + rng() % 4);
    std::vector<AtomicFormula> hyps;
    const std::size_t n = rng() % 4;
    for (std::size_t k = 0; k < n; ++k) hyps.push_back(oracle::random_atom(rng, u));
    AtomicFormula goal = oracle::random_atom(rng, u);
    bool any_proved = false, any_refuted = false;
    for (int s = 0; s < 3; ++s) {
      Decision d = decide(hyps, goal, budgets[s], bounds[s]);
      if (auto* t = std::get_if<ProofTrace>(&d)) {
        any_proved = true;
        if (!verify_trace(*t, hyps).ok) ++bad;
      } else if (auto* r = std::get_if<RefutationResult>(&d)) {
        any_refuted = true;
        auto pr = r->protocol().runs();
        for (const auto& h : hyps) bad += oracle::naive_models(pr, h) ? 0 : 1;
        bad += oracle::naive_models(pr, goal) ? 1 : 0;
      }
    }
    if (any_proved && any_refuted) ++overlaps;
    if (any_proved) {
      ++proved;
    } else if (any_refuted) {
      ++refuted;
    } else {
      ++unknown;
    }
  }
  return {overlaps == 0 && bad == 0,
          std::to_string(overlaps) + " overlaps, " + std::to_string(bad) +
              " invalid results; proved " + std::to_string(proved) + ", refuted " +
              std::to_string(refuted) + ", unknown " + std::to_string(unknown)};
}

}  // namespace

int main() {
  criterion(1, "contraction derivation within a 3-vertex diagram", 1.0, contraction);
  criterion(2, "weak union from the basic diagram", 1.0, weak_union);
  criterion(3, "six-vertex derivation under default budgets", 30.0, six_vertex);
  criterion(4, "chained contraction with subgoal depth 1", 5.0, chained);
  criterion(5, "parity protocol verdicts", 1.0, parity);
  criterion(6, "axiom soundness sweep", 0, axiom_soundness);
  criterion(7, "extension leaves old connectivity unchanged", 0, extension_stability);
  criterion(8, "product satisfaction is componentwise", 0, product);
  criterion(9, "transitivity refuted by a small binary countermodel", 5.0, transitivity);
  criterion(10, "goal-directed renderings match brute force", 0, rendering_oracle);
  criterion(11, "prove/refute exclusivity across budgets", 0, exclusivity);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
