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

#include <algorithm>
#include <set>
#include <string>

#include "cind/diagram.hpp"
#include "cind/error.hpp"
#include "cind/inference.hpp"

// Trace checking deliberately avoids the rendering enumerator and the prover:
// diagrams are replayed from their steps and the five rendering conditions are
// evaluated here directly.

namespace cind {

namespace {

class Checker {
 public:
  explicit Checker(const std::vector<AtomicFormula>& hypotheses)
      : hypotheses_(hypotheses.begin(), hypotheses.end()) {}

  TraceCheck run(const ProofTrace& t) {
    if (!t) return fail("root", "null trace");
    return check(t, "root");
  }

 private:
  static TraceCheck fail(const std::string& where, const std::string& what) {
    return {false, where + ": " + what};
  }

  static bool joined(const Diagram& d, VertexId x, VertexId y, const VarSet& labels) {
    for (const auto& l : labels) {
      if (d.component(x, l) != d.component(y, l)) return false;
    }
    return true;
  }

  TraceCheck check(const ProofTrace& t, const std::string& where) {
    if (!t) return fail(where, "missing subproof");
    const auto& concl = t->conclusion;
    auto arity = [&](std::size_t n) { return t->children.size() == n; };

    switch (t->rule) {
      case Rule::kHypothesis:
        if (!arity(0)) return fail(where, "hypothesis node has children");
        if (!hypotheses_.contains(concl)) {
          return fail(where, print_atom(concl) + " is not a hypothesis");
        }
        return {};

      case Rule::kEmptySet:
        if (!arity(0)) return fail(where, "empty-set node has children");
        if (!concl.a().empty() && !concl.b().empty()) {
          return fail(where, print_atom(concl) + " has no empty side");
        }
        return {};

      case Rule::kSymmetry: {
        if (!arity(1)) return fail(where, "symmetry needs exactly one premise");
        const auto& prem = t->children[0]->conclusion;
        if (!(prem.a() == concl.b() && prem.b() == concl.a() && prem.c() == concl.c())) {
          return fail(where, "symmetry of " + print_atom(prem) + " is not " + print_atom(concl));
        }
        return check(t->children[0], where + "/symmetry");
      }

      case Rule::kMonotonicity: {
        if (!arity(1)) return fail(where, "monotonicity needs exactly one premise");
        const auto& prem = t->children[0]->conclusion;
        const bool shape = prem.a() == concl.a() && prem.c() == concl.c() &&
                           concl.b().is_disjoint_with(t->dropped) &&
                           prem.b() == (concl.b() | t->dropped);
        if (!shape) {
          return fail(where, "monotonicity cannot take " + print_atom(prem) + " to " +
                                 print_atom(concl) + " dropping {" + t->dropped.join() + "}");
        }
        return check(t->children[0], where + "/monotonicity");
      }

      case Rule::kDiagram:
        return check_diagram(t, where);
    }
    return fail(where, "unknown rule");
  }

  TraceCheck check_diagram(const ProofTrace& t, const std::string& where) {
    if (!t->instance) return fail(where, "diagram step without an instance");
    const AxiomInstance& inst = *t->instance;
    const RenderTuple& tu = inst.tuple;

    Diagram rebuilt = Diagram::basic(inst.diagram.base_labels());
    try {
      rebuilt = Diagram::from_steps(inst.diagram.base_labels(), inst.diagram.steps());
    } catch (const Error& e) {
      return fail(where, std::string("diagram does not rebuild: ") + e.what());
    }
    if (rebuilt.edges() != inst.diagram.edges()) {
      return fail(where, "diagram edges disagree with its extension steps");
    }

    const std::vector<const VarSet*> sets{&tu.a1, &tu.a2, &tu.a3, &tu.b1, &tu.b2,
                                          &tu.b3, &tu.c1, &tu.c2, &tu.c3, &tu.d};
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (!sets[i]->is_disjoint_with(*sets[j])) return fail(where, "tuple sets overlap");
      }
    }
    const VarSet cs = tu.c1 | tu.c2 | tu.c3;
    if (rebuilt.base_labels() != cs) {
      return fail(where, "diagram is not in Diag(C1,C2,C3)");
    }

    const Witness w = inst.witness;
    if (w.w1 >= rebuilt.vertex_count() || w.w2 >= rebuilt.vertex_count()) {
      return fail(where, "witness vertex out of range");
    }
    const bool rendered = joined(rebuilt, w.w1, kPlus, tu.a1 | tu.a3 | tu.c1 | tu.c3) &&
                          joined(rebuilt, w.w1, kMinus, tu.b1 | tu.b3 | tu.c1 | tu.c3) &&
                          joined(rebuilt, w.w2, kPlus, tu.a2 | tu.a3 | tu.c2 | tu.c3) &&
                          joined(rebuilt, w.w2, kMinus, tu.b2 | tu.b3 | tu.c2 | tu.c3) &&
                          joined(rebuilt, w.w1, w.w2, tu.d);
    if (!rendered) return fail(where, "diagram does not render the tuple at the witness");

    std::set<AtomicFormula> consumed;
    for (const auto& s : rebuilt.steps()) consumed.insert(s.formula);
    if (inst.premises != consumed) return fail(where, "premises differ from [Δ]");

    const AtomicFormula ant(tu.a1 | tu.b1 | tu.c1, tu.a2 | tu.b2 | tu.c2,
                            tu.a3 | tu.b3 | tu.c3 | tu.d);
    const AtomicFormula cons(tu.a1 | tu.a2 | tu.a3, tu.b1 | tu.b2 | tu.b3, cs);
    if (!(inst.antecedent == ant)) return fail(where, "antecedent does not match the tuple");
    if (!(inst.consequent == cons)) return fail(where, "consequent does not match the tuple");
    if (!(t->conclusion == cons)) return fail(where, "conclusion is not the consequent");

    if (t->children.size() != consumed.size() + 1) {
      return fail(where, "expected one proof per premise plus the antecedent proof");
    }
    std::size_t k = 0;
    for (const auto& p : consumed) {
      const auto& child = t->children[k];
      if (!child || !(child->conclusion == p)) {
        return fail(where, "premise proof " + std::to_string(k) + " does not conclude " +
                               print_atom(p));
      }
      if (auto r = check(child, where + "/premise[" + std::to_string(k) + "]"); !r) return r;
      ++k;
    }
    const auto& ant_proof = t->children.back();
    if (!ant_proof || !(ant_proof->conclusion == ant)) {
      return fail(where, "antecedent proof does not conclude " + print_atom(ant));
    }
    return check(ant_proof, where + "/antecedent");
  }

  std::set<AtomicFormula> hypotheses_;
};

}  // namespace

TraceCheck verify_trace(const ProofTrace& trace, const std::vector<AtomicFormula>& hypotheses) {
  try {
    return Checker(hypotheses).run(trace);
  } catch (const Error& e) {
    return {false, std::string("root: ") + e.what()};
  }
}

}  // namespace cind
