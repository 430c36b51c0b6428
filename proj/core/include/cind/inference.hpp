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

#ifndef CIND_INFERENCE_HPP_
#define CIND_INFERENCE_HPP_

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cind/formula.hpp"
#include "cind/rendering.hpp"
#include "cind/varset.hpp"

namespace cind {

enum class Rule {
  kHypothesis,
  // A ||_C B with A or B empty; valid in every protocol.
  kEmptySet,
  // A ||_C B  =>  B ||_C A
  kSymmetry,
  // A ||_C B,D  =>  A ||_C B
  kMonotonicity,
  // /\[Δ], antecedent  =>  consequent, for a rendered tuple.
  kDiagram,
};

const char* rule_name(Rule r);

class ProofNode;
using ProofTrace = std::shared_ptr<const ProofNode>;

// One node of a derivation tree. Children:
//   kSymmetry, kMonotonicity: exactly one.
//   kDiagram: one proof per premise in [Δ] order, then the antecedent proof.
class ProofNode {
 public:
  Rule rule;
  AtomicFormula conclusion;
  VarSet dropped;  // kMonotonicity only
  std::optional<AxiomInstance> instance;  // kDiagram only
  std::vector<ProofTrace> children;

  ProofNode(Rule r, AtomicFormula c) : rule(r), conclusion(std::move(c)) {}
};

// Node factories. They compute the conclusion from the rule but do not check
// side conditions; verify_trace does.
ProofTrace make_hypothesis(AtomicFormula atom);
ProofTrace make_empty_set(AtomicFormula atom);
ProofTrace make_symmetry(ProofTrace child);
ProofTrace make_monotonicity(ProofTrace child, VarSet dropped);
ProofTrace make_diagram_step(AxiomInstance instance, std::vector<ProofTrace> premise_proofs,
                             ProofTrace antecedent_proof);

struct TraceShape {
  std::size_t nodes = 0;
  std::size_t diagram_steps = 0;
  // Largest diagram used by any kDiagram node.
  std::size_t max_diagram_vertices = 0;
  // Longest chain of nested kDiagram antecedent proofs.
  std::size_t diagram_nesting = 0;
};
TraceShape trace_shape(const ProofTrace& t);

// Proven atoms over a universe, each with its proof, in insertion order.
class KnowledgeBase {
 public:
  explicit KnowledgeBase(VarSet universe) : universe_(std::move(universe)) {}
  static KnowledgeBase from_hypotheses(VarSet universe,
                                       const std::vector<AtomicFormula>& hypotheses);

  const VarSet& universe() const { return universe_; }
  // False if the atom was already present. Throws for foreign variables.
  bool add(const AtomicFormula& atom, ProofTrace proof);
  bool contains(const AtomicFormula& atom) const { return proofs_.contains(atom); }
  const std::vector<AtomicFormula>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const ProofTrace& proof(const AtomicFormula& atom) const { return proofs_.at(atom); }

 private:
  VarSet universe_;
  std::vector<AtomicFormula> atoms_;
  std::map<AtomicFormula, ProofTrace> proofs_;
};

// Symmetry/Monotonicity closure check: some kb atom A' ||_C B' with the goal's
// C and goal.a, goal.b inside A', B' (either orientation). Returns a trace of
// at most four steps built on the kb atom's proof; the first matching kb atom
// in insertion order wins.
std::optional<ProofTrace> subsumes(const KnowledgeBase& kb, const AtomicFormula& goal);

struct SearchBudget {
  std::size_t max_diagram_vertices = 6;
  // Per goal: diagrams enumerated while looking for renderings.
  std::size_t max_diagrams = 20000;
  std::size_t max_subgoal_depth = 2;
  std::chrono::milliseconds time_limit{30000};
  // Forward rounds after a failed goal pass; each may add lemmas to the kb.
  std::size_t max_rounds = 1;

  void validate() const;
};

struct SearchStats {
  std::size_t diagrams = 0;
  std::size_t instances = 0;
  std::size_t subgoal_searches = 0;
  std::size_t rounds = 0;
  std::size_t lemmas = 0;
  bool out_of_time = false;
};

// Semi-decision for hypotheses |- goal in the Horn fragment. nullopt means the
// budget ran out, never that the goal is refuted. Deterministic apart from the
// time limit.
std::optional<ProofTrace> derive(const std::vector<AtomicFormula>& hypotheses,
                                 const AtomicFormula& goal, const SearchBudget& budget,
                                 SearchStats* stats = nullptr);

struct TraceCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

// Re-checks every node against its schema. Diagram steps are rebuilt from
// their extension steps and the rendering conditions are re-evaluated at the
// recorded witness.
TraceCheck verify_trace(const ProofTrace& trace, const std::vector<AtomicFormula>& hypotheses);

inline constexpr std::size_t kDefaultSaturationLimit = 6;

// All atoms over `universe` (default: variables of the hypotheses) derivable
// within the budget, each with a proof. Throws ValidationError above
// `max_universe` variables.
KnowledgeBase saturate(const std::vector<AtomicFormula>& hypotheses, const SearchBudget& budget,
                       const VarSet& universe = {},
                       std::size_t max_universe = kDefaultSaturationLimit);

}  // namespace cind

#endif  // CIND_INFERENCE_HPP_
