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

#ifndef CIND_COUNTERMODEL_HPP_
#define CIND_COUNTERMODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "cind/diagram.hpp"
#include "cind/formula.hpp"
#include "cind/inference.hpp"
#include "cind/protocol.hpp"

namespace cind {

// Two runs that agree on the goal's condition set with no merging run.
struct Certificate {
  std::size_t run1;
  std::size_t run2;
  VarSet condition;
};

// A protocol satisfying every hypothesis and falsifying the goal. The
// constructor re-checks both facts and throws ValidationError otherwise.
class RefutationResult {
 public:
  RefutationResult(Protocol protocol, std::vector<AtomicFormula> hypotheses,
                   AtomicFormula failing_goal);

  const Protocol& protocol() const { return protocol_; }
  const std::vector<AtomicFormula>& hypotheses() const { return hypotheses_; }
  const AtomicFormula& failing_goal() const { return goal_; }
  const Certificate& certificate() const { return certificate_; }

 private:
  Protocol protocol_;
  std::vector<AtomicFormula> hypotheses_;
  AtomicFormula goal_;
  Certificate certificate_;
};

struct RefuteBounds {
  std::size_t max_domain = 2;
  std::size_t max_runs = 6;
  std::size_t random_samples = 2000;
  std::uint64_t seed = 0;
  // Cap on the exhaustive phase; the run-set space grows exponentially.
  std::size_t max_protocols = 200000;
};

// Exhaustive small protocols first, then random ones. nullopt means unknown.
std::optional<RefutationResult> refute(const std::vector<AtomicFormula>& hypotheses,
                                       const AtomicFormula& goal, const RefuteBounds& bounds);

// Merge obligation: for atom A ||_C B and u ~_C v, some w with
// u ~_{A,C} w ~_{B,C} v must eventually exist.
struct Obligation {
  AtomicFormula atom;
  VertexId u;
  VertexId v;

  friend bool operator==(const Obligation&, const Obligation&) = default;
};

bool obligation_discharged(const Diagram& d, const Obligation& o);

// Bounded prefix of a sound Q-chain discharged in FIFO order.
class ChainState {
 public:
  ChainState(std::vector<AtomicFormula> hypotheses, VarSet q);

  // Pops obligations until one needs an extension and applies it. Returns
  // false when the queue is empty.
  bool step();

  const Diagram& diagram() const { return diagram_; }
  const std::deque<Obligation>& queue() const { return queue_; }
  std::size_t extensions() const { return extensions_; }
  // Atoms consumed, one entry per applied extension.
  const std::vector<AtomicFormula>& consumed() const { return consumed_; }

 private:
  void enqueue_for(VertexId fresh);

  std::vector<AtomicFormula> hypotheses_;
  Diagram diagram_;
  std::deque<Obligation> queue_;
  std::size_t extensions_ = 0;
  std::vector<AtomicFormula> consumed_;
};

struct ChainResult {
  Protocol protocol;
  Diagram diagram;
  // Obligations over all vertex pairs of the final diagram still lacking a
  // witness, in (atom, u, v) order.
  std::vector<Obligation> undischarged;
  std::vector<AtomicFormula> consumed;
};

// Runs r_v for each vertex v with r_v(a) the ~_a class of v. The universe is
// `universe` plus every variable of the hypotheses and q.
ChainResult chain_protocol(const std::vector<AtomicFormula>& hypotheses, const VarSet& q,
                           std::size_t depth, const VarSet& universe = {});

// Protocol of chain_protocol for an already built diagram.
Protocol vertex_class_protocol(const Diagram& d, const VarSet& universe);

struct Unknown {};
using Decision = std::variant<ProofTrace, RefutationResult, Unknown>;

// Alternates proof search (growing diagram size) with chunks of refutation
// search; returns the first success.
Decision decide(const std::vector<AtomicFormula>& hypotheses, const AtomicFormula& goal,
                const SearchBudget& prove_budget, const RefuteBounds& refute_bounds);

}  // namespace cind

#endif  // CIND_COUNTERMODEL_HPP_
