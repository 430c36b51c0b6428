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

#ifndef CIND_RENDERING_HPP_
#define CIND_RENDERING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cind/diagram.hpp"
#include "cind/formula.hpp"
#include "cind/varset.hpp"

namespace cind {

// (A1, A2, A3; B1, B2, B3; C1, C2, C3; D), ten pairwise disjoint label sets.
struct RenderTuple {
  VarSet a1, a2, a3;
  VarSet b1, b2, b3;
  VarSet c1, c2, c3;
  VarSet d;

  // Throws ValidationError if two of the sets overlap.
  void validate() const;

  VarSet c_union() const { return c1 | c2 | c3; }
  // A1,B1,C1 ||_{A3,B3,C3,D} A2,B2,C2
  AtomicFormula antecedent() const;
  // A1,A2,A3 ||_{C1,C2,C3} B1,B2,B3
  AtomicFormula consequent() const;

  friend bool operator==(const RenderTuple&, const RenderTuple&) = default;
  friend auto operator<=>(const RenderTuple&, const RenderTuple&) = default;
};

struct Witness {
  VertexId w1;
  VertexId w2;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// The five rendering conditions for one concrete witness pair.
bool renders_at(const Diagram& d, const RenderTuple& t, Witness w);

// Least witness pair by (w1, w2), or nullopt. Throws ValidationError when the
// diagram's base labels differ from C1 u C2 u C3.
std::optional<Witness> renders(const Diagram& d, const RenderTuple& t);

// One instance of the Diagram axiom:
//   /\[Δ] -> (antecedent -> consequent).
struct AxiomInstance {
  Diagram diagram;
  RenderTuple tuple;
  Witness witness;
  std::set<AtomicFormula> premises;
  AtomicFormula antecedent;
  AtomicFormula consequent;
};

// Throws ValidationError if the tuple is not rendered.
AxiomInstance axiom_instance(const Diagram& d, const RenderTuple& t);

// Tuple as ten masks over a VarIndex.
struct SlotMasks {
  std::uint64_t a1 = 0, a2 = 0, a3 = 0;
  std::uint64_t b1 = 0, b2 = 0, b3 = 0;
  std::uint64_t c1 = 0, c2 = 0, c3 = 0;
  std::uint64_t d = 0;

  std::uint64_t antecedent_left() const { return a1 | b1 | c1; }
  std::uint64_t antecedent_cond() const { return a3 | b3 | c3 | d; }
  std::uint64_t antecedent_right() const { return a2 | b2 | c2; }

  RenderTuple to_tuple(const VarIndex& index) const;
};

// Return false to stop the enumeration.
using RenderingVisitor = std::function<bool(const SlotMasks&, Witness)>;

// Goal-directed enumeration of every (witness, tuple) whose consequent is
// goal_a ||_{goal_c} goal_b, with D ranging over subsets of `d_pool` outside
// the goal. Witness pairs ascend by (w1, w2). Returns false if the visitor
// stopped it. The caller guarantees d.base_labels() == goal_c.
bool for_each_rendering(const Diagram& d, const VarIndex& index, std::uint64_t goal_a,
                        std::uint64_t goal_b, std::uint64_t goal_c, std::uint64_t d_pool,
                        const RenderingVisitor& visit);

// Every AxiomInstance with consequent == goal and D within d_pool.
std::vector<AxiomInstance> renderings_for_goal(const Diagram& d, const AtomicFormula& goal,
                                               const VarSet& d_pool);

}  // namespace cind

#endif  // CIND_RENDERING_HPP_
