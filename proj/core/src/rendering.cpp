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

#include "cind/rendering.hpp"

#include <array>

#include "cind/error.hpp"

namespace cind {

void RenderTuple::validate() const {
  const std::array<const VarSet*, 10> sets{&a1, &a2, &a3, &b1, &b2, &b3, &c1, &c2, &c3, &d};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i]->is_disjoint_with(*sets[j])) {
        throw ValidationError("render tuple sets must be pairwise disjoint");
      }
    }
  }
}

AtomicFormula RenderTuple::antecedent() const {
  return AtomicFormula(a1 | b1 | c1, a2 | b2 | c2, a3 | b3 | c3 | d);
}

AtomicFormula RenderTuple::consequent() const {
  return AtomicFormula(a1 | a2 | a3, b1 | b2 | b3, c1 | c2 | c3);
}

bool renders_at(const Diagram& d, const RenderTuple& t, Witness w) {
  return d.connected_set(w.w1, kPlus, t.a1 | t.a3 | t.c1 | t.c3) &&
         d.connected_set(w.w1, kMinus, t.b1 | t.b3 | t.c1 | t.c3) &&
         d.connected_set(w.w2, kPlus, t.a2 | t.a3 | t.c2 | t.c3) &&
         d.connected_set(w.w2, kMinus, t.b2 | t.b3 | t.c2 | t.c3) &&
         d.connected_set(w.w1, w.w2, t.d);
}

std::optional<Witness> renders(const Diagram& d, const RenderTuple& t) {
  t.validate();
  if (d.base_labels() != t.c_union()) {
    throw ValidationError("diagram base labels {" + d.base_labels().join() +
                          "} differ from C1,C2,C3 = {" + t.c_union().join() + "}");
  }
  const auto n = static_cast<VertexId>(d.vertex_count());
  for (VertexId w1 = 0; w1 < n; ++w1) {
    for (VertexId w2 = 0; w2 < n; ++w2) {
      if (renders_at(d, t, {w1, w2})) return Witness{w1, w2};
    }
  }
  return std::nullopt;
}

AxiomInstance axiom_instance(const Diagram& d, const RenderTuple& t) {
  auto w = renders(d, t);
  if (!w) throw ValidationError("diagram does not render the tuple");
  return AxiomInstance{d, t, *w, d.formulas(), t.antecedent(), t.consequent()};
}

RenderTuple SlotMasks::to_tuple(const VarIndex& index) const {
  return RenderTuple{index.set(a1), index.set(a2), index.set(a3), index.set(b1), index.set(b2),
                     index.set(b3), index.set(c1), index.set(c2), index.set(c3), index.set(d)};
}

namespace {

// Slot choice for one goal variable: which of the three masks receives it.
struct VarChoice {
  std::uint64_t bit;
  std::array<std::uint64_t SlotMasks::*, 3> slots;
  std::array<bool, 3> allowed;
};

}  // namespace

bool for_each_rendering(const Diagram& d, const VarIndex& index, std::uint64_t goal_a,
                        std::uint64_t goal_b, std::uint64_t goal_c, std::uint64_t d_pool,
                        const RenderingVisitor& visit) {
  const auto n = static_cast<VertexId>(d.vertex_count());
  const std::uint64_t goal_vars = goal_a | goal_b | goal_c;
  const std::uint64_t relevant = goal_vars | d_pool;

  std::vector<std::uint64_t> to_plus(n), to_minus(n);
  for (VertexId w = 0; w < n; ++w) {
    to_plus[w] = d.connecting_mask(w, kPlus, index) & relevant;
    to_minus[w] = d.connecting_mask(w, kMinus, index) & relevant;
  }

  std::vector<VarChoice> choices;
  std::vector<std::size_t> pick;
  for (VertexId w1 = 0; w1 < n; ++w1) {
    for (VertexId w2 = 0; w2 < n; ++w2) {
      const std::uint64_t l1 = to_plus[w1], l2 = to_minus[w1];
      const std::uint64_t l3 = to_plus[w2], l4 = to_minus[w2];

      choices.clear();
      bool feasible = true;
      for (std::size_t i = 0; i < index.size() && feasible; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(goal_vars & bit)) continue;
        VarChoice ch{bit, {}, {}};
        if (goal_a & bit) {
          ch.slots = {&SlotMasks::a1, &SlotMasks::a2, &SlotMasks::a3};
          ch.allowed = {(l1 & bit) != 0, (l3 & bit) != 0, (l1 & l3 & bit) != 0};
        } else if (goal_b & bit) {
          ch.slots = {&SlotMasks::b1, &SlotMasks::b2, &SlotMasks::b3};
          ch.allowed = {(l2 & bit) != 0, (l4 & bit) != 0, (l2 & l4 & bit) != 0};
        } else {
          ch.slots = {&SlotMasks::c1, &SlotMasks::c2, &SlotMasks::c3};
          ch.allowed = {(l1 & l2 & bit) != 0, (l3 & l4 & bit) != 0,
                        (l1 & l2 & l3 & l4 & bit) != 0};
        }
        feasible = ch.allowed[0] || ch.allowed[1] || ch.allowed[2];
        choices.push_back(ch);
      }
      if (!feasible) continue;

      const std::uint64_t d_candidates =
          d.connecting_mask(w1, w2, index) & d_pool & ~goal_vars;

      // Odometer over per-variable slot choices, allowed slots in order.
      auto first_allowed = [&](std::size_t k) {
        std::size_t p = 0;
        while (!choices[k].allowed[p]) ++p;
        return p;
      };
      auto advance = [&] {
        for (std::size_t k = choices.size(); k-- > 0;) {
          std::size_t p = pick[k] + 1;
          while (p < 3 && !choices[k].allowed[p]) ++p;
          if (p < 3) {
            pick[k] = p;
            return true;
          }
          pick[k] = first_allowed(k);
        }
        return false;
      };
      pick.resize(choices.size());
      for (std::size_t k = 0; k < choices.size(); ++k) pick[k] = first_allowed(k);
      do {
        SlotMasks base;
        for (std::size_t k = 0; k < choices.size(); ++k) {
          base.*(choices[k].slots[pick[k]]) |= choices[k].bit;
        }
        // Ascending submasks of d_candidates, starting from the empty set.
        std::uint64_t sub = 0;
        while (true) {
          SlotMasks t = base;
          t.d = sub;
          if (!visit(t, Witness{w1, w2})) return false;
          if (sub == d_candidates) break;
          sub = (sub - d_candidates) & d_candidates;
        }
      } while (advance());
    }
  }
  return true;
}

std::vector<AxiomInstance> renderings_for_goal(const Diagram& d, const AtomicFormula& goal,
                                               const VarSet& d_pool) {
  if (d.base_labels() != goal.c()) {
    throw ValidationError("diagram base labels {" + d.base_labels().join() +
                          "} differ from the goal's condition set {" + goal.c().join() + "}");
  }
  VarIndex index(goal.vars() | d_pool);
  std::vector<AxiomInstance> out;
  for_each_rendering(d, index, index.mask(goal.a()), index.mask(goal.b()), index.mask(goal.c()),
                     index.mask(d_pool), [&](const SlotMasks& m, Witness w) {
                       RenderTuple t = m.to_tuple(index);
                       out.push_back(AxiomInstance{d, t, w, d.formulas(), t.antecedent(),
                                                   t.consequent()});
                       return true;
                     });
  return out;
}

}  // namespace cind
