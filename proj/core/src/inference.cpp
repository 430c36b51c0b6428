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

#include "cind/inference.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cind/diagram.hpp"
#include "cind/error.hpp"

namespace cind {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::kHypothesis:
      return "hypothesis";
    case Rule::kEmptySet:
      return "empty-set";
    case Rule::kSymmetry:
      return "symmetry";
    case Rule::kMonotonicity:
      return "monotonicity";
    case Rule::kDiagram:
      return "diagram";
  }
  return "?";
}

ProofTrace make_hypothesis(AtomicFormula atom) {
  return std::make_shared<const ProofNode>(Rule::kHypothesis, std::move(atom));
}

ProofTrace make_empty_set(AtomicFormula atom) {
  return std::make_shared<const ProofNode>(Rule::kEmptySet, std::move(atom));
}

ProofTrace make_symmetry(ProofTrace child) {
  auto n = std::make_shared<ProofNode>(Rule::kSymmetry, child->conclusion.swapped());
  n->children.push_back(std::move(child));
  return n;
}

ProofTrace make_monotonicity(ProofTrace child, VarSet dropped) {
  const auto& c = child->conclusion;
  auto n = std::make_shared<ProofNode>(Rule::kMonotonicity,
                                       AtomicFormula(c.a(), c.b() - dropped, c.c()));
  n->dropped = std::move(dropped);
  n->children.push_back(std::move(child));
  return n;
}

ProofTrace make_diagram_step(AxiomInstance instance, std::vector<ProofTrace> premise_proofs,
                             ProofTrace antecedent_proof) {
  auto n = std::make_shared<ProofNode>(Rule::kDiagram, instance.consequent);
  n->children = std::move(premise_proofs);
  n->children.push_back(std::move(antecedent_proof));
  n->instance = std::move(instance);
  return n;
}

TraceShape trace_shape(const ProofTrace& t) {
  TraceShape s;
  s.nodes = 1;
  std::size_t nested = 0;
  for (const auto& c : t->children) {
    TraceShape k = trace_shape(c);
    s.nodes += k.nodes;
    s.diagram_steps += k.diagram_steps;
    s.max_diagram_vertices = std::max(s.max_diagram_vertices, k.max_diagram_vertices);
    nested = std::max(nested, k.diagram_nesting);
  }
  s.diagram_nesting = nested;
  if (t->rule == Rule::kDiagram) {
    ++s.diagram_steps;
    ++s.diagram_nesting;
    s.max_diagram_vertices = std::max(s.max_diagram_vertices, t->instance->diagram.vertex_count());
  }
  return s;
}

KnowledgeBase KnowledgeBase::from_hypotheses(VarSet universe,
                                             const std::vector<AtomicFormula>& hypotheses) {
  KnowledgeBase kb(std::move(universe));
  for (const auto& h : hypotheses) kb.add(h, make_hypothesis(h));
  return kb;
}

bool KnowledgeBase::add(const AtomicFormula& atom, ProofTrace proof) {
  if (!atom.vars().is_subset_of(universe_)) {
    throw ValidationError("atom " + print_atom(atom) + " mentions variables outside the universe");
  }
  if (!proofs_.emplace(atom, std::move(proof)).second) return false;
  atoms_.push_back(atom);
  return true;
}

namespace {

// Weakens the proof of A' ||_C B' down to `goal` with Monotonicity drops on
// the right and Symmetry swaps; the caller checked that goal is subsumed.
ProofTrace weaken(ProofTrace t, const AtomicFormula& goal) {
  const AtomicFormula k = t->conclusion;
  if (goal.a().is_subset_of(k.a()) && goal.b().is_subset_of(k.b())) {
    if (k.b() != goal.b()) t = make_monotonicity(t, k.b() - goal.b());
    if (k.a() != goal.a()) {
      t = make_symmetry(t);
      t = make_monotonicity(t, k.a() - goal.a());
      t = make_symmetry(t);
    }
  } else {
    if (k.b() != goal.a()) t = make_monotonicity(t, k.b() - goal.a());
    t = make_symmetry(t);
    if (k.a() != goal.b()) t = make_monotonicity(t, k.a() - goal.b());
  }
  return t;
}

bool subsumed_set(const AtomicFormula& goal, const AtomicFormula& k) {
  if (goal.c() != k.c()) return false;
  return (goal.a().is_subset_of(k.a()) && goal.b().is_subset_of(k.b())) ||
         (goal.a().is_subset_of(k.b()) && goal.b().is_subset_of(k.a()));
}

}  // namespace

std::optional<ProofTrace> subsumes(const KnowledgeBase& kb, const AtomicFormula& goal) {
  if (!goal.vars().is_subset_of(kb.universe())) {
    throw ValidationError("goal " + print_atom(goal) + " mentions variables outside the universe");
  }
  for (const auto& k : kb.atoms()) {
    if (subsumed_set(goal, k)) return weaken(kb.proof(k), goal);
  }
  return std::nullopt;
}

void SearchBudget::validate() const {
  if (max_diagram_vertices < 2 || max_diagrams == 0 || time_limit.count() <= 0) {
    throw ValidationError(
        "search budget needs max_diagram_vertices >= 2, max_diagrams >= 1 and a positive time "
        "limit");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct MaskAtom {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  friend bool operator==(const MaskAtom&, const MaskAtom&) = default;
  MaskAtom swapped() const { return {b, a, c}; }
  MaskAtom canonical() const { return a <= b ? *this : swapped(); }
};

struct MaskAtomHash {
  std::size_t operator()(const MaskAtom& m) const noexcept {
    std::size_t h = m.a * 0x9e3779b97f4a7c15ULL;
    h ^= m.b + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
    h ^= m.c + 0x94d049bb133111ebULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool mask_subsumed(const MaskAtom& goal, const MaskAtom& k) {
  if (goal.c != k.c) return false;
  return ((goal.a & ~k.a) == 0 && (goal.b & ~k.b) == 0) ||
         ((goal.a & ~k.b) == 0 && (goal.b & ~k.a) == 0);
}

struct OutOfTime {};

class Prover {
 public:
  Prover(VarIndex index, const SearchBudget& budget, SearchStats& stats)
      : index_(std::move(index)),
        budget_(budget),
        deadline_(Clock::now() + budget.time_limit),
        stats_(stats) {}

  const VarIndex& index() const { return index_; }

  MaskAtom to_mask(const AtomicFormula& f) const {
    return {index_.mask(f.a()), index_.mask(f.b()), index_.mask(f.c())};
  }

  AtomicFormula to_atom(const MaskAtom& m) const {
    return AtomicFormula(index_.set(m.a), index_.set(m.b), index_.set(m.c));
  }

  // Returns true if the fact became extension fuel (not already subsumed).
  bool add_fact(const AtomicFormula& f, ProofTrace proof) {
    const MaskAtom m = to_mask(f);
    for (const auto& k : kb_) {
      if (mask_subsumed(m, k.mask)) return false;
    }
    kb_.push_back({m, f, proof});
    kb_atoms_.push_back(f);
    proofs_.emplace(f, std::move(proof));
    diagram_cache_.clear();
    failed_.clear();
    return true;
  }

  void check_time() {
    if (Clock::now() >= deadline_) throw OutOfTime{};
  }

  std::optional<ProofTrace> discharge(const MaskAtom& goal) const {
    if (goal.a == 0 || goal.b == 0) return make_empty_set(to_atom(goal));
    for (const auto& k : kb_) {
      if (mask_subsumed(goal, k.mask)) return weaken(k.proof, to_atom(goal));
    }
    return std::nullopt;
  }

  // Iterative deepening on subgoal depth against the current kb.
  std::optional<ProofTrace> prove_at_current_kb(const MaskAtom& goal) {
    for (std::size_t depth = 0; depth <= budget_.max_subgoal_depth; ++depth) {
      if (auto t = search(goal, depth)) return t;
    }
    return std::nullopt;
  }

  std::optional<ProofTrace> search(const MaskAtom& goal, std::size_t depth) {
    if (auto t = discharge(goal)) return t;
    if (auto it = failed_.find(goal); it != failed_.end() && it->second >= depth) {
      return std::nullopt;
    }
    check_time();

    const std::vector<Diagram>& diagrams = diagrams_for(goal.c);
    const std::uint64_t d_pool = index_.full_mask() & ~(goal.a | goal.b | goal.c);

    struct Pending {
      MaskAtom antecedent;
      std::size_t diagram;
      SlotMasks slots;
      Witness witness;
    };
    std::vector<Pending> pending;
    std::unordered_set<MaskAtom, MaskAtomHash> pending_seen;
    std::optional<ProofTrace> found;

    stack_.push_back(goal);
    for (std::size_t i = 0; i < diagrams.size() && !found; ++i) {
      for_each_rendering(diagrams[i], index_, goal.a, goal.b, goal.c, d_pool,
                         [&](const SlotMasks& s, Witness w) {
                           if ((++stats_.instances & 0x3FFF) == 0) check_time();
                           const MaskAtom ant{s.antecedent_left(), s.antecedent_right(),
                                              s.antecedent_cond()};
                           if (ant == goal) return true;
                           if (auto p = discharge(ant)) {
                             found = build_step(diagrams[i], s, w, *p);
                             return false;
                           }
                           if (depth > 0 && pending_seen.insert(ant.canonical()).second) {
                             pending.push_back({ant, i, s, w});
                           }
                           return true;
                         });
    }
    for (std::size_t k = 0; k < pending.size() && !found; ++k) {
      const Pending& p = pending[k];
      const MaskAtom key = p.antecedent.canonical();
      if (std::find(stack_.begin(), stack_.end(), key) != stack_.end()) continue;
      ++stats_.subgoal_searches;
      if (auto sub = search(key, depth - 1)) {
        ProofTrace ant_proof = key == p.antecedent ? *sub : make_symmetry(*sub);
        found = build_step(diagrams[p.diagram], p.slots, p.witness, ant_proof);
      }
    }
    stack_.pop_back();

    if (!found) {
      auto& f = failed_[goal];
      f = std::max(f, depth);
    }
    return found;
  }

  // Every non-trivial atom (a < b canonical orientation) not yet discharged,
  // attempted at subgoal depth 0. Proven ones are returned, not yet added.
  std::vector<std::pair<AtomicFormula, ProofTrace>> forward_round(const MaskAtom& skip) {
    std::vector<std::pair<AtomicFormula, ProofTrace>> lemmas;
    for_each_candidate([&](const MaskAtom& m) {
      if (m.a == 0 || m.b == 0 || m.a > m.b || m == skip.canonical()) return;
      if (discharge(m)) return;
      if (auto t = search(m, 0)) lemmas.emplace_back(to_atom(m), *t);
    });
    return lemmas;
  }

  template <typename Fn>
  void for_each_candidate(Fn&& fn) const {
    const std::size_t n = index_.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
      MaskAtom m;
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < n; ++i, rest /= 4) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        switch (rest % 4) {
          case 1:
            m.a |= bit;
            break;
          case 2:
            m.b |= bit;
            break;
          case 3:
            m.c |= bit;
            break;
          default:
            break;
        }
      }
      fn(m);
    }
  }

 private:
  struct Fact {
    MaskAtom mask;
    AtomicFormula atom;
    ProofTrace proof;
  };

  const std::vector<Diagram>& diagrams_for(std::uint64_t c) {
    auto it = diagram_cache_.find(c);
    if (it != diagram_cache_.end()) return it->second;

    std::vector<Diagram> all;
    std::vector<Diagram> level{Diagram::basic(index_.set(c))};
    all.push_back(level.front());
    ExtensionCaps caps{budget_.max_diagram_vertices, false};
    while (!level.empty() && all.size() < budget_.max_diagrams) {
      std::vector<Diagram> next;
      for (const auto& d : level) {
        check_time();
        for (auto& e : enumerate_extensions(d, kb_atoms_, caps)) {
          if (all.size() >= budget_.max_diagrams) break;
          all.push_back(e);
          next.push_back(std::move(e));
        }
        if (all.size() >= budget_.max_diagrams) break;
      }
      level = std::move(next);
    }
    stats_.diagrams += all.size();
    return diagram_cache_.emplace(c, std::move(all)).first->second;
  }

  ProofTrace build_step(const Diagram& d, const SlotMasks& s, Witness w,
                        const ProofTrace& antecedent_proof) const {
    RenderTuple t = s.to_tuple(index_);
    AxiomInstance inst{d, t, w, d.formulas(), t.antecedent(), t.consequent()};
    std::vector<ProofTrace> premise_proofs;
    premise_proofs.reserve(d.formulas().size());
    for (const auto& f : d.formulas()) premise_proofs.push_back(proofs_.at(f));
    return make_diagram_step(std::move(inst), std::move(premise_proofs), antecedent_proof);
  }

  VarIndex index_;
  SearchBudget budget_;
  Clock::time_point deadline_;
  SearchStats& stats_;

  std::vector<Fact> kb_;
  std::vector<AtomicFormula> kb_atoms_;
  std::map<AtomicFormula, ProofTrace> proofs_;
  std::map<std::uint64_t, std::vector<Diagram>> diagram_cache_;
  std::unordered_map<MaskAtom, std::size_t, MaskAtomHash> failed_;
  std::vector<MaskAtom> stack_;
};

// Hypotheses in canonical order with those subsumed by another one removed.
std::vector<AtomicFormula> essential_hypotheses(const std::vector<AtomicFormula>& hypotheses) {
  std::set<AtomicFormula> unique(hypotheses.begin(), hypotheses.end());
  std::vector<AtomicFormula> out;
  for (const auto& h : unique) {
    bool redundant = false;
    for (const auto& k : unique) {
      if (!(k == h) && subsumed_set(h, k) && !(subsumed_set(k, h) && k > h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(h);
  }
  return out;
}

VarSet universe_of(const std::vector<AtomicFormula>& hypotheses) {
  VarSet u;
  for (const auto& h : hypotheses) u = u | h.vars();
  return u;
}

}  // namespace

std::optional<ProofTrace> derive(const std::vector<AtomicFormula>& hypotheses,
                                 const AtomicFormula& goal, const SearchBudget& budget,
                                 SearchStats* stats) {
  budget.validate();
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  Prover prover(VarIndex(universe_of(hypotheses) | goal.vars()), budget, st);
  for (const auto& h : essential_hypotheses(hypotheses)) prover.add_fact(h, make_hypothesis(h));
  const MaskAtom target = prover.to_mask(goal);

  try {
    for (std::size_t round = 0;; ++round) {
      if (auto t = prover.prove_at_current_kb(target)) return t;
      if (round >= budget.max_rounds || prover.index().size() > kDefaultSaturationLimit) break;
      ++st.rounds;
      auto lemmas = prover.forward_round(target);
      std::size_t added = 0;
      for (auto& [atom, proof] : lemmas) added += prover.add_fact(atom, proof) ? 1 : 0;
      st.lemmas += added;
      if (added == 0) break;
    }
  } catch (const OutOfTime&) {
    st.out_of_time = true;
  }
  return std::nullopt;
}

KnowledgeBase saturate(const std::vector<AtomicFormula>& hypotheses, const SearchBudget& budget,
                       const VarSet& universe, std::size_t max_universe) {
  budget.validate();
  const VarSet u = universe | universe_of(hypotheses);
  if (u.size() > max_universe) {
    throw ValidationError("saturation is limited to " + std::to_string(max_universe) +
                          " variables; universe has " + std::to_string(u.size()));
  }
  SearchStats st;
  Prover prover{VarIndex(u), budget, st};
  KnowledgeBase result = KnowledgeBase::from_hypotheses(u, hypotheses);
  for (const auto& h : essential_hypotheses(hypotheses)) prover.add_fact(h, make_hypothesis(h));

  try {
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<MaskAtom> candidates;
      prover.for_each_candidate([&](const MaskAtom& m) { candidates.push_back(m); });
      for (const auto& m : candidates) {
        AtomicFormula atom = prover.to_atom(m);
        if (result.contains(atom)) continue;
        if (auto t = prover.prove_at_current_kb(m)) {
          result.add(atom, *t);
          if (prover.add_fact(atom, *t)) progress = true;
        }
      }
    }
  } catch (const OutOfTime&) {
    // Partial closure: everything found so far is proven.
  }
  return result;
}

}  // namespace cind
