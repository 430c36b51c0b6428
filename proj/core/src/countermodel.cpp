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

#include "cind/countermodel.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "cind/error.hpp"

namespace cind {

RefutationResult::RefutationResult(Protocol protocol, std::vector<AtomicFormula> hypotheses,
                                   AtomicFormula failing_goal)
    : protocol_(std::move(protocol)),
      hypotheses_(std::move(hypotheses)),
      goal_(std::move(failing_goal)),
      certificate_{0, 0, {}} {
  for (const auto& h : hypotheses_) {
    if (!models_atomic(protocol_, h)) {
      throw ValidationError("countermodel violates hypothesis " + print_atom(h));
    }
  }
  auto v = find_violation(protocol_, goal_);
  if (!v) throw ValidationError("countermodel satisfies the goal " + print_atom(goal_));
  certificate_ = Certificate{v->first, v->second, goal_.c()};
}

namespace {

VarSet problem_universe(const std::vector<AtomicFormula>& hypotheses, const AtomicFormula& goal) {
  VarSet u = goal.vars();
  for (const auto& h : hypotheses) u = u | h.vars();
  return u;
}

bool is_countermodel(const Protocol& p, const std::vector<AtomicFormula>& hypotheses,
                     const AtomicFormula& goal) {
  if (models_atomic(p, goal)) return false;
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [&](const AtomicFormula& h) { return models_atomic(p, h); });
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Resumable refutation search so decide() can interleave it with proving.
class RefuteSearch {
 public:
  RefuteSearch(const std::vector<AtomicFormula>& hypotheses, const AtomicFormula& goal,
               const RefuteBounds& bounds)
      : hypotheses_(hypotheses),
        goal_(goal),
        bounds_(bounds),
        universe_(problem_universe(hypotheses, goal)),
        enumerator_(universe_, bounds.max_domain, bounds.max_runs) {}

  bool exhausted() const { return enum_done_ && sampled_ >= bounds_.random_samples; }

  std::optional<RefutationResult> run(std::size_t chunk) {
    for (std::size_t k = 0; k < chunk && !exhausted(); ++k) {
      std::optional<Protocol> p;
      if (!enum_done_) {
        if (enumerator_.produced() >= bounds_.max_protocols || !(p = enumerator_.next())) {
          enum_done_ = true;
          continue;
        }
      } else {
        p = random_protocol(universe_, bounds_.max_domain, bounds_.max_runs,
                            sample_seed(bounds_.seed, sampled_++));
      }
      if (is_countermodel(*p, hypotheses_, goal_)) {
        return RefutationResult(std::move(*p), hypotheses_, goal_);
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<AtomicFormula> hypotheses_;
  AtomicFormula goal_;
  RefuteBounds bounds_;
  VarSet universe_;
  ProtocolEnumerator enumerator_;
  bool enum_done_ = false;
  std::size_t sampled_ = 0;
};

}  // namespace

std::optional<RefutationResult> refute(const std::vector<AtomicFormula>& hypotheses,
                                       const AtomicFormula& goal, const RefuteBounds& bounds) {
  RefuteSearch search(hypotheses, goal, bounds);
  while (!search.exhausted()) {
    if (auto r = search.run(4096)) return r;
  }
  return std::nullopt;
}

bool obligation_discharged(const Diagram& d, const Obligation& o) {
  const VarSet left = o.atom.a() | o.atom.c();
  const VarSet right = o.atom.b() | o.atom.c();
  for (VertexId w = 0; w < d.vertex_count(); ++w) {
    if (d.connected_set(o.u, w, left) && d.connected_set(w, o.v, right)) return true;
  }
  return false;
}

ChainState::ChainState(std::vector<AtomicFormula> hypotheses, VarSet q)
    : diagram_(Diagram::basic(std::move(q))) {
  std::set<AtomicFormula> unique(hypotheses.begin(), hypotheses.end());
  hypotheses_.assign(unique.begin(), unique.end());
  enqueue_for(kMinus);
}

void ChainState::enqueue_for(VertexId fresh) {
  for (const auto& h : hypotheses_) {
    for (VertexId x = 0; x < fresh; ++x) {
      if (!diagram_.connected_set(x, fresh, h.c())) continue;
      queue_.push_back({h, x, fresh});
      queue_.push_back({h, fresh, x});
    }
  }
}

bool ChainState::step() {
  while (!queue_.empty()) {
    Obligation o = queue_.front();
    queue_.pop_front();
    if (obligation_discharged(diagram_, o)) continue;
    diagram_ = diagram_.extend(o.u, o.v, o.atom);
    consumed_.push_back(o.atom);
    ++extensions_;
    enqueue_for(static_cast<VertexId>(diagram_.vertex_count() - 1));
    return true;
  }
  return false;
}

Protocol vertex_class_protocol(const Diagram& d, const VarSet& universe) {
  std::map<SecretVar, std::vector<Value>> domains;
  std::vector<Run> runs(d.vertex_count());
  for (const auto& x : universe) {
    std::set<VertexId> classes;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      const VertexId c = d.component(v, x);
      classes.insert(c);
      runs[v][x] = std::to_string(c);
    }
    for (auto c : classes) domains[x].push_back(std::to_string(c));
  }
  return Protocol(universe, std::move(domains), runs);
}

ChainResult chain_protocol(const std::vector<AtomicFormula>& hypotheses, const VarSet& q,
                           std::size_t depth, const VarSet& universe) {
  VarSet u = universe | q;
  for (const auto& h : hypotheses) u = u | h.vars();

  ChainState state(hypotheses, q);
  while (state.extensions() < depth && state.step()) {
  }

  const Diagram& d = state.diagram();
  std::set<AtomicFormula> unique(hypotheses.begin(), hypotheses.end());
  std::vector<Obligation> open;
  for (const auto& h : unique) {
    for (VertexId a = 0; a < d.vertex_count(); ++a) {
      for (VertexId b = 0; b < d.vertex_count(); ++b) {
        if (a == b || !d.connected_set(a, b, h.c())) continue;
        Obligation o{h, a, b};
        if (!obligation_discharged(d, o)) open.push_back(o);
      }
    }
  }
  return ChainResult{vertex_class_protocol(d, u), d, std::move(open), state.consumed()};
}

Decision decide(const std::vector<AtomicFormula>& hypotheses, const AtomicFormula& goal,
                const SearchBudget& prove_budget, const RefuteBounds& refute_bounds) {
  prove_budget.validate();
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + prove_budget.time_limit;

  RefuteSearch refuter(hypotheses, goal, refute_bounds);
  std::size_t vertices = 2;
  bool proving = true;
  constexpr std::size_t kRefuteChunk = 2048;

  while (proving || !refuter.exhausted()) {
    if (proving) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
      if (left.count() <= 0) {
        proving = false;
      } else {
        SearchBudget slice = prove_budget;
        slice.max_diagram_vertices = vertices;
        slice.time_limit = left;
        SearchStats stats;
        if (auto t = derive(hypotheses, goal, slice, &stats)) return *t;
        if (stats.out_of_time || vertices >= prove_budget.max_diagram_vertices) {
          proving = false;
        }
        ++vertices;
      }
    }
    if (!refuter.exhausted()) {
      if (auto r = refuter.run(kRefuteChunk)) return std::move(*r);
    }
  }
  return Unknown{};
}

}  // namespace cind
