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

#include "selftest.hpp"

#include <functional>
#include <random>

#include "cind/countermodel.hpp"
#include "cind/inference.hpp"
#include "cind/io.hpp"
#include "cind/rendering.hpp"

namespace cind::tools {

namespace {

using Rng = std::mt19937_64;

const VarSet kLetters{"a", "b", "c", "d"};

AtomicFormula random_atom(Rng& rng, const VarSet& universe) {
  std::vector<SecretVar> a, b, c;
  std::uniform_int_distribution<int> slot(0, 3);
  for (const auto& v : universe) {
    switch (slot(rng)) {
      case 0: a.push_back(v); break;
      case 1: b.push_back(v); break;
      case 2: c.push_back(v); break;
      default: break;
    }
  }
  return AtomicFormula(VarSet(a), VarSet(b), VarSet(c));
}

void record(SuiteResult& s, bool ok, const std::string& what) {
  if (ok) {
    ++s.passed;
  } else {
    if (s.failed == 0) s.first_failure = what;
    ++s.failed;
  }
}

SuiteResult regression(const std::string& name, const std::vector<AtomicFormula>& hyps,
                       const AtomicFormula& goal) {
  SuiteResult s{name};
  auto trace = derive(hyps, goal, SearchBudget{});
  record(s, trace && verify_trace(*trace, hyps).ok, "derive or verify failed");
  return s;
}

SuiteResult axiom_sweep(Rng& rng) {
  SuiteResult s{"symmetry/monotonicity"};
  for (int i = 0; i < 300; ++i) {
    Protocol p = random_protocol(kLetters, 3, 10, rng());
    AtomicFormula f = random_atom(rng, kLetters);
    if (!models_atomic(p, f)) {
      ++s.passed;
      continue;
    }
    record(s, models_atomic(p, f.swapped()), "symmetry on " + print_atom(f));
    std::vector<SecretVar> kept;
    for (const auto& v : f.b()) {
      if (rng() % 2) kept.push_back(v);
    }
    AtomicFormula weaker(f.a(), VarSet(kept), f.c());
    record(s, models_atomic(p, weaker), "monotonicity on " + print_atom(f));
  }
  return s;
}

Diagram random_diagram(Rng& rng, const VarSet& q, const std::vector<AtomicFormula>& kb,
                       std::size_t steps) {
  Diagram d = Diagram::basic(q);
  for (std::size_t k = 0; k < steps; ++k) {
    const AtomicFormula& f = kb[rng() % kb.size()];
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < d.vertex_count(); ++u) {
      for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (u != v && d.connected_set(u, v, f.c())) pairs.emplace_back(u, v);
      }
    }
    if (pairs.empty()) continue;
    auto [u, v] = pairs[rng() % pairs.size()];
    d = d.extend(u, v, f);
  }
  return d;
}

SuiteResult diagram_axiom_sweep(Rng& rng) {
  SuiteResult s{"diagram axiom"};
  for (int i = 0; i < 150; ++i) {
    std::vector<AtomicFormula> kb;
    for (int k = 0; k < 3; ++k) kb.push_back(random_atom(rng, kLetters));
    AtomicFormula shape = random_atom(rng, kLetters);
    Diagram d = random_diagram(rng, shape.c(), kb, rng() % 4);
    auto instances = renderings_for_goal(d, shape, kLetters - shape.vars());
    if (instances.empty()) continue;
    const AxiomInstance& in = instances[rng() % instances.size()];
    for (int t = 0; t < 20; ++t) {
      Protocol p = random_protocol(kLetters, 2, 8, rng());
      bool premises = models_atomic(p, in.antecedent);
      for (const auto& f : in.premises) premises = premises && models_atomic(p, f);
      if (!premises) continue;
      record(s, models_atomic(p, in.consequent), "instance " + print_tuple(in.tuple));
    }
  }
  return s;
}

SuiteResult extension_sweep(Rng& rng) {
  SuiteResult s{"extension preserves connectivity"};
  for (int i = 0; i < 200; ++i) {
    std::vector<AtomicFormula> kb;
    for (int k = 0; k < 3; ++k) kb.push_back(random_atom(rng, kLetters));
    Diagram d = Diagram::basic(random_atom(rng, kLetters).c());
    for (int k = 0; k < 6; ++k) {
      const AtomicFormula& f = kb[rng() % kb.size()];
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (VertexId u = 0; u < d.vertex_count(); ++u) {
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
          if (u != v && d.connected_set(u, v, f.c())) pairs.emplace_back(u, v);
        }
      }
      if (pairs.empty()) break;
      auto [u, v] = pairs[rng() % pairs.size()];
      Diagram next = d.extend(u, v, f);
      bool same = true;
      for (VertexId x = 0; x < d.vertex_count(); ++x) {
        for (VertexId y = 0; y < d.vertex_count(); ++y) {
          for (const auto& l : kLetters) {
            same = same && d.connected(x, y, l) == next.connected(x, y, l);
          }
        }
      }
      record(s, same, "extension by " + print_atom(f));
      d = next;
    }
  }
  return s;
}

SuiteResult product_sweep(Rng& rng) {
  SuiteResult s{"product satisfaction"};
  for (int i = 0; i < 100; ++i) {
    Protocol p1 = random_protocol(kLetters, 2, 6, rng());
    Protocol p2 = random_protocol(kLetters, 2, 6, rng());
    if (p1.run_count() == 0 || p2.run_count() == 0) continue;
    std::vector<Protocol> both{p1, p2};
    Protocol prod = compose(both);
    for (int k = 0; k < 10; ++k) {
      AtomicFormula f = random_atom(rng, kLetters);
      record(s, models_atomic(prod, f) == (models_atomic(p1, f) && models_atomic(p2, f)),
             "product on " + print_atom(f));
    }
  }
  return s;
}

SuiteResult refutation_regression() {
  SuiteResult s{"transitivity refutation"};
  std::vector<AtomicFormula> hyps{parse_atom("a ||_{} b"), parse_atom("b ||_{} c")};
  auto r = refute(hyps, parse_atom("a ||_{} c"), RefuteBounds{});
  record(s, r && r->protocol().run_count() <= 4, "no small countermodel");
  return s;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  auto a = [](const char* text) { return parse_atom(text); };
  std::vector<SuiteResult> out;
  out.push_back(regression("contraction", {a("a ||_{c} b"), a("a ||_{b,c} d")},
                           a("a ||_{c} b,d")));
  out.push_back(regression("weak union", {a("a,b ||_{c} d")}, a("a ||_{b,c} d")));
  out.push_back(regression(
      "six-vertex diagram",
      {a("b ||_{a} c"), a("e ||_{b} d"), a("d ||_{c} f"), a("e ||_{d} f"), a("a ||_{e} f")},
      a("e ||_{a} f")));
  out.push_back(regression("chained contraction", {a("a,b ||_{} c"), a("a ||_{} b")},
                           a("a ||_{} b,c")));
  out.push_back(axiom_sweep(rng));
  out.push_back(diagram_axiom_sweep(rng));
  out.push_back(extension_sweep(rng));
  out.push_back(product_sweep(rng));
  out.push_back(refutation_regression());
  return out;
}

}  // namespace cind::tools
