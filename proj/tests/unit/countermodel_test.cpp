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

#include <gtest/gtest.h>

#include "cind/countermodel.hpp"
#include "cind/error.hpp"
#include "oracles.hpp"

namespace cind {
namespace {

AtomicFormula at(const char* text) { return parse_atom(text); }

const std::vector<AtomicFormula> kTransHyps{at("a ||_{} b"), at("b ||_{} c")};

void expect_valid_refutation(const RefutationResult& r) {
  auto runs = r.protocol().runs();
  for (const auto& h : r.hypotheses()) EXPECT_TRUE(oracle::naive_models(runs, h));
  auto v = oracle::naive_violation(runs, r.failing_goal());
  ASSERT_TRUE(v.has_value());
  const auto& cert = r.certificate();
  EXPECT_EQ(cert.condition, r.failing_goal().c());
  EXPECT_TRUE(run_equiv(runs[cert.run1], runs[cert.run2], cert.condition));
  const AtomicFormula& g = r.failing_goal();
  for (const auto& x : runs) {
    EXPECT_FALSE(run_equiv(runs[cert.run1], x, g.a() | g.c()) &&
                 run_equiv(x, runs[cert.run2], g.b() | g.c()));
  }
}

TEST(RefuteTest, Transitivity) {
  auto r = refute(kTransHyps, at("a ||_{} c"), RefuteBounds{});
  ASSERT_TRUE(r.has_value());
  EXPECT_LE(r->protocol().run_count(), 4u);
  for (std::size_t v = 0; v < r->protocol().var_count(); ++v) {
    EXPECT_LE(r->protocol().domain(v).size(), 2u);
  }
  expect_valid_refutation(*r);
}

TEST(RefuteTest, TheFourRunCopyProtocolIsACountermodel) {
  std::vector<cind::Run> runs;
  for (const char* a : {"0", "1"}) {
    for (const char* b : {"0", "1"}) runs.push_back({{"a", a}, {"b", b}, {"c", a}});
  }
  Protocol p(VarSet{"a", "b", "c"}, {{"a", {"0", "1"}}, {"b", {"0", "1"}}, {"c", {"0", "1"}}},
             runs);
  RefutationResult r(p, kTransHyps, at("a ||_{} c"));
  expect_valid_refutation(r);
}

TEST(RefuteTest, ExtraConditionVariable) {
  auto r = refute({at("a ||_{c} b")}, at("a ||_{c,d} b"), RefuteBounds{});
  ASSERT_TRUE(r.has_value());
  expect_valid_refutation(*r);
}

TEST(RefuteTest, ValidGoalIsNeverRefuted) {
  RefuteBounds b;
  b.max_runs = 4;
  EXPECT_FALSE(refute({}, at("{} ||_{} a"), b).has_value());
}

TEST(RefuteTest, ResultRejectsNonCountermodels) {
  Protocol p(VarSet{"a", "c"}, {{"a", {"0"}}, {"c", {"0"}}}, {{{"a", "0"}, {"c", "0"}}});
  EXPECT_THROW(RefutationResult(p, {}, at("a ||_{} c")), ValidationError);
}

TEST(RefuteTest, DeterministicForSeed) {
  RefuteBounds b;
  b.seed = 5;
  auto x = refute(kTransHyps, at("a ||_{} c"), b);
  auto y = refute(kTransHyps, at("a ||_{} c"), b);
  ASSERT_TRUE(x && y);
  EXPECT_EQ(x->protocol(), y->protocol());
}

TEST(ChainTest, DepthZeroIsTheBasicDiagram) {
  ChainResult r = chain_protocol({}, VarSet{"a"}, 0, VarSet{"a", "b"});
  EXPECT_EQ(r.protocol.run_count(), 2u);
  auto runs = r.protocol.runs();
  EXPECT_TRUE(run_equiv(runs[0], runs[1], VarSet{"a"}));
  EXPECT_FALSE(run_equiv(runs[0], runs[1], VarSet{"b"}));
}

TEST(ChainTest, OneExtensionWitnessesTheBasePair) {
  const AtomicFormula f = at("a ||_{c} b");
  ChainResult r = chain_protocol({f}, VarSet{"c"}, 1);
  EXPECT_EQ(r.diagram.vertex_count(), 3u);
  EXPECT_EQ(r.protocol.run_count(), 3u);
  EXPECT_TRUE(obligation_discharged(r.diagram, {f, kPlus, kMinus}));
  auto runs = vertex_class_protocol(r.diagram, VarSet{"a", "b", "c"}).runs();
  std::size_t merged = 0;
  for (const auto& x : runs) {
    for (const auto& y : runs) {
      if (&x == &y || !run_equiv(x, y, f.c())) continue;
      for (const auto& z : runs) {
        if (run_equiv(x, z, f.a() | f.c()) && run_equiv(z, y, f.b() | f.c())) {
          ++merged;
          break;
        }
      }
    }
  }
  EXPECT_GE(merged, 1u);
}

TEST(ChainTest, ConsumedAtomsAreHypothesesAndMatchTheDiagram) {
  const VarSet u = oracle::letters(4);
  oracle::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    std::vector<AtomicFormula> hyps;
    for (int k = 0; k < 2; ++k) hyps.push_back(oracle::random_atom(rng, u));
    ChainResult r = chain_protocol(hyps, oracle::random_atom(rng, u).c(), rng() % 8, u);
    std::set<AtomicFormula> consumed(r.consumed.begin(), r.consumed.end());
    EXPECT_EQ(consumed, r.diagram.formulas());
    for (const auto& f : consumed) {
      EXPECT_NE(std::find(hyps.begin(), hyps.end(), f), hyps.end());
    }
    EXPECT_GE(r.protocol.run_count(), 1u);
    EXPECT_EQ(r.diagram.vertex_count(), 2 + r.consumed.size());
  }
}

TEST(ChainTest, FifoDischargesEveryEarlierObligation) {
  const VarSet u = oracle::letters(4);
  oracle::Rng rng(73);
  for (int i = 0; i < 60; ++i) {
    std::vector<AtomicFormula> hyps;
    for (int k = 0; k < 2; ++k) hyps.push_back(oracle::random_atom(rng, u));
    ChainState state(hyps, oracle::random_atom(rng, u).c());
    for (int warm = 0; warm < static_cast<int>(rng() % 3); ++warm) state.step();
    std::vector<Obligation> snapshot(state.queue().begin(), state.queue().end());
    const std::size_t budget = snapshot.size();
    for (std::size_t s = 0; s < budget && state.diagram().vertex_count() < 14; ++s) {
      state.step();
    }
    if (state.diagram().vertex_count() >= 14) continue;
    for (const auto& o : snapshot) {
      EXPECT_TRUE(obligation_discharged(state.diagram(), o)) << print_atom(o.atom);
    }
  }
}

TEST(ChainTest, FullyDischargedHypothesesHold) {
  const VarSet u = oracle::letters(3);
  oracle::Rng rng(79);
  std::size_t checked = 0;
  for (int i = 0; i < 80; ++i) {
    std::vector<AtomicFormula> hyps{oracle::random_atom(rng, u)};
    ChainResult r = chain_protocol(hyps, oracle::random_atom(rng, u).c(), 12, u);
    auto runs = r.protocol.runs();
    for (const auto& h : hyps) {
      bool pending = false;
      for (const auto& o : r.undischarged) pending = pending || o.atom == h;
      if (pending) continue;
      ++checked;
      EXPECT_TRUE(oracle::naive_models(runs, h)) << print_atom(h);
    }
  }
  EXPECT_GT(checked, 10u);
}

TEST(DecideTest, Outcomes) {
  RefuteBounds rb;
  Decision proved = decide({at("a ||_{c} b"), at("a ||_{b,c} d")}, at("a ||_{c} b,d"),
                           SearchBudget{}, rb);
  EXPECT_TRUE(std::holds_alternative<ProofTrace>(proved));

  Decision refuted = decide(kTransHyps, at("a ||_{} c"), SearchBudget{}, rb);
  ASSERT_TRUE(std::holds_alternative<RefutationResult>(refuted));
  expect_valid_refutation(std::get<RefutationResult>(refuted));

  SearchBudget tiny;
  tiny.max_diagram_vertices = 2;
  tiny.max_diagrams = 1;
  tiny.max_subgoal_depth = 0;
  RefuteBounds none;
  none.max_runs = 1;
  none.max_domain = 1;
  none.random_samples = 0;
  Decision unknown =
      decide({at("b ||_{a} c"), at("e ||_{b} d"), at("d ||_{c} f"), at("e ||_{d} f"),
              at("a ||_{e} f")},
             at("e ||_{a} f"), tiny, none);
  EXPECT_TRUE(std::holds_alternative<Unknown>(unknown));
}

}  // namespace
}  // namespace cind
