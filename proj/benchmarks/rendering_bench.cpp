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

#include <benchmark/benchmark.h>

#include "cind/diagram.hpp"
#include "cind/formula.hpp"
#include "cind/rendering.hpp"

namespace {

using cind::parse_atom;

cind::Diagram six_vertex() {
  return cind::Diagram::basic(cind::VarSet{"a"})
      .extend(cind::kPlus, cind::kMinus, parse_atom("b ||_{a} c"))
      .extend(cind::kPlus, 2, parse_atom("e ||_{b} d"))
      .extend(2, cind::kMinus, parse_atom("d ||_{c} f"))
      .extend(3, 4, parse_atom("e ||_{d} f"));
}

void BM_Renders(benchmark::State& state) {
  const cind::Diagram d = six_vertex();
  const cind::RenderTuple t{{}, {}, cind::VarSet{"e"}, {}, cind::VarSet{"f"}, {},
                            cind::VarSet{"a"}, {}, {}, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cind::renders(d, t));
  }
}
BENCHMARK(BM_Renders);

void BM_RenderingsForGoal(benchmark::State& state) {
  const cind::Diagram d = six_vertex();
  const auto goal = parse_atom("e ||_{a} f");
  const cind::VarSet extra{"b", "c", "d"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cind::renderings_for_goal(d, goal, extra));
  }
}
BENCHMARK(BM_RenderingsForGoal)->Unit(benchmark::kMicrosecond);

}  // namespace
