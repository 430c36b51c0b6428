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

#ifndef CIND_PROTOCOL_HPP_
#define CIND_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cind/formula.hpp"
#include "cind/varset.hpp"

namespace cind {

using Value = std::string;

// A run assigns a value to every variable of a protocol's universe.
using Run = std::map<SecretVar, Value>;

// True iff r1 and r2 agree on every variable of s. Throws ValidationError if a
// variable of s is missing from either run.
bool run_equiv(const Run& r1, const Run& r2, const VarSet& s);

// A finite protocol: a nonempty finite value domain per variable plus a set of
// runs. Runs are stored as value indices into the per-variable domains, in
// canonical (lexicographic) order without duplicates.
class Protocol {
 public:
  using IndexedRun = std::vector<std::uint32_t>;

  // Validates totality and domain membership; duplicate runs collapse.
  // Errors name the first offending run by its position in `runs`.
  Protocol(VarSet universe, std::map<SecretVar, std::vector<Value>> domains,
           const std::vector<Run>& runs);

  // Unchecked-by-name fast path used by generators: domains[i] belongs to the
  // i-th universe variable, runs hold indices into those domains. Still checks
  // ranges.
  static Protocol from_indices(VarSet universe, std::vector<std::vector<Value>> domains,
                               std::vector<IndexedRun> runs);

  const VarSet& universe() const { return universe_; }
  std::size_t var_count() const { return universe_.size(); }
  std::size_t run_count() const { return runs_.size(); }
  const std::vector<Value>& domain(std::size_t var) const { return domains_[var]; }
  const std::vector<Value>& domain(std::string_view var) const;
  const std::vector<IndexedRun>& indexed_runs() const { return runs_; }

  Run run(std::size_t i) const;
  std::vector<Run> runs() const;

  std::size_t var_position(std::string_view var) const;

  friend bool operator==(const Protocol&, const Protocol&) = default;

 private:
  Protocol() = default;
  void canonicalize_runs();

  VarSet universe_;
  std::vector<std::vector<Value>> domains_;
  std::vector<IndexedRun> runs_;
};

// First pair of runs (by index) that agree on f.c but admit no merging run;
// nullopt when p satisfies f. Throws ValidationError for variables outside the
// universe.
std::optional<std::pair<std::size_t, std::size_t>> find_violation(const Protocol& p,
                                                                 const AtomicFormula& f);
bool models_atomic(const Protocol& p, const AtomicFormula& f);
bool models(const Protocol& p, const Formula& f);

// Product protocol: component-wise tuple values `<v1,...,vn>` and the full
// cross product of run sets. All inputs must share one universe.
Protocol compose(std::span<const Protocol> ps);

// Lazily enumerates protocols over `universe` with uniform domains {0..k-1},
// k <= max_domain, and at most max_runs runs, ordered by (k, run count, run
// combination). A run set appears once: at size k >= 2 only sets mentioning
// value k-1 are produced.
class ProtocolEnumerator {
 public:
  ProtocolEnumerator(VarSet universe, std::size_t max_domain, std::size_t max_runs);

  std::optional<Protocol> next();
  std::uint64_t produced() const { return produced_; }

 private:
  bool advance_combination();
  bool start_size(std::size_t run_count);
  bool uses_top_value() const;

  VarSet universe_;
  std::size_t max_domain_;
  std::size_t max_runs_;
  std::size_t domain_size_ = 0;
  std::vector<Protocol::IndexedRun> all_runs_;
  std::size_t run_count_ = 0;
  std::vector<std::size_t> combo_;
  bool pending_ = false;
  bool done_ = false;
  std::uint64_t produced_ = 0;
};

std::vector<Protocol> enumerate_protocols(const VarSet& universe, std::size_t max_domain,
                                          std::size_t max_runs);

// Deterministic in (arguments, seed). Per-variable domain sizes are uniform in
// [1, max_domain]; the number of sampled runs is uniform in [0, max_runs]
// before duplicates collapse.
Protocol random_protocol(const VarSet& universe, std::size_t max_domain, std::size_t max_runs,
                         std::uint64_t seed);

}  // namespace cind

#endif  // CIND_PROTOCOL_HPP_
