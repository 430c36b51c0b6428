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

#include "cind/protocol.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "cind/error.hpp"

namespace cind {

bool run_equiv(const Run& r1, const Run& r2, const VarSet& s) {
  for (const auto& x : s) {
    auto i = r1.find(x);
    auto j = r2.find(x);
    if (i == r1.end() || j == r2.end()) {
      throw ValidationError("variable '" + x + "' is not assigned by the run");
    }
    if (i->second != j->second) return false;
  }
  return true;
}

Protocol::Protocol(VarSet universe, std::map<SecretVar, std::vector<Value>> domains,
                   const std::vector<Run>& runs)
    : universe_(std::move(universe)) {
  for (const auto& [var, values] : domains) {
    if (!universe_.contains(var)) {
      throw ValidationError("domain given for undeclared variable '" + var + "'");
    }
  }
  domains_.reserve(universe_.size());
  for (const auto& var : universe_) {
    auto it = domains.find(var);
    if (it == domains.end() || it->second.empty()) {
      throw ValidationError("variable '" + var + "' has an empty domain");
    }
    std::vector<Value> dom = it->second;
    std::sort(dom.begin(), dom.end());
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end()) {
      throw ValidationError("domain of '" + var + "' lists a value twice");
    }
    domains_.push_back(std::move(dom));
  }
  runs_.reserve(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    if (run.size() != universe_.size()) {
      for (const auto& [var, value] : run) {
        if (!universe_.contains(var)) {
          throw ValidationError("run " + std::to_string(r) + " assigns undeclared variable '" +
                                var + "'");
        }
      }
    }
    IndexedRun indexed(universe_.size());
    std::size_t i = 0;
    for (const auto& var : universe_) {
      auto it = run.find(var);
      if (it == run.end()) {
        throw ValidationError("run " + std::to_string(r) + " does not assign '" + var + "'");
      }
      const auto& dom = domains_[i];
      auto pos = std::lower_bound(dom.begin(), dom.end(), it->second);
      if (pos == dom.end() || *pos != it->second) {
        throw ValidationError("run " + std::to_string(r) + " gives '" + var + "' the value '" +
                              it->second + "' outside its domain");
      }
      indexed[i++] = static_cast<std::uint32_t>(pos - dom.begin());
    }
    runs_.push_back(std::move(indexed));
  }
  canonicalize_runs();
}

Protocol Protocol::from_indices(VarSet universe, std::vector<std::vector<Value>> domains,
                                std::vector<IndexedRun> runs) {
  Protocol p;
  p.universe_ = std::move(universe);
  if (domains.size() != p.universe_.size()) {
    throw ValidationError("domain count does not match the universe");
  }
  for (const auto& d : domains) {
    if (d.empty()) throw ValidationError("empty domain");
  }
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].size() != domains.size()) {
      throw ValidationError("run " + std::to_string(r) + " is not total");
    }
    for (std::size_t i = 0; i < domains.size(); ++i) {
      if (runs[r][i] >= domains[i].size()) {
        throw ValidationError("run " + std::to_string(r) + " has a value outside its domain");
      }
    }
  }
  p.domains_ = std::move(domains);
  p.runs_ = std::move(runs);
  p.canonicalize_runs();
  return p;
}

void Protocol::canonicalize_runs() {
  std::sort(runs_.begin(), runs_.end());
  runs_.erase(std::unique(runs_.begin(), runs_.end()), runs_.end());
}

std::size_t Protocol::var_position(std::string_view var) const {
  const auto& n = universe_.names();
  auto it = std::lower_bound(n.begin(), n.end(), var);
  if (it == n.end() || *it != var) {
    throw ValidationError("variable '" + std::string(var) + "' is not in the protocol universe");
  }
  return static_cast<std::size_t>(it - n.begin());
}

const std::vector<Value>& Protocol::domain(std::string_view var) const {
  return domains_[var_position(var)];
}

Run Protocol::run(std::size_t i) const {
  Run r;
  for (std::size_t v = 0; v < universe_.size(); ++v) {
    r.emplace(universe_.names()[v], domains_[v][runs_.at(i)[v]]);
  }
  return r;
}

std::vector<Run> Protocol::runs() const {
  std::vector<Run> out;
  out.reserve(runs_.size());
  for (std::size_t i = 0; i < runs_.size(); ++i) out.push_back(run(i));
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<std::size_t> positions(const Protocol& p, const VarSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(p.var_position(x));
  return out;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_violation(const Protocol& p,
                                                                 const AtomicFormula& f) {
  const auto pa = positions(p, f.a());
  const auto pb = positions(p, f.b());
  const auto pc = positions(p, f.c());
  const auto& runs = p.indexed_runs();

  auto project = [](const Protocol::IndexedRun& r, const std::vector<std::size_t>& pos,
                    std::vector<std::uint32_t>& out) {
    for (auto i : pos) out.push_back(r[i]);
  };

  // Every run's (A, B, C) projection; a merge of r1, r2 exists iff
  // (A(r1), B(r2), C(r1)) is among them.
  std::unordered_set<std::vector<std::uint32_t>, KeyHash> merged;
  std::unordered_map<std::vector<std::uint32_t>, std::vector<std::size_t>, KeyHash> by_c;
  std::vector<std::uint32_t> key;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    key.clear();
    project(runs[i], pa, key);
    project(runs[i], pb, key);
    project(runs[i], pc, key);
    merged.insert(key);
    key.clear();
    project(runs[i], pc, key);
    by_c[key].push_back(i);
  }

  for (std::size_t i = 0; i < runs.size(); ++i) {
    key.clear();
    project(runs[i], pc, key);
    for (std::size_t j : by_c[key]) {
      key.clear();
      project(runs[i], pa, key);
      project(runs[j], pb, key);
      project(runs[i], pc, key);
      if (!merged.contains(key)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool models_atomic(const Protocol& p, const AtomicFormula& f) {
  return !find_violation(p, f).has_value();
}

bool models(const Protocol& p, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return models_atomic(p, f.as_atom());
    case Formula::Kind::kImplies:
      // Check the consequent's variables even when the antecedent fails.
      if (!free_vars(f).is_subset_of(p.universe())) {
        throw ValidationError("formula mentions variables outside the protocol universe");
      }
      return !models(p, f.lhs()) || models(p, f.rhs());
  }
  return false;
}

Protocol compose(std::span<const Protocol> ps) {
  if (ps.empty()) throw ValidationError("compose needs at least one protocol");
  const VarSet& universe = ps.front().universe();
  for (const auto& p : ps) {
    if (p.universe() != universe) {
      throw ValidationError("compose: protocols have different universes");
    }
  }
  const std::size_t n = universe.size();

  // Product domain of variable v in mixed radix, first component most
  // significant.
  std::vector<std::vector<Value>> domains(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::vector<std::string_view>> tuples{{}};
    for (const auto& p : ps) {
      std::vector<std::vector<std::string_view>> next;
      for (const auto& t : tuples) {
        for (const auto& val : p.domain(v)) {
          auto u = t;
          u.push_back(val);
          next.push_back(std::move(u));
        }
      }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) {
      std::string s = "<";
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ',';
        s += t[k];
      }
      s += '>';
      domains[v].push_back(std::move(s));
    }
  }

  std::vector<Protocol::IndexedRun> runs{Protocol::IndexedRun(n, 0)};
  for (const auto& p : ps) {
    std::vector<Protocol::IndexedRun> next;
    next.reserve(runs.size() * p.run_count());
    for (const auto& partial : runs) {
      for (const auto& r : p.indexed_runs()) {
        Protocol::IndexedRun combined(n);
        for (std::size_t v = 0; v < n; ++v) {
          combined[v] = partial[v] * static_cast<std::uint32_t>(p.domain(v).size()) + r[v];
        }
        next.push_back(std::move(combined));
      }
    }
    runs = std::move(next);
  }
  // Lexicographic domain strings need not match mixed-radix order; remap.
  std::vector<std::vector<std::uint32_t>> remap(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint32_t> order(domains[v].size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return domains[v][x] < domains[v][y]; });
    remap[v].resize(order.size());
    std::vector<Value> sorted;
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      remap[v][order[i]] = i;
      sorted.push_back(domains[v][order[i]]);
    }
    domains[v] = std::move(sorted);
  }
  for (auto& r : runs) {
    for (std::size_t v = 0; v < n; ++v) r[v] = remap[v][r[v]];
  }
  return Protocol::from_indices(universe, std::move(domains), std::move(runs));
}

ProtocolEnumerator::ProtocolEnumerator(VarSet universe, std::size_t max_domain,
                                       std::size_t max_runs)
    : universe_(std::move(universe)), max_domain_(max_domain), max_runs_(max_runs) {
  if (max_domain_ == 0 || max_runs_ == 0) {
    throw ValidationError("protocol enumeration bounds must be at least 1");
  }
}

bool ProtocolEnumerator::start_size(std::size_t run_count) {
  if (run_count > max_runs_ || run_count > all_runs_.size()) return false;
  run_count_ = run_count;
  combo_.resize(run_count);
  for (std::size_t i = 0; i < run_count; ++i) combo_[i] = i;
  return true;
}

bool ProtocolEnumerator::advance_combination() {
  const std::size_t m = combo_.size();
  const std::size_t total = all_runs_.size();
  for (std::size_t i = m; i-- > 0;) {
    if (combo_[i] < total - m + i) {
      ++combo_[i];
      for (std::size_t j = i + 1; j < m; ++j) combo_[j] = combo_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool ProtocolEnumerator::uses_top_value() const {
  const auto top = static_cast<std::uint32_t>(domain_size_ - 1);
  for (auto idx : combo_) {
    for (auto v : all_runs_[idx]) {
      if (v == top) return true;
    }
  }
  return false;
}

std::optional<Protocol> ProtocolEnumerator::next() {
  auto open_domain = [this](std::size_t k) {
    for (; k <= max_domain_; ++k) {
      domain_size_ = k;
      all_runs_.clear();
      Protocol::IndexedRun r(universe_.size(), 0);
      while (true) {
        all_runs_.push_back(r);
        std::size_t i = r.size();
        while (i > 0 && r[i - 1] + 1 == k) r[--i] = 0;
        if (i == 0) break;
        ++r[i - 1];
      }
      if (start_size(0)) return true;
    }
    return false;
  };

  while (!done_) {
    bool ok;
    if (domain_size_ == 0) {
      ok = open_domain(1);
    } else {
      ok = advance_combination() || start_size(run_count_ + 1) || open_domain(domain_size_ + 1);
    }
    if (!ok) {
      done_ = true;
      break;
    }
    if (domain_size_ >= 2 && !uses_top_value()) continue;

    std::vector<std::vector<Value>> domains(universe_.size());
    for (auto& d : domains) {
      for (std::size_t v = 0; v < domain_size_; ++v) d.push_back(std::to_string(v));
    }
    std::vector<Protocol::IndexedRun> runs;
    runs.reserve(combo_.size());
    for (auto idx : combo_) runs.push_back(all_runs_[idx]);
    ++produced_;
    return Protocol::from_indices(universe_, std::move(domains), std::move(runs));
  }
  return std::nullopt;
}

std::vector<Protocol> enumerate_protocols(const VarSet& universe, std::size_t max_domain,
                                          std::size_t max_runs) {
  ProtocolEnumerator e(universe, max_domain, max_runs);
  std::vector<Protocol> out;
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

Protocol random_protocol(const VarSet& universe, std::size_t max_domain, std::size_t max_runs,
                         std::uint64_t seed) {
  if (max_domain == 0 || max_runs == 0) {
    throw ValidationError("random protocol bounds must be at least 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = universe.size();
  std::vector<std::vector<Value>> domains(n);
  std::vector<std::uint32_t> sizes(n);
  for (std::size_t v = 0; v < n; ++v) {
    sizes[v] = static_cast<std::uint32_t>(
        std::uniform_int_distribution<std::size_t>(1, max_domain)(rng));
    for (std::uint32_t k = 0; k < sizes[v]; ++k) domains[v].push_back(std::to_string(k));
  }
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_runs)(rng);
  std::vector<Protocol::IndexedRun> runs(m, Protocol::IndexedRun(n));
  for (auto& r : runs) {
    for (std::size_t v = 0; v < n; ++v) {
      r[v] = std::uniform_int_distribution<std::uint32_t>(0, sizes[v] - 1)(rng);
    }
  }
  return Protocol::from_indices(universe, std::move(domains), std::move(runs));
}

}  // namespace cind
