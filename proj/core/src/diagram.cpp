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

#include "cind/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "cind/error.hpp"

namespace cind {

Diagram Diagram::basic(VarSet q) {
  Diagram d;
  d.base_labels_ = std::move(q);
  d.vertex_count_ = 2;
  d.add_edge(kPlus, kMinus, d.base_labels_, false);
  return d;
}

void Diagram::check_vertex(VertexId v) const {
  if (v >= vertex_count_) {
    throw ValidationError("vertex " + std::to_string(v) + " does not exist (diagram has " +
                          std::to_string(vertex_count_) + " vertices)");
  }
}

std::ptrdiff_t Diagram::label_slot(std::string_view x) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
  if (it == labels_.end() || *it != x) return -1;
  return it - labels_.begin();
}

void Diagram::add_edge(VertexId from, VertexId to, const VarSet& labels, bool directed) {
  edges_.push_back({from, to, labels, directed});
  for (const auto& x : labels) {
    auto slot = label_slot(x);
    if (slot < 0) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
      slot = it - labels_.begin();
      labels_.insert(it, x);
      std::vector<VertexId> fresh(vertex_count_);
      for (VertexId i = 0; i < vertex_count_; ++i) fresh[i] = i;
      component_.insert(component_.begin() + slot, std::move(fresh));
    }
    auto& comp = component_[static_cast<std::size_t>(slot)];
    const VertexId a = comp[from];
    const VertexId b = comp[to];
    if (a == b) continue;
    const VertexId keep = std::min(a, b);
    const VertexId drop = std::max(a, b);
    for (auto& c : comp) {
      if (c == drop) c = keep;
    }
  }
}

Diagram Diagram::extend(VertexId u, VertexId v, const AtomicFormula& f) const {
  check_vertex(u);
  check_vertex(v);
  if (!connected_set(u, v, f.c())) {
    throw ValidationError("cannot extend: vertices " + std::to_string(u) + " and " +
                          std::to_string(v) + " are not connected by {" + f.c().join() + "}");
  }
  Diagram d = *this;
  const auto w = static_cast<VertexId>(d.vertex_count_++);
  for (std::size_t k = 0; k < d.labels_.size(); ++k) d.component_[k].push_back(w);
  d.add_edge(u, w, f.a() | f.c(), true);
  d.add_edge(v, w, f.b() | f.c(), true);
  d.steps_.push_back({u, v, f, w});
  d.formulas_.insert(f);
  return d;
}

Diagram Diagram::extend(VertexId u, VertexId v, VarSet a, VarSet b, VarSet c) const {
  return extend(u, v, AtomicFormula(std::move(a), std::move(b), std::move(c)));
}

Diagram Diagram::from_steps(VarSet q, std::span<const ExtensionStep> steps) {
  Diagram d = basic(std::move(q));
  for (const auto& s : steps) {
    if (s.new_vertex != d.vertex_count_) {
      throw ValidationError("extension step numbers its new vertex " +
                            std::to_string(s.new_vertex) + ", expected " +
                            std::to_string(d.vertex_count_));
    }
    d = d.extend(s.u, s.v, s.formula);
  }
  return d;
}

bool Diagram::connected(VertexId u, VertexId v, std::string_view x) const {
  return component(u, x) == component(v, x);
}

VertexId Diagram::component(VertexId v, std::string_view x) const {
  check_vertex(v);
  auto slot = label_slot(x);
  if (slot < 0) return v;
  return component_[static_cast<std::size_t>(slot)][v];
}

bool Diagram::connected_set(VertexId u, VertexId v, const VarSet& s) const {
  check_vertex(u);
  check_vertex(v);
  for (const auto& x : s) {
    if (!connected(u, v, x)) return false;
  }
  return true;
}

VarSet Diagram::connecting_labels(VertexId u, VertexId v, const VarSet& among) const {
  std::vector<SecretVar> out;
  for (const auto& x : among) {
    if (connected(u, v, x)) out.push_back(x);
  }
  return VarSet(std::move(out));
}

std::uint64_t Diagram::connecting_mask(VertexId u, VertexId v, const VarIndex& index) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return index.full_mask();
  std::uint64_t m = 0;
  const auto& names = index.universe().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto slot = label_slot(names[i]);
    if (slot >= 0 && component_[static_cast<std::size_t>(slot)][u] ==
                         component_[static_cast<std::size_t>(slot)][v]) {
      m |= std::uint64_t{1} << i;
    }
  }
  return m;
}

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"";
    if (v == kPlus) {
      os << "v+\", shape=doublecircle";
    } else if (v == kMinus) {
      os << "v-\", shape=doublecircle";
    } else {
      os << "v" << v - 1 << "\"";
    }
    os << "];\n";
  }
  for (const auto& e : d.edges()) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.labels.join() << "\"";
    if (!e.directed) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<Diagram> enumerate_extensions(const Diagram& d, std::span<const AtomicFormula> kb,
                                          const ExtensionCaps& caps) {
  std::vector<Diagram> out;
  if (d.vertex_count() >= caps.max_vertices) return out;
  const auto n = static_cast<VertexId>(d.vertex_count());
  std::set<AtomicFormula> seen;
  for (const auto& f : kb) {
    if (!seen.insert(f).second) continue;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u == v && !caps.allow_self_pairs) continue;
        if (d.connected_set(u, v, f.c())) out.push_back(d.extend(u, v, f));
      }
    }
  }
  return out;
}

}  // namespace cind
