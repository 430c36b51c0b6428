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

#ifndef CIND_DIAGRAM_HPP_
#define CIND_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cind/formula.hpp"
#include "cind/varset.hpp"

namespace cind {

// Dense vertex index in creation order. 0 is v+, 1 is v-.
using VertexId = std::uint32_t;
inline constexpr VertexId kPlus = 0;
inline constexpr VertexId kMinus = 1;

struct LabeledEdge {
  VertexId from;
  VertexId to;
  VarSet labels;
  // Recorded for display only; connectivity ignores direction.
  bool directed;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct ExtensionStep {
  VertexId u;
  VertexId v;
  AtomicFormula formula;
  VertexId new_vertex;

  friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

// A diagram in Diag(Q): the basic two-vertex graph with an undirected Q edge,
// grown by extension steps. Each step consumes an atom A ||_C B at a pair
// u ~_C v and adds a vertex joined to u by A,C and to v by B,C. Diagrams are
// values; extend() returns a new one.
class Diagram {
 public:
  static Diagram basic(VarSet q);

  // Throws ValidationError when u or v is unknown or u ~_C v fails.
  Diagram extend(VertexId u, VertexId v, const AtomicFormula& f) const;
  Diagram extend(VertexId u, VertexId v, VarSet a, VarSet b, VarSet c) const;

  // Replays the steps on basic(q). Throws if any step is illegal or numbers
  // its new vertex inconsistently.
  static Diagram from_steps(VarSet q, std::span<const ExtensionStep> steps);

  const VarSet& base_labels() const { return base_labels_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const std::vector<ExtensionStep>& steps() const { return steps_; }
  // The set [Δ] of consumed atoms.
  const std::set<AtomicFormula>& formulas() const { return formulas_; }
  // Every label that occurs on some edge.
  const std::vector<SecretVar>& labels() const { return labels_; }

  bool connected(VertexId u, VertexId v, std::string_view x) const;
  bool connected_set(VertexId u, VertexId v, const VarSet& s) const;

  // Representative of v's ~_x class (smallest vertex index in the class).
  VertexId component(VertexId v, std::string_view x) const;

  // Labels x with u ~_x v, intersected with `among`.
  VarSet connecting_labels(VertexId u, VertexId v, const VarSet& among) const;

  // Same, as a mask over `index`. Labels of `index` absent from every edge
  // connect only u with itself.
  std::uint64_t connecting_mask(VertexId u, VertexId v, const VarIndex& index) const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.base_labels_ == y.base_labels_ && x.steps_ == y.steps_;
  }

 private:
  Diagram() = default;
  void check_vertex(VertexId v) const;
  void add_edge(VertexId from, VertexId to, const VarSet& labels, bool directed);
  std::ptrdiff_t label_slot(std::string_view x) const;

  VarSet base_labels_;
  std::size_t vertex_count_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<ExtensionStep> steps_;
  std::set<AtomicFormula> formulas_;
  // labels_[k] owns component_[k]: the class representative of each vertex.
  std::vector<SecretVar> labels_;
  std::vector<std::vector<VertexId>> component_;
};

// GraphViz text; deterministic for equal diagrams.
std::string to_dot(const Diagram& d);

struct ExtensionCaps {
  std::size_t max_vertices = 8;
  // u == v extensions are legal but never help a proof.
  bool allow_self_pairs = false;
};

// Every one-step extension consuming an atom of `kb`, over ordered vertex
// pairs (u, v) with u ~_C v. Order: by kb position, then u, then v.
std::vector<Diagram> enumerate_extensions(const Diagram& d, std::span<const AtomicFormula> kb,
                                          const ExtensionCaps& caps);

}  // namespace cind

#endif  // CIND_DIAGRAM_HPP_
