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

#ifndef CIND_VARSET_HPP_
#define CIND_VARSET_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cind {

// A secret variable is identified by its name: a letter followed by letters,
// digits or underscores. Comparison is case-sensitive.
using SecretVar = std::string;

bool is_valid_var_name(std::string_view name);

// Finite set of secret variables, kept sorted by name. Iteration order is the
// canonical order used everywhere for printing and tie-breaking.
class VarSet {
 public:
  using const_iterator = std::vector<SecretVar>::const_iterator;

  VarSet() = default;
  VarSet(std::initializer_list<std::string_view> names);
  explicit VarSet(std::vector<SecretVar> names);

  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }
  const_iterator begin() const { return names_.begin(); }
  const_iterator end() const { return names_.end(); }
  const std::vector<SecretVar>& names() const { return names_; }

  bool contains(std::string_view name) const;
  bool is_subset_of(const VarSet& other) const;
  bool is_disjoint_with(const VarSet& other) const;

  void insert(const SecretVar& name);

  // "a,b,c"; empty string for the empty set.
  std::string join(std::string_view sep = ",") const;

  friend VarSet operator|(const VarSet& x, const VarSet& y);
  friend VarSet operator&(const VarSet& x, const VarSet& y);
  friend VarSet operator-(const VarSet& x, const VarSet& y);

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend std::strong_ordering operator<=>(const VarSet& x, const VarSet& y);

 private:
  std::vector<SecretVar> names_;
};

// Bit positions for a fixed universe of at most 64 variables. The search code
// works on masks; VarSet is the public value type.
class VarIndex {
 public:
  static constexpr std::size_t kMaxVars = 64;

  explicit VarIndex(VarSet universe);

  const VarSet& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  // Throws ValidationError for names outside the universe.
  std::uint64_t mask(const VarSet& s) const;
  std::uint64_t bit(std::string_view name) const;
  VarSet set(std::uint64_t mask) const;
  std::uint64_t full_mask() const;

 private:
  VarSet universe_;
};

}  // namespace cind

#endif  // CIND_VARSET_HPP_
