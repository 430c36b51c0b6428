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

#include "cind/varset.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "cind/error.hpp"

namespace cind {

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

namespace {

std::vector<SecretVar> normalize(std::vector<SecretVar> names) {
  for (const auto& n : names) {
    if (!is_valid_var_name(n)) {
      throw ValidationError("invalid secret variable name '" + n + "'");
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

VarSet::VarSet(std::initializer_list<std::string_view> names)
    : VarSet(std::vector<SecretVar>(names.begin(), names.end())) {}

VarSet::VarSet(std::vector<SecretVar> names) : names_(normalize(std::move(names))) {}

bool VarSet::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(),
                       names_.end());
}

bool VarSet::is_disjoint_with(const VarSet& other) const {
  auto i = names_.begin();
  auto j = other.names_.begin();
  while (i != names_.end() && j != other.names_.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

void VarSet::insert(const SecretVar& name) {
  if (!is_valid_var_name(name)) {
    throw ValidationError("invalid secret variable name '" + name + "'");
  }
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) names_.insert(it, name);
}

std::string VarSet::join(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += sep;
    out += names_[i];
  }
  return out;
}

VarSet operator|(const VarSet& x, const VarSet& y) {
  VarSet r;
  std::set_union(x.names_.begin(), x.names_.end(), y.names_.begin(), y.names_.end(),
                 std::back_inserter(r.names_));
  return r;
}

VarSet operator&(const VarSet& x, const VarSet& y) {
  VarSet r;
  std::set_intersection(x.names_.begin(), x.names_.end(), y.names_.begin(),
                        y.names_.end(), std::back_inserter(r.names_));
  return r;
}

VarSet operator-(const VarSet& x, const VarSet& y) {
  VarSet r;
  std::set_difference(x.names_.begin(), x.names_.end(), y.names_.begin(),
                      y.names_.end(), std::back_inserter(r.names_));
  return r;
}

std::strong_ordering operator<=>(const VarSet& x, const VarSet& y) {
  // Shorter sets first, then lexicographic: keeps small atoms early in
  // canonical enumeration orders.
  if (auto c = x.names_.size() <=> y.names_.size(); c != 0) return c;
  return x.names_ <=> y.names_;
}

VarIndex::VarIndex(VarSet universe) : universe_(std::move(universe)) {
  if (universe_.size() > kMaxVars) {
    throw ValidationError("universe exceeds " + std::to_string(kMaxVars) + " variables");
  }
}

std::uint64_t VarIndex::bit(std::string_view name) const {
  const auto& n = universe_.names();
  auto it = std::lower_bound(n.begin(), n.end(), name);
  if (it == n.end() || *it != name) {
    throw ValidationError("variable '" + std::string(name) + "' is not in the universe");
  }
  return std::uint64_t{1} << static_cast<unsigned>(it - n.begin());
}

std::uint64_t VarIndex::mask(const VarSet& s) const {
  std::uint64_t m = 0;
  for (const auto& v : s) m |= bit(v);
  return m;
}

VarSet VarIndex::set(std::uint64_t mask) const {
  std::vector<SecretVar> out;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (mask >> i & 1U) out.push_back(universe_.names()[i]);
  }
  return VarSet(std::move(out));
}

std::uint64_t VarIndex::full_mask() const {
  return universe_.size() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << universe_.size()) - 1;
}

}  // namespace cind
