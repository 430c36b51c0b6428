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

#ifndef CIND_FORMULA_HPP_
#define CIND_FORMULA_HPP_

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "cind/varset.hpp"

namespace cind {

// Conditional independence atom `a ||_{c} b`: any two runs agreeing on c can
// be merged into a run that agrees with the first on a,c and with the second
// on b,c. The three sets are pairwise disjoint; construction enforces it.
class AtomicFormula {
 public:
  AtomicFormula(VarSet a, VarSet b, VarSet c);

  const VarSet& a() const { return a_; }
  const VarSet& b() const { return b_; }
  const VarSet& c() const { return c_; }

  VarSet vars() const { return a_ | b_ | c_; }
  AtomicFormula swapped() const { return AtomicFormula(b_, a_, c_); }

  friend bool operator==(const AtomicFormula&, const AtomicFormula&) = default;
  // Canonical atom order: by condition set, then left, then right.
  friend std::strong_ordering operator<=>(const AtomicFormula& x, const AtomicFormula& y);

 private:
  VarSet a_;
  VarSet b_;
  VarSet c_;
};

// Formulas built from false, atoms, and implication. Negation, conjunction and
// disjunction exist only in the concrete syntax.
class Formula {
 public:
  enum class Kind { kFalse, kAtom, kImplies };

  static Formula falsum();
  static Formula atom(AtomicFormula a);
  static Formula implies(Formula lhs, Formula rhs);

  Kind kind() const;
  const AtomicFormula& as_atom() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& x, const Formula& y);

 private:
  struct False {
    friend bool operator==(False, False) { return true; }
  };
  struct Implication {
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  using Node = std::variant<False, AtomicFormula, Implication>;

  explicit Formula(Node node) : node_(std::move(node)) {}

  Node node_;
};

VarSet free_vars(const Formula& f);

// Canonical text: `a,b ||_{c} d`, `{}` for empty sets, `_|_`, right-nested
// `->` with parenthesized implication on the left.
std::string print_atom(const AtomicFormula& a);
std::string print_formula(const Formula& f);

// Throws ParseError (syntax, with offset) or ValidationError (overlapping
// atom sets).
Formula parse_formula(std::string_view text);
AtomicFormula parse_atom(std::string_view text);
// Accepts `{a,b}`, `{}` or a bare `a,b` list.
VarSet parse_varset(std::string_view text);

}  // namespace cind

#endif  // CIND_FORMULA_HPP_
