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

#include "cind/formula.hpp"

#include <cctype>
#include <optional>

#include "cind/error.hpp"

namespace cind {

AtomicFormula::AtomicFormula(VarSet a, VarSet b, VarSet c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!a_.is_disjoint_with(b_) || !a_.is_disjoint_with(c_) || !b_.is_disjoint_with(c_)) {
    throw ValidationError("atom sets must be pairwise disjoint: {" + a_.join() + "} ||_{" +
                          c_.join() + "} {" + b_.join() + "}");
  }
}

std::strong_ordering operator<=>(const AtomicFormula& x, const AtomicFormula& y) {
  if (auto r = x.c_ <=> y.c_; r != 0) return r;
  if (auto r = x.a_ <=> y.a_; r != 0) return r;
  return x.b_ <=> y.b_;
}

Formula Formula::falsum() { return Formula(Node(False{})); }

Formula Formula::atom(AtomicFormula a) { return Formula(Node(std::move(a))); }

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(Node(Implication{std::make_shared<const Formula>(std::move(lhs)),
                                  std::make_shared<const Formula>(std::move(rhs))}));
}

Formula::Kind Formula::kind() const { return static_cast<Kind>(node_.index()); }

const AtomicFormula& Formula::as_atom() const { return std::get<AtomicFormula>(node_); }
const Formula& Formula::lhs() const { return *std::get<Implication>(node_).lhs; }
const Formula& Formula::rhs() const { return *std::get<Implication>(node_).rhs; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::kFalse:
      return true;
    case Formula::Kind::kAtom:
      return x.as_atom() == y.as_atom();
    case Formula::Kind::kImplies:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
  return false;
}

VarSet free_vars(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kFalse:
      return {};
    case Formula::Kind::kAtom:
      return f.as_atom().vars();
    case Formula::Kind::kImplies:
      return free_vars(f.lhs()) | free_vars(f.rhs());
  }
  return {};
}

namespace {

std::string print_set(const VarSet& s) { return s.empty() ? "{}" : s.join(); }

}  // namespace

std::string print_atom(const AtomicFormula& a) {
  return print_set(a.a()) + " ||_{" + a.c().join() + "} " + print_set(a.b());
}

std::string print_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kFalse:
      return "_|_";
    case Formula::Kind::kAtom:
      return print_atom(f.as_atom());
    case Formula::Kind::kImplies: {
      std::string lhs = print_formula(f.lhs());
      if (f.lhs().kind() == Formula::Kind::kImplies) lhs = "(" + lhs + ")";
      return lhs + " -> " + print_formula(f.rhs());
    }
  }
  return {};
}

namespace {

// Recursive descent over the grammar
//   formula   := disj ( "->" formula )?
//   disj      := conj ( "|" conj )*        (not followed by "|_")
//   conj      := unary ( "&" unary )*
//   unary     := "!" unary | "(" formula ")" | "_|_" | atom
//   atom      := setexpr "||_" "{" varlist? "}" setexpr
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

  AtomicFormula parse_atom_all() {
    AtomicFormula a = atom();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return a;
  }

  VarSet parse_set_all() {
    VarSet s = setexpr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implies(std::move(lhs), formula());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    // "||_" belongs to an atom; a lone "|" is disjunction.
    while (peek("|") && !peek("||")) {
      ++pos_;
      Formula rhs = conjunction();
      lhs = Formula::implies(negate(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept("&")) {
      Formula rhs = unary();
      lhs = negate(Formula::implies(std::move(lhs), negate(std::move(rhs))));
    }
    return lhs;
  }

  Formula unary() {
    if (accept("!")) return negate(unary());
    if (accept("_|_")) return Formula::falsum();
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    return Formula::atom(atom());
  }

  static Formula negate(Formula f) { return Formula::implies(std::move(f), Formula::falsum()); }

  AtomicFormula atom() {
    std::size_t start = (skip_ws(), pos_);
    VarSet a = setexpr();
    expect("||_");
    expect("{");
    VarSet c = peek("}") ? VarSet{} : varlist();
    expect("}");
    VarSet b = setexpr();
    if (!a.is_disjoint_with(b) || !a.is_disjoint_with(c) || !b.is_disjoint_with(c)) {
      throw ValidationError("atom at offset " + std::to_string(start) +
                            " has overlapping variable sets");
    }
    return AtomicFormula(std::move(a), std::move(b), std::move(c));
  }

  VarSet setexpr() {
    if (accept("{")) {
      VarSet s = peek("}") ? VarSet{} : varlist();
      expect("}");
      return s;
    }
    return varlist();
  }

  VarSet varlist() {
    std::vector<SecretVar> names;
    names.push_back(identifier());
    while (accept(",")) names.push_back(identifier());
    std::size_t n = names.size();
    VarSet s(std::move(names));
    if (s.size() != n) fail("duplicate variable in set");
    return s;
  }

  SecretVar identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected variable name");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return SecretVar(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

AtomicFormula parse_atom(std::string_view text) { return Parser(text).parse_atom_all(); }

VarSet parse_varset(std::string_view text) { return Parser(text).parse_set_all(); }

}  // namespace cind
