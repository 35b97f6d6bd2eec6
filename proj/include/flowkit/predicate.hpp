// Restriction-formula DSL for F9_E and the functional formulas of F10_alpha.
// Quantifier-free by design: the restrictions the theory actually writes use
// only equalities, the E/Z predicates, action atoms and subset atoms.

#ifndef FLOWKIT_PREDICATE_HPP
#define FLOWKIT_PREDICATE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flowkit/term.hpp"

namespace flow {

class Universe;

// A term reference inside a formula. "x" refers to the evaluation variable
// itself (so "x != x" selects nothing). "self" names the restriction result;
// free occurrences of it are permitted and evaluate inertly (equal to no
// candidate term), which is exactly what makes them harmless.
struct TermRef {
  enum class Kind { Zero, One, Phi, Var, Self, Bound };
  Kind kind = Kind::Zero;
  std::size_t phi_index = 0;  // Kind::Phi
  TermId bound;               // Kind::Bound, resolved at parse time
  std::string text;           // original spelling, for printing
};

struct PredicateAst {
  enum class Kind {
    True,
    False,
    Eq,          // x = ref
    Neq,         // x != ref
    IsEmergent,  // E(x)
    IsZfSet,     // Z(x)
    ActsOnX,     // acts(ref, x)
    XActsOn,     // acts(x, ref)
    SubsetOf,    // subset(x, ref)
    And,
    Or,
    Not,
  };
  Kind kind = Kind::True;
  TermRef ref;
  std::shared_ptr<const PredicateAst> left;
  std::shared_ptr<const PredicateAst> right;
};

using PredPtr = std::shared_ptr<const PredicateAst>;

// Parses the grammar
//   pred    := or_expr
//   or_expr := and_expr ("or" and_expr)*
//   and_expr:= unary ("and" unary)*
//   unary   := "not" unary | "(" pred ")" | atom
//   atom    := "x" ("=" | "!=") termref | "E(x)" | "Z(x)"
//            | "acts(" termref ", x)" | "acts(x," termref ")"
//            | "subset(x," termref ")" | "true" | "false"
//   termref := IDENT | "zero" | "one" | "phi" NAT | "self"
// Errors carry the byte position and what was expected.
PredPtr parse_predicate(
    std::string_view text,
    const std::unordered_map<std::string, TermId>& bindings);

// Canonical rendering; parse_predicate(print_predicate(p)) == p.
std::string print_predicate(const PredicateAst& p);

bool ast_equal(const PredicateAst& a, const PredicateAst& b);

// Classical evaluation of p at term t. E(x)/Z(x) delegate to the zf layer.
bool eval_predicate(const PredicateAst& p, TermId t, Universe& u);

// The functional formula alpha(x, y) of F10_alpha: either an explicit graph
// or a named transform. Must be single-valued over the inputs it is asked
// about; absent inputs are an AlphaNotFunctional error for explicit graphs.
struct AlphaMap {
  enum class Kind { Entries, Identity, InverseOf, ConstantTo };
  Kind kind = Kind::Identity;
  std::vector<std::pair<TermId, TermId>> entries;
  TermId ref;

  static AlphaMap identity();
  static AlphaMap inverse_of(TermId c);
  static AlphaMap constant_to(TermId k);
  static AlphaMap of_entries(std::vector<std::pair<TermId, TermId>> entries);

  // alpha(x); throws AlphaNotFunctional when undefined or multi-valued.
  TermId apply(const Universe& u, TermId x) const;
};

}  // namespace flow

#endif  // FLOWKIT_PREDICATE_HPP
