// Constructive calculus over a Universe: composition, successor, restriction,
// creation, powers, lurk, pairs, unions/intersections, domain/image,
// injectivity. Pure except for interning of results.

#ifndef FLOWKIT_ALGEBRA_HPP
#define FLOWKIT_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "flowkit/predicate.hpp"
#include "flowkit/universe.hpp"

namespace flow {

enum class PairKind { Kuratowskian, NonKuratowskian };

struct PairParts {
  TermId first;
  TermId second;
  PairKind kind;
};

// The unique h = f o g of F5, computed by the three-step resolution
// procedure: candidate h := f, then h := g, then a fresh table.
TermId compose(Universe& u, TermId f, TermId g);

// h(t) = g(f(t)) wherever f acts; defined only between maps whose domains
// and images act on ZF-sets, with Dom_g = Im_f and no mutual action.
TermId z_compose(Universe& u, TermId f, TermId g);

// sigma_f: the map agreeing with f everywhere plus f -> f. Zero and One have
// successor Zero.
TermId successor(Universe& u, TermId f);

// Does Sigma(f, g) hold literally: f(g) = Zero and g(x) = f(x) for x != g,
// checked over the joint support. Test hook for F6.
bool successor_relation_holds(const Universe& u, TermId f, TermId g);

// The phi ladder: phi(0) = Phi0, phi(n + 1) = successor(phi(n)). Memoized.
TermId phi(Universe& u, std::size_t n);

// g subseteq f (proper: also g != f).
bool is_restriction(const Universe& u, TermId g, TermId f,
                    bool proper = false);

// g lurks f: every key and image of g lies inside support(f).
bool lurks(const Universe& u, TermId g, TermId f);

// Identity-style map acting on every lurker of f. Enumerates all maps over
// support(f); caps.full_power_support bounds the support size.
TermId full_power(Universe& u, TermId f);

// Identity-style map acting on every restriction of f (Phi0 included).
TermId restricted_power(Universe& u, TermId f);
TermId restricted_power(Universe& u, TermId f, std::size_t member_cap);

// f|_F of F9_E: keeps exactly the acted terms satisfying F. The guard
// "F(x) implies emergent x" is checked over support(f) plus the result.
TermId restrict_by(Universe& u, TermId f, const PredicateAst& formula);

// g = f|^alpha of F10_alpha: x -> alpha(x) over the actions of f.
TermId create(Universe& u, TermId f, const AlphaMap& alpha);

// Ordered pairs per the alpha/beta encoding; (Zero, Zero) is phi1 and
// (a, Zero) uses Phi0 as beta. (Zero, b) with b != Zero does not exist.
TermId make_pair(Universe& u, TermId a, TermId b);

// Decodes an ordered pair; nullopt when p is not one.
std::optional<PairParts> pair_parts(Universe& u, TermId p);

// Arbitrary union / intersection over a ZF-set carrier f, and the binary
// forms via a two-member carrier.
TermId union_over(Universe& u, TermId f);
TermId intersection_over(Universe& u, TermId f);
TermId union_binary(Universe& u, TermId g, TermId h);
TermId intersection_binary(Universe& u, TermId g, TermId h);

// Identity-style maps over the actions and over the images of an emergent f.
TermId domain(Universe& u, TermId f);
TermId image(Universe& u, TermId f);

// Distinct acted terms receive distinct images.
bool is_injective(const Universe& u, TermId f);

// Identity-style map over the given members (the 1-bar restriction selecting
// exactly them). Shared plumbing for pairs, powers, domains and models.
TermId identity_carrier(Universe& u, const std::vector<TermId>& members);

}  // namespace flow

#endif  // FLOWKIT_ALGEBRA_HPP
