// Set-theoretic layer: ZF-set / emergent / membership / ordinal predicates,
// equipotence and cardinality of finite terms, translated ZF axiom suites,
// bounded rank universes and the bounded model triple.

#ifndef FLOWKIT_ZF_HPP
#define FLOWKIT_ZF_HPP

#include <optional>
#include <string>
#include <vector>

#include "flowkit/predicate.hpp"
#include "flowkit/report.hpp"
#include "flowkit/universe.hpp"

namespace flow {

// Z(f): identity-style action table whose members are hereditarily ZF-sets.
// Successor existence is structural for maps. In a Cyclic universe running
// the Hyperfunctions axiom, cyclic identity nodes qualify (Hyper-ZF-Sets);
// under Well-Foundedness they do not.
bool is_zf_set(const Universe& u, TermId f);

// E(f): non-Zero successor and hereditarily uncomprehensive keys and images.
bool is_emergent(const Universe& u, TermId f);

// x in f: f is a proper restriction of One, Z(x), and f acts on x.
bool membership(const Universe& u, TermId x, TermId f);

// The ordinal predicate: Z(t), transitivity of actions, and a minimal
// element among the acted terms (vacuous for Phi0).
bool is_ordinal(const Universe& u, TermId t);

// The involution term tau witnessing g == h (equipotence). Shared members
// become fixed points, the remainders are matched in sorted order.
// nullopt when the member counts differ.
std::optional<TermId> connector(Universe& u, TermId g, TermId h);

// Builds a disjoint copy h of f and the connector tau of f/h, then reports
// whether tau fails to be equipotent to f. Phi0 is finite by convention.
bool is_finite(Universe& u, TermId f);

// |f| = phi_n for a finite ZF-set with n members.
TermId cardinality(Universe& u, TermId f);

// Follows the proof of "equipotent ZF-sets have equipotent successors":
// extends a connector of f/g with f <-> g and verifies it connects
// sigma_f / sigma_g. Throws NotEquipotent when f and g have no connector.
bool equipotent_successors_check(Universe& u, TermId f, TermId g);

// Verifies the four connector clauses for tau against g/h.
bool connector_clauses_hold(const Universe& u, TermId tau, TermId g, TermId h);

// All ZF-sets of rank <= k, generated by iterating the restricted power
// from Phi0. k is capped by caps().rank.
std::vector<TermId> generate_rank_universe(Universe& u, std::size_t k);

// Closure checks from the Grothendieck-universe theorem over a generated
// rank family: pairs and restricted powers of rank <= k-1 inputs, unions of
// every member. Appends one line per clause.
void check_rank_closure(Universe& u, std::size_t k, CheckReport& report);

enum class ZfAxiomId { ZF1, ZF2, ZF3, ZF4, ZF5, ZF6, ZF7, ZF8 };

const char* zf_axiom_name(ZfAxiomId id);

struct ZfCheckParams {
  const PredicateAst* separation_formula = nullptr;  // ZF5
  const AlphaMap* replacement_alpha = nullptr;       // ZF6
  std::size_t infinity_bound = 8;                    // ZF8
};

// Evaluates the translated axiom over the sample ZF-sets, appending
// "PASS|FAIL axiom=<id> witness=<names>" lines. ZF8 is checked up to the
// configured bound and reports a bounded pass.
void check_zf_axiom(Universe& u, ZfAxiomId id,
                    const std::vector<TermId>& samples,
                    const ZfCheckParams& params, CheckReport& report);

struct ModelTriple {
  TermId pairs;       // p: all ordered pairs over the carrier
  TermId membership;  // []: pairs (a, b) with b[a]
  TermId equality;    // =o: the diagonal pairs
};

// The bounded model triple <u, [], =o> over a finite family of ZF-sets.
ModelTriple build_model(Universe& u, const std::vector<TermId>& carrier);

}  // namespace flow

#endif  // FLOWKIT_ZF_HPP
