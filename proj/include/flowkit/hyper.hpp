// Non-well-founded fragment: cyclic universes, the Well-Foundedness axiom
// checker, bounded hyperfunction verification, and sigma-chain generation.

#ifndef FLOWKIT_HYPER_HPP
#define FLOWKIT_HYPER_HPP

#include <optional>
#include <string>
#include <vector>

#include "flowkit/universe.hpp"

namespace flow {

// Declarative cycle description: named nodes acting identity-style on their
// members. Members may be declared nodes or pre-existing bound terms.
struct CyclicSpec {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Builds a Cyclic-mode universe whose named nodes have identity-style tables
// over their declared members.
Universe build_cyclic_universe(const CyclicSpec& spec);

// Adds the spec's nodes to an existing Cyclic-mode universe.
void add_cyclic_nodes(Universe& u, const CyclicSpec& spec);

struct WellFoundednessResult {
  bool holds = false;
  TermId witness;  // a minimal element when holds
};

// The Well-Foundedness axiom instance for f: some acted term whose members
// avoid the acted set. GuardFailed for Zero and Phi0 (the axiom's guard).
WellFoundednessResult check_well_foundedness(const Universe& u, TermId f);

struct HyperVerdict {
  bool confirmed = false;
  std::size_t depth = 0;  // confirmed up to this many successor applications
  char clause = 0;        // '1'/'2'/'3' when refuted
  TermId witness;         // offending term when refuted
};

// Bounded hyperfunction check. Clauses (i) and (iii) are exact over the
// current universe; clause (ii)'s sigma closure is generated lazily and
// followed up to `depth` successor applications from each chain root. The
// verdict never claims full hyperfunction-hood.
HyperVerdict check_hyperfunction(Universe& u, TermId psi, std::size_t depth);

// Successor usable on cyclic nodes: table plus f -> f as a fresh cyclic
// node, memoized so the lazy closure equals the materialized one.
TermId hyper_successor(Universe& u, TermId f);

// The members plus all their sigma-chains to the given depth.
std::vector<TermId> materialize_sigma_closure(Universe& u,
                                              const std::vector<TermId>& base,
                                              std::size_t depth);

// Identity-style map on {x0, sigma x0, ..., sigma^k x0}; successor acts as
// the (well-)order relation along the chain.
TermId generate_sigma_chain(Universe& u, TermId x0, std::size_t k);

}  // namespace flow

#endif  // FLOWKIT_HYPER_HPP
