#include "flowkit/hyper.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "flowkit/algebra.hpp"

namespace flow {

namespace {

TermId resolve_member(Universe& u, const std::string& name) {
  if (auto bound = u.lookup(name)) return *bound;
  if (name == "zero") return Universe::zero();
  if (name == "one") return Universe::one();
  if (name.size() > 3 && name.compare(0, 3, "phi") == 0 &&
      name.find_first_not_of("0123456789", 3) == std::string::npos)
    return phi(u, std::stoul(name.substr(3)));
  throw FlowError(Errc::UnknownNode, "'" + name + "' is not a declared node");
}

}  // namespace

void add_cyclic_nodes(Universe& u, const CyclicSpec& spec) {
  if (u.mode() != Universe::Mode::Cyclic)
    throw FlowError(Errc::CycleInWellFoundedMode,
                    "cyclic specs require a Cyclic-mode universe");
  for (const std::string& name : spec.nodes)
    u.bind(name, u.declare_cyclic_node());
  std::unordered_map<std::string, std::vector<Entry>> tables;
  for (const auto& [from, to] : spec.edges) {
    if (std::find(spec.nodes.begin(), spec.nodes.end(), from) ==
        spec.nodes.end())
      throw FlowError(Errc::UnknownNode,
                      "'" + from + "' is not a declared node");
    TermId member = resolve_member(u, to);
    tables[from].push_back(Entry{member, member});
  }
  for (const std::string& name : spec.nodes)
    u.define_cyclic_node(*u.lookup(name), tables[name]);
}

Universe build_cyclic_universe(const CyclicSpec& spec) {
  Universe u(Universe::Mode::Cyclic);
  add_cyclic_nodes(u, spec);
  return u;
}

WellFoundednessResult check_well_foundedness(const Universe& u, TermId f) {
  if (f == Universe::zero() || f == Universe::phi0())
    throw FlowError(Errc::GuardFailed,
                    "the Well-Foundedness axiom exempts Zero and Phi0");
  std::vector<TermId> acted = u.actions(f);
  if (acted.empty())
    throw FlowError(Errc::GuardFailed, "f does not act on any term");
  for (TermId x : acted) {
    bool minimal = true;
    for (TermId t : acted)
      if (u.acts_on(x, t)) {
        minimal = false;
        break;
      }
    if (minimal) return {true, x};
  }
  return {false, acted.front()};  // a cycle participant
}

TermId hyper_successor(Universe& u, TermId f) {
  if (f == Universe::zero() || f == Universe::one()) return Universe::zero();
  const TermNode& n = u.node(f);
  if (!n.cyclic) return successor(u, f);
  auto it = u.sigma_memo.find(f.value);
  if (it != u.sigma_memo.end()) return TermId{it->second};
  std::vector<Entry> table = n.table;
  table.push_back(Entry{f, f});
  TermId s = u.intern_cyclic(std::move(table));
  u.sigma_memo.emplace(f.value, s.value);
  return s;
}

std::vector<TermId> materialize_sigma_closure(Universe& u,
                                              const std::vector<TermId>& base,
                                              std::size_t depth) {
  std::vector<TermId> out;
  for (TermId b : base) {
    out.push_back(b);
    TermId cur = b;
    for (std::size_t i = 0; i < depth; ++i) {
      cur = hyper_successor(u, cur);
      out.push_back(cur);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HyperVerdict check_hyperfunction(Universe& u, TermId psi, std::size_t depth) {
  auto refuted = [&](char clause, TermId witness) {
    return HyperVerdict{false, depth, clause, witness};
  };
  // Clause (i): non-Zero successor, proper restriction of One, non-empty.
  if (u.node(psi).kind != NodeKind::Map || !is_restriction(u, psi, Universe::one(), true) ||
      u.node(psi).table.empty())
    return refuted('1', psi);
  std::vector<TermId> acted = u.actions(psi);
  std::unordered_set<std::uint32_t> acted_set;
  for (TermId t : acted) acted_set.insert(t.value);
  auto psi_acts = [&](TermId t) { return acted_set.count(t.value) > 0; };

  // Clause (ii), exact parts: members are restrictions of One and each has
  // a member inside psi's actions.
  for (TermId x : acted) {
    if (!is_restriction(u, x, Universe::one(), true)) return refuted('2', x);
    bool witness = false;
    for (TermId y : u.actions(x))
      if (psi_acts(y)) {
        witness = true;
        break;
      }
    if (!witness) return refuted('2', x);
  }
  // Clause (ii), sigma closure: follow each chain root for `depth`
  // successor applications; all of them must stay inside psi's actions.
  std::unordered_set<std::uint32_t> is_successor;
  std::unordered_map<std::uint32_t, std::uint32_t> succ_of;
  for (TermId x : acted) {
    TermId s = hyper_successor(u, x);
    succ_of[x.value] = s.value;
    if (psi_acts(s)) is_successor.insert(s.value);
  }
  for (TermId x : acted) {
    if (is_successor.count(x.value)) continue;  // not a chain root
    TermId cur = x;
    for (std::size_t i = 0; i < depth; ++i) {
      cur = TermId{succ_of.count(cur.value) ? succ_of[cur.value]
                                            : hyper_successor(u, cur).value};
      if (!psi_acts(cur)) return refuted('2', x);
    }
  }
  // Clause (iii), exact over the current universe: every nonempty
  // restriction of an acted term is itself acted on.
  for (std::uint32_t id = 0; id < u.size(); ++id) {
    TermId y{id};
    if (y == Universe::zero() || y == Universe::one() ||
        y == Universe::phi0() || psi_acts(y) || y == psi)
      continue;
    for (TermId x : acted)
      if (is_restriction(u, y, x)) return refuted('3', y);
  }
  return HyperVerdict{true, depth, 0, psi};
}

TermId generate_sigma_chain(Universe& u, TermId x0, std::size_t k) {
  if (k > u.caps().sigma_chain)
    throw FlowError(Errc::CapExceeded,
                    "sigma chains capped at " +
                        std::to_string(u.caps().sigma_chain));
  std::vector<TermId> chain{x0};
  TermId cur = x0;
  for (std::size_t i = 0; i < k; ++i) {
    cur = hyper_successor(u, cur);
    chain.push_back(cur);
  }
  return identity_carrier(u, chain);
}

}  // namespace flow
