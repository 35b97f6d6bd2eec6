#include "flowkit/zf.hpp"

#include <algorithm>
#include <unordered_map>

#include "flowkit/algebra.hpp"

namespace flow {

namespace {

enum class Visit : std::uint8_t { InProgress, Yes, No };

// Hereditary descent shared by Z and E. A cycle hit resolves by the active
// axiom: under Hyperfunctions (with Hyper-ZF-Sets) cyclic nodes qualify,
// under Well-Foundedness they do not.
bool hereditary(const Universe& u, TermId f,
                std::unordered_map<std::uint32_t, Visit>& state,
                bool (*local)(const Universe&, const TermNode&),
                bool descend_images) {
  auto it = state.find(f.value);
  if (it != state.end()) {
    if (it->second == Visit::InProgress)
      return u.axiom_mode() == Universe::AxiomMode::Hyperfunctions;
    return it->second == Visit::Yes;
  }
  const TermNode& n = u.node(f);
  if (n.kind != NodeKind::Map) {
    state[f.value] = Visit::No;  // Zero and One have successor Zero
    return false;
  }
  if (!local(u, n)) {
    state[f.value] = Visit::No;
    return false;
  }
  state[f.value] = Visit::InProgress;
  bool ok = true;
  for (Entry e : n.table) {
    if (e.key != f && !hereditary(u, e.key, state, local, descend_images)) {
      ok = false;
      break;
    }
    if (descend_images && e.image != f &&
        !hereditary(u, e.image, state, local, descend_images)) {
      ok = false;
      break;
    }
  }
  state[f.value] = ok ? Visit::Yes : Visit::No;
  return ok;
}

bool identity_style(const Universe&, const TermNode& n) {
  for (Entry e : n.table)
    if (e.image != e.key) return false;
  return true;
}

bool any_map(const Universe&, const TermNode&) { return true; }

std::vector<TermId> sorted_actions(const Universe& u, TermId f) {
  std::vector<TermId> a = u.actions(f);
  std::sort(a.begin(), a.end());
  return a;
}

std::string witness_names(const Universe& u, std::initializer_list<TermId> ts) {
  std::string out;
  for (TermId t : ts) {
    if (!out.empty()) out += ",";
    std::string n = u.name_of(t);
    out += n.empty() ? u.display(t) : n;
  }
  return out;
}

}  // namespace

bool is_zf_set(const Universe& u, TermId f) {
  std::unordered_map<std::uint32_t, Visit> state;
  return hereditary(u, f, state, identity_style, /*descend_images=*/false);
}

bool is_emergent(const Universe& u, TermId f) {
  std::unordered_map<std::uint32_t, Visit> state;
  return hereditary(u, f, state, any_map, /*descend_images=*/true);
}

bool membership(const Universe& u, TermId x, TermId f) {
  return is_restriction(u, f, Universe::one(), /*proper=*/true) &&
         is_zf_set(u, x) && u.acts_on(f, x);
}

bool is_ordinal(const Universe& u, TermId t) {
  if (!is_zf_set(u, t)) return false;
  std::vector<TermId> members = u.actions(t);
  // Transitivity must hold hereditarily: the well-ordering theorem for
  // ordinals needs comparability, and a transitive set with a merely
  // transitive-free member (such as {phi0, phi1, gamma}) breaks it.
  for (TermId x : members)
    if (!is_restriction(u, x, t) || !is_ordinal(u, x)) return false;
  if (members.empty()) return true;
  for (TermId y : members) {
    bool minimal = true;
    for (TermId s : members)
      if (u.acts_on(y, s)) {
        minimal = false;
        break;
      }
    if (minimal) return true;
  }
  return false;
}

std::optional<TermId> connector(Universe& u, TermId g, TermId h) {
  std::vector<TermId> ag = sorted_actions(u, g);
  std::vector<TermId> ah = sorted_actions(u, h);
  std::vector<TermId> shared;
  std::set_intersection(ag.begin(), ag.end(), ah.begin(), ah.end(),
                        std::back_inserter(shared));
  std::vector<TermId> only_g;
  std::set_difference(ag.begin(), ag.end(), ah.begin(), ah.end(),
                      std::back_inserter(only_g));
  std::vector<TermId> only_h;
  std::set_difference(ah.begin(), ah.end(), ag.begin(), ag.end(),
                      std::back_inserter(only_h));
  if (only_g.size() != only_h.size()) return std::nullopt;
  std::vector<Entry> table;
  for (TermId t : shared) table.push_back(Entry{t, t});
  for (std::size_t i = 0; i < only_g.size(); ++i) {
    table.push_back(Entry{only_g[i], only_h[i]});
    table.push_back(Entry{only_h[i], only_g[i]});
  }
  if (table.empty()) return Universe::zero();  // connector of Phi0/Phi0
  return u.intern(std::move(table));
}

bool connector_clauses_hold(const Universe& u, TermId tau, TermId g,
                            TermId h) {
  std::vector<TermId> at =
      (u.node(tau).kind == NodeKind::Map) ? u.actions(tau)
                                          : std::vector<TermId>{};
  for (TermId t : at) {
    if (u.eval(tau, u.eval(tau, t)) != t) return false;        // involution
    if (!u.acts_on(g, t) && !u.acts_on(h, t)) return false;    // clause (iv)
  }
  for (TermId t : u.actions(g))
    if (!u.acts_on(tau, t) || !u.acts_on(h, u.eval(tau, t))) return false;
  for (TermId t : u.actions(h))
    if (!u.acts_on(tau, t) || !u.acts_on(g, u.eval(tau, t))) return false;
  return true;
}

bool is_finite(Universe& u, TermId f) {
  std::vector<TermId> members = u.actions(f);
  if (members.empty()) return true;  // Phi0 convention, see module notes
  // Disjoint copy: a successor chain rooted at f can share no member with f.
  std::vector<TermId> copy;
  TermId cur = f;
  for (std::size_t i = 0; i < members.size(); ++i) {
    cur = successor(u, cur);
    copy.push_back(cur);
  }
  TermId h = identity_carrier(u, copy);
  std::optional<TermId> tau = connector(u, f, h);
  if (!tau) return false;
  return !connector(u, *tau, f).has_value();  // tau not equipotent to f
}

TermId cardinality(Universe& u, TermId f) {
  if (!is_zf_set(u, f)) throw FlowError(Errc::NotAZfSet, u.display(f));
  return phi(u, u.actions(f).size());
}

bool equipotent_successors_check(Universe& u, TermId f, TermId g) {
  if (!is_zf_set(u, f) || !is_zf_set(u, g))
    throw FlowError(Errc::NotAZfSet, witness_names(u, {f, g}));
  std::optional<TermId> tau = connector(u, f, g);
  if (!tau)
    throw FlowError(Errc::NotEquipotent, witness_names(u, {f, g}));
  // alpha'(x, y): alpha(x, y) away from f and g, plus f <-> g.
  std::vector<Entry> table;
  if (u.node(*tau).kind == NodeKind::Map)
    for (Entry e : u.node(*tau).table)
      if (e.key != f && e.key != g) table.push_back(e);
  table.push_back(Entry{f, g});
  table.push_back(Entry{g, f});
  TermId tau2 = u.intern(std::move(table));
  return connector_clauses_hold(u, tau2, successor(u, f), successor(u, g));
}

std::vector<TermId> generate_rank_universe(Universe& u, std::size_t k) {
  if (k > u.caps().rank)
    throw FlowError(Errc::CapExceeded,
                    "rank universes capped at " +
                        std::to_string(u.caps().rank));
  TermId carrier = phi(u, 1);  // the family of rank-0 sets: {Phi0}
  for (std::size_t i = 1; i <= k; ++i)
    carrier = restricted_power(u, carrier, /*member_cap=*/16);
  return sorted_actions(u, carrier);
}

void check_rank_closure(Universe& u, std::size_t k, CheckReport& report) {
  std::vector<TermId> family = generate_rank_universe(u, k);
  std::vector<TermId> inner =
      (k == 0) ? std::vector<TermId>{} : generate_rank_universe(u, k - 1);
  auto in_family = [&](TermId t) {
    return std::binary_search(family.begin(), family.end(), t);
  };

  bool pairs_ok = true;
  std::string pair_witness;
  for (TermId x : inner) {
    for (TermId y : inner) {
      TermId pr = identity_carrier(u, {x, y});
      if (!in_family(pr)) {
        pairs_ok = false;
        pair_witness = witness_names(u, {x, y});
        break;
      }
    }
    if (!pairs_ok) break;
  }
  report.add(pairs_ok, "closure=pair rank=" + std::to_string(k),
             pair_witness);

  bool powers_ok = true;
  std::string power_witness;
  for (TermId x : inner)
    if (!in_family(restricted_power(u, x, 16))) {
      powers_ok = false;
      power_witness = witness_names(u, {x});
      break;
    }
  report.add(powers_ok, "closure=power rank=" + std::to_string(k),
             power_witness);

  bool unions_ok = true;
  std::string union_witness;
  for (TermId x : family)
    if (!in_family(union_over(u, x))) {
      unions_ok = false;
      union_witness = witness_names(u, {x});
      break;
    }
  report.add(unions_ok, "closure=union rank=" + std::to_string(k),
             union_witness);
}

const char* zf_axiom_name(ZfAxiomId id) {
  switch (id) {
    case ZfAxiomId::ZF1: return "ZF1";
    case ZfAxiomId::ZF2: return "ZF2";
    case ZfAxiomId::ZF3: return "ZF3";
    case ZfAxiomId::ZF4: return "ZF4";
    case ZfAxiomId::ZF5: return "ZF5";
    case ZfAxiomId::ZF6: return "ZF6";
    case ZfAxiomId::ZF7: return "ZF7";
    case ZfAxiomId::ZF8: return "ZF8";
  }
  return "ZF?";
}

namespace {

void check_zf1(Universe& u, const std::vector<TermId>& samples,
               CheckReport& report) {
  // Extensionality: ZF-sets with the same members are the same term.
  for (TermId x : samples) {
    for (TermId y : samples) {
      if (sorted_actions(u, x) == sorted_actions(u, y) && x != y) {
        report.add(false, "axiom=ZF1", witness_names(u, {x, y}));
        return;
      }
    }
  }
  report.add(true, "axiom=ZF1");
}

void check_zf2(Universe& u, const std::vector<TermId>& samples,
               CheckReport& report) {
  // Empty set: Phi0 is the unique memberless ZF-set among the samples.
  for (TermId x : samples) {
    if (u.actions(x).empty() && x != Universe::phi0()) {
      report.add(false, "axiom=ZF2", witness_names(u, {x}));
      return;
    }
    bool empty = true;
    for (TermId t : u.actions(x))
      if (membership(u, t, x)) empty = false;
    if (empty && !u.actions(x).empty()) {
      report.add(false, "axiom=ZF2", witness_names(u, {x}));
      return;
    }
  }
  report.add(true, "axiom=ZF2", "phi0");
}

void check_zf3(Universe& u, const std::vector<TermId>& samples,
               CheckReport& report) {
  for (TermId x : samples) {
    for (TermId y : samples) {
      TermId z = identity_carrier(u, {x, y});
      bool ok = is_zf_set(u, z);
      for (TermId t : u.actions(z))
        ok = ok && (t == x || t == y);
      ok = ok && u.acts_on(z, x) && u.acts_on(z, y);
      if (!ok) {
        report.add(false, "axiom=ZF3", witness_names(u, {x, y}));
        return;
      }
    }
  }
  report.add(true, "axiom=ZF3");
}

void check_zf4(Universe& u, const std::vector<TermId>& samples,
               CheckReport& report) {
  for (TermId x : samples) {
    if (u.actions(x).size() > 10) continue;
    TermId z = restricted_power(u, x, 16);
    bool ok = is_zf_set(u, z);
    std::size_t n = u.actions(x).size();
    ok = ok && u.actions(z).size() == (std::size_t{1} << n);
    for (TermId t : u.actions(z))
      ok = ok && is_restriction(u, t, x);
    if (!ok) {
      report.add(false, "axiom=ZF4", witness_names(u, {x}));
      return;
    }
  }
  report.add(true, "axiom=ZF4");
}

void check_zf5(Universe& u, const std::vector<TermId>& samples,
               const PredicateAst& formula, CheckReport& report) {
  for (TermId z : samples) {
    TermId y = restrict_by(u, z, formula);
    bool ok = is_zf_set(u, y);
    for (TermId t : u.actions(z))
      ok = ok &&
           (u.acts_on(y, t) == (u.acts_on(z, t) && eval_predicate(formula, t, u)));
    for (TermId t : u.actions(y))
      ok = ok && u.acts_on(z, t);
    if (!ok) {
      report.add(false, "axiom=ZF5", witness_names(u, {z}));
      return;
    }
  }
  report.add(true, "axiom=ZF5");
}

void check_zf6(Universe& u, const std::vector<TermId>& samples,
               const AlphaMap& alpha, CheckReport& report) {
  for (TermId z : samples) {
    // Guard of translated ZF6: alpha maps ZF-sets to ZF-sets over z.
    bool guard = true;
    for (TermId s : u.actions(z)) {
      TermId y = alpha.apply(u, s);
      if (y != Universe::zero() && !is_zf_set(u, y)) guard = false;
    }
    if (!guard) continue;  // antecedent unmet; instance vacuous
    TermId g = create(u, z, alpha);
    TermId w = image(u, g);
    bool ok = is_zf_set(u, w);
    for (TermId s : u.actions(z)) {
      TermId y = alpha.apply(u, s);
      if (y != Universe::zero()) ok = ok && u.acts_on(w, y);
    }
    for (TermId t : u.actions(w)) {
      bool reached = false;
      for (TermId s : u.actions(z))
        if (alpha.apply(u, s) == t) reached = true;
      ok = ok && reached;
    }
    if (!ok) {
      report.add(false, "axiom=ZF6", witness_names(u, {z}));
      return;
    }
  }
  report.add(true, "axiom=ZF6");
}

void check_zf7(Universe& u, const std::vector<TermId>& samples,
               CheckReport& report) {
  for (TermId x : samples) {
    TermId un = union_over(u, x);
    bool ok = is_zf_set(u, un);
    for (TermId z : u.actions(un)) {
      bool via = false;
      for (TermId t : u.actions(x))
        if (u.acts_on(t, z)) via = true;
      ok = ok && via;
    }
    for (TermId t : u.actions(x))
      for (TermId z : u.actions(t))
        ok = ok && u.acts_on(un, z);
    if (!ok) {
      report.add(false, "axiom=ZF7", witness_names(u, {x}));
      return;
    }
  }
  report.add(true, "axiom=ZF7");
}

void check_zf8(Universe& u, std::size_t bound, CheckReport& report) {
  // Infinity cannot hold in a finite store; check the inductive step to the
  // bound: sigma_y is a ZF-set and equals y united with the singleton of y.
  TermId y = Universe::phi0();
  for (std::size_t i = 0; i < bound; ++i) {
    TermId s = successor(u, y);
    TermId via_union = union_binary(u, y, identity_carrier(u, {y}));
    if (!is_zf_set(u, s) || s != via_union) {
      report.add(false, "axiom=ZF8", witness_names(u, {y}));
      return;
    }
    y = s;
  }
  report.add(true, "axiom=ZF8",
             "bounded-pass depth=" + std::to_string(bound));
}

}  // namespace

void check_zf_axiom(Universe& u, ZfAxiomId id,
                    const std::vector<TermId>& samples,
                    const ZfCheckParams& params, CheckReport& report) {
  switch (id) {
    case ZfAxiomId::ZF1: check_zf1(u, samples, report); return;
    case ZfAxiomId::ZF2: check_zf2(u, samples, report); return;
    case ZfAxiomId::ZF3: check_zf3(u, samples, report); return;
    case ZfAxiomId::ZF4: check_zf4(u, samples, report); return;
    case ZfAxiomId::ZF5: {
      if (!params.separation_formula)
        throw FlowError(Errc::GuardFailed, "ZF5 needs a separation formula");
      check_zf5(u, samples, *params.separation_formula, report);
      return;
    }
    case ZfAxiomId::ZF6: {
      if (!params.replacement_alpha)
        throw FlowError(Errc::GuardFailed, "ZF6 needs a replacement formula");
      check_zf6(u, samples, *params.replacement_alpha, report);
      return;
    }
    case ZfAxiomId::ZF7: check_zf7(u, samples, report); return;
    case ZfAxiomId::ZF8: check_zf8(u, params.infinity_bound, report); return;
  }
}

ModelTriple build_model(Universe& u, const std::vector<TermId>& carrier) {
  if (carrier.size() * carrier.size() > u.caps().model_pairs)
    throw FlowError(Errc::CapExceeded,
                    "model over " + std::to_string(carrier.size()) +
                        " sets exceeds the pair cap");
  std::vector<TermId> all;
  std::vector<TermId> member_pairs;
  std::vector<TermId> diagonal;
  for (TermId a : carrier) {
    for (TermId b : carrier) {
      TermId t = make_pair(u, a, b);
      all.push_back(t);
      if (u.acts_on(b, a)) member_pairs.push_back(t);  // a in b
      if (a == b) diagonal.push_back(t);
    }
  }
  ModelTriple m;
  m.pairs = identity_carrier(u, all);
  m.membership = identity_carrier(u, member_pairs);
  m.equality = identity_carrier(u, diagonal);
  return m;
}

}  // namespace flow
