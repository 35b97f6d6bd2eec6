#include "flowkit/algebra.hpp"

#include <algorithm>

#include "flowkit/zf.hpp"

namespace flow {

namespace {

bool contains_sorted(const std::vector<TermId>& v, TermId t) {
  return std::binary_search(v.begin(), v.end(), t);
}

std::vector<TermId> sorted_unique(std::vector<TermId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Keys of both factors, minus the factors themselves: the terms on which
// composition clause (ii) has any bite.
std::vector<TermId> composition_keys(const Universe& u, TermId f, TermId g) {
  std::vector<TermId> keys;
  for (Entry e : u.node(f).table) keys.push_back(e.key);
  for (Entry e : u.node(g).table) keys.push_back(e.key);
  keys = sorted_unique(std::move(keys));
  std::erase_if(keys, [&](TermId t) { return t == f || t == g; });
  return keys;
}

// Clause (ii) for candidate h: h(x) = f(g(x)) away from the factors, plus
// clauses (iii)/(iv): h acts on neither factor unless it is one.
bool composition_candidate_ok(const Universe& u, TermId h, TermId f, TermId g,
                              const std::vector<TermId>& keys) {
  for (TermId x : keys)
    if (u.eval(h, x) != u.eval(f, u.eval(g, x))) return false;
  if (h != f && u.eval(h, f) != Universe::zero()) return false;
  if (h != g && u.eval(h, g) != Universe::zero()) return false;
  return true;
}

}  // namespace

TermId identity_carrier(Universe& u, const std::vector<TermId>& members) {
  std::vector<Entry> entries;
  entries.reserve(members.size());
  for (TermId m : members) entries.push_back(Entry{m, m});
  return u.intern(std::move(entries));
}

TermId compose(Universe& u, TermId f, TermId g) {
  if (u.node(f).cyclic || u.node(g).cyclic)
    throw FlowError(Errc::GuardFailed,
                    "composition is not defined on cyclic nodes");
  TermId zero = Universe::zero();
  TermId one = Universe::one();
  if (f == zero || g == zero) return Universe::phi0();
  if (f == one && g == one) return one;
  if (f == one || g == one) {
    TermId other = (f == one) ? g : f;
    if (u.eval(other, one) == zero) return other;
    throw FlowError(Errc::UnboundedSupport,
                    "composition with One is defined only when the other "
                    "factor maps One to Zero");
  }
  std::vector<TermId> keys = composition_keys(u, f, g);
  if (composition_candidate_ok(u, f, f, g, keys)) return f;
  if (composition_candidate_ok(u, g, f, g, keys)) return g;
  std::vector<Entry> table;
  for (TermId x : keys) {
    TermId y = u.eval(f, u.eval(g, x));
    if (y != zero) table.push_back(Entry{x, y});
  }
  return u.intern(std::move(table));
}

TermId z_compose(Universe& u, TermId f, TermId g) {
  std::vector<TermId> sf = u.support(f);
  std::vector<TermId> sg = u.support(g);
  for (const std::vector<TermId>* s : {&sf, &sg})
    for (TermId t : *s)
      if (!is_zf_set(u, t))
        throw FlowError(Errc::ZCompositionPreconditionFailed,
                        "domains and images must act only on ZF-sets; "
                        "offender " + u.display(t));
  std::vector<TermId> domain_g;
  for (Entry e : u.node(g).table) domain_g.push_back(e.key);
  std::vector<TermId> image_f;
  for (Entry e : u.node(f).table) image_f.push_back(e.image);
  if (sorted_unique(std::move(domain_g)) != sorted_unique(std::move(image_f)))
    throw FlowError(Errc::ZCompositionPreconditionFailed,
                    "Dom_g must equal Im_f");
  if (u.acts_on(f, g) || u.acts_on(g, f))
    throw FlowError(Errc::ZCompositionPreconditionFailed,
                    "factors must not act on each other");
  std::vector<Entry> table;
  for (Entry e : u.node(f).table)
    table.push_back(Entry{e.key, u.eval(g, e.image)});
  return u.intern(std::move(table));
}

TermId successor(Universe& u, TermId f) {
  if (f == Universe::zero() || f == Universe::one()) return Universe::zero();
  const TermNode& n = u.node(f);
  if (n.cyclic)
    throw FlowError(Errc::GuardFailed,
                    "successor of a cyclic node belongs to the hyper module");
  std::vector<Entry> table = n.table;
  table.push_back(Entry{f, f});
  return u.intern(std::move(table));
}

bool successor_relation_holds(const Universe& u, TermId f, TermId g) {
  if (u.eval(f, g) != Universe::zero()) return false;
  std::vector<TermId> probe;
  auto add = [&](TermId t) {
    for (Entry e : u.node(t).table) {
      probe.push_back(e.key);
      probe.push_back(e.image);
    }
  };
  add(f);
  add(g);
  probe.push_back(f);
  probe.push_back(Universe::zero());
  probe.push_back(Universe::phi0());
  for (TermId x : sorted_unique(std::move(probe)))
    if (x != g && u.eval(g, x) != u.eval(f, x)) return false;
  return true;
}

TermId phi(Universe& u, std::size_t n) {
  if (n > u.caps().phi_ladder)
    throw FlowError(Errc::CapExceeded,
                    "phi ladder capped at " +
                        std::to_string(u.caps().phi_ladder));
  while (u.phi_cache.size() <= n)
    u.phi_cache.push_back(successor(u, u.phi_cache.back()));
  return u.phi_cache[n];
}

bool is_restriction(const Universe& u, TermId g, TermId f, bool proper) {
  if (g == Universe::zero()) return false;
  if (proper && g == f) return false;
  if (g == Universe::one()) return f == Universe::one();
  if (f == Universe::one()) {
    for (Entry e : u.node(g).table)
      if (e.image != e.key || e.key == Universe::one()) return false;
    return true;
  }
  for (Entry e : u.node(g).table)
    if (!u.acts_on(f, e.key) || u.eval(f, e.key) != e.image) return false;
  return true;
}

bool lurks(const Universe& u, TermId g, TermId f) {
  if (f == Universe::one())
    throw FlowError(Errc::UnboundedSupport, "One has unbounded support");
  if (g == Universe::zero() || g == Universe::one()) return false;
  std::vector<TermId> s = u.support(f);
  for (Entry e : u.node(g).table)
    if (!contains_sorted(s, e.key) || !contains_sorted(s, e.image))
      return false;
  return true;
}

TermId full_power(Universe& u, TermId f) {
  std::vector<TermId> s = u.support(f);
  if (s.size() > u.caps().full_power_support)
    throw FlowError(
        Errc::CapExceeded,
        "full power over " + std::to_string(s.size()) +
            " support terms exceeds cap " +
            std::to_string(u.caps().full_power_support));
  // Every map with keys and images inside support(f) lurks f, and no other
  // term does. Walk all (n+1)^n image assignments.
  std::vector<TermId> lurkers;
  std::vector<Entry> current;
  auto enumerate = [&](auto&& self, std::size_t i) -> void {
    if (i == s.size()) {
      try {
        lurkers.push_back(u.intern(current));
      } catch (const FlowError&) {
        // Tables through One that cannot exist as terms are not lurkers.
      }
      return;
    }
    self(self, i + 1);  // key absent
    for (TermId img : s) {
      current.push_back(Entry{s[i], img});
      self(self, i + 1);
      current.pop_back();
    }
  };
  enumerate(enumerate, 0);
  return identity_carrier(u, sorted_unique(std::move(lurkers)));
}

TermId restricted_power(Universe& u, TermId f) {
  return restricted_power(u, f, u.caps().restricted_power_members);
}

TermId restricted_power(Universe& u, TermId f, std::size_t member_cap) {
  if (f == Universe::one())
    throw FlowError(Errc::UnboundedSupport, "One has unbounded support");
  const std::vector<Entry>& table = u.node(f).table;
  if (table.size() > member_cap)
    throw FlowError(Errc::CapExceeded,
                    "restricted power of " + std::to_string(table.size()) +
                        " members exceeds cap " + std::to_string(member_cap));
  std::vector<TermId> restrictions;
  std::size_t total = std::size_t{1} << table.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Entry> sub;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(table[i]);
    restrictions.push_back(u.intern(std::move(sub)));
  }
  return identity_carrier(u, sorted_unique(std::move(restrictions)));
}

TermId restrict_by(Universe& u, TermId f, const PredicateAst& formula) {
  if (f == Universe::zero()) return Universe::phi0();
  if (f == Universe::one())
    throw FlowError(Errc::UnboundedSupport,
                    "restrictions of One are built by dedicated operations");
  for (TermId x : u.support(f))
    if (eval_predicate(formula, x, u) && !is_emergent(u, x))
      throw FlowError(Errc::NonEmergentSelected, u.display(x));
  std::vector<Entry> table;
  for (Entry e : u.node(f).table)
    if (eval_predicate(formula, e.key, u)) table.push_back(e);
  TermId g = u.intern(std::move(table));
  // Audit of the defining clauses; unreachable on well-founded inputs.
  if (eval_predicate(formula, g, u) && !is_emergent(u, g))
    throw FlowError(Errc::NonEmergentSelected, u.display(g));
  if (!u.node(g).cyclic) {
    TermId sg = successor(u, g);
    if (u.eval(f, sg) != Universe::zero() && eval_predicate(formula, g, u))
      throw FlowError(Errc::DefinitionClauseViolated,
                      "clause (ii): f acts on the successor of the result");
  }
  if (g != f && u.eval(g, f) != Universe::zero())
    throw FlowError(Errc::DefinitionClauseViolated,
                    "clause (iii): the result acts on f");
  return g;
}

TermId create(Universe& u, TermId f, const AlphaMap& alpha) {
  if (!is_emergent(u, f))
    throw FlowError(Errc::NotEmergent,
                    "creation requires an emergent base, got " +
                        u.display(f));
  std::vector<Entry> table;
  for (TermId x : u.actions(f)) {
    TermId y = alpha.apply(u, x);
    if (y != Universe::zero()) table.push_back(Entry{x, y});
  }
  return u.intern(std::move(table));
}

TermId make_pair(Universe& u, TermId a, TermId b) {
  TermId zero = Universe::zero();
  if (a == zero && b == zero) return phi(u, 1);
  if (a == zero)
    throw FlowError(Errc::NonEmergentComponent,
                    "there are no ordered pairs (Zero, b) with b != Zero");
  if (!is_emergent(u, a))
    throw FlowError(Errc::NonEmergentComponent, u.display(a));
  TermId alpha = identity_carrier(u, {a});
  if (b == zero) return identity_carrier(u, {alpha, Universe::phi0()});
  if (!is_emergent(u, b))
    throw FlowError(Errc::NonEmergentComponent, u.display(b));
  if (a == b) return identity_carrier(u, {alpha});
  TermId beta = identity_carrier(u, {a, b});
  return identity_carrier(u, {alpha, beta});
}

namespace {

// The member of an identity-style singleton map, if t is one.
std::optional<TermId> singleton_member(const Universe& u, TermId t) {
  const TermNode& n = u.node(t);
  if (n.kind != NodeKind::Map || n.table.size() != 1) return std::nullopt;
  if (n.table[0].image != n.table[0].key) return std::nullopt;
  return n.table[0].key;
}

}  // namespace

std::optional<PairParts> pair_parts(Universe& u, TermId p) {
  if (p == phi(u, 1))
    return PairParts{Universe::zero(), Universe::zero(),
                     PairKind::Kuratowskian};
  const TermNode& n = u.node(p);
  if (n.kind != NodeKind::Map) return std::nullopt;
  for (Entry e : n.table)
    if (e.image != e.key) return std::nullopt;
  if (n.table.size() == 1) {
    auto a = singleton_member(u, n.table[0].key);
    if (!a) return std::nullopt;
    return PairParts{*a, *a, PairKind::Kuratowskian};
  }
  if (n.table.size() != 2) return std::nullopt;
  TermId m1 = n.table[0].key;
  TermId m2 = n.table[1].key;
  // Convention (a, Zero): the pair acts on alpha and Phi0.
  if (m1 == Universe::phi0() || m2 == Universe::phi0()) {
    TermId other = (m1 == Universe::phi0()) ? m2 : m1;
    auto a = singleton_member(u, other);
    if (!a) return std::nullopt;
    return PairParts{*a, Universe::zero(), PairKind::Kuratowskian};
  }
  for (auto [alpha, beta] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
    auto a = singleton_member(u, alpha);
    if (!a) continue;
    const TermNode& nb = u.node(beta);
    if (nb.table.size() != 2) continue;
    TermId k1 = nb.table[0].key;
    TermId k2 = nb.table[1].key;
    if (k1 != *a && k2 != *a) continue;
    TermId b = (k1 == *a) ? k2 : k1;
    bool non_kuratowskian = (b == alpha) && (beta == successor(u, alpha));
    return PairParts{*a, b,
                     non_kuratowskian ? PairKind::NonKuratowskian
                                      : PairKind::Kuratowskian};
  }
  return std::nullopt;
}

TermId union_over(Universe& u, TermId f) {
  if (!is_zf_set(u, f))
    throw FlowError(Errc::NotAZfSet, u.display(f));
  std::vector<TermId> members;
  for (Entry e : u.node(f).table)
    for (Entry inner : u.node(e.key).table) members.push_back(inner.key);
  return identity_carrier(u, sorted_unique(std::move(members)));
}

TermId intersection_over(Universe& u, TermId f) {
  if (!is_zf_set(u, f))
    throw FlowError(Errc::NotAZfSet, u.display(f));
  const std::vector<Entry>& table = u.node(f).table;
  if (table.empty()) return Universe::phi0();
  std::vector<TermId> common = u.actions(table[0].key);
  std::sort(common.begin(), common.end());
  for (std::size_t i = 1; i < table.size(); ++i) {
    std::vector<TermId> next = u.actions(table[i].key);
    std::sort(next.begin(), next.end());
    std::vector<TermId> keep;
    std::set_intersection(common.begin(), common.end(), next.begin(),
                          next.end(), std::back_inserter(keep));
    common = std::move(keep);
  }
  return identity_carrier(u, common);
}

TermId union_binary(Universe& u, TermId g, TermId h) {
  return union_over(u, identity_carrier(u, {g, h}));
}

TermId intersection_binary(Universe& u, TermId g, TermId h) {
  return intersection_over(u, identity_carrier(u, {g, h}));
}

TermId domain(Universe& u, TermId f) {
  if (!is_emergent(u, f))
    throw FlowError(Errc::NotEmergent, u.display(f));
  return identity_carrier(u, u.actions(f));
}

TermId image(Universe& u, TermId f) {
  if (!is_emergent(u, f))
    throw FlowError(Errc::NotEmergent, u.display(f));
  std::vector<TermId> images;
  for (Entry e : u.node(f).table) images.push_back(e.image);
  return identity_carrier(u, sorted_unique(std::move(images)));
}

bool is_injective(const Universe& u, TermId f) {
  if (u.node(f).kind != NodeKind::Map) return true;
  std::vector<TermId> images;
  for (Entry e : u.node(f).table) images.push_back(e.image);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace flow
