#include <doctest.h>

#include <algorithm>
#include <random>

#include "flowkit/algebra.hpp"
#include "flowkit/universe.hpp"
#include "flowkit/zf.hpp"

using namespace flow;

namespace {

// Brute-force lurker enumerator, independent of full_power: all tables over
// the support filtered by the lurk predicate.
std::vector<TermId> brute_lurkers(Universe& u, TermId f) {
  std::vector<TermId> s = u.support(f);
  std::vector<TermId> found;
  std::vector<Entry> current;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == s.size()) {
      TermId t;
      try {
        t = u.intern(current);
      } catch (const FlowError&) {
        return;
      }
      if (lurks(u, t, f)) found.push_back(t);
      return;
    }
    self(self, i + 1);
    for (TermId img : s) {
      current.push_back(Entry{s[i], img});
      self(self, i + 1);
      current.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

TEST_CASE("composition sentinel laws") {
  Universe u;
  CHECK(compose(u, Universe::zero(), Universe::zero()) == Universe::phi0());
  CHECK(compose(u, Universe::one(), Universe::one()) == Universe::one());
  TermId p3 = phi(u, 3);
  CHECK(compose(u, p3, Universe::zero()) == Universe::phi0());
  CHECK(compose(u, Universe::zero(), p3) == Universe::phi0());
}

TEST_CASE("composition with One covers exactly the unit cases") {
  Universe u;
  TermId p1 = phi(u, 1);
  CHECK(u.eval(p1, Universe::one()) == Universe::zero());
  CHECK(compose(u, Universe::one(), p1) == p1);
  CHECK(compose(u, p1, Universe::one()) == p1);

  TermId touches_one = u.intern({Entry{Universe::one(), p1}});
  CHECK_THROWS_AS(compose(u, Universe::one(), touches_one), FlowError);
  CHECK_THROWS_AS(compose(u, touches_one, Universe::one()), FlowError);
}

TEST_CASE("the non-associativity quadruple") {
  Universe u;
  TermId a = phi(u, 5);
  TermId c = phi(u, 6);
  TermId g = u.intern({Entry{a, a}});
  TermId f = u.intern({Entry{a, g}, Entry{g, c}, Entry{c, c}});

  CHECK(compose(u, compose(u, f, g), f) == Universe::phi0());
  TermId l = compose(u, f, compose(u, g, f));
  CHECK(u.eval(l, a) == c);
  CHECK(u.actions(l) == std::vector<TermId>{a});
}

TEST_CASE("the non-commutativity pair") {
  Universe u;
  TermId f = u.intern({Entry{phi(u, 1), phi(u, 2)},
                       Entry{phi(u, 2), phi(u, 2)}});
  TermId g = u.intern({Entry{phi(u, 2), phi(u, 3)},
                       Entry{phi(u, 3), phi(u, 3)}});
  CHECK(compose(u, f, g) == Universe::phi0());
  CHECK(compose(u, g, f) == u.intern({Entry{phi(u, 1), phi(u, 3)},
                                      Entry{phi(u, 2), phi(u, 3)}}));
}

TEST_CASE("identity-style maps absorb self-composition") {
  Universe u;
  TermId p3 = phi(u, 3);
  CHECK(compose(u, p3, p3) == p3);
}

TEST_CASE("z-composition") {
  Universe u;
  TermId f = u.intern({Entry{phi(u, 0), phi(u, 1)}});
  TermId g = u.intern({Entry{phi(u, 1), phi(u, 2)}});
  SUBCASE("chases the tables") {
    CHECK(z_compose(u, f, g) == u.intern({Entry{phi(u, 0), phi(u, 2)}}));
  }
  SUBCASE("is associative on chained maps") {
    TermId h = u.intern({Entry{phi(u, 2), phi(u, 3)}});
    CHECK(z_compose(u, z_compose(u, f, g), h) ==
          z_compose(u, f, z_compose(u, g, h)));
  }
  SUBCASE("rejects a domain mismatch") {
    TermId h = u.intern({Entry{phi(u, 3), phi(u, 4)}});
    try {
      z_compose(u, f, h);
      FAIL("expected ZCompositionPreconditionFailed");
    } catch (const FlowError& e) {
      CHECK(e.code() == Errc::ZCompositionPreconditionFailed);
    }
  }
  SUBCASE("rejects non-ZF supports") {
    TermId swap = u.intern({Entry{phi(u, 0), phi(u, 1)},
                            Entry{phi(u, 1), phi(u, 0)}});
    TermId e = u.intern({Entry{swap, phi(u, 1)}});
    TermId d = u.intern({Entry{phi(u, 1), swap}});
    CHECK_THROWS_AS(z_compose(u, e, d), FlowError);
  }
}

TEST_CASE("successor") {
  Universe u;
  CHECK(successor(u, Universe::phi0()) == phi(u, 1));
  CHECK(successor(u, phi(u, 1)) == phi(u, 2));
  CHECK(successor(u, Universe::one()) == Universe::zero());
  CHECK(successor(u, Universe::zero()) == Universe::zero());

  // sigma_gamma acts exactly on phi1 and gamma.
  TermId gamma = u.intern({Entry{phi(u, 1), phi(u, 1)}});
  TermId sg = successor(u, gamma);
  CHECK(u.actions(sg) == std::vector<TermId>{phi(u, 1), gamma});
  CHECK(successor_relation_holds(u, gamma, sg));
  CHECK(u.eval(gamma, sg) == Universe::zero());
}

TEST_CASE("phi ladder laws") {
  Universe u;
  CHECK(u.node(phi(u, 2)).table ==
        std::vector<Entry>{Entry{Universe::phi0(), Universe::phi0()},
                           Entry{phi(u, 1), phi(u, 1)}});
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(u.eval(phi(u, m + n), phi(u, n)) == phi(u, n));
      CHECK(u.eval(phi(u, n), phi(u, n + 2)) == Universe::zero());
    }
  u.caps().phi_ladder = 20;
  CHECK_THROWS_AS(phi(u, 21), FlowError);
}

TEST_CASE("restriction predicate") {
  Universe u;
  CHECK(is_restriction(u, phi(u, 1), phi(u, 3), true));
  CHECK(!is_restriction(u, phi(u, 3), phi(u, 1)));
  CHECK(is_restriction(u, Universe::phi0(), phi(u, 4)));
  CHECK(is_restriction(u, Universe::phi0(), Universe::zero()));
  CHECK(!is_restriction(u, Universe::zero(), phi(u, 3)));
  CHECK(is_restriction(u, phi(u, 3), Universe::one(), true));
  CHECK(is_restriction(u, Universe::one(), Universe::one()));
  CHECK(!is_restriction(u, Universe::one(), Universe::one(), true));
  TermId skew = u.intern({Entry{phi(u, 0), phi(u, 1)}});
  CHECK(!is_restriction(u, skew, Universe::one()));
}

TEST_CASE("lurking") {
  Universe u;
  CHECK(lurks(u, phi(u, 2), phi(u, 4)));
  CHECK(!lurks(u, phi(u, 4), phi(u, 2)));
  TermId swap = u.intern({Entry{phi(u, 0), phi(u, 1)},
                          Entry{phi(u, 1), phi(u, 0)}});
  CHECK(lurks(u, swap, phi(u, 2)));
  CHECK(lurks(u, phi(u, 2), swap));
  CHECK(lurks(u, Universe::phi0(), phi(u, 1)));
  CHECK(!lurks(u, Universe::zero(), phi(u, 1)));
  CHECK_THROWS_AS(lurks(u, phi(u, 1), Universe::one()), FlowError);
}

TEST_CASE("full power counts and membership") {
  Universe u;
  SUBCASE("two-member identity carrier yields nine lurkers") {
    TermId f = identity_carrier(u, {phi(u, 3), phi(u, 4)});
    TermId p = full_power(u, f);
    CHECK(u.actions(p).size() == 9);
    CHECK(u.acts_on(p, f));
    CHECK(u.acts_on(p, Universe::phi0()));
    CHECK(u.actions(p) == brute_lurkers(u, f));
  }
  SUBCASE("counts match the brute-force oracle on a general map") {
    TermId m = u.intern({Entry{phi(u, 0), phi(u, 1)}});
    CHECK(u.actions(full_power(u, m)) == brute_lurkers(u, m));
  }
  SUBCASE("support cap") {
    u.caps().full_power_support = 2;
    CHECK_THROWS_AS(full_power(u, phi(u, 3)), FlowError);
  }
}

TEST_CASE("restricted power") {
  Universe u;
  CHECK(restricted_power(u, Universe::phi0()) == phi(u, 1));
  CHECK(restricted_power(u, phi(u, 1)) == phi(u, 2));
  SUBCASE("power of phi2 hits gamma") {
    TermId p = restricted_power(u, phi(u, 2));
    TermId gamma = u.intern({Entry{phi(u, 1), phi(u, 1)}});
    std::vector<TermId> expect{Universe::phi0(), phi(u, 1), phi(u, 2), gamma};
    std::sort(expect.begin(), expect.end());
    CHECK(u.actions(p) == expect);
  }
  SUBCASE("2^n members for identity carriers") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<TermId> members;
      for (std::size_t i = 0; i < n; ++i) members.push_back(phi(u, i));
      TermId f = identity_carrier(u, members);
      CHECK(u.actions(restricted_power(u, f)).size() ==
            (std::size_t{1} << n));
    }
  }
  SUBCASE("every action is a restriction, via the predicate oracle") {
    TermId f = u.intern({Entry{phi(u, 0), phi(u, 2)},
                         Entry{phi(u, 1), phi(u, 2)}});
    TermId p = restricted_power(u, f);
    for (TermId t : u.actions(p)) CHECK(is_restriction(u, t, f));
    CHECK(u.actions(p).size() == 4);
  }
  SUBCASE("member cap") {
    CHECK_THROWS_AS(restricted_power(u, phi(u, 4), 3), FlowError);
  }
}

TEST_CASE("restriction under a formula") {
  Universe u;
  std::unordered_map<std::string, TermId> names;
  TermId p2 = phi(u, 2);

  SUBCASE("phi2 restricted to phi0 is phi1") {
    PredPtr f = parse_predicate("x = phi0", names);
    CHECK(restrict_by(u, p2, *f) == phi(u, 1));
  }
  SUBCASE("phi2 restricted to phi1 is the new gamma") {
    PredPtr f = parse_predicate("x = phi1", names);
    TermId gamma = restrict_by(u, p2, *f);
    CHECK(gamma != phi(u, 1));
    CHECK(u.eval(gamma, phi(u, 1)) == phi(u, 1));
    CHECK(u.actions(gamma) == std::vector<TermId>{phi(u, 1)});
  }
  SUBCASE("the four identities") {
    PredPtr never = parse_predicate("x != x and E(x)", names);
    PredPtr always = parse_predicate("x = x and E(x)", names);
    CHECK(restrict_by(u, p2, *never) == Universe::phi0());
    CHECK(restrict_by(u, p2, *always) == p2);
    names["f"] = p2;
    PredPtr away = parse_predicate("x != f and E(x)", names);
    CHECK(restrict_by(u, p2, *away) == p2);
    PredPtr at_self = parse_predicate("x = f", names);
    CHECK(restrict_by(u, p2, *at_self) == Universe::phi0());
  }
  SUBCASE("f recovered from its successor") {
    TermId sw = u.intern({Entry{phi(u, 0), phi(u, 1)},
                          Entry{phi(u, 1), phi(u, 0)}});
    names["f"] = sw;
    PredPtr away = parse_predicate("x != f and E(x)", names);
    CHECK(restrict_by(u, successor(u, sw), *away) == sw);
  }
  SUBCASE("zero and phi0 restrict to phi0") {
    PredPtr anything = parse_predicate("true", names);
    CHECK(restrict_by(u, Universe::zero(), *anything) == Universe::phi0());
    CHECK(restrict_by(u, Universe::phi0(), *anything) == Universe::phi0());
  }
  SUBCASE("non-emergent selections are rejected") {
    TermId f = u.intern({Entry{Universe::one(), phi(u, 1)}});
    PredPtr all = parse_predicate("true", names);
    try {
      restrict_by(u, f, *all);
      FAIL("expected NonEmergentSelected");
    } catch (const FlowError& e) {
      CHECK(e.code() == Errc::NonEmergentSelected);
    }
  }
  SUBCASE("self atoms are inert") {
    PredPtr keep = parse_predicate("x != self", names);
    CHECK(restrict_by(u, p2, *keep) == p2);
    PredPtr drop = parse_predicate("x = self", names);
    CHECK(restrict_by(u, p2, *drop) == Universe::phi0());
  }
}

TEST_CASE("creation") {
  Universe u;
  SUBCASE("the three-step chain from phi4") {
    AlphaMap alpha = AlphaMap::of_entries(
        {{phi(u, 1), phi(u, 2)},
         {phi(u, 2), phi(u, 3)},
         {phi(u, 3), Universe::zero()},
         {phi(u, 0), Universe::zero()}});
    TermId g = create(u, phi(u, 4), alpha);
    CHECK(u.eval(g, phi(u, 1)) == phi(u, 2));
    CHECK(u.eval(g, phi(u, 2)) == phi(u, 3));
    CHECK(u.eval(g, phi(u, 3)) == Universe::zero());
    CHECK(u.actions(g).size() == 2);
  }
  SUBCASE("identity creation reproduces the action table") {
    CHECK(create(u, phi(u, 3), AlphaMap::identity()) == phi(u, 3));
  }
  SUBCASE("a partial alpha is not functional") {
    AlphaMap alpha = AlphaMap::of_entries({{phi(u, 0), phi(u, 1)}});
    try {
      create(u, phi(u, 2), alpha);
      FAIL("expected AlphaNotFunctional");
    } catch (const FlowError& e) {
      CHECK(e.code() == Errc::AlphaNotFunctional);
    }
  }
  SUBCASE("conflicting alpha entries are not functional") {
    AlphaMap alpha = AlphaMap::of_entries({{phi(u, 0), phi(u, 1)},
                                           {phi(u, 0), phi(u, 2)},
                                           {phi(u, 1), phi(u, 1)}});
    CHECK_THROWS_AS(create(u, phi(u, 2), alpha), FlowError);
  }
  SUBCASE("creation needs an emergent base") {
    CHECK_THROWS_AS(create(u, Universe::one(), AlphaMap::identity()),
                    FlowError);
  }
}

TEST_CASE("ordered pairs") {
  Universe u;
  CHECK(make_pair(u, Universe::zero(), Universe::zero()) == phi(u, 1));
  CHECK(make_pair(u, Universe::phi0(), Universe::zero()) == phi(u, 2));
  CHECK_THROWS_AS(make_pair(u, Universe::zero(), phi(u, 1)), FlowError);
  CHECK_THROWS_AS(make_pair(u, Universe::one(), phi(u, 1)), FlowError);

  SUBCASE("components decode") {
    TermId a = phi(u, 3);
    TermId b = phi(u, 4);
    auto parts = pair_parts(u, make_pair(u, a, b));
    REQUIRE(parts.has_value());
    CHECK(parts->first == a);
    CHECK(parts->second == b);
    CHECK(parts->kind == PairKind::Kuratowskian);
  }
  SUBCASE("diagonal pairs are Kuratowskian") {
    TermId a = phi(u, 2);
    auto parts = pair_parts(u, make_pair(u, a, a));
    REQUIRE(parts.has_value());
    CHECK(parts->first == a);
    CHECK(parts->second == a);
    CHECK(parts->kind == PairKind::Kuratowskian);
  }
  SUBCASE("the second kind appears when b is the singleton over a") {
    TermId a = phi(u, 0);
    TermId b = phi(u, 1);  // the identity carrier over {phi0}
    auto parts = pair_parts(u, make_pair(u, a, b));
    REQUIRE(parts.has_value());
    CHECK(parts->kind == PairKind::NonKuratowskian);
    CHECK(parts->first == a);
    CHECK(parts->second == b);
  }
  SUBCASE("phi1 decodes as (zero, zero)") {
    auto parts = pair_parts(u, phi(u, 1));
    REQUIRE(parts.has_value());
    CHECK(parts->first == Universe::zero());
    CHECK(parts->second == Universe::zero());
  }
  SUBCASE("an identity carrier over two ladder levels is not a pair") {
    CHECK(!pair_parts(u, identity_carrier(u, {phi(u, 3), phi(u, 4)}))
               .has_value());
  }
}

TEST_CASE("unions and intersections") {
  Universe u;
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(union_binary(u, phi(u, m), phi(u, n)) ==
            phi(u, std::max(m, n)));
      CHECK(intersection_binary(u, phi(u, m), phi(u, n)) ==
            compose(u, phi(u, m), phi(u, n)));
    }
  TermId f = identity_carrier(u, {phi(u, 2), phi(u, 5)});
  CHECK(union_binary(u, f, Universe::phi0()) == f);
  CHECK(union_over(u, phi(u, 1)) == Universe::phi0());
  CHECK(intersection_over(u, Universe::phi0()) == Universe::phi0());
  SUBCASE("commutativity on sampled carriers") {
    TermId g = phi(u, 3);
    CHECK(union_binary(u, f, g) == union_binary(u, g, f));
    CHECK(intersection_binary(u, f, g) == intersection_binary(u, g, f));
  }
  SUBCASE("non-ZF carriers are rejected") {
    TermId skew = u.intern({Entry{phi(u, 0), phi(u, 1)}});
    CHECK_THROWS_AS(union_over(u, skew), FlowError);
  }
}

TEST_CASE("domain, image, injectivity") {
  Universe u;
  TermId f = u.intern({Entry{phi(u, 0), phi(u, 7)},
                       Entry{phi(u, 1), phi(u, 8)},
                       Entry{phi(u, 2), phi(u, 8)}});
  CHECK(domain(u, f) ==
        identity_carrier(u, {phi(u, 0), phi(u, 1), phi(u, 2)}));
  CHECK(image(u, f) == identity_carrier(u, {phi(u, 7), phi(u, 8)}));
  CHECK(!is_injective(u, f));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(is_injective(u, phi(u, n)));
  CHECK(domain(u, Universe::phi0()) == Universe::phi0());
  CHECK(is_injective(u, Universe::one()));
}

TEST_CASE("composition uniqueness on random small maps") {
  Universe u;
  std::mt19937_64 rng(42);
  std::vector<TermId> pool;
  for (std::size_t n = 0; n <= 4; ++n) pool.push_back(phi(u, n));
  for (int trial = 0; trial < 300; ++trial) {
    auto random_table = [&] {
      std::vector<Entry> t;
      std::size_t keys = rng() % 4;
      for (std::size_t k = 0; k < keys; ++k)
        t.push_back(Entry{pool[rng() % pool.size()], pool[rng() % pool.size()]});
      std::sort(t.begin(), t.end(),
                [](Entry a, Entry b) { return a.key < b.key; });
      t.erase(std::unique(t.begin(), t.end(),
                          [](Entry a, Entry b) { return a.key == b.key; }),
              t.end());
      return t;
    };
    TermId f = u.intern(random_table());
    TermId g = u.intern(random_table());
    TermId h = compose(u, f, g);

    std::vector<TermId> keys;
    for (Entry e : u.node(f).table) keys.push_back(e.key);
    for (Entry e : u.node(g).table) keys.push_back(e.key);
    std::erase_if(keys, [&](TermId t) { return t == f || t == g; });
    auto qualifies = [&](TermId cand) {
      for (TermId t : keys) {
        if (t == cand) continue;  // clause (ii) exempts the composite
        if (u.eval(cand, t) != u.eval(f, u.eval(g, t))) return false;
      }
      if (cand != f && u.eval(cand, f) != Universe::zero()) return false;
      if (cand != g && u.eval(cand, g) != Universe::zero()) return false;
      return true;
    };
    CAPTURE(trial);
    REQUIRE(qualifies(h));
    for (TermId cand : {f, g})
      if (cand != h) REQUIRE(!qualifies(cand));
  }
}
