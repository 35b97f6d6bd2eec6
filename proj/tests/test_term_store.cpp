#include <doctest.h>

#include <random>

#include "flowkit/algebra.hpp"
#include "flowkit/universe.hpp"

using namespace flow;

namespace {

// Independent evaluator: a literal reading of the sentinel semantics and the
// action table, linear scan, no canonical-form assumptions.
TermId naive_eval(const Universe& u, TermId f, TermId x) {
  if (f == Universe::zero()) return Universe::zero();
  if (f == Universe::one()) return x;
  if (x == f) return f;
  for (Entry e : u.node(f).table)
    if (e.key == x) return e.image;
  return Universe::zero();
}

}  // namespace

TEST_CASE("sentinels exist and evaluate by their axioms") {
  Universe u;
  TermId zero = Universe::zero();
  TermId one = Universe::one();
  TermId phi0 = Universe::phi0();
  CHECK(zero != one);
  CHECK(phi0 != zero);
  CHECK(u.eval(zero, one) == zero);
  CHECK(u.eval(one, phi0) == phi0);
  CHECK(u.eval(zero, zero) == zero);
  CHECK(u.eval(one, one) == one);
  CHECK(u.eval(phi0, phi0) == phi0);
  CHECK(u.eval(phi0, zero) == zero);
}

TEST_CASE("interning is canonical") {
  Universe u;
  CHECK(u.intern({}) == Universe::phi0());

  TermId p1 = u.intern({Entry{Universe::phi0(), Universe::phi0()}});
  TermId p1_again = u.intern({Entry{Universe::phi0(), Universe::phi0()}});
  CHECK(p1 == p1_again);
  CHECK(p1 == phi(u, 1));

  SUBCASE("Zero images are implicit") {
    TermId t = u.intern({Entry{Universe::phi0(), Universe::zero()}});
    CHECK(t == Universe::phi0());
  }
  SUBCASE("entry order does not matter") {
    TermId a = u.intern({Entry{Universe::phi0(), p1}, Entry{p1, p1}});
    TermId b = u.intern({Entry{p1, p1}, Entry{Universe::phi0(), p1}});
    CHECK(a == b);
  }
  SUBCASE("exact duplicate entries collapse") {
    TermId a = u.intern({Entry{p1, p1}, Entry{p1, p1}});
    CHECK(a == u.intern({Entry{p1, p1}}));
  }
  SUBCASE("conflicting images are not a term") {
    CHECK_THROWS_AS(u.intern({Entry{p1, p1}, Entry{p1, Universe::phi0()}}),
                    FlowError);
  }
}

TEST_CASE("tables violating the axioms are rejected") {
  Universe u;
  TermId a = phi(u, 1);
  SUBCASE("nothing maps Zero away from Zero") {
    CHECK_THROWS_AS(u.intern({Entry{Universe::zero(), a}}), FlowError);
  }
  SUBCASE("only One is flexible with One") {
    CHECK_THROWS_AS(u.intern({Entry{Universe::one(), Universe::one()}}),
                    FlowError);
  }
  SUBCASE("the two-cycle through One does not exist") {
    try {
      u.intern({Entry{a, Universe::one()}, Entry{Universe::one(), a}});
      FAIL("expected ForbiddenOneCycle");
    } catch (const FlowError& e) {
      CHECK(e.code() == Errc::ForbiddenOneCycle);
    }
  }
  SUBCASE("t -> One alone is fine") {
    CHECK_NOTHROW(u.intern({Entry{a, Universe::one()}}));
  }
}

TEST_CASE("eval follows the table with Zero default") {
  Universe u;
  TermId p1 = phi(u, 1);
  TermId p2 = phi(u, 2);
  CHECK(u.eval(p2, p1) == p1);
  CHECK(u.eval(p2, p2) == p2);
  CHECK(u.eval(p1, p2) == Universe::zero());
  TermId m = u.intern({Entry{p1, p2}});
  CHECK(u.eval(m, p1) == p2);
  CHECK(u.eval(m, p2) == Universe::zero());
}

TEST_CASE("acts_on matches its defining clause") {
  Universe u;
  TermId p0 = Universe::phi0();
  TermId p1 = phi(u, 1);
  CHECK(u.acts_on(p1, p0));
  CHECK(!u.acts_on(p1, p1));
  CHECK(!u.acts_on(Universe::zero(), p0));
  CHECK(!u.acts_on(p0, p1));
  CHECK(u.acts_on(Universe::one(), p0));
  CHECK(!u.acts_on(Universe::one(), Universe::zero()));
}

TEST_CASE("support collects keys and images") {
  Universe u;
  TermId p0 = Universe::phi0();
  TermId p1 = phi(u, 1);
  TermId p2 = phi(u, 2);
  CHECK(u.support(p2) == std::vector<TermId>{p0, p1});
  CHECK(u.support(p0).empty());
  TermId m = u.intern({Entry{p1, p2}});
  CHECK(u.support(m) == std::vector<TermId>{p1, p2});
  CHECK_THROWS_AS(u.support(Universe::one()), FlowError);
}

TEST_CASE("extensional equality is identity in the canonical store") {
  Universe u;
  TermId p2 = phi(u, 2);
  CHECK(u.extensional_eq(p2, p2));
  CHECK(!u.extensional_eq(Universe::zero(), Universe::phi0()));
  CHECK(!u.extensional_eq(p2, phi(u, 1)));
}

TEST_CASE("cyclic nodes compare extensionally by folded tables") {
  Universe u(Universe::Mode::Cyclic);
  TermId p1 = phi(u, 1);
  TermId a = u.intern_cyclic({Entry{p1, p1}});
  TermId b = u.intern_cyclic({Entry{p1, p1}});
  CHECK(a != b);
  CHECK(u.extensional_eq(a, b));
  CHECK(!u.extensional_eq(a, Universe::phi0()));
  CHECK(!u.extensional_eq(Universe::zero(), Universe::phi0()));

  SUBCASE("self-referencing images fold across the pair") {
    TermId c = u.intern_cyclic({Entry{p1, p1}});
    TermId d = u.intern_cyclic({Entry{p1, p1}});
    // c and d each send phi0 to themselves.
    u.define_cyclic_node(c, {Entry{p1, p1}, Entry{Universe::phi0(), c}});
    u.define_cyclic_node(d, {Entry{p1, p1}, Entry{Universe::phi0(), d}});
    CHECK(u.extensional_eq(c, d));
    CHECK(!u.extensional_eq(c, a));
  }
}

TEST_CASE("similarity spots the sanctioned clone pair only") {
  Universe u;
  CHECK(u.similar(Universe::zero(), Universe::phi0()));
  CHECK(u.similar(phi(u, 2), phi(u, 2)));
  CHECK(!u.similar(phi(u, 1), phi(u, 2)));
  CHECK(!u.similar(Universe::one(), phi(u, 1)));
  CHECK(u.similar(Universe::one(), Universe::one()));
}

TEST_CASE("10k randomized kernel invariants") {
  Universe u;
  std::mt19937_64 rng(0x5eed);
  std::vector<TermId> pool{Universe::zero(), Universe::one(),
                           Universe::phi0()};
  for (std::size_t n = 1; n <= 4; ++n) pool.push_back(phi(u, n));

  for (int step = 0; step < 10000; ++step) {
    if (step % 3 == 0) {
      std::vector<Entry> table;
      std::size_t keys = rng() % 4;
      for (std::size_t k = 0; k < keys; ++k) {
        TermId key = pool[rng() % pool.size()];
        TermId image = pool[rng() % pool.size()];
        table.push_back(Entry{key, image});
      }
      try {
        TermId t = u.intern(table);
        TermId again = u.intern(table);
        REQUIRE(t == again);  // canonical-form idempotence
        if (pool.size() < 600) pool.push_back(t);
      } catch (const FlowError&) {
        // Tables through Zero/One that denote no term.
      }
    } else {
      TermId f = pool[rng() % pool.size()];
      TermId x = pool[rng() % pool.size()];
      TermId y = u.eval(f, x);
      REQUIRE(y == naive_eval(u, f, x));
      REQUIRE(u.eval(f, f) == f);                          // F2
      REQUIRE(u.eval(f, Universe::zero()) == Universe::zero());
      REQUIRE(u.acts_on(f, x) == (x != f && y != Universe::zero()));
    }
  }

  // Theorem 1 in the canonical store: equality iff identity.
  for (std::size_t i = 0; i < pool.size(); i += 7)
    for (std::size_t j = 0; j < pool.size(); j += 11)
      REQUIRE(u.extensional_eq(pool[i], pool[j]) == (pool[i] == pool[j]));
}
