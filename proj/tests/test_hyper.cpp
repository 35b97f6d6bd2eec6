#include <doctest.h>

#include <algorithm>

#include "flowkit/algebra.hpp"
#include "flowkit/hyper.hpp"
#include "flowkit/universe.hpp"
#include "flowkit/zf.hpp"

using namespace flow;

namespace {

CyclicSpec figure4_spec() {
  CyclicSpec spec;
  spec.nodes = {"a", "b", "c", "j", "k", "l"};
  spec.edges = {{"a", "b"}, {"b", "c"}, {"c", "a"},
                {"j", "k"}, {"k", "l"}, {"l", "j"}};
  return spec;
}

}  // namespace

TEST_CASE("building cyclic universes") {
  CyclicSpec spec;
  spec.nodes = {"a", "b", "c"};
  spec.edges = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  Universe u = build_cyclic_universe(spec);
  TermId a = *u.lookup("a");
  TermId b = *u.lookup("b");
  TermId c = *u.lookup("c");
  CHECK(u.eval(a, b) == b);
  CHECK(u.eval(b, c) == c);
  CHECK(u.eval(c, a) == a);
  CHECK(u.acts_on(a, b));
  CHECK(membership(u, b, a));
  CHECK(membership(u, a, c));

  SUBCASE("empty spec gives a sentinels-only universe") {
    Universe base = build_cyclic_universe(CyclicSpec{});
    CHECK(base.size() == 3);
  }
  SUBCASE("edges may reference pre-existing terms") {
    CyclicSpec with_phi;
    with_phi.nodes = {"m"};
    with_phi.edges = {{"m", "phi1"}, {"m", "m"}};
    Universe v = build_cyclic_universe(with_phi);
    TermId m = *v.lookup("m");
    CHECK(v.eval(m, phi(v, 1)) == phi(v, 1));
    CHECK(v.eval(m, m) == m);  // the self edge folds into F2
  }
  SUBCASE("unknown member names are rejected") {
    CyclicSpec bad;
    bad.nodes = {"m"};
    bad.edges = {{"m", "nowhere"}};
    CHECK_THROWS_AS(build_cyclic_universe(bad), FlowError);
  }
  SUBCASE("cyclic declarations need a cyclic universe") {
    Universe wf(Universe::Mode::WellFounded);
    CHECK_THROWS_AS(add_cyclic_nodes(wf, spec), FlowError);
  }
}

TEST_CASE("a merged component via a bridge node") {
  CyclicSpec spec = figure4_spec();
  spec.nodes.push_back("cprime");
  spec.edges.push_back({"cprime", "a"});
  spec.edges.push_back({"cprime", "j"});
  Universe u = build_cyclic_universe(spec);
  TermId cp = *u.lookup("cprime");
  CHECK(u.acts_on(cp, *u.lookup("a")));
  CHECK(u.acts_on(cp, *u.lookup("j")));
}

TEST_CASE("well-foundedness checker") {
  SUBCASE("rank sets are well-founded") {
    Universe u;
    std::vector<TermId> family = generate_rank_universe(u, 3);
    for (TermId t : family) {
      if (u.actions(t).empty()) continue;
      WellFoundednessResult r = check_well_foundedness(u, t);
      CHECK(r.holds);
      // The witness has no member inside t's actions.
      for (TermId s : u.actions(t)) CHECK(!u.acts_on(r.witness, s));
    }
    CHECK(check_well_foundedness(u, phi(u, 1)).witness == Universe::phi0());
  }
  SUBCASE("the cycle carrier fails with a participant witness") {
    Universe u = build_cyclic_universe(figure4_spec());
    std::vector<TermId> cycle{*u.lookup("a"), *u.lookup("b"), *u.lookup("c")};
    TermId psi_prime = u.intern_cyclic({Entry{cycle[0], cycle[0]},
                                        Entry{cycle[1], cycle[1]},
                                        Entry{cycle[2], cycle[2]}});
    WellFoundednessResult r = check_well_foundedness(u, psi_prime);
    CHECK(!r.holds);
    CHECK(std::find(cycle.begin(), cycle.end(), r.witness) != cycle.end());
  }
  SUBCASE("the guard exempts Zero and Phi0") {
    Universe u;
    CHECK_THROWS_AS(check_well_foundedness(u, Universe::zero()), FlowError);
    CHECK_THROWS_AS(check_well_foundedness(u, Universe::phi0()), FlowError);
  }
}

TEST_CASE("hyper successors are memoized fresh cyclic nodes") {
  Universe u = build_cyclic_universe(figure4_spec());
  TermId a = *u.lookup("a");
  TermId sa = hyper_successor(u, a);
  CHECK(hyper_successor(u, a) == sa);  // lazy closure = materialized closure
  CHECK(u.is_cyclic_node(sa));
  CHECK(u.eval(sa, a) == a);
  CHECK(u.eval(sa, *u.lookup("b")) == *u.lookup("b"));
  CHECK(is_restriction(u, a, sa, true));
}

TEST_CASE("hyperfunction verification is bounded and honest") {
  Universe u = build_cyclic_universe(figure4_spec());
  std::vector<TermId> base;
  for (const char* n : {"a", "b", "c", "j", "k", "l"})
    base.push_back(*u.lookup(n));

  SUBCASE("confirmed at the materialized depth") {
    std::vector<TermId> closure = materialize_sigma_closure(u, base, 3);
    CHECK(closure.size() == 24);  // six chains of length four
    std::vector<Entry> table;
    for (TermId m : closure) table.push_back(Entry{m, m});
    TermId psi = u.intern_cyclic(std::move(table));
    HyperVerdict v = check_hyperfunction(u, psi, 3);
    CHECK(v.confirmed);
    CHECK(v.depth == 3);
    // Under Hyper-ZF-Sets the confirmed node is a cyclic ZF-set.
    CHECK(is_zf_set(u, psi));
    CHECK(is_emergent(u, psi));
  }
  SUBCASE("missing successors refute clause (ii)") {
    std::vector<Entry> table;
    for (TermId m : base) table.push_back(Entry{m, m});
    TermId psi = u.intern_cyclic(std::move(table));
    HyperVerdict v = check_hyperfunction(u, psi, 1);
    CHECK(!v.confirmed);
    CHECK(v.clause == '2');
    CHECK(std::find(base.begin(), base.end(), v.witness) != base.end());
  }
  SUBCASE("a present restriction outside the action set refutes (iii)") {
    std::vector<TermId> closure = materialize_sigma_closure(u, base, 2);
    std::vector<Entry> table;
    for (TermId m : closure) table.push_back(Entry{m, m});
    TermId psi = u.intern_cyclic(std::move(table));
    // sigma_a is in psi; its restriction {a -> a} exists but is not acted.
    TermId y = u.intern_cyclic({Entry{*u.lookup("a"), *u.lookup("a")}});
    HyperVerdict v = check_hyperfunction(u, psi, 2);
    CHECK(!v.confirmed);
    CHECK(v.clause == '3');
    CHECK(v.witness == y);
  }
  SUBCASE("well-founded maps are never hyperfunctions") {
    Universe wf;
    HyperVerdict v = check_hyperfunction(wf, phi(wf, 3), 1);
    CHECK(!v.confirmed);
  }
}

TEST_CASE("axiom-mode exclusivity") {
  // A universe whose maps all pass Well-Foundedness confirms no
  // hyperfunction; the cycle universe confirms one and fails the axiom.
  Universe wf;
  std::vector<TermId> family = generate_rank_universe(wf, 2);
  for (TermId t : family) {
    if (wf.actions(t).empty()) continue;
    CHECK(check_well_foundedness(wf, t).holds);
    CHECK(!check_hyperfunction(wf, t, 1).confirmed);
  }
  CHECK(wf.axiom_mode() == Universe::AxiomMode::WellFoundedness);

  Universe cy = build_cyclic_universe(figure4_spec());
  CHECK(cy.axiom_mode() == Universe::AxiomMode::Hyperfunctions);
  std::vector<TermId> base;
  for (const char* n : {"a", "b", "c"}) base.push_back(*cy.lookup(n));
  std::vector<TermId> closure = materialize_sigma_closure(cy, base, 3);
  std::vector<Entry> table;
  for (TermId m : closure) table.push_back(Entry{m, m});
  TermId psi = cy.intern_cyclic(std::move(table));
  CHECK(check_hyperfunction(cy, psi, 3).confirmed);
  CHECK(!check_well_foundedness(cy, psi).holds);
}

TEST_CASE("sigma chains") {
  Universe u;
  SUBCASE("from phi0 the chain is the phi ladder") {
    TermId four = phi(u, 4);
    TermId chain = generate_sigma_chain(u, Universe::phi0(), 3);
    CHECK(u.actions(chain) == u.actions(four));
  }
  SUBCASE("zero steps give a singleton carrier") {
    TermId chain = generate_sigma_chain(u, phi(u, 2), 0);
    CHECK(u.actions(chain) == std::vector<TermId>{phi(u, 2)});
  }
  SUBCASE("chains increase strictly under restriction") {
    TermId x0 = identity_carrier(u, {phi(u, 2), phi(u, 5)});
    TermId chain = generate_sigma_chain(u, x0, 4);
    std::vector<TermId> members = u.actions(chain);
    REQUIRE(members.size() == 5);
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      CHECK(is_restriction(u, members[i], members[i + 1], true));
    // A unique minimal element under the successor order.
    std::size_t minimal = 0;
    for (TermId m : members) {
      bool least = true;
      for (TermId other : members)
        if (other != m && is_restriction(u, other, m, true)) least = false;
      if (least) ++minimal;
    }
    CHECK(minimal == 1);
  }
  SUBCASE("chains on cyclic nodes use the memoized successor") {
    Universe cy = build_cyclic_universe(figure4_spec());
    TermId a = *cy.lookup("a");
    TermId chain = generate_sigma_chain(cy, a, 2);
    CHECK(cy.actions(chain).size() == 3);
    CHECK(cy.acts_on(chain, hyper_successor(cy, a)));
  }
  SUBCASE("the cap applies") {
    u.caps().sigma_chain = 4;
    CHECK_THROWS_AS(generate_sigma_chain(u, Universe::phi0(), 5), FlowError);
  }
}
