// Named property suites runnable from the CLI. Each suite replays the
// decidable theorems of its area over the given universe plus deterministic
// randomized samples and reports one PASS/FAIL line per instance.

#ifndef FLOWKIT_SUITES_HPP
#define FLOWKIT_SUITES_HPP

#include <cstdint>
#include <string>

#include "flowkit/report.hpp"
#include "flowkit/universe.hpp"

namespace flow {

struct SuiteOptions {
  std::uint64_t seed = 20200811;
  std::size_t infinity_bound = 8;
  std::size_t hyper_depth = 3;
};

// suite is one of: "theorems", "zf-axioms", "choice-pp", "hyper".
CheckReport run_suite(Universe& u, const std::string& suite,
                      const SuiteOptions& options = {});

CheckReport run_theorem_suite(Universe& u, const SuiteOptions& options);
CheckReport run_zf_axiom_suite(Universe& u, const SuiteOptions& options);
CheckReport run_choice_pp_suite(Universe& u, const SuiteOptions& options);
CheckReport run_hyper_suite(Universe& u, const SuiteOptions& options);

}  // namespace flow

#endif  // FLOWKIT_SUITES_HPP
