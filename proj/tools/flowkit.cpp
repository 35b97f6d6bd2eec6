// flowkit: command-line surface over the flow kernel. One universe per
// invocation, line-oriented output stable enough for golden-file tests.

#include <iostream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "flowkit/algebra.hpp"
#include "flowkit/choice.hpp"
#include "flowkit/hyper.hpp"
#include "flowkit/predicate.hpp"
#include "flowkit/suites.hpp"
#include "flowkit/universe_io.hpp"
#include "flowkit/zf.hpp"

namespace {

using namespace flow;

std::string show(const Universe& u, TermId t) {
  std::string name = u.name_of(t);
  return name.empty() ? u.display(t) : name;
}

std::unordered_map<std::string, TermId> binding_table(const Universe& u) {
  std::unordered_map<std::string, TermId> out;
  for (const auto& [name, id] : u.bindings()) out[name] = id;
  return out;
}

AlphaMap parse_alpha(Universe& u, const std::string& text) {
  if (text == "identity") return AlphaMap::identity();
  auto call = [&](const std::string& head) -> std::optional<std::string> {
    if (text.rfind(head + "(", 0) == 0 && text.back() == ')')
      return text.substr(head.size() + 1,
                         text.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto arg = call("inverse"))
    return AlphaMap::inverse_of(resolve_name(u, *arg));
  if (auto arg = call("const"))
    return AlphaMap::constant_to(resolve_name(u, *arg));
  std::vector<std::pair<TermId, TermId>> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t arrow = item.find("->");
    if (arrow == std::string::npos)
      throw FlowError(Errc::SyntaxError,
                      "alpha entry must look like 'x->y': '" + item + "'");
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
      return s;
    };
    entries.emplace_back(resolve_name(u, trim(item.substr(0, arrow))),
                         resolve_name(u, trim(item.substr(arrow + 2))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return AlphaMap::of_entries(std::move(entries));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowkit: a finite kernel for the Flow theory of functions"};
  app.require_subcommand(1);

  std::string universe_path;
  bool cyclic = false;
  std::size_t cap_power = 5;
  std::size_t depth = 3;
  std::size_t bound = 8;
  std::uint64_t seed = 20200811;
  app.add_option("--universe", universe_path, "universe file to load");
  app.add_flag("--cyclic", cyclic, "treat the universe as cyclic");
  app.add_option("--cap-power", cap_power, "full-power support cap");
  app.add_option("--depth", depth, "hyperfunction check depth");
  app.add_option("--bound", bound, "ZF8 induction bound");
  app.add_option("--seed", seed, "selector / suite seed");

  std::vector<std::string> args;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate f(x)");
  eval_cmd->add_option("terms", args)->expected(2);

  auto* compose_cmd = app.add_subcommand("compose", "F-composition f o g");
  compose_cmd->add_option("terms", args)->expected(2);

  auto* zcompose_cmd = app.add_subcommand("zcompose", "Z-composition of f, g");
  zcompose_cmd->add_option("terms", args)->expected(2);

  auto* succ_cmd = app.add_subcommand("succ", "F-successor of f");
  succ_cmd->add_option("terms", args)->expected(1);

  auto* phi_cmd = app.add_subcommand("phi", "the n-th phi ordinal");
  phi_cmd->add_option("terms", args)->expected(1);

  std::string predicate_text;
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction f|_F");
  restrict_cmd->add_option("terms", args)->expected(1);
  restrict_cmd->add_option("-p,--predicate", predicate_text, "formula F(x)")
      ->required();

  std::string alpha_text;
  auto* create_cmd = app.add_subcommand("create", "creation f|^alpha");
  create_cmd->add_option("terms", args)->expected(1);
  create_cmd->add_option("-a,--alpha", alpha_text, "alpha map")->required();

  bool power_full = false;
  bool power_restricted = false;
  auto* power_cmd = app.add_subcommand("power", "full or restricted power");
  power_cmd->add_option("terms", args)->expected(1);
  power_cmd->add_flag("--full", power_full, "full power");
  power_cmd->add_flag("--restricted", power_restricted, "restricted power");

  bool pair_decode = false;
  auto* pair_cmd = app.add_subcommand("pair", "ordered pair (a, b)");
  pair_cmd->add_option("terms", args)->expected(-1);
  pair_cmd->add_flag("--decode", pair_decode, "decode a pair term");

  auto* union_cmd = app.add_subcommand("union", "union of f (or of f, g)");
  union_cmd->add_option("terms", args)->expected(-1);

  auto* intersect_cmd =
      app.add_subcommand("intersect", "intersection of f (or of f, g)");
  intersect_cmd->add_option("terms", args)->expected(-1);

  auto* card_cmd = app.add_subcommand("card", "cardinality of f");
  card_cmd->add_option("terms", args)->expected(1);

  bool trivial = false;
  auto* choice_cmd = app.add_subcommand("choice", "F-choice witness for f");
  choice_cmd->add_option("terms", args)->expected(1);
  choice_cmd->add_flag("--trivial", trivial, "use the trivial-choice axiom");

  auto* pp_cmd = app.add_subcommand("pp", "partition-principle injection");
  pp_cmd->add_option("terms", args)->expected(1);

  std::string variant_text = "f11prime";
  auto* wellorder_cmd =
      app.add_subcommand("wellorder", "staged well-order attempt");
  wellorder_cmd->add_option("terms", args)->expected(1);
  wellorder_cmd->add_option("--variant", variant_text, "f11 | f11prime");

  std::string suite_name;
  auto* check_cmd = app.add_subcommand("check", "run a property suite");
  check_cmd->add_option("--suite", suite_name, "theorems | zf-axioms | choice-pp | hyper")
      ->required();

  auto* dot_cmd = app.add_subcommand("dot", "diagram of f in dot format");
  dot_cmd->add_option("terms", args)->expected(1);

  CLI11_PARSE(app, argc, argv);

  try {
    Universe u = universe_path.empty()
                     ? Universe(cyclic ? Universe::Mode::Cyclic
                                       : Universe::Mode::WellFounded)
                     : load_universe_file(universe_path, cyclic);
    u.caps().full_power_support = cap_power;

    auto term = [&](std::size_t i) { return resolve_name(u, args.at(i)); };

    if (eval_cmd->parsed()) {
      std::cout << show(u, u.eval(term(0), term(1))) << '\n';
    } else if (compose_cmd->parsed()) {
      std::cout << show(u, compose(u, term(0), term(1))) << '\n';
    } else if (zcompose_cmd->parsed()) {
      std::cout << show(u, z_compose(u, term(0), term(1))) << '\n';
    } else if (succ_cmd->parsed()) {
      std::cout << show(u, successor(u, term(0))) << '\n';
    } else if (phi_cmd->parsed()) {
      std::cout << show(u, phi(u, std::stoul(args.at(0)))) << '\n';
    } else if (restrict_cmd->parsed()) {
      PredPtr pred = parse_predicate(predicate_text, binding_table(u));
      std::cout << show(u, restrict_by(u, term(0), *pred)) << '\n';
    } else if (create_cmd->parsed()) {
      AlphaMap alpha = parse_alpha(u, alpha_text);
      std::cout << show(u, create(u, term(0), alpha)) << '\n';
    } else if (power_cmd->parsed()) {
      if (power_full == power_restricted)
        throw FlowError(Errc::SyntaxError,
                        "power needs exactly one of --full, --restricted");
      TermId p = power_full ? full_power(u, term(0))
                            : restricted_power(u, term(0));
      std::cout << show(u, p) << '\n';
      std::cout << "acts-on " << u.actions(p).size() << " terms\n";
    } else if (pair_cmd->parsed()) {
      if (pair_decode) {
        if (args.size() != 1)
          throw FlowError(Errc::SyntaxError, "pair --decode takes one term");
        auto parts = pair_parts(u, term(0));
        if (!parts) {
          std::cout << "not-a-pair\n";
          return 1;
        }
        std::cout << "first=" << show(u, parts->first)
                  << " second=" << show(u, parts->second) << " kind="
                  << (parts->kind == PairKind::Kuratowskian
                          ? "kuratowskian"
                          : "non-kuratowskian")
                  << '\n';
      } else {
        if (args.size() != 2)
          throw FlowError(Errc::SyntaxError, "pair takes two terms");
        std::cout << show(u, make_pair(u, term(0), term(1))) << '\n';
      }
    } else if (union_cmd->parsed() || intersect_cmd->parsed()) {
      bool is_union = union_cmd->parsed();
      TermId r;
      if (args.size() == 1)
        r = is_union ? union_over(u, term(0)) : intersection_over(u, term(0));
      else if (args.size() == 2)
        r = is_union ? union_binary(u, term(0), term(1))
                     : intersection_binary(u, term(0), term(1));
      else
        throw FlowError(Errc::SyntaxError, "expected one or two terms");
      std::cout << show(u, r) << '\n';
    } else if (card_cmd->parsed()) {
      std::cout << show(u, cardinality(u, term(0))) << '\n';
    } else if (choice_cmd->parsed()) {
      TermId c = trivial
                     ? f_trivial_choice(u, term(0))
                     : f_choice(u, term(0), ChoiceSelector::deterministic(seed));
      std::cout << show(u, c) << '\n';
    } else if (pp_cmd->parsed()) {
      std::cout << show(u, partition_injection(
                               u, term(0), ChoiceSelector::deterministic(seed)))
                << '\n';
    } else if (wellorder_cmd->parsed()) {
      WellOrderVariant variant;
      if (variant_text == "f11")
        variant = WellOrderVariant::F11;
      else if (variant_text == "f11prime")
        variant = WellOrderVariant::F11Prime;
      else
        throw FlowError(Errc::SyntaxError, "--variant must be f11 or f11prime");
      ChoiceSelector sel = (variant == WellOrderVariant::F11)
                               ? ChoiceSelector::adversarial()
                               : ChoiceSelector::deterministic(seed);
      WellOrderTrace trace = attempt_well_order(u, term(0), variant, sel);
      trace.print(std::cout, u);
    } else if (check_cmd->parsed()) {
      SuiteOptions options;
      options.seed = seed;
      options.infinity_bound = bound;
      options.hyper_depth = depth;
      CheckReport report = run_suite(u, suite_name, options);
      report.print(std::cout);
      return report.all_pass() ? 0 : 1;
    } else if (dot_cmd->parsed()) {
      std::cout << render_dot(u, term(0));
    }
  } catch (const FlowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
