// F-Choice constructions: the F11 witness, the trivial-choice complement,
// the Partition Principle injection, and the finite simulation of the
// F11 vs F11' well-ordering contrast.

#ifndef FLOWKIT_CHOICE_HPP
#define FLOWKIT_CHOICE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "flowkit/universe.hpp"

namespace flow {

// F11 asserts a witness exists; the selector picks one, reproducibly.
// Deterministic draws from the seed; Adversarial picks the witness that
// maximally disturbs previously fixed assignments (still deterministic).
struct ChoiceSelector {
  enum class Strategy { Deterministic, Adversarial };
  Strategy strategy = Strategy::Deterministic;
  std::uint64_t seed = 0;

  static ChoiceSelector deterministic(std::uint64_t seed) {
    return {Strategy::Deterministic, seed};
  }
  static ChoiceSelector adversarial() {
    return {Strategy::Adversarial, 0};
  }
};

// F11: injective c with c lurking f, Dom_c subseteq Dom_f, Im_c = Im_f and
// c not a restriction of f. Construction: one preimage per image, then one
// transposition of two images. GuardFailed when f is constant or empty.
TermId f_choice(Universe& u, TermId f, const ChoiceSelector& sel);

// F11_T: for constant f, the single-action restriction on the least key.
TermId f_trivial_choice(Universe& u, TermId f);

// Theorem "Partition Principle": the reverse injection g with
// domain(g) = image(f) and image(g) inside domain(f), built by creating
// from the inverse of the choice function.
TermId partition_injection(Universe& u, TermId f, const ChoiceSelector& sel);

// Checks the five F11 clauses for c against f, literally.
bool f_choice_clauses_hold(Universe& u, TermId c, TermId f);

enum class WellOrderVariant { F11, F11Prime };

struct WellOrderStage {
  std::size_t step = 0;
  TermId choice;                 // the stage's injection onto {phi0..phik}
  bool extends_previous = true;  // previous choice is a restriction of this
};

struct WellOrderTrace {
  std::vector<WellOrderStage> stages;

  bool all_extend() const;
  // "step=<k> choice=<name> extends=<bool>" per stage.
  void print(std::ostream& out, const Universe& u) const;
};

// Stages the transfinite-recursion mechanism at finite scale. Under
// F11Prime every stage's choice is a restriction of the stage surjection,
// so the trace extends monotonically into a total well-order of acts(f).
// Under F11 the choice must NOT be a restriction, which forces churn:
// with at least two members some stage fails to extend the previous one.
WellOrderTrace attempt_well_order(Universe& u, TermId f,
                                  WellOrderVariant variant,
                                  const ChoiceSelector& sel);

}  // namespace flow

#endif  // FLOWKIT_CHOICE_HPP
