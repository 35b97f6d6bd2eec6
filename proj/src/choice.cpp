#include "flowkit/choice.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "flowkit/algebra.hpp"
#include "flowkit/zf.hpp"

namespace flow {

namespace {

struct Picker {
  ChoiceSelector sel;
  std::mt19937_64 rng;

  explicit Picker(const ChoiceSelector& s) : sel(s), rng(s.seed) {}

  // Adversarial picks from the back: the witness least likely to coincide
  // with a previously fixed least-id choice.
  std::size_t index(std::size_t size) {
    if (size <= 1) return 0;
    if (sel.strategy == ChoiceSelector::Strategy::Adversarial) return size - 1;
    return static_cast<std::size_t>(rng() % size);
  }

  // Two distinct positions to transpose. Adversarial swaps the two front
  // images: exactly the churn the F11 well-ordering argument leans on.
  std::pair<std::size_t, std::size_t> transposition(std::size_t size) {
    if (sel.strategy == ChoiceSelector::Strategy::Adversarial) return {0, 1};
    std::size_t i = static_cast<std::size_t>(rng() % size);
    std::size_t j = static_cast<std::size_t>(rng() % (size - 1));
    if (j >= i) ++j;
    return {i, j};
  }
};

std::vector<TermId> distinct_images(const Universe& u, TermId f) {
  std::vector<TermId> images;
  for (Entry e : u.node(f).table) images.push_back(e.image);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace

TermId f_choice(Universe& u, TermId f, const ChoiceSelector& sel) {
  if (!is_emergent(u, f))
    throw FlowError(Errc::NotEmergent, u.display(f));
  std::vector<TermId> images = distinct_images(u, f);
  if (images.size() < 2)
    throw FlowError(Errc::GuardFailed,
                    "f is constant over its actions; F11 does not apply");
  Picker picker(sel);
  // One preimage per image, then one transposition of two images: the
  // smallest witness of the "no restriction of f" clause.
  std::vector<TermId> preimage(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<TermId> candidates;
    for (Entry e : u.node(f).table)
      if (e.image == images[i]) candidates.push_back(e.key);
    std::sort(candidates.begin(), candidates.end());
    preimage[i] = candidates[picker.index(candidates.size())];
  }
  auto [i, j] = picker.transposition(images.size());
  std::vector<TermId> target = images;
  std::swap(target[i], target[j]);
  std::vector<Entry> table;
  for (std::size_t k = 0; k < images.size(); ++k)
    table.push_back(Entry{preimage[k], target[k]});
  return u.intern(std::move(table));
}

TermId f_trivial_choice(Universe& u, TermId f) {
  if (!is_emergent(u, f))
    throw FlowError(Errc::NotEmergent, u.display(f));
  if (u.node(f).table.empty())
    throw FlowError(Errc::GuardFailed, "f does not act on any term");
  if (distinct_images(u, f).size() != 1)
    throw FlowError(Errc::GuardFailed,
                    "f is not constant over its actions; use f_choice");
  Entry least = u.node(f).table.front();  // keys are stored sorted
  return u.intern({Entry{least.key, least.image}});
}

TermId partition_injection(Universe& u, TermId f, const ChoiceSelector& sel) {
  if (u.node(f).table.empty())
    throw FlowError(Errc::GuardFailed, "f does not act on any term");
  TermId c = (distinct_images(u, f).size() >= 2) ? f_choice(u, f, sel)
                                                 : f_trivial_choice(u, f);
  return create(u, image(u, f), AlphaMap::inverse_of(c));
}

bool f_choice_clauses_hold(Universe& u, TermId c, TermId f) {
  return is_injective(u, c) && lurks(u, c, f) &&
         is_restriction(u, domain(u, c), domain(u, f)) &&
         u.extensional_eq(image(u, c), image(u, f)) &&
         !is_restriction(u, c, f);
}

bool WellOrderTrace::all_extend() const {
  for (const WellOrderStage& s : stages)
    if (!s.extends_previous) return false;
  return true;
}

void WellOrderTrace::print(std::ostream& out, const Universe& u) const {
  for (const WellOrderStage& s : stages) {
    std::string name = u.name_of(s.choice);
    out << "step=" << s.step << " choice="
        << (name.empty() ? u.display(s.choice) : name)
        << " extends=" << (s.extends_previous ? "true" : "false") << '\n';
  }
}

WellOrderTrace attempt_well_order(Universe& u, TermId f,
                                  WellOrderVariant variant,
                                  const ChoiceSelector& sel) {
  if (!is_zf_set(u, f)) throw FlowError(Errc::NotAZfSet, u.display(f));
  std::vector<TermId> members = u.actions(f);
  std::sort(members.begin(), members.end());
  WellOrderTrace trace;
  Picker picker(sel);
  std::vector<std::pair<TermId, std::size_t>> assigned;  // member -> ordinal
  std::vector<TermId> unassigned = members;
  TermId previous;
  for (std::size_t k = 0; k < members.size(); ++k) {
    // Stage surjection f_k: fixed members keep their ordinals, the rest all
    // map to phi_k.
    std::vector<Entry> stage;
    for (auto [m, ord] : assigned) stage.push_back(Entry{m, phi(u, ord)});
    for (TermId m : unassigned) stage.push_back(Entry{m, phi(u, k)});
    TermId fk = u.intern(std::move(stage));
    TermId ck;
    if (variant == WellOrderVariant::F11Prime) {
      // F11': the choice must be a restriction of f_k, so it keeps every
      // fixed assignment and adds one new member at phi_k.
      TermId pick = unassigned[picker.index(unassigned.size())];
      std::vector<Entry> table;
      for (auto [m, ord] : assigned) table.push_back(Entry{m, phi(u, ord)});
      table.push_back(Entry{pick, phi(u, k)});
      ck = u.intern(std::move(table));
      assigned.emplace_back(pick, k);
      std::erase(unassigned, pick);
    } else {
      // F11: the choice must NOT be a restriction of f_k. Stage 0 is the
      // constant surjection, covered by the trivial-choice complement.
      ck = (k == 0) ? f_trivial_choice(u, fk) : f_choice(u, fk, sel);
      assigned.clear();
      unassigned = members;
      for (Entry e : u.node(ck).table) {
        std::size_t ord = 0;
        while (phi(u, ord) != e.image) ++ord;
        assigned.emplace_back(e.key, ord);
        std::erase(unassigned, e.key);
      }
    }
    bool extends = (k == 0) || is_restriction(u, previous, ck);
    trace.stages.push_back(WellOrderStage{k, ck, extends});
    previous = ck;
  }
  return trace;
}

}  // namespace flow
