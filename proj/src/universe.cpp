#include "flowkit/universe.hpp"

#include <algorithm>
#include <sstream>

namespace flow {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::CycleInWellFoundedMode: return "CycleInWellFoundedMode";
    case Errc::ForbiddenOneCycle: return "ForbiddenOneCycle";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::UnboundedSupport: return "UnboundedSupport";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotEmergent: return "NotEmergent";
    case Errc::NonEmergentSelected: return "NonEmergentSelected";
    case Errc::NonEmergentComponent: return "NonEmergentComponent";
    case Errc::DefinitionClauseViolated: return "DefinitionClauseViolated";
    case Errc::AlphaNotFunctional: return "AlphaNotFunctional";
    case Errc::NotAZfSet: return "NotAZfSet";
    case Errc::NotEquipotent: return "NotEquipotent";
    case Errc::GuardFailed: return "GuardFailed";
    case Errc::ZCompositionPreconditionFailed:
      return "ZCompositionPreconditionFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::UnknownNode: return "UnknownNode";
  }
  return "FlowError";
}

std::size_t Universe::TableHash::operator()(
    const std::vector<Entry>& t) const noexcept {
  std::size_t h = t.size();
  for (const Entry& e : t) {
    h ^= (std::size_t{e.key.value} << 32 | e.image.value) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

Universe::Universe(Mode mode)
    : mode_(mode),
      axiom_mode_(mode == Mode::Cyclic ? AxiomMode::Hyperfunctions
                                       : AxiomMode::WellFoundedness) {
  nodes_.push_back(TermNode{NodeKind::Zero, {}, false});
  nodes_.push_back(TermNode{NodeKind::One, {}, false});
  nodes_.push_back(TermNode{NodeKind::Map, {}, false});  // phi0
  interned_.emplace(std::vector<Entry>{}, phi0().value);
  phi_cache.push_back(phi0());
}

const TermNode& Universe::node(TermId id) const {
  if (!contains(id))
    throw FlowError(Errc::UnknownNode,
                    "no term with id " + std::to_string(id.value));
  return nodes_[id.value];
}

std::vector<Entry> Universe::canonicalize(std::vector<Entry> table,
                                          bool allow_self_key,
                                          TermId self) const {
  std::vector<Entry> out;
  out.reserve(table.size());
  for (const Entry& e : table) {
    if (!contains(e.key) || !contains(e.image))
      throw FlowError(Errc::UnknownNode, "table references a missing term");
    if (e.image == zero()) continue;  // default image, implicit
    if (e.key == self && allow_self_key) {
      // f(f) = f is implicit; any other self image contradicts F2.
      if (e.image != self)
        throw FlowError(Errc::InvalidTable,
                        "self image must equal the node (F2)");
      continue;
    }
    if (e.key == zero())
      throw FlowError(Errc::InvalidTable,
                      "no term maps Zero to a non-Zero image");
    if (e.key == one() && e.image == one())
      throw FlowError(Errc::InvalidTable,
                      "only One is flexible with One");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](Entry a, Entry b) { return a.key < b.key; });
  std::vector<Entry> dedup;
  for (const Entry& e : out) {
    if (!dedup.empty() && dedup.back().key == e.key) {
      if (dedup.back().image != e.image)
        throw FlowError(Errc::InvalidTable,
                        "conflicting images for one key");
      continue;
    }
    dedup.push_back(e);
  }
  // t -> One together with One -> t is the impossible two-cycle through One.
  for (const Entry& e : dedup) {
    if (e.image != one() || e.key == one()) continue;
    auto it = std::lower_bound(
        dedup.begin(), dedup.end(), one(),
        [](Entry a, TermId k) { return a.key < k; });
    if (it != dedup.end() && it->key == one() && it->image == e.key)
      throw FlowError(Errc::ForbiddenOneCycle,
                      "table contains t -> One and One -> t");
  }
  return dedup;
}

TermId Universe::intern(std::vector<Entry> table) {
  std::vector<Entry> canon =
      canonicalize(std::move(table), /*allow_self_key=*/false, TermId{});
  if (canon.empty()) return phi0();
  auto it = interned_.find(canon);
  if (it != interned_.end()) return TermId{it->second};
  TermId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(TermNode{NodeKind::Map, canon, false});
  interned_.emplace(std::move(canon), id.value);
  return id;
}

TermId Universe::declare_cyclic_node() {
  if (mode_ != Mode::Cyclic)
    throw FlowError(Errc::CycleInWellFoundedMode,
                    "cyclic nodes require a Cyclic-mode universe");
  TermId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(TermNode{NodeKind::Map, {}, true});
  return id;
}

void Universe::define_cyclic_node(TermId id, std::vector<Entry> table) {
  if (mode_ != Mode::Cyclic)
    throw FlowError(Errc::CycleInWellFoundedMode,
                    "cyclic nodes require a Cyclic-mode universe");
  if (!contains(id) || !nodes_[id.value].cyclic)
    throw FlowError(Errc::UnknownNode, "not a declared cyclic node");
  nodes_[id.value].table =
      canonicalize(std::move(table), /*allow_self_key=*/true, id);
}

TermId Universe::intern_cyclic(std::vector<Entry> table) {
  TermId id = declare_cyclic_node();
  define_cyclic_node(id, std::move(table));
  return id;
}

TermId Universe::eval(TermId f, TermId x) const {
  const TermNode& n = node(f);
  if (!contains(x))
    throw FlowError(Errc::UnknownNode,
                    "no term with id " + std::to_string(x.value));
  if (x == f) return f;  // F2
  switch (n.kind) {
    case NodeKind::Zero: return zero();
    case NodeKind::One: return x;
    case NodeKind::Map: {
      auto it = std::lower_bound(
          n.table.begin(), n.table.end(), x,
          [](Entry e, TermId k) { return e.key < k; });
      if (it != n.table.end() && it->key == x) return it->image;
      return zero();
    }
  }
  return zero();
}

bool Universe::acts_on(TermId f, TermId t) const {
  return t != f && eval(f, t) != zero();
}

bool Universe::extensional_eq(TermId f, TermId g) const {
  if (f == g) return true;
  if (mode_ == Mode::WellFounded) return false;  // canonical store
  const TermNode& nf = node(f);
  const TermNode& ng = node(g);
  if (nf.kind != NodeKind::Map || ng.kind != NodeKind::Map) return false;
  // Compare tables with f and g identified as one term. Occurrences of
  // either node substitute to a shared marker; a marker key folds into the
  // implicit self-reference and so must carry a marker image (this is what
  // honours both clauses of F1).
  auto canon = [&](const TermNode& n) {
    std::vector<Entry> out;
    for (Entry e : n.table) {
      TermId key = (e.key == f || e.key == g) ? f : e.key;
      TermId image = (e.image == f || e.image == g) ? f : e.image;
      if (key == f) {
        if (image != f) return std::optional<std::vector<Entry>>{};
        continue;
      }
      out.push_back(Entry{key, image});
    }
    std::sort(out.begin(), out.end(),
              [](Entry a, Entry b) { return a.key < b.key; });
    return std::optional(out);
  };
  auto tf = canon(nf);
  auto tg = canon(ng);
  return tf && tg && *tf == *tg;
}

bool Universe::similar(TermId f, TermId g) const {
  if (f == g) return true;
  if (f == one() || g == one()) return false;  // finite tables never match One
  std::vector<TermId> joint;
  auto add_keys = [&](TermId t) {
    if (node(t).kind != NodeKind::Map) return;
    for (Entry e : node(t).table) joint.push_back(e.key);
  };
  add_keys(f);
  add_keys(g);
  joint.push_back(f);
  joint.push_back(g);
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
  for (TermId t : joint) {
    if (acts_on(f, t) != acts_on(g, t)) return false;
    if (t != f && t != g && eval(f, t) != eval(g, t)) return false;
  }
  return true;
}

std::vector<TermId> Universe::actions(TermId f) const {
  const TermNode& n = node(f);
  if (n.kind == NodeKind::One)
    throw FlowError(Errc::UnboundedSupport, "One acts on every term");
  std::vector<TermId> out;
  out.reserve(n.table.size());
  for (Entry e : n.table) out.push_back(e.key);
  return out;
}

std::vector<TermId> Universe::support(TermId f) const {
  const TermNode& n = node(f);
  if (n.kind == NodeKind::One)
    throw FlowError(Errc::UnboundedSupport, "One has unbounded support");
  std::vector<TermId> out;
  out.reserve(n.table.size() * 2);
  for (Entry e : n.table) {
    out.push_back(e.key);
    if (e.image != zero()) out.push_back(e.image);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Universe::bind(std::string name, TermId id) {
  if (!contains(id))
    throw FlowError(Errc::UnknownNode, "binding to a missing term");
  auto it = by_name_.find(name);
  if (it != by_name_.end()) {
    it->second = id;
    for (auto& nb : named_)
      if (nb.first == name) nb.second = id;
    return;
  }
  by_name_.emplace(name, id);
  named_.emplace_back(std::move(name), id);
}

std::optional<TermId> Universe::lookup(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string Universe::name_of(TermId id) const {
  for (const auto& [name, bound] : named_)
    if (bound == id) return name;
  if (id == zero()) return "zero";
  if (id == one()) return "one";
  for (std::size_t n = 0; n < phi_cache.size(); ++n)
    if (phi_cache[n] == id) return "phi" + std::to_string(n);
  return "";
}

std::string Universe::display(TermId id) const {
  std::string name = name_of(id);
  if (!name.empty()) return name;
  const TermNode& n = node(id);
  if (n.kind != NodeKind::Map) return "t" + std::to_string(id.value);
  std::ostringstream out;
  auto short_ref = [&](TermId t) {
    std::string r = name_of(t);
    if (!r.empty()) return r;
    if (node(t).cyclic) return "t" + std::to_string(t.value);
    return display(t);
  };
  out << "{ ";
  bool first = true;
  for (Entry e : n.table) {
    if (!first) out << ", ";
    first = false;
    out << short_ref(e.key) << " -> " << short_ref(e.image);
  }
  out << (first ? "}" : " }");
  return out.str();
}

}  // namespace flow
