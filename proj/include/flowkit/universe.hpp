// Term store: interning, evaluation, action, equality and similarity.
// A Universe is single-writer: interning appends nodes; every read operation
// is safe to run concurrently once the terms involved exist.

#ifndef FLOWKIT_UNIVERSE_HPP
#define FLOWKIT_UNIVERSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flowkit/term.hpp"

namespace flow {

class Universe {
 public:
  enum class Mode { WellFounded, Cyclic };
  // Well-Foundedness and Hyperfunctions are mutually inconsistent axioms;
  // exactly one is active per universe. Hyper-ZF-Sets rides along with
  // Hyperfunctions.
  enum class AxiomMode { WellFoundedness, Hyperfunctions };

  explicit Universe(Mode mode = Mode::WellFounded);

  Mode mode() const { return mode_; }
  AxiomMode axiom_mode() const { return axiom_mode_; }
  void set_axiom_mode(AxiomMode m) { axiom_mode_ = m; }

  Caps& caps() { return caps_; }
  const Caps& caps() const { return caps_; }

  static constexpr TermId zero() { return TermId{0}; }
  static constexpr TermId one() { return TermId{1}; }
  static constexpr TermId phi0() { return TermId{2}; }

  std::size_t size() const { return nodes_.size(); }
  bool contains(TermId id) const { return id.value < nodes_.size(); }
  const TermNode& node(TermId id) const;
  bool is_map(TermId id) const { return node(id).kind == NodeKind::Map; }
  bool is_cyclic_node(TermId id) const { return node(id).cyclic; }

  // Canonical interning. Drops Zero-image entries, rejects inconsistent
  // tables, returns Phi0 for the empty table. Structurally equal tables
  // always receive the same TermId.
  TermId intern(std::vector<Entry> table);

  // Cyclic-node channel (Cyclic mode only). Nodes declared here carry
  // identity independent of their table content and are never deduplicated.
  TermId declare_cyclic_node();
  void define_cyclic_node(TermId id, std::vector<Entry> table);
  TermId intern_cyclic(std::vector<Entry> table);

  // Total evaluation: f(f) = f, Zero(x) = Zero, One(x) = x, table image
  // otherwise, defaulting to Zero.
  TermId eval(TermId f, TermId x) const;

  // f[t]: t != f and f(t) != Zero.
  bool acts_on(TermId f, TermId t) const;

  // In WellFounded mode extensional equality is TermId equality. In Cyclic
  // mode it compares tables with f and g identified, honouring F1's
  // symmetric self-reference clauses; sentinels are equal only to themselves.
  bool extensional_eq(TermId f, TermId g) const;

  // f ~ g: same action sets, same images away from f and g themselves.
  bool similar(TermId f, TermId g) const;

  // Table keys of f (empty for Zero; UnboundedSupport for One).
  std::vector<TermId> actions(TermId f) const;
  // Keys plus images of f, sorted, Zero excluded; UnboundedSupport for One.
  std::vector<TermId> support(TermId f) const;

  void bind(std::string name, TermId id);
  std::optional<TermId> lookup(std::string_view name) const;
  const std::vector<std::pair<std::string, TermId>>& bindings() const {
    return named_;
  }
  // Bound or builtin name, "" if the term has none.
  std::string name_of(TermId id) const;
  // Human-readable rendering: a name when available, otherwise the table.
  std::string display(TermId id) const;

  // Plumbing shared with the algebra module.
  std::vector<TermId> phi_cache;                       // phi ladder memo
  std::unordered_map<std::uint32_t, std::uint32_t> sigma_memo;  // cyclic nodes

 private:
  struct TableHash {
    std::size_t operator()(const std::vector<Entry>& t) const noexcept;
  };

  std::vector<Entry> canonicalize(std::vector<Entry> table,
                                  bool allow_self_key, TermId self) const;

  Mode mode_;
  AxiomMode axiom_mode_;
  Caps caps_;
  std::vector<TermNode> nodes_;
  std::unordered_map<std::vector<Entry>, std::uint32_t, TableHash> interned_;
  std::vector<std::pair<std::string, TermId>> named_;
  std::unordered_map<std::string, TermId, std::hash<std::string>,
                     std::equal_to<>> by_name_;
};

}  // namespace flow

#endif  // FLOWKIT_UNIVERSE_HPP
