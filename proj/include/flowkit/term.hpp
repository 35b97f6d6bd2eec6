// Core vocabulary of the flow kernel: term handles, node representation,
// error codes, and enumeration caps shared by every module.

#ifndef FLOWKIT_TERM_HPP
#define FLOWKIT_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flow {

// Opaque handle to an interned term node. Only meaningful together with the
// Universe that produced it; two TermIds are equal iff they denote the same
// node of that universe.
struct TermId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(TermId, TermId) = default;
};

// One table entry: f(key) = image.
struct Entry {
  TermId key;
  TermId image;
  friend constexpr auto operator<=>(Entry, Entry) = default;
};

// Zero is the rigid function (every image is Zero itself), One the identity
// function. Neither can be a finite table, so both are sentinels. Everything
// else is a Map: a finite action table with implicit self-reference f(f)=f
// and implicit Zero images for absent keys.
enum class NodeKind : std::uint8_t { Zero, One, Map };

struct TermNode {
  NodeKind kind = NodeKind::Map;
  // Canonical: sorted by key, unique keys, no Zero images, no Zero keys.
  std::vector<Entry> table;
  // Identity-bearing node of a cyclic universe; never deduplicated.
  bool cyclic = false;
};

enum class Errc {
  CycleInWellFoundedMode,
  ForbiddenOneCycle,
  InvalidTable,
  UnboundedSupport,
  CapExceeded,
  NotEmergent,
  NonEmergentSelected,
  NonEmergentComponent,
  DefinitionClauseViolated,
  AlphaNotFunctional,
  NotAZfSet,
  NotEquipotent,
  GuardFailed,
  ZCompositionPreconditionFailed,
  SyntaxError,
  UnboundName,
  UnknownNode,
};

const char* errc_name(Errc code);

class FlowError : public std::runtime_error {
 public:
  FlowError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Enumeration limits. Every exhaustive construction checks its cap and fails
// with CapExceeded instead of silently truncating.
struct Caps {
  std::size_t phi_ladder = 64;
  std::size_t full_power_support = 5;
  std::size_t restricted_power_members = 12;
  std::size_t sigma_chain = 64;
  std::size_t model_pairs = 1024;
  std::size_t rank = 4;
};

}  // namespace flow

template <>
struct std::hash<flow::TermId> {
  std::size_t operator()(flow::TermId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // FLOWKIT_TERM_HPP
