// Universe file format, dot export, and name resolution for the CLI.
//
// File grammar, line oriented ('#' starts a comment):
//   cyclic                          optional header; enables forward refs
//   term NAME = { key -> image, ... }
//   node NAME: member, member       identity-style shorthand
// References are builtins (zero, one, phiN), earlier names, or — under the
// cyclic header — any name declared in the file.

#ifndef FLOWKIT_UNIVERSE_IO_HPP
#define FLOWKIT_UNIVERSE_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "flowkit/universe.hpp"

namespace flow {

Universe load_universe_text(const std::string& text, bool force_cyclic = false);
Universe load_universe_file(const std::string& path, bool force_cyclic = false);

// Serializes the bindings (and any unnamed terms they depend on) so that
// load_universe_text reproduces a universe with extensionally equal bindings.
std::string print_universe(const Universe& u);

// Resolves a CLI name: bindings first, then zero / one / phiN.
TermId resolve_name(Universe& u, std::string_view name);

// dot-language diagram of f: acted terms inside a cluster, one edge per
// table entry, image-only endpoints outside the cluster. Zero renders as a
// blank rectangle and One as the filled rectangle.
std::string render_dot(const Universe& u, TermId f);

}  // namespace flow

#endif  // FLOWKIT_UNIVERSE_IO_HPP
