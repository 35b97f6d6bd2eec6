#include "flowkit/universe_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "flowkit/algebra.hpp"

namespace flow {

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t col,
                               const std::string& what) {
  throw FlowError(Errc::SyntaxError,
                  "line " + std::to_string(line) + ", col " +
                      std::to_string(col) + ": " + what);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_name(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), is_name_char);
}

struct Declaration {
  std::size_t line = 0;
  std::string name;
  bool identity_shorthand = false;             // "node NAME: members"
  std::vector<std::pair<std::string, std::string>> entries;
  std::string alias;                           // "term NAME = ref"
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Declaration parse_term_line(const std::string& body, std::size_t line) {
  Declaration d;
  d.line = line;
  std::size_t eq = body.find('=');
  if (eq == std::string::npos) syntax_error(line, body.size(), "expected '='");
  d.name = trim(body.substr(0, eq));
  if (!valid_name(d.name)) syntax_error(line, 6, "expected a term name");
  std::string rhs = trim(body.substr(eq + 1));
  if (rhs.empty()) syntax_error(line, eq + 2, "expected a table or a name");
  if (rhs.front() != '{') {
    if (!valid_name(rhs)) syntax_error(line, eq + 2, "expected a table or a name");
    d.alias = rhs;
    return d;
  }
  if (rhs.back() != '}')
    syntax_error(line, body.size(), "expected '}' closing the table");
  std::string inner = trim(rhs.substr(1, rhs.size() - 2));
  if (inner.empty()) return d;
  for (const std::string& item : split(inner, ',')) {
    std::size_t arrow = item.find("->");
    if (arrow == std::string::npos)
      syntax_error(line, eq + 2, "expected 'key -> image' in table entry");
    std::string key = trim(item.substr(0, arrow));
    std::string image = trim(item.substr(arrow + 2));
    if (!valid_name(key) || !valid_name(image))
      syntax_error(line, eq + 2, "bad term reference in table entry");
    d.entries.emplace_back(key, image);
  }
  return d;
}

Declaration parse_node_line(const std::string& body, std::size_t line) {
  Declaration d;
  d.line = line;
  d.identity_shorthand = true;
  std::size_t colon = body.find(':');
  if (colon == std::string::npos)
    syntax_error(line, body.size(), "expected ':'");
  d.name = trim(body.substr(0, colon));
  if (!valid_name(d.name)) syntax_error(line, 6, "expected a node name");
  std::string members = trim(body.substr(colon + 1));
  if (!members.empty())
    for (const std::string& m : split(members, ',')) {
      if (!valid_name(m)) syntax_error(line, colon + 2, "bad member name");
      d.entries.emplace_back(m, m);
    }
  return d;
}

std::optional<TermId> resolve_builtin(Universe& u, const std::string& name) {
  if (name == "zero") return Universe::zero();
  if (name == "one") return Universe::one();
  if (name.size() > 3 && name.compare(0, 3, "phi") == 0 &&
      name.find_first_not_of("0123456789", 3) == std::string::npos)
    return phi(u, std::stoul(name.substr(3)));
  return std::nullopt;
}

}  // namespace

TermId resolve_name(Universe& u, std::string_view name) {
  std::string key(name);
  if (auto bound = u.lookup(key)) return *bound;
  if (auto builtin = resolve_builtin(u, key)) return *builtin;
  throw FlowError(Errc::UnboundName, "'" + key + "'");
}

Universe load_universe_text(const std::string& text, bool force_cyclic) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool cyclic = force_cyclic;
  std::vector<Declaration> decls;
  bool seen_decl = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "cyclic") {
      if (seen_decl)
        syntax_error(lineno, 1, "'cyclic' must precede all declarations");
      cyclic = true;
      continue;
    }
    seen_decl = true;
    if (line.rfind("term ", 0) == 0)
      decls.push_back(parse_term_line(trim(line.substr(5)), lineno));
    else if (line.rfind("node ", 0) == 0)
      decls.push_back(parse_node_line(trim(line.substr(5)), lineno));
    else
      syntax_error(lineno, 1, "expected 'term', 'node' or 'cyclic'");
  }

  Universe u(cyclic ? Universe::Mode::Cyclic : Universe::Mode::WellFounded);
  std::unordered_set<std::string> declared;
  for (const Declaration& d : decls) {
    if (declared.count(d.name))
      syntax_error(d.line, 1, "duplicate declaration of '" + d.name + "'");
    declared.insert(d.name);
  }

  auto resolve = [&](const std::string& ref, std::size_t line) -> TermId {
    if (auto bound = u.lookup(ref)) return *bound;
    if (auto builtin = resolve_builtin(u, ref)) return *builtin;
    if (declared.count(ref))
      throw FlowError(Errc::CycleInWellFoundedMode,
                      "line " + std::to_string(line) + ": '" + ref +
                          "' is declared later; forward references need the "
                          "cyclic header");
    throw FlowError(Errc::UnboundName,
                    "line " + std::to_string(line) + ": '" + ref + "'");
  };

  if (!cyclic) {
    for (const Declaration& d : decls) {
      if (!d.alias.empty()) {
        u.bind(d.name, resolve(d.alias, d.line));
        continue;
      }
      std::vector<Entry> entries;
      for (const auto& [k, v] : d.entries)
        entries.push_back(Entry{resolve(k, d.line), resolve(v, d.line)});
      u.bind(d.name, u.intern(std::move(entries)));
    }
    return u;
  }

  // Cyclic: declare every name first, then fill the tables.
  for (const Declaration& d : decls)
    if (d.alias.empty()) u.bind(d.name, u.declare_cyclic_node());
  for (const Declaration& d : decls) {
    if (!d.alias.empty()) {
      u.bind(d.name, resolve(d.alias, d.line));
      continue;
    }
    std::vector<Entry> entries;
    for (const auto& [k, v] : d.entries)
      entries.push_back(Entry{resolve(k, d.line), resolve(v, d.line)});
    u.define_cyclic_node(*u.lookup(d.name), std::move(entries));
  }
  return u;
}

Universe load_universe_file(const std::string& path, bool force_cyclic) {
  std::ifstream in(path);
  if (!in)
    throw FlowError(Errc::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_universe_text(buffer.str(), force_cyclic);
}

std::string print_universe(const Universe& u) {
  std::ostringstream out;
  bool cyclic = u.mode() == Universe::Mode::Cyclic;
  if (cyclic) out << "cyclic\n";

  // Every map reachable from a binding needs a printable reference: its
  // bound name, a builtin spelling, or a synthesized declaration.
  std::unordered_map<std::uint32_t, std::string> names;
  std::size_t synth = 0;
  std::vector<TermId> order;  // declarations, dependencies first
  std::unordered_set<std::uint32_t> planned;

  auto builtin_name = [&](TermId t) -> std::string {
    std::string n = u.name_of(t);
    if (n == "zero" || n == "one" || (n.rfind("phi", 0) == 0 && n.size() > 3))
      return n;
    return "";
  };

  auto plan = [&](auto&& self, TermId t) -> void {
    if (names.count(t.value) || !builtin_name(t).empty()) return;
    if (planned.count(t.value)) return;  // cyclic back-reference
    planned.insert(t.value);
    for (Entry e : u.node(t).table) {
      if (e.key != t) self(self, e.key);
      if (e.image != t) self(self, e.image);
    }
    std::string name = u.name_of(t);
    if (name.empty()) name = "_t" + std::to_string(synth++);
    names.emplace(t.value, name);
    order.push_back(t);
  };
  for (const auto& [name, id] : u.bindings())
    if (u.node(id).kind == NodeKind::Map) plan(plan, id);

  auto ref = [&](TermId t) -> std::string {
    auto it = names.find(t.value);
    if (it != names.end()) return it->second;
    std::string b = builtin_name(t);
    return b.empty() ? "t" + std::to_string(t.value) : b;
  };

  for (TermId t : order) {
    out << "term " << names[t.value] << " = {";
    bool first = true;
    for (Entry e : u.node(t).table) {
      out << (first ? " " : ", ") << ref(e.key) << " -> " << ref(e.image);
      first = false;
    }
    out << (first ? "}" : " }") << '\n';
  }
  // Bindings that alias builtins or already-declared maps.
  for (const auto& [name, id] : u.bindings()) {
    auto it = names.find(id.value);
    if (it != names.end() && it->second == name) continue;
    out << "term " << name << " = " << ref(id) << '\n';
  }
  return out.str();
}

std::string render_dot(const Universe& u, TermId f) {
  std::ostringstream out;
  auto label = [&](TermId t) {
    std::string n = u.name_of(t);
    return n.empty() ? "t" + std::to_string(t.value) : n;
  };
  std::string fname = label(f);
  out << "digraph flow {\n";
  out << "  rankdir=LR;\n";
  if (f == Universe::one()) {
    // The identity function: the filled black rectangle.
    out << "  subgraph cluster_term {\n";
    out << "    label=\"" << fname << "\";\n";
    out << "    style=filled;\n    color=black;\n";
    out << "  }\n}\n";
    return out.str();
  }
  const TermNode& n = u.node(f);
  out << "  subgraph cluster_term {\n";
  out << "    label=\"" << fname << "\";\n";
  for (Entry e : n.table) out << "    \"" << label(e.key) << "\";\n";
  out << "  }\n";
  // Images the term does not act on sit outside the rectangle: no arrow
  // starts at them.
  std::vector<TermId> outside;
  for (Entry e : n.table) {
    bool is_key = false;
    for (Entry k : n.table)
      if (k.key == e.image) is_key = true;
    if (!is_key && e.image != f) outside.push_back(e.image);
  }
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  for (TermId t : outside) out << "  \"" << label(t) << "\";\n";
  for (Entry e : n.table)
    out << "  \"" << label(e.key) << "\" -> \""
        << (e.image == f ? fname : label(e.image)) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace flow
