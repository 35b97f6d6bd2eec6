// Structured outcome of a theorem/axiom suite run.

#ifndef FLOWKIT_REPORT_HPP
#define FLOWKIT_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flow {

struct CheckLine {
  bool pass = false;
  std::string label;    // e.g. "axiom=ZF3" or "theorem=compose-associative"
  std::string witness;  // term names involved, may be empty
};

struct CheckReport {
  std::vector<CheckLine> lines;

  void add(bool pass, std::string label, std::string witness = "");
  bool all_pass() const;
  std::size_t fail_count() const;
  // One line per instance: "PASS|FAIL <label> witness=<names>".
  void print(std::ostream& out) const;
};

}  // namespace flow

#endif  // FLOWKIT_REPORT_HPP
