#include "flowkit/report.hpp"

#include <ostream>

namespace flow {

void CheckReport::add(bool pass, std::string label, std::string witness) {
  lines.push_back(CheckLine{pass, std::move(label), std::move(witness)});
}

bool CheckReport::all_pass() const {
  for (const CheckLine& line : lines)
    if (!line.pass) return false;
  return true;
}

std::size_t CheckReport::fail_count() const {
  std::size_t n = 0;
  for (const CheckLine& line : lines)
    if (!line.pass) ++n;
  return n;
}

void CheckReport::print(std::ostream& out) const {
  for (const CheckLine& line : lines) {
    out << (line.pass ? "PASS" : "FAIL") << ' ' << line.label;
    if (!line.witness.empty()) out << " witness=" << line.witness;
    out << '\n';
  }
}

}  // namespace flow
