#include "regyb/report.hpp"

namespace regyb {

std::string Report::text() const {
  std::string out;
  for (const Check& c : checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.axiom + "[" + std::to_string(c.level) + "]";
    if (!c.pass && c.diff) {
      out += " first-diff at (" + std::to_string(c.diff->row) + "," +
             std::to_string(c.diff->col) + "): lhs=" + c.diff->lhs +
             " rhs=" + c.diff->rhs;
    }
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
  }
  for (const std::string& w : warnings) {
    out += "WARN " + w + "\n";
  }
  return out;
}

}  // namespace regyb
