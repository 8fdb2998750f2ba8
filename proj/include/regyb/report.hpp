#ifndef REGYB_REPORT_HPP_
#define REGYB_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regyb/matrix.hpp"

namespace regyb {

// One verified identity. `level` is 1-based to match the symbol names used
// in bundles (f1, e1, R1, ...).
struct Check {
  std::string axiom;
  std::size_t level = 0;
  bool pass = false;
  std::optional<EntryDiff> diff;
  std::string note;  // extra witness context, e.g. which equation failed
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool ok() const {
    for (const Check& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void add_pass(std::string axiom, std::size_t level) {
    checks.push_back({std::move(axiom), level, true, std::nullopt, ""});
  }
  void add_fail(std::string axiom, std::size_t level,
                std::optional<EntryDiff> diff, std::string note = "") {
    checks.push_back(
        {std::move(axiom), level, false, std::move(diff), std::move(note)});
  }

  // Records pass/fail for lhs == rhs and keeps the first differing entry as
  // the witness.
  template <class K>
  void add_equal(std::string axiom, std::size_t level, const Mat<K>& lhs,
                 const Mat<K>& rhs, std::string note = "") {
    auto diff = first_diff(lhs, rhs);
    if (diff) {
      add_fail(std::move(axiom), level, std::move(diff), std::move(note));
    } else {
      checks.push_back({std::move(axiom), level, true, std::nullopt,
                        std::move(note)});
    }
  }

  void merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& w : other.warnings) warnings.push_back(std::move(w));
  }

  // Stable line-per-check rendering; no timestamps, byte-identical for
  // identical inputs.
  std::string text() const;
};

}  // namespace regyb

#endif  // REGYB_REPORT_HPP_
