#ifndef REGYB_BUNDLE_HPP_
#define REGYB_BUNDLE_HPP_

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "regyb/braiding.hpp"
#include "regyb/hopf.hpp"
#include "regyb/search.hpp"

namespace regyb {

// Operator section together with the structure(s) whose obstructors it acts
// through; at least one of the two halves is present.
template <class K>
struct YBOperatorData {
  std::optional<Algebra<K>> algebra;
  std::optional<Coalgebra<K>> coalgebra;
  YBOperator<K> op;

  friend bool operator==(const YBOperatorData&, const YBOperatorData&) = default;
};

template <class K>
struct AntipodeData {
  Bialgebra<K> bialgebra;
  AntipodePair<K> antipode;

  friend bool operator==(const AntipodeData&, const AntipodeData&) = default;
};

template <class K>
struct ModuleData {
  Bialgebra<K> bialgebra;
  ModuleAction<K> action;

  friend bool operator==(const ModuleData&, const ModuleData&) = default;
};

template <class K>
using TypedPayload =
    std::variant<Cocycle<K>, Braiding<K>, Algebra<K>, Coalgebra<K>,
                 YBOperatorData<K>, Bialgebra<K>, AntipodeData<K>,
                 ModuleData<K>, Mat<K>>;

// A parsed structure bundle: strict JSON on disk, typed values in memory.
// Matrices serialize as decimal integers over prime fields and as "p/q"
// strings over the rationals.
struct Bundle {
  int format_version = 1;
  FieldSpec field;
  std::string metadata;
  std::variant<SearchSpec, SolutionCatalog, TypedPayload<Rational>,
               TypedPayload<GFElem>>
      payload;

  std::string kind() const;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

Bundle parse_bundle(const std::string& text);
Bundle load_bundle(const std::string& path);
std::string serialize_bundle(const Bundle& b);
void write_bundle(const Bundle& b, const std::string& path);

struct VerifyOptions {
  // When set, restrict the report to these axiom names; names outside the
  // bundle kind's vocabulary are input errors.
  std::optional<std::set<std::string>> axioms;
  // Require the reflexive half of braiding star components.
  bool strict_stars = false;
};

// Runs every axiom applicable to the bundle kind (or the requested subset).
Report verify_bundle(const Bundle& b, const VerifyOptions& opts = {});

// Axiom vocabulary of a bundle kind, for subset validation and --help.
std::set<std::string> bundle_axioms(const std::string& kind);

// m_R / Delta_R twist of a yb_operator bundle; the operator section is kept
// so the result re-verifies as the same kind.
Bundle twist_bundle(const Bundle& b);

// Re-verifies every cataloged solution through the operator verification
// path and cross-checks the examined counter.
Report catalog_check(const Bundle& b);

// Structured (JSON) rendering of a report.
std::string report_json(const Report& rep);

}  // namespace regyb

#endif  // REGYB_BUNDLE_HPP_
