#include "regyb/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace regyb {

namespace {

using json = nlohmann::ordered_json;

// --- strict key validation -------------------------------------------------

struct Keys {
  std::vector<std::string> fixed_required;
  std::vector<std::string> fixed_optional;
  std::vector<std::string> families_required;  // numbered: <prefix>1..<prefix>N
  std::vector<std::string> families_optional;
};

struct ParsedKeys {
  std::map<std::string, const json*> fixed;
  std::map<std::string, std::vector<const json*>> families;
};

bool match_family(const std::string& key, const std::string& prefix,
                  std::size_t& index) {
  if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
    return false;
  if (key.size() - prefix.size() > 9) return false;  // index digit cap
  std::size_t value = 0;
  for (std::size_t i = prefix.size(); i < key.size(); ++i) {
    if (key[i] < '0' || key[i] > '9') return false;
    value = value * 10 + static_cast<std::size_t>(key[i] - '0');
  }
  if (value == 0) return false;
  index = value;
  return true;
}

// Rejects unknown keys outright; typos in axiom data must not parse.
ParsedKeys validate_keys(const json& obj, const Keys& keys,
                         const std::string& where) {
  if (!obj.is_object()) throw Error(where + ": expected an object");
  std::vector<std::string> families = keys.families_required;
  families.insert(families.end(), keys.families_optional.begin(),
                  keys.families_optional.end());
  // Longest prefix wins so that e.g. "eta1" is not split as family "e".
  std::sort(families.begin(), families.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() > b.size();
            });

  ParsedKeys out;
  std::map<std::string, std::map<std::size_t, const json*>> indexed;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    bool matched = false;
    for (const std::string& fam : families) {
      std::size_t index = 0;
      if (match_family(key, fam, index)) {
        if (indexed[fam].count(index)) {
          throw Error(where + ": duplicate key '" + key + "'");
        }
        indexed[fam][index] = &it.value();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::find(keys.fixed_required.begin(), keys.fixed_required.end(),
                  key) != keys.fixed_required.end() ||
        std::find(keys.fixed_optional.begin(), keys.fixed_optional.end(),
                  key) != keys.fixed_optional.end()) {
      out.fixed[key] = &it.value();
      continue;
    }
    throw Error(where + ": unknown key '" + key + "'");
  }
  for (const std::string& req : keys.fixed_required) {
    if (!out.fixed.count(req)) {
      throw Error(where + ": missing key '" + req + "'");
    }
  }
  for (auto& [fam, members] : indexed) {
    std::vector<const json*> ordered;
    for (std::size_t i = 1; i <= members.size(); ++i) {
      auto it = members.find(i);
      if (it == members.end()) {
        throw Error(where + ": family '" + fam + "' is not numbered 1.." +
                    std::to_string(members.size()));
      }
      ordered.push_back(it->second);
    }
    out.families[fam] = std::move(ordered);
  }
  for (const std::string& fam : keys.families_required) {
    if (!out.families.count(fam)) {
      throw Error(where + ": missing matrices '" + fam + "1..'");
    }
  }
  return out;
}

// --- field and matrix (de)serialization -------------------------------------

FieldSpec parse_field(const json& j) {
  const Keys keys{{"kind"}, {"characteristic"}, {}, {}};
  ParsedKeys k = validate_keys(j, keys, "field");
  const json& kind = *k.fixed.at("kind");
  if (!kind.is_string()) throw Error("field: 'kind' must be a string");
  if (kind == "rationals") {
    if (k.fixed.count("characteristic")) {
      throw Error("field: rationals take no characteristic");
    }
    return FieldSpec::rationals();
  }
  if (kind == "prime") {
    if (!k.fixed.count("characteristic")) {
      throw Error("field: prime field needs a characteristic");
    }
    const json& p = *k.fixed.at("characteristic");
    if (!p.is_number_unsigned()) {
      throw Error("field: characteristic must be a positive integer");
    }
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw Error("field: unknown kind '" + kind.get<std::string>() + "'");
}

json field_json(const FieldSpec& f) {
  json j;
  if (f.kind == FieldKind::Rationals) {
    j["kind"] = "rationals";
  } else {
    j["kind"] = "prime";
    j["characteristic"] = f.characteristic;
  }
  return j;
}

Rational parse_entry(const json& v, const Rational::Ctx& ctx,
                     const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>(), ctx);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(where + ": rational entries are integers or 'p/q' strings");
}

GFElem parse_entry(const json& v, const GFElem::Ctx& ctx,
                   const std::string& where) {
  if (v.is_number_integer()) return GFElem::from_int(v.get<long long>(), ctx);
  throw Error(where + ": prime-field entries are decimal integers");
}

json entry_json(const Rational& v) { return v.str(); }
json entry_json(const GFElem& v) { return v.value(); }

template <class K>
Mat<K> parse_matrix(const json& j, const typename K::Ctx& ctx,
                    const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw Error(where + ": matrix must be a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<K> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.empty()) {
      throw Error(where + ": matrix rows must be nonempty arrays");
    }
    if (i == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw Error(where + ": ragged matrix rows");
    }
    for (const json& v : row) entries.push_back(parse_entry(v, ctx, where));
  }
  return Mat<K>(rows, cols, ctx, std::move(entries));
}

template <class K>
json matrix_json(const Mat<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
std::vector<Mat<K>> parse_family(const ParsedKeys& keys, const std::string& fam,
                                 const typename K::Ctx& ctx,
                                 const std::string& where) {
  std::vector<Mat<K>> out;
  auto it = keys.families.find(fam);
  if (it == keys.families.end()) return out;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    out.push_back(parse_matrix<K>(*it->second[i], ctx,
                                  where + "." + fam + std::to_string(i + 1)));
  }
  return out;
}

template <class K>
void emit_family(json& obj, const std::string& fam,
                 const std::vector<Mat<K>>& mats) {
  for (std::size_t i = 0; i < mats.size(); ++i) {
    obj[fam + std::to_string(i + 1)] = matrix_json(mats[i]);
  }
}

bool parse_flag(const ParsedKeys& keys, const std::string& name,
                const std::string& where) {
  auto it = keys.fixed.find(name);
  if (it == keys.fixed.end()) return false;
  if (!it->second->is_boolean()) {
    throw Error(where + ": '" + name + "' must be a boolean");
  }
  return it->second->get<bool>();
}

// --- kind payloads ----------------------------------------------------------

template <class K>
Cocycle<K> parse_cocycle(const json& j, const typename K::Ctx& ctx,
                         const std::string& where) {
  ParsedKeys keys = validate_keys(j, {{}, {}, {"f"}, {}}, where);
  return Cocycle<K>(parse_family<K>(keys, "f", ctx, where));
}

template <class K>
json cocycle_json(const Cocycle<K>& c) {
  json j = json::object();
  emit_family(j, "f", c.arrows());
  return j;
}

template <class K>
Braiding<K> parse_braiding(const json& j, const typename K::Ctx& ctx,
                           const std::string& where) {
  ParsedKeys keys =
      validate_keys(j, {{"left", "right"}, {}, {"B"}, {"Bstar"}}, where);
  Cocycle<K> left = parse_cocycle<K>(*keys.fixed.at("left"), ctx, where + ".left");
  Cocycle<K> right =
      parse_cocycle<K>(*keys.fixed.at("right"), ctx, where + ".right");
  std::vector<Mat<K>> comps = parse_family<K>(keys, "B", ctx, where);
  std::optional<std::vector<Mat<K>>> stars;
  if (keys.families.count("Bstar")) {
    stars = parse_family<K>(keys, "Bstar", ctx, where);
  }
  return Braiding<K>(std::move(left), std::move(right), std::move(comps),
                     std::move(stars));
}

template <class K>
json braiding_json(const Braiding<K>& b) {
  json j = json::object();
  j["left"] = cocycle_json(b.left());
  j["right"] = cocycle_json(b.right());
  emit_family(j, "B", b.components());
  if (b.has_stars()) emit_family(j, "Bstar", *b.stars());
  return j;
}

template <class K>
Algebra<K> parse_algebra(const json& j, const typename K::Ctx& ctx,
                         const std::string& where) {
  ParsedKeys keys =
      validate_keys(j, {{}, {"associative"}, {"e", "m"}, {}}, where);
  return Algebra<K>(parse_family<K>(keys, "m", ctx, where),
                    parse_family<K>(keys, "e", ctx, where),
                    parse_flag(keys, "associative", where));
}

template <class K>
json algebra_json(const Algebra<K>& a) {
  json j = json::object();
  emit_family(j, "e", a.obstructors());
  std::vector<Mat<K>> mults;
  for (std::size_t n = 0; n < a.levels(); ++n) mults.push_back(a.mult(n));
  emit_family(j, "m", mults);
  j["associative"] = a.claims_associativity();
  return j;
}

template <class K>
Coalgebra<K> parse_coalgebra(const json& j, const typename K::Ctx& ctx,
                             const std::string& where) {
  ParsedKeys keys =
      validate_keys(j, {{}, {"coassociative"}, {"e", "Delta"}, {}}, where);
  return Coalgebra<K>(parse_family<K>(keys, "Delta", ctx, where),
                      parse_family<K>(keys, "e", ctx, where),
                      parse_flag(keys, "coassociative", where));
}

template <class K>
json coalgebra_json(const Coalgebra<K>& c) {
  json j = json::object();
  emit_family(j, "e", c.obstructors());
  std::vector<Mat<K>> comults;
  for (std::size_t n = 0; n < c.levels(); ++n) comults.push_back(c.comult(n));
  emit_family(j, "Delta", comults);
  j["coassociative"] = c.claims_coassociativity();
  return j;
}

template <class K>
YBOperatorData<K> parse_yb_operator(const json& j, const typename K::Ctx& ctx,
                                    const std::string& where) {
  ParsedKeys keys = validate_keys(
      j, {{}, {"algebra", "coalgebra"}, {"R"}, {"Rstar"}}, where);
  YBOperatorData<K> out{
      std::nullopt, std::nullopt,
      YBOperator<K>(parse_family<K>(keys, "R", ctx, where),
                    keys.families.count("Rstar")
                        ? std::optional(parse_family<K>(keys, "Rstar", ctx, where))
                        : std::nullopt)};
  if (keys.fixed.count("algebra")) {
    out.algebra =
        parse_algebra<K>(*keys.fixed.at("algebra"), ctx, where + ".algebra");
  }
  if (keys.fixed.count("coalgebra")) {
    out.coalgebra = parse_coalgebra<K>(*keys.fixed.at("coalgebra"), ctx,
                                       where + ".coalgebra");
  }
  if (!out.algebra && !out.coalgebra) {
    throw Error(where + ": needs an algebra or coalgebra section");
  }
  return out;
}

template <class K>
json yb_operator_json(const YBOperatorData<K>& d) {
  json j = json::object();
  if (d.algebra) j["algebra"] = algebra_json(*d.algebra);
  if (d.coalgebra) j["coalgebra"] = coalgebra_json(*d.coalgebra);
  emit_family(j, "R", d.op.ops());
  if (d.op.has_stars()) emit_family(j, "Rstar", *d.op.stars());
  return j;
}

template <class K>
Bialgebra<K> parse_bialgebra(const json& j, const typename K::Ctx& ctx,
                             const std::string& where) {
  ParsedKeys keys = validate_keys(
      j, {{}, {}, {"e", "m", "Delta"}, {"eta", "eps"}}, where);
  const bool has_eta = keys.families.count("eta") != 0;
  const bool has_eps = keys.families.count("eps") != 0;
  if (has_eta != has_eps) {
    throw Error(where + ": unit and counit must come together");
  }
  return Bialgebra<K>(
      parse_family<K>(keys, "m", ctx, where),
      parse_family<K>(keys, "Delta", ctx, where),
      parse_family<K>(keys, "e", ctx, where),
      has_eta ? std::optional(parse_family<K>(keys, "eta", ctx, where))
              : std::nullopt,
      has_eps ? std::optional(parse_family<K>(keys, "eps", ctx, where))
              : std::nullopt);
}

template <class K>
json bialgebra_json(const Bialgebra<K>& h) {
  json j = json::object();
  emit_family(j, "e", h.obstructors());
  std::vector<Mat<K>> mults, comults;
  for (std::size_t n = 0; n < h.levels(); ++n) {
    mults.push_back(h.mult(n));
    comults.push_back(h.comult(n));
  }
  emit_family(j, "m", mults);
  emit_family(j, "Delta", comults);
  if (h.has_unit_counit()) {
    emit_family(j, "eta", *h.units());
    emit_family(j, "eps", *h.counits());
  }
  return j;
}

template <class K>
AntipodeData<K> parse_antipode(const json& j, const typename K::Ctx& ctx,
                               const std::string& where) {
  ParsedKeys keys =
      validate_keys(j, {{"bialgebra"}, {}, {"S"}, {"Sstar"}}, where);
  return AntipodeData<K>{
      parse_bialgebra<K>(*keys.fixed.at("bialgebra"), ctx, where + ".bialgebra"),
      AntipodePair<K>{
          parse_family<K>(keys, "S", ctx, where),
          keys.families.count("Sstar")
              ? std::optional(parse_family<K>(keys, "Sstar", ctx, where))
              : std::nullopt}};
}

template <class K>
json antipode_json(const AntipodeData<K>& d) {
  json j = json::object();
  j["bialgebra"] = bialgebra_json(d.bialgebra);
  emit_family(j, "S", d.antipode.antipodes);
  if (d.antipode.star_antipodes) {
    emit_family(j, "Sstar", *d.antipode.star_antipodes);
  }
  return j;
}

template <class K>
ModuleData<K> parse_module(const json& j, const typename K::Ctx& ctx,
                           const std::string& where) {
  ParsedKeys keys = validate_keys(
      j, {{"bialgebra", "side"}, {}, {"rho", "eP"}, {}}, where);
  const json& side = *keys.fixed.at("side");
  if (!side.is_string() || (side != "left" && side != "right")) {
    throw Error(where + ": side must be \"left\" or \"right\"");
  }
  return ModuleData<K>{
      parse_bialgebra<K>(*keys.fixed.at("bialgebra"), ctx, where + ".bialgebra"),
      ModuleAction<K>(side == "right" ? ModuleSide::Right : ModuleSide::Left,
                      parse_family<K>(keys, "rho", ctx, where),
                      parse_family<K>(keys, "eP", ctx, where))};
}

template <class K>
json module_json(const ModuleData<K>& d) {
  json j = json::object();
  j["bialgebra"] = bialgebra_json(d.bialgebra);
  j["side"] = d.action.side() == ModuleSide::Right ? "right" : "left";
  std::vector<Mat<K>> actions;
  for (std::size_t n = 0; n < d.action.levels(); ++n) {
    actions.push_back(d.action.action(n));
  }
  emit_family(j, "rho", actions);
  emit_family(j, "eP", d.action.obstructors());
  return j;
}

const char* const kConstraintNames[] = {"commute_with_obstructor",
                                        "regular_ybe", "star_exists"};

SearchSpec parse_search_spec(const json& j, const FieldSpec& field,
                             const std::string& where) {
  if (field.kind != FieldKind::PrimeField) {
    throw Error(where + ": search requires a prime field");
  }
  const GFElem::Ctx ctx{field.characteristic};
  ParsedKeys keys = validate_keys(
      j, {{"dim", "e", "constraints"}, {"cap", "workers"}, {}, {}}, where);
  SearchSpec spec;
  spec.field = ctx;
  const json& dim = *keys.fixed.at("dim");
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) {
    throw Error(where + ": dim must be a positive integer");
  }
  spec.dim = dim.get<std::size_t>();
  spec.obstructor = parse_matrix<GFElem>(*keys.fixed.at("e"), ctx, where + ".e");
  const json& cons = *keys.fixed.at("constraints");
  if (!cons.is_array()) throw Error(where + ": constraints must be an array");
  spec.constraints = SearchConstraints{false, false, false};
  for (const json& c : cons) {
    if (c == kConstraintNames[0]) {
      spec.constraints.commute_with_obstructor = true;
    } else if (c == kConstraintNames[1]) {
      spec.constraints.regular_ybe = true;
    } else if (c == kConstraintNames[2]) {
      spec.constraints.star_exists = true;
    } else {
      throw Error(where + ": unknown constraint " + c.dump());
    }
  }
  if (keys.fixed.count("cap")) {
    const json& cap = *keys.fixed.at("cap");
    if (!cap.is_number_unsigned()) throw Error(where + ": cap must be unsigned");
    spec.cap = cap.get<std::uint64_t>();
  }
  if (keys.fixed.count("workers")) {
    const json& w = *keys.fixed.at("workers");
    if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0) {
      throw Error(where + ": workers must be a positive integer");
    }
    spec.workers = w.get<unsigned>();
  }
  return spec;
}

json search_spec_json(const SearchSpec& spec) {
  json j = json::object();
  j["dim"] = spec.dim;
  j["e"] = matrix_json(spec.obstructor);
  json cons = json::array();
  if (spec.constraints.commute_with_obstructor) cons.push_back(kConstraintNames[0]);
  if (spec.constraints.regular_ybe) cons.push_back(kConstraintNames[1]);
  if (spec.constraints.star_exists) cons.push_back(kConstraintNames[2]);
  j["constraints"] = std::move(cons);
  j["cap"] = spec.cap;
  j["workers"] = spec.workers;
  return j;
}

SolutionCatalog parse_catalog(const json& j, const FieldSpec& field,
                              const std::string& where) {
  if (field.kind != FieldKind::PrimeField) {
    throw Error(where + ": catalogs live over prime fields");
  }
  const GFElem::Ctx ctx{field.characteristic};
  ParsedKeys keys = validate_keys(
      j, {{"task", "examined", "solutions"}, {"spec"}, {}, {}}, where);
  SolutionCatalog cat;
  const json& task = *keys.fixed.at("task");
  if (task != "regular-ybe" && task != "regular-antipode") {
    throw Error(where + ": unknown task " + task.dump());
  }
  cat.task = task.get<std::string>();
  const json& examined = *keys.fixed.at("examined");
  if (!examined.is_number_unsigned()) {
    throw Error(where + ": examined must be unsigned");
  }
  cat.examined = examined.get<std::uint64_t>();
  if (keys.fixed.count("spec")) {
    cat.spec = parse_search_spec(*keys.fixed.at("spec"), field, where + ".spec");
  }
  const json& sols = *keys.fixed.at("solutions");
  if (!sols.is_array()) throw Error(where + ": solutions must be an array");
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const std::string ew = where + ".solutions[" + std::to_string(i) + "]";
    ParsedKeys ekeys = validate_keys(
        sols[i], {{"level", "matrix", "axioms"}, {"star"}, {}, {}}, ew);
    SolutionEntry entry;
    const json& level = *ekeys.fixed.at("level");
    if (!level.is_number_unsigned() || level.get<std::uint64_t>() == 0) {
      throw Error(ew + ": level must be a positive integer");
    }
    entry.level = level.get<std::size_t>();
    entry.matrix = parse_matrix<GFElem>(*ekeys.fixed.at("matrix"), ctx, ew);
    const json& axioms = *ekeys.fixed.at("axioms");
    if (!axioms.is_array()) throw Error(ew + ": axioms must be an array");
    for (const json& a : axioms) {
      if (!a.is_string()) throw Error(ew + ": axiom names must be strings");
      entry.axioms.push_back(a.get<std::string>());
    }
    if (ekeys.fixed.count("star")) {
      entry.star = parse_matrix<GFElem>(*ekeys.fixed.at("star"), ctx, ew);
    }
    cat.solutions.push_back(std::move(entry));
  }
  return cat;
}

json catalog_json(const SolutionCatalog& cat) {
  json j = json::object();
  j["task"] = cat.task;
  if (cat.spec) j["spec"] = search_spec_json(*cat.spec);
  j["examined"] = cat.examined;
  json sols = json::array();
  for (const SolutionEntry& e : cat.solutions) {
    json s = json::object();
    s["level"] = e.level;
    s["matrix"] = matrix_json(e.matrix);
    s["axioms"] = e.axioms;
    if (e.star) s["star"] = matrix_json(*e.star);
    sols.push_back(std::move(s));
  }
  j["solutions"] = std::move(sols);
  return j;
}

template <class K>
TypedPayload<K> parse_typed(const std::string& kind, const json& j,
                            const typename K::Ctx& ctx) {
  const std::string where = "payload";
  if (kind == "cocycle") return parse_cocycle<K>(j, ctx, where);
  if (kind == "braiding") return parse_braiding<K>(j, ctx, where);
  if (kind == "algebra") return parse_algebra<K>(j, ctx, where);
  if (kind == "coalgebra") return parse_coalgebra<K>(j, ctx, where);
  if (kind == "yb_operator") return parse_yb_operator<K>(j, ctx, where);
  if (kind == "bialgebra") return parse_bialgebra<K>(j, ctx, where);
  if (kind == "antipode") return parse_antipode<K>(j, ctx, where);
  if (kind == "module_action") return parse_module<K>(j, ctx, where);
  if (kind == "matrix") {
    ParsedKeys keys = validate_keys(j, {{"M"}, {}, {}, {}}, where);
    return parse_matrix<K>(*keys.fixed.at("M"), ctx, where + ".M");
  }
  throw Error("bundle: unknown kind '" + kind + "'");
}

template <class K>
json typed_json(const TypedPayload<K>& payload) {
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Cocycle<K>>) {
          return cocycle_json(value);
        } else if constexpr (std::is_same_v<T, Braiding<K>>) {
          return braiding_json(value);
        } else if constexpr (std::is_same_v<T, Algebra<K>>) {
          return algebra_json(value);
        } else if constexpr (std::is_same_v<T, Coalgebra<K>>) {
          return coalgebra_json(value);
        } else if constexpr (std::is_same_v<T, YBOperatorData<K>>) {
          return yb_operator_json(value);
        } else if constexpr (std::is_same_v<T, Bialgebra<K>>) {
          return bialgebra_json(value);
        } else if constexpr (std::is_same_v<T, AntipodeData<K>>) {
          return antipode_json(value);
        } else if constexpr (std::is_same_v<T, ModuleData<K>>) {
          return module_json(value);
        } else {
          json j = json::object();
          j["M"] = matrix_json(value);
          return j;
        }
      },
      payload);
}

template <class K>
std::string typed_kind(const TypedPayload<K>& payload) {
  static const char* const names[] = {
      "cocycle",   "braiding", "algebra",       "coalgebra", "yb_operator",
      "bialgebra", "antipode", "module_action", "matrix"};
  return names[payload.index()];
}

}  // namespace

std::string Bundle::kind() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SearchSpec>) {
          return "search_spec";
        } else if constexpr (std::is_same_v<T, SolutionCatalog>) {
          return "catalog";
        } else {
          return typed_kind(p);
        }
      },
      payload);
}

Bundle parse_bundle(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("bundle: invalid JSON: ") + e.what());
  }
  ParsedKeys keys = validate_keys(
      j, {{"format_version", "kind", "field", "payload"}, {"metadata"}, {}, {}},
      "bundle");
  const json& version = *keys.fixed.at("format_version");
  if (!version.is_number_unsigned() || version.get<std::uint64_t>() != 1) {
    throw Error("bundle: unsupported format_version");
  }
  const json& kind = *keys.fixed.at("kind");
  if (!kind.is_string()) throw Error("bundle: kind must be a string");

  Bundle b;
  b.format_version = 1;
  b.field = parse_field(*keys.fixed.at("field"));
  if (keys.fixed.count("metadata")) {
    const json& meta = *keys.fixed.at("metadata");
    if (!meta.is_string()) throw Error("bundle: metadata must be a string");
    b.metadata = meta.get<std::string>();
  }
  const json& payload = *keys.fixed.at("payload");
  const std::string k = kind.get<std::string>();
  if (k == "search_spec") {
    b.payload = parse_search_spec(payload, b.field, "payload");
  } else if (k == "catalog") {
    b.payload = parse_catalog(payload, b.field, "payload");
  } else if (b.field.kind == FieldKind::Rationals) {
    b.payload = parse_typed<Rational>(k, payload, Rational::Ctx{});
  } else {
    b.payload = parse_typed<GFElem>(k, payload,
                                    GFElem::Ctx{b.field.characteristic});
  }
  return b;
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("bundle: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

std::string serialize_bundle(const Bundle& b) {
  json j;
  j["format_version"] = 1;
  j["kind"] = b.kind();
  j["field"] = field_json(b.field);
  if (!b.metadata.empty()) j["metadata"] = b.metadata;
  j["payload"] = std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SearchSpec>) {
          return search_spec_json(p);
        } else if constexpr (std::is_same_v<T, SolutionCatalog>) {
          return catalog_json(p);
        } else {
          return typed_json(p);
        }
      },
      b.payload);
  return j.dump(1) + "\n";
}

void write_bundle(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("bundle: cannot write '" + path + "'");
  out << serialize_bundle(b);
}

namespace {

const std::set<std::string> kAlgebraAxioms = {
    "obstructor-idempotent", "mult-obstructor-compat",
    "obstructed-associativity"};
const std::set<std::string> kCoalgebraAxioms = {
    "obstructor-idempotent", "comult-obstructor-compat",
    "obstructed-coassociativity"};
const std::set<std::string> kOperatorAxioms = {
    "operator-obstructor-commute", "regular-ybe", "operator-star",
    "operator-star-reflexive"};

std::set<std::string> set_union(std::initializer_list<std::set<std::string>> sets) {
  std::set<std::string> out;
  for (const auto& s : sets) out.insert(s.begin(), s.end());
  return out;
}

template <class T>
struct payload_field;
template <>
struct payload_field<TypedPayload<Rational>> {
  using type = Rational;
};
template <>
struct payload_field<TypedPayload<GFElem>> {
  using type = GFElem;
};

template <class K>
Report verify_typed(const TypedPayload<K>& payload, const VerifyOptions& opts) {
  const bool want_compat =
      opts.axioms && opts.axioms->count("bialgebra-compat") != 0;
  return std::visit(
      [&](const auto& value) -> Report {
        using T = std::decay_t<decltype(value)>;
        Report rep;
        if constexpr (std::is_same_v<T, Cocycle<K>>) {
          rep = verify_regularity(value);
          if (rep.ok()) {
            rep.merge(verify_obstructor_properties(value, obstructors(value)));
          }
        } else if constexpr (std::is_same_v<T, Braiding<K>>) {
          Report left = verify_regularity(value.left());
          for (Check& c : left.checks) c.axiom = "left-chain-regularity";
          Report right = verify_regularity(value.right());
          for (Check& c : right.checks) c.axiom = "right-chain-regularity";
          rep.merge(std::move(left));
          rep.merge(std::move(right));
          rep.merge(verify_naturality(value));
          if (value.has_stars()) {
            rep.merge(verify_star_regularity(value, opts.strict_stars));
          }
        } else if constexpr (std::is_same_v<T, Algebra<K>>) {
          rep = verify_algebra(value);
        } else if constexpr (std::is_same_v<T, Coalgebra<K>>) {
          rep = verify_coalgebra(value);
        } else if constexpr (std::is_same_v<T, YBOperatorData<K>>) {
          if (value.algebra) {
            rep.merge(verify_algebra(*value.algebra));
            rep.merge(verify_yb_operator(*value.algebra, value.op));
          }
          if (value.coalgebra) {
            rep.merge(verify_coalgebra(*value.coalgebra));
            if (!value.algebra ||
                value.algebra->obstructors() != value.coalgebra->obstructors()) {
              rep.merge(verify_yb_operator(*value.coalgebra, value.op));
            }
          }
        } else if constexpr (std::is_same_v<T, Bialgebra<K>>) {
          rep = verify_bialgebra(value);
          if (want_compat) rep.merge(verify_bialgebra_compat(value));
        } else if constexpr (std::is_same_v<T, AntipodeData<K>>) {
          rep = verify_bialgebra(value.bialgebra);
          if (want_compat) rep.merge(verify_bialgebra_compat(value.bialgebra));
          rep.merge(verify_regular_antipode(value.bialgebra, value.antipode));
          if (value.bialgebra.has_unit_counit()) {
            rep.merge(
                verify_unit_counit_antipode(value.bialgebra, value.antipode));
          }
        } else if constexpr (std::is_same_v<T, ModuleData<K>>) {
          rep = verify_bialgebra(value.bialgebra);
          if (want_compat) rep.merge(verify_bialgebra_compat(value.bialgebra));
          rep.merge(verify_module_action(value.action, value.bialgebra));
        } else {
          // matrix: nothing to verify
        }
        return rep;
      },
      payload);
}

}  // namespace

std::set<std::string> bundle_axioms(const std::string& kind) {
  if (kind == "cocycle") {
    return {"regularity", "obstructor-idempotent", "intertwine-right",
            "intertwine-left"};
  }
  if (kind == "braiding") {
    return {"left-chain-regularity", "right-chain-regularity", "naturality",
            "star-regularity", "star-reflexivity"};
  }
  if (kind == "algebra") return kAlgebraAxioms;
  if (kind == "coalgebra") return kCoalgebraAxioms;
  if (kind == "yb_operator") {
    return set_union({kAlgebraAxioms, kCoalgebraAxioms, kOperatorAxioms});
  }
  if (kind == "bialgebra") {
    return set_union({kAlgebraAxioms, kCoalgebraAxioms, {"bialgebra-compat"}});
  }
  if (kind == "antipode") {
    return set_union({kAlgebraAxioms, kCoalgebraAxioms,
                      {"bialgebra-compat", "antipode-regularity",
                       "antipode-reflexivity", "antipode-1star-e",
                       "antipode-1star-s", "antipode-1star-star",
                       "antipode-two-sided", "antipode-unit-counit"}});
  }
  if (kind == "module_action") {
    return set_union({kAlgebraAxioms, kCoalgebraAxioms,
                      {"bialgebra-compat", "module-obstructor-idempotent",
                       "module-obstructor-compat"}});
  }
  if (kind == "search_spec") return {"obstructor-idempotent"};
  if (kind == "matrix") return {};
  if (kind == "catalog") {
    return set_union({kOperatorAxioms, {"catalog-statistics"}});
  }
  throw Error("bundle_axioms: unknown kind '" + kind + "'");
}

Report verify_bundle(const Bundle& b, const VerifyOptions& opts) {
  if (opts.axioms) {
    const std::set<std::string> known = bundle_axioms(b.kind());
    for (const std::string& name : *opts.axioms) {
      if (!known.count(name)) {
        throw Error("verify: unknown axiom '" + name + "' for kind '" +
                    b.kind() + "'");
      }
    }
  }
  Report rep = std::visit(
      [&](const auto& p) -> Report {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SearchSpec>) {
          Report r;
          r.add_equal("obstructor-idempotent", 1,
                      mat_mul(p.obstructor, p.obstructor), p.obstructor);
          return r;
        } else if constexpr (std::is_same_v<T, SolutionCatalog>) {
          return catalog_check(b);
        } else {
          return verify_typed<typename payload_field<T>::type>(p, opts);
        }
      },
      b.payload);
  if (opts.axioms) {
    std::vector<Check> kept;
    for (Check& c : rep.checks) {
      if (opts.axioms->count(c.axiom)) kept.push_back(std::move(c));
    }
    rep.checks = std::move(kept);
  }
  return rep;
}

Bundle twist_bundle(const Bundle& b) {
  Bundle out = b;
  bool twisted = false;
  auto twist_typed = [&](auto& typed) {
    using P = std::decay_t<decltype(typed)>;
    if constexpr (!std::is_same_v<P, SearchSpec> &&
                  !std::is_same_v<P, SolutionCatalog>) {
      using K = typename payload_field<P>::type;
      if (auto* data = std::get_if<YBOperatorData<K>>(&typed)) {
        YBOperatorData<K> result = *data;
        if (data->algebra) {
          result.algebra = twist_multiplication(*data->algebra, data->op);
        }
        if (data->coalgebra) {
          result.coalgebra =
              twist_comultiplication(*data->coalgebra, data->op);
        }
        typed = std::move(result);
        twisted = true;
      }
    }
  };
  std::visit(twist_typed, out.payload);
  if (!twisted) {
    throw Error("twist: bundle kind '" + b.kind() +
                "' is not a yb_operator bundle");
  }
  return out;
}

Report catalog_check(const Bundle& b) {
  const auto* cat = std::get_if<SolutionCatalog>(&b.payload);
  if (!cat) throw Error("catalog-check: bundle is not a catalog");
  if (cat->task != "regular-ybe") {
    throw Error("catalog-check: only regular-ybe catalogs are supported");
  }
  if (!cat->spec) throw Error("catalog-check: catalog lacks its spec echo");
  Report rep;
  const std::size_t d = cat->spec->dim;
  const std::optional<std::uint64_t> expected =
      checked_pow(cat->spec->field.p, d * d * d * d);
  if (expected && *expected == cat->examined) {
    rep.add_pass("catalog-statistics", 1);
  } else {
    rep.add_fail("catalog-statistics", 1, std::nullopt,
                 "examined counter does not equal the candidate count");
  }
  for (std::size_t i = 0; i < cat->solutions.size(); ++i) {
    const SolutionEntry& entry = cat->solutions[i];
    YBOperator<GFElem> op(
        {entry.matrix},
        entry.star ? std::optional(std::vector<Mat<GFElem>>{*entry.star})
                   : std::nullopt);
    Report one = verify_yb_operator<GFElem>({cat->spec->obstructor}, op);
    for (Check& c : one.checks) {
      c.level = i + 1;
      c.note = "solution " + std::to_string(i + 1);
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

std::string report_json(const Report& rep) {
  json j;
  j["ok"] = rep.ok();
  json checks = json::array();
  for (const Check& c : rep.checks) {
    json cj;
    cj["axiom"] = c.axiom;
    cj["level"] = c.level;
    cj["pass"] = c.pass;
    if (c.diff) {
      json dj;
      dj["row"] = c.diff->row;
      dj["col"] = c.diff->col;
      dj["lhs"] = c.diff->lhs;
      dj["rhs"] = c.diff->rhs;
      cj["diff"] = std::move(dj);
    }
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["warnings"] = rep.warnings;
  return j.dump(1) + "\n";
}

}  // namespace regyb
