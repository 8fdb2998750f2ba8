// Command-line front end: verify structure bundles, compute obstructors and
// generalized inverses, search for regular Yang-Baxter solutions, twist
// multiplications, and re-check solution catalogs.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regyb/bundle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitInputError = 2;

regyb::FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q" || s == "rationals") {
    return regyb::FieldSpec::rationals();
  }
  std::string body;
  if (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0) {
    body = s.substr(2);
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
      body = body.substr(1, body.size() - 2);
    }
  }
  if (body.empty()) {
    throw regyb::Error("--field: expected 'q' or 'gfP', got '" + s + "'");
  }
  return regyb::FieldSpec::prime(std::stoull(body));
}

template <class K>
void print_matrix(std::ostream& os, const regyb::Mat<K>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).str();
    }
    os << "]\n";
  }
}

void print_report(const regyb::Report& rep, const std::string& format) {
  if (format == "structured") {
    std::cout << regyb::report_json(rep);
  } else {
    std::cout << rep.text();
  }
}

int run_verify(const std::string& path,
               const std::vector<std::string>& axioms, bool strict_stars,
               const std::string& format) {
  const regyb::Bundle bundle = regyb::load_bundle(path);
  regyb::VerifyOptions opts;
  opts.strict_stars = strict_stars;
  if (!axioms.empty()) {
    opts.axioms = std::set<std::string>(axioms.begin(), axioms.end());
  }
  const regyb::Report rep = regyb::verify_bundle(bundle, opts);
  print_report(rep, format);
  return rep.ok() ? kExitOk : kExitAxiomFailure;
}

template <class K>
int obstructor_impl(const regyb::Cocycle<K>& c) {
  const regyb::Report reg = regyb::verify_regularity(c);
  if (!reg.ok()) {
    for (const regyb::Check& chk : reg.checks) {
      if (!chk.pass) {
        std::cout << "regularity fails at equation " << chk.level;
        if (chk.diff) {
          std::cout << " first-diff at (" << chk.diff->row << ","
                    << chk.diff->col << "): lhs=" << chk.diff->lhs
                    << " rhs=" << chk.diff->rhs;
        }
        std::cout << "\n";
        return kExitAxiomFailure;
      }
    }
  }
  const regyb::ObstructorSet<K> obs = regyb::obstructors(c);
  for (std::size_t n = 0; n < obs.obstructors.size(); ++n) {
    std::cout << "e" << n + 1 << " =\n";
    print_matrix(std::cout, obs.obstructors[n]);
    std::cout << "idempotent: "
              << (regyb::is_idempotent(obs.obstructors[n]) ? "yes" : "no")
              << "\n";
  }
  return kExitOk;
}

int run_obstructor(const std::string& path) {
  const regyb::Bundle bundle = regyb::load_bundle(path);
  if (bundle.kind() != "cocycle") {
    throw regyb::Error("obstructor: bundle kind must be cocycle");
  }
  if (const auto* typed =
          std::get_if<regyb::TypedPayload<regyb::Rational>>(&bundle.payload)) {
    return obstructor_impl(std::get<regyb::Cocycle<regyb::Rational>>(*typed));
  }
  const auto& typed =
      std::get<regyb::TypedPayload<regyb::GFElem>>(bundle.payload);
  return obstructor_impl(std::get<regyb::Cocycle<regyb::GFElem>>(typed));
}

template <class K>
int ginverse_impl(const regyb::Mat<K>& m) {
  const regyb::Mat<K> x = regyb::reflexive_ginverse(m);
  std::cout << "X =\n";
  print_matrix(std::cout, x);
  const regyb::Mat<K> mxm = mat_mul(m, mat_mul(x, m));
  const regyb::Mat<K> xmx = mat_mul(x, mat_mul(m, x));
  std::cout << "M*X*M =\n";
  print_matrix(std::cout, mxm);
  std::cout << "X*M*X =\n";
  print_matrix(std::cout, xmx);
  std::cout << "M*X*M == M: " << (mxm == m ? "yes" : "no") << "\n";
  std::cout << "X*M*X == X: " << (xmx == x ? "yes" : "no") << "\n";
  return (mxm == m && xmx == x) ? kExitOk : kExitAxiomFailure;
}

template <class K>
regyb::Mat<K> parse_inline_matrix(const std::string& text,
                                  const typename K::Ctx& ctx) {
  // Reuse the bundle matrix schema for inline input.
  nlohmann::ordered_json wrapper;
  wrapper["format_version"] = 1;
  wrapper["kind"] = "matrix";
  wrapper["field"] = nlohmann::ordered_json::parse(
      ctx.spec().kind == regyb::FieldKind::Rationals
          ? std::string(R"({"kind":"rationals"})")
          : std::string(R"({"kind":"prime","characteristic":)") +
                std::to_string(ctx.spec().characteristic) + "}");
  nlohmann::ordered_json m;
  try {
    m = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw regyb::Error(std::string("--inline: invalid JSON: ") + e.what());
  }
  wrapper["payload"] = nlohmann::ordered_json::object();
  wrapper["payload"]["M"] = m;
  const regyb::Bundle b = regyb::parse_bundle(wrapper.dump());
  if constexpr (std::is_same_v<K, regyb::Rational>) {
    return std::get<regyb::Mat<K>>(
        std::get<regyb::TypedPayload<regyb::Rational>>(b.payload));
  } else {
    return std::get<regyb::Mat<K>>(
        std::get<regyb::TypedPayload<regyb::GFElem>>(b.payload));
  }
}

int run_ginverse(const std::string& path, const std::string& inline_matrix,
                 const std::optional<regyb::FieldSpec>& field) {
  if (!inline_matrix.empty()) {
    const regyb::FieldSpec spec =
        field.value_or(regyb::FieldSpec::rationals());
    if (spec.kind == regyb::FieldKind::Rationals) {
      return ginverse_impl(parse_inline_matrix<regyb::Rational>(
          inline_matrix, regyb::Rational::Ctx{}));
    }
    return ginverse_impl(parse_inline_matrix<regyb::GFElem>(
        inline_matrix, regyb::GFElem::Ctx{spec.characteristic}));
  }
  if (path.empty()) {
    throw regyb::Error("ginverse: need a bundle path or --inline matrix");
  }
  const regyb::Bundle bundle = regyb::load_bundle(path);
  if (bundle.kind() != "matrix") {
    throw regyb::Error("ginverse: bundle kind must be matrix");
  }
  if (const auto* typed =
          std::get_if<regyb::TypedPayload<regyb::Rational>>(&bundle.payload)) {
    return ginverse_impl(std::get<regyb::Mat<regyb::Rational>>(*typed));
  }
  const auto& typed =
      std::get<regyb::TypedPayload<regyb::GFElem>>(bundle.payload);
  return ginverse_impl(std::get<regyb::Mat<regyb::GFElem>>(typed));
}

int run_search(const std::string& path, const std::string& out_path) {
  const regyb::Bundle bundle = regyb::load_bundle(path);
  const auto* spec = std::get_if<regyb::SearchSpec>(&bundle.payload);
  if (!spec) throw regyb::Error("search: bundle kind must be search_spec");
  const regyb::SolutionCatalog catalog = regyb::search_regular_ybe(*spec);

  regyb::Bundle out;
  out.field = bundle.field;
  out.metadata = bundle.metadata;
  out.payload = catalog;
  regyb::write_bundle(out, out_path);

  std::printf(
      "task=%s field=%s dim=%zu candidates=%llu solutions=%zu elapsed=%.3fs "
      "catalog=%s\n",
      catalog.task.c_str(), bundle.field.str().c_str(), spec->dim,
      static_cast<unsigned long long>(catalog.examined),
      catalog.solutions.size(), catalog.elapsed_seconds, out_path.c_str());
  return kExitOk;
}

int run_twist(const std::string& path, const std::string& out_path) {
  const regyb::Bundle bundle = regyb::load_bundle(path);
  const regyb::Bundle twisted = regyb::twist_bundle(bundle);
  regyb::write_bundle(twisted, out_path);
  std::cout << "twisted bundle written to " << out_path << "\n";
  return kExitOk;
}

int run_catalog_check(const std::string& path, const std::string& format) {
  const regyb::Bundle bundle = regyb::load_bundle(path);
  const regyb::Report rep = regyb::catalog_check(bundle);
  print_report(rep, format);
  return rep.ok() ? kExitOk : kExitAxiomFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "regyb: exact verification and search for regular (noninvertible) "
      "braidings, Yang-Baxter operators, and obstructed Hopf structures"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_flag;
  bool strict_stars = false;
  std::string report_format = "text";
  app.add_option("--field", field_flag,
                 "field for inline input: q or gfP (e.g. gf2)");
  app.add_flag("--strict-stars", strict_stars,
               "require the reflexive half of braiding star identities");
  app.add_option("--report-format", report_format,
                 "report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string verify_path;
  std::vector<std::string> verify_axioms;
  CLI::App* verify = app.add_subcommand("verify", "verify a bundle's axioms");
  verify->add_option("bundle", verify_path, "bundle path")->required();
  verify->add_option("--axioms", verify_axioms,
                     "comma-separated axiom subset")
      ->delimiter(',');

  std::string obstructor_path;
  CLI::App* obstructor =
      app.add_subcommand("obstructor", "compute cocycle obstructors");
  obstructor->add_option("bundle", obstructor_path, "cocycle bundle path")
      ->required();

  std::string ginverse_path;
  std::string ginverse_inline;
  CLI::App* ginverse = app.add_subcommand(
      "ginverse", "deterministic reflexive generalized inverse");
  ginverse->add_option("bundle", ginverse_path, "matrix bundle path");
  ginverse->add_option("--inline", ginverse_inline,
                       "inline matrix, e.g. [[0,1],[1,0]]");

  std::string search_path, search_out;
  CLI::App* search =
      app.add_subcommand("search", "exhaustive regular Yang-Baxter search");
  search->add_option("spec", search_path, "search_spec bundle path")
      ->required();
  search->add_option("--out", search_out, "catalog output path")->required();

  std::string twist_path, twist_out;
  CLI::App* twist = app.add_subcommand(
      "twist", "twist multiplications by the bundled operator");
  twist->add_option("bundle", twist_path, "yb_operator bundle path")
      ->required();
  twist->add_option("--out", twist_out, "twisted bundle output path")
      ->required();

  std::string catalog_path;
  CLI::App* catalog = app.add_subcommand(
      "catalog-check", "re-verify every solution in a catalog");
  catalog->add_option("catalog", catalog_path, "catalog bundle path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    std::optional<regyb::FieldSpec> field;
    if (!field_flag.empty()) field = parse_field_flag(field_flag);
    if (verify->parsed()) {
      return run_verify(verify_path, verify_axioms, strict_stars,
                        report_format);
    }
    if (obstructor->parsed()) return run_obstructor(obstructor_path);
    if (ginverse->parsed()) {
      return run_ginverse(ginverse_path, ginverse_inline, field);
    }
    if (search->parsed()) return run_search(search_path, search_out);
    if (twist->parsed()) return run_twist(twist_path, twist_out);
    if (catalog->parsed()) return run_catalog_check(catalog_path, report_format);
  } catch (const regyb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
