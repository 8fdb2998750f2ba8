#ifndef REGYB_SEARCH_HPP_
#define REGYB_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regyb/hopf.hpp"
#include "regyb/linalg.hpp"

namespace regyb {

// p^e when it fits in 64 bits, nullopt otherwise.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

// Candidate matrices are indexed by base-p digit strings with entry (0,0)
// most significant, so increasing index is exactly entry-lexicographic
// order.
Mat<GFElem> index_to_matrix(std::uint64_t index, std::size_t rows,
                            std::size_t cols, const GFElem::Ctx& ctx);
std::uint64_t matrix_to_index(const Mat<GFElem>& m);

struct SearchConstraints {
  bool commute_with_obstructor = true;  // operator/obstructor commutation
  bool regular_ybe = true;              // the triple-space equation
  bool star_exists = false;             // record and verify a star partner

  friend bool operator==(const SearchConstraints&,
                         const SearchConstraints&) = default;
};

// Exhaustive search specification over a prime field. The full candidate
// count p^(dim^4) is computed up front and refused when it exceeds `cap`;
// raising the cap is the explicit override.
struct SearchSpec {
  GFElem::Ctx field;
  std::size_t dim = 2;
  Mat<GFElem> obstructor;
  SearchConstraints constraints;
  std::uint64_t cap = 1u << 16;
  unsigned workers = 1;

  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

struct SolutionEntry {
  std::size_t level = 1;
  Mat<GFElem> matrix;
  std::vector<std::string> axioms;  // certificate: which axioms were verified
  std::optional<Mat<GFElem>> star;

  friend bool operator==(const SolutionEntry&, const SolutionEntry&) = default;
};

// Deterministic, canonically ordered search result. `elapsed_seconds` is
// summary-channel data and never serialized, so catalog files stay
// byte-identical across runs and worker counts.
struct SolutionCatalog {
  std::string task;  // "regular-ybe" or "regular-antipode"
  std::optional<SearchSpec> spec;
  std::vector<SolutionEntry> solutions;
  std::uint64_t examined = 0;
  double elapsed_seconds = 0.0;

  // Timing is summary-channel data; equality is over the durable content.
  friend bool operator==(const SolutionCatalog& a, const SolutionCatalog& b) {
    return a.task == b.task && a.spec == b.spec &&
           a.solutions == b.solutions && a.examined == b.examined;
  }
};

// Enumerates every operator on the tensor square, filtering by the
// commutation condition first (a dim^2 check) and the regular Yang-Baxter
// equation second (a dim^3 check). The index range is split into contiguous
// chunks, one per worker; chunk-local results are concatenated in chunk
// order, so output is independent of scheduling.
SolutionCatalog search_regular_ybe(const SearchSpec& spec);

// All star partners of r over a prime field: the affine solution set of
// r X r = r, optionally filtered by reflexivity. Canonical entry-lex order.
std::vector<Mat<GFElem>> find_star_partner(const Mat<GFElem>& r,
                                           bool reflexive,
                                           std::uint64_t cap = 1u << 20);

// Deterministic single-answer mode over the rationals.
std::vector<Mat<Rational>> find_star_partner(const Mat<Rational>& r,
                                             bool reflexive);

// Enumerates endomorphism candidates S of each carrier and keeps those
// satisfying the regular-antipode pair under left-parenthesized convolution.
SolutionCatalog search_regular_antipodes(const Bialgebra<GFElem>& h,
                                         std::uint64_t cap = 1u << 16);

}  // namespace regyb

#endif  // REGYB_SEARCH_HPP_
