#include <doctest.h>

#include <algorithm>

#include "regyb/bundle.hpp"
#include "regyb/gen.hpp"
#include "regyb/search.hpp"
#include "test_helpers.hpp"

using namespace regyb;
using namespace regyb::testing;

namespace {

bool catalog_contains(const SolutionCatalog& cat, const Mat<GFElem>& m) {
  return std::any_of(cat.solutions.begin(), cat.solutions.end(),
                     [&](const SolutionEntry& e) { return e.matrix == m; });
}

SearchSpec gf2_spec(const Mat<GFElem>& e, unsigned workers = 1) {
  SearchSpec spec;
  spec.field = kGF2;
  spec.dim = e.rows();
  spec.obstructor = e;
  spec.workers = workers;
  return spec;
}

}  // namespace

TEST_CASE("candidate indexing is entry-lexicographic") {
  const auto m0 = index_to_matrix(0, 2, 2, kGF3);
  CHECK(m0 == Mat<GFElem>::zero(2, 2, kGF3));
  const auto m1 = index_to_matrix(1, 2, 2, kGF3);
  CHECK(m1.at(1, 1).value() == 1);
  for (std::uint64_t idx : {0ull, 5ull, 80ull, 17ull}) {
    CHECK(matrix_to_index(index_to_matrix(idx, 2, 2, kGF3)) == idx);
  }
  CHECK(checked_pow(2, 16) == 65536);
  CHECK_FALSE(checked_pow(3, 81).has_value());
}

TEST_CASE("search over GF(2) dim 2 with identity obstructor") {
  const auto cat = search_regular_ybe(gf2_spec(Mat<GFElem>::identity(2, kGF2)));
  CHECK(cat.examined == 65536);
  CHECK(catalog_contains(cat, swap_operator<GFElem>(2, 2, kGF2)));
  CHECK(catalog_contains(cat, Mat<GFElem>::identity(4, kGF2)));
  // catalog order is entry-lexicographic
  for (std::size_t i = 1; i < cat.solutions.size(); ++i) {
    CHECK(cat.solutions[i - 1].matrix < cat.solutions[i].matrix);
  }
}

TEST_CASE("search over GF(2) dim 2 with projector obstructor") {
  const auto e = mat_gf({{1, 0}, {0, 0}}, kGF2);
  const auto cat = search_regular_ybe(gf2_spec(e));
  CHECK(catalog_contains(cat, kron(e, e)));
  CHECK(catalog_contains(cat, swap_operator<GFElem>(2, 2, kGF2)));
  CHECK(cat.examined == 65536);

  // every cataloged solution re-verifies through the library path
  for (const SolutionEntry& entry : cat.solutions) {
    CHECK(verify_yb_operator<GFElem>({e}, YBOperator<GFElem>({entry.matrix}))
              .ok());
  }
}

TEST_CASE("search at dim 1 finds every scalar") {
  const auto cat = search_regular_ybe(gf2_spec(Mat<GFElem>::identity(1, kGF2)));
  CHECK(cat.examined == 2);
  CHECK(cat.solutions.size() == 2);
}

TEST_CASE("search determinism across runs and worker counts") {
  const auto e = mat_gf({{1, 0}, {0, 0}}, kGF2);
  const auto one = search_regular_ybe(gf2_spec(e, 1));
  const auto again = search_regular_ybe(gf2_spec(e, 1));
  const auto four = search_regular_ybe(gf2_spec(e, 4));
  CHECK(one == again);
  CHECK(one.solutions == four.solutions);
  CHECK(one.examined == four.examined);
}

TEST_CASE("star constraint tightens the catalog into a subset") {
  const auto e = mat_gf({{1, 0}, {0, 0}}, kGF2);
  SearchSpec loose = gf2_spec(e);
  SearchSpec tight = gf2_spec(e);
  tight.constraints.star_exists = true;
  const auto cl = search_regular_ybe(loose);
  const auto ct = search_regular_ybe(tight);
  CHECK(ct.solutions.size() <= cl.solutions.size());
  for (const SolutionEntry& entry : ct.solutions) {
    CHECK(catalog_contains(cl, entry.matrix));
    REQUIRE(entry.star.has_value());
    const auto& r = entry.matrix;
    const auto& s = *entry.star;
    CHECK(mat_mul(r, mat_mul(s, r)) == r);
    CHECK(mat_mul(s, mat_mul(r, s)) == s);
  }
}

TEST_CASE("cap is enforced with the computed candidate count") {
  SearchSpec spec;
  spec.field = kGF3;
  spec.dim = 2;
  spec.obstructor = Mat<GFElem>::identity(2, kGF3);
  CHECK_THROWS_WITH_AS(search_regular_ybe(spec),
                       doctest::Contains("43046721"), Error);
  CHECK_THROWS_AS(
      search_regular_ybe(gf2_spec(mat_gf({{1, 1}, {0, 1}}, kGF2))),
      Error);  // non-idempotent obstructor
}

TEST_CASE("find_star_partner") {
  // invertible: exactly the inverse
  const auto tau = swap_operator<GFElem>(2, 2, kGF2);
  const auto partners = find_star_partner(tau, /*reflexive=*/true);
  CHECK(partners == std::vector<Mat<GFElem>>{tau});

  // zero matrix: reflexive forces zero, non-reflexive admits everything
  const auto z = Mat<GFElem>::zero(2, 2, kGF2);
  CHECK(find_star_partner(z, true) == std::vector<Mat<GFElem>>{z});
  CHECK(find_star_partner(z, false).size() == 16);

  // projector square: contains itself, cross-checked exhaustively
  const auto e = mat_gf({{1, 0}, {0, 0}}, kGF2);
  const auto r = kron(e, e);
  const auto got = find_star_partner(r, true);
  CHECK(std::find(got.begin(), got.end(), r) != got.end());
  std::vector<Mat<GFElem>> brute;
  for (std::uint64_t idx = 0; idx < 65536; ++idx) {
    const auto x = index_to_matrix(idx, 4, 4, kGF2);
    if (mat_mul(r, mat_mul(x, r)) == r && mat_mul(x, mat_mul(r, x)) == x) {
      brute.push_back(x);
    }
  }
  CHECK(got == brute);

  // rationals: the deterministic single answer
  const auto q = diag<Rational>({1, 0}, kQ);
  CHECK(find_star_partner(q, true) == std::vector<Mat<Rational>>{q});
}

TEST_CASE("antipode search") {
  // Z/2 group bialgebra over GF(2): S = id is cataloged
  Mat<GFElem> m(2, 4, kGF2);
  m.at(0, 0) = m.at(0, 3) = GFElem::one(kGF2);
  m.at(1, 1) = m.at(1, 2) = GFElem::one(kGF2);
  Mat<GFElem> d(4, 2, kGF2);
  d.at(0, 0) = GFElem::one(kGF2);
  d.at(3, 1) = GFElem::one(kGF2);
  const Bialgebra<GFElem> z2({m}, {d}, {Mat<GFElem>::identity(2, kGF2)});
  const auto cat = search_regular_antipodes(z2);
  CHECK(cat.examined == 16);
  CHECK(catalog_contains(cat, Mat<GFElem>::identity(2, kGF2)));
  for (const SolutionEntry& entry : cat.solutions) {
    const AntipodePair<GFElem> pair{{entry.matrix}, {}};
    CHECK(verify_regular_antipode(z2, pair).ok());
  }

  // projector bialgebra over GF(2): S = e is cataloged
  Mat<GFElem> pm(2, 4, kGF2);
  pm.at(0, 0) = GFElem::one(kGF2);
  Mat<GFElem> pd(4, 2, kGF2);
  pd.at(0, 0) = GFElem::one(kGF2);
  const auto e = mat_gf({{1, 0}, {0, 0}}, kGF2);
  const Bialgebra<GFElem> proj({pm}, {pd}, {e});
  CHECK(catalog_contains(search_regular_antipodes(proj), e));

  // zero bialgebra: the first identity e*S*e == e holds vacuously for every
  // S (every convolution is zero), but the reflexive half S*e*S == S pins
  // S = 0, so the catalog is exactly the zero endomorphism
  const Bialgebra<GFElem> zero_h({Mat<GFElem>::zero(2, 4, kGF2)},
                                 {Mat<GFElem>::zero(4, 2, kGF2)},
                                 {Mat<GFElem>::zero(2, 2, kGF2)});
  const auto zero_e = Mat<GFElem>::zero(2, 2, kGF2);
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const auto s = index_to_matrix(idx, 2, 2, kGF2);
    CHECK(convolution(zero_h, 0, convolution(zero_h, 0, zero_e, s), zero_e) ==
          zero_e);
  }
  const auto zcat = search_regular_antipodes(zero_h);
  CHECK(zcat.solutions.size() == 1);
  CHECK(zcat.solutions[0].matrix == zero_e);

  CHECK_THROWS_AS(search_regular_antipodes(z2, /*cap=*/8), Error);
}
