#include <doctest.h>

#include <algorithm>

#include "regyb/gen.hpp"
#include "regyb/linalg.hpp"
#include "regyb/search.hpp"
#include "test_helpers.hpp"

using namespace regyb;
using namespace regyb::testing;

TEST_CASE("rank") {
  CHECK(rank(Mat<Rational>::zero(2, 2, kQ)) == 0);
  CHECK(rank(Mat<Rational>::identity(3, kQ)) == 3);
  CHECK(rank(mat_gf({{1, 1}, {1, 1}}, kGF2)) == 1);
}

TEST_CASE("rank factorization examples") {
  {
    const auto m = diag<Rational>({1, 0}, kQ);
    const auto [f, g] = rank_factorization(m);
    CHECK(f == mat_q({{1}, {0}}));
    CHECK(g == mat_q({{1, 0}}));
    CHECK(mat_mul(f, g) == m);
  }
  {
    const auto i2 = Mat<Rational>::identity(2, kQ);
    const auto [f, g] = rank_factorization(i2);
    CHECK(f == i2);
    CHECK(g == i2);
  }
  {
    const auto m = mat_gf({{1, 1}, {1, 1}}, kGF2);
    const auto [f, g] = rank_factorization(m);
    CHECK(f == mat_gf({{1}, {1}}, kGF2));
    CHECK(g == mat_gf({{1, 1}}, kGF2));
    CHECK(mat_mul(f, g) == m);
  }
  {
    // zero-rank edge case: unique empty factors
    const auto z = Mat<GFElem>::zero(2, 3, kGF2);
    const auto [f, g] = rank_factorization(z);
    CHECK(f.rows() == 2);
    CHECK(f.cols() == 0);
    CHECK(g.rows() == 0);
    CHECK(g.cols() == 3);
  }
}

TEST_CASE("reflexive generalized inverse examples") {
  {
    const auto m = diag<Rational>({1, 0}, kQ);
    CHECK(reflexive_ginverse(m) == m);
  }
  {
    const auto m = mat_gf({{1, 1}, {1, 1}}, kGF2);
    const auto x = reflexive_ginverse(m);
    CHECK(x == mat_gf({{1, 0}, {0, 0}}, kGF2));
    CHECK(mat_mul(m, mat_mul(x, m)) == m);
    CHECK(mat_mul(x, mat_mul(m, x)) == x);
  }
  {
    // zero matrix: zero inverse of transposed shape
    const auto z = Mat<Rational>::zero(2, 3, kQ);
    CHECK(reflexive_ginverse(z) == Mat<Rational>::zero(3, 2, kQ));
  }
}

TEST_CASE("reflexive ginverse of invertible inputs is the exact inverse") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const auto m = random_invertible<Rational>(rng, n, kQ);
    const auto x = reflexive_ginverse(m);
    CHECK(x == inverse(m));
    CHECK(mat_mul(m, x) == Mat<Rational>::identity(n, kQ));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const auto m = random_invertible<GFElem>(rng, n, kGF3);
    CHECK(reflexive_ginverse(m) == inverse(m));
  }
}

TEST_CASE("reflexive ginverse identities hold for arbitrary shapes") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    const auto m = random_matrix<Rational>(rng, r, c, kQ);
    const auto x = reflexive_ginverse(m);
    CHECK(mat_mul(m, mat_mul(x, m)) == m);
    CHECK(mat_mul(x, mat_mul(m, x)) == x);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    const auto m = random_matrix<GFElem>(rng, r, c, kGF2);
    const auto x = reflexive_ginverse(m);
    CHECK(mat_mul(m, mat_mul(x, m)) == m);
    CHECK(mat_mul(x, mat_mul(m, x)) == x);
  }
}

namespace {

// Independent oracle: filter every candidate matrix by the two defining
// identities directly.
std::vector<Mat<GFElem>> brute_force_ginverses(const Mat<GFElem>& m) {
  std::vector<Mat<GFElem>> out;
  const std::uint64_t total =
      *checked_pow(m.ctx().p, m.rows() * m.cols());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Mat<GFElem> x = index_to_matrix(idx, m.cols(), m.rows(), m.ctx());
    if (mat_mul(m, mat_mul(x, m)) == m && mat_mul(x, mat_mul(m, x)) == x) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_ginverses against the exhaustive oracle") {
  // spec'd cases first
  const auto i2 = Mat<GFElem>::identity(2, kGF2);
  CHECK(enumerate_ginverses(i2) == std::vector<Mat<GFElem>>{i2});

  const auto z2 = Mat<GFElem>::zero(2, 2, kGF2);
  CHECK(enumerate_ginverses(z2) == std::vector<Mat<GFElem>>{z2});

  const auto p = mat_gf({{1, 0}, {0, 0}}, kGF2);
  const auto got = enumerate_ginverses(p);
  CHECK(std::find(got.begin(), got.end(), p) != got.end());
  CHECK(got == brute_force_ginverses(p));

  // all shapes up to 2x2 over GF(2), full set equality
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 1; c <= 2; ++c) {
      const std::uint64_t total = *checked_pow(2, r * c);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Mat<GFElem> m = index_to_matrix(idx, r, c, kGF2);
        CHECK(enumerate_ginverses(m) == brute_force_ginverses(m));
      }
    }
  }
}

TEST_CASE("enumerate_ginverses contains the deterministic one") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix<GFElem>(rng, 2, 2, kGF2);
    const auto all = enumerate_ginverses(m);
    const auto one = reflexive_ginverse(m);
    CHECK(std::find(all.begin(), all.end(), one) != all.end());
  }
}

TEST_CASE("solve_affine covers inconsistent and underdetermined systems") {
  // x + y = 1 over GF(2): two solutions
  const auto a = mat_gf({{1, 1}}, kGF2);
  const auto sols = solve_affine(a, {GFElem::one(kGF2)});
  CHECK(sols.consistent);
  CHECK(sols.basis.size() == 1);

  // 0 x = 1: inconsistent
  const auto zero = Mat<GFElem>::zero(1, 1, kGF2);
  CHECK_FALSE(solve_affine(zero, {GFElem::one(kGF2)}).consistent);
}

TEST_CASE("left_inverse rejects rank-deficient input") {
  CHECK_THROWS_AS(left_inverse(mat_q({{1, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(inverse(mat_q({{1, 1}, {1, 1}})), Error);
}
