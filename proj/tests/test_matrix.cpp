#include <doctest.h>

#include "regyb/gen.hpp"
#include "regyb/matrix.hpp"
#include "test_helpers.hpp"

using namespace regyb;
using namespace regyb::testing;

TEST_CASE("rational arithmetic is canonical") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("prime field arithmetic") {
  CHECK(GFElem::from_int(-1, kGF3).value() == 2);
  CHECK((GFElem(2, kGF3) * GFElem(2, kGF3)).value() == 1);
  CHECK(GFElem(2, kGF3).inv().value() == 2);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 97ull}) {
    const GFElem::Ctx ctx{p};
    for (std::uint64_t v = 1; v < p; ++v) {
      CHECK((GFElem(v, ctx) * GFElem(v, ctx).inv()) == GFElem::one(ctx));
    }
  }
  CHECK_THROWS_AS(GFElem::zero(kGF2).inv(), Error);
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK(FieldSpec::prime(2).str() == "GF(2)");
}

TEST_CASE("mat_mul matches hand results") {
  const auto i2q = Mat<Rational>::identity(2, kQ);
  CHECK(mat_mul(i2q, i2q) == i2q);

  // over GF(2): [[1,1],[1,1]] * [[1,0],[0,0]] = [[1,0],[1,0]]
  const auto ones = mat_gf({{1, 1}, {1, 1}}, kGF2);
  const auto proj = mat_gf({{1, 0}, {0, 0}}, kGF2);
  CHECK(mat_mul(ones, proj) == mat_gf({{1, 0}, {1, 0}}, kGF2));

  // over Q: diag(1/2, 2) * diag(2, 1/2) = I
  const auto a = mat_q2({{{1, 2}, {0, 1}}, {{0, 1}, {2, 1}}});
  const auto b = mat_q2({{{2, 1}, {0, 1}}, {{0, 1}, {1, 2}}});
  CHECK(mat_mul(a, b) == i2q);

  CHECK_THROWS_AS(mat_mul(mat_q({{1, 2}}), mat_q({{1, 2}})), Error);
}

TEST_CASE("kron basics") {
  const auto p = diag<Rational>({1, 0}, kQ);
  CHECK(kron(p, p) == diag<Rational>({1, 0, 0, 0}, kQ));

  const auto m = mat_q({{1, 2}, {3, 4}});
  const auto i2 = Mat<Rational>::identity(2, kQ);
  const auto block = kron(i2, m);
  CHECK(block.rows() == 4);
  CHECK(block.at(0, 0) == Rational(1));
  CHECK(block.at(0, 1) == Rational(2));
  CHECK(block.at(2, 2) == Rational(1));
  CHECK(block.at(0, 2) == Rational(0));
}

TEST_CASE("kron mixed-product and associativity properties") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix<Rational>(rng, 2, 2, kQ);
    const auto b = random_matrix<Rational>(rng, 2, 2, kQ);
    const auto c = random_matrix<Rational>(rng, 2, 2, kQ);
    const auto d = random_matrix<Rational>(rng, 2, 2, kQ);
    CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("swap operator") {
  const auto i3 = Mat<Rational>::identity(3, kQ);
  CHECK(swap_operator<Rational>(1, 3, kQ) == i3);
  CHECK(swap_operator<Rational>(3, 1, kQ) == i3);

  const auto tau22 = swap_operator<Rational>(2, 2, kQ);
  CHECK(mat_mul(tau22, tau22) == Mat<Rational>::identity(4, kQ));

  Rng rng(7);
  const auto a = random_matrix<Rational>(rng, 2, 2, kQ);
  const auto b = random_matrix<Rational>(rng, 3, 3, kQ);
  const auto lhs = mat_mul(swap_operator<Rational>(2, 3, kQ),
                           mat_mul(kron(a, b), swap_operator<Rational>(3, 2, kQ)));
  CHECK(lhs == kron(b, a));
}

TEST_CASE("is_idempotent and the GF(2) 2x2 idempotent count") {
  CHECK(is_idempotent(Mat<Rational>::identity(3, kQ)));
  CHECK(is_idempotent(diag<Rational>({1, 0}, kQ)));
  CHECK_THROWS_AS(is_idempotent(mat_q({{1, 0}})), Error);

  int count = 0;
  for (int bits = 0; bits < 16; ++bits) {
    Mat<GFElem> m(2, 2, kGF2);
    for (int k = 0; k < 4; ++k) {
      m.at(k / 2, k % 2) = GFElem((bits >> k) & 1, kGF2);
    }
    if (is_idempotent(m)) ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("field mismatch is rejected") {
  const auto a = mat_gf({{1}}, kGF2);
  const auto b = mat_gf({{1}}, kGF3);
  CHECK_THROWS_AS(mat_mul(a, b), Error);
  CHECK_THROWS_AS(kron(a, b), Error);
}
