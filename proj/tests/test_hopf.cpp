#include <doctest.h>

#include "regyb/gen.hpp"
#include "regyb/hopf.hpp"
#include "test_helpers.hpp"

using namespace regyb;
using namespace regyb::testing;

namespace {

// Z/2 group bialgebra over Q: basis {1, g}, g*g = 1, grouplike Delta.
Bialgebra<Rational> z2_bialgebra() {
  Mat<Rational> m(2, 4, kQ);
  m.at(0, 0) = m.at(0, 3) = Rational(1);
  m.at(1, 1) = m.at(1, 2) = Rational(1);
  Mat<Rational> d(4, 2, kQ);
  d.at(0, 0) = Rational(1);
  d.at(3, 1) = Rational(1);
  Mat<Rational> eta(2, 1, kQ);
  eta.at(0, 0) = Rational(1);
  Mat<Rational> eps(1, 2, kQ);
  eps.at(0, 0) = eps.at(0, 1) = Rational(1);
  return Bialgebra<Rational>({m}, {d}, {Mat<Rational>::identity(2, kQ)},
                             {{eta}}, {{eps}});
}

// Projector bialgebra on the plane: e = diag(1,0), m keeps only the
// e0 (x) e0 product, Delta(e0) = e0 (x) e0, Delta(e1) = 0.
Bialgebra<Rational> projector_bialgebra() {
  Mat<Rational> m(2, 4, kQ);
  m.at(0, 0) = Rational(1);
  Mat<Rational> d(4, 2, kQ);
  d.at(0, 0) = Rational(1);
  Mat<Rational> eta(2, 1, kQ);
  eta.at(0, 0) = Rational(1);
  Mat<Rational> eps(1, 2, kQ);
  eps.at(0, 0) = Rational(1);
  return Bialgebra<Rational>({m}, {d}, {diag<Rational>({1, 0}, kQ)}, {{eta}},
                             {{eps}});
}

}  // namespace

TEST_CASE("bialgebra fixtures verify") {
  CHECK(verify_bialgebra(z2_bialgebra()).ok());
  CHECK(verify_bialgebra(projector_bialgebra()).ok());
  CHECK(verify_bialgebra_compat(z2_bialgebra()).ok());
  CHECK(verify_bialgebra_compat(projector_bialgebra()).ok());
}

TEST_CASE("bialgebra construction rejects mismatched pieces") {
  Mat<Rational> m(2, 4, kQ);
  Mat<Rational> d(4, 2, kQ);
  const auto e = Mat<Rational>::identity(2, kQ);
  Mat<Rational> bad_eta(3, 1, kQ);
  CHECK_THROWS_AS(
      Bialgebra<Rational>({m}, {d}, {e}, {{bad_eta}}, {{Mat<Rational>(1, 2, kQ)}}),
      Error);
  CHECK_THROWS_AS(Bialgebra<Rational>({m}, {d}, {Mat<Rational>(2, 3, kQ)}),
                  Error);
}

TEST_CASE("convolution examples") {
  const auto h = z2_bialgebra();
  const auto id2 = Mat<Rational>::identity(2, kQ);

  // id * id sends both basis elements to 1: g maps to g^2 = 1
  const auto idid = convolution(h, 0, id2, id2);
  CHECK(idid == mat_q({{1, 1}, {0, 0}}));

  // eta o eps is the unit of classical convolution
  Rng rng(71);
  const auto unit = mat_mul(h.unit(0), h.counit(0));
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_matrix<Rational>(rng, 2, 2, kQ);
    CHECK(convolution(h, 0, unit, t) == t);
    CHECK(convolution(h, 0, t, unit) == t);
  }

  // projector bialgebra: e * e == e
  const auto p = projector_bialgebra();
  const auto e = p.obstructor(0);
  CHECK(convolution(p, 0, e, e) == e);

  CHECK_THROWS_AS(convolution(h, 0, Mat<Rational>(3, 3, kQ), id2), Error);
}

TEST_CASE("classical convolution is associative") {
  const auto h = z2_bialgebra();
  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_matrix<Rational>(rng, 2, 2, kQ);
    const auto t = random_matrix<Rational>(rng, 2, 2, kQ);
    const auto u = random_matrix<Rational>(rng, 2, 2, kQ);
    CHECK(convolution(h, 0, convolution(h, 0, s, t), u) ==
          convolution(h, 0, s, convolution(h, 0, t, u)));
  }
}

TEST_CASE("regular antipode") {
  // classical: S = id on the Z/2 Hopf algebra
  const auto h = z2_bialgebra();
  const AntipodePair<Rational> classical{{Mat<Rational>::identity(2, kQ)}, {}};
  CHECK(verify_regular_antipode(h, classical).ok());

  // projector bialgebra: S = e passes both identities
  const auto p = projector_bialgebra();
  const AntipodePair<Rational> se{{p.obstructor(0)}, {}};
  CHECK(verify_regular_antipode(p, se).ok());

  // S = id - e fails the reflexivity half
  const auto id_minus_e =
      mat_sub(Mat<Rational>::identity(2, kQ), p.obstructor(0));
  const AntipodePair<Rational> bad{{id_minus_e}, {}};
  const Report rep = verify_regular_antipode(p, bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.checks[1].axiom == "antipode-reflexivity");
  CHECK_FALSE(rep.checks[1].pass);
}

TEST_CASE("1-star antipode system") {
  const auto p = projector_bialgebra();
  const auto e = p.obstructor(0);

  // S = S* = e: every convolution collapses to e
  const AntipodePair<Rational> good{{e}, {{e}}};
  CHECK(verify_regular_antipode(p, good).ok());

  // a zero star partner cannot reproduce e
  const AntipodePair<Rational> bad{{e}, {{Mat<Rational>::zero(2, 2, kQ)}}};
  const Report rep = verify_regular_antipode(p, bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.checks[0].axiom == "antipode-1star-e");
}

TEST_CASE("convolution parenthesization warning on a non-coassociative fixture") {
  // Delta(e0) = e0 (x) e1 with m(e0 (x) e0) = m(e0 (x) e1) = e0: the two
  // parenthesizations of id * id * id differ, which must surface as a
  // warning rather than silently picking one.
  Mat<Rational> m(2, 4, kQ);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(1);
  Mat<Rational> d(4, 2, kQ);
  d.at(1, 0) = Rational(1);
  const Bialgebra<Rational> h({m}, {d}, {Mat<Rational>::identity(2, kQ)});

  const auto id2 = Mat<Rational>::identity(2, kQ);
  const auto left = convolution(h, 0, convolution(h, 0, id2, id2), id2);
  const auto right = convolution(h, 0, id2, convolution(h, 0, id2, id2));
  REQUIRE(left != right);

  const AntipodePair<Rational> s{{id2}, {}};
  const Report rep = verify_regular_antipode(h, s);
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("unit/counit antipode relation") {
  const auto h = z2_bialgebra();
  const AntipodePair<Rational> classical{{Mat<Rational>::identity(2, kQ)}, {}};
  CHECK(verify_unit_counit_antipode(h, classical).ok());

  const auto p = projector_bialgebra();
  const AntipodePair<Rational> se{{p.obstructor(0)}, {}};
  CHECK(verify_unit_counit_antipode(p, se).ok());

  // S = 0 against a nonzero eta o eps fails
  const AntipodePair<Rational> zero{{Mat<Rational>::zero(2, 2, kQ)}, {}};
  CHECK_FALSE(verify_unit_counit_antipode(p, zero).ok());

  // missing unit/counit is an input error
  Mat<Rational> m(2, 4, kQ);
  m.at(0, 0) = Rational(1);
  Mat<Rational> d(4, 2, kQ);
  d.at(0, 0) = Rational(1);
  const Bialgebra<Rational> bare({m}, {d}, {diag<Rational>({1, 0}, kQ)});
  CHECK_THROWS_AS(verify_unit_counit_antipode(bare, se), Error);
}

TEST_CASE("module actions") {
  const auto h = projector_bialgebra();

  // regular representation: H acting on itself by its multiplication
  const ModuleAction<Rational> regular(ModuleSide::Right, {h.mult(0)},
                                       {h.obstructor(0)});
  CHECK(verify_module_action(regular, h).ok());

  // trivial one-dimensional module through the counit, classical case
  const auto hz = z2_bialgebra();
  const ModuleAction<Rational> trivial(ModuleSide::Right, {hz.counit(0)},
                                       {Mat<Rational>::identity(1, kQ)});
  CHECK(verify_module_action(trivial, hz).ok());

  // action moving weight out of the module obstructor's image fails
  Mat<Rational> rho(2, 4, kQ);
  rho.at(0, 2) = Rational(1);  // e1 (x) e0 -> e0
  const ModuleAction<Rational> bad(ModuleSide::Right, {rho}, {h.obstructor(0)});
  const Report rep = verify_module_action(bad, h);
  CHECK_FALSE(rep.ok());

  // left actions mirror the compatibility square
  const ModuleAction<Rational> left(ModuleSide::Left, {h.mult(0)},
                                    {h.obstructor(0)});
  CHECK(verify_module_action(left, h).ok());
}

TEST_CASE("braiding from an R-matrix") {
  const auto hz = z2_bialgebra();
  const auto id2 = Mat<Rational>::identity(2, kQ);
  const auto id4 = Mat<Rational>::identity(4, kQ);
  const auto tau = swap_operator<Rational>(2, 2, kQ);

  const ModuleAction<Rational> reg(ModuleSide::Right, {hz.mult(0)}, {id2});

  // R = id: the braiding is the flip
  const auto b1 =
      braiding_from_rmatrix(hz, YBOperator<Rational>({id4}), reg, reg);
  CHECK(b1.component(0) == tau);
  CHECK(b1.has_stars());

  // R = tau: the braiding is the identity
  const auto b2 =
      braiding_from_rmatrix(hz, YBOperator<Rational>({tau}), reg, reg);
  CHECK(b2.component(0) == id4);

  // projector bialgebra with R = e (x) e
  const auto hp = projector_bialgebra();
  const auto e = hp.obstructor(0);
  const ModuleAction<Rational> preg(ModuleSide::Right, {hp.mult(0)}, {e});
  const auto b3 = braiding_from_rmatrix(
      hp, YBOperator<Rational>({kron(e, e)}), preg, preg);
  CHECK(b3.component(0) == mat_mul(tau, kron(e, e)));
  CHECK(verify_star_regularity(b3).ok());
  CHECK(verify_naturality(b3).ok());
  // the reversed composition is a valid star partner too
  const auto backwards = mat_mul(kron(e, e), tau);
  CHECK(mat_mul(b3.component(0),
                mat_mul(backwards, b3.component(0))) == b3.component(0));

  // an operator that does not commute with the module obstructors is refused
  Mat<Rational> bad = Mat<Rational>::zero(4, 4, kQ);
  bad.at(0, 3) = Rational(1);
  CHECK_THROWS_AS(
      braiding_from_rmatrix(hp, YBOperator<Rational>({bad}), preg, preg),
      Error);
}
