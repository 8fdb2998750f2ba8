#ifndef REGYB_GEN_HPP_
#define REGYB_GEN_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "regyb/cocycle.hpp"
#include "regyb/linalg.hpp"
#include "regyb/ybop.hpp"

namespace regyb {

// Deterministic fixture RNG; all generators below are pure functions of the
// seed so fixtures are reproducible across runs and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng_);
  }
  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

// Small random scalars keep rational arithmetic compact under conjugation.
inline Rational random_scalar(Rng& rng, const Rational::Ctx&) {
  return Rational(rng.in(-3, 3), rng.in(1, 3));
}
inline GFElem random_scalar(Rng& rng, const GFElem::Ctx& ctx) {
  return GFElem(rng.below(ctx.p), ctx);
}

template <class K>
Mat<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                     const typename K::Ctx& ctx) {
  Mat<K> m(rows, cols, ctx);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, ctx);
  return m;
}

template <class K>
Mat<K> random_invertible(Rng& rng, std::size_t n,
                         const typename K::Ctx& ctx) {
  for (int tries = 0; tries < 200; ++tries) {
    Mat<K> m = random_matrix<K>(rng, n, n, ctx);
    if (is_invertible(m)) return m;
  }
  throw Error("random_invertible: no invertible sample found");
}

// Coordinate projector of the given rank conjugated by a random invertible
// matrix; rank is sampled uniformly when not specified.
template <class K>
Mat<K> random_idempotent(Rng& rng, std::size_t n, const typename K::Ctx& ctx) {
  const std::size_t r = rng.below(n + 1);
  Mat<K> d(n, n, ctx);
  for (std::size_t i = 0; i < r; ++i) d.at(i, i) = K::one(ctx);
  const Mat<K> u = random_invertible<K>(rng, n, ctx);
  return mat_mul(u, mat_mul(d, inverse(u)));
}

// Rectangular truncation/embedding with ones on the main diagonal.
template <class K>
Mat<K> partial_identity(std::size_t rows, std::size_t cols,
                        const typename K::Ctx& ctx) {
  Mat<K> m(rows, cols, ctx);
  for (std::size_t i = 0; i < rows && i < cols; ++i) m.at(i, i) = K::one(ctx);
  return m;
}

// Random regular cocycle via rejection: sample an idempotent P_n on each
// carrier, set f_n = P_{n+1} A_n P_n for a mixed choice of A_n, and reject
// samples failing regularity. The construction does not guarantee
// regularity in general, hence the retry loop.
template <class K>
Cocycle<K> random_regular_cocycle(Rng& rng, const std::vector<std::size_t>& dims,
                                  const typename K::Ctx& ctx,
                                  int max_tries = 100) {
  if (dims.empty()) throw Error("random_regular_cocycle: no levels");
  const std::size_t count = dims.size();
  bool equal_dims = true;
  for (std::size_t d : dims) equal_dims = equal_dims && d == dims[0];

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const std::uint64_t mode = rng.below(3);
    std::vector<Mat<K>> arrows;
    if (mode == 0 && equal_dims) {
      // Constant chain: a single idempotent is regular at every length.
      const Mat<K> p = random_idempotent<K>(rng, dims[0], ctx);
      arrows.assign(count, p);
    } else {
      std::vector<Mat<K>> proj;
      proj.reserve(count);
      for (std::size_t n = 0; n < count; ++n) {
        proj.push_back(random_idempotent<K>(rng, dims[n], ctx));
      }
      for (std::size_t n = 0; n < count; ++n) {
        const std::size_t next = (n + 1) % count;
        const Mat<K> a =
            mode == 1 ? partial_identity<K>(dims[next], dims[n], ctx)
                      : random_matrix<K>(rng, dims[next], dims[n], ctx);
        arrows.push_back(mat_mul(proj[next], mat_mul(a, proj[n])));
      }
    }
    Cocycle<K> c(std::move(arrows));
    if (verify_regularity(c).ok()) return c;
  }
  throw Error("random_regular_cocycle: retry cap exhausted");
}

// Obstructed algebra with the given obstructor family: m = e m0 (e (x) e)
// satisfies the compatibility condition for any m0.
template <class K>
Algebra<K> random_obstructed_algebra(Rng& rng,
                                     const std::vector<Mat<K>>& obstructors) {
  std::vector<Mat<K>> mults;
  for (const Mat<K>& e : obstructors) {
    const std::size_t d = e.rows();
    const Mat<K> m0 = random_matrix<K>(rng, d, d * d, e.ctx());
    mults.push_back(mat_mul(e, mat_mul(m0, kron(e, e))));
  }
  return Algebra<K>(std::move(mults), obstructors,
                    /*claims_associativity=*/false);
}

template <class K>
Coalgebra<K> random_obstructed_coalgebra(
    Rng& rng, const std::vector<Mat<K>>& obstructors) {
  std::vector<Mat<K>> comults;
  for (const Mat<K>& e : obstructors) {
    const std::size_t d = e.rows();
    const Mat<K> d0 = random_matrix<K>(rng, d * d, d, e.ctx());
    comults.push_back(mat_mul(kron(e, e), mat_mul(d0, e)));
  }
  return Coalgebra<K>(std::move(comults), obstructors,
                      /*claims_coassociativity=*/false);
}

// Verified (obstructor family, Yang-Baxter operator) pair: one of the known
// solution families (identity, transposition, the obstructor square, and the
// transposed square), scaled and conjugated by a random change of basis.
// Conjugation by U (x) U preserves both operator axioms.
template <class K>
std::pair<std::vector<Mat<K>>, YBOperator<K>> random_regular_yb_pair(
    Rng& rng, std::size_t levels, std::size_t dim,
    const typename K::Ctx& ctx) {
  std::vector<Mat<K>> obstructors;
  std::vector<Mat<K>> ops;
  std::vector<Mat<K>> stars;
  for (std::size_t n = 0; n < levels; ++n) {
    const std::size_t r = rng.below(dim + 1);
    Mat<K> e0(dim, dim, ctx);
    for (std::size_t i = 0; i < r; ++i) e0.at(i, i) = K::one(ctx);

    const Mat<K> tau = swap_operator<K>(dim, dim, ctx);
    const Mat<K> square = kron(e0, e0);
    Mat<K> r0;
    switch (rng.below(4)) {
      case 0: r0 = Mat<K>::identity(dim * dim, ctx); break;
      case 1: r0 = tau; break;
      case 2: r0 = square; break;
      default: r0 = mat_mul(tau, square); break;
    }
    K lambda = random_scalar(rng, ctx);
    if (lambda.is_zero()) lambda = K::one(ctx);
    r0 = scalar_mul(lambda, r0);

    const Mat<K> u = random_invertible<K>(rng, dim, ctx);
    const Mat<K> uu = kron(u, u);
    const Mat<K> e = mat_mul(u, mat_mul(e0, inverse(u)));
    Mat<K> rn = mat_mul(uu, mat_mul(r0, inverse(uu)));
    stars.push_back(reflexive_ginverse(rn));
    obstructors.push_back(e);
    ops.push_back(std::move(rn));
  }
  return {std::move(obstructors),
          YBOperator<K>(std::move(ops), std::move(stars))};
}

}  // namespace regyb

#endif  // REGYB_GEN_HPP_
