#include "regyb/linalg.hpp"

#include <algorithm>

namespace regyb {

namespace {

// Walks the affine set particular + span(basis) over GF(p) in base-p counter
// order. Solution counts are capped before enumeration starts.
std::uint64_t affine_count(std::uint64_t p, std::size_t nullity,
                           std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < nullity; ++i) {
    if (count > cap / p) return cap + 1;
    count *= p;
  }
  return count;
}

}  // namespace

std::vector<Mat<GFElem>> solve_inner_inverses(const Mat<GFElem>& m,
                                              bool reflexive,
                                              std::uint64_t cap) {
  const auto& ctx = m.ctx();
  const std::uint64_t p = ctx.p;
  // r(m X m) = (m kron m^T) r(X)
  const Mat<GFElem> system = sandwich_operator(m, m);
  const AffineSolutions<GFElem> sols = solve_affine(system, vec_rowmajor(m));
  if (!sols.consistent) {
    // m X m = m always has the reflexive g-inverse as a solution.
    throw Error("solve_inner_inverses: system unexpectedly inconsistent");
  }
  const std::size_t nullity = sols.basis.size();
  const std::uint64_t total = affine_count(p, nullity, cap);
  if (total > cap) {
    throw Error("solve_inner_inverses: solution space exceeds cap of " +
                std::to_string(cap));
  }

  std::vector<Mat<GFElem>> out;
  std::vector<std::uint64_t> digits(nullity, 0);
  std::vector<GFElem> x(sols.particular);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    x = sols.particular;
    for (std::size_t i = 0; i < nullity; ++i) {
      if (digits[i] == 0) continue;
      const GFElem c(digits[i], ctx);
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] += c * sols.basis[i][j];
      }
    }
    Mat<GFElem> cand = unvec_rowmajor<GFElem>(m.cols(), m.rows(), ctx, x);
    if (!reflexive || mat_mul(mat_mul(cand, m), cand) == cand) {
      out.push_back(std::move(cand));
    }
    for (std::size_t i = 0; i < nullity; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat<GFElem>> enumerate_ginverses(const Mat<GFElem>& m,
                                             std::uint64_t cap) {
  return solve_inner_inverses(m, /*reflexive=*/true, cap);
}

}  // namespace regyb
