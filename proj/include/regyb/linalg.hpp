#ifndef REGYB_LINALG_HPP_
#define REGYB_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "regyb/matrix.hpp"

namespace regyb {

// Reduced row echelon form with pivot columns chosen left-to-right.
// Deterministic over exact fields: the first nonzero candidate in a column
// is the pivot, no magnitude heuristics.
template <class K>
struct Rref {
  Mat<K> mat;
  std::vector<std::size_t> pivots;  // pivot column of row k, strictly increasing
};

template <class K>
Rref<K> rref(Mat<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(sel, j), m.at(row, j));
      }
    }
    const K inv = m.at(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const K factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  return rref(m).pivots.size();
}

// m == f * g with f full column rank (rows x r) and g full row rank
// (r x cols); r == 0 yields the unique empty factors.
template <class K>
std::pair<Mat<K>, Mat<K>> rank_factorization(const Mat<K>& m) {
  const Rref<K> e = rref(m);
  const std::size_t r = e.pivots.size();
  Mat<K> f(m.rows(), r, m.ctx());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) f.at(i, k) = m.at(i, e.pivots[k]);
  Mat<K> g(r, m.cols(), m.ctx());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) g.at(k, j) = e.mat.at(k, j);
  return {std::move(f), std::move(g)};
}

// Exact inverse of a square invertible matrix, from [m | I] row reduction.
template <class K>
Mat<K> inverse(const Mat<K>& m) {
  if (!m.is_square()) throw Error("inverse: non-square input");
  const std::size_t n = m.rows();
  Mat<K> aug(n, 2 * n, m.ctx());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K::one(m.ctx());
  }
  const Rref<K> e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) {
    throw Error("inverse: matrix is singular");
  }
  Mat<K> inv(n, n, m.ctx());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
  return inv;
}

// Left inverse of a full-column-rank matrix: select pivot rows greedily
// top-to-bottom and invert the resulting square block.
template <class K>
Mat<K> left_inverse(const Mat<K>& f) {
  const std::size_t n = f.rows(), r = f.cols();
  const Rref<K> rowsel = rref(f.transpose());
  if (rowsel.pivots.size() != r) {
    throw Error("left_inverse: input does not have full column rank");
  }
  Mat<K> square(r, r, f.ctx());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      square.at(k, j) = f.at(rowsel.pivots[k], j);
    }
  const Mat<K> inv = inverse(square);
  Mat<K> fl(r, n, f.ctx());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) {
      fl.at(i, rowsel.pivots[k]) = inv.at(i, k);
    }
  return fl;
}

template <class K>
bool is_invertible(const Mat<K>& m) {
  return m.is_square() && rank(m) == m.rows();
}

// Deterministic reflexive (von Neumann 1-star) generalized inverse:
// m X m == m and X m X == X. Built from the rank factorization m = f g,
// with g_r the pivot-column right inverse of g and f_l a left inverse of f.
// Pivot columns are taken left-to-right, so the result is reproducible even
// though star inverses are not unique.
template <class K>
Mat<K> reflexive_ginverse(const Mat<K>& m) {
  const Rref<K> e = rref(m);
  const std::size_t r = e.pivots.size();
  if (r == 0) return Mat<K>::zero(m.cols(), m.rows(), m.ctx());

  Mat<K> f(m.rows(), r, m.ctx());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) f.at(i, k) = m.at(i, e.pivots[k]);

  // g is in RREF, so its pivot columns are the standard basis of K^r and the
  // selection matrix g_r with g_r[pivots[k], k] = 1 satisfies g * g_r = I_r.
  Mat<K> gr(m.cols(), r, m.ctx());
  for (std::size_t k = 0; k < r; ++k) gr.at(e.pivots[k], k) = K::one(m.ctx());

  return mat_mul(gr, left_inverse(f));
}

// Solution set of the linear system A x = b as a particular solution plus a
// nullspace basis (free variables in increasing column order). Empty when
// inconsistent.
template <class K>
struct AffineSolutions {
  bool consistent = false;
  std::vector<K> particular;           // length A.cols()
  std::vector<std::vector<K>> basis;   // each length A.cols()
};

template <class K>
AffineSolutions<K> solve_affine(const Mat<K>& a, const std::vector<K>& b) {
  if (b.size() != a.rows()) throw Error("solve_affine: rhs length mismatch");
  const std::size_t n = a.cols();
  Mat<K> aug(a.rows(), n + 1, a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  const Rref<K> e = rref(std::move(aug));
  AffineSolutions<K> out;
  if (!e.pivots.empty() && e.pivots.back() == n) return out;  // 0 = 1 row
  out.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  out.particular.assign(n, K::zero(a.ctx()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    out.particular[e.pivots[k]] = e.mat.at(k, n);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(n, K::zero(a.ctx()));
    v[j] = K::one(a.ctx());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      v[e.pivots[k]] = -e.mat.at(k, j);
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

// Row-major flattening identity: r(A X B) = (A kron B^T) r(X). Used to turn
// matrix equations that are linear in X into flat systems.
template <class K>
Mat<K> sandwich_operator(const Mat<K>& a, const Mat<K>& b) {
  return kron(a, b.transpose());
}

template <class K>
std::vector<K> vec_rowmajor(const Mat<K>& m) {
  return m.entries();
}

template <class K>
Mat<K> unvec_rowmajor(std::size_t rows, std::size_t cols,
                      const typename K::Ctx& ctx, std::vector<K> v) {
  return Mat<K>(rows, cols, ctx, std::move(v));
}

// All generalized inverses of m over a prime field: solve m X m = m (linear
// in X), then keep the reflexive ones (X m X = X). Canonically ordered by
// entry-lexicographic comparison. `cap` bounds the affine solution count.
std::vector<Mat<GFElem>> enumerate_ginverses(const Mat<GFElem>& m,
                                             std::uint64_t cap = 1u << 20);

// All solutions X of m X m = m over a prime field, optionally filtered by
// reflexivity; shared engine for enumerate_ginverses and star-partner search.
std::vector<Mat<GFElem>> solve_inner_inverses(const Mat<GFElem>& m,
                                              bool reflexive,
                                              std::uint64_t cap);

}  // namespace regyb

#endif  // REGYB_LINALG_HPP_
