#ifndef REGYB_MATRIX_HPP_
#define REGYB_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regyb/field.hpp"

namespace regyb {

// Dense exact matrix over K (Rational or GFElem), row-major. The field
// context is stored explicitly so 0 x n and n x 0 matrices stay well-typed.
template <class K>
class Mat {
 public:
  using Ctx = typename K::Ctx;

  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, const Ctx& ctx)
      : rows_(rows), cols_(cols), ctx_(ctx),
        entries_(rows * cols, K::zero(ctx)) {}
  Mat(std::size_t rows, std::size_t cols, const Ctx& ctx,
      std::vector<K> entries)
      : rows_(rows), cols_(cols), ctx_(ctx), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw Error("Mat: entry count does not match shape");
    }
  }

  static Mat identity(std::size_t n, const Ctx& ctx) {
    Mat m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::one(ctx);
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols, const Ctx& ctx) {
    return Mat(rows, cols, ctx);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ctx& ctx() const { return ctx_; }
  bool is_square() const { return rows_ == cols_; }

  K& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<K>& entries() const { return entries_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ctx_ == b.ctx_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) = default;

  // Entry-lexicographic order (shape-major); canonical catalog order.
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i] != b.entries_[i]) return a.entries_[i] < b.entries_[i];
    }
    return false;
  }

  Mat transpose() const {
    Mat t(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
      s += "]";
    }
    s += "]";
    return s;
  }

 private:
  std::size_t rows_, cols_;
  Ctx ctx_;
  std::vector<K> entries_;
};

template <class K>
void require_same_field(const Mat<K>& a, const Mat<K>& b, const char* op) {
  if (a.ctx() != b.ctx()) {
    throw Error(std::string(op) + ": field mismatch");
  }
}

// Exact product; realizes composition of linear maps (left factor applied
// second).
template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
  require_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw Error("mat_mul: dimension mismatch (" + std::to_string(a.rows()) +
                "x" + std::to_string(a.cols()) + " * " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                ")");
  }
  Mat<K> c(a.rows(), b.cols(), a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const K& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

template <class K>
Mat<K> operator*(const Mat<K>& a, const Mat<K>& b) {
  return mat_mul(a, b);
}

template <class K>
Mat<K> mat_add(const Mat<K>& a, const Mat<K>& b) {
  require_same_field(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("mat_add: dimension mismatch");
  }
  Mat<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) += b.at(i, j);
  return c;
}

template <class K>
Mat<K> mat_sub(const Mat<K>& a, const Mat<K>& b) {
  require_same_field(a, b, "mat_sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("mat_sub: dimension mismatch");
  }
  Mat<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

template <class K>
Mat<K> scalar_mul(const K& s, const Mat<K>& a) {
  Mat<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * c.at(i, j);
  return c;
}

// Kronecker product with left-factor-major basis ordering: basis vector
// e_i (x) e_j of the product space sits at flat index i * dim(right) + j.
// This one convention is fixed project-wide; swap_operator and every tensor
// identity below assume it.
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  require_same_field(a, b, "kron");
  Mat<K> c(a.rows() * b.rows(), a.cols() * b.cols(), a.ctx());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const K& a1 = a.at(i1, j1);
      if (a1.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = a1 * b.at(i2, j2);
        }
    }
  return c;
}

// Permutation matrix sending e_i (x) e_j to e_j (x) e_i, i.e. the
// transposition tau between a d1- and a d2-dimensional factor.
template <class K>
Mat<K> swap_operator(std::size_t d1, std::size_t d2,
                     const typename K::Ctx& ctx) {
  Mat<K> s(d1 * d2, d1 * d2, ctx);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      s.at(j * d1 + i, i * d2 + j) = K::one(ctx);
    }
  return s;
}

template <class K>
bool is_idempotent(const Mat<K>& m) {
  if (!m.is_square()) throw Error("is_idempotent: non-square input");
  return mat_mul(m, m) == m;
}

// Coordinates and printed values of the first entry where two equal-shaped
// matrices differ.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

template <class K>
std::optional<EntryDiff> first_diff(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("first_diff: shape mismatch");
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) {
        return EntryDiff{i, j, a.at(i, j).str(), b.at(i, j).str()};
      }
    }
  return std::nullopt;
}

}  // namespace regyb

#endif  // REGYB_MATRIX_HPP_
