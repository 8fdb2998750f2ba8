#ifndef REGYB_YBOP_HPP_
#define REGYB_YBOP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regyb/cocycle.hpp"

namespace regyb {

// Set of N carriers A_n with multiplications m_n : A_n (x) A_n -> A_n and
// idempotent obstructors e_n. The instance declares which axioms it claims
// (the obstructor compatibility is always claimed; associativity is opt-in
// since it is a separate, stronger condition).
template <class K>
class Algebra {
 public:
  Algebra(std::vector<Mat<K>> mults, std::vector<Mat<K>> obstructors,
          bool claims_associativity = false)
      : mults_(std::move(mults)),
        obstructors_(std::move(obstructors)),
        claims_associativity_(claims_associativity) {
    if (mults_.empty() || mults_.size() != obstructors_.size()) {
      throw Error("Algebra: need one multiplication and obstructor per level");
    }
    for (std::size_t n = 0; n < mults_.size(); ++n) {
      const Mat<K>& e = obstructors_[n];
      if (!e.is_square()) throw Error("Algebra: obstructor not square");
      const std::size_t d = e.rows();
      if (mults_[n].rows() != d || mults_[n].cols() != d * d) {
        throw Error("Algebra: multiplication " + std::to_string(n + 1) +
                    " is not d x d^2");
      }
      if (mults_[n].ctx() != e.ctx()) throw Error("Algebra: field mismatch");
    }
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;

  std::size_t levels() const { return mults_.size(); }
  std::size_t dim(std::size_t n) const { return obstructors_[n].rows(); }
  const Mat<K>& mult(std::size_t n) const { return mults_[n]; }
  const Mat<K>& obstructor(std::size_t n) const { return obstructors_[n]; }
  const std::vector<Mat<K>>& obstructors() const { return obstructors_; }
  bool claims_associativity() const { return claims_associativity_; }
  const typename K::Ctx& ctx() const { return mults_[0].ctx(); }

 private:
  std::vector<Mat<K>> mults_;
  std::vector<Mat<K>> obstructors_;
  bool claims_associativity_;
};

// Mirror structure with comultiplications Delta_n : A_n -> A_n (x) A_n.
template <class K>
class Coalgebra {
 public:
  Coalgebra(std::vector<Mat<K>> comults, std::vector<Mat<K>> obstructors,
            bool claims_coassociativity = false)
      : comults_(std::move(comults)),
        obstructors_(std::move(obstructors)),
        claims_coassociativity_(claims_coassociativity) {
    if (comults_.empty() || comults_.size() != obstructors_.size()) {
      throw Error("Coalgebra: need one comultiplication and obstructor per level");
    }
    for (std::size_t n = 0; n < comults_.size(); ++n) {
      const Mat<K>& e = obstructors_[n];
      if (!e.is_square()) throw Error("Coalgebra: obstructor not square");
      const std::size_t d = e.rows();
      if (comults_[n].rows() != d * d || comults_[n].cols() != d) {
        throw Error("Coalgebra: comultiplication " + std::to_string(n + 1) +
                    " is not d^2 x d");
      }
      if (comults_[n].ctx() != e.ctx()) throw Error("Coalgebra: field mismatch");
    }
  }

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

  std::size_t levels() const { return comults_.size(); }
  std::size_t dim(std::size_t n) const { return obstructors_[n].rows(); }
  const Mat<K>& comult(std::size_t n) const { return comults_[n]; }
  const Mat<K>& obstructor(std::size_t n) const { return obstructors_[n]; }
  const std::vector<Mat<K>>& obstructors() const { return obstructors_; }
  bool claims_coassociativity() const { return claims_coassociativity_; }
  const typename K::Ctx& ctx() const { return comults_[0].ctx(); }

 private:
  std::vector<Mat<K>> comults_;
  std::vector<Mat<K>> obstructors_;
  bool claims_coassociativity_;
};

// Yang-Baxter operators R_n on A_n (x) A_n, optionally with reflexive star
// partners R*_n.
template <class K>
class YBOperator {
 public:
  explicit YBOperator(std::vector<Mat<K>> operators,
                      std::optional<std::vector<Mat<K>>> stars = std::nullopt)
      : operators_(std::move(operators)), stars_(std::move(stars)) {
    if (operators_.empty()) throw Error("YBOperator: no operators");
    for (const Mat<K>& r : operators_) {
      if (!r.is_square()) throw Error("YBOperator: operator not square");
      if (r.ctx() != operators_[0].ctx()) {
        throw Error("YBOperator: field mismatch");
      }
    }
    if (stars_) {
      if (stars_->size() != operators_.size()) {
        throw Error("YBOperator: star count mismatch");
      }
      for (std::size_t n = 0; n < operators_.size(); ++n) {
        if ((*stars_)[n].rows() != operators_[n].rows() ||
            (*stars_)[n].cols() != operators_[n].cols() ||
            (*stars_)[n].ctx() != operators_[n].ctx()) {
          throw Error("YBOperator: star shape mismatch");
        }
      }
    }
  }

  friend bool operator==(const YBOperator&, const YBOperator&) = default;

  std::size_t levels() const { return operators_.size(); }
  const Mat<K>& op(std::size_t n) const { return operators_[n]; }
  const std::vector<Mat<K>>& ops() const { return operators_; }
  bool has_stars() const { return stars_.has_value(); }
  const Mat<K>& star(std::size_t n) const {
    if (!stars_) throw Error("YBOperator: star operators missing");
    return (*stars_)[n];
  }
  const std::optional<std::vector<Mat<K>>>& stars() const { return stars_; }

 private:
  std::vector<Mat<K>> operators_;
  std::optional<std::vector<Mat<K>>> stars_;
};

// Obstructor compatibility e o m == m o (e (x) e) per level, and declared
// obstructed associativity m o (m (x) e) == m o (e (x) m).
template <class K>
Report verify_algebra(const Algebra<K>& a) {
  Report rep;
  for (std::size_t n = 0; n < a.levels(); ++n) {
    const Mat<K>& e = a.obstructor(n);
    const Mat<K>& m = a.mult(n);
    rep.add_equal("obstructor-idempotent", n + 1, mat_mul(e, e), e);
    rep.add_equal("mult-obstructor-compat", n + 1, mat_mul(e, m),
                  mat_mul(m, kron(e, e)));
    if (a.claims_associativity()) {
      rep.add_equal("obstructed-associativity", n + 1,
                    mat_mul(m, kron(m, e)), mat_mul(m, kron(e, m)));
    }
  }
  return rep;
}

template <class K>
Report verify_coalgebra(const Coalgebra<K>& c) {
  Report rep;
  for (std::size_t n = 0; n < c.levels(); ++n) {
    const Mat<K>& e = c.obstructor(n);
    const Mat<K>& d = c.comult(n);
    rep.add_equal("obstructor-idempotent", n + 1, mat_mul(e, e), e);
    rep.add_equal("comult-obstructor-compat", n + 1, mat_mul(d, e),
                  mat_mul(kron(e, e), d));
    if (c.claims_coassociativity()) {
      rep.add_equal("obstructed-coassociativity", n + 1,
                    mat_mul(kron(d, e), d), mat_mul(kron(e, d), d));
    }
  }
  return rep;
}

// Operator axioms against a family of obstructors: commutation with
// e (x) e, the regular Yang-Baxter equation
//   (e (x) R)(R (x) e)(e (x) R) == (R (x) e)(e (x) R)(R (x) e)
// on the triple space, and the reflexive pair when stars are present.
template <class K>
Report verify_yb_operator(const std::vector<Mat<K>>& obstructors,
                          const YBOperator<K>& r) {
  if (obstructors.size() != r.levels()) {
    throw Error("verify_yb_operator: level-count mismatch");
  }
  Report rep;
  for (std::size_t n = 0; n < r.levels(); ++n) {
    const Mat<K>& e = obstructors[n];
    const std::size_t d = e.rows();
    const Mat<K>& rn = r.op(n);
    if (rn.rows() != d * d) {
      throw Error("verify_yb_operator: operator " + std::to_string(n + 1) +
                  " does not act on the tensor square");
    }
    const Mat<K> ee = kron(e, e);
    rep.add_equal("operator-obstructor-commute", n + 1, mat_mul(rn, ee),
                  mat_mul(ee, rn));
    const Mat<K> er = kron(e, rn);
    const Mat<K> re = kron(rn, e);
    rep.add_equal("regular-ybe", n + 1,
                  mat_mul(er, mat_mul(re, er)), mat_mul(re, mat_mul(er, re)));
    if (r.has_stars()) {
      const Mat<K>& sn = r.star(n);
      rep.add_equal("operator-star", n + 1, mat_mul(rn, mat_mul(sn, rn)), rn);
      rep.add_equal("operator-star-reflexive", n + 1,
                    mat_mul(sn, mat_mul(rn, sn)), sn);
    }
  }
  return rep;
}

template <class K>
Report verify_yb_operator(const Algebra<K>& a, const YBOperator<K>& r) {
  return verify_yb_operator(a.obstructors(), r);
}

template <class K>
Report verify_yb_operator(const Coalgebra<K>& c, const YBOperator<K>& r) {
  return verify_yb_operator(c.obstructors(), r);
}

// m_R = m o R. Requires verified inputs; the twisted algebra keeps the
// obstructors and is re-verified mechanically instead of trusting the
// closure argument. Associativity of m_R is not implied, so the result
// claims it only when the input claimed it and the twisted multiplication
// still verifies it.
template <class K>
Algebra<K> twist_multiplication(const Algebra<K>& a, const YBOperator<K>& r) {
  if (!verify_algebra(a).ok()) {
    throw Error("twist_multiplication: input algebra fails verification");
  }
  if (!verify_yb_operator(a, r).ok()) {
    throw Error("twist_multiplication: operator fails verification");
  }
  std::vector<Mat<K>> mults;
  mults.reserve(a.levels());
  for (std::size_t n = 0; n < a.levels(); ++n) {
    mults.push_back(mat_mul(a.mult(n), r.op(n)));
  }
  bool associative = a.claims_associativity();
  if (associative) {
    Algebra<K> probe(mults, a.obstructors(), /*claims_associativity=*/true);
    associative = verify_algebra(probe).ok();
  }
  Algebra<K> out(std::move(mults), a.obstructors(), associative);
  if (!verify_algebra(out).ok()) {
    throw Error("twist_multiplication: twisted algebra fails verification");
  }
  return out;
}

// Delta_R = R o Delta, the coalgebra half of the twist.
template <class K>
Coalgebra<K> twist_comultiplication(const Coalgebra<K>& c,
                                    const YBOperator<K>& r) {
  if (!verify_coalgebra(c).ok()) {
    throw Error("twist_comultiplication: input coalgebra fails verification");
  }
  if (!verify_yb_operator(c, r).ok()) {
    throw Error("twist_comultiplication: operator fails verification");
  }
  std::vector<Mat<K>> comults;
  comults.reserve(c.levels());
  for (std::size_t n = 0; n < c.levels(); ++n) {
    comults.push_back(mat_mul(r.op(n), c.comult(n)));
  }
  bool coassociative = c.claims_coassociativity();
  if (coassociative) {
    Coalgebra<K> probe(comults, c.obstructors(),
                       /*claims_coassociativity=*/true);
    coassociative = verify_coalgebra(probe).ok();
  }
  Coalgebra<K> out(std::move(comults), c.obstructors(), coassociative);
  if (!verify_coalgebra(out).ok()) {
    throw Error("twist_comultiplication: twisted coalgebra fails verification");
  }
  return out;
}

}  // namespace regyb

#endif  // REGYB_YBOP_HPP_
