#ifndef REGYB_HOPF_HPP_
#define REGYB_HOPF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regyb/braiding.hpp"
#include "regyb/ybop.hpp"

namespace regyb {

// Obstructed bialgebra: carriers H_n with multiplication, comultiplication
// and a shared obstructor family, plus optional unit (d x 1) and counit
// (1 x d) columns/rows. Obstructed associativity and coassociativity are
// part of the claimed axiom set.
template <class K>
class Bialgebra {
 public:
  Bialgebra(std::vector<Mat<K>> mults, std::vector<Mat<K>> comults,
            std::vector<Mat<K>> obstructors,
            std::optional<std::vector<Mat<K>>> units = std::nullopt,
            std::optional<std::vector<Mat<K>>> counits = std::nullopt)
      : alg_(std::move(mults), obstructors, /*claims_associativity=*/true),
        coalg_(std::move(comults), std::move(obstructors),
               /*claims_coassociativity=*/true),
        units_(std::move(units)),
        counits_(std::move(counits)) {
    if (units_) {
      if (units_->size() != alg_.levels()) {
        throw Error("Bialgebra: unit count mismatch");
      }
      for (std::size_t n = 0; n < alg_.levels(); ++n) {
        if ((*units_)[n].rows() != alg_.dim(n) || (*units_)[n].cols() != 1) {
          throw Error("Bialgebra: unit " + std::to_string(n + 1) +
                      " is not a column of the carrier dimension");
        }
      }
    }
    if (counits_) {
      if (counits_->size() != alg_.levels()) {
        throw Error("Bialgebra: counit count mismatch");
      }
      for (std::size_t n = 0; n < alg_.levels(); ++n) {
        if ((*counits_)[n].rows() != 1 || (*counits_)[n].cols() != alg_.dim(n)) {
          throw Error("Bialgebra: counit " + std::to_string(n + 1) +
                      " is not a row of the carrier dimension");
        }
      }
    }
  }

  friend bool operator==(const Bialgebra&, const Bialgebra&) = default;

  std::size_t levels() const { return alg_.levels(); }
  std::size_t dim(std::size_t n) const { return alg_.dim(n); }
  const Algebra<K>& algebra() const { return alg_; }
  const Coalgebra<K>& coalgebra() const { return coalg_; }
  const Mat<K>& mult(std::size_t n) const { return alg_.mult(n); }
  const Mat<K>& comult(std::size_t n) const { return coalg_.comult(n); }
  const Mat<K>& obstructor(std::size_t n) const { return alg_.obstructor(n); }
  const std::vector<Mat<K>>& obstructors() const { return alg_.obstructors(); }
  bool has_unit_counit() const {
    return units_.has_value() && counits_.has_value();
  }
  const Mat<K>& unit(std::size_t n) const {
    if (!units_) throw Error("Bialgebra: unit missing");
    return (*units_)[n];
  }
  const Mat<K>& counit(std::size_t n) const {
    if (!counits_) throw Error("Bialgebra: counit missing");
    return (*counits_)[n];
  }
  const std::optional<std::vector<Mat<K>>>& units() const { return units_; }
  const std::optional<std::vector<Mat<K>>>& counits() const { return counits_; }
  const typename K::Ctx& ctx() const { return alg_.ctx(); }

 private:
  Algebra<K> alg_;
  Coalgebra<K> coalg_;
  std::optional<std::vector<Mat<K>>> units_;
  std::optional<std::vector<Mat<K>>> counits_;
};

template <class K>
Report verify_bialgebra(const Bialgebra<K>& h) {
  Report rep = verify_algebra(h.algebra());
  rep.merge(verify_coalgebra(h.coalgebra()));
  return rep;
}

// Optional compatibility between the two halves,
//   Delta o m == (m (x) m) o (e (x) tau (x) e) o (Delta (x) Delta),
// not part of the default axiom set: with obstructors in place of
// identities it is a strictly stronger condition than the consistency pair.
template <class K>
Report verify_bialgebra_compat(const Bialgebra<K>& h) {
  Report rep;
  for (std::size_t n = 0; n < h.levels(); ++n) {
    const std::size_t d = h.dim(n);
    const Mat<K>& e = h.obstructor(n);
    const Mat<K> tau = swap_operator<K>(d, d, h.ctx());
    const Mat<K> middle = kron(e, kron(tau, e));
    const Mat<K> lhs = mat_mul(h.comult(n), h.mult(n));
    const Mat<K> rhs = mat_mul(
        kron(h.mult(n), h.mult(n)),
        mat_mul(middle, kron(h.comult(n), h.comult(n))));
    rep.add_equal("bialgebra-compat", n + 1, lhs, rhs);
  }
  return rep;
}

// Convolution product s * t = m o (s (x) t) o Delta on endomorphisms of H_n.
template <class K>
Mat<K> convolution(const Bialgebra<K>& h, std::size_t n, const Mat<K>& s,
                   const Mat<K>& t) {
  const std::size_t d = h.dim(n);
  if (s.rows() != d || s.cols() != d || t.rows() != d || t.cols() != d) {
    throw Error("convolution: endomorphism shape mismatch");
  }
  return mat_mul(h.mult(n), mat_mul(kron(s, t), h.comult(n)));
}

// Antipode family S_n, optionally with 1-star partners S*_n.
template <class K>
struct AntipodePair {
  std::vector<Mat<K>> antipodes;
  std::optional<std::vector<Mat<K>>> star_antipodes;

  friend bool operator==(const AntipodePair&, const AntipodePair&) = default;
};

// Regular antipode: S is a reflexive generalized inverse of the obstructor
// under convolution,
//   e * S * e == e   and   S * e * S == S,
// with the products parenthesized left-to-right. Convolution associativity
// is not guaranteed without unit and counit, so a differing right
// parenthesization is surfaced as a warning, never silently used. With star
// antipodes the three defining equations of the 1-star system replace the
// pair above.
template <class K>
Report verify_regular_antipode(const Bialgebra<K>& h, const AntipodePair<K>& a) {
  if (a.antipodes.size() != h.levels()) {
    throw Error("verify_regular_antipode: antipode count mismatch");
  }
  if (a.star_antipodes && a.star_antipodes->size() != h.levels()) {
    throw Error("verify_regular_antipode: star antipode count mismatch");
  }
  Report rep;
  auto conv = [&h](std::size_t n, const Mat<K>& s, const Mat<K>& t) {
    return convolution(h, n, s, t);
  };
  for (std::size_t n = 0; n < h.levels(); ++n) {
    const Mat<K>& e = h.obstructor(n);
    const Mat<K>& s = a.antipodes[n];
    if (s.rows() != h.dim(n) || !s.is_square()) {
      throw Error("verify_regular_antipode: antipode shape mismatch");
    }
    if (!a.star_antipodes) {
      const Mat<K> ese_left = conv(n, conv(n, e, s), e);
      const Mat<K> ese_right = conv(n, e, conv(n, s, e));
      if (ese_left != ese_right) {
        rep.warnings.push_back(
            "level " + std::to_string(n + 1) +
            ": (e*S)*e and e*(S*e) differ; left parenthesization tested");
      }
      rep.add_equal("antipode-regularity", n + 1, ese_left, e);
      const Mat<K> ses_left = conv(n, conv(n, s, e), s);
      const Mat<K> ses_right = conv(n, s, conv(n, e, s));
      if (ses_left != ses_right) {
        rep.warnings.push_back(
            "level " + std::to_string(n + 1) +
            ": (S*e)*S and S*(e*S) differ; left parenthesization tested");
      }
      rep.add_equal("antipode-reflexivity", n + 1, ses_left, s);
    } else {
      const Mat<K>& ss = (*a.star_antipodes)[n];
      rep.add_equal("antipode-1star-e", n + 1,
                    conv(n, conv(n, conv(n, e, s), ss), e), e);
      rep.add_equal("antipode-1star-s", n + 1,
                    conv(n, conv(n, conv(n, s, ss), e), s), s);
      rep.add_equal("antipode-1star-star", n + 1,
                    conv(n, conv(n, conv(n, ss, e), s), ss), ss);
    }
  }
  return rep;
}

// Unit/counit relation for the antipode:
//   m o (S (x) e) o Delta == m o (e (x) S) o Delta == eta o eps,
// i.e. S * e == e * S == eta o eps as convolutions.
template <class K>
Report verify_unit_counit_antipode(const Bialgebra<K>& h,
                                   const AntipodePair<K>& a) {
  if (!h.has_unit_counit()) {
    throw Error("verify_unit_counit_antipode: unit or counit missing");
  }
  if (a.antipodes.size() != h.levels()) {
    throw Error("verify_unit_counit_antipode: antipode count mismatch");
  }
  Report rep;
  for (std::size_t n = 0; n < h.levels(); ++n) {
    const Mat<K>& e = h.obstructor(n);
    const Mat<K>& s = a.antipodes[n];
    const Mat<K> se = convolution(h, n, s, e);
    const Mat<K> es = convolution(h, n, e, s);
    const Mat<K> unit_counit = mat_mul(h.unit(n), h.counit(n));
    rep.add_equal("antipode-two-sided", n + 1, se, es);
    rep.add_equal("antipode-unit-counit", n + 1, es, unit_counit);
  }
  return rep;
}

enum class ModuleSide { Right, Left };

// Module carrier family with an action and its own obstructors. A right
// action maps P_n (x) H_n -> P_n, a left action H_n (x) Q_n -> Q_n. The
// carriers may come with their own chain; when they do not and the
// obstructor family is level-constant, the constant chain is synthesized on
// demand (an idempotent is its own one-arrow chain).
template <class K>
class ModuleAction {
 public:
  ModuleAction(ModuleSide side, std::vector<Mat<K>> actions,
               std::vector<Mat<K>> obstructors,
               std::optional<Cocycle<K>> chain = std::nullopt)
      : side_(side),
        actions_(std::move(actions)),
        obstructors_(std::move(obstructors)),
        chain_(std::move(chain)) {
    if (actions_.empty() || actions_.size() != obstructors_.size()) {
      throw Error("ModuleAction: need one action and obstructor per level");
    }
    for (const Mat<K>& e : obstructors_) {
      if (!e.is_square()) throw Error("ModuleAction: obstructor not square");
    }
    if (chain_ && chain_->levels() != actions_.size()) {
      throw Error("ModuleAction: chain level-count mismatch");
    }
  }

  friend bool operator==(const ModuleAction&, const ModuleAction&) = default;

  ModuleSide side() const { return side_; }
  std::size_t levels() const { return actions_.size(); }
  std::size_t dim(std::size_t n) const { return obstructors_[n].rows(); }
  const Mat<K>& action(std::size_t n) const { return actions_[n]; }
  const Mat<K>& obstructor(std::size_t n) const { return obstructors_[n]; }
  const std::vector<Mat<K>>& obstructors() const { return obstructors_; }
  const std::optional<Cocycle<K>>& chain() const { return chain_; }

  // The chain backing this module: the explicit one when given, otherwise
  // the constant chain built from a level-constant obstructor family.
  Cocycle<K> effective_chain() const {
    if (chain_) return *chain_;
    for (std::size_t n = 1; n < obstructors_.size(); ++n) {
      if (obstructors_[n] != obstructors_[0]) {
        throw Error(
            "ModuleAction: no chain given and obstructors vary by level");
      }
    }
    return Cocycle<K>(std::vector<Mat<K>>(obstructors_.size(),
                                          obstructors_[0]));
  }

 private:
  ModuleSide side_;
  std::vector<Mat<K>> actions_;
  std::vector<Mat<K>> obstructors_;
  std::optional<Cocycle<K>> chain_;
};

// Obstructor compatibility of the action:
//   right: e_P o rho == rho o (e_P (x) e_H)
//   left:  e_Q o rho == rho o (e_H (x) e_Q)
template <class K>
Report verify_module_action(const ModuleAction<K>& m, const Bialgebra<K>& h) {
  if (m.levels() != h.levels()) {
    throw Error("verify_module_action: level-count mismatch");
  }
  Report rep;
  for (std::size_t n = 0; n < m.levels(); ++n) {
    const Mat<K>& ep = m.obstructor(n);
    const Mat<K>& eh = h.obstructor(n);
    const Mat<K>& rho = m.action(n);
    const std::size_t dm = ep.rows(), dh = eh.rows();
    if (rho.rows() != dm || rho.cols() != dm * dh) {
      throw Error("verify_module_action: action " + std::to_string(n + 1) +
                  " has wrong shape");
    }
    rep.add_equal("module-obstructor-idempotent", n + 1, mat_mul(ep, ep), ep);
    const Mat<K> pair = m.side() == ModuleSide::Right ? kron(ep, eh)
                                                      : kron(eh, ep);
    rep.add_equal("module-obstructor-compat", n + 1, mat_mul(ep, rho),
                  mat_mul(rho, pair));
  }
  return rep;
}

// Braiding induced by an R-matrix through two modules:
//   B_n = tau_{P_n,Q_n} o R_n
// where R_n is the operator induced on P_n (x) Q_n (for the regular
// representation it is the bialgebra's own operator). Star components are
// the deterministic reflexive generalized inverses. The result is
// re-verified for naturality and star regularity before being returned.
template <class K>
Braiding<K> braiding_from_rmatrix(const Bialgebra<K>& h, const YBOperator<K>& r,
                                  const ModuleAction<K>& p,
                                  const ModuleAction<K>& q) {
  if (!verify_bialgebra(h).ok()) {
    throw Error("braiding_from_rmatrix: bialgebra fails verification");
  }
  if (!verify_module_action(p, h).ok() || !verify_module_action(q, h).ok()) {
    throw Error("braiding_from_rmatrix: module fails verification");
  }
  if (r.levels() != h.levels()) {
    throw Error("braiding_from_rmatrix: operator level-count mismatch");
  }
  std::vector<Mat<K>> components;
  std::vector<Mat<K>> stars;
  for (std::size_t n = 0; n < h.levels(); ++n) {
    const std::size_t dp = p.dim(n), dq = q.dim(n);
    if (r.op(n).rows() != dp * dq) {
      throw Error("braiding_from_rmatrix: operator " + std::to_string(n + 1) +
                  " does not act on the module tensor product");
    }
    const Mat<K> epq = kron(p.obstructor(n), q.obstructor(n));
    if (mat_mul(r.op(n), epq) != mat_mul(epq, r.op(n))) {
      throw Error("braiding_from_rmatrix: operator " + std::to_string(n + 1) +
                  " does not commute with the module obstructors");
    }
    Mat<K> b = mat_mul(swap_operator<K>(dp, dq, h.ctx()), r.op(n));
    stars.push_back(reflexive_ginverse(b));
    components.push_back(std::move(b));
  }
  Braiding<K> out(p.effective_chain(), q.effective_chain(),
                  std::move(components), std::move(stars));
  if (!verify_naturality(out).ok()) {
    throw Error("braiding_from_rmatrix: induced braiding fails naturality");
  }
  if (!verify_star_regularity(out).ok()) {
    throw Error("braiding_from_rmatrix: induced braiding fails star regularity");
  }
  return out;
}

}  // namespace regyb

#endif  // REGYB_HOPF_HPP_
