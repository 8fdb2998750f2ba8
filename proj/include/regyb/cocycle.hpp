#ifndef REGYB_COCYCLE_HPP_
#define REGYB_COCYCLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "regyb/linalg.hpp"
#include "regyb/report.hpp"

namespace regyb {

// Cyclic chain of N arrows f_n : X_n -> X_{n+1 mod N}. Construction checks
// that shapes chain; regularity (each full trip around the cycle reproduces
// the arrow it started from) is verified separately, never assumed.
template <class K>
class Cocycle {
 public:
  explicit Cocycle(std::vector<Mat<K>> arrows) : arrows_(std::move(arrows)) {
    if (arrows_.empty()) throw Error("Cocycle: needs at least one arrow");
    const std::size_t n = arrows_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (arrows_[i].ctx() != arrows_[0].ctx()) {
        throw Error("Cocycle: arrows over mixed fields");
      }
      if (arrows_[i].rows() != arrows_[(i + 1) % n].cols()) {
        throw Error("Cocycle: arrow " + std::to_string(i + 1) +
                    " does not chain into arrow " +
                    std::to_string((i + 1) % n + 1));
      }
      if (arrows_[i].rows() == 0 || arrows_[i].cols() == 0) {
        throw Error("Cocycle: zero-dimensional carrier");
      }
    }
  }

  std::size_t levels() const { return arrows_.size(); }
  std::size_t dim(std::size_t n) const { return arrows_[n].cols(); }
  const Mat<K>& arrow(std::size_t n) const { return arrows_[n]; }
  const std::vector<Mat<K>>& arrows() const { return arrows_; }
  const typename K::Ctx& ctx() const { return arrows_[0].ctx(); }

  friend bool operator==(const Cocycle& a, const Cocycle& b) {
    return a.arrows_ == b.arrows_;
  }

  // Full trip around the cycle starting at arrow n, as an endomorphism of
  // X_n: f_{n-1} o ... o f_1 o f_N o ... o f_n.
  Mat<K> cycle_at(std::size_t n) const {
    const std::size_t count = arrows_.size();
    Mat<K> acc = Mat<K>::identity(dim(n), ctx());
    for (std::size_t i = 0; i < count; ++i) {
      acc = mat_mul(arrows_[(n + i) % count], acc);
    }
    return acc;
  }

 private:
  std::vector<Mat<K>> arrows_;
};

// The N idempotent endomorphisms obtained from the full cycles; they stand
// in for identities in every obstructed axiom.
template <class K>
struct ObstructorSet {
  std::vector<Mat<K>> obstructors;
};

// Checks the N cyclic equations f_n o (cycle at n) == f_n exactly.
template <class K>
Report verify_regularity(const Cocycle<K>& c) {
  Report rep;
  for (std::size_t n = 0; n < c.levels(); ++n) {
    rep.add_equal("regularity", n + 1, mat_mul(c.arrow(n), c.cycle_at(n)),
                  c.arrow(n));
  }
  return rep;
}

template <class K>
ObstructorSet<K> obstructors(const Cocycle<K>& c) {
  const Report reg = verify_regularity(c);
  if (!reg.ok()) {
    for (const Check& chk : reg.checks) {
      if (!chk.pass) {
        throw Error("obstructors: regularity fails at equation " +
                    std::to_string(chk.level));
      }
    }
  }
  ObstructorSet<K> out;
  for (std::size_t n = 0; n < c.levels(); ++n) {
    out.obstructors.push_back(c.cycle_at(n));
  }
  return out;
}

// Obstructor idempotency and the intertwining identities
// f_n o e_n == f_n == e_{n+1} o f_n; consequences of regularity, verified
// rather than assumed.
template <class K>
Report verify_obstructor_properties(const Cocycle<K>& c,
                                    const ObstructorSet<K>& e) {
  Report rep;
  const std::size_t count = c.levels();
  for (std::size_t n = 0; n < count; ++n) {
    const Mat<K>& en = e.obstructors[n];
    rep.add_equal("obstructor-idempotent", n + 1, mat_mul(en, en), en);
    rep.add_equal("intertwine-right", n + 1, mat_mul(c.arrow(n), en),
                  c.arrow(n));
    rep.add_equal("intertwine-left", n + 1,
                  mat_mul(e.obstructors[(n + 1) % count], c.arrow(n)),
                  c.arrow(n));
  }
  return rep;
}

// Levelwise tensor product of two chains; arrows f_n (x) g_n. The result is
// re-verified: the mixed-product law guarantees regularity only when both
// inputs are regular.
template <class K>
Cocycle<K> tensor_cocycles(const Cocycle<K>& c, const Cocycle<K>& d) {
  if (c.levels() != d.levels()) {
    throw Error("tensor_cocycles: level-count mismatch");
  }
  if (c.ctx() != d.ctx()) throw Error("tensor_cocycles: field mismatch");
  std::vector<Mat<K>> arrows;
  arrows.reserve(c.levels());
  for (std::size_t n = 0; n < c.levels(); ++n) {
    arrows.push_back(kron(c.arrow(n), d.arrow(n)));
  }
  Cocycle<K> out(std::move(arrows));
  if (!verify_regularity(out).ok()) {
    throw Error("tensor_cocycles: tensor product is not regular");
  }
  return out;
}

// e_{X (x) Y, n} == e_{X,n} (x) e_{Y,n}, both sides computed independently:
// the left from the tensored chain's own cycles, the right from the factors.
template <class K>
Report verify_obstructor_multiplicativity(const Cocycle<K>& c,
                                          const Cocycle<K>& d) {
  const Cocycle<K> t = tensor_cocycles(c, d);
  const ObstructorSet<K> ec = obstructors(c);
  const ObstructorSet<K> ed = obstructors(d);
  const ObstructorSet<K> et = obstructors(t);
  Report rep;
  for (std::size_t n = 0; n < c.levels(); ++n) {
    rep.add_equal("multiplicativity", n + 1, et.obstructors[n],
                  kron(ec.obstructors[n], ed.obstructors[n]));
  }
  return rep;
}

}  // namespace regyb

#endif  // REGYB_COCYCLE_HPP_
