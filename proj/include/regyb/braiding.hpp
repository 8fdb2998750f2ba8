#ifndef REGYB_BRAIDING_HPP_
#define REGYB_BRAIDING_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regyb/cocycle.hpp"

namespace regyb {

// Levelwise braiding between two chains: B_n : X_n (x) Y_n -> Y_n (x) X_n,
// optionally with star components B*_n : Y_n (x) X_n -> X_n (x) Y_n. The
// star direction is forced by composability of B o B* o B even though it is
// written with the same subscript as B.
template <class K>
class Braiding {
 public:
  Braiding(Cocycle<K> left, Cocycle<K> right, std::vector<Mat<K>> components,
           std::optional<std::vector<Mat<K>>> stars = std::nullopt)
      : left_(std::move(left)),
        right_(std::move(right)),
        components_(std::move(components)),
        stars_(std::move(stars)) {
    const std::size_t n = left_.levels();
    if (right_.levels() != n) throw Error("Braiding: level-count mismatch");
    if (components_.size() != n) {
      throw Error("Braiding: expected " + std::to_string(n) + " components");
    }
    if (left_.ctx() != right_.ctx()) throw Error("Braiding: field mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t dx = left_.dim(i), dy = right_.dim(i);
      if (components_[i].rows() != dy * dx || components_[i].cols() != dx * dy) {
        throw Error("Braiding: component " + std::to_string(i + 1) +
                    " has wrong shape");
      }
      if (components_[i].ctx() != left_.ctx()) {
        throw Error("Braiding: component field mismatch");
      }
    }
    if (stars_) {
      if (stars_->size() != n) throw Error("Braiding: star count mismatch");
      for (std::size_t i = 0; i < n; ++i) {
        if ((*stars_)[i].rows() != components_[i].cols() ||
            (*stars_)[i].cols() != components_[i].rows()) {
          throw Error("Braiding: star component " + std::to_string(i + 1) +
                      " has wrong shape");
        }
        if ((*stars_)[i].ctx() != left_.ctx()) {
          throw Error("Braiding: star component field mismatch");
        }
      }
    }
  }

  friend bool operator==(const Braiding&, const Braiding&) = default;

  std::size_t levels() const { return components_.size(); }
  const Cocycle<K>& left() const { return left_; }
  const Cocycle<K>& right() const { return right_; }
  const Mat<K>& component(std::size_t n) const { return components_[n]; }
  const std::vector<Mat<K>>& components() const { return components_; }
  bool has_stars() const { return stars_.has_value(); }
  const Mat<K>& star(std::size_t n) const {
    if (!stars_) throw Error("Braiding: star components missing");
    return (*stars_)[n];
  }
  const std::optional<std::vector<Mat<K>>>& stars() const { return stars_; }

 private:
  Cocycle<K> left_, right_;
  std::vector<Mat<K>> components_;
  std::optional<std::vector<Mat<K>>> stars_;
};

// Naturality square B_{n+1} o (f_n (x) g_n) == (g_n (x) f_n) o B_n, indices
// cyclic like the chains themselves.
template <class K>
Report verify_naturality(const Braiding<K>& b) {
  Report rep;
  const std::size_t count = b.levels();
  for (std::size_t n = 0; n < count; ++n) {
    const Mat<K>& f = b.left().arrow(n);
    const Mat<K>& g = b.right().arrow(n);
    rep.add_equal("naturality", n + 1,
                  mat_mul(b.component((n + 1) % count), kron(f, g)),
                  mat_mul(kron(g, f), b.component(n)));
  }
  return rep;
}

// B o B* o B == B per level, and with `require_reflexive` also
// B* o B o B* == B*.
template <class K>
Report verify_star_regularity(const Braiding<K>& b,
                              bool require_reflexive = true) {
  if (!b.has_stars()) {
    throw Error("verify_star_regularity: star components missing");
  }
  Report rep;
  for (std::size_t n = 0; n < b.levels(); ++n) {
    const Mat<K>& bn = b.component(n);
    const Mat<K>& sn = b.star(n);
    rep.add_equal("star-regularity", n + 1,
                  mat_mul(bn, mat_mul(sn, bn)), bn);
    if (require_reflexive) {
      rep.add_equal("star-reflexivity", n + 1,
                    mat_mul(sn, mat_mul(bn, sn)), sn);
    }
  }
  return rep;
}

// Which chain occupies which tensor slot in a triple map. The subscript
// triples in the prebraiding and Yang-Baxter identities are exactly such
// assignments.
enum class Space { X, Y, Z };

inline const char* space_name(Space s) {
  switch (s) {
    case Space::X: return "X";
    case Space::Y: return "Y";
    case Space::Z: return "Z";
  }
  return "?";
}

struct Slots {
  Space a, b, c;
};

// Three chains of equal length with their obstructors and the pairwise
// braiding components the triple maps draw from. Components are stored per
// ordered pair (A,B), each mapping A_n (x) B_n -> B_n (x) A_n.
template <class K>
class TripleContext {
 public:
  TripleContext(Cocycle<K> x, Cocycle<K> y, Cocycle<K> z)
      : chains_{std::move(x), std::move(y), std::move(z)} {
    const std::size_t n = chains_[0].levels();
    for (const auto& c : chains_) {
      if (c.levels() != n) throw Error("TripleContext: level-count mismatch");
      if (c.ctx() != chains_[0].ctx()) {
        throw Error("TripleContext: field mismatch");
      }
    }
    for (std::size_t s = 0; s < 3; ++s) {
      obstructors_[s] = obstructors(chains_[s]).obstructors;
    }
  }

  // Builds the one-chain context (X = Y = Z) with the same braiding
  // component family for every ordered pair; the usual setup for Yang-Baxter
  // operator checks.
  static TripleContext uniform(const Cocycle<K>& c,
                               const std::vector<Mat<K>>& components) {
    TripleContext ctx(c, c, c);
    const Space all[] = {Space::X, Space::Y, Space::Z};
    for (Space a : all)
      for (Space b : all) {
        if (a != b) ctx.set_pair(a, b, components);
      }
    return ctx;
  }

  std::size_t levels() const { return chains_[0].levels(); }
  const typename K::Ctx& field_ctx() const { return chains_[0].ctx(); }
  const Cocycle<K>& chain(Space s) const {
    return chains_[static_cast<std::size_t>(s)];
  }
  std::size_t dim(Space s, std::size_t n) const { return chain(s).dim(n); }
  const Mat<K>& obstructor(Space s, std::size_t n) const {
    return obstructors_[static_cast<std::size_t>(s)][n];
  }

  void set_pair(Space a, Space b, std::vector<Mat<K>> components) {
    if (a == b) throw Error("TripleContext: braiding pair needs two spaces");
    if (components.size() != levels()) {
      throw Error("TripleContext: component count mismatch");
    }
    for (std::size_t n = 0; n < components.size(); ++n) {
      if (components[n].rows() != dim(b, n) * dim(a, n) ||
          components[n].cols() != dim(a, n) * dim(b, n)) {
        throw Error(std::string("TripleContext: component B_{") +
                    space_name(a) + "," + space_name(b) + "} level " +
                    std::to_string(n + 1) + " has wrong shape");
      }
    }
    pairs_[{a, b}] = std::move(components);
  }

  const Mat<K>& pair(Space a, Space b, std::size_t n) const {
    auto it = pairs_.find({a, b});
    if (it == pairs_.end()) {
      throw Error(std::string("TripleContext: braiding B_{") + space_name(a) +
                  "," + space_name(b) + "} not supplied");
    }
    return it->second[n];
  }

 private:
  std::array<Cocycle<K>, 3> chains_;
  std::array<std::vector<Mat<K>>, 3> obstructors_;
  std::map<std::pair<Space, Space>, std::vector<Mat<K>>> pairs_;
};

// T^L_{A,B,C} = e_A (x) B_{B,C} : A (x) B (x) C -> A (x) C (x) B.
template <class K>
Mat<K> triple_left(const TripleContext<K>& ctx, std::size_t n,
                   Slots s = {Space::X, Space::Y, Space::Z}) {
  return kron(ctx.obstructor(s.a, n), ctx.pair(s.b, s.c, n));
}

// T^R_{A,B,C} = B_{A,B} (x) e_C : A (x) B (x) C -> B (x) A (x) C.
template <class K>
Mat<K> triple_right(const TripleContext<K>& ctx, std::size_t n,
                    Slots s = {Space::X, Space::Y, Space::Z}) {
  return kron(ctx.pair(s.a, s.b, n), ctx.obstructor(s.c, n));
}

enum class PrebraidSide { LeftOfPair, RightOfPair };

// Weakened prebraidings:
//   P_{X(x)Y, Z} = T^R_{X,Z,Y} o T^L_{X,Y,Z}
//   P_{Z, X(x)Y} = T^L_{X,Z,Y} o T^R_{X,Y,Z}
template <class K>
Mat<K> prebraid(const TripleContext<K>& ctx, std::size_t n, PrebraidSide side) {
  if (side == PrebraidSide::LeftOfPair) {
    return mat_mul(triple_right(ctx, n, {Space::X, Space::Z, Space::Y}),
                   triple_left(ctx, n, {Space::X, Space::Y, Space::Z}));
  }
  return mat_mul(triple_left(ctx, n, {Space::X, Space::Z, Space::Y}),
                 triple_right(ctx, n, {Space::X, Space::Y, Space::Z}));
}

// Component regular Yang-Baxter equation, per level:
//   T^R_{Y,Z,X} o T^L_{Y,X,Z} o T^R_{X,Y,Z}
//     == T^L_{Z,X,Y} o T^R_{X,Z,Y} o T^L_{X,Y,Z}.
// With identity obstructors this is the classical braid-form equation.
template <class K>
Report verify_component_ybe(const TripleContext<K>& ctx) {
  Report rep;
  for (std::size_t n = 0; n < ctx.levels(); ++n) {
    const Mat<K> lhs = mat_mul(
        triple_right(ctx, n, {Space::Y, Space::Z, Space::X}),
        mat_mul(triple_left(ctx, n, {Space::Y, Space::X, Space::Z}),
                triple_right(ctx, n, {Space::X, Space::Y, Space::Z})));
    const Mat<K> rhs = mat_mul(
        triple_left(ctx, n, {Space::Z, Space::X, Space::Y}),
        mat_mul(triple_right(ctx, n, {Space::X, Space::Z, Space::Y}),
                triple_left(ctx, n, {Space::X, Space::Y, Space::Z})));
    rep.add_equal("component-ybe", n + 1, lhs, rhs);
  }
  return rep;
}

// Star partners for both prebraidings at every level.
template <class K>
struct PrebraidStars {
  std::vector<Mat<K>> left_of_pair;   // stars for P_{X(x)Y, Z}
  std::vector<Mat<K>> right_of_pair;  // stars for P_{Z, X(x)Y}
};

// The 1-star tower for prebraidings: both reflexive identities for
// P_{X(x)Y,Z} and both for P_{Z,X(x)Y}.
template <class K>
Report verify_prebraid_star_tower(const TripleContext<K>& ctx,
                                  const PrebraidStars<K>& stars) {
  if (stars.left_of_pair.size() != ctx.levels() ||
      stars.right_of_pair.size() != ctx.levels()) {
    throw Error("verify_prebraid_star_tower: star count mismatch");
  }
  Report rep;
  for (std::size_t n = 0; n < ctx.levels(); ++n) {
    const Mat<K> pl = prebraid(ctx, n, PrebraidSide::LeftOfPair);
    const Mat<K> pr = prebraid(ctx, n, PrebraidSide::RightOfPair);
    const Mat<K>& sl = stars.left_of_pair[n];
    const Mat<K>& sr = stars.right_of_pair[n];
    rep.add_equal("prebraid-star-left", n + 1, mat_mul(pl, mat_mul(sl, pl)),
                  pl);
    rep.add_equal("prebraid-star-left-reflexive", n + 1,
                  mat_mul(sl, mat_mul(pl, sl)), sl);
    rep.add_equal("prebraid-star-right", n + 1, mat_mul(pr, mat_mul(sr, pr)),
                  pr);
    rep.add_equal("prebraid-star-right-reflexive", n + 1,
                  mat_mul(sr, mat_mul(pr, sr)), sr);
  }
  return rep;
}

}  // namespace regyb

#endif  // REGYB_BRAIDING_HPP_
