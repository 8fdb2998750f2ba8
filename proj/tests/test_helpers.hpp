#ifndef REGYB_TESTS_HELPERS_HPP_
#define REGYB_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "regyb/matrix.hpp"

namespace regyb::testing {

inline const Rational::Ctx kQ{};
inline const GFElem::Ctx kGF2{2};
inline const GFElem::Ctx kGF3{3};

// Literal matrices: mat_q({{1,2},{3,4}}), mat_gf({{1,0},{0,1}}, kGF2).
inline Mat<Rational> mat_q(
    std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  Mat<Rational> m(r, c, kQ);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline Mat<Rational> mat_q2(
    std::initializer_list<std::initializer_list<std::pair<long, long>>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  Mat<Rational> m(r, c, kQ);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) m.at(i, j++) = Rational(v.first, v.second);
    ++i;
  }
  return m;
}

inline Mat<GFElem> mat_gf(
    std::initializer_list<std::initializer_list<long>> rows,
    const GFElem::Ctx& ctx) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  Mat<GFElem> m(r, c, ctx);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = GFElem::from_int(v, ctx);
    ++i;
  }
  return m;
}

template <class K>
Mat<K> diag(const std::vector<long>& values, const typename K::Ctx& ctx);

template <>
inline Mat<Rational> diag<Rational>(const std::vector<long>& values,
                                    const Rational::Ctx& ctx) {
  Mat<Rational> m(values.size(), values.size(), ctx);
  for (std::size_t i = 0; i < values.size(); ++i) m.at(i, i) = Rational(values[i]);
  return m;
}

template <>
inline Mat<GFElem> diag<GFElem>(const std::vector<long>& values,
                                const GFElem::Ctx& ctx) {
  Mat<GFElem> m(values.size(), values.size(), ctx);
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.at(i, i) = GFElem::from_int(values[i], ctx);
  }
  return m;
}

}  // namespace regyb::testing

#endif  // REGYB_TESTS_HELPERS_HPP_
