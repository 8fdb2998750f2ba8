#include "regyb/field.hpp"

namespace regyb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational Rational::parse(const std::string& s, const Ctx&) {
  if (s.empty()) throw Error("Rational: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

GFElem GFElem::inv() const {
  if (v_ == 0) throw Error("GFElem: inverse of zero");
  // Extended Euclid on (v, p); p prime so gcd is 1.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t newr = static_cast<std::int64_t>(v_);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return raw(static_cast<std::uint64_t>(t), p_);
}

GFElem GFElem::parse(const std::string& s, const Ctx& c) {
  if (s.empty()) throw Error("GFElem: empty string");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw Error("GFElem: cannot parse '" + s + "'");
  }
  if (pos != s.size()) throw Error("GFElem: cannot parse '" + s + "'");
  return from_int(v, c);
}

}  // namespace regyb
