#ifndef REGYB_FIELD_HPP_
#define REGYB_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace regyb {

// Library-wide error for precondition violations (shape/field mismatches,
// bad input). Axiom failures are never exceptions; they go into reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rationals, PrimeField };

bool is_prime(std::uint64_t n);

// Runtime field descriptor. Carried by bundles and used to dispatch to the
// two element types below.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;  // meaningful for PrimeField only

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw Error("FieldSpec: characteristic " + std::to_string(p) +
                  " is not prime");
    }
    return {FieldKind::PrimeField, p};
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string str() const {
    return kind == FieldKind::Rationals ? "Q"
                                        : "GF(" + std::to_string(characteristic) + ")";
  }
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  // Field context; rationals need none, but the matrix layer carries one
  // uniformly so that empty matrices still know their field.
  struct Ctx {
    friend bool operator==(const Ctx&, const Ctx&) = default;
    FieldSpec spec() const { return FieldSpec::rationals(); }
  };

  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}  // NOLINT: implicit from integers is handy
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational zero(const Ctx&) { return Rational(0); }
  static Rational one(const Ctx&) { return Rational(1); }

  bool is_zero() const { return v_ == 0; }

  Rational inv() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) = default;

  // Entry-lexicographic tie-break order for canonical catalogs.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  // "p/q" for non-integers, plain "p" otherwise.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  static Rational parse(const std::string& s, const Ctx& = {});

 private:
  mpq_class v_;
};

// Element of GF(p). Value and modulus travel together so that mixed-field
// arithmetic is caught immediately.
class GFElem {
 public:
  struct Ctx {
    std::uint64_t p = 0;
    friend bool operator==(const Ctx&, const Ctx&) = default;
    FieldSpec spec() const { return FieldSpec::prime(p); }
  };

  GFElem() : v_(0), p_(0) {}
  GFElem(std::uint64_t v, const Ctx& c) : v_(v % c.p), p_(c.p) {}

  static GFElem zero(const Ctx& c) { return GFElem(0, c); }
  static GFElem one(const Ctx& c) { return GFElem(1 % c.p, c); }
  static GFElem from_int(std::int64_t v, const Ctx& c) {
    std::int64_t r = v % static_cast<std::int64_t>(c.p);
    if (r < 0) r += static_cast<std::int64_t>(c.p);
    return GFElem(static_cast<std::uint64_t>(r), c);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  GFElem inv() const;

  GFElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  GFElem& operator+=(const GFElem& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  GFElem& operator-=(const GFElem& o) {
    check(o);
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  GFElem& operator*=(const GFElem& o) {
    check(o);
    v_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }

  friend GFElem operator+(GFElem a, const GFElem& b) { return a += b; }
  friend GFElem operator-(GFElem a, const GFElem& b) { return a -= b; }
  friend GFElem operator*(GFElem a, const GFElem& b) { return a *= b; }
  friend bool operator==(const GFElem& a, const GFElem& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const GFElem& a, const GFElem& b) = default;
  friend bool operator<(const GFElem& a, const GFElem& b) {
    return a.v_ < b.v_;
  }

  std::string str() const { return std::to_string(v_); }
  static GFElem parse(const std::string& s, const Ctx& c);

 private:
  static GFElem raw(std::uint64_t v, std::uint64_t p) {
    GFElem e;
    e.v_ = v;
    e.p_ = p;
    return e;
  }
  void check(const GFElem& o) const {
    if (p_ != o.p_) throw Error("GFElem: mixed moduli");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace regyb

#endif  // REGYB_FIELD_HPP_
