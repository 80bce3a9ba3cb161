#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace leibniz {

// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT: implicit so Eigen can build Scalar(0), Scalar(1)
  Rational(long v) : q_(v) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q"; throws Error(ParseError) on anything else or q == 0.
  static Rational parse(std::string_view text);

  std::string to_string() const { return q_.get_str(); }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  bool is_zero() const { return sgn(q_) == 0; }
  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace leibniz

namespace Eigen {

template <>
struct NumTraits<leibniz::Rational> : GenericNumTraits<leibniz::Rational> {
  typedef leibniz::Rational Real;
  typedef leibniz::Rational NonInteger;
  typedef leibniz::Rational Nested;
  typedef leibniz::Rational Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
