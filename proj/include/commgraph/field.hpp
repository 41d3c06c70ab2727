#pragma once

// Exact arithmetic in Q(sqrt2, sqrt5) and quaternions over it.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace commgraph {

using Rational = boost::rational<std::int64_t>;

/// a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational coefficients.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(std::int64_t integer) : coeff_{Rational(integer), 0, 0, 0} {}  // NOLINT
  FieldElem(Rational a, Rational b, Rational c, Rational d) : coeff_{a, b, c, d} {}

  static FieldElem sqrt2() { return {0, 1, 0, 0}; }
  static FieldElem sqrt5() { return {0, 0, 1, 0}; }
  /// Golden ratio (1 + sqrt5) / 2.
  static FieldElem phi() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }

  const std::array<Rational, 4>& coefficients() const { return coeff_; }
  bool is_zero() const;
  double to_double() const;
  std::string to_string() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const Rational& r);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const Rational& r) { return a /= r; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coeff_ == b.coeff_; }
  // Lexicographic on coefficients; an ordering for containers, not the real order.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

 private:
  std::array<Rational, 4> coeff_{};
};

/// w + x i + y j + z k.
struct ExtQuaternion {
  FieldElem w, x, y, z;

  static ExtQuaternion one() { return {1, 0, 0, 0}; }

  ExtQuaternion conjugate() const { return {w, -x, -y, -z}; }
  FieldElem norm() const { return w * w + x * x + y * y + z * z; }
  ExtQuaternion operator-() const { return {-w, -x, -y, -z}; }
  ExtQuaternion operator/(const Rational& r) const { return {w / r, x / r, y / r, z / r}; }
  std::string to_string() const;

  friend ExtQuaternion operator*(const ExtQuaternion& p, const ExtQuaternion& q);
  friend bool operator==(const ExtQuaternion&, const ExtQuaternion&) = default;
  friend auto operator<=>(const ExtQuaternion&, const ExtQuaternion&) = default;
};

ExtQuaternion power(const ExtQuaternion& q, int exponent);

}  // namespace commgraph
