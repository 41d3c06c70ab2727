#include "commgraph/field.hpp"

#include <cmath>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

double rational_to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace

bool FieldElem::is_zero() const {
  for (const auto& c : coeff_)
    if (c.numerator() != 0) return false;
  return true;
}

double FieldElem::to_double() const {
  static const double roots[4] = {1.0, std::sqrt(2.0), std::sqrt(5.0), std::sqrt(10.0)};
  double v = 0.0;
  for (int i = 0; i < 4; ++i) v += rational_to_double(coeff_[i]) * roots[i];
  return v;
}

std::string FieldElem::to_string() const {
  static const char* names[4] = {"", "sqrt2", "sqrt5", "sqrt10"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& c = coeff_[i];
    if (c.numerator() == 0) continue;
    const bool negative = c.numerator() < 0;
    const Rational mag = negative ? -c : c;
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    if (i == 0) {
      out += rational_to_string(mag);
    } else {
      if (mag.numerator() != 1) out += std::to_string(mag.numerator()) + "*";
      out += names[i];
      if (mag.denominator() != 1) out += "/" + std::to_string(mag.denominator());
    }
  }
  return out.empty() ? "0" : out;
}

FieldElem FieldElem::operator-() const {
  return {-coeff_[0], -coeff_[1], -coeff_[2], -coeff_[3]};
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

// Basis 1, sqrt2, sqrt5, sqrt10 with sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5,
// sqrt5*sqrt10 = 5 sqrt2.
FieldElem& FieldElem::operator*=(const FieldElem& o) {
  const auto& a = coeff_;
  const auto& b = o.coeff_;
  std::array<Rational, 4> c{
      a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]),
      a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]),
      a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1],
  };
  coeff_ = c;
  return *this;
}

FieldElem& FieldElem::operator/=(const Rational& r) {
  if (r.numerator() == 0) throw InvalidArgument("FieldElem: division by zero");
  for (auto& c : coeff_) c /= r;
  return *this;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.coeff_[i] < b.coeff_[i]) return std::strong_ordering::less;
    if (b.coeff_[i] < a.coeff_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ExtQuaternion operator*(const ExtQuaternion& p, const ExtQuaternion& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

std::string ExtQuaternion::to_string() const {
  return "(" + w.to_string() + ", " + x.to_string() + ", " + y.to_string() + ", " +
         z.to_string() + ")";
}

ExtQuaternion power(const ExtQuaternion& q, int exponent) {
  if (exponent < 0) throw InvalidArgument("power: negative exponent");
  ExtQuaternion result = ExtQuaternion::one();
  for (int i = 0; i < exponent; ++i) result = result * q;
  return result;
}

}  // namespace commgraph
