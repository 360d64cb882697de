#ifndef ORB_RATIONAL_HPP_
#define ORB_RATIONAL_HPP_

// Minimal exact rational type. Orbifold Euler characteristics are
// sign/equality tested, never approximated.

#include <sstream>
#include <string>

#include "orb/int_linalg.hpp"

namespace orb {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  bool is_integer() const { return den_ == 1; }

  std::string to_string() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    Int g = gcd_nonneg(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_, den_;
};

}  // namespace orb

#endif  // ORB_RATIONAL_HPP_
