#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tilinglab {

// Exact rational arithmetic on 64-bit components. All threshold and
// invariant comparisons in this library go through Rat; floating point
// is never used for a verdict.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(long long num) : num_(num), den_(1) {}
  Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }

  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  Rat operator-() const { return Rat(-num_, den_); }
  Rat operator+(const Rat& o) const {
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rat operator-(const Rat& o) const {
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p" or "p/q".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace tilinglab
