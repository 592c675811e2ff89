#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gulf {

// Exact fraction with positive denominator, always reduced.
class Rational {
public:
  Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational &a, const Rational &b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(const Rational &a, const Rational &b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::int64_t floor() const { return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_); }
  std::int64_t ceil() const { return num_ >= 0 ? (num_ + den_ - 1) / den_ : -((-num_) / den_); }

  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

private:
  std::int64_t num_;
  std::int64_t den_;
};

} // namespace gulf
