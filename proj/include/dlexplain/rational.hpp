#ifndef DLEXPLAIN_RATIONAL_HPP
#define DLEXPLAIN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlx {

// Exact rational with a positive, reduced denominator. Scores and accuracies
// are compared exactly; doubles appear only at the JSON boundary.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Accepts "3", "-2", "0.01", "1/100".
  static Rational parse(std::string_view text);

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  auto digits = [&](std::string_view s, std::int64_t& out) {
    if (s.empty() || s.size() > 15) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    if (!digits(body.substr(0, slash), num) || !digits(body.substr(slash + 1), den) || den == 0) return fail();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::int64_t whole = 0;
    std::int64_t frac = 0;
    auto int_part = body.substr(0, dot);
    auto frac_part = body.substr(dot + 1);
    if (int_part.empty()) int_part = "0";
    if (!digits(int_part, whole) || !digits(frac_part, frac)) return fail();
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    num = whole * den + frac;
  } else if (!digits(body, num)) {
    return fail();
  }
  return {negative ? -num : num, den};
}

}  // namespace dlx

#endif  // DLEXPLAIN_RATIONAL_HPP
