#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace toruscurv {

// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  // Accepts "n/d" or a bare integer "n". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace toruscurv
