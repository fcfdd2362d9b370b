#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradelie {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// are stored inline and combined through 128-bit intermediates; anything
/// larger is promoted to a GMP rational and demoted again as soon as it
/// fits. The representation is an implementation detail: two equal values
/// always compare equal regardless of how they were produced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses an optionally signed integer or `p/q`. The fraction must already
  /// be in lowest terms with q > 0 when `require_lowest_terms` is set.
  static Rational parse(std::string_view text, bool require_lowest_terms = false);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;

  /// Nearest double (ties to even). Throws std::overflow_error when the
  /// magnitude exceeds the finite double range.
  [[nodiscard]] double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  void demote();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational abs(const Rational& x);

}  // namespace gradelie
