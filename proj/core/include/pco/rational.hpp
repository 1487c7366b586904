#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pco {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long num);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  /// Parses `p`, `p/q`, or a decimal like `0.25`.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool in_unit_interval() const;
  bool is_zero() const { return sgn(q_) == 0; }

  /// Reduced `p/q` text; integers print without a denominator.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

/// Least common multiple of the reduced denominators.
mpz_class common_denominator(const mpz_class& a, const mpz_class& b);

}  // namespace pco
