#include "pco/rational.hpp"

#include <cctype>
#include <functional>

#include "pco/error.hpp"

namespace pco {

Rational::Rational(long num) : q_(num) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !digits(whole)) || !digits(frac))
      throw Error(ErrorCode::SyntaxError, "malformed decimal '" + std::string(text) + "'");
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  if (!digits(text)) throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  return Rational(mpq_class(mpz_class(std::string(text))));
}

bool Rational::in_unit_interval() const { return sgn(q_) >= 0 && cmp(q_, 1) <= 0; }

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::Overflow, "division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator+=(const Rational& other) {
  q_ += other.q_;
  q_.canonicalize();
  return *this;
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(str());
}

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.str(); }

mpz_class common_denominator(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace pco
