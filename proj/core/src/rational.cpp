#include "gradelie/rational.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gradelie {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows.
bool fits(i128 v) { return v > kMin64 && v <= kMax64; }

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

std::uint64_t umag(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

void set_mpz(mpz_class& out, i128 value) {
  u128 mag = magnitude(value);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (value < 0) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(value)));
    num_ = 0;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  *this = Rational(q);
}

Rational::Rational(const mpq_class& value) : big_(std::make_unique<mpq_class>(value)) {
  big_->canonicalize();
  demote();
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_ = std::make_unique<mpq_class>(*other.big_);
  else
    big_.reset();
  return *this;
}

void Rational::demote() {
  if (!big_) return;
  const mpz_srcptr n = big_->get_num_mpz_t();
  const mpz_srcptr d = big_->get_den_mpz_t();
  if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d)) {
    long nv = mpz_get_si(n);
    if (nv != std::numeric_limits<long>::min()) {
      num_ = nv;
      den_ = mpz_get_si(d);
      big_.reset();
    }
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpz_class n, d;
  set_mpz(n, num);
  set_mpz(d, den);
  r.big_ = std::make_unique<mpq_class>(n, d);
  r.num_ = 0;
  r.den_ = 1;
  return r;
}

Rational Rational::parse(std::string_view text, bool require_lowest_terms) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num_text), 10);
  mpz_class d(std::string(den_text), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (require_lowest_terms && slash != std::string_view::npos) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw std::invalid_argument("rational '" + std::string(text) + "' is not in lowest terms");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str(10) : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str(10) : std::to_string(den_);
}

double Rational::to_double() const {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (!big_ && num_ > -kExact && num_ < kExact && den_ <= kExact)
    return static_cast<double>(num_) / static_cast<double>(den_);
  const mpq_class q = to_mpq();
  if (abs(q) > mpq_class(DBL_MAX)) throw std::overflow_error("rational " + to_string() + " exceeds double range");
  // mpq_get_d truncates; pick the nearest of the truncation and its neighbours.
  const double truncated = q.get_d();
  double best = truncated;
  mpq_class best_err = abs(q - mpq_class(truncated));
  for (double candidate : {std::nextafter(truncated, -DBL_MAX), std::nextafter(truncated, DBL_MAX)}) {
    if (!std::isfinite(candidate)) continue;
    mpq_class err = abs(q - mpq_class(candidate));
    if (err < best_err) {
      best = candidate;
      best_err = err;
    }
  }
  return best;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_)
    *r.big_ = -*r.big_;
  else
    r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.to_mpq() + b.to_mpq());
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(i128{a.num_} + b.num_, 1);
  const std::int64_t g = std::gcd(a.den_, b.den_);
  i128 num = i128{a.num_} * (b.den_ / g) + i128{b.num_} * (a.den_ / g);
  i128 den = i128{a.den_} * (b.den_ / g);
  if (num == 0) return Rational();
  if (g != 1) {
    const auto g2 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(magnitude(num) % static_cast<u128>(g)),
                                                       static_cast<std::uint64_t>(g)));
    if (g2 > 1) {
      num /= g2;
      den /= g2;
    }
  }
  return Rational::from_wide(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  const auto g1 = static_cast<std::int64_t>(std::gcd(umag(a.num_), static_cast<std::uint64_t>(b.den_)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(umag(b.num_), static_cast<std::uint64_t>(a.den_)));
  i128 num = i128{a.num_ / g1} * (b.num_ / g2);
  i128 den = i128{a.den_ / g2} * (b.den_ / g1);
  return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (a.big_ || b.big_) return Rational(a.to_mpq() / b.to_mpq());
  Rational inv;
  inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
  inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
  return a * inv;
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // big values never fit the inline form
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = i128{a.num_} * b.den_;
    const i128 rhs = i128{b.num_} * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace gradelie
