#include "gradelie/gaussian.hpp"

#include <stdexcept>

namespace gradelie {

GaussianRational GaussianRational::parse(std::string_view text) {
  auto fail = [&]() -> GaussianRational {
    throw std::invalid_argument("malformed Gaussian rational '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  if (text.back() != 'i') return {Rational::parse(text, true)};
  std::string_view body = text.substr(0, text.size() - 1);
  // The split point between real and imaginary parts is the last sign that is
  // not in leading position.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+" || body == "-") return fail();
    return {Rational(0), Rational::parse(body, true)};
  }
  std::string_view re_text = body.substr(0, split);
  std::string_view im_text = body.substr(split);
  if (im_text.size() < 2) return fail();
  return {Rational::parse(re_text, true), Rational::parse(im_text, true)};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  std::string out = re_.to_string();
  if (im_.sign() < 0)
    out += "-" + (-im_).to_string();
  else
    out += "+" + im_.to_string();
  return out + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (!rhs.im_.is_zero()) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (!rhs.im_.is_zero()) im_ -= rhs.im_;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return {a.re_ * b.re_};
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("Gaussian rational division by zero");
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  const Rational n = b.norm2();
  const GaussianRational num = a * b.conj();
  return {num.re_ / n, num.im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) { return *this = *this * rhs; }
GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) { return *this = *this / rhs; }

void fused_add_mul(Scalar& acc, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  acc += a * b;
}

}  // namespace gradelie
