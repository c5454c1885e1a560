#include "gravfock/rational.h"

#include <cctype>
#include <stdexcept>

namespace gravfock {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return boost::multiprecision::cpp_int(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash), whole);
    auto den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string exp_text(text.substr(e + 1));
      if (exp_text.empty()) throw std::invalid_argument("malformed exponent in '" + std::string(whole) + "'");
      try {
        std::size_t used = 0;
        exponent = std::stoll(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in '" + std::string(whole) + "'");
      }
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    boost::multiprecision::cpp_int mantissa =
        parse_integer(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), whole);
    exponent -= static_cast<long long>(frac_part.size());
    boost::multiprecision::cpp_int scale = boost::multiprecision::pow(
        boost::multiprecision::cpp_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational minkowski_square(const RVec4& v) {
  return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  if (den == 0) throw std::domain_error("complex rational division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const ComplexRational& z) {
  if (z.imag() == 0) return to_string(z.real());
  std::string im;
  if (z.imag() == 1) {
    im = "i";
  } else if (z.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "i";
  }
  if (z.real() == 0) return im;
  std::string out = "(" + to_string(z.real());
  if (im.front() != '-') out += "+";
  return out + im + ")";
}

}  // namespace gravfock
