#include "cfgpoly/numeric.hpp"

#include <stdexcept>
#include <string>

namespace cfgpoly {

GaussianRational reciprocal(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("reciprocal of zero");
  Rational norm = z.re * z.re + z.im * z.im;
  return {Rational(z.re / norm), Rational(-z.im / norm)};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  return a * reciprocal(b);
}

GaussianRational to_rational(const GaussianInteger& z) { return {Rational(z.re), Rational(z.im)}; }

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_integer = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace cfgpoly
