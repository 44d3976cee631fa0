#include "fanocert/rational.hpp"

#include <stdexcept>

namespace fanocert {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

Rational parse_fraction(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_fraction: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      return Rational(n);
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_fraction: malformed rational '" + s + "'");
  }
}

std::string coeff_to_string(const Rational& c) { return c.get_str(); }

Rational coeff_from_string_rational(const std::string& s) { return parse_fraction(s); }

}  // namespace fanocert
