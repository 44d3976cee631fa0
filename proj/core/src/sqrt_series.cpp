#include "fanocert/sqrt_series.hpp"

namespace fanocert {

Rational half_binomial(unsigned i) {
  Rational g(1);
  for (unsigned s = 1; s <= i; ++s) {
    g *= make_rational(3 - 2 * static_cast<long>(s), 2 * static_cast<long>(s));
  }
  return g;
}

}  // namespace fanocert
