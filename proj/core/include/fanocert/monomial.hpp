// Dense exponent vectors and the graded reverse lexicographic order.
#pragma once

#include <cstdint>
#include <vector>

namespace fanocert {

using Exponents = std::vector<std::uint32_t>;

unsigned exponents_degree(const Exponents& e);

// grevlex: higher total degree wins; on ties the rightmost differing
// variable with the smaller exponent wins.
bool grevlex_greater(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_greater(a, b);
  }
};

// All exponent vectors of the given total degree, in descending grevlex
// order.  Used by random sampling and dense constructions.
std::vector<Exponents> exponents_of_degree(int nvars, unsigned degree);

}  // namespace fanocert
