#include "fanocert/monomial.hpp"

#include <algorithm>

namespace fanocert {

unsigned exponents_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  const unsigned da = exponents_degree(a);
  const unsigned db = exponents_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Exponents> exponents_of_degree(int nvars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  // Recursive stars-and-bars walk, then sort into canonical order.
  auto rec = [&](auto&& self, int var, unsigned rest) -> void {
    if (var == nvars - 1) {
      cur[static_cast<std::size_t>(var)] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= rest; ++v) {
      cur[static_cast<std::size_t>(var)] = v;
      self(self, var + 1, rest - v);
    }
    cur[static_cast<std::size_t>(var)] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace fanocert
