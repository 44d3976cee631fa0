// Prime field F_p with runtime modulus.  Elements carry their modulus; a
// default-constructed element is the modulus-agnostic zero, so empty sums
// start from Fp{} and adopt the modulus of the first real operand.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fanocert/rational.hpp"

namespace fanocert {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 = modulus-agnostic zero

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v == 0 && b.v == 0) return true;
    return a.p == b.p && a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

namespace detail {
inline std::uint64_t join_modulus(const Fp& a, const Fp& b) {
  if (a.p == 0) return b.p;
  if (b.p == 0) return a.p;
  if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli");
  return a.p;
}
}  // namespace detail

Fp make_fp(std::int64_t value, std::uint64_t p);
Fp fp_pow(Fp base, std::uint64_t e);
Fp fp_inv(const Fp& a);

inline Fp operator+(const Fp& a, const Fp& b) {
  const std::uint64_t p = detail::join_modulus(a, b);
  if (p == 0) return Fp{};
  std::uint64_t s = a.v + b.v;
  if (s >= p) s -= p;
  return Fp{s, p};
}

inline Fp operator-(const Fp& a) {
  if (a.v == 0) return a;
  return Fp{a.p - a.v, a.p};
}

inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

inline Fp operator*(const Fp& a, const Fp& b) {
  const std::uint64_t p = detail::join_modulus(a, b);
  if (p == 0 || a.v == 0 || b.v == 0) return Fp{0, p};
  const auto prod = static_cast<unsigned __int128>(a.v) * b.v;
  return Fp{static_cast<std::uint64_t>(prod % p), p};
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * fp_inv(b); }

inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }

inline Fp make_fp(std::int64_t value, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("make_fp: modulus must be >= 2");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Fp{static_cast<std::uint64_t>(r), p};
}

inline Fp fp_pow(Fp base, std::uint64_t e) {
  Fp acc{1 % base.p, base.p};
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

inline Fp fp_inv(const Fp& a) {
  if (a.v == 0) throw std::domain_error("Fp: division by zero");
  return fp_pow(a, a.p - 2);  // p prime
}

// Image of an exact rational in F_p; throws if the denominator vanishes mod p.
Fp to_fp(const Rational& q, std::uint64_t p);

inline Fp scale_coeff(const Fp& c, const Rational& q) {
  if (c.v == 0) return c;
  return c * to_fp(q, c.p);
}

inline bool is_zero_coeff(const Fp& c) { return c.v == 0; }

inline std::string coeff_to_string(const Fp& c) { return std::to_string(c.v); }

bool is_probable_prime(std::uint64_t p);

}  // namespace fanocert
