// Sparse exact-coefficient multivariate polynomials.  The term map is keyed
// by exponent vector in descending grevlex order, never stores a zero
// coefficient, and all values are immutable after construction from the
// caller's point of view (operations return new polynomials).
#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanocert/monomial.hpp"
#include "fanocert/prime_field.hpp"
#include "fanocert/rational.hpp"
#include "fanocert/rng.hpp"

namespace fanocert {

template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, K, GrevlexGreater>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Polynomial: negative nvars");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }

  static Polynomial constant(int nvars, const K& c) {
    Polynomial f(nvars);
    f.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return f;
  }

  static Polynomial monomial(int nvars, const Exponents& e, const K& c) {
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
    Polynomial f(nvars);
    f.add_term(e, c);
    return f;
  }

  // x_index as a degree-1 monomial.
  static Polynomial variable(int nvars, int index, const K& one) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(nvars, e, one);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const K& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("Polynomial::add_term: exponent length mismatch");
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const K& s) const {
    Polynomial out(nvars_);
    if (is_zero_coeff(s)) return out;
    for (const auto& [e, c] : terms_) {
      K v = c * s;
      if (!is_zero_coeff(v)) out.terms_.emplace(e, v);
    }
    return out;
  }

  // Scale by an exact rational; for F_p coefficients the rational is mapped
  // into the field first (denominator must be invertible mod p).
  Polynomial scaled_by_rational(const Rational& q) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      K v = scale_coeff(c, q);
      if (!is_zero_coeff(v)) out.terms_.emplace(e, v);
    }
    return out;
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    K acc{};
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::uint32_t r = 0; r < e[i]; ++r) t = t * point[i];
      }
      acc = acc + t;
    }
    return acc;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exponents_degree(e));
    return d;
  }

  Polynomial homogeneous_component(unsigned d) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (exponents_degree(e) == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  bool is_homogeneous() const {
    std::optional<unsigned> d;
    for (const auto& [e, c] : terms_) {
      const unsigned de = exponents_degree(e);
      if (d && *d != de) return false;
      d = de;
    }
    return true;
  }

  // z_i -> images[i]; images must share a ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw std::invalid_argument("Polynomial::substitute: image count mismatch");
    const int out_vars = images.empty() ? 0 : images.front().nvars();
    Polynomial out(out_vars);
    // Cache powers of each image.
    std::vector<std::vector<Polynomial>> pow(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
      auto& row = pow[i];
      if (row.empty()) row.push_back(constant_one_like(images[i], out_vars));
      while (row.size() <= e) row.push_back(row.back() * images[i]);
      return row[e];
    };
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant_one_like_with(out_vars, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) term = term * power_of(i, e[i]);
      }
      out += term;
    }
    return out;
  }

  // Substitute x_var -> x_var + offset by Horner's rule on the layers of
  // x_var-degree.
  Polynomial taylor_shift(int var, const K& offset) const {
    if (is_zero_coeff(offset)) return *this;
    unsigned top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, e[static_cast<std::size_t>(var)]);
    std::vector<Polynomial> layers(top + 1, Polynomial(nvars_));
    for (const auto& [e, c] : terms_) {
      Exponents flat = e;
      const unsigned d = flat[static_cast<std::size_t>(var)];
      flat[static_cast<std::size_t>(var)] = 0;
      layers[d].add_term(flat, c);
    }
    Polynomial acc = layers[top];
    for (int d = static_cast<int>(top) - 1; d >= 0; --d) {
      Polynomial next(nvars_);
      for (const auto& [e, c] : acc.terms_) {
        Exponents up = e;
        up[static_cast<std::size_t>(var)] += 1;
        next.add_term(up, c);
        next.add_term(e, c * offset);
      }
      next += layers[static_cast<std::size_t>(d)];
      acc = std::move(next);
    }
    return acc;
  }

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_same_ring(const Polynomial& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  }

  static Polynomial constant_one_like(const Polynomial& sample, int out_vars) {
    // The multiplicative unit; modulus (for F_p) is adopted from whatever
    // it is multiplied with, so a plain 1 works for both domains.
    return Polynomial::constant(out_vars, unit_coeff(sample));
  }

  static Polynomial constant_one_like_with(int out_vars, const K& c) {
    Polynomial f(out_vars);
    f.add_term(Exponents(static_cast<std::size_t>(out_vars), 0), c);
    return f;
  }

  static K unit_coeff(const Polynomial& sample);

  int nvars_;
  TermMap terms_;
};

template <>
inline Rational Polynomial<Rational>::unit_coeff(const Polynomial<Rational>&) {
  return Rational(1);
}

template <>
inline Fp Polynomial<Fp>::unit_coeff(const Polynomial<Fp>& sample) {
  for (const auto& [e, c] : sample.terms()) return Fp{1 % c.p, c.p};
  return Fp{1, 0};  // resolved on first multiplication
}

// Sum of homogeneous pieces of one polynomial, indexed by degree 0..D.
template <class K>
struct HomogeneousDecomposition {
  std::vector<Polynomial<K>> components;

  Polynomial<K> sum() const {
    if (components.empty()) throw std::logic_error("empty decomposition");
    Polynomial<K> acc(components.front().nvars());
    for (const auto& c : components) acc += c;
    return acc;
  }
};

template <class K>
Polynomial<K> homogeneous_component(const Polynomial<K>& f, unsigned d) {
  return f.homogeneous_component(d);
}

// F homogeneous of degree D with F(p) subtracted off along x_0^D:
// F - F(p) x_0^D vanishes at p and stays homogeneous of degree D.
template <class K>
Polynomial<K> force_vanish_at(const Polynomial<K>& f, std::span<const K> point) {
  if (!f.is_homogeneous()) throw std::invalid_argument("force_vanish_at: input not homogeneous");
  if (f.is_zero()) return f;
  K value = f.evaluate(point);
  if (is_zero_coeff(value)) return f;
  const unsigned d = f.total_degree();
  Exponents e(static_cast<std::size_t>(f.nvars()), 0);
  e[0] = d;
  Polynomial<K> out = f;
  out.add_term(e, -value);
  return out;
}

// Decomposition of F(1, z_1 + p_1, ..., z_{n-1} + p_{n-1}) into homogeneous
// components of the shifted affine coordinates z centered at p.  The list
// always has deg(F) + 1 entries; component 0 equals F(p).
template <class K>
HomogeneousDecomposition<K> dehomogenize_at_point(const Polynomial<K>& f,
                                                  std::span<const K> point) {
  const int n = f.nvars();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("dehomogenize_at_point: point length mismatch");
  if (!f.is_homogeneous()) throw std::invalid_argument("dehomogenize_at_point: input not homogeneous");
  if (n < 1) throw std::invalid_argument("dehomogenize_at_point: need at least one variable");
  K one = point[0];
  if (is_zero_coeff(one))
    throw std::invalid_argument("dehomogenize_at_point: first coordinate must be nonzero");
  if (!(one * one == one))
    throw std::invalid_argument("dehomogenize_at_point: point must be normalized to p_0 = 1");

  // x_0 -> 1 (drop the exponent), then shift each chart coordinate by the
  // matching point coordinate.
  const int m = n - 1;
  Polynomial<K> shifted(m);
  for (const auto& [e, c] : f.terms()) {
    Exponents chart(e.begin() + 1, e.end());
    shifted.add_term(chart, c);
  }
  for (int i = 1; i < n; ++i) {
    shifted = shifted.taylor_shift(i - 1, point[static_cast<std::size_t>(i)]);
  }

  const unsigned D = f.is_zero() ? 0 : f.total_degree();
  HomogeneousDecomposition<K> out;
  out.components.reserve(D + 1);
  for (unsigned d = 0; d <= D; ++d) out.components.push_back(shifted.homogeneous_component(d));
  return out;
}

// Options for random sampling; full support by default, with optional
// per-monomial sparsity for stress tests.
struct RandomPolyOptions {
  double zero_probability = 0.0;
  long rational_coeff_min = -10;
  long rational_coeff_max = 10;
};

template <class K>
struct CoefficientSampler;

template <>
struct CoefficientSampler<Rational> {
  RandomPolyOptions opts;
  Rational operator()(SplitMix64& rng) const {
    long v = rng.in_range(opts.rational_coeff_min, opts.rational_coeff_max);
    if (v == 0) v = 1;  // nonzero unless the sparsity draw below zeroes the slot
    return Rational(v);
  }
};

template <>
struct CoefficientSampler<Fp> {
  RandomPolyOptions opts;
  std::uint64_t p = kDefaultPrime;
  Fp operator()(SplitMix64& rng) const { return Fp{1 + rng.below(p - 1), p}; }
};

// Deterministic-in-seed dense homogeneous polynomial.
template <class K>
Polynomial<K> random_homogeneous(int nvars, unsigned degree, SplitMix64& rng,
                                 const CoefficientSampler<K>& sampler) {
  Polynomial<K> f(nvars);
  const double zp = sampler.opts.zero_probability;
  for (const auto& e : exponents_of_degree(nvars, degree)) {
    const bool drop = zp > 0.0 && rng.below(1u << 30) < static_cast<std::uint64_t>(zp * (1u << 30));
    K c = sampler(rng);  // always consume the stream so sparsity does not shift later draws
    if (!drop) f.add_term(e, c);
  }
  return f;
}

template <class K>
Polynomial<K> random_homogeneous(int nvars, unsigned degree, std::uint64_t seed,
                                 const CoefficientSampler<K>& sampler) {
  SplitMix64 rng(seed);
  return random_homogeneous(nvars, degree, rng, sampler);
}

template <class K>
std::string Polynomial<K>::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + coeff_to_string(c) + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*";
      out += (i < var_names.size()) ? var_names[i] : ("x" + std::to_string(i));
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace fanocert
