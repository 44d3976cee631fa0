// Formal square-root calculus for branch polynomials g = 1 + w_1 + ... + w_{2l}:
// truncated roots, residuals, the leading residual components h_j[g], and the
// substitution sequence that decouples them.  Everything is exact; over F_p
// the prime must be odd and large enough that no division in the half-integer
// binomial recurrence collapses.
#pragma once

#include <stdexcept>
#include <vector>

#include "fanocert/polynomial.hpp"

namespace fanocert {

// gamma_i = binomial(1/2, i), the coefficients of (1+t)^{1/2}.
// gamma_0 = 1, gamma_i = gamma_{i-1} * (3 - 2i) / (2i).
Rational half_binomial(unsigned i);

// g = 1 + w_1 + ... + w_{2l}; w[j] homogeneous of degree j or zero.
template <class K>
class BranchSeries {
 public:
  BranchSeries(int half_degree, int nvars, std::vector<Polynomial<K>> w)
      : l_(half_degree), nvars_(nvars), w_(std::move(w)) {
    if (l_ < 1) throw std::invalid_argument("BranchSeries: half-degree must be >= 1");
    if (static_cast<int>(w_.size()) != 2 * l_ + 1)
      throw std::invalid_argument("BranchSeries: expected components w_0..w_{2l}");
    for (int j = 1; j <= 2 * l_; ++j) {
      const auto& wj = w_[static_cast<std::size_t>(j)];
      if (wj.nvars() != nvars_) throw std::invalid_argument("BranchSeries: nvars mismatch");
      if (!wj.is_zero() &&
          (!wj.is_homogeneous() || wj.total_degree() != static_cast<unsigned>(j)))
        throw std::invalid_argument("BranchSeries: w_j must be homogeneous of degree j");
    }
  }

  static BranchSeries from_components(int half_degree, int nvars,
                                      std::vector<Polynomial<K>> w1_to_2l) {
    std::vector<Polynomial<K>> w;
    w.reserve(w1_to_2l.size() + 1);
    w.push_back(Polynomial<K>::zero(nvars));  // slot 0 is the implicit 1
    for (auto& f : w1_to_2l) w.push_back(std::move(f));
    return BranchSeries(half_degree, nvars, std::move(w));
  }

  int l() const { return l_; }
  int nvars() const { return nvars_; }
  const Polynomial<K>& w(int j) const { return w_.at(static_cast<std::size_t>(j)); }

  // 1 + w_1 + ... + w_{2l} as a polynomial; the 1 uses the given unit.
  Polynomial<K> full_polynomial(const K& one) const {
    Polynomial<K> g = Polynomial<K>::constant(nvars_, one);
    for (int j = 1; j <= 2 * l_; ++j) g += w_[static_cast<std::size_t>(j)];
    return g;
  }

  BranchSeries with_component(int j, Polynomial<K> replacement) const {
    auto w = w_;
    w.at(static_cast<std::size_t>(j)) = std::move(replacement);
    return BranchSeries(l_, nvars_, std::move(w));
  }

 private:
  int l_;
  int nvars_;
  std::vector<Polynomial<K>> w_;  // w_[0] unused (implicit 1)
};

// Truncated root 1 + (degree-1 part) + ... + (degree-order part).
template <class K>
struct TruncatedRoot {
  int order = 0;
  std::vector<Polynomial<K>> parts;  // parts[i] homogeneous of degree i; parts[0] unused

  const Polynomial<K>& part(int i) const { return parts.at(static_cast<std::size_t>(i)); }

  Polynomial<K> as_polynomial(const K& one) const {
    Polynomial<K> r = Polynomial<K>::constant(parts.at(1).nvars(), one);
    for (int i = 1; i <= order; ++i) r += parts[static_cast<std::size_t>(i)];
    return r;
  }
};

// The homogeneous parts of the truncated root: the degree-i layer of
// sum_s binomial(1/2, s) (w_1+...+w_{2l})^s, all products truncated above
// `order`.  Everything here is graded, so powers are kept as layers.
template <class K>
std::vector<Polynomial<K>> sqrt_components(const BranchSeries<K>& g, int order) {
  if (order < 1 || order > 2 * g.l())
    throw std::invalid_argument("sqrt_components: order must be in [1, 2l]");
  const int n = g.nvars();
  std::vector<Polynomial<K>> W(static_cast<std::size_t>(order) + 1, Polynomial<K>::zero(n));
  bool any = false;
  for (int j = 1; j <= order && j <= 2 * g.l(); ++j) {
    W[static_cast<std::size_t>(j)] = g.w(j);
    any = any || !g.w(j).is_zero();
  }
  std::vector<Polynomial<K>> parts(static_cast<std::size_t>(order) + 1, Polynomial<K>::zero(n));
  if (!any) return parts;
  std::vector<Polynomial<K>> power = W;  // layers of W^s
  for (int s = 1; s <= order; ++s) {
    const Rational gamma = half_binomial(static_cast<unsigned>(s));
    for (int d = s; d <= order; ++d) {
      const auto& layer = power[static_cast<std::size_t>(d)];
      if (!layer.is_zero()) parts[static_cast<std::size_t>(d)] += layer.scaled_by_rational(gamma);
    }
    if (s == order) break;
    std::vector<Polynomial<K>> next(static_cast<std::size_t>(order) + 1, Polynomial<K>::zero(n));
    bool nonzero = false;
    for (int a = s; a < order; ++a) {
      const auto& pa = power[static_cast<std::size_t>(a)];
      if (pa.is_zero()) continue;
      for (int b = 1; a + b <= order; ++b) {
        const auto& wb = W[static_cast<std::size_t>(b)];
        if (wb.is_zero()) continue;
        next[static_cast<std::size_t>(a + b)] += pa * wb;
        nonzero = true;
      }
    }
    if (!nonzero) break;
    power = std::move(next);
  }
  return parts;
}

template <class K>
TruncatedRoot<K> truncated_sqrt(const BranchSeries<K>& g, int order) {
  if (order < 1 || order > 2 * g.l())
    throw std::invalid_argument("truncated_sqrt: order must be in [1, 2l]");
  TruncatedRoot<K> out;
  out.order = order;
  out.parts = sqrt_components(g, order);
  return out;
}

template <class K>
K unit_like(const BranchSeries<K>& g);

template <>
inline Rational unit_like(const BranchSeries<Rational>&) {
  return Rational(1);
}

template <>
inline Fp unit_like(const BranchSeries<Fp>& g) {
  for (int j = 1; j <= 2 * g.l(); ++j) {
    for (const auto& [e, c] : g.w(j).terms()) return Fp{1 % c.p, c.p};
  }
  throw std::invalid_argument("BranchSeries<Fp>: cannot infer modulus from an all-zero series");
}

template <class K>
bool all_components_zero(const BranchSeries<K>& g) {
  for (int j = 1; j <= 2 * g.l(); ++j)
    if (!g.w(j).is_zero()) return false;
  return true;
}

// g^{(j)} = g - [sqrt(g)]_j^2, exactly; the square is not truncated, so the
// tail above degree 2l is kept.
template <class K>
Polynomial<K> residual(const BranchSeries<K>& g, int order) {
  if (order < 1 || order > 2 * g.l())
    throw std::invalid_argument("residual: order must be in [1, 2l]");
  if (all_components_zero(g)) return Polynomial<K>::zero(g.nvars());
  TruncatedRoot<K> root = truncated_sqrt(g, order);
  const K one = unit_like(g);
  Polynomial<K> r = root.as_polynomial(one);
  return g.full_polynomial(one) - r * r;
}

// h_{degree}[g]: the degree-(j+1) homogeneous component of g^{(j)} with
// degree = j+1.  Defined for 2 <= degree <= 2l.
template <class K>
Polynomial<K> hypertangent_polynomial(const BranchSeries<K>& g, int degree) {
  if (degree < 2 || degree > 2 * g.l())
    throw std::invalid_argument("hypertangent_polynomial: degree must be in [2, 2l]");
  return residual(g, degree - 1).homogeneous_component(static_cast<unsigned>(degree));
}

// h_j for every j in [j_lo, j_hi] from one root expansion: the degree-j
// component of g - ([sqrt g]_{j-1})^2 is w_j minus the convolution of the
// root layers at degree j.
template <class K>
std::vector<Polynomial<K>> hypertangent_range(const BranchSeries<K>& g, int j_lo, int j_hi) {
  if (j_lo < 2 || j_lo > j_hi || j_hi > 2 * g.l())
    throw std::invalid_argument("hypertangent_range: need 2 <= j_lo <= j_hi <= 2l");
  const std::vector<Polynomial<K>> layers = sqrt_components(g, j_hi - 1);
  std::vector<Polynomial<K>> out;
  out.reserve(static_cast<std::size_t>(j_hi - j_lo) + 1);
  for (int j = j_lo; j <= j_hi; ++j) {
    Polynomial<K> h = g.w(j);
    for (int a = 1; a <= j - 1; ++a) {
      const auto& pa = layers[static_cast<std::size_t>(a)];
      const auto& pb = layers[static_cast<std::size_t>(j - a)];
      if (!pa.is_zero() && !pb.is_zero()) h -= pa * pb;
    }
    out.push_back(std::move(h));
  }
  return out;
}

// The part of h_{j+1} contributed by w_1..w_j alone: h_{j+1} of the series
// with every higher component zeroed.  Never materialized as a standalone
// object in the w-algebra, only evaluated.
template <class K>
Polynomial<K> residual_tail_term(const std::vector<Polynomial<K>>& w1_to_wj, int j, int nvars) {
  if (j < 1 || static_cast<int>(w1_to_wj.size()) < j)
    throw std::invalid_argument("residual_tail_term: need components w_1..w_j");
  const int l = (j + 2) / 2;  // smallest l with 2l >= j+1
  std::vector<Polynomial<K>> w;
  w.reserve(static_cast<std::size_t>(2 * l));
  for (int i = 0; i < j; ++i) w.push_back(w1_to_wj[static_cast<std::size_t>(i)]);
  while (static_cast<int>(w.size()) < 2 * l) w.push_back(Polynomial<K>::zero(nvars));
  const BranchSeries<K> padded = BranchSeries<K>::from_components(l, nvars, std::move(w));
  return hypertangent_polynomial(padded, j + 1);
}

// The substitution polynomials for degrees l+1..2l, each homogeneous of its
// index degree and depending only on w_1..w_l.  Entry 0 is degree l+1.
template <class K>
std::vector<Polynomial<K>> substitution_sequence(const BranchSeries<K>& g) {
  const int l = g.l();
  const int n = g.nvars();
  std::vector<Polynomial<K>> low;  // w_1..w_l, then the accumulated entries
  low.reserve(static_cast<std::size_t>(2 * l));
  for (int j = 1; j <= l; ++j) low.push_back(g.w(j));
  std::vector<Polynomial<K>> subs;
  for (int j = l; j <= 2 * l - 1; ++j) {
    Polynomial<K> next = -residual_tail_term(low, j, n);
    subs.push_back(next);
    low.push_back(std::move(next));
  }
  return subs;
}

// The inductive identity behind the substitution equivalence: replacing the
// components of degrees l+1..c-1 by the substitution sequence turns h_c into
// exactly w_c minus the degree-c substitution polynomial.
template <class K>
bool substitution_equivalence_check(const BranchSeries<K>& g, int c) {
  const int l = g.l();
  if (c < l + 1 || c > 2 * l)
    throw std::invalid_argument("substitution_equivalence_check: order must be in [l+1, 2l]");
  const std::vector<Polynomial<K>> subs = substitution_sequence(g);
  BranchSeries<K> subst = g;
  for (int j = l + 1; j <= c - 1; ++j)
    subst = subst.with_component(j, subs[static_cast<std::size_t>(j - l - 1)]);
  const Polynomial<K> h = hypertangent_polynomial(subst, c);
  return h == g.w(c) - subs[static_cast<std::size_t>(c - l - 1)];
}

}  // namespace fanocert
