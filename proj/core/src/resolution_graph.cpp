#include "fanocert/resolution_graph.hpp"

#include <stdexcept>

namespace fanocert {

int ResolutionGraph::lower_count() const {
  int L = 0;
  while (L < n && delta[static_cast<std::size_t>(L)] >= 2) ++L;
  return L;
}

void validate_resolution_graph(const ResolutionGraph& g) {
  if (g.n < 1) throw std::invalid_argument("ResolutionGraph: need at least one vertex");
  if (static_cast<int>(g.delta.size()) != g.n)
    throw std::invalid_argument("ResolutionGraph: delta must have one entry per vertex");
  for (int d : g.delta) {
    if (d < 1) throw std::invalid_argument("ResolutionGraph: delta entries must be >= 1");
  }
  const int L = g.lower_count();
  for (int i = L; i < g.n; ++i) {
    if (g.delta[static_cast<std::size_t>(i)] != 1)
      throw std::invalid_argument("ResolutionGraph: lower part (delta >= 2) must precede the upper part");
  }
  for (const auto& [i, j] : g.arrows) {
    if (!(1 <= j && j < i && i <= g.n))
      throw std::invalid_argument("ResolutionGraph: arrows must run downward inside 1..n");
  }
}

std::vector<Integer> path_counts(int n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[static_cast<std::size_t>(n)] = 1;
  for (int j = n - 1; j >= 1; --j) {
    Integer sum = 0;
    for (const auto& [a, b] : arrows) {
      if (b == j) sum += p[static_cast<std::size_t>(a)];
    }
    p[static_cast<std::size_t>(j)] = sum;
  }
  p.erase(p.begin());  // 1-based to 0-based
  return p;
}

std::vector<Integer> path_counts(const ResolutionGraph& g) {
  validate_resolution_graph(g);
  return path_counts(g.n, g.arrows);
}

bool is_compatible(const ResolutionGraph& g, std::span<const Rational> a) {
  validate_resolution_graph(g);
  const int L = g.lower_count();
  if (static_cast<int>(a.size()) != L)
    throw std::invalid_argument("is_compatible: need one value per lower-part vertex");
  for (const auto& v : a) {
    if (sgn(v) < 0) throw std::invalid_argument("is_compatible: values must be non-negative");
  }
  for (int i = 1; i <= L; ++i) {
    Rational sum(0);
    for (const auto& [src, dst] : g.arrows) {
      if (dst == i && src <= L) sum += a[static_cast<std::size_t>(src - 1)];
    }
    if (a[static_cast<std::size_t>(i - 1)] < sum) return false;
  }
  return true;
}

bool noether_fano_holds(const ResolutionGraph& g, std::span<const long> nu, long n) {
  validate_resolution_graph(g);
  if (static_cast<int>(nu.size()) != g.n)
    throw std::invalid_argument("noether_fano_holds: nu length mismatch");
  const auto p = path_counts(g);
  Integer lhs = 0, rhs = 0;
  for (int i = 0; i < g.n; ++i) {
    lhs += p[static_cast<std::size_t>(i)] * nu[static_cast<std::size_t>(i)];
    rhs += p[static_cast<std::size_t>(i)] * g.delta[static_cast<std::size_t>(i)];
  }
  rhs *= n;
  return lhs > rhs;
}

std::vector<std::pair<int, int>> SurfaceResolutionGraph::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i <= n; ++i) {
    out.emplace_back(i, i - 1);
    const int ex = extra[static_cast<std::size_t>(i)];
    if (ex != 0) out.emplace_back(i, ex);
  }
  return out;
}

void validate_surface_graph(const SurfaceResolutionGraph& g) {
  if (g.n < 1) throw std::invalid_argument("SurfaceResolutionGraph: need at least one vertex");
  if (static_cast<int>(g.extra.size()) != g.n + 1)
    throw std::invalid_argument("SurfaceResolutionGraph: extra must be indexed 0..n");
  if (g.extra[0] != 0 || (g.n >= 1 && g.extra[1] != 0) || (g.n >= 2 && g.extra[2] != 0))
    throw std::invalid_argument("SurfaceResolutionGraph: vertices 1 and 2 cannot carry an extra arrow");
  for (int i = 3; i <= g.n; ++i) {
    const int ex = g.extra[static_cast<std::size_t>(i)];
    if (ex == 0) continue;
    if (!(1 <= ex && ex <= i - 2))
      throw std::invalid_argument("SurfaceResolutionGraph: extra arrow must point below i-1");
    const int prev_extra = g.extra[static_cast<std::size_t>(i - 1)];
    const bool in_prev_out = (ex == i - 2) || (prev_extra != 0 && ex == prev_extra);
    if (!in_prev_out)
      throw std::invalid_argument("SurfaceResolutionGraph: extra arrow must land in out(i-1)");
  }
}

std::vector<SurfaceResolutionGraph> enumerate_surface_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_surface_graphs: n must be >= 1");
  std::vector<SurfaceResolutionGraph> out;
  SurfaceResolutionGraph cur;
  cur.n = n;
  cur.extra.assign(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    cur.extra[static_cast<std::size_t>(i)] = 0;
    self(self, i + 1);
    if (i >= 3) {
      cur.extra[static_cast<std::size_t>(i)] = i - 2;
      self(self, i + 1);
      const int prev_extra = cur.extra[static_cast<std::size_t>(i - 1)];
      if (prev_extra != 0 && prev_extra != i - 2) {
        cur.extra[static_cast<std::size_t>(i)] = prev_extra;
        self(self, i + 1);
      }
      cur.extra[static_cast<std::size_t>(i)] = 0;
    }
  };
  rec(rec, 2);
  return out;
}

std::vector<Integer> path_counts(const SurfaceResolutionGraph& g) {
  validate_surface_graph(g);
  return path_counts(g.n, g.arrows());
}

bool log_noether_fano_holds(const SurfaceResolutionGraph& g, std::span<const long> nu, long n) {
  if (static_cast<int>(nu.size()) != g.n)
    throw std::invalid_argument("log_noether_fano_holds: nu length mismatch");
  const auto p = path_counts(g);
  Integer lhs = 0, psum = 0;
  for (int i = 0; i < g.n; ++i) {
    lhs += p[static_cast<std::size_t>(i)] * nu[static_cast<std::size_t>(i)];
    psum += p[static_cast<std::size_t>(i)];
  }
  return lhs > n * (psum + 1);
}

namespace {

void square_bound_sides(const SurfaceResolutionGraph& g, Integer& lhs, Integer& rhs) {
  const auto p = path_counts(g);
  Integer sum = 0, sumsq = 0;
  for (const auto& pi : p) {
    sum += pi;
    sumsq += pi * pi;
  }
  lhs = (sum + 1) * (sum + 1);
  rhs = 4 * sumsq;
}

}  // namespace

bool square_bound_holds(const SurfaceResolutionGraph& g) {
  Integer lhs, rhs;
  square_bound_sides(g, lhs, rhs);
  return lhs >= rhs;
}

bool square_bound_equality(const SurfaceResolutionGraph& g) {
  Integer lhs, rhs;
  square_bound_sides(g, lhs, rhs);
  return lhs == rhs;
}

bool tail_bound_holds(const SurfaceResolutionGraph& g) {
  const auto p = path_counts(g);
  for (int i = 1; i <= g.n; ++i) {
    Integer tail = 0;
    for (int j = i + 2; j <= g.n; ++j) tail += p[static_cast<std::size_t>(j - 1)];
    if (p[static_cast<std::size_t>(i - 1)] > tail + 1) return false;
  }
  return true;
}

Rational constrained_quadratic_min(std::span<const Rational> w, std::span<const Rational> p,
                                   const Rational& c) {
  if (w.size() != p.size() || w.empty())
    throw std::invalid_argument("constrained_quadratic_min: weight/coefficient length mismatch");
  Rational denom(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) <= 0) throw std::invalid_argument("constrained_quadratic_min: weights must be positive");
    denom += p[i] * p[i] / w[i];
  }
  if (sgn(denom) == 0) throw std::invalid_argument("constrained_quadratic_min: all coefficients vanish");
  return c * c / denom;
}

Rational surface_multiplicity_bound(const SurfaceResolutionGraph& g, long n) {
  if (n < 1) throw std::invalid_argument("surface_multiplicity_bound: n must be >= 1");
  const auto p = path_counts(g);
  Integer sum = 0, sumsq = 0;
  for (const auto& pi : p) {
    sum += pi;
    sumsq += pi * pi;
  }
  return make_rational((sum + 1) * (sum + 1) * n * n, sumsq);
}

Rational counting_bound(long sigma_l, long sigma_u, long n) {
  if (sigma_l < 1) throw std::invalid_argument("counting_bound: Sigma_l must be >= 1");
  if (sigma_u < 0) throw std::invalid_argument("counting_bound: Sigma_u must be >= 0");
  if (n < 1) throw std::invalid_argument("counting_bound: n must be >= 1");
  const Integer num = Integer(2 * sigma_l + sigma_u) * Integer(2 * sigma_l + sigma_u) * n * n;
  const Integer den = Integer(sigma_l) * Integer(sigma_l + sigma_u);
  return make_rational(num, den);
}

}  // namespace fanocert
