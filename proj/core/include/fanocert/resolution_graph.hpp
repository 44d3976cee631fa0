// Oriented blow-up graphs: path counts, compatibility, the Noether-Fano
// inequalities, exhaustive enumeration of the surface-resolution class, and
// the quadratic-form bounds they feed.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fanocert/rational.hpp"

namespace fanocert {

// General blow-up graph on vertices 1..n with arrows running downward
// (i -> j only for i > j).  delta_i = codim B_{i-1} - 1; the lower part
// (delta >= 2) must precede the upper part (delta == 1).
struct ResolutionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;
  std::vector<int> delta;  // size n

  int lower_count() const;  // L
};

void validate_resolution_graph(const ResolutionGraph& g);

// p_j = number of paths from n to j; p_n = 1.  Exact big integers.
std::vector<Integer> path_counts(int n, const std::vector<std::pair<int, int>>& arrows);
std::vector<Integer> path_counts(const ResolutionGraph& g);

// a(i) >= sum of a(j) over arrows j -> i, checked on the lower part.
bool is_compatible(const ResolutionGraph& g, std::span<const Rational> a);

// sum p_i nu_i > n sum p_i delta_i, exactly.
bool noether_fano_holds(const ResolutionGraph& g, std::span<const long> nu, long n);

// Resolution graph of a valuation over a surface germ: vertex i >= 2 carries
// the mandatory arrow i -> i-1 and at most one extra arrow i -> j with j in
// out(i-1).  extra[i] == 0 means no extra arrow.
struct SurfaceResolutionGraph {
  int n = 0;
  std::vector<int> extra;  // size n + 1; entries for i >= 3 may be nonzero

  std::vector<std::pair<int, int>> arrows() const;
};

void validate_surface_graph(const SurfaceResolutionGraph& g);

std::vector<SurfaceResolutionGraph> enumerate_surface_graphs(int n);

std::vector<Integer> path_counts(const SurfaceResolutionGraph& g);

// sum p_i nu_i > n (sum p_i + 1).
bool log_noether_fano_holds(const SurfaceResolutionGraph& g, std::span<const long> nu, long n);

// (sum p + 1)^2 >= 4 sum p^2.
bool square_bound_holds(const SurfaceResolutionGraph& g);
bool square_bound_equality(const SurfaceResolutionGraph& g);

// p_i <= sum_{j >= i+2} p_j + 1 for every vertex.
bool tail_bound_holds(const SurfaceResolutionGraph& g);

// min of sum w_i s_i^2 subject to sum p_i s_i = c, namely c^2 / sum(p_i^2/w_i).
Rational constrained_quadratic_min(std::span<const Rational> w, std::span<const Rational> p,
                                   const Rational& c);

// (sum p + 1)^2 / sum p^2 * n^2.
Rational surface_multiplicity_bound(const SurfaceResolutionGraph& g, long n);

// (2 Sigma_l + Sigma_u)^2 / (Sigma_l (Sigma_l + Sigma_u)) * n^2; >= 4 n^2.
Rational counting_bound(long sigma_l, long sigma_u, long n);

}  // namespace fanocert
