// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <vector>

#include "fanocert/bounds.hpp"
#include "fanocert/groebner.hpp"
#include "fanocert/regularity.hpp"
#include "fanocert/reports.hpp"
#include "fanocert/resolution_graph.hpp"
#include "fanocert/sqrt_series.hpp"

using namespace fanocert;

namespace {

FamilyDescriptor make_desc(int M, int k, std::vector<int> d, int m, std::vector<int> l) {
  FamilyDescriptor desc;
  desc.M = M;
  desc.k = k;
  desc.d = std::move(d);
  desc.m = m;
  desc.l = std::move(l);
  return desc;
}

BranchSeries<Rational> random_series(int l, int nvars, SplitMix64& rng) {
  CoefficientSampler<Rational> sampler;
  sampler.opts.rational_coeff_min = -4;
  sampler.opts.rational_coeff_max = 4;
  std::vector<Polynomial<Rational>> w;
  for (int j = 1; j <= 2 * l; ++j)
    w.push_back(random_homogeneous<Rational>(nvars, static_cast<unsigned>(j), rng, sampler));
  return BranchSeries<Rational>::from_components(l, nvars, std::move(w));
}

// ---------------------------------------------------------------------------

bool graph_lemmas_exhaustive() {
  bool equality_at_one = false;
  long checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : enumerate_surface_graphs(n)) {
      ++checked;
      if (!square_bound_holds(g) || !tail_bound_holds(g)) return false;
      if (n == 1 && square_bound_equality(g)) equality_at_one = true;
    }
  }
  return equality_at_one && checked == 1 + 1 + 2 + 5 + 13 + 34 + 89 + 233;
}

bool counting_bound_range() {
  for (long sl = 1; sl <= 100; ++sl) {
    for (long su = 0; su <= 100; ++su) {
      if (counting_bound(sl, su, 1) < Rational(4)) return false;
    }
  }
  using P = Polynomial<Rational>;
  const P a = P::variable(2, 0, Rational(1));
  const P b = P::variable(2, 1, Rational(1));
  const P lhs =
      (a.scaled(Rational(2)) + b) * (a.scaled(Rational(2)) + b) - (a * (a + b)).scaled(Rational(4));
  return lhs == b * b;
}

bool sqrt_calculus_random_trials() {
  SplitMix64 rng(0xacce57);
  const int trials = 102;
  for (int trial = 0; trial < trials; ++trial) {
    const int l = 2 + trial % 3;            // l in {2, 3, 4}
    const int nvars = 1 + trial % 4;        // up to 4 variables
    BranchSeries<Rational> g = random_series(l, nvars, rng);

    // ([sqrt g]_{2l})^2 agrees with g through degree 2l.
    const Polynomial<Rational> top = residual(g, 2 * l);
    for (unsigned d = 0; d <= static_cast<unsigned>(2 * l); ++d) {
      if (!top.homogeneous_component(d).is_zero()) return false;
    }

    // residual(g, j) vanishes through degree j.
    const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * l)));
    const Polynomial<Rational> res = residual(g, j);
    for (unsigned d = 0; d <= static_cast<unsigned>(j); ++d) {
      if (!res.homogeneous_component(d).is_zero()) return false;
    }

    // h_{j+1} - w_{j+1} ignores every component above degree j.
    const int jj = l + static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));  // in [l, 2l-1]
    const Polynomial<Rational> tail = hypertangent_polynomial(g, jj + 1) - g.w(jj + 1);
    {
      CoefficientSampler<Rational> sampler;
      BranchSeries<Rational> g2 = g;
      for (int r = jj + 1; r <= 2 * l; ++r) {
        g2 = g2.with_component(
            r, random_homogeneous<Rational>(nvars, static_cast<unsigned>(r), rng, sampler));
      }
      if (hypertangent_polynomial(g2, jj + 1) - g2.w(jj + 1) != tail) return false;
    }

    // The substitution identity at a random admissible order.
    const int c = l + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
    if (!substitution_equivalence_check(g, c)) return false;
  }
  return true;
}

bool gamma_coefficients() {
  if (half_binomial(1) != make_rational(1, 2)) return false;
  if (half_binomial(2) != make_rational(-1, 8)) return false;
  for (unsigned i = 0; i <= 12; ++i) {
    Rational conv(0);
    for (unsigned s = 0; s <= i; ++s) conv += half_binomial(s) * half_binomial(i - s);
    if (conv != ((i <= 1) ? Rational(1) : Rational(0))) return false;
  }
  return true;
}

long brute_force_codim(const CodimProblem& prob) {
  const int count = prob.l + 1;
  long best = 0;
  bool first = true;
  for (int j = 0; j <= prob.l; ++j) {
    long mu = 0;
    bool mu_first = true;
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
      if (__builtin_popcount(mask) != j + 1) continue;
      long sum = 0;
      for (int i = 0; i < count; ++i) {
        if (mask & (1u << i)) sum += prob.m[static_cast<std::size_t>(i)];
      }
      if (mu_first || sum < mu) {
        mu = sum;
        mu_first = false;
      }
    }
    const long value = (mu - j) * (prob.N - j) + 1;
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  return best;
}

bool codimension_calculus() {
  // Every degree list of length <= 8 with entries in [2, 6], several ambient
  // dimensions each, against the subset brute force.
  std::vector<int> list;
  bool ok = true;
  auto visit = [&](auto&& self, int len, int lo) -> void {
    if (!ok) return;
    if (static_cast<int>(list.size()) == len) {
      for (int N = len; N <= len + 2; ++N) {
        CodimProblem prob;
        prob.N = N;
        prob.l = len - 1;
        prob.m = list;
        if (codim_lower_bound(prob) != brute_force_codim(prob)) ok = false;
        // Corollary branches match their closed forms and never exceed the
        // full bound.
        const long m = *std::min_element(list.begin(), list.end());
        long expected;
        if (prob.l <= N - 2) {
          expected = m * N + 1;
        } else {
          long mu_top = 0;
          for (int v : list) mu_top += v;
          expected = std::min(m * N + 1, mu_top - prob.l + 1);
        }
        if (codim_corollary(prob) != expected) ok = false;
        if (codim_corollary(prob) > codim_lower_bound(prob)) ok = false;
      }
      return;
    }
    for (int v = lo; v <= 6; ++v) {
      list.push_back(v);
      self(self, len, v);
      list.pop_back();
    }
  };
  for (int len = 1; len <= 8 && ok; ++len) visit(visit, len, 2);
  if (!ok) return false;

  // Degree-tuple inequalities, exhaustive.
  std::vector<int> tuple;
  auto rec = [&](auto&& self, int c) -> void {
    if (!ok) return;
    if (static_cast<int>(tuple.size()) == c) {
      if (!degree_tuple_inequality(TupleInequality::FiveTimesSum, tuple)) ok = false;
      if (!degree_tuple_inequality(TupleInequality::MeanSquare, tuple)) ok = false;
      return;
    }
    for (int s = 2; s <= 8; ++s) {
      tuple.push_back(s);
      self(self, c);
      tuple.pop_back();
    }
  };
  for (int c = 1; c <= 5 && ok; ++c) rec(rec, c);
  if (!ok) return false;

  // beta >= M over every admissible descriptor with a half-degree-2 branch,
  // and the class-0 variant >= M+1 for every choice of distinguished branch,
  // up to M = 30.
  for (int M = 4; M <= 30; ++M) {
    for (const auto& desc : enumerate_descriptors(M)) {
      if (std::find(desc.l.begin(), desc.l.end(), 2) != desc.l.end()) {
        if (class1_minimal_branch_codim(desc) < Rational(M)) return false;
      }
      for (int s = 0; s < desc.m; ++s) {
        if (class0_codim_bound(desc, s) < Rational(M + 1)) return false;
      }
    }
  }

  for (int M = 4; M <= 60; ++M) {
    for (int k = 1; 2 * k <= M - 1; ++k) {
      if (!degree_sum_inequality_check(M, k)) return false;
    }
  }
  return true;
}

bool bound_pipelines() {
  if (class0_final_bound(make_desc(5, 1, {3}, 1, {3})) != make_rational(3, 5)) return false;
  for (int M = 4; M <= 20; ++M) {
    for (const auto& desc : enumerate_descriptors(M)) {
      const Rational threshold = Rational(4) / Rational(degree_of_V(desc));
      const int lm = desc.l.back();
      Rational final_bound;
      try {
        (void)class0_lambda(desc);  // internal two-pipeline cross-assertion
        final_bound = class0_final_bound(desc);
      } catch (const std::exception&) {
        return false;
      }
      if (final_bound != threshold * make_rational(3 * lm, 4 * lm - 2)) return false;
      if (final_bound > threshold) return false;
      for (int e = 1; e <= desc.m; ++e) {
        try {
          if (classE_lambda(desc, e) != threshold) return false;
        } catch (const std::exception&) {
          return false;
        }
      }
    }
  }
  return true;
}

long projective_point_count(const std::vector<Polynomial<Fp>>& polys, int nvars, std::uint64_t p) {
  long count = 0;
  std::vector<Fp> coords(static_cast<std::size_t>(nvars), Fp{0, p});
  auto rec = [&](auto&& self, int var) -> void {
    if (var == nvars) {
      for (const auto& f : polys) {
        if (!is_zero_coeff(f.evaluate(coords))) return;
      }
      ++count;
      return;
    }
    for (std::uint64_t v = 0; v < p; ++v) {
      coords[static_cast<std::size_t>(var)] = Fp{v, p};
      self(self, var + 1);
    }
  };
  for (int lead = 0; lead < nvars; ++lead) {
    for (int i = 0; i < lead; ++i) coords[static_cast<std::size_t>(i)] = Fp{0, p};
    coords[static_cast<std::size_t>(lead)] = Fp{1, p};
    rec(rec, lead + 1);
  }
  return count;
}

// Planted degenerate member of the (5,1,[3],1,[3]) family (the regularity
// set picks up the shared factor between q_{1,2} and h_{1,4}).
FamilyInstance<Fp> planted_instance(std::uint64_t p, std::uint64_t seed) {
  const auto desc = make_desc(5, 1, {3}, 1, {3});
  const int n = desc.ambient_vars();
  SplitMix64 rng(seed);
  CoefficientSampler<Fp> sampler;
  sampler.p = p;
  FamilyInstance<Fp> inst;
  inst.desc = desc;
  auto lift = [&](const Polynomial<Fp>& affine, unsigned x0_power) {
    Polynomial<Fp> out(n);
    for (const auto& [e, c] : affine.terms()) {
      Exponents lifted(static_cast<std::size_t>(n), 0);
      lifted[0] = x0_power;
      for (std::size_t i = 0; i < e.size(); ++i) lifted[i + 1] = e[i];
      out.add_term(lifted, c);
    }
    return out;
  };
  Polynomial<Fp> f(n);
  {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = 2;
    e[6] = 1;
    f.add_term(e, Fp{1, p});
  }
  {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = 1;
    e[1] = 1;
    e[2] = 1;
    f.add_term(e, Fp{1, p});
  }
  f += lift(random_homogeneous<Fp>(n - 1, 3, rng, sampler), 0);
  inst.f.push_back(std::move(f));

  Polynomial<Fp> g(n);
  {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = 6;
    g.add_term(e, Fp{1, p});
  }
  {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = 2;
    e[1] = 2;
    e[2] = 2;
    g.add_term(e, Fp{1, p});
  }
  g += lift(random_homogeneous<Fp>(n - 1, 5, rng, sampler), 1);
  g += lift(random_homogeneous<Fp>(n - 1, 6, rng, sampler), 0);
  inst.g.push_back(std::move(g));
  return inst;
}

bool regularity_sampling() {
  const std::uint64_t p = kDefaultPrime;  // 2^31 - 1
  const std::vector<FamilyDescriptor> families{make_desc(5, 1, {3}, 1, {3}),
                                               make_desc(4, 1, {2}, 1, {3})};
  CoefficientSampler<Fp> sampler;
  sampler.p = p;
  int total = 0;
  int passed = 0;
  for (std::size_t fam = 0; fam < families.size(); ++fam) {
    const auto& desc = families[fam];
    for (int cls = 0; cls <= 1; ++cls) {
      for (int i = 0; i < 20; ++i) {
        SplitMix64 rng(derive_seed(0xf00d + fam, static_cast<std::uint64_t>(cls),
                                   static_cast<std::uint64_t>(i)));
        const auto point = sample_point_fp(desc.ambient_vars(), p, rng);
        const auto inst = sample_instance<Fp>(desc, point, cls, rng.next(), sampler);
        const auto report = is_regular(taylor_frame(inst, std::span<const Fp>(point)));
        if (report.status == RegularityStatus::Undecided) return false;
        ++total;
        if (report.pass()) ++passed;
      }
    }
  }
  if (total < 80) return false;
  if (passed * 100 < total * 95) return false;  // >= 95% of trials

  // Planted-degenerate fixtures must all fail.
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    const auto inst = planted_instance(p, seed);
    std::vector<Fp> origin(static_cast<std::size_t>(7), Fp{0, p});
    origin[0] = Fp{1, p};
    const auto report = is_regular(taylor_frame(inst, std::span<const Fp>(origin)));
    if (report.status != RegularityStatus::Fail) return false;
  }

  // Groebner dimension vs exhaustive point counting on small fixtures.
  for (std::uint64_t q : {5ull, 7ull, 11ull}) {
    auto z3 = [&](int i) { return Polynomial<Fp>::variable(3, i, Fp{1, q}); };
    auto z2 = [&](int i) { return Polynomial<Fp>::variable(2, i, Fp{1, q}); };
    auto z4 = [&](int i) { return Polynomial<Fp>::variable(4, i, Fp{1, q}); };

    struct Fixture {
      std::vector<Polynomial<Fp>> polys;
      int nvars;
      int dim;                   // expected cone dimension
      long expected_points = -1; // exact projective count, when pinned
      long point_bound = -1;     // otherwise an upper bound
    };
    const std::vector<Fixture> fixtures{
        {{z3(0), z3(1)}, 3, 1, 1, -1},
        {{z2(0) * z2(1)}, 2, 1, 2, -1},
        {{z3(0) * z3(0) - z3(1) * z3(2), z3(1) * z3(1) - z3(0) * z3(2)}, 3, 1, -1, 4},
        {{z3(0) * z3(1), z3(0) * z3(2)}, 3, 2, static_cast<long>(q) + 2, -1},
        {{z3(0)}, 3, 2, static_cast<long>(q) + 1, -1},
        {{z3(0), z3(1), z3(2)}, 3, 0, 0, -1},
        {{z4(0) * z4(1) - z4(2) * z4(3)}, 4, 3, -1,
         static_cast<long>((q + 1) * (q + 1))},
    };
    for (const auto& fixture : fixtures) {
      const auto dim = gb::ideal_dimension(fixture.polys, fixture.nvars);
      if (dim.status != gb::GBStatus::Done || dim.dimension != fixture.dim) return false;
      const long pts = projective_point_count(fixture.polys, fixture.nvars, q);
      if (fixture.expected_points >= 0 && pts != fixture.expected_points) return false;
      if (fixture.point_bound >= 0 && pts > fixture.point_bound) return false;
      if (fixture.dim >= 2 && pts < static_cast<long>(q)) return false;  // at least linear growth
    }
  }
  return true;
}

bool determinism() {
  CertifyOptions opts;
  opts.samples = 1;
  opts.seed = 20260810;
  opts.lemma_suite.graphs_max_n = 5;
  opts.lemma_suite.counting_max = 20;
  opts.lemma_suite.degrees_max_m = 8;
  opts.lemma_suite.degree_sum_max_m = 10;
  const auto desc = make_desc(4, 1, {2}, 1, {3});
  const auto a = certificate_to_json(run_certify_descriptor(desc, opts)).dump(2);
  const auto b = certificate_to_json(run_certify_descriptor(desc, opts)).dump(2);
  return a == b && !a.empty();
}

struct Criterion {
  const char* name;
  bool (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"graph-lemmas-exhaustive-N8", &graph_lemmas_exhaustive},
      {"counting-bound-range-and-symbolic", &counting_bound_range},
      {"sqrt-calculus-random-trials", &sqrt_calculus_random_trials},
      {"gamma-coefficients", &gamma_coefficients},
      {"codimension-calculus", &codimension_calculus},
      {"bound-pipelines-M20", &bound_pipelines},
      {"regularity-sampling-and-fixtures", &regularity_sampling},
      {"certificate-determinism", &determinism},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  exception in %s: %s\n", criterion.name, e.what());
      ok = false;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("%s: %s (%lld ms)\n", ok ? "PASS" : "FAIL", criterion.name,
                static_cast<long long>(elapsed));
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
