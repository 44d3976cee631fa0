#include "fanocert/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fanocert {

RatioProfile ratio_profile(const HypertangentProfile& profile, int e) {
  RatioProfile out;
  out.e = e;
  out.ratios.reserve(profile.entries.size());
  for (const auto& entry : profile.entries) {
    out.ratios.push_back(make_rational(entry.multiplicity, entry.degree));
  }
  return out;
}

SubsetProductDetail subset_product_detail(const RatioProfile& profile) {
  const int n = static_cast<int>(profile.ratios.size());
  if (profile.e < 0 || profile.e > n)
    throw std::invalid_argument("subset_product_bound: e must be in [0, ratio count]");
  std::vector<Rational> sorted = profile.ratios;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Rational& a, const Rational& b) { return a < b; });
  SubsetProductDetail out;
  out.kept_product = Rational(1);
  out.removed_product = Rational(1);
  for (int i = 0; i < n; ++i) {
    if (i < n - profile.e) {
      out.kept_product *= sorted[static_cast<std::size_t>(i)];
    } else {
      out.removed_product *= sorted[static_cast<std::size_t>(i)];
    }
  }
  out.bound = Rational(1) / out.kept_product;
  return out;
}

Rational subset_product_bound(const RatioProfile& profile) {
  return subset_product_detail(profile).bound;
}

namespace {

// a = 2 when some d_i >= 3, otherwise the smallest half-degree.
int next_factor_parameter(const FamilyDescriptor& desc) {
  const int dmax = *std::max_element(desc.d.begin(), desc.d.end());
  if (dmax >= 3) return 2;
  return *std::min_element(desc.l.begin(), desc.l.end());
}

Rational deg_v_rational(const FamilyDescriptor& desc) {
  return Rational(degree_of_V(desc));
}

Integer pow2(int e) {
  Integer out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return out;
}

}  // namespace

Rational class0_lambda(const FamilyDescriptor& desc) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("class0_lambda: invalid descriptor");
  const int lm = desc.l.back();
  const int a = next_factor_parameter(desc);

  Rational closed = Rational(pow2(desc.k)) / deg_v_rational(desc);
  closed *= make_rational(2 * lm, 2 * lm - 1);
  closed *= make_rational(a + 1, a);

  const auto detail = subset_product_detail(ratio_profile(hypertangent_profile(desc, 0), desc.k + 1));
  if (detail.bound != closed)
    throw std::logic_error("class0_lambda: closed form and subset-product pipeline disagree");
  // The removed factors are exactly the k tangent-hyperplane twos and the
  // next factor (a+1)/a.
  const Rational removed_expected = Rational(pow2(desc.k)) * make_rational(a + 1, a);
  if (detail.removed_product != removed_expected)
    throw std::logic_error("class0_lambda: removed-factor identity violated");
  return closed;
}

Rational class0_final_bound(const FamilyDescriptor& desc) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("class0_final_bound: invalid descriptor");
  const int lm = desc.l.back();
  const Rational threshold = Rational(4) / deg_v_rational(desc);
  Rational bound = threshold * make_rational(3 * lm, 4 * lm - 2);
  // 2^{1-k} * class0_lambda sharpens this whenever a > 2; the reported value
  // keeps the weaker a >= 2 form, so it must dominate the sharp one.
  const Rational sharp = class0_lambda(desc) * make_rational(2, 1) / Rational(pow2(desc.k));
  if (bound < sharp) throw std::logic_error("class0_final_bound: weakened bound below the sharp one");
  if (bound > threshold) throw std::logic_error("class0_final_bound: bound exceeds 4/deg V");
  return bound;
}

Rational classE_lambda(const FamilyDescriptor& desc, int e) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("classE_lambda: invalid descriptor");
  if (e < 1 || e > desc.m) throw std::invalid_argument("classE_lambda: e must be in [1, m]");

  Rational closed(1);
  for (int di : desc.d) closed /= di;
  closed /= Rational(pow2(e));
  closed /= Rational(pow2(desc.m - e));
  closed *= 4;

  const auto detail = subset_product_detail(ratio_profile(hypertangent_profile(desc, e), 2));
  if (detail.bound != closed)
    throw std::logic_error("classE_lambda: closed form and subset-product pipeline disagree");
  if (closed != Rational(4) / deg_v_rational(desc))
    throw std::logic_error("classE_lambda: cancellation to 4/deg V failed");
  return closed;
}

bool check_degree_identity(long n, const FamilyDescriptor& desc,
                           std::span<const CycleComponent> components) {
  if (n < 1) throw std::invalid_argument("check_degree_identity: n must be >= 1");
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("check_degree_identity: invalid descriptor");
  Integer total = 0;
  const Integer n2 = Integer(n) * n;
  for (const auto& comp : components) {
    if (comp.m < 1 || comp.a < 1)
      throw std::invalid_argument("check_degree_identity: classes and coefficients must be >= 1");
    total += Integer(comp.a) * comp.m;
  }
  if (total > n2) return false;  // decomposition cannot come from deg Z = n^2 deg V
  for (const auto& comp : components) {
    if (Integer(comp.a) * comp.m > n2) return false;  // a_Y <= n^2 / m_Y
  }
  return true;
}

long codim_lower_bound(const CodimProblem& problem) {
  if (problem.l < 0 || problem.l > problem.N - 1)
    throw std::invalid_argument("codim_lower_bound: need 0 <= l <= N-1");
  if (static_cast<int>(problem.m.size()) != problem.l + 1)
    throw std::invalid_argument("codim_lower_bound: need l+1 degrees");
  for (int mi : problem.m) {
    if (mi < 2) throw std::invalid_argument("codim_lower_bound: degrees must be >= 2");
  }
  std::vector<int> sorted = problem.m;
  std::sort(sorted.begin(), sorted.end());
  long best = 0;
  bool first = true;
  long prefix = 0;
  for (int j = 0; j <= problem.l; ++j) {
    prefix += sorted[static_cast<std::size_t>(j)];  // mu_{j+1}
    const long value = (prefix - j) * (problem.N - j) + 1;
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  return best;
}

long codim_corollary(const CodimProblem& problem) {
  if (problem.l < 0 || problem.l > problem.N - 1)
    throw std::invalid_argument("codim_corollary: need 0 <= l <= N-1");
  if (static_cast<int>(problem.m.size()) != problem.l + 1)
    throw std::invalid_argument("codim_corollary: need l+1 degrees");
  const long m = *std::min_element(problem.m.begin(), problem.m.end());
  const long first_branch = m * problem.N + 1;
  if (problem.l <= problem.N - 2) return first_branch;
  const long mu_top = std::accumulate(problem.m.begin(), problem.m.end(), 0L);
  return std::min(first_branch, mu_top - problem.l + 1);
}

namespace {

long sum_d_pairs(const FamilyDescriptor& desc) {
  long s = 0;
  for (long di : desc.d) s += di * (di - 1);
  return s;
}

}  // namespace

Rational class1_minimal_branch_codim(const FamilyDescriptor& desc) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("class1_minimal_branch_codim: invalid descriptor");
  if (std::find(desc.l.begin(), desc.l.end(), 2) == desc.l.end())
    throw std::invalid_argument("class1_minimal_branch_codim: requires a branch of half-degree 2");
  long sum = sum_d_pairs(desc);
  bool skipped = false;
  for (long li : desc.l) {
    if (!skipped && li == 2) {
      skipped = true;  // the branch through the point
      continue;
    }
    sum += li * (3 * li - 1);
  }
  return make_rational(sum, 2) + 2;
}

Rational class0_codim_bound(const FamilyDescriptor& desc, int special_branch) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("class0_codim_bound: invalid descriptor");
  if (special_branch < 0) special_branch = desc.m - 1;
  if (special_branch >= desc.m)
    throw std::invalid_argument("class0_codim_bound: special branch out of range");
  long sum = sum_d_pairs(desc);
  for (int i = 0; i < desc.m; ++i) {
    const long li = desc.l[static_cast<std::size_t>(i)];
    sum += (i == special_branch) ? li * (3 * li - 5) : li * (3 * li - 1);
  }
  return make_rational(sum, 2) + 2;
}

bool degree_tuple_inequality(TupleInequality part, std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("degree_tuple_inequality: empty tuple");
  long total = 0;
  for (int si : s) {
    if (si < 2) throw std::invalid_argument("degree_tuple_inequality: entries must be >= 2");
    total += si;
  }
  if (part == TupleInequality::FiveTimesSum) {
    long lhs = 0;
    for (long si : s) lhs += si * (3 * si - 1);
    return lhs >= 5 * total;
  }
  long lhs = 0;
  for (long si : s) lhs += si * (si - 1);
  const long c = static_cast<long>(s.size());
  // A(A/c - 1) compared exactly: c*lhs >= A(A - c).
  return c * lhs >= total * (total - c);
}

bool degree_sum_inequality_check(int M, int k) {
  if (k < 1 || 2 * k > M - 1)
    throw std::invalid_argument("degree_sum_inequality_check: need 1 <= k <= (M-1)/2");
  const long lo = 2L * k;
  const long hi = static_cast<long>(M) + k - 2;
  if (lo > hi) throw std::invalid_argument("degree_sum_inequality_check: empty range for A");

  // The inequality is compared fraction-free: k * lhs >= 2Mk.
  long quad_min = 0;
  long quad_argmin = lo;
  for (long A = lo; A <= hi; ++A) {
    const long B = hi - A;
    const long k_lhs = A * (A - k) + k * (5 * B + 4);
    if (k_lhs < 2L * M * k) return false;
    const long k_quad = A * (A - 6 * k);
    if (A == lo || k_quad < quad_min) {
      quad_min = k_quad;
      quad_argmin = A;
    }
  }
  const long expected = (3L * k <= hi) ? 3L * k : hi;
  return quad_argmin == expected;
}

}  // namespace fanocert
