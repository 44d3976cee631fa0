// The numeric bound calculi: subset-product multiplicity estimates, the
// class-0 / class-e pipelines with the 4/deg V threshold, codimension lower
// bounds for irregular polynomial tuples, and the degree-vector case
// analyses.  All arithmetic exact; no tolerances anywhere.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fanocert/family.hpp"
#include "fanocert/rational.hpp"

namespace fanocert {

// mu_i / a_i ratios of a hypertangent profile together with the codimension
// parameter e of the subvariety being bounded.
struct RatioProfile {
  int e = 0;
  std::vector<Rational> ratios;
};

RatioProfile ratio_profile(const HypertangentProfile& profile, int e);

struct SubsetProductDetail {
  Rational kept_product;     // product of the N-e smallest ratios
  Rational removed_product;  // product of the e largest ratios
  Rational bound;            // 1 / kept_product
};

// Upper bound for lambda_e: the reciprocal of the minimal product over
// (N-e)-subsets of the ratios, i.e. of the N-e smallest ones.
SubsetProductDetail subset_product_detail(const RatioProfile& profile);
Rational subset_product_bound(const RatioProfile& profile);

// Bound on lambda_{k+1} at a class-0 point: 2^k/deg V * 2l_m/(2l_m-1) * (a+1)/a
// with a = 2 when max d_i >= 3 and a = min l_i otherwise.  Computed both in
// closed form and through the generic subset product; a mismatch is a hard
// error.
Rational class0_lambda(const FamilyDescriptor& desc);

// (4/deg V) * 3l_m/(4l_m-2), the class-0 bound after the 2^{1-k} correct-
// subvariety factor and the a >= 2 weakening; always <= 4/deg V.
Rational class0_final_bound(const FamilyDescriptor& desc);

// Bound on lambda_2 at a class-e point; cancels to exactly 4/deg V.
Rational classE_lambda(const FamilyDescriptor& desc, int e);

// One codimension-2 component class: multiplicity class m_Y and coefficient a_Y.
struct CycleComponent {
  long m = 1;
  long a = 1;
};

// Degree bookkeeping for D_1 . D_2 = sum a_Y Y: every coefficient must obey
// a_Y <= n^2 / m_Y, so mult_Y <= n.
bool check_degree_identity(long n, const FamilyDescriptor& desc,
                           std::span<const CycleComponent> components);

// (l+1) homogeneous forms of degrees m_1..m_{l+1} >= 2 on P^N.
struct CodimProblem {
  int N = 0;
  int l = 0;
  std::vector<int> m;  // size l + 1
};

// min over j in {0..l} of (mu_{j+1} - j)(N - j) + 1 with mu_j the smallest
// j-subset degree sum.
long codim_lower_bound(const CodimProblem& problem);

// The two-branch weakening: mN+1 for l <= N-2, min{mN+1, mu_{l+1}-l+1} for
// l = N-1.
long codim_corollary(const CodimProblem& problem);

// 1/2 [sum d_i(d_i-1) + sum_{i != b} l_i(3l_i-1)] + 2 where b is a branch of
// half-degree 2 (the case that exists only when some l_i = 2); >= M.
Rational class1_minimal_branch_codim(const FamilyDescriptor& desc);

// 1/2 [sum d_i(d_i-1) + sum_{i != s} l_i(3l_i-1) + l_s(3l_s-5)] + 2 with s the
// distinguished branch (by default the last); >= M+1.
Rational class0_codim_bound(const FamilyDescriptor& desc, int special_branch = -1);

enum class TupleInequality { FiveTimesSum, MeanSquare };

// FiveTimesSum: sum s_i(3s_i - 1) >= 5 sum s_i.  MeanSquare: sum s_i(s_i - 1)
// >= A(A/c - 1) with A = sum s_i and c the tuple length.  Entries must be >= 2.
bool degree_tuple_inequality(TupleInequality part, std::span<const int> s);

// The degree-sum inequality A(A/k - 1) + 5B + 4 >= 2M with B = M+k-2-A over
// every integer A in [2k, M+k-2]; also checks that the underlying quadratic
// A(A/k - 6) attains its integer minimum at A = 3k or at the right endpoint.
bool degree_sum_inequality_check(int M, int k);

}  // namespace fanocert
