// Regularity of the polynomial set attached to a Taylor frame: build the
// set, decide regular-sequence-ness by cone dimension over F_p, and fall
// back to a Monte-Carlo slice probe when the Groebner run hits its budget.
#pragma once

#include <string>
#include <vector>

#include "fanocert/family.hpp"
#include "fanocert/groebner.hpp"
#include "fanocert/sqrt_series.hpp"

namespace fanocert {

template <class K>
struct LabeledForm {
  std::string label;
  int degree = 0;  // the degree this slot must carry (the form may be zero)
  Polynomial<K> poly{0};
};

// The regularity set of a frame: q_{i,j} for all i, j; for class 0 the
// h_{i,j} over l_i+1 <= j <= 2l_i minus the (m, 2l_m) slot; for class e >= 1
// the tangent forms w_{i,1} (i <= e) and the h_{i,j} of the branches off the
// point.  Size M+k-1 for class 0, sum d_i + e + sum_{i>e} l_i otherwise.
template <class K>
struct RegularitySet {
  int nvars = 0;
  int e = 0;
  std::vector<LabeledForm<K>> forms;

  int expected_codim() const { return static_cast<int>(forms.size()); }
  int expected_dimension() const { return nvars - expected_codim(); }
};

template <class K>
RegularitySet<K> build_regularity_set(const TaylorFrame<K>& frame) {
  RegularitySet<K> set;
  set.nvars = frame.desc.affine_vars();
  set.e = frame.e;

  for (int i = 1; i <= frame.desc.k; ++i) {
    const auto& dec = frame.q[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= frame.desc.d[static_cast<std::size_t>(i - 1)]; ++j) {
      set.forms.push_back({"q(" + std::to_string(i) + "," + std::to_string(j) + ")", j,
                           dec.components.at(static_cast<std::size_t>(j))});
    }
  }

  for (int t = 1; t <= frame.desc.m; ++t) {
    const auto& dec = frame.w[static_cast<std::size_t>(t - 1)];
    const int lt = frame.l[static_cast<std::size_t>(t - 1)];
    if (t <= frame.e) {
      set.forms.push_back({"w(" + std::to_string(t) + ",1)", 1, dec.components.at(1)});
      continue;
    }
    // Branch off the point: w_0 must have been normalized to 1.
    {
      const auto& c0 = dec.components.at(0);
      K value{};
      for (const auto& [mono, coeff] : c0.terms()) value = coeff;
      if (is_zero_coeff(value))
        throw std::invalid_argument("build_regularity_set: w_0 vanishes off L(p), class is inconsistent");
    }
    std::vector<Polynomial<K>> w1_to_2l(dec.components.begin() + 1, dec.components.end());
    const BranchSeries<K> series =
        BranchSeries<K>::from_components(lt, set.nvars, std::move(w1_to_2l));
    const std::vector<Polynomial<K>> h = hypertangent_range(series, lt + 1, 2 * lt);
    for (int j = lt + 1; j <= 2 * lt; ++j) {
      if (frame.e == 0 && t == frame.desc.m && j == 2 * lt) continue;  // excluded slot
      set.forms.push_back({"h(" + std::to_string(t) + "," + std::to_string(j) + ")", j,
                           h[static_cast<std::size_t>(j - lt - 1)]});
    }
  }

  const int size = set.expected_codim();
  if (frame.e == 0 && size != frame.desc.affine_vars() - 1)
    throw std::logic_error("build_regularity_set: class-0 set size must be M+k-1");
  return set;
}

enum class RegularityMethod { Groebner, MonteCarloSlice };
enum class RegularityStatus { Pass, Fail, Undecided };
enum class SliceVerdict { LikelyRegular, NotRegular, Undecided };

struct RegularityReport {
  std::vector<std::string> point;
  int class_e = 0;
  RegularityMethod method = RegularityMethod::Groebner;
  std::uint64_t prime = 0;
  int dimension = -2;  // computed cone dimension when the Groebner route decided
  int expected_dimension = 0;
  RegularityStatus status = RegularityStatus::Undecided;
  std::size_t trials = 0;
  std::string note;

  bool pass() const { return status == RegularityStatus::Pass; }
};

struct RegularityOptions {
  gb::GroebnerOptions groebner;
  std::size_t slice_trials = 32;
  std::uint64_t slice_seed = 0x5eed;
};

// Random-slice probe for systems too big for the Groebner budget: cut by
// random linear forms down to expected cone dimension zero and look for
// nonzero common zeros on random lines and planes of the sliced subspace.
SliceVerdict monte_carlo_slice(const std::vector<Polynomial<Fp>>& polys, std::size_t trials,
                               std::uint64_t seed, std::size_t* trials_used = nullptr);

// Dimension check for an already-built set (synthetic sets welcome).
RegularityReport check_regularity_set(const RegularitySet<Fp>& set,
                                      const RegularityOptions& opts = {});

// Pass iff the regularity set of the frame cuts a cone of exactly the
// expected dimension.
RegularityReport is_regular(const TaylorFrame<Fp>& frame, const RegularityOptions& opts = {});

}  // namespace fanocert
