// Iterated-double-cover families: descriptor numerology, admissibility,
// enumeration, point-first random instances, Taylor frames at a point, and
// hypertangent divisor profiles.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fanocert/polynomial.hpp"
#include "fanocert/rng.hpp"

namespace fanocert {

// The numerology (M, k, d_*, m, l_*) of one family: M-dimensional V cut out
// by k forms of degrees d_i and m branch forms of degrees 2 l_i.
struct FamilyDescriptor {
  int M = 0;
  int k = 0;
  std::vector<int> d;
  int m = 0;
  std::vector<int> l;

  int ambient_vars() const { return M + k + 1; }  // homogeneous coordinates
  int affine_vars() const { return M + k; }

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

struct ValidationResult {
  bool ok = false;
  std::vector<std::string> violations;
};

ValidationResult validate_descriptor(const FamilyDescriptor& desc);

// All admissible descriptors for a fixed M, with d and l in non-increasing
// canonical order, duplicate-free, deterministically ordered.
std::vector<FamilyDescriptor> enumerate_descriptors(int M);

// deg V = 2^m d_1 ... d_k.
Integer degree_of_V(const FamilyDescriptor& desc);

// -(M+k+1) + sum d_i + sum l_i == -1 (index 1); equivalent to the degree sum
// constraint for valid descriptors.
bool index_check(const FamilyDescriptor& desc);

enum class DivisorKind { F, Branch, G };

struct ProfileEntry {
  DivisorKind kind;
  int i = 0;  // 1-based family index
  int j = 0;  // inner index for f/g entries
  int degree = 0;
  int multiplicity = 0;

  std::string label() const;
};

// The (degree a_i, multiplicity bound mu_i) list feeding the subset-product
// multiplicity bounds at a point of class e.
struct HypertangentProfile {
  int e = 0;
  std::vector<ProfileEntry> entries;
};

HypertangentProfile hypertangent_profile(const FamilyDescriptor& desc, int e);

// One sampled member (f_*; g_*) of a family.
template <class K>
struct FamilyInstance {
  FamilyDescriptor desc;
  std::vector<Polynomial<K>> f;
  std::vector<Polynomial<K>> g;
};

struct PointClass {
  int e = 0;
  std::vector<int> members;  // sorted 1-based branch labels with g_i(p) = 0
};

// Class of a point p on Q: which branch divisors pass through it.
template <class K>
PointClass classify_point(const FamilyInstance<K>& inst, std::span<const K> point) {
  for (std::size_t i = 0; i < inst.f.size(); ++i) {
    if (!is_zero_coeff(inst.f[i].evaluate(point)))
      throw std::invalid_argument("classify_point: point does not lie on Q");
  }
  PointClass out;
  for (std::size_t i = 0; i < inst.g.size(); ++i) {
    if (is_zero_coeff(inst.g[i].evaluate(point))) out.members.push_back(static_cast<int>(i) + 1);
  }
  out.e = static_cast<int>(out.members.size());
  return out;
}

// Taylor components of (f_*, g_*) at a point p in the affine chart p_0 = 1.
// Branches are relabeled so the e vanishing ones come first; `l` carries the
// half-degrees in the relabeled order and `branch_order` maps frame slots
// back to the instance's original labels.
template <class K>
struct TaylorFrame {
  FamilyDescriptor desc;
  std::vector<K> point;
  int e = 0;
  std::vector<int> members;       // original labels of the vanishing branches
  std::vector<int> branch_order;  // slot t (0-based) -> original branch label (1-based)
  std::vector<int> l;             // permuted half-degrees
  std::vector<HomogeneousDecomposition<K>> q;  // per f_i, components 0..d_i
  std::vector<HomogeneousDecomposition<K>> w;  // per branch slot, components 0..2l
};

Rational unit_over(const Rational& v);
Fp unit_over(const Fp& v);

template <class K>
TaylorFrame<K> taylor_frame(const FamilyInstance<K>& inst, std::span<const K> point) {
  const PointClass cls = classify_point(inst, point);
  TaylorFrame<K> frame;
  frame.desc = inst.desc;
  frame.point.assign(point.begin(), point.end());
  frame.e = cls.e;
  frame.members = cls.members;

  for (int t = 0; t < inst.desc.m; ++t) frame.branch_order.push_back(0);
  {
    std::vector<int> rest;
    for (int i = 1; i <= inst.desc.m; ++i) {
      if (!std::binary_search(cls.members.begin(), cls.members.end(), i)) rest.push_back(i);
    }
    std::size_t t = 0;
    for (int i : cls.members) frame.branch_order[t++] = i;
    for (int i : rest) frame.branch_order[t++] = i;
  }
  for (int i : frame.branch_order)
    frame.l.push_back(inst.desc.l[static_cast<std::size_t>(i - 1)]);

  for (int i = 0; i < inst.desc.k; ++i) {
    auto dec = dehomogenize_at_point(inst.f[static_cast<std::size_t>(i)], point);
    if (!dec.components.at(0).is_zero())
      throw std::invalid_argument("taylor_frame: f_i does not vanish at the point");
    frame.q.push_back(std::move(dec));
  }

  for (int t = 0; t < inst.desc.m; ++t) {
    const int orig = frame.branch_order[static_cast<std::size_t>(t)];
    auto dec = dehomogenize_at_point(inst.g[static_cast<std::size_t>(orig - 1)], point);
    if (t >= frame.e) {
      // w_0 = 1 normalization for branches not through the point.
      const auto& c0 = dec.components.at(0);
      K value{};
      for (const auto& [mono, coeff] : c0.terms()) value = coeff;
      if (is_zero_coeff(value))
        throw std::invalid_argument("taylor_frame: inconsistent class, w_0 vanishes off L(p)");
      const K inv = unit_over(value);
      for (auto& comp : dec.components) comp = comp.scaled(inv);
    }
    frame.w.push_back(std::move(dec));
  }
  return frame;
}

struct SampleOptions {
  int max_retries = 64;
  RandomPolyOptions poly;
};

// Point-first sampling: every f_i is forced through p, g_i vanishes at p
// exactly for a seed-chosen e-element subset of branches.  Deterministic in
// (seed, descriptor, point, target class).
template <class K>
FamilyInstance<K> sample_instance(const FamilyDescriptor& desc, std::span<const K> point,
                                  int target_class, std::uint64_t seed,
                                  const CoefficientSampler<K>& sampler,
                                  const SampleOptions& opts = {}) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("sample_instance: invalid descriptor");
  if (target_class < 0 || target_class > desc.m)
    throw std::invalid_argument("sample_instance: class must be in [0, m]");
  if (static_cast<int>(point.size()) != desc.ambient_vars())
    throw std::invalid_argument("sample_instance: point length mismatch");

  SplitMix64 rng(seed);
  // Seed-chosen e-subset of {1..m}: a partial Fisher-Yates draw.
  std::vector<int> labels(static_cast<std::size_t>(desc.m));
  for (int i = 0; i < desc.m; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < target_class; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(desc.m - i)));
    std::swap(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  }
  std::vector<bool> vanishing(static_cast<std::size_t>(desc.m) + 1, false);
  for (int i = 0; i < target_class; ++i) vanishing[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] = true;

  FamilyInstance<K> inst;
  inst.desc = desc;
  const int n = desc.ambient_vars();

  for (int i = 0; i < desc.k; ++i) {
    const unsigned deg = static_cast<unsigned>(desc.d[static_cast<std::size_t>(i)]);
    Polynomial<K> f(n);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= opts.max_retries)
        throw std::runtime_error("sample_instance: could not sample nonzero f_i");
      f = force_vanish_at<K>(random_homogeneous<K>(n, deg, rng, sampler), point);
      if (!f.is_zero()) break;
    }
    inst.f.push_back(std::move(f));
  }

  for (int i = 1; i <= desc.m; ++i) {
    const unsigned deg = 2 * static_cast<unsigned>(desc.l[static_cast<std::size_t>(i - 1)]);
    Polynomial<K> g(n);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= opts.max_retries)
        throw std::runtime_error("sample_instance: could not satisfy the class constraint on g_i");
      g = random_homogeneous<K>(n, deg, rng, sampler);
      if (vanishing[static_cast<std::size_t>(i)]) {
        g = force_vanish_at<K>(g, point);
        if (!g.is_zero()) break;
      } else if (!is_zero_coeff(g.evaluate(point))) {
        break;
      }
    }
    inst.g.push_back(std::move(g));
  }
  return inst;
}

// Random point in the affine chart p_0 = 1.
std::vector<Fp> sample_point_fp(int nvars, std::uint64_t p, SplitMix64& rng);
std::vector<Rational> sample_point_rational(int nvars, long lo, long hi, SplitMix64& rng);

}  // namespace fanocert
