#include "fanocert/family.hpp"

#include <numeric>

namespace fanocert {

ValidationResult validate_descriptor(const FamilyDescriptor& desc) {
  ValidationResult res;
  auto fail = [&res](std::string msg) { res.violations.push_back(std::move(msg)); };

  if (desc.M < 4) fail("M must be at least 4");
  if (desc.k < 1) fail("k must be at least 1 (the degenerate k = 0 double space is rejected)");
  if (2 * desc.k > desc.M - 1) fail("2k must not exceed M - 1");
  if (desc.m < 1) fail("m must be at least 1");
  if (static_cast<int>(desc.d.size()) != desc.k) fail("d must have exactly k entries");
  if (static_cast<int>(desc.l.size()) != desc.m) fail("l must have exactly m entries");
  for (std::size_t i = 0; i < desc.d.size(); ++i) {
    if (desc.d[i] < 2) fail("d_" + std::to_string(i + 1) + " must be at least 2");
  }
  for (std::size_t i = 0; i < desc.l.size(); ++i) {
    if (desc.l[i] < 2) fail("l_" + std::to_string(i + 1) + " must be at least 2");
  }
  if (static_cast<int>(desc.d.size()) == desc.k && static_cast<int>(desc.l.size()) == desc.m) {
    const long sum = std::accumulate(desc.d.begin(), desc.d.end(), 0L) +
                     std::accumulate(desc.l.begin(), desc.l.end(), 0L);
    if (sum != static_cast<long>(desc.M) + desc.k)
      fail("sum d_i + sum l_i must equal M + k");
  }
  res.ok = res.violations.empty();
  return res;
}

namespace {

// Non-increasing tuples with `parts` entries >= 2 summing to `total`.
void partitions_rec(int total, int parts, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = std::min(max_part, total - 2 * (parts - 1)); v >= 2; --v) {
    cur.push_back(v);
    partitions_rec(total - v, parts - 1, v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (total >= 2 * parts) partitions_rec(total, parts, total, cur, out);
  return out;
}

}  // namespace

std::vector<FamilyDescriptor> enumerate_descriptors(int M) {
  if (M < 4) throw std::invalid_argument("enumerate_descriptors: M must be at least 4");
  std::vector<FamilyDescriptor> out;
  for (int k = 1; 2 * k <= M - 1; ++k) {
    const int total = M + k;
    for (int sum_d = 2 * k; sum_d <= total - 2; ++sum_d) {
      const int sum_l = total - sum_d;
      for (const auto& d : partitions(sum_d, k)) {
        for (int m = 1; 2 * m <= sum_l; ++m) {
          for (const auto& l : partitions(sum_l, m)) {
            FamilyDescriptor desc;
            desc.M = M;
            desc.k = k;
            desc.d = d;
            desc.m = m;
            desc.l = l;
            out.push_back(std::move(desc));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FamilyDescriptor& a, const FamilyDescriptor& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.d != b.d) return a.d < b.d;
    if (a.m != b.m) return a.m < b.m;
    return a.l < b.l;
  });
  return out;
}

Integer degree_of_V(const FamilyDescriptor& desc) {
  Integer deg = 1;
  mpz_mul_2exp(deg.get_mpz_t(), deg.get_mpz_t(), static_cast<mp_bitcnt_t>(desc.m));
  for (int di : desc.d) deg *= di;
  return deg;
}

bool index_check(const FamilyDescriptor& desc) {
  const long sum = std::accumulate(desc.d.begin(), desc.d.end(), 0L) +
                   std::accumulate(desc.l.begin(), desc.l.end(), 0L);
  return -(static_cast<long>(desc.M) + desc.k + 1) + sum == -1;
}

std::string ProfileEntry::label() const {
  switch (kind) {
    case DivisorKind::F:
      return "f(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case DivisorKind::Branch:
      return "branch(" + std::to_string(i) + ")";
    case DivisorKind::G:
      return "g(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "?";
}

HypertangentProfile hypertangent_profile(const FamilyDescriptor& desc, int e) {
  const ValidationResult v = validate_descriptor(desc);
  if (!v.ok) throw std::invalid_argument("hypertangent_profile: invalid descriptor");
  if (e < 0 || e > desc.m)
    throw std::invalid_argument("hypertangent_profile: class must be in [0, m]");

  HypertangentProfile prof;
  prof.e = e;
  for (int i = 1; i <= desc.k; ++i) {
    for (int j = 1; j <= desc.d[static_cast<std::size_t>(i - 1)] - 1; ++j) {
      prof.entries.push_back({DivisorKind::F, i, j, j, j + 1});
    }
  }
  if (e == 0) {
    for (int i = 1; i <= desc.m; ++i) {
      const int li = desc.l[static_cast<std::size_t>(i - 1)];
      for (int j = li; j <= 2 * li - 1; ++j) {
        if (i == desc.m && j == 2 * li - 1) continue;  // missing divisor, class-0 collection
        prof.entries.push_back({DivisorKind::G, i, j, j, j + 1});
      }
    }
  } else {
    for (int i = 1; i <= e; ++i) prof.entries.push_back({DivisorKind::Branch, i, 0, 1, 2});
    for (int i = e + 1; i <= desc.m; ++i) {
      const int li = desc.l[static_cast<std::size_t>(i - 1)];
      for (int j = li; j <= 2 * li - 1; ++j) {
        prof.entries.push_back({DivisorKind::G, i, j, j, j + 1});
      }
    }
  }
  return prof;
}

Rational unit_over(const Rational& v) { return Rational(1) / v; }
Fp unit_over(const Fp& v) { return fp_inv(v); }

std::vector<Fp> sample_point_fp(int nvars, std::uint64_t p, SplitMix64& rng) {
  std::vector<Fp> pt;
  pt.reserve(static_cast<std::size_t>(nvars));
  pt.push_back(Fp{1, p});
  for (int i = 1; i < nvars; ++i) pt.push_back(Fp{rng.below(p), p});
  return pt;
}

std::vector<Rational> sample_point_rational(int nvars, long lo, long hi, SplitMix64& rng) {
  std::vector<Rational> pt;
  pt.reserve(static_cast<std::size_t>(nvars));
  pt.push_back(Rational(1));
  for (int i = 1; i < nvars; ++i) pt.push_back(Rational(rng.in_range(lo, hi)));
  return pt;
}

}  // namespace fanocert
