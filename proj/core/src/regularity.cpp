#include "fanocert/regularity.hpp"

#include <algorithm>

namespace fanocert {

namespace {

std::uint64_t modulus_of(const std::vector<Polynomial<Fp>>& polys) {
  for (const auto& f : polys) {
    for (const auto& [e, c] : f.terms()) return c.p;
  }
  return 0;
}

// Row-reduce the coefficient matrix of the linear forms; on success returns
// the substitution images z_i -> (polynomial in the kernel parameters).
struct LinearElimination {
  bool dependent = false;
  int rank = 0;
  std::vector<Polynomial<Fp>> images;  // one per original variable
  int vars_left = 0;
};

LinearElimination eliminate_linear(const std::vector<Polynomial<Fp>>& linear, int nvars,
                                   std::uint64_t p) {
  LinearElimination out;
  std::vector<std::vector<Fp>> rows;
  for (const auto& f : linear) {
    std::vector<Fp> row(static_cast<std::size_t>(nvars), Fp{0, p});
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 1) row[i] = c;
      }
    }
    rows.push_back(std::move(row));
  }

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < nvars && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)].v == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Fp inv = fp_inv(rows[r][static_cast<std::size_t>(col)]);
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Fp factor = rows[i][static_cast<std::size_t>(col)];
      if (factor.v == 0) continue;
      for (int c2 = 0; c2 < nvars; ++c2) {
        rows[i][static_cast<std::size_t>(c2)] =
            rows[i][static_cast<std::size_t>(c2)] - factor * rows[r][static_cast<std::size_t>(c2)];
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  out.rank = static_cast<int>(r);
  if (out.rank < static_cast<int>(linear.size())) {
    out.dependent = true;
    return out;
  }

  std::vector<int> free_cols;
  for (int col = 0; col < nvars; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
      free_cols.push_back(col);
  }
  out.vars_left = static_cast<int>(free_cols.size());
  out.images.reserve(static_cast<std::size_t>(nvars));
  for (int col = 0; col < nvars; ++col) {
    Polynomial<Fp> img(out.vars_left);
    const auto pivot_it = std::find(pivot_col.begin(), pivot_col.end(), col);
    if (pivot_it == pivot_col.end()) {
      const auto idx = static_cast<int>(std::find(free_cols.begin(), free_cols.end(), col) -
                                        free_cols.begin());
      img = Polynomial<Fp>::variable(out.vars_left, idx, Fp{1, p});
    } else {
      const auto row_idx = static_cast<std::size_t>(pivot_it - pivot_col.begin());
      for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        const Fp c = rows[row_idx][static_cast<std::size_t>(free_cols[fi])];
        if (c.v == 0) continue;
        img += Polynomial<Fp>::variable(out.vars_left, static_cast<int>(fi), Fp{1, p}).scaled(-c);
      }
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

// Minimal univariate arithmetic over F_p for the plane probes.
struct UniPoly {
  std::vector<std::uint64_t> c;  // c[i] coefficient of u^i, trimmed

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

void uni_trim(UniPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b, std::uint64_t p) {
  const auto mul = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  const Fp lead{b.c.back(), p};
  const std::uint64_t lead_inv = fp_inv(lead).v;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const std::uint64_t q = mul(a.c.back(), lead_inv);
    const std::size_t shift = a.c.size() - b.c.size();
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      std::uint64_t& slot = a.c[i + shift];
      slot = (slot + p - mul(q, b.c[i])) % p;
    }
    uni_trim(a);
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b, std::uint64_t p) {
  uni_trim(a);
  uni_trim(b);
  while (!b.is_zero()) {
    UniPoly r = uni_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

SliceVerdict monte_carlo_slice(const std::vector<Polynomial<Fp>>& polys, std::size_t trials,
                               std::uint64_t seed, std::size_t* trials_used) {
  if (trials_used != nullptr) *trials_used = 0;
  if (trials == 0) return SliceVerdict::Undecided;
  if (polys.empty()) return SliceVerdict::NotRegular;  // nothing cuts anything
  const std::uint64_t p = modulus_of(polys);
  if (p == 0) return SliceVerdict::NotRegular;  // all forms identically zero
  const int n = polys.front().nvars();
  for (const auto& f : polys) {
    if (f.is_zero()) return SliceVerdict::NotRegular;
    if (!f.is_homogeneous()) throw std::invalid_argument("monte_carlo_slice: inputs must be homogeneous");
  }
  const int c = static_cast<int>(polys.size());
  const int r = std::max(0, n - c);  // slices down to expected cone dimension 0

  for (std::size_t trial = 0; trial < trials; ++trial) {
    if (trials_used != nullptr) *trials_used = trial + 1;
    SplitMix64 rng(derive_seed(seed, 0x51fce, trial));

    std::vector<Polynomial<Fp>> slices;
    for (int i = 0; i < r; ++i) {
      Polynomial<Fp> lin(n);
      for (int v = 0; v < n; ++v) {
        const Fp coeff{rng.below(p), p};
        if (coeff.v != 0) lin += Polynomial<Fp>::variable(n, v, Fp{1, p}).scaled(coeff);
      }
      if (lin.is_zero()) {
        lin = Polynomial<Fp>::variable(n, i % n, Fp{1, p});
      }
      slices.push_back(std::move(lin));
    }
    const LinearElimination elim = eliminate_linear(slices, n, p);
    if (elim.dependent) continue;  // degenerate sample, try again
    const int s = elim.vars_left;
    if (s == 0) continue;

    std::vector<Polynomial<Fp>> restricted;
    restricted.reserve(polys.size());
    bool all_zero = true;
    for (const auto& f : polys) {
      Polynomial<Fp> rf = f.substitute(elim.images);
      if (!rf.is_zero()) all_zero = false;
      restricted.push_back(std::move(rf));
    }
    if (all_zero) return SliceVerdict::NotRegular;  // the whole sliced subspace is a zero set

    // Point probes on random lines through the origin of the slice.
    for (int probe = 0; probe < 4; ++probe) {
      std::vector<Fp> y(static_cast<std::size_t>(s));
      bool nonzero = false;
      for (auto& yi : y) {
        yi = Fp{rng.below(p), p};
        nonzero = nonzero || yi.v != 0;
      }
      if (!nonzero) continue;
      bool vanish = true;
      for (const auto& rf : restricted) {
        if (!is_zero_coeff(rf.evaluate(y))) {
          vanish = false;
          break;
        }
      }
      if (vanish) return SliceVerdict::NotRegular;
    }

    if (s == 1) {
      // One parameter left: a nonzero common zero exists iff every
      // restriction is identically zero, handled above.
      continue;
    }

    // Plane probes: restrict to a random 2-plane and test the binary forms
    // for a common projective zero via a univariate gcd.
    const int plane_probes = (s == 2) ? 1 : 3;
    for (int probe = 0; probe < plane_probes; ++probe) {
      std::vector<Polynomial<Fp>> plane_images;
      if (s == 2) {
        plane_images.push_back(Polynomial<Fp>::variable(2, 0, Fp{1, p}));
        plane_images.push_back(Polynomial<Fp>::variable(2, 1, Fp{1, p}));
      } else {
        for (int v = 0; v < s; ++v) {
          Polynomial<Fp> img(2);
          img += Polynomial<Fp>::variable(2, 0, Fp{1, p}).scaled(Fp{rng.below(p), p});
          img += Polynomial<Fp>::variable(2, 1, Fp{1, p}).scaled(Fp{rng.below(p), p});
          plane_images.push_back(std::move(img));
        }
      }

      bool at_infinity = true;  // common zero at (1 : 0)?
      UniPoly gcd_acc;
      bool gcd_started = false;
      bool some_zero_form = false;
      for (const auto& rf : restricted) {
        Polynomial<Fp> bf = rf.substitute(plane_images);
        if (bf.is_zero()) {
          some_zero_form = true;
          continue;
        }
        const unsigned deg = bf.total_degree();
        UniPoly uni;
        uni.c.assign(deg + 1, 0);
        std::uint64_t lead_u = 0;
        for (const auto& [e, coeff] : bf.terms()) {
          uni.c[e[0]] = coeff.v;  // u^{e0} t^{deg-e0} evaluated at t = 1
          if (e[0] == deg) lead_u = coeff.v;
        }
        uni_trim(uni);
        if (lead_u != 0) at_infinity = false;
        if (!gcd_started) {
          gcd_acc = uni;
          gcd_started = true;
        } else {
          gcd_acc = uni_gcd(gcd_acc, uni, p);
        }
        if (gcd_started && gcd_acc.degree() < 1 && !at_infinity) break;
      }
      if (!gcd_started) {
        if (some_zero_form) return SliceVerdict::NotRegular;
        continue;
      }
      if (at_infinity) return SliceVerdict::NotRegular;  // (1:0) is a common zero
      if (gcd_acc.degree() >= 1) return SliceVerdict::NotRegular;
    }
  }
  return SliceVerdict::LikelyRegular;
}

RegularityReport check_regularity_set(const RegularitySet<Fp>& set, const RegularityOptions& opts) {
  RegularityReport report;
  report.class_e = set.e;
  report.expected_dimension = set.expected_dimension();

  std::vector<Polynomial<Fp>> linear;
  std::vector<Polynomial<Fp>> higher;
  std::uint64_t p = 0;
  for (const auto& form : set.forms) {
    for (const auto& [e, c] : form.poly.terms()) {
      p = c.p;
      break;
    }
  }
  report.prime = p;
  for (const auto& form : set.forms) {
    if (form.degree == 1) {
      linear.push_back(form.poly);
    } else {
      higher.push_back(form.poly);
    }
  }

  // Dependent (or vanishing) linear forms already blow the codimension.
  const LinearElimination elim = eliminate_linear(linear, set.nvars, p == 0 ? kDefaultPrime : p);
  if (elim.dependent || elim.rank < static_cast<int>(linear.size())) {
    report.method = RegularityMethod::Groebner;
    report.status = RegularityStatus::Fail;
    report.note = "linear forms are dependent";
    return report;
  }

  std::vector<Polynomial<Fp>> reduced;
  reduced.reserve(higher.size());
  bool zero_after_restriction = false;
  for (const auto& f : higher) {
    Polynomial<Fp> rf = f.substitute(elim.images);
    if (rf.is_zero()) zero_after_restriction = true;
    reduced.push_back(std::move(rf));
  }
  if (zero_after_restriction) {
    report.method = RegularityMethod::Groebner;
    report.status = RegularityStatus::Fail;
    report.note = "a form vanishes on the common zero set of the linear ones";
    return report;
  }

  if (elim.vars_left <= gb::kMaxVars) {
    const auto dim = gb::ideal_dimension(reduced, elim.vars_left, opts.groebner);
    if (dim.status == gb::GBStatus::Done) {
      report.method = RegularityMethod::Groebner;
      report.dimension = dim.dimension;
      report.status = (dim.dimension == report.expected_dimension) ? RegularityStatus::Pass
                                                                   : RegularityStatus::Fail;
      return report;
    }
  }

  // Groebner budget exceeded (or too many variables): slice fallback.
  report.method = RegularityMethod::MonteCarloSlice;
  std::size_t used = 0;
  const SliceVerdict verdict = monte_carlo_slice(reduced, opts.slice_trials, opts.slice_seed, &used);
  report.trials = used;
  switch (verdict) {
    case SliceVerdict::LikelyRegular:
      report.status = RegularityStatus::Pass;
      report.note = "probabilistic verdict (slice probes found no excess zeros)";
      break;
    case SliceVerdict::NotRegular:
      report.status = RegularityStatus::Fail;
      report.note = "slice probe found a nonzero common zero";
      break;
    case SliceVerdict::Undecided:
      report.status = RegularityStatus::Undecided;
      report.note = "no trials performed";
      break;
  }
  return report;
}

RegularityReport is_regular(const TaylorFrame<Fp>& frame, const RegularityOptions& opts) {
  const RegularitySet<Fp> set = build_regularity_set(frame);
  RegularityReport report = check_regularity_set(set, opts);
  report.point.reserve(frame.point.size());
  for (const auto& coord : frame.point) report.point.push_back(coeff_to_string(coord));
  return report;
}

}  // namespace fanocert
