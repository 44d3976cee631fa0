#include "fanocert/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fanocert::gb {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline unsigned mono_exp(Mono m, int var) { return (m >> (8 * var)) & 0xffu; }

}  // namespace

unsigned mono_degree(Mono m) {
  unsigned d = 0;
  while (m != 0) {
    d += static_cast<unsigned>(m & 0xffu);
    m >>= 8;
  }
  return d;
}

bool mono_divides(Mono a, Mono b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (mono_exp(a, i) > mono_exp(b, i)) return false;
  }
  return true;
}

Mono mono_mul(Mono a, Mono b) {
  Mono out = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned e = mono_exp(a, i) + mono_exp(b, i);
    if (e > 127) throw std::overflow_error("gb: monomial exponent overflow");
    out |= static_cast<Mono>(e) << (8 * i);
  }
  return out;
}

Mono mono_div(Mono b, Mono a) {
  Mono out = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned eb = mono_exp(b, i);
    const unsigned ea = mono_exp(a, i);
    if (ea > eb) throw std::domain_error("gb: monomial division underflow");
    out |= static_cast<Mono>(eb - ea) << (8 * i);
  }
  return out;
}

Mono mono_lcm(Mono a, Mono b) {
  Mono out = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    out |= static_cast<Mono>(std::max(mono_exp(a, i), mono_exp(b, i))) << (8 * i);
  }
  return out;
}

bool mono_grevlex_greater(Mono a, Mono b, int nvars) {
  const unsigned da = mono_degree(a);
  const unsigned db = mono_degree(b);
  if (da != db) return da > db;
  for (int i = nvars - 1; i >= 0; --i) {
    const unsigned ea = mono_exp(a, i);
    const unsigned eb = mono_exp(b, i);
    if (ea != eb) return ea < eb;
  }
  return false;
}

GBPoly from_polynomial(const Polynomial<Fp>& f, const Context& ctx) {
  if (f.nvars() != ctx.nvars) throw std::invalid_argument("gb: nvars mismatch");
  if (ctx.nvars > kMaxVars) throw std::invalid_argument("gb: more than 8 variables");
  GBPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (c.p != ctx.p) throw std::invalid_argument("gb: modulus mismatch");
    Mono m = 0;
    for (int i = 0; i < ctx.nvars; ++i) {
      const auto exp = e[static_cast<std::size_t>(i)];
      if (exp > 127) throw std::overflow_error("gb: exponent too large to pack");
      m |= static_cast<Mono>(exp) << (8 * i);
    }
    out.terms.push_back({m, c.v});
  }
  // Polynomial iterates in descending grevlex already; keep the invariant
  // explicit in case the source ordering ever changes.
  std::sort(out.terms.begin(), out.terms.end(), [&](const Term& x, const Term& y) {
    return mono_grevlex_greater(x.mono, y.mono, ctx.nvars);
  });
  return out;
}

namespace {

struct MonoGreater {
  int nvars;
  bool operator()(Mono a, Mono b) const { return mono_grevlex_greater(a, b, nvars); }
};

}  // namespace

// Full normal form; the accumulator map keeps the pending terms sorted so the
// maximal one is always at begin().
GBPoly normal_form(const GBPoly& f, const std::vector<GBPoly>& basis, const Context& ctx) {
  std::map<Mono, std::uint64_t, MonoGreater> work{MonoGreater{ctx.nvars}};
  for (const auto& t : f.terms) work.emplace(t.mono, t.c);
  GBPoly out;
  while (!work.empty()) {
    const auto [mono, c] = *work.begin();
    work.erase(work.begin());
    if (c == 0) continue;
    const GBPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && mono_divides(g.leading().mono, mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      out.terms.push_back({mono, c});
      continue;
    }
    const Mono factor = mono_div(mono, reducer->leading().mono);
    const std::uint64_t scale = mulmod(c, invmod(reducer->leading().c, ctx.p), ctx.p);
    auto it = reducer->terms.begin();
    ++it;  // leading term cancels exactly
    for (; it != reducer->terms.end(); ++it) {
      const Mono m2 = mono_mul(it->mono, factor);
      const std::uint64_t sub = mulmod(scale, it->c, ctx.p);
      auto [slot, inserted] = work.emplace(m2, ctx.p - sub);
      if (!inserted) {
        slot->second = (slot->second + ctx.p - sub) % ctx.p;
        if (slot->second == 0) work.erase(slot);
      }
    }
  }
  return out;
}

GBPoly s_polynomial(const GBPoly& f, const GBPoly& g, const Context& ctx) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  const Mono lcm = mono_lcm(f.leading().mono, g.leading().mono);
  const Mono uf = mono_div(lcm, f.leading().mono);
  const Mono ug = mono_div(lcm, g.leading().mono);
  const std::uint64_t cf = invmod(f.leading().c, ctx.p);
  const std::uint64_t cg = invmod(g.leading().c, ctx.p);
  std::map<Mono, std::uint64_t, MonoGreater> acc{MonoGreater{ctx.nvars}};
  auto absorb = [&](const GBPoly& h, Mono u, std::uint64_t scale, bool negate) {
    for (const auto& t : h.terms) {
      const Mono m = mono_mul(t.mono, u);
      std::uint64_t v = mulmod(t.c, scale, ctx.p);
      if (negate) v = (ctx.p - v) % ctx.p;
      auto [slot, inserted] = acc.emplace(m, v);
      if (!inserted) {
        slot->second = (slot->second + v) % ctx.p;
        if (slot->second == 0) acc.erase(slot);
      }
    }
  };
  absorb(f, uf, cf, false);
  absorb(g, ug, cg, true);
  GBPoly s;
  for (const auto& [m, v] : acc) s.terms.push_back({m, v});
  return s;
}

namespace {

struct PairKey {
  unsigned lcm_deg;
  Mono lcm;
  std::uint32_t i, j;
};

struct PairLess {
  int nvars;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (a.lcm != b.lcm) return mono_grevlex_greater(b.lcm, a.lcm, nvars);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerResult buchberger(std::vector<GBPoly> gens, const Context& ctx,
                          const GroebnerOptions& opts) {
  GroebnerResult res;
  std::vector<GBPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    GBPoly r = normal_form(g, basis, ctx);
    if (!r.is_zero()) basis.push_back(std::move(r));
  }

  std::set<PairKey, PairLess> pending{PairLess{ctx.nvars}};
  auto enqueue_with_all = [&](std::uint32_t j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      const Mono lcm = mono_lcm(basis[i].leading().mono, basis[j].leading().mono);
      pending.insert({mono_degree(lcm), lcm, i, j});
      ++res.pairs_enqueued;
    }
  };
  for (std::uint32_t j = 0; j < basis.size(); ++j) enqueue_with_all(j);

  try {
    while (!pending.empty()) {
      if (res.pairs_enqueued > opts.pair_cap) {
        res.status = GBStatus::Undecided;
        return res;
      }
      const PairKey key = *pending.begin();
      pending.erase(pending.begin());
      const GBPoly& fi = basis[key.i];
      const GBPoly& fj = basis[key.j];
      const Mono li = fi.leading().mono;
      const Mono lj = fj.leading().mono;

      // Product criterion: disjoint leading supports reduce to zero.
      if (key.lcm == mono_mul(li, lj)) continue;

      // Chain criterion: some k with LT_k | lcm and both side pairs dealt with.
      bool skip = false;
      for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == key.i || k == key.j) continue;
        if (!mono_divides(basis[k].leading().mono, key.lcm)) continue;
        const auto side = [&](std::uint32_t a, std::uint32_t b) {
          const auto lo = std::min(a, b);
          const auto hi = std::max(a, b);
          const Mono l = mono_lcm(basis[lo].leading().mono, basis[hi].leading().mono);
          return pending.count({mono_degree(l), l, lo, hi}) > 0;
        };
        if (!side(key.i, k) && !side(key.j, k)) skip = true;
      }
      if (skip) continue;

      GBPoly r = normal_form(s_polynomial(fi, fj, ctx), basis, ctx);
      if (r.is_zero()) continue;
      basis.push_back(std::move(r));
      enqueue_with_all(static_cast<std::uint32_t>(basis.size()) - 1);
    }
  } catch (const std::overflow_error&) {
    res.status = GBStatus::Undecided;
    return res;
  }

  // Minimalize, then reduce tails for a unique reduced basis.
  std::vector<GBPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono li = basis[i].leading().mono;
      const Mono lj = basis[j].leading().mono;
      if (mono_divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<GBPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GBPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    GBPoly r = normal_form(minimal[i], others, ctx);
    if (!r.is_zero()) {
      const std::uint64_t inv = invmod(r.leading().c, ctx.p);
      for (auto& t : r.terms) t.c = mulmod(t.c, inv, ctx.p);
      reduced.push_back(std::move(r));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const GBPoly& a, const GBPoly& b) {
    return mono_grevlex_greater(a.leading().mono, b.leading().mono, ctx.nvars);
  });

  res.status = GBStatus::Done;
  res.basis = std::move(reduced);
  return res;
}

int staircase_dimension(const std::vector<Mono>& leading, int nvars) {
  for (const Mono m : leading) {
    if (mono_degree(m) == 0) return -1;  // unit ideal
  }
  int best = -1;
  const unsigned limit = 1u << nvars;
  for (unsigned mask = 0; mask < limit; ++mask) {
    bool independent = true;
    for (const Mono m : leading) {
      unsigned supp = 0;
      for (int i = 0; i < nvars; ++i) {
        if (((m >> (8 * i)) & 0xffu) != 0) supp |= 1u << i;
      }
      if ((supp & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

DimensionResult ideal_dimension(const std::vector<Polynomial<Fp>>& polys, int nvars,
                                const GroebnerOptions& opts) {
  Context ctx;
  ctx.nvars = nvars;
  for (const auto& f : polys) {
    if (!f.is_homogeneous()) throw std::invalid_argument("ideal_dimension: inputs must be homogeneous");
    for (const auto& [e, c] : f.terms()) {
      if (ctx.p == 0) ctx.p = c.p;
      break;
    }
  }
  if (ctx.p == 0) {
    // Zero ideal: the whole affine space.
    return {GBStatus::Done, nvars, 0};
  }
  std::vector<GBPoly> gens;
  gens.reserve(polys.size());
  for (const auto& f : polys) gens.push_back(from_polynomial(f, ctx));
  GroebnerResult g = buchberger(std::move(gens), ctx, opts);
  if (g.status != GBStatus::Done) return {GBStatus::Undecided, -2, g.pairs_enqueued};
  std::vector<Mono> leading;
  leading.reserve(g.basis.size());
  for (const auto& b : g.basis) leading.push_back(b.leading().mono);
  return {GBStatus::Done, staircase_dimension(leading, nvars), g.pairs_enqueued};
}

}  // namespace fanocert::gb
