// Buchberger over F_p in grevlex order, with the product and chain criteria
// and normal-strategy pair selection, plus cone dimension read off the
// leading-term staircase by maximal-independent-set search.  Desk scale:
// at most 8 variables, exponents below 128 (monomials pack into one word).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanocert/polynomial.hpp"

namespace fanocert::gb {

inline constexpr int kMaxVars = 8;

using Mono = std::uint64_t;  // byte i = exponent of variable i

unsigned mono_degree(Mono m);
bool mono_divides(Mono a, Mono b);  // a | b
Mono mono_mul(Mono a, Mono b);      // throws std::overflow_error past 127
Mono mono_div(Mono b, Mono a);
Mono mono_lcm(Mono a, Mono b);
bool mono_grevlex_greater(Mono a, Mono b, int nvars);

struct Term {
  Mono mono = 0;
  std::uint64_t c = 0;
};

// Terms sorted in descending grevlex order, no zero coefficients.
struct GBPoly {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  const Term& leading() const { return terms.front(); }
};

struct Context {
  int nvars = 0;
  std::uint64_t p = 0;
};

GBPoly from_polynomial(const Polynomial<Fp>& f, const Context& ctx);

struct GroebnerOptions {
  std::size_t pair_cap = 200000;  // queue inserts before giving up
};

enum class GBStatus { Done, Undecided };

struct GroebnerResult {
  GBStatus status = GBStatus::Undecided;
  std::vector<GBPoly> basis;  // reduced basis when status == Done
  std::size_t pairs_enqueued = 0;
};

GroebnerResult buchberger(std::vector<GBPoly> gens, const Context& ctx,
                          const GroebnerOptions& opts = {});

// Full normal form of f modulo the basis (top and tail reduction).
GBPoly normal_form(const GBPoly& f, const std::vector<GBPoly>& basis, const Context& ctx);

// S-polynomial of two nonzero polynomials, both sides scaled monic.
GBPoly s_polynomial(const GBPoly& f, const GBPoly& g, const Context& ctx);

// Krull dimension of the cone cut out by an ideal with the given leading
// monomials: the largest variable subset not meeting any leading support.
// Returns -1 for the unit ideal.
int staircase_dimension(const std::vector<Mono>& leading, int nvars);

struct DimensionResult {
  GBStatus status = GBStatus::Undecided;
  int dimension = -2;
  std::size_t pairs_enqueued = 0;
};

// Dimension of the affine cone of homogeneous polynomials over F_p.
DimensionResult ideal_dimension(const std::vector<Polynomial<Fp>>& polys, int nvars,
                                const GroebnerOptions& opts = {});

}  // namespace fanocert::gb
