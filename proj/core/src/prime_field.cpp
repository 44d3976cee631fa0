#include "fanocert/prime_field.hpp"

namespace fanocert {

Fp to_fp(const Rational& q, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("to_fp: modulus must be >= 2");
  const Integer num = q.get_num();
  const Integer den = q.get_den();
  const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw std::domain_error("to_fp: denominator divisible by p");
  const std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  return Fp{n, p} * fp_inv(Fp{d, p});
}

bool is_probable_prime(std::uint64_t p) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace fanocert
