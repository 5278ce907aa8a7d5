#include "adelic/exactlog/factor.hpp"

#include <algorithm>
#include <map>

#include "adelic/core/errors.hpp"

namespace adelic::exactlog {

namespace {

constexpr unsigned long kTrialBound = 1000;

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  Integer y = Integer(seed) % n;
  const Integer c = Integer(seed * 7 + 1) % n;
  const unsigned long m = 64;
  Integer g = 1, q = 1, x, ys;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        Integer diff = x - y;
        q *= abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd_of(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd_of(abs(Integer(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::map<Integer, unsigned long, bool (*)(const Integer&, const Integer&)>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = n;
  for (unsigned long seed = 2; d == n || d == 1; ++seed) {
    d = pollard_brent(n, seed);
    if (seed > 10000) throw InternalError("factorization did not converge");
  }
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

bool integer_less(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factor(const Integer& input) {
  if (input == 0) throw DomainError("cannot factor zero");
  Integer n = abs(input);
  std::map<Integer, unsigned long, bool (*)(const Integer&, const Integer&)> acc(&integer_less);
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      acc[Integer(p)] += 1;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  factor_into(n, acc);
  return Factorization(acc.begin(), acc.end());
}

}  // namespace adelic::exactlog
