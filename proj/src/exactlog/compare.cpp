#include "adelic/exactlog/compare.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "adelic/core/errors.hpp"

namespace adelic::exactlog {

namespace {

constexpr unsigned long kStartPrecision = 64;
constexpr unsigned long kDefaultCap = 16384;

class MpfrValue {
 public:
  explicit MpfrValue(unsigned long prec) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_ptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// [lo, hi] enclosing ln p, cached per thread by (p, precision).
const std::pair<Rational, Rational>& log_prime_bounds(const Integer& p, unsigned long prec) {
  thread_local std::map<std::pair<std::string, unsigned long>, std::pair<Rational, Rational>> cache;
  auto key = std::make_pair(p.get_str(16), prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MpfrValue arg(prec + 64), lo(prec), hi(prec);
  // p fits exactly once the argument has enough bits; widen if it does not.
  const auto bits = mpz_sizeinbase(p.get_mpz_t(), 2);
  if (bits > prec + 64) mpfr_set_prec(arg.get(), static_cast<mpfr_prec_t>(bits));
  mpfr_set_z(arg.get(), p.get_mpz_t(), MPFR_RNDN);
  mpfr_log(lo.get(), arg.get(), MPFR_RNDD);
  mpfr_log(hi.get(), arg.get(), MPFR_RNDU);
  auto [pos, inserted] = cache.emplace(key, std::make_pair(to_rational(lo.get()), to_rational(hi.get())));
  return pos->second;
}

}  // namespace

LogInterval enclose(const Quantity& q, unsigned long precision) {
  LogInterval out{q.constant(), q.constant(), precision};
  for (const auto& [p, c] : q.log_part().terms()) {
    const auto& [lo, hi] = log_prime_bounds(p, precision);
    if (c > 0) {
      out.lo += c * lo;
      out.hi += c * hi;
    } else {
      out.lo += c * hi;
      out.hi += c * lo;
    }
  }
  return out;
}

unsigned long precision_cap() {
  const char* env = std::getenv("ADELIC_PRECISION_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v < kStartPrecision) return kDefaultCap;
  return v;
}

int sign(const Quantity& q) {
  if (q.is_zero()) return 0;
  if (q.log_part().is_zero()) return sgn(q.constant());
  const unsigned long cap = precision_cap();
  for (unsigned long prec = kStartPrecision; prec <= cap; prec *= 2) {
    const LogInterval iv = enclose(q, prec);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
  throw PrecisionExhausted("interval refinement did not separate " + to_string(q) + " from 0 within " +
                           std::to_string(cap) + " bits");
}

Ordering compare(const Quantity& a, const Quantity& b) {
  const int s = sign(a - b);
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering compare(const LogValue& a, const Rational& r) { return compare(Quantity(a), Quantity(r)); }

Ordering compare_values(const LogValue& a, const LogValue& b) { return compare(Quantity(a), Quantity(b)); }

bool less(const Quantity& a, const Quantity& b) { return sign(b - a) > 0; }

bool less_equal(const Quantity& a, const Quantity& b) { return sign(b - a) >= 0; }

double to_double(const Quantity& q) {
  if (q.log_part().is_zero()) return q.constant().get_d();
  return enclose(q, 128).midpoint().get_d();
}

}  // namespace adelic::exactlog
