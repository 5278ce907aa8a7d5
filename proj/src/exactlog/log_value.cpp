#include "adelic/exactlog/log_value.hpp"

#include <sstream>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/factor.hpp"

namespace adelic::exactlog {

void LogValue::add_term(const Integer& p, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LogValue LogValue::of_rational(const Rational& q) {
  if (q <= 0) throw DomainError("logarithm of non-positive rational " + adelic::to_string(q));
  LogValue v;
  if (q.get_num() != 1) {
    for (const auto& [p, e] : factor(q.get_num())) v.add_term(p, Rational(Integer(e)));
  }
  if (q.get_den() != 1) {
    for (const auto& [p, e] : factor(q.get_den())) v.add_term(p, -Rational(Integer(e)));
  }
  return v;
}

LogValue LogValue::from_terms(const Terms& terms) {
  LogValue v;
  for (const auto& [p, c] : terms) {
    if (!is_prime(p)) throw ValidationError("log term key " + p.get_str() + " is not prime");
    Rational cc = c;
    cc.canonicalize();
    v.add_term(p, cc);
  }
  return v;
}

bool LogValue::is_log_of_rational() const {
  for (const auto& [p, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational LogValue::exp_rational() const {
  if (!is_log_of_rational()) throw DomainError("exponential is irrational");
  Integer num = 1, den = 1;
  for (const auto& [p, c] : terms_) {
    Integer pw;
    const Integer e = abs(c.get_num());
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e.get_ui());
    if (c > 0) {
      num *= pw;
    } else {
      den *= pw;
    }
  }
  return Rational(num, den);
}

LogValue LogValue::operator-() const {
  LogValue r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

LogValue& LogValue::operator+=(const LogValue& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

LogValue& LogValue::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, e] : terms_) e *= c;
  return *this;
}

LogValue log_of_rational(const Rational& q) { return LogValue::of_rational(q); }
LogValue add(const LogValue& a, const LogValue& b) { return a + b; }
LogValue scalar_mul(const Rational& c, const LogValue& a) { return c * a; }

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (body.empty()) {
    os << adelic::to_string(mag);
    return;
  }
  if (mag != 1) os << adelic::to_string(mag) << " ";
  os << body;
}

}  // namespace

std::string to_string(const LogValue& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    append_term(os, first, c, "ln " + p.get_str());
    first = false;
  }
  return os.str();
}

std::string to_string(const Quantity& q) {
  if (q.is_zero()) return "0";
  if (q.log_part().is_zero()) return adelic::to_string(q.constant());
  std::ostringstream os;
  bool first = true;
  if (q.constant() != 0) {
    append_term(os, true, q.constant(), "");
    first = false;
  }
  for (const auto& [p, c] : q.log_part().terms()) {
    append_term(os, first, c, "ln " + p.get_str());
    first = false;
  }
  return os.str();
}

}  // namespace adelic::exactlog
