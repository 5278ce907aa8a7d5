#include "adelic/asymptotics/asymptotics.hpp"

#include "adelic/core/errors.hpp"
#include "adelic/lattices/minima.hpp"
#include "adelic/lattices/slopes.hpp"
#include "adelic/multilinear/multilinear.hpp"

namespace adelic::asymptotics {

namespace {

Rational inv(unsigned n) { return Rational(1, static_cast<long>(n)); }

LogValue half_log_d(std::size_t d) { return Rational(1, 2) * LogValue::of_rational(Rational(static_cast<long>(d))); }

}  // namespace

unsigned default_max_n(std::size_t d) {
  if (d <= 2) return 8;
  if (d == 3) return 4;
  if (d == 4) return 2;
  return 1;
}

SlopeSequence slope_sequence(const EuclideanLattice& e, unsigned max_n, const SearchLimits& limits) {
  SlopeSequence seq;
  const EuclideanLattice ed = lattices::dual(e);
  for (unsigned n = 1; n <= max_n; ++n) {
    try {
      const EuclideanLattice s = multilinear::sym_power(ed, n, limits.dimension_cap);
      const lattices::HNPolygon poly = lattices::hn_polygon(s, limits);
      seq.entries.push_back({n, inv(n) * poly.mu_hat.front(), inv(n) * poly.mu_hat.back(), poly.certified});
    } catch (const ResourceError& err) {
      seq.truncated = true;
      seq.warning = "sequence truncated at n = " + std::to_string(n) + ": " + err.what();
      break;
    }
  }
  return seq;
}

std::pair<DefectEstimate, DefectEstimate> defect_estimates(const EuclideanLattice& e, unsigned max_n,
                                                           const SearchLimits& limits) {
  const std::size_t d = e.dim();
  const Rational h = harmonic(static_cast<unsigned>(d - 1));
  DefectEstimate alpha{DefectKind::Alpha, {}, half_log_d(d), h, false};
  DefectEstimate alpha_s{DefectKind::AlphaStrong, {}, half_log_d(d), h, false};

  const EuclideanLattice ed = lattices::dual(e);
  const lattices::HNPolygon base = lattices::hn_polygon(ed, limits);
  const LogValue pmax_dual = base.mu_hat.front();

  for (unsigned n = 1; n <= max_n; ++n) {
    try {
      const lattices::HNPolygon sym_dual = lattices::hn_polygon(multilinear::sym_of_dual(e, n, limits.dimension_cap), limits);
      const lattices::HNPolygon dual_sym = lattices::hn_polygon(multilinear::dual_of_sym(e, n, limits.dimension_cap), limits);
      const LogValue top = sym_dual.mu_hat.front();
      const LogValue a = inv(n) * (top - Rational(static_cast<long>(n)) * pmax_dual);
      const LogValue as = inv(n) * (top - dual_sym.mu_hat.front());
      const bool cert_a = sym_dual.certified && base.certified;
      const bool cert_as = sym_dual.certified && dual_sym.certified;
      alpha.values.push_back({n, a, exactlog::compare(a, Rational(0)), exactlog::compare(a, h), cert_a});
      alpha_s.values.push_back({n, as, exactlog::compare(as, Rational(0)), exactlog::compare(as, h), cert_as});
    } catch (const ResourceError&) {
      alpha.truncated = alpha_s.truncated = true;
      break;
    }
  }
  return {alpha, alpha_s};
}

std::string to_string(ZetaStatus s) {
  switch (s) {
    case ZetaStatus::Certified:
      return "certified";
    case ZetaStatus::Bounded:
      return "bounded";
    case ZetaStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<SandwichCertificate> zeta_sandwich(const EuclideanLattice& e, const SearchLimits& limits) {
  const std::size_t d = e.dim();
  const lattices::HNPolygon poly = lattices::hn_polygon(e, limits);
  const lattices::MinimaProfile minima = lattices::successive_minima(e, limits);
  const Rational h = harmonic(static_cast<unsigned>(d - 1));
  std::vector<SandwichCertificate> out;
  for (std::size_t i = 0; i < d; ++i) {
    SandwichCertificate c;
    c.index = i + 1;
    c.lower = -poly.mu_hat[i];
    c.upper = minima.values[i];
    c.tight = c.lower == c.upper;
    c.zeta_upper = Quantity(h, c.lower);
    if (i == 0 && exactlog::less(Quantity(c.upper), c.zeta_upper)) c.zeta_upper = Quantity(c.upper);
    if (!poly.certified) {
      c.status = ZetaStatus::Unknown;
    } else if (c.zeta_upper == Quantity(c.lower)) {
      c.status = ZetaStatus::Certified;
    } else {
      c.status = ZetaStatus::Bounded;
    }
    out.push_back(std::move(c));
  }
  return out;
}

TransferenceReport transference_check(const EuclideanLattice& e, const SearchLimits& limits) {
  const std::size_t d = e.dim();
  const EuclideanLattice ed = lattices::dual(e);
  const lattices::MinimaProfile me = lattices::successive_minima(e, limits);
  const lattices::MinimaProfile md = lattices::successive_minima(ed, limits);
  const lattices::HNPolygon pe = lattices::hn_polygon(e, limits);
  const lattices::HNPolygon pd = lattices::hn_polygon(ed, limits);
  const LogValue ln_d = LogValue::of_rational(Rational(static_cast<long>(d)));

  TransferenceReport rep;
  rep.certified = pe.certified && pd.certified;
  rep.all_ok = true;
  for (std::size_t i = 1; i <= d; ++i) {
    TransferenceEntry t;
    t.index = i;
    t.lambda_sum = me.values[i - 1] + md.values[d - i];
    t.vs_zero = exactlog::compare(t.lambda_sum, Rational(0));
    t.vs_ln_d = exactlog::compare_values(t.lambda_sum, ln_d);
    t.harmonic_bound = harmonic(static_cast<unsigned>(i - 1)) + harmonic(static_cast<unsigned>(d - i));
    t.lambda_vs_harmonic = exactlog::compare(t.lambda_sum, t.harmonic_bound);
    t.slope_sum = -pe.mu_hat[i - 1] - pd.mu_hat[d - i];
    t.slope_vs_harmonic = exactlog::compare(t.slope_sum, t.harmonic_bound);
    t.ok = t.vs_zero != Ordering::Less && t.vs_ln_d != Ordering::Greater && t.slope_vs_harmonic != Ordering::Greater;
    rep.all_ok = rep.all_ok && t.ok;
    rep.entries.push_back(std::move(t));
  }
  return rep;
}

}  // namespace adelic::asymptotics
