#include "adelic/harness/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "adelic/asymptotics/asymptotics.hpp"
#include "adelic/core/errors.hpp"
#include "adelic/harness/generate.hpp"
#include "adelic/lattices/minima.hpp"
#include "adelic/lattices/slopes.hpp"

namespace adelic::harness {

namespace {

using lattices::EuclideanLattice;

struct LoadedInput {
  json doc;
  std::string kind;
};

LoadedInput load(const std::string& path, InvariantReport& report, const char* label) {
  if (path.empty()) throw ValidationError(std::string("missing --") + label);
  const std::string text = io::read_file(path);
  report.provenance[std::string(label) + "_sha256"] = io::sha256_hex(text);
  LoadedInput in{io::parse_json(text), {}};
  io::check_schema(in.doc);
  in.kind = io::input_kind(in.doc);
  return in;
}

bool is_ff(const std::string& kind) { return kind == "splitting" || kind == "matrix_divisor"; }

ffbundles::SplittingType splitting_of(const LoadedInput& in) {
  if (in.kind == "splitting") return io::splitting_from_json(in.doc);
  return ffbundles::reduce_to_splitting(io::divisor_from_json(in.doc));
}

EuclideanLattice lattice_of(const LoadedInput& in) {
  if (in.kind != "euclidean") throw ValidationError("expected a euclidean lattice, got '" + in.kind + "'");
  return io::lattice_from_json(in.doc);
}

json int_list(const std::vector<long>& v) { return json(v); }

lattices::SearchLimits limits_of(const ExperimentSpec& s) {
  lattices::SearchLimits l;
  if (s.cap) l.dimension_cap = *s.cap;
  return l;
}

// Splitting-type commands: every invariant is an exact integer or rational.
void execute_ff(const ExperimentSpec& job, const LoadedInput& in, InvariantReport& rep) {
  const ffbundles::SplittingType s = splitting_of(in);
  const std::size_t d = s.rank();
  const std::size_t cap = job.cap.value_or(ffbundles::kDefaultFfCap);
  const std::string& cmd = job.command;
  if (cmd == "invariants") {
    rep.add(plain_entry("degrees", int_list(s.degrees())));
    rep.add(rational_entry("degree", Rational(s.total_degree())));
    rep.add(rational_entry("slope", make_rational(s.total_degree(), static_cast<long>(d))));
    const auto mu = ffbundles::slopes_ff(s);
    const auto zeta = ffbundles::minima_ff(s);
    for (std::size_t i = 0; i < d; ++i) rep.add(rational_entry("mu_hat", Rational(mu[i]), true, nullptr, static_cast<long>(i + 1)));
    for (std::size_t i = 0; i < d; ++i) rep.add(rational_entry("zeta", Rational(zeta[i]), true, nullptr, static_cast<long>(i + 1)));
  } else if (cmd == "minima") {
    const auto zeta = ffbundles::minima_ff(s);
    for (std::size_t i = 0; i < d; ++i) rep.add(rational_entry("zeta", Rational(zeta[i]), true, nullptr, static_cast<long>(i + 1)));
  } else if (cmd == "slopes") {
    rep.add(rational_entry("max_slope", Rational(s.pmax())));
    rep.add(rational_entry("min_slope", Rational(s.pmin())));
  } else if (cmd == "hn-polygon") {
    long acc = 0;
    rep.add(rational_entry("vertex", Rational(0), true, nullptr, 0));
    for (std::size_t i = 0; i < d; ++i) {
      acc += s.degrees()[i];
      rep.add(rational_entry("vertex", Rational(acc), true, nullptr, static_cast<long>(i + 1)));
    }
    for (std::size_t i = 0; i < d; ++i) rep.add(rational_entry("mu_hat", Rational(s.degrees()[i]), true, nullptr, static_cast<long>(i + 1)));
  } else if (cmd == "sym-sequence" || cmd == "defects") {
    const ffbundles::SplittingType sd = ffbundles::dual_ff(s);
    const unsigned max_n = job.max_n.value_or(asymptotics::default_max_n(d));
    for (unsigned n = 1; n <= max_n; ++n) {
      ffbundles::SplittingType sym;
      try {
        sym = ffbundles::sym_ff(sd, n, cap);
      } catch (const ResourceError& e) {
        rep.status = "resource_limit";
        rep.warnings.push_back("sequence truncated at n = " + std::to_string(n) + ": " + e.what());
        break;
      }
      const Rational inv = make_rational(1, static_cast<long>(n));
      if (cmd == "sym-sequence") {
        rep.add(rational_entry("pmax_over_n", Rational(sym.pmax()) * inv, true, nullptr, n));
        rep.add(rational_entry("pmin_over_n", Rational(sym.pmin()) * inv, true, nullptr, n));
      } else {
        const ffbundles::SplittingType dual_sym = ffbundles::dual_ff(ffbundles::sym_ff(s, n, cap));
        rep.add(rational_entry("alpha", (Rational(sym.pmax()) - Rational(static_cast<long>(n) * sd.pmax())) * inv, true, nullptr, n));
        rep.add(rational_entry("alpha_s", (Rational(sym.pmax()) - Rational(dual_sym.pmax())) * inv, true, nullptr, n));
      }
    }
  } else if (cmd == "ff-reduce") {
    if (in.kind != "matrix_divisor") throw ValidationError("ff-reduce needs a matrix_divisor input");
    const ffbundles::MatrixDivisor m = io::divisor_from_json(in.doc);
    const ffbundles::WeakPopovResult w = ffbundles::weak_popov(m);
    rep.add(plain_entry("field", m.field.name()));
    rep.add(plain_entry("splitting", int_list(s.degrees()), true, io::to_json(w.reduced)));
    rep.add(rational_entry("degree", Rational(s.total_degree())));
    rep.add(plain_entry("row_degrees", int_list(w.row_degrees)));
    rep.add(plain_entry("pivots", json(w.pivots)));
  } else {
    throw ValidationError("command '" + cmd + "' needs a euclidean lattice input");
  }
}

void execute_lattice(const ExperimentSpec& job, const LoadedInput& in, InvariantReport& rep) {
  const EuclideanLattice e = lattice_of(in);
  const lattices::SearchLimits lim = limits_of(job);
  const std::size_t d = e.dim();
  const std::string& cmd = job.command;
  auto idx = [](std::size_t i) { return static_cast<long>(i); };

  if (cmd == "invariants") {
    rep.add(plain_entry("dim", d));
    rep.add(rational_entry("determinant", e.determinant()));
    rep.add(log_entry("degree", lattices::degree(e)));
    rep.add(log_entry("slope", lattices::slope(e)));
    const lattices::HNPolygon poly = lattices::hn_polygon(e, lim);
    for (std::size_t i = 0; i < d; ++i) rep.add(log_entry("mu_hat", poly.mu_hat[i], poly.certified, nullptr, idx(i + 1)));
    const lattices::MinimaProfile m = lattices::successive_minima(e, lim);
    for (std::size_t i = 0; i < d; ++i) rep.add(log_entry("lambda", m.values[i], true, io::to_json(m.witnesses[i]), idx(i + 1)));
    for (const auto& c : asymptotics::zeta_sandwich(e, lim)) {
      const bool cert = c.status != asymptotics::ZetaStatus::Unknown;
      rep.add(log_entry("zeta_lower", c.lower, cert, nullptr, idx(c.index)));
      rep.add(quantity_entry("zeta_upper", c.zeta_upper, cert, nullptr, idx(c.index)));
      rep.add(plain_entry("zeta_status", asymptotics::to_string(c.status), cert, nullptr, idx(c.index)));
    }
  } else if (cmd == "minima") {
    const lattices::MinimaProfile m = lattices::successive_minima(e, lim);
    for (std::size_t i = 0; i < d; ++i) {
      rep.add(log_entry("lambda", m.values[i], true, io::to_json(m.witnesses[i]), idx(i + 1)));
      rep.add(rational_entry("squared_norm", m.squared_norms[i], true, nullptr, idx(i + 1)));
    }
  } else if (cmd == "slopes") {
    const lattices::SlopeResult mx = lattices::max_slope(e, lim);
    rep.add(log_entry("max_slope", mx.value, mx.certified, io::to_json(mx.witness)));
    const lattices::SlopeResult mn = lattices::min_slope(e, lim);
    rep.add(log_entry("min_slope", mn.value, mn.certified, io::to_json(mn.witness)));
  } else if (cmd == "hn-polygon") {
    const lattices::HNPolygon poly = lattices::hn_polygon(e, lim);
    for (const auto& v : poly.vertices) rep.add(log_entry("vertex", v.degree, poly.certified, io::to_json(v.witness), idx(v.rank)));
    for (std::size_t i = 0; i < d; ++i) rep.add(log_entry("mu_hat", poly.mu_hat[i], poly.certified, nullptr, idx(i + 1)));
  } else if (cmd == "sym-sequence") {
    const unsigned max_n = job.max_n.value_or(asymptotics::default_max_n(d));
    const asymptotics::SlopeSequence seq = asymptotics::slope_sequence(e, max_n, lim);
    for (const auto& s : seq.entries) {
      rep.add(log_entry("pmax_over_n", s.pmax_over_n, s.certified, nullptr, s.n));
      rep.add(log_entry("pmin_over_n", s.pmin_over_n, s.certified, nullptr, s.n));
    }
    if (seq.truncated) {
      rep.status = "resource_limit";
      rep.warnings.push_back(seq.warning);
    }
  } else if (cmd == "defects") {
    const unsigned max_n = job.max_n.value_or(asymptotics::default_max_n(d));
    const auto [alpha, alpha_s] = asymptotics::defect_estimates(e, max_n, lim);
    rep.add(log_entry("reference_lower", alpha.reference_lower));
    rep.add(rational_entry("reference_upper", alpha.reference_upper));
    for (const auto& v : alpha.values) rep.add(log_entry("alpha", v.value, v.certified, nullptr, v.n));
    for (const auto& v : alpha_s.values) rep.add(log_entry("alpha_s", v.value, v.certified, nullptr, v.n));
    if (alpha.truncated) {
      rep.status = "resource_limit";
      rep.warnings.push_back("defect sequence truncated by the dimension cap");
    }
  } else if (cmd == "transference") {
    const asymptotics::TransferenceReport t = asymptotics::transference_check(e, lim);
    for (const auto& x : t.entries) {
      rep.add(log_entry("lambda_sum", x.lambda_sum, true, nullptr, idx(x.index)));
      rep.add(rational_entry("harmonic_bound", x.harmonic_bound, true, nullptr, idx(x.index)));
      rep.add(log_entry("slope_sum", x.slope_sum, t.certified, nullptr, idx(x.index)));
      rep.add(plain_entry("within_bounds", x.ok, t.certified, nullptr, idx(x.index)));
    }
    rep.add(plain_entry("all_ok", t.all_ok, t.certified));
  } else {
    throw ValidationError("command '" + cmd + "' does not accept a euclidean lattice");
  }
}

const char* outcome_name(okounkov::ZhangOutcome o) {
  switch (o) {
    case okounkov::ZhangOutcome::Equality:
      return "equality";
    case okounkov::ZhangOutcome::Strict:
      return "strict";
    case okounkov::ZhangOutcome::Violated:
      return "violated";
  }
  return "violated";
}

void execute_zhang(const ExperimentSpec& job, InvariantReport& rep) {
  const LoadedInput in = load(job.roof.empty() ? job.input : job.roof, rep, "roof");
  if (in.kind != "roof") throw ValidationError("zhang-check needs a roof input");
  const okounkov::RoofFunction g = io::roof_from_json(in.doc);
  const std::size_t d = g.dim();
  const Rational deg = job.degree ? parse_rational(*job.degree)
                                   : Rational(factorial(static_cast<unsigned>(d))) * g.domain().volume();
  const okounkov::ZhangReport z = okounkov::zhang_check(g, deg, job.field_degree);
  const okounkov::RoofMax mx = okounkov::roof_max(g);
  json argmax = json::array();
  for (const auto& x : mx.argmax) argmax.push_back(io::to_json(x));
  rep.add(quantity_entry("zeta_ess", z.zeta_ess, mx.certificate_verified, argmax));
  rep.add(quantity_entry("height", z.height));
  rep.add(quantity_entry("vol_chi", z.vol_chi));
  rep.add(quantity_entry("bound", z.bound));
  rep.add(plain_entry("outcome", outcome_name(z.outcome)));
  rep.add(plain_entry("equality", z.outcome == okounkov::ZhangOutcome::Equality));
  rep.add(plain_entry("roof_constant", z.roof_constant));
  rep.add(plain_entry("criterion_consistent", z.criterion_consistent));
  rep.add(plain_entry("degree_matches_volume", z.degree_matches_volume));
  const okounkov::RoofIntegral integ = okounkov::roof_integral(g, job.field_degree);
  if (integ.vol_arith) rep.add(quantity_entry("vol_arith", *integ.vol_arith));
}

void execute_body(const ExperimentSpec& job, InvariantReport& rep) {
  const LoadedInput in = load(job.input, rep, "input");
  if (in.kind != "series") throw ValidationError("okounkov-body needs a series input");
  const okounkov::RationalPolytope body = okounkov::okounkov_body(io::series_from_json(in.doc));
  json verts = json::array();
  for (const auto& v : body.vertices()) verts.push_back(io::to_json(v));
  rep.add(plain_entry("vertices", static_cast<long>(body.vertices().size()), true, verts));
  rep.add(plain_entry("affine_dim", body.affine_dim()));
  rep.add(rational_entry("volume", body.volume()));
  rep.add(rational_entry("normalized_volume",
                         Rational(factorial(static_cast<unsigned>(body.ambient_dim()))) * body.volume()));
}

void emit(const ExperimentSpec& job, const InvariantReport& rep, std::ostream& out) {
  const std::string json_text = to_json(rep).dump(2) + "\n";
  std::string text = json_text;
  if (job.format == "csv") text = to_csv(rep);
  if (job.format == "md") text = to_markdown(rep);
  if (job.output.empty()) {
    out << text;
    return;
  }
  io::write_file_atomic(job.output, text);
  if (job.format != "json") io::write_file_atomic(job.output + ".json", json_text);
}

}  // namespace

void execute(const ExperimentSpec& job, InvariantReport& report) {
  report.command = job.command;
  json params = json::object();
  if (job.max_n) params["max_n"] = *job.max_n;
  if (job.cap) params["cap"] = *job.cap;
  if (job.degree) params["deg"] = *job.degree;
  if (job.field_degree != 1) params["field_degree"] = job.field_degree;
  report.provenance["library_version"] = ADELIC_VERSION;
  report.provenance["parameters"] = params;

  if (job.command == "zhang-check") return execute_zhang(job, report);
  if (job.command == "okounkov-body") return execute_body(job, report);
  const LoadedInput in = load(job.input, report, "input");
  if (is_ff(in.kind)) return execute_ff(job, in, report);
  execute_lattice(job, in, report);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slope, minima and Okounkov-body invariants of adelic vector bundles"};
  app.set_version_flag("--version", std::string(ADELIC_VERSION));
  app.require_subcommand(1);

  ExperimentSpec job;
  GenerateParams gen;
  std::string epsilon = "1/4";

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"invariants", "degree, slopes, minima and Zhang sandwich of one object"},
      {"minima", "successive minima with witnesses"},
      {"slopes", "maximal and minimal slope"},
      {"hn-polygon", "Harder-Narasimhan polygon"},
      {"sym-sequence", "pmax(S^n E^dual)/n and pmin(S^n E^dual)/n"},
      {"defects", "symmetry defect estimates alpha_n and alpha_s,n"},
      {"transference", "lambda_i(E) + lambda_{d+1-i}(E^dual) against ln d and harmonic bounds"},
      {"zhang-check", "essential minimum against the averaged roof integral"},
      {"okounkov-body", "convex hull and volume of a monomial series body"},
      {"ff-reduce", "splitting type of a polynomial matrix divisor"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--in", job.input, "input JSON file");
    sub->add_option("--out", job.output, "output file (stdout when omitted)");
    sub->add_option("--max-n", job.max_n, "longest symmetric power")->check(CLI::PositiveNumber);
    sub->add_option("--cap", job.cap, "dimension cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", job.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    if (name == "zhang-check") {
      sub->add_option("--roof", job.roof, "roof JSON file");
      sub->add_option("--deg", job.degree, "divisor degree (rational)");
      sub->add_option("--field-degree", job.field_degree, "[K:K0]")->check(CLI::PositiveNumber);
    }
  }
  CLI::App* gsub = app.add_subcommand("generate", "deterministic random inputs");
  gsub->add_option("--kind", gen.kind, "random-gram, random-splitting or random-roof")->required();
  gsub->add_option("--seed", gen.seed, "RNG seed");
  gsub->add_option("--dim", gen.dim, "dimension");
  gsub->add_option("--max-abs", gen.max_abs, "entry bound");
  gsub->add_option("--epsilon", epsilon, "diagonal shift for random-gram");
  gsub->add_option("--out", job.output, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kValidation;
  }

  if (gsub->parsed()) {
    try {
      gen.epsilon = parse_rational(epsilon);
      const std::string text = generate(gen).dump(2) + "\n";
      if (job.output.empty()) {
        out << text;
      } else {
        io::write_file_atomic(job.output, text);
      }
      return kOk;
    } catch (const ValidationError& e) {
      err << "error: " << e.what() << '\n';
      return kValidation;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
  }

  job.command = app.get_subcommands().front()->get_name();
  InvariantReport report;
  int code = kOk;
  try {
    execute(job, report);
    if (report.status == "ok" && !report.all_certified()) report.status = "uncertified";
    if (report.status != "ok") code = kResource;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kValidation;
  } catch (const ResourceError& e) {
    report.status = "resource_limit";
    report.warnings.push_back(std::string(e.what()) + (e.bounds().empty() ? "" : "; " + e.bounds()));
    code = kResource;
  } catch (const PrecisionExhausted& e) {
    report.status = "resource_limit";
    report.warnings.push_back(e.what());
    code = kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  try {
    emit(job, report, out);
  } catch (const std::exception& e) {
    err << "error writing report: " << e.what() << '\n';
    return kInternal;
  }
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  return code;
}

}  // namespace adelic::harness
