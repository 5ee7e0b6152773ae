#include "qbern/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qbern/asympt.hpp"
#include "qbern/detrep.hpp"
#include "qbern/errors.hpp"
#include "qbern/expand.hpp"
#include "qbern/io.hpp"
#include "qbern/qcore.hpp"
#include "qbern/series.hpp"

namespace qbern {

namespace {

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct ContextOptions {
  int kind = 1;
  std::string alpha = "1/2";
  std::optional<std::string> q;
  std::optional<std::string> q_quarter;
  unsigned precision = QContext::kDefaultPrecisionBits;
  std::string format = "json";
};

void add_context_options(CLI::App* sub, ContextOptions& o, int kind_lo) {
  sub->add_option("--kind", o.kind, "polynomial family")->check(CLI::Range(kind_lo, 3));
  sub->add_option("--alpha", o.alpha, "Bessel order, rational");
  sub->add_option("--q", o.q, "base q, rational (default 1/4)");
  sub->add_option("--q-quarter", o.q_quarter, "q^{1/4}, rational");
  sub->add_option("--precision", o.precision, "bits for approximate output")->check(CLI::Range(16u, 65536u));
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

QContext make_context(const ContextOptions& o) {
  if (o.q && o.q_quarter) throw UsageError("--q and --q-quarter are mutually exclusive");
  const Rational alpha = rational_flag("--alpha", o.alpha);
  if (o.q_quarter) return QContext::from_quarter_root(rational_flag("--q-quarter", *o.q_quarter), alpha, o.precision);
  return QContext::from_q(o.q ? rational_flag("--q", *o.q) : Rational(1, 4), alpha, o.precision);
}

Json parameters(const ContextOptions& o, const QContext& ctx) {
  Json p;
  p["kind"] = o.kind;
  p["alpha"] = to_string(ctx.alpha());
  p["q"] = to_string(ctx.q());
  p["precision"] = o.precision;
  return p;
}

std::string fmt(const BigFloat& x, unsigned bits) { return x.with_precision(bits).to_tagged_string(); }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// poly, numbers

struct TableOptions {
  ContextOptions ctx;
  long n = 6;
  std::string via = "det";
};

void add_table_options(CLI::App* sub, TableOptions& o) {
  add_context_options(sub, o.ctx, 1);
  sub->add_option("--n", o.n, "largest degree")->check(CLI::Range(0L, 200L));
  sub->add_option("--via", o.via, "det, oracle or both")->check(CLI::IsMember({"det", "oracle", "both"}));
}

struct Tables {
  std::vector<PolyZ> det;
  std::vector<PolyZ> oracle;
};

Tables compute_tables(const QContext& ctx, const TableOptions& o) {
  const Kind kind = kind_from_int(o.ctx.kind);
  Tables t;
  if (o.via != "oracle") t.det = bernoulli_poly_det_table(ctx, kind, o.n);
  if (o.via != "det") t.oracle = oracle_bernoulli_table(ctx, kind, o.n);
  return t;
}

int cmd_poly(const TableOptions& o, std::ostream& out) {
  const QContext ctx = make_context(o.ctx);
  const Tables t = compute_tables(ctx, o);
  const bool both = o.via == "both";
  const std::vector<PolyZ>& main = t.det.empty() ? t.oracle : t.det;
  if (o.ctx.format == "csv") {
    out << "n,power,coefficient" << (both ? ",match" : "") << '\n';
    for (long n = 0; n <= o.n; ++n) {
      const std::string match = both ? (t.det[n] == t.oracle[n] ? ",true" : ",false") : "";
      const auto& c = main[n].coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) out << n << ',' << i << ',' << to_string(c[i]) << match << '\n';
    }
    return exit_ok;
  }
  Json j;
  j["command"] = "poly";
  j["parameters"] = parameters(o.ctx, ctx);
  j["parameters"]["n"] = o.n;
  j["parameters"]["via"] = o.via;
  j["format"] = "json";
  j["polynomials"] = Json::array();
  for (long n = 0; n <= o.n; ++n) {
    Json row{{"n", n}, {"coefficients", poly_to_json(main[n])}};
    if (both) row["match"] = t.det[n] == t.oracle[n];
    j["polynomials"].push_back(row);
  }
  emit_json(out, j);
  return exit_ok;
}

int cmd_numbers(const TableOptions& o, std::ostream& out) {
  const QContext ctx = make_context(o.ctx);
  const Kind kind = kind_from_int(o.ctx.kind);
  const bool both = o.via == "both";
  std::vector<Rational> det, oracle;
  if (o.via != "oracle")
    for (long n = 0; n <= o.n; ++n) det.push_back(bernoulli_number(ctx, kind, n));
  if (o.via != "det")
    for (const PolyZ& p : oracle_bernoulli_table(ctx, kind, o.n)) oracle.push_back(p.coefficient(0));
  const std::vector<Rational>& main = det.empty() ? oracle : det;
  if (o.ctx.format == "csv") {
    out << "n,value" << (both ? ",match" : "") << '\n';
    for (long n = 0; n <= o.n; ++n) {
      out << n << ',' << to_string(main[n]);
      if (both) out << (det[n] == oracle[n] ? ",true" : ",false");
      out << '\n';
    }
    return exit_ok;
  }
  Json j;
  j["command"] = "numbers";
  j["parameters"] = parameters(o.ctx, ctx);
  j["parameters"]["n"] = o.n;
  j["parameters"]["via"] = o.via;
  j["format"] = "json";
  j["numbers"] = Json::array();
  for (long n = 0; n <= o.n; ++n) {
    Json row{{"n", n}, {"value", to_string(main[n])}};
    if (both) row["match"] = det[n] == oracle[n];
    j["numbers"].push_back(row);
  }
  emit_json(out, j);
  return exit_ok;
}

// zeros

int cmd_zeros(const ContextOptions& o, std::ostream& out) {
  const QContext ctx = make_context(o);
  const Kind kind = kind_from_int(o.kind);
  const BigFloat tol = ldexp2(16 - static_cast<long>(o.precision), ctx.working_precision());
  struct Row {
    std::string name;
    ZeroResult z;
  };
  std::vector<Row> rows;
  rows.push_back({"j" + std::to_string(o.kind) + "_1", smallest_zero(ctx, kind, o.precision)});
  const auto named = kind == Kind::second ? std::vector<TrigZero>{TrigZero::zeta, TrigZero::eta}
                                          : std::vector<TrigZero>{TrigZero::lambda, TrigZero::mu};
  for (TrigZero t : named) rows.push_back({to_string(t), named_trig_zero(ctx, t, o.precision)});
  if (o.format == "csv") {
    out << "name,location,lower,upper,residual,tolerance,below_tolerance\n";
    for (const Row& r : rows)
      out << r.name << ',' << fmt(r.z.location, o.precision) << ',' << fmt(r.z.lower, o.precision) << ','
          << fmt(r.z.upper, o.precision) << ',' << fmt(r.z.residual, o.precision) << ',' << fmt(tol, o.precision)
          << ',' << (r.z.residual < tol ? "true" : "false") << '\n';
    return exit_ok;
  }
  Json j;
  j["command"] = "zeros";
  j["parameters"] = parameters(o, ctx);
  j["format"] = "json";
  j["tolerance"] = fmt(tol, o.precision);
  j["zeros"] = Json::array();
  for (const Row& r : rows)
    j["zeros"].push_back(Json{{"name", r.name},
                              {"location", fmt(r.z.location, o.precision)},
                              {"lower", fmt(r.z.lower, o.precision)},
                              {"upper", fmt(r.z.upper, o.precision)},
                              {"residual", fmt(r.z.residual, o.precision)},
                              {"below_tolerance", r.z.residual < tol}});
  emit_json(out, j);
  return exit_ok;
}

// asympt

struct AsymptOptions {
  ContextOptions ctx;
  std::string z = "1/4";
  long n_min = 4;
  long n_max = 30;
};

int cmd_asympt(const AsymptOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n_min < 1 || o.n_min > o.n_max) throw UsageError("need 1 <= --n-min <= --n-max");
  const QContext ctx = make_context(o.ctx);
  const Rational z = rational_flag("--z", o.z);
  std::vector<long> ns;
  for (long n = o.n_min; n <= o.n_max; ++n) ns.push_back(n);
  const auto rows = ratio_diagnostic(ctx, kind_from_int(o.ctx.kind), z, ns);
  const bool dec = decreasing(rows);
  if (o.ctx.format == "csv") {
    out << diagnostic_csv(rows, o.ctx.precision);
    err << "decreasing=" << (dec ? "true" : "false") << '\n';
    return exit_ok;
  }
  Json j;
  j["command"] = "asympt";
  j["parameters"] = parameters(o.ctx, ctx);
  j["parameters"]["z"] = to_string(z);
  j["parameters"]["n_min"] = o.n_min;
  j["parameters"]["n_max"] = o.n_max;
  j["format"] = "json";
  j["decreasing"] = dec;
  j["rows"] = Json::array();
  const unsigned p = o.ctx.precision;
  for (const auto& r : rows)
    j["rows"].push_back(Json{{"n", r.n},
                             {"exact_value", to_string(r.exact)},
                             {"float_value", fmt(r.value, p)},
                             {"leading_term", fmt(r.leading, p)},
                             {"abs_ratio_minus_1", fmt(r.abs_ratio_minus_1, p)},
                             {"indeterminate", r.indeterminate}});
  emit_json(out, j);
  return exit_ok;
}

// expand

struct ExpandOptions {
  ContextOptions ctx;
  std::string input;
  long terms = 10;
  std::optional<std::string> at;
};

CoefficientStream read_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return stream_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_expand(const ExpandOptions& o, std::ostream& out) {
  const CoefficientStream s = read_stream(o.input);
  const QContext ctx = make_context(o.ctx);
  const std::optional<Rational> at = o.at ? std::optional(rational_flag("--at", *o.at)) : std::nullopt;
  const LCoefficients l = l_coefficients(ctx, s, o.terms);
  const unsigned p = o.ctx.precision;
  std::optional<BigFloat> value;
  std::optional<bool> identity;
  if (at) {
    value = reconstruct(ctx, s, BigFloat(*at, ctx.working_precision()), o.terms);
    if (s.finite()) identity = exact_identity(ctx, s, o.terms);
  }
  if (o.ctx.format == "csv") {
    out << "n,L,tail_bound\n";
    for (long n = 0; n <= o.terms; ++n) out << n << ',' << to_string(l.values[n]) << ',' << fmt(l.tail_bounds[n], p) << '\n';
    if (at) {
      out << "\nz,value,exact_identity\n";
      out << to_string(*at) << ',' << fmt(*value, p) << ',' << (identity ? (*identity ? "true" : "false") : "") << '\n';
    }
    return exit_ok;
  }
  Json j;
  j["command"] = "expand";
  j["parameters"] = parameters(o.ctx, ctx);
  j["parameters"].erase("kind");
  j["parameters"]["terms"] = o.terms;
  j["format"] = "json";
  j["tail"] = stream_to_json(s)["tail"];
  j["L"] = Json::array();
  for (const Rational& v : l.values) j["L"].push_back(to_string(v));
  if (!s.finite()) {
    j["tail_bounds"] = Json::array();
    for (const BigFloat& b : l.tail_bounds) j["tail_bounds"].push_back(fmt(b, p));
  }
  if (s.last_index() >= 1) {
    const long hi = s.last_index();
    j["tau_estimate"] = fmt(tau_estimate(ctx, s, std::max(1L, hi / 2), hi), p);
  }
  if (at) {
    Json r{{"z", to_string(*at)}, {"value", fmt(*value, p)}};
    if (identity) r["exact_identity"] = *identity;
    j["reconstruction"] = r;
  }
  emit_json(out, j);
  return exit_ok;
}

// appell

int cmd_appell(const ContextOptions& o, long n_max, std::ostream& out) {
  const QContext ctx = make_context(o);
  const auto report = appell_check(ctx, kind_from_int(o.kind), n_max);
  if (o.format == "csv") {
    out << "kind,n,pass\n";
    for (const auto& e : report) out << to_int(e.kind) << ',' << e.n << ',' << (e.pass ? "true" : "false") << '\n';
    return exit_ok;
  }
  emit_json(out, appell_to_json(report));
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized q-Bernoulli polynomials", "qbern"};
  app.require_subcommand(1);

  TableOptions poly_o, numbers_o;
  auto* poly = app.add_subcommand("poly", "B^{(k)}_{n,alpha}(z;q) for n = 0..N");
  add_table_options(poly, poly_o);
  auto* numbers = app.add_subcommand("numbers", "Bernoulli numbers B^{(k)}_{n,alpha}(0;q)");
  add_table_options(numbers, numbers_o);

  ContextOptions zeros_o;
  zeros_o.kind = 2;
  auto* zeros = app.add_subcommand("zeros", "smallest Bessel zero and the named q-trig zeros");
  add_context_options(zeros, zeros_o, 2);

  AsymptOptions asympt_o;
  asympt_o.ctx.kind = 2;
  asympt_o.ctx.format = "csv";
  auto* asympt = app.add_subcommand("asympt", "|B_n/leading - 1| diagnostic");
  add_context_options(asympt, asympt_o.ctx, 2);
  asympt->add_option("--z", asympt_o.z, "evaluation point, rational");
  asympt->add_option("--n-min", asympt_o.n_min, "first degree");
  asympt->add_option("--n-max", asympt_o.n_max, "last degree");

  ExpandOptions expand_o;
  auto* expand = app.add_subcommand("expand", "L-coefficients of a coefficient stream");
  add_context_options(expand, expand_o.ctx, 2);
  expand->add_option("--input", expand_o.input, "stream JSON file")->required();
  expand->add_option("--terms", expand_o.terms, "largest index N")->check(CLI::Range(0L, 500L));
  expand->add_option("--at", expand_o.at, "reconstruction point, rational");

  ContextOptions appell_o;
  long appell_n = 12;
  auto* appell = app.add_subcommand("appell", "q-Appell relation check");
  add_context_options(appell, appell_o, 1);
  appell->add_option("--n-max", appell_n, "largest degree")->check(CLI::Range(1L, 200L));

  std::vector<const char*> argv{"qbern"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*poly) return cmd_poly(poly_o, out);
    if (*numbers) return cmd_numbers(numbers_o, out);
    if (*zeros) return cmd_zeros(zeros_o, out);
    if (*asympt) return cmd_asympt(asympt_o, out, err);
    if (*expand) return cmd_expand(expand_o, out);
    if (*appell) return cmd_appell(appell_o, appell_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace qbern
