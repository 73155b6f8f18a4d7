#include "bolalg/cli.hpp"

#include "bolalg/classification.hpp"
#include "bolalg/displays.hpp"
#include "bolalg/loop.hpp"
#include "bolalg/report.hpp"
#include "bolalg/specfile.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace bolalg {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

int worker_threads() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("BOLALG_THREADS")) {
    try {
      n = std::clamp(std::stoi(cap), 1, n);
    } catch (const std::exception&) {
      throw UsageError("BOLALG_THREADS must be a positive integer");
    }
  }
  return n;
}

struct Stopwatch {
  using clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, double>> laps;
  template <class F>
  auto time(const std::string& name, F&& f) {
    const auto t0 = clock::now();
    auto result = f();
    laps.emplace_back(name, std::chrono::duration<double>(clock::now() - t0).count());
    return result;
  }
};

// ---------------------------------------------------------------------------
// option blocks

struct ParamOptions {
  std::string sign = "minus";
  std::string x = "0", y = "0", z = "0";

  void add(CLI::App* cmd) {
    cmd->add_option("--sign", sign, "minus or plus")->required();
    cmd->add_option("--x", x, "rational p/q")->required();
    cmd->add_option("--y", y, "rational p/q")->required();
    cmd->add_option("--z", z, "rational p/q")->required();
  }
  SubalgebraParams resolve() const {
    try {
      return {parse_sign(sign), parse_rational(x), parse_rational(y), parse_rational(z)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

std::string canonical(const SubalgebraParams& s) {
  return "sign=" + to_string(s.sign) + "\nx=" + format_rational(s.x) + "\ny=" +
         format_rational(s.y) + "\nz=" + format_rational(s.z) + "\n";
}

struct ChartOptions {
  std::string chart;
  double y = 0.0;

  void add(CLI::App* cmd) {
    cmd->add_option("--chart", chart, "minus1, minus2, plus1 or plus2")->required();
    cmd->add_option("--y", y, "y of the case-2 charts (>= 0)");
  }
  LoopChart resolve() const {
    try {
      return LoopChart::parse(chart, y);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

std::string canonical(const LoopChart& c) { return "chart=" + c.name() + "\n"; }

std::string witness_text(const AutoParams& p) {
  return "b=" + format_rational(p.b) + " f=" + format_rational(p.f) +
         " d=" + format_rational(p.d) + " eps=" + (p.eps > 0 ? "+1" : "-1");
}

// ---------------------------------------------------------------------------
// commands

RunReport run_verify(const std::string& path, Stopwatch& sw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  RunReport r;
  r.command = "verify";
  r.inputs_digest = digest_hex(text);
  Algebra alg;
  try {
    alg = parse_algebra(text);
  } catch (const SpecError& e) {
    throw UsageError(path + ": " + e.what());
  }
  r.metric("label", alg.label);
  r.metric("dim", std::to_string(alg.dim));

  auto failures_text = [](const std::vector<AxiomFailure>& fs) {
    std::string s;
    for (std::size_t n = 0; n < std::min<std::size_t>(fs.size(), 3); ++n) {
      s += (n ? "; " : "") + fs[n].identity + " at (";
      for (std::size_t k = 0; k < fs[n].indices.size(); ++k)
        s += (k ? "," : "") + std::to_string(fs[n].indices[k] + 1);
      s += ")";
    }
    if (fs.size() > 3) s += "; ... " + std::to_string(fs.size()) + " in total";
    return s;
  };

  sw.time("checks", [&] {
    if (alg.trilinear.empty() && !alg.bilinear.empty()) {
      LieAlgebra g(alg.dim, alg.label);
      g.bracket = alg.bilinear;
      const LieReport lie = check_lie(g);
      r.verdict("antisymmetry", lie.antisymmetry);
      r.verdict("jacobi", lie.jacobi, failures_text(lie.failures));
    } else if (alg.bilinear.empty()) {
      const LtsReport lts = check_lts(alg);
      r.verdict("lts-skew", lts.skew12);
      r.verdict("lts-cyclic", lts.cyclic);
      r.verdict("lts-derivation", lts.derivation, failures_text(lts.failures));
    } else {
      const BolReport bol = check_bol(alg);
      r.verdict("bilinear-skew", bol.bilinear_skew);
      r.verdict("trilinear-skew", bol.lts.skew12);
      r.verdict("cyclic", bol.lts.cyclic);
      r.verdict("derivation", bol.lts.derivation);
      r.verdict("bol-identity", bol.identity2, failures_text(bol.failures));
    }
    return 0;
  });
  return r;
}

RunReport run_classify(const SubalgebraParams& s, Stopwatch& sw) {
  RunReport r;
  r.command = "classify";
  r.inputs_digest = digest_hex(canonical(s));
  const IsoResult res = sw.time("canonical-form", [&] { return canonical_form_iso(s); });
  const SubalgebraParams rep = representative(res.label);
  r.metric("input", family_label(s));
  r.metric("class", res.label.name());
  r.metric("representative", family_label(rep));
  r.metric("witness", witness_text(res.witness));
  r.verdict("witness-maps-to-representative", action_on_params(res.witness, s) == rep);
  r.verdict("witness-is-morphism",
            is_morphism(auto_matrix(res.witness, s.sign), family_bol(s), family_bol(rep)));
  if (res.label.kind == ClassKind::iso_xcase)
    r.findings.push_back(missing_xcase_finding(s.sign == Sign::minus));
  return r;
}

RunReport run_isotopy(const SubalgebraParams& s, Stopwatch& sw) {
  RunReport r;
  r.command = "isotopy-classify";
  r.inputs_digest = digest_hex(canonical(s));
  const ClassLabel label = canonical_form_isotopy(s);
  r.metric("input", family_label(s));
  r.metric("class", label.name());
  const auto reached =
      sw.time("orbit-search", [&] { return orbit_search(to_double(s), default_orbit_grid()); });
  std::string names;
  for (ClassKind k : reached) names += (names.empty() ? "" : " ") + to_string(k, s.sign);
  r.metric("orbit-reaches", names.empty() ? "-" : names);
  r.verdict("orbit-search-reaches-class", reached.count(label.kind) > 0);

  // the reference lists keep these as separate classes
  if (s.sign == Sign::minus && (label.kind == ClassKind::isotopy_e2 ||
                                label.kind == ClassKind::isotopy_e1e2))
    r.findings.push_back({"isotopy-list-minus", "isotopy classes, minus type",
                          "-e2 and -e1 - e2 are already isomorphic (b = 1, f = 0, d = 1)"});
  if (s.sign == Sign::plus && reached.count(ClassKind::isotopy_e2) &&
      reached.count(ClassKind::isotopy_trivial))
    r.findings.push_back({"isotopy-list-plus", "isotopy classes, plus type",
                          "+e2 is isotopic to the trivial product"});
  return r;
}

RunReport run_envelope(const SubalgebraParams& s, Stopwatch& sw) {
  RunReport r;
  r.command = "envelope";
  r.inputs_digest = digest_hex(canonical(s));
  const EnvelopingPair pair = subalgebra_pair(s);
  const EnvelopingReport env = sw.time("checks", [&] { return check_enveloping(pair); });
  r.metric("lie-algebra", pair.G.label);
  r.metric("derived-dimension", std::to_string(derived_dimension(pair)));
  r.verdict("g-is-lie", check_lie(pair.G).ok());
  r.verdict("direct-sum", env.direct_sum);
  r.verdict("h-subalgebra", env.h_subalgebra);
  r.verdict("bol-condition", env.bol_condition);
  r.verdict("induced-equals-family", induced_bol(pair) == family_bol(s));
  r.verdict("induced-is-bol", check_bol(induced_bol(pair)).ok());
  return r;
}

RunReport run_bol_check(const LoopChart& chart, int samples, std::uint64_t seed, double radius,
                        Stopwatch& sw) {
  RunReport r;
  r.command = "bol-check";
  r.inputs_digest = digest_hex(canonical(chart) + "samples=" + std::to_string(samples) +
                               "\nseed=" + std::to_string(seed) + "\nradius=" + fmt(radius, "%.17g") + "\n");
  const int threads = worker_threads();
  const BolStatistics st =
      sw.time("left-bol", [&] { return bol_statistics(chart, samples, seed, radius, threads); });
  LoopChart control = chart;
  control.side = CosetSide::right;
  const BolStatistics ct =
      sw.time("control", [&] { return bol_statistics(control, samples, seed, radius, threads); });
  r.metric("chart", chart.name());
  r.metric("samples", std::to_string(st.samples));
  r.metric("radius", fmt(radius));
  r.metric("max_residual", fmt(st.max_residual, "%.3e"));
  r.metric("mean_residual", fmt(st.mean_residual, "%.3e"));
  r.metric("median_residual", fmt(st.median_residual, "%.3e"));
  r.metric("control_max_residual", fmt(ct.max_residual, "%.3e"));
  r.verdict("left-bol", st.max_residual < 1e-8, "max residual < 1e-8");
  r.verdict("control-detected", ct.max_residual > 1e-3, "right-coset control > 1e-3");
  return r;
}

RunReport run_tangent_check(const LoopChart& chart, double eps, Stopwatch& sw) {
  RunReport r;
  r.command = "tangent-check";
  r.inputs_digest = digest_hex(canonical(chart) + "eps=" + fmt(eps, "%.17g") + "\n");
  double worst = 0.0, worst_order = std::numeric_limits<double>::infinity();
  sw.time("tangent", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const LoopPoint xi = LoopPoint::Unit(i), eta = LoopPoint::Unit(j);
        const LoopPoint exact = exact_bilinear(chart, xi, eta);
        const double coarse = (tangent_bilinear(chart, xi, eta, 2 * eps) - exact).lpNorm<Eigen::Infinity>();
        const double fine = (tangent_bilinear(chart, xi, eta, eps) - exact).lpNorm<Eigen::Infinity>();
        worst = std::max(worst, fine);
        // below 1e-8 the estimate is exact up to rounding
        if (coarse > 1e-8) worst_order = std::min(worst_order, std::log2(coarse / fine));
      }
    return 0;
  });
  r.metric("chart", chart.name());
  r.metric("eps", fmt(eps));
  r.metric("max_error", fmt(worst, "%.3e"));
  r.metric("min_observed_order", std::isfinite(worst_order) ? fmt(worst_order, "%.3f") : "exact");
  r.verdict("error-below-1e-3", worst < 1e-3);
  r.verdict("order-at-least-1", !(worst_order < 1.0), "log2 of the error ratio under halving");
  return r;
}

RunReport run_web_sample(const LoopChart& chart, int grid, double radius, const std::string& path,
                         std::ostream& out, Stopwatch& sw) {
  RunReport r;
  r.command = "web-sample";
  r.inputs_digest = digest_hex(canonical(chart) + "grid=" + std::to_string(grid) +
                               "\nradius=" + fmt(radius, "%.17g") + "\n");
  const auto rows = sw.time("sample", [&] { return sample_web(chart, {grid, radius}); });
  if (path == "-") {
    write_web_csv(rows, out);
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    write_web_csv(rows, file);
  }
  r.metric("chart", chart.name());
  r.metric("rows", std::to_string(rows.size()));
  r.metric("out", path);
  r.verdict("all-finite", std::all_of(rows.begin(), rows.end(),
                                      [](const WebRow& w) { return w.ab.allFinite(); }));
  return r;
}

RunReport run_audit(int samples, std::uint64_t seed, Stopwatch& sw) {
  RunReport r;
  r.command = "audit";
  r.inputs_digest = digest_hex("samples=" + std::to_string(samples) + "\nseed=" + std::to_string(seed) + "\n");
  const auto audits = sw.time("audit", [&] { return audit_displays({seed, samples}); });
  r.findings = findings_from(audits);
  int matched = 0;
  for (const DisplayAudit& a : audits) {
    matched += a.matched;
    r.metric(a.id, a.matched ? "matched (" + fmt(a.deviation, "%.2e") + ")" : "finding");
  }
  r.verdict("every-display-matched-or-logged",
            static_cast<std::size_t>(matched) + r.findings.size() == audits.size());
  r.metric("displays", std::to_string(audits.size()));
  r.metric("matched", std::to_string(matched));
  return r;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bol algebras of the Type V family, their loops and classifications", "bolalg"};
  app.require_subcommand(1);
  std::string format = "text";
  bool timings = false;
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timings", timings, "include wall-clock timings (not deterministic)");
  app.fallthrough();

  std::string spec_path;
  auto* verify = app.add_subcommand("verify", "check the axioms of an algebra file");
  verify->add_option("file", spec_path, "algebra file")->required();

  ParamOptions fam_opts, cls_opts, iso_opts, env_opts;
  std::string fam_out = "-";
  auto* family = app.add_subcommand("family", "emit the algebra file of one family member");
  fam_opts.add(family);
  family->add_option("--out", fam_out, "output path, - for stdout");
  auto* classify = app.add_subcommand("classify", "isomorphism class and witness");
  cls_opts.add(classify);
  auto* isotopy = app.add_subcommand("isotopy-classify", "isotopy class with orbit evidence");
  iso_opts.add(isotopy);
  auto* env = app.add_subcommand("envelope", "check the pair (g4, h) and the induced algebra");
  env_opts.add(env);

  ChartOptions bol_chart, tan_chart, web_chart;
  int samples = 1000;
  std::uint64_t seed = 42;
  double radius = 0.1;
  auto* bol = app.add_subcommand("bol-check", "left Bol residuals on random triples");
  bol_chart.add(bol);
  bol->add_option("--samples", samples, "number of triples")->capture_default_str();
  bol->add_option("--seed", seed, "PRNG seed (mt19937_64)")->capture_default_str();
  bol->add_option("--radius", radius, "coordinate bound of the samples")->capture_default_str();

  double eps = 1e-3;
  auto* tangent = app.add_subcommand("tangent-check", "recover e_i . e_j from the loop");
  tan_chart.add(tangent);
  tangent->add_option("--eps", eps, "finite-difference step")->capture_default_str();

  int grid = 3;
  double web_radius = 0.2;
  std::string web_out = "-";
  auto* web = app.add_subcommand("web-sample", "tabulate the loop law on a grid, as CSV");
  web_chart.add(web);
  web->add_option("--grid", grid, "points per axis")->capture_default_str();
  web->add_option("--radius", web_radius, "grid half-width")->capture_default_str();
  web->add_option("--out", web_out, "CSV path, - for stdout")->capture_default_str();

  int audit_samples = 500;
  std::uint64_t audit_seed = 1;
  auto* audit = app.add_subcommand("audit", "compare the literal closed forms with the computation");
  audit->add_option("--samples", audit_samples, "pairs per chart")->capture_default_str();
  audit->add_option("--seed", audit_seed, "PRNG seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  Stopwatch sw;
  RunReport report;
  try {
    if (verify->parsed()) {
      report = run_verify(spec_path, sw);
    } else if (family->parsed()) {
      const SubalgebraParams s = fam_opts.resolve();
      const std::string text = emit_algebra_file(to_file(family_bol(s)));
      if (fam_out == "-") {
        out << text;
        return exit_pass;
      }
      std::ofstream file(fam_out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + fam_out + "'");
      file << text;
      report.command = "family";
      report.inputs_digest = digest_hex(canonical(s));
      report.metric("label", family_label(s));
      report.metric("out", fam_out);
    } else if (classify->parsed()) {
      report = run_classify(cls_opts.resolve(), sw);
    } else if (isotopy->parsed()) {
      report = run_isotopy(iso_opts.resolve(), sw);
    } else if (env->parsed()) {
      report = run_envelope(env_opts.resolve(), sw);
    } else if (bol->parsed()) {
      if (samples < 1) throw UsageError("--samples must be at least 1");
      if (!(radius > 0 && radius <= 0.5)) throw UsageError("--radius must lie in (0, 0.5]");
      report = run_bol_check(bol_chart.resolve(), samples, seed, radius, sw);
    } else if (tangent->parsed()) {
      if (!(eps >= 1e-4 && eps <= 5e-2)) throw UsageError("--eps must lie in [1e-4, 5e-2]");
      report = run_tangent_check(tan_chart.resolve(), eps, sw);
    } else if (web->parsed()) {
      if (grid < 1 || grid > 21) throw UsageError("--grid must lie in [1, 21]");
      if (!(web_radius > 0 && web_radius <= 0.5)) throw UsageError("--radius must lie in (0, 0.5]");
      report = run_web_sample(web_chart.resolve(), grid, web_radius, web_out, out, sw);
      if (web_out == "-") {
        err << emit_report(report, format == "json" ? ReportFormat::json : ReportFormat::text);
        return report.passed() ? exit_pass : exit_failure;
      }
    } else if (audit->parsed()) {
      if (audit_samples < 10) throw UsageError("--samples must be at least 10");
      report = run_audit(audit_samples, audit_seed, sw);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }

  if (timings) report.timings = sw.laps;
  out << emit_report(report, format == "json" ? ReportFormat::json : ReportFormat::text);
  return report.passed() ? exit_pass : exit_failure;
}

}  // namespace bolalg
