#include "ntv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "ntv/additive.hpp"
#include "ntv/bounds.hpp"
#include "ntv/checkpoints.hpp"
#include "ntv/errors.hpp"
#include "ntv/explicit_formula.hpp"
#include "ntv/quadrature.hpp"
#include "ntv/ramanujan.hpp"
#include "ntv/report.hpp"
#include "ntv/sieve.hpp"
#include "ntv/zeros.hpp"

namespace ntv::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Report plus the verdict behind the exit status.
struct Outcome {
  Report report;
  bool verified = true;
};

class Params {
 public:
  Params(const std::map<std::string, std::string>& m) : m_(m) {}
  bool has(const std::string& k) const { return m_.count(k) != 0; }
  bool flag(const std::string& k) const { return has(k) && m_.at(k) != "false"; }
  std::string str(const std::string& k, const std::string& def = "") const { return has(k) ? m_.at(k) : def; }
  std::string need(const std::string& k) const {
    if (!has(k)) throw UsageError("missing required --" + k);
    return m_.at(k);
  }
  double real(const std::string& k, double def) const { return has(k) ? parse_real(k, m_.at(k)) : def; }
  double real(const std::string& k) const { return parse_real(k, need(k)); }
  u64 integer(const std::string& k, u64 def) const { return has(k) ? parse_int(k, m_.at(k)) : def; }
  u64 integer(const std::string& k) const { return parse_int(k, need(k)); }

  static double parse_real(const std::string& k, const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw UsageError("--" + k + " expects a number, got '" + s + "'");
    return v;
  }
  // Plain digits, or a real literal such as 3.83e10 that is an exact integer.
  static u64 parse_int(const std::string& k, const std::string& s) {
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
        throw UsageError("--" + k + " out of range: " + s);
      }
    }
    const double v = parse_real(k, s);
    if (!(v >= 0) || v != std::floor(v) || v > 9.007199254740992e15) {
      throw UsageError("--" + k + " expects a non-negative integer, got '" + s + "'");
    }
    return static_cast<u64>(v);
  }

 private:
  const std::map<std::string, std::string>& m_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

SieveOptions sieve_options(const RunConfig& cfg, const Params& p) {
  SieveOptions o;
  o.threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  o.segment_size = p.integer("segment-size", o.segment_size);
  if (o.segment_size == 0) throw UsageError("--segment-size must be positive");
  return o;
}

ZeroTable zeros_from(const Params& p, std::ostream& err) {
  const std::string path = p.str("file", default_zero_table_path());
  err << "loading zeros from " << path << '\n';
  return load_zeros(path);
}

// ---- handlers ------------------------------------------------------------------

Outcome do_sieve(const RunConfig& cfg, const Params& p, std::ostream& err) {
  const u64 lo = p.integer("lo", 2), hi = p.integer("hi");
  if (lo > hi) throw UsageError("--lo must not exceed --hi");
  check_sieve_range(lo, hi);
  const SieveOptions opt = sieve_options(cfg, p);
  Outcome o;
  o.report.add("lo", lo);
  o.report.add("hi", hi);
  if (p.flag("list")) {
    if (hi - lo > 100000000) throw UsageError("--list is limited to ranges of 1e8 numbers");
    const PrimeTable t(lo, hi, opt);
    o.report.add("count", static_cast<u64>(t.primes().size()));
    o.report.columns = {"p"};
    for (u64 q : t.primes()) o.report.rows.push_back({q});
  } else {
    err << "sieving [" << lo << ", " << hi << "]\n";
    o.report.add("count", count_primes(lo, hi, opt));
  }
  return o;
}

Outcome do_checkpoints(const RunConfig& cfg, const Params& p, std::ostream& err) {
  Outcome o;
  CheckpointTable t;
  if (p.has("load")) {
    t = load_checkpoints(p.str("load"));
  } else {
    SpacingPlan plan;
    for (const auto& band : split(p.need("plan"), ',')) {
      const auto f = split(band, ':');
      if (f.size() != 3) throw UsageError("--plan bands are from:to:spacing, got '" + band + "'");
      plan.push_back({Params::parse_int("plan", f[0]), Params::parse_int("plan", f[1]), Params::parse_int("plan", f[2])});
    }
    validate_plan(plan);
    const std::string out = p.need("out");
    err << "building " << plan_points(plan).size() << " checkpoints\n";
    t = build_checkpoints(plan, sieve_options(cfg, p));
    t.save(out);
    o.report.add("saved", out);
  }
  o.report.add("points", static_cast<u64>(t.size()));
  o.report.add("min_x", t.min_x());
  o.report.add("max_x", t.max_x());
  if (p.has("query")) {
    const PiBounds b = t.pi_bounds(p.integer("query"));
    o.report.add("query", p.integer("query"));
    o.report.add("pi_lo", b.lo);
    o.report.add("pi_hi", b.hi);
  }
  return o;
}

Outcome do_zero_stats(const RunConfig&, const Params& p, std::ostream& err) {
  const std::string check = p.str("check", "all");
  if (check != "all" && check != "counting" && check != "window" && check != "inverse-square") {
    throw UsageError("--check must be counting, window, inverse-square or all");
  }
  const ZeroTable z = zeros_from(p, err);
  Outcome o;
  o.report.add("zeros", static_cast<u64>(z.size()));
  o.report.add("horizon", z.max_height());
  auto grid = [&](const std::string& name, const GridCheck& g) {
    o.report.add(name + "_points", g.points);
    o.report.add(name + "_violations", g.violations);
    o.report.add(name + "_min_margin", g.min_margin);
    if (!g.ok()) {
      o.report.add(name + "_first_violation", g.first_violation);
      o.verified = false;
    }
  };
  if (check == "all" || check == "counting") {
    grid("counting", check_counting_bound(z, p.real("lo", 20.0), p.real("hi", z.max_height())));
  }
  if (check == "all" || check == "window") {
    const double hi = p.real("hi", std::min(5000.0, z.max_height() - 1.01));
    grid("window", check_window_bound(z, std::max(50.0 + 1e-9, p.real("lo", 50.0)), hi));
  }
  if (check == "all" || check == "inverse-square") {
    const InverseSquareSum s = inverse_square_sum(z);
    o.report.add("inverse_square_lower", s.lower());
    o.report.add("inverse_square_upper", s.upper());
    o.report.add("contains_true_constant", s.brackets(inverse_square_target_true()));
    o.report.add("contains_stated_constant", s.brackets(inverse_square_target_stated()));
    if (!s.brackets(inverse_square_target_true())) o.verified = false;
  }
  return o;
}

Outcome do_psi_formula(const RunConfig& cfg, const Params& p, std::ostream& err) {
  const ZeroTable z = zeros_from(p, err);
  const double T = p.real("T", z.max_height());
  std::vector<double> xs;
  for (const auto& s : split(p.need("x"), ',')) xs.push_back(Params::parse_real("x", s));
  const SieveOptions opt = sieve_options(cfg, p);
  Outcome o;
  o.report.add("T", T);
  o.report.columns = {"x", "zeros_used", "exact_psi", "predicted_psi", "residual", "budget", "within"};
  for (double x : xs) {
    const FormulaEvaluation e = truncated_psi(x, T, z, opt);
    o.report.rows.push_back({e.x, static_cast<u64>(e.zeros_used), e.exact_psi, e.predicted_psi, e.residual,
                             e.error_budget, e.within_budget()});
    if (!e.within_budget()) o.verified = false;
  }
  return o;
}

SolverOptions solver_options(const Params& p) {
  SolverOptions s;
  s.points_per_decade = static_cast<int>(p.integer("points-per-decade", static_cast<u64>(s.points_per_decade)));
  if (s.points_per_decade < 10) throw UsageError("--points-per-decade must be at least 10");
  return s;
}

void add_solve(Report& r, const CubeSolveResult& s) {
  r.add("m", static_cast<std::int64_t>(s.m));
  r.add("A", s.A);
  r.add("c", s.c);
  r.add("k", s.k);
  r.add("y_star", s.y_star);
  r.add("loglog_n0", s.loglog_n0);
  r.add("verified", s.verified);
}

Outcome do_cube_bound(const RunConfig&, const Params& p, std::ostream&) {
  Outcome o;
  const CubeSolveResult s = solve_cubes(p.real("A", kRamareA), p.real("c", kFordC), p.real("k", 0.9359), solver_options(p));
  add_solve(o.report, s);
  o.verified = s.verified;
  return o;
}

Outcome do_mpower_bound(const RunConfig&, const Params& p, std::ostream& err) {
  Outcome o;
  const double A = p.real("A", kRamareA), c = p.real("c", kFordC);
  const SolverOptions so = solver_options(p);
  if (p.flag("table")) {
    const double tol = p.real("tolerance", 0.05);
    o.report.columns = {"m", "k", "loglog_n0", "published", "delta", "within_tolerance", "verified"};
    for (const MPowerRow& row : mpower_table()) {
      err << "solving m = " << row.m << '\n';
      const CubeSolveResult s = solve_mpowers(row.m, A, c, row.k, so);
      const double d = s.loglog_n0 - row.loglog_n0;
      const bool ok = std::fabs(d) <= tol && s.verified;
      o.report.rows.push_back({static_cast<std::int64_t>(row.m), row.k, s.loglog_n0, row.loglog_n0, d, std::fabs(d) <= tol, s.verified});
      o.verified = o.verified && ok;
    }
    o.report.add("tolerance", tol);
    o.report.add("all_n_threshold", solve_all_n());
  } else {
    const u64 m = p.integer("m");
    if (m < 3 || m > 1000000) throw UsageError("--m must lie in [3, 1e6]");
    const CubeSolveResult s = solve_mpowers(static_cast<int>(m), A, c, p.real("k"), so);
    add_solve(o.report, s);
    o.verified = s.verified;
  }
  return o;
}

Outcome do_cramer(const RunConfig&, const Params& p, std::ostream&) {
  Outcome o;
  const double a = cramer_argmin();
  o.report.add("argmin_alpha", a);
  o.report.add("min_value", cramer_term(a));
  o.report.add("four_over_pi", 4.0 / std::numbers::pi);
  const double alpha = p.real("alpha", 1e4);
  o.report.add("alpha", alpha);
  o.report.add("refined_c", cramer_refined_c(alpha));
  const double X = p.real("X", 1e4);
  if (!(X > 0)) throw UsageError("--X must be positive");
  o.report.add("X", X);
  o.report.add("sinc2_integral", static_cast<double>(sinc2_integral(X).value));
  return o;
}

Outcome do_ramanujan_uncond(const RunConfig&, const Params& p, std::ostream& err) {
  Outcome o;
  const UnconditionalResult r = ramanujan_unconditional(p.real("a", 3130.0));
  o.report.add("a", r.a);
  o.report.add("y_a", static_cast<std::int64_t>(r.y_a));
  o.report.add("M_a", r.M_a);
  o.report.add("m_a", r.m_a);
  o.report.add("y_a_prime_min", static_cast<std::int64_t>(r.y_a_prime_min));
  o.report.add("threshold_log_x", static_cast<std::int64_t>(r.threshold_y));
  if (p.has("mt-check")) {
    const u64 hi = p.integer("mt-check");
    err << "checking |theta(x) - x| <= x eps0(x) on [149, " << hi << "]\n";
    const MtCheck m = check_mt_epsilon0(hi);
    o.report.add("mt_primes_checked", m.primes_checked);
    o.report.add("mt_violations", m.violations);
    o.report.add("mt_max_ratio", m.max_ratio);
    if (!m.ok()) {
      o.report.add("mt_first_violation", m.first_violation);
      o.verified = false;
    }
  }
  return o;
}

Outcome do_ramanujan_verify(const RunConfig& cfg, const Params& p, std::ostream& err) {
  const u64 lo = p.integer("lo"), hi = p.integer("hi");
  if (lo < 3 || lo > hi) throw UsageError("need 3 <= --lo <= --hi");
  const SieveOptions opt = sieve_options(cfg, p);
  Outcome o;
  o.report.add("lo", lo);
  o.report.add("hi", hi);
  o.report.columns = {"x", "f_interval_lo", "f_interval_hi", "mode"};
  if (p.has("checkpoints") && p.flag("exact")) throw UsageError("--checkpoints and --exact are exclusive");
  if (p.has("checkpoints")) {
    const CheckpointTable t = load_checkpoints(p.str("checkpoints"));
    SteppingOptions so;
    so.self_heal = p.flag("self-heal");
    so.recheck_every = p.integer("recheck-every", so.recheck_every);
    so.sieve = opt;
    err << "stepping over [" << lo << ", " << hi << "]\n";
    const SteppingReport r = verify_range_stepping(lo, hi, t, so);
    o.report.add("mode", std::string("table-bracketed"));
    o.report.add("certified", r.certified);
    o.report.add("steps", r.steps);
    o.report.add("rechecks", r.rechecks);
    o.report.add("recheck_failures", r.recheck_failures);
    o.report.add("healed", r.healed);
    o.report.add("min_step", static_cast<double>(r.min_step));
    o.report.add("max_step", static_cast<double>(r.max_step));
    if (!r.certified) {
      o.verified = false;
      const u64 w = r.counterexample_at ? r.counterexample_at : r.indeterminate_at;
      if (w) {
        const RamanujanEval e = f_bracketed(w, t);
        o.report.add("witness", w);
        o.report.rows.push_back({w, static_cast<double>(e.f_lo), static_cast<double>(e.f_hi),
                                 std::string(r.counterexample_at ? "exact" : "table-bracketed")});
      }
    }
    const u64 samples = p.integer("samples", 0);
    for (u64 i = 0; samples > 1 && i < samples; ++i) {
      const u64 x = lo + (hi - lo) / (samples - 1) * i;
      const RamanujanEval e = f_bracketed(x, t);
      o.report.rows.push_back({x, static_cast<double>(e.f_lo), static_cast<double>(e.f_hi), std::string("table-bracketed")});
    }
  } else {
    err << "exact scan of [" << lo << ", " << hi << "]\n";
    const CounterexampleScan s = exhaustive_counterexample_scan(lo, hi, opt);
    o.report.add("mode", std::string("exact"));
    o.report.add("jump_points", s.jump_points);
    o.report.add("counterexamples", static_cast<u64>(s.counterexamples.size()));
    if (!s.counterexamples.empty()) {
      o.verified = false;
      o.report.add("largest_counterexample", s.counterexamples.back());
      u64 largest_prime = 0;
      for (auto it = s.counterexamples.rbegin(); it != s.counterexamples.rend(); ++it)
        if (is_prime(*it)) {
          largest_prime = *it;
          break;
        }
      o.report.add("largest_prime_counterexample", largest_prime);
      const u64 limit = p.integer("max-rows", 1000);
      const std::size_t n = s.counterexamples.size();
      for (std::size_t i = n > limit ? n - limit : 0; i < n; ++i) {
        const double f = static_cast<double>(s.f_values[i]);
        o.report.rows.push_back({s.counterexamples[i], f, f, std::string("exact")});
      }
    }
  }
  return o;
}

Outcome do_estermann(const RunConfig& cfg, const Params& p, std::ostream& err) {
  Outcome o;
  const unsigned lookback = static_cast<unsigned>(p.integer("lookback", 100));
  if (p.has("bound")) {
    const double n = p.real("bound"), A = p.real("A", 0.25);
    const double v = estermann_lower_bound(n, A);
    o.report.add("n", n);
    o.report.add("A", A);
    o.report.add("lower_bound", v);
    o.report.add("positive", v > 0);
    return o;
  }
  if (p.has("n")) {
    const Decomposition d = estermann_search(p.integer("n"), lookback);
    o.report.add("n", d.n);
    o.report.add("p", d.p);
    o.report.add("m", d.m);
    o.report.add("attempts", static_cast<u64>(d.attempts));
    return o;
  }
  const u64 lo = p.integer("lo", 3), hi = p.integer("hi");
  err << "decomposing every n in [" << lo << ", " << hi << "]\n";
  const EstermannScan s = estermann_scan(lo, hi, lookback, sieve_options(cfg, p));
  o.report.add("lo", s.lo);
  o.report.add("hi", s.hi);
  o.report.add("decomposed", s.decomposed);
  o.report.add("max_attempts", static_cast<u64>(s.max_attempts));
  o.report.add("argmax_attempts", s.argmax_attempts);
  o.report.add("exhausted", static_cast<u64>(s.exhausted.size()));
  o.report.add("summary", s.exhausted.empty()
                              ? "all decomposed, max attempts " + std::to_string(s.max_attempts)
                              : std::to_string(s.exhausted.size()) + " exhausted");
  if (!s.exhausted.empty()) {
    o.verified = false;
    o.report.columns = {"n", "tried_up_to"};
    for (u64 n : s.exhausted) o.report.rows.push_back({n, static_cast<u64>(lookback)});
  }
  return o;
}

Outcome do_erdos(const RunConfig&, const Params& p, std::ostream& err) {
  Outcome o;
  if (p.has("bound")) {
    const double n = p.real("bound"), c = p.real("c", 0.209), A = p.real("A", 0.0685);
    const double v = erdos_lower_bound(n, c, A);
    o.report.add("n", n);
    o.report.add("c", c);
    o.report.add("A", A);
    o.report.add("lower_bound", v);
    o.report.add("positive", v > 0);
    return o;
  }
  const u64 P = p.integer("P", 43), pmax = p.integer("p-max", 200);
  if (p.has("n")) {
    const Decomposition d = erdos_search(p.integer("n"), pmax);
    o.report.add("n", d.n);
    o.report.add("p", d.p);
    o.report.add("m", d.m);
    o.report.add("attempts", static_cast<u64>(d.attempts));
    return o;
  }
  const u64 lo = p.integer("lo", 10), hi = p.integer("hi");
  const u64 W = p.integer("window", u64{1} << 24);
  err << "scanning [" << lo << ", " << hi << "] with P = " << P << '\n';
  const ErdosScan s = erdos_scan(lo, hi, W, P, pmax);
  o.report.add("lo", s.lo);
  o.report.add("hi", s.hi);
  o.report.add("checked", s.checked);
  o.report.add("rejected_at_P", static_cast<u64>(s.rejected.size()));
  o.report.add("escalated", static_cast<u64>(s.escalated.size()));
  o.report.add("unresolved", static_cast<u64>(s.unresolved.size()));
  o.report.add("max_p", s.max_p);
  o.report.columns = {"n", "tried_up_to", "resolved_p"};
  for (const auto& [n, q] : s.escalated) o.report.rows.push_back({n, P, q});
  for (u64 n : s.unresolved) o.report.rows.push_back({n, pmax, u64{0}});
  o.verified = s.unresolved.empty();
  return o;
}

using Handler = std::function<Outcome(const RunConfig&, const Params&, std::ostream&)>;

struct Command {
  std::string name;
  Handler handler;
  std::vector<ParamSpec> params;
};

const std::vector<Command>& commands() {
  static const ParamSpec seg{"segment-size", "numbers per sieve segment"};
  static const ParamSpec zfile{"file", "zero table (default: $NTVERIFY_ZEROS or the shipped table)"};
  static const std::vector<Command> cmds = {
      {"sieve", do_sieve, {{"lo", "range start (default 2)"}, {"hi", "range end"}, {"list", "emit every prime", true}, seg}},
      {"checkpoints", do_checkpoints,
       {{"plan", "bands from:to:spacing[,...]"}, {"out", "output CSV"}, {"load", "validate an existing table"},
        {"query", "bracket pi at this x"}, seg}},
      {"zero-stats", do_zero_stats,
       {zfile, {"check", "counting | window | inverse-square | all"}, {"lo", "grid start"}, {"hi", "grid end"}}},
      {"psi-formula", do_psi_formula, {zfile, {"x", "comma-separated x values"}, {"T", "truncation height (default horizon)"}, seg}},
      {"cube-bound", do_cube_bound,
       {{"A", "zero-density constant"}, {"c", "zero-free region constant"}, {"k", "exponent"},
        {"points-per-decade", "grid density"}}},
      {"mpower-bound", do_mpower_bound,
       {{"m", "power"}, {"k", "exponent"}, {"A", "zero-density constant"}, {"c", "zero-free region constant"},
        {"table", "reproduce the published m-power table", true}, {"tolerance", "allowed |delta| (default 0.05)"},
        {"points-per-decade", "grid density"}}},
      {"cramer", do_cramer, {{"alpha", "alpha for the refined constant (default 1e4)"}, {"X", "upper limit for the sinc^2 integral"}}},
      {"ramanujan-uncond", do_ramanujan_uncond, {{"a", "parameter a of the threshold inequality (default 3130)"}, {"mt-check", "check eps0 against theta on [149, N]"}}},
      {"ramanujan-verify", do_ramanujan_verify,
       {{"lo", "range start"}, {"hi", "range end"}, {"checkpoints", "checkpoint CSV for stepping"},
        {"exact", "exact sieve scan (default without --checkpoints)", true},
        {"self-heal", "settle indeterminate steps by local sieving", true},
        {"recheck-every", "exact midpoint re-check period"}, {"samples", "emit this many bracketed f values"},
        {"max-rows", "cap on emitted counterexample rows (default 1000)"}, seg}},
      {"estermann", do_estermann,
       {{"lo", "range start (default 3)"}, {"hi", "range end"}, {"n", "decompose a single n"},
        {"lookback", "primes tried per n (default 100)"}, {"bound", "evaluate the analytic lower bound at n"},
        {"A", "split exponent for --bound (default 0.25)"}, seg}},
      {"erdos", do_erdos,
       {{"lo", "range start (default 10)"}, {"hi", "range end"}, {"n", "decompose a single n"},
        {"window", "sieve width (default 2^24)"}, {"P", "largest prime in the sieve pass (default 43)"},
        {"p-max", "largest prime in the escalation pass (default 200)"},
        {"bound", "evaluate the analytic lower bound at n"}, {"c", "exponent for --bound"}, {"A", "ratio for --bound"}}},
  };
  return cmds;
}

const Command* find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : commands()) v.push_back(c.name);
    return v;
  }();
  return names;
}

const std::vector<ParamSpec>& params_for(const std::string& subcommand) {
  static const std::vector<ParamSpec> none;
  const Command* c = find_command(subcommand);
  return c ? c->params : none;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Command* cmd = find_command(cfg.subcommand);
  if (!cmd) {
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return 2;
  }
  for (const auto& [k, v] : cfg.params) {
    const bool known = std::any_of(cmd->params.begin(), cmd->params.end(), [&](const ParamSpec& s) { return s.name == k; });
    if (!known) {
      err << "error: " << cfg.subcommand << " does not take --" << k << '\n';
      return 2;
    }
  }
  Outcome o;
  try {
    o = cmd->handler(cfg, Params(cfg.params), err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory; narrow the range\n";
    return 2;
  }
  o.report.command = cfg.subcommand;
  o.report.add("status", std::string(o.verified ? "verified" : "failed"));

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output_path) {
    file.open(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *cfg.output_path << " for writing\n";
      return 2;
    }
    sink = &file;
  }
  if (cfg.format == Format::json) write_json(o.report, *sink);
  else write_csv(o.report, *sink);
  sink->flush();
  if (!*sink) {
    err << "error: writing the report failed\n";
    return 2;
  }
  return o.verified ? 0 : 1;
}

}  // namespace ntv::cli
