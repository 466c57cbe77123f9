// Copyright 2026 The parabose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "parabose/error.hpp"
#include "parabose/fock.hpp"
#include "parabose/matelem.hpp"
#include "parabose/series.hpp"
#include "parabose/verify.hpp"
#include "parabose/wigner.hpp"

#ifndef PARABOSE_GIT_DESCRIBE
#define PARABOSE_GIT_DESCRIBE "unknown"
#endif

namespace parabose::cli {

namespace {

using nlohmann::ordered_json;

// Thrown from command bodies; run() turns it into an exit code.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw Failure{code, std::move(message)};
}

std::optional<double> parse_plain(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // strtod accepts forms from_chars rejects (leading '+').
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  return v;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json tolerances_json(const SeriesControl& ctl) {
  return {{"rel_tol", ctl.rel_tol},
          {"small_streak", ctl.small_streak},
          {"max_terms", ctl.max_terms}};
}

ordered_json manifest(std::string command, ordered_json flags,
                      ordered_json tolerances) {
  ordered_json m;
  m["command"] = std::move(command);
  m["flags"] = std::move(flags);
  m["tolerances"] = std::move(tolerances);
  m["created_at"] = utc_timestamp();
  m["git_describe"] = PARABOSE_GIT_DESCRIBE;
  return m;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(kIoError, "cannot open " + path.string() + " for writing");
  f << text;
  f.flush();
  if (!f) fail(kIoError, "write to " + path.string() + " failed");
}

ParaParam parse_a(const std::string& text) {
  const auto v = parse_number(text);
  if (!v) fail(kUsage, "--a: cannot parse '" + text + "'");
  if (!(*v > 0.0)) fail(kUsage, "--a must be positive");
  return ParaParam(*v);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kNotGuaranteedConvergence:
      return kGuardRefusal;
    case ErrorCode::kInvalidParameters:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kOutOfSupportedRange:
    case ErrorCode::kTruncationTooSmall:
      return kUsage;
    case ErrorCode::kQuadratureDidNotConverge:
      return kVerificationFailure;
  }
  return kUsage;
}

// Evaluates f(i) for i in [0, count) on `jobs` threads. Each slot is written
// by exactly one worker, so the output does not depend on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int jobs,
                            const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct Row {
  double r = 0.0;
  double p = 0.0;
  double q = 0.0;
  EvalResult w;
};

std::string csv_rows(const std::vector<Row>& rows) {
  std::string s = "r,p,q,W,terms_used,est_error,status\n";
  for (const Row& row : rows) {
    s += format_g17(row.r) + ',' + format_g17(row.p) + ',' +
         format_g17(row.q) + ',' + format_g17(row.w.value) + ',' +
         std::to_string(row.w.terms_used) + ',' + format_g17(row.w.est_error) +
         ',' + std::string(to_string(row.w.status)) + '\n';
  }
  return s;
}

std::vector<Row> evaluate_grid(int n, ParaParam a, Formula formula,
                               const SeriesControl& ctl, bool allow,
                               const GridSpec& grid, int jobs) {
  const auto pts = grid_points(grid);
  return parallel_map<Row>(pts.size(), jobs, [&](std::size_t i) {
    WignerQuery query;
    query.n = n;
    query.a = a;
    query.point = {pts[i].first, pts[i].second};
    query.formula = formula;
    query.ctl = ctl;
    query.allow_unguaranteed = allow;
    Row row;
    row.p = pts[i].first;
    row.q = pts[i].second;
    row.r = grid.mode == GridMode::kRadial ? row.p : std::hypot(row.p, row.q);
    row.w = wn(query);
    return row;
  });
}

ordered_json status_counts(const std::vector<Row>& rows) {
  ordered_json counts = {{"Exact", 0}, {"Converged", 0}, {"NotGuaranteed", 0}};
  for (const Row& row : rows) {
    auto& c = counts[std::string(to_string(row.w.status))];
    c = c.get<int>() + 1;
  }
  return counts;
}

// ---- wigner ---------------------------------------------------------------

struct WignerFlags {
  int n = 0;
  std::string a;
  std::string formula = "a29";
  std::string grid = "radial";
  double r_max = 4.0;
  int points = 65;
  std::string p_range = "-4,4";
  std::string q_range = "-4,4";
  bool allow_unguaranteed = false;
  double tol = SeriesControl{}.rel_tol;
  int max_terms = SeriesControl{}.max_terms;
  std::string out;
  int jobs = 1;
};

void add_wigner(CLI::App& app, WignerFlags& f) {
  auto* c = app.add_subcommand("wigner", "Evaluate W_n on a grid (CSV)");
  c->add_option("--n", f.n, "State index")->required()->check(CLI::NonNegativeNumber);
  c->add_option("--a", f.a, "Representation parameter, e.g. 1.3 or 3/2")->required();
  c->add_option("--formula", f.formula)
      ->check(CLI::IsMember({"a29", "a31", "w0m"}))
      ->capture_default_str();
  c->add_option("--grid", f.grid)
      ->check(CLI::IsMember({"radial", "cartesian"}))
      ->capture_default_str();
  c->add_option("--rmax", f.r_max, "Radial grid upper bound")->capture_default_str();
  c->add_option("--points", f.points, "Points (per axis for cartesian)")
      ->capture_default_str();
  c->add_option("--prange", f.p_range, "lo,hi")->capture_default_str();
  c->add_option("--qrange", f.q_range, "lo,hi")->capture_default_str();
  c->add_flag("--allow-unguaranteed", f.allow_unguaranteed,
              "Evaluate series whose convergence is not established");
  c->add_option("--tol", f.tol, "Relative stop tolerance")->capture_default_str();
  c->add_option("--max-terms", f.max_terms)->capture_default_str();
  c->add_option("--out", f.out, "CSV path; a manifest is written next to it");
  c->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber)->capture_default_str();
}

GridSpec grid_from(const std::string& mode, double r_max, int points,
                   const std::string& p_range, const std::string& q_range) {
  GridSpec g;
  g.mode = mode == "cartesian" ? GridMode::kCartesian : GridMode::kRadial;
  g.r_max = r_max;
  g.points = points;
  const auto pr = parse_range(p_range);
  const auto qr = parse_range(q_range);
  if (!pr) fail(kUsage, "--prange: expected lo,hi");
  if (!qr) fail(kUsage, "--qrange: expected lo,hi");
  g.p_range = *pr;
  g.q_range = *qr;
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
  return g;
}

int cmd_wigner(const WignerFlags& f, std::ostream& out, std::ostream& err) {
  const ParaParam a = parse_a(f.a);
  const GridSpec grid = grid_from(f.grid, f.r_max, f.points, f.p_range, f.q_range);
  SeriesControl ctl;
  ctl.rel_tol = f.tol;
  ctl.max_terms = f.max_terms;
  const Formula formula = f.formula == "a31"   ? Formula::kA31
                          : f.formula == "w0m" ? Formula::kW0M
                                               : Formula::kA29;

  if (!f.allow_unguaranteed &&
      convergence_guard(f.n, a) == Status::kNotGuaranteed) {
    fail(kGuardRefusal,
         "convergence of the series is not established for n=" +
             std::to_string(f.n) + ", a=" + format_g17(a.value()) +
             "; pass --allow-unguaranteed to evaluate anyway");
  }

  const auto rows =
      evaluate_grid(f.n, a, formula, ctl, f.allow_unguaranteed, grid, f.jobs);
  if (!f.allow_unguaranteed) {
    for (const Row& row : rows) {
      if (row.w.status == Status::kNotGuaranteed) {
        fail(kGuardRefusal, "series did not settle at r=" + format_g17(row.r) +
                                " within --max-terms (raise it or loosen --tol), or pass "
                                "--allow-unguaranteed "
                                "to emit it anyway");
      }
    }
  }

  const std::string csv = csv_rows(rows);
  if (f.out.empty()) {
    out << csv;
    return kOk;
  }
  write_file(f.out, csv);
  ordered_json flags = {{"n", f.n},
                        {"a", f.a},
                        {"a_value", a.value()},
                        {"formula", f.formula},
                        {"grid", f.grid},
                        {"points", f.points},
                        {"allow_unguaranteed", f.allow_unguaranteed},
                        {"jobs", f.jobs}};
  if (grid.mode == GridMode::kRadial) {
    flags["rmax"] = f.r_max;
  } else {
    flags["prange"] = {grid.p_range.first, grid.p_range.second};
    flags["qrange"] = {grid.q_range.first, grid.q_range.second};
  }
  ordered_json m = manifest("wigner", flags, tolerances_json(ctl));
  m["outputs"] = {f.out};
  m["status_counts"] = status_counts(rows);
  write_file(f.out + ".manifest.json", m.dump(2) + "\n");
  err << "wrote " << f.out << "\n";
  return kOk;
}

// ---- figures --------------------------------------------------------------

struct FigureFlags {
  std::string which = "both";
  std::string out = "figures";
  int points = 81;
  int jobs = 1;
};

void add_figures(CLI::App& app, FigureFlags& f) {
  auto* c = app.add_subcommand("figures", "Write the radial series behind figures 1 and 2");
  c->add_option("--which", f.which)
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();
  c->add_option("--out", f.out, "Output directory")->capture_default_str();
  c->add_option("--points", f.points, "Radial points on [0, 4]")->capture_default_str();
  c->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber)->capture_default_str();
}

struct Series {
  int figure;
  int n;
  int two_a;  // a = two_a / 2
};

std::string series_file(const Series& s) {
  return "figure" + std::to_string(s.figure) + "_n" + std::to_string(s.n) +
         "_a" + std::to_string(s.two_a) + "_2.csv";
}

int cmd_figures(const FigureFlags& f, std::ostream& err) {
  std::vector<Series> series;
  if (f.which != "2") {
    for (int two_a : {1, 3, 5, 7}) series.push_back({1, 0, two_a});
  }
  if (f.which != "1") {
    for (int n : {0, 1, 2, 3}) series.push_back({2, n, 3});
  }
  GridSpec grid;
  grid.r_max = 4.0;
  grid.points = f.points;
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }

  const std::filesystem::path dir(f.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    fail(kIoError, "cannot create directory " + dir.string());
  }

  const SeriesControl ctl;
  ordered_json listing = ordered_json::array();
  for (const Series& s : series) {
    const ParaParam a = ParaParam::half_integer((s.two_a - 1) / 2);
    const auto rows = evaluate_grid(s.n, a, Formula::kA29, ctl, false, grid, f.jobs);
    const std::string name = series_file(s);
    write_file(dir / name, csv_rows(rows));
    listing.push_back({{"file", name},
                       {"figure", s.figure},
                       {"n", s.n},
                       {"a", std::to_string(s.two_a) + "/2"},
                       {"status_counts", status_counts(rows)}});
  }
  ordered_json m = manifest(
      "figures",
      {{"which", f.which}, {"out", f.out}, {"points", f.points}, {"rmax", 4.0},
       {"jobs", f.jobs}, {"allow_unguaranteed", false}},
      tolerances_json(ctl));
  m["series"] = std::move(listing);
  write_file(dir / "figures.manifest.json", m.dump(2) + "\n");
  err << "wrote " << series.size() << " series to " << dir.string() << "\n";
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::string suite = "all";
  std::string out;
};

void add_verify(CLI::App& app, VerifyFlags& f) {
  auto* c = app.add_subcommand("verify", "Run invariant suites (JSON report)");
  c->add_option("--suite", f.suite)
      ->check(CLI::IsMember({"all", "specfun", "matelem", "wigner", "oracle"}))
      ->capture_default_str();
  c->add_option("--out", f.out, "Also write the report and a manifest here");
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const auto suite = verify::parse_suite(f.suite);
  if (!suite) fail(kUsage, "unknown suite " + f.suite);
  const auto results = verify::run_suite(*suite);

  bool all_passed = true;
  ordered_json checks = ordered_json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    ordered_json c = {{"name", r.name},
                      {"status", r.passed ? "pass" : "fail"},
                      {"max_error", r.max_error},
                      {"tolerance", r.tolerance}};
    if (!std::isfinite(r.max_error)) c["max_error"] = format_g17(r.max_error);
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  ordered_json report = {{"suite", f.suite},
                         {"passed", all_passed},
                         {"checks", checks}};
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!f.out.empty()) {
    write_file(f.out, text);
    ordered_json m = manifest("verify", {{"suite", f.suite}},
                              tolerances_json(SeriesControl{}));
    m["checks"] = checks;
    write_file(f.out + ".manifest.json", m.dump(2) + "\n");
  }
  return all_passed ? kOk : kVerificationFailure;
}

// ---- matelem --------------------------------------------------------------

struct MatelemFlags {
  int state = 0;
  int k = 0;
  int l = 0;
  std::string a;
  std::optional<double> t;
  std::optional<double> lambda;
  std::optional<double> mu;
  std::string route = "all";
};

void add_matelem(CLI::App& app, MatelemFlags& f) {
  auto* c = app.add_subcommand(
      "matelem", "<ket+2l| X^(2k) |ket> for X = alpha+ b+ + alpha- b-");
  c->add_option("--n", f.state, "Fock index of the ket")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c->add_option("--k", f.k, "Half the power of X")->required()->check(CLI::NonNegativeNumber);
  c->add_option("--l", f.l, "Bra offset in pairs of states")->capture_default_str();
  c->add_option("--a", f.a)->required();
  auto* t = c->add_option("--t", f.t, "lambda^2 + mu^2 (sets lambda = 0)");
  auto* lambda = c->add_option("--lambda", f.lambda);
  auto* mu = c->add_option("--mu", f.mu);
  t->excludes(lambda)->excludes(mu);
  c->add_option("--route", f.route)
      ->check(CLI::IsMember({"j", "s", "closed", "recurrence", "oracle", "all"}))
      ->capture_default_str();
}

int cmd_matelem(const MatelemFlags& f, std::ostream& out) {
  const ParaParam a = parse_a(f.a);
  double lambda = f.lambda.value_or(0.0);
  double mu = f.mu.value_or(1.0);
  if (f.t) {
    if (!(*f.t >= 0.0) || !std::isfinite(*f.t)) fail(kUsage, "--t must be >= 0");
    lambda = 0.0;
    mu = std::sqrt(*f.t);
  }
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    fail(kUsage, "--lambda and --mu must be finite");
  }

  MatElemQuery q;
  q.n = f.state / 2;
  q.parity = f.state % 2 == 0 ? Parity::kEven : Parity::kOdd;
  q.k = f.k;
  q.l = f.l;
  q.a = a;
  q.lambda = lambda;
  q.mu = mu;
  if (q.bra_state() < 0) fail(kUsage, "bra index ket + 2l is negative");
  if ((f.route == "j" || f.route == "s") && f.l != 0) {
    fail(kUsage, "routes j and s are diagonal only (--l 0)");
  }

  std::vector<std::string> routes;
  if (f.route == "all") {
    if (f.l == 0) routes = {"j", "s"};
    for (const char* r : {"closed", "recurrence", "oracle"}) routes.emplace_back(r);
  } else {
    routes = {f.route};
  }

  std::string s = "route,ket,bra,power,re,im\n";
  for (const std::string& route : routes) {
    Complex v;
    if (route == "j") {
      v = diag_J(q);
    } else if (route == "s") {
      v = diag_S(q);
    } else if (route == "closed") {
      v = offdiag_closed(q);
    } else if (route == "recurrence") {
      v = offdiag_recurrence(q);
    } else {
      const int power = 2 * f.k;
      const TruncatedRep rep = build_rep(
          a, exact_dim(power, q.bra_state(), q.ket_state()));
      v = matrix_power_element(rep, lambda, mu, power, q.bra_state(),
                               q.ket_state());
    }
    s += route + ',' + std::to_string(q.ket_state()) + ',' +
         std::to_string(q.bra_state()) + ',' + std::to_string(2 * f.k) + ',' +
         format_g17(v.real()) + ',' + format_g17(v.imag()) + '\n';
  }
  out << s;
  return kOk;
}

// ---- wavefn ---------------------------------------------------------------

struct WavefnFlags {
  int n = 0;
  std::string a;
  std::optional<double> q;
  double q_min = -4.0;
  double q_max = 4.0;
  int points = 81;
};

void add_wavefn(CLI::App& app, WavefnFlags& f) {
  auto* c = app.add_subcommand("wavefn", "Position-space wave functions (CSV)");
  c->add_option("--n", f.n)->required()->check(CLI::NonNegativeNumber);
  c->add_option("--a", f.a)->required();
  auto* q = c->add_option("--q", f.q, "Single point");
  c->add_option("--qmin", f.q_min)->capture_default_str()->excludes(q);
  c->add_option("--qmax", f.q_max)->capture_default_str()->excludes(q);
  c->add_option("--points", f.points)->capture_default_str()->excludes(q);
}

int cmd_wavefn(const WavefnFlags& f, std::ostream& out) {
  const ParaParam a = parse_a(f.a);
  std::vector<double> qs;
  if (f.q) {
    qs = {*f.q};
  } else {
    GridSpec g;
    g.mode = GridMode::kCartesian;
    g.p_range = {f.q_min, f.q_max};
    g.q_range = {0.0, 0.0};
    g.points = f.points;
    try {
      g.validate();
    } catch (const std::invalid_argument& e) {
      fail(kUsage, e.what());
    }
    for (int i = 0; i < f.points; ++i) {
      qs.push_back(f.q_min + (f.q_max - f.q_min) * i / (f.points - 1));
    }
  }
  for (double q : qs) {
    if (!std::isfinite(q)) fail(kUsage, "--q must be finite");
  }
  std::string s = "q,psi,divergent\n";
  for (double q : qs) {
    const WaveValue v = wavefn(f.n, a, q);
    s += format_g17(q) + ',' + format_g17(v.value) + ',' +
         (v.divergent ? "1" : "0") + '\n';
  }
  out << s;
  return kOk;
}

}  // namespace

std::optional<double> parse_number(std::string_view text) {
  const auto slash = text.find('/');
  std::optional<double> v;
  if (slash == std::string_view::npos) {
    v = parse_plain(text);
  } else {
    const auto num = parse_plain(text.substr(0, slash));
    const auto den = parse_plain(text.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    v = *num / *den;
  }
  if (!v || !std::isfinite(*v)) return std::nullopt;
  return v;
}

std::optional<std::pair<double, double>> parse_range(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const auto lo = parse_number(text.substr(0, comma));
  const auto hi = parse_number(text.substr(comma + 1));
  if (!lo || !hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void GridSpec::validate() const {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  const bool finite =
      mode == GridMode::kRadial
          ? std::isfinite(r_max) && r_max >= 0.0
          : std::isfinite(p_range.first) && std::isfinite(p_range.second) &&
                std::isfinite(q_range.first) && std::isfinite(q_range.second);
  if (!finite) throw std::invalid_argument("grid bounds must be finite");
}

std::vector<std::pair<double, double>> grid_points(const GridSpec& grid) {
  grid.validate();
  std::vector<std::pair<double, double>> pts;
  const int m = grid.points - 1;
  if (grid.mode == GridMode::kRadial) {
    for (int i = 0; i <= m; ++i) pts.emplace_back(grid.r_max * i / m, 0.0);
    return pts;
  }
  const auto [p0, p1] = grid.p_range;
  const auto [q0, q1] = grid.q_range;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      pts.emplace_back(p0 + (p1 - p0) * i / m, q0 + (q1 - q0) * j / m);
    }
  }
  return pts;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Wigner functions of the parabose oscillator", "parawigner"};
  app.require_subcommand(1);
  WignerFlags wigner;
  FigureFlags figures;
  VerifyFlags verify;
  MatelemFlags matelem;
  WavefnFlags wave;
  add_wigner(app, wigner);
  add_figures(app, figures);
  add_verify(app, verify);
  add_matelem(app, matelem);
  add_wavefn(app, wave);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "wigner") return cmd_wigner(wigner, out, err);
    if (name == "figures") return cmd_figures(figures, err);
    if (name == "verify") return cmd_verify(verify, out);
    if (name == "matelem") return cmd_matelem(matelem, out);
    return cmd_wavefn(wave, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace parabose::cli
