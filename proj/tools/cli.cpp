#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phyp/checks.hpp"
#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"
#include "phyp/spectral3.hpp"
#include "phyp/zeros3.hpp"

namespace phyp::cli {

namespace {

// Input the user can fix: bad forcing spec, unreadable file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return fmt_double(*d);
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::vector<double> grid(double a, double b, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) xs[i] = count == 1 ? a : a + (b - a) * i / (count - 1);
  if (count > 1) xs.back() = b;
  return xs;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  int p = 3, k = 0, count = 11;
  double start = 0, stop = 1;
  std::string mode = "hyperbolic";
};

OutputRecord cmd_eval(const EvalArgs& a) {
  if (a.k >= a.p) throw UsageError("--k must be smaller than --p");
  OutputRecord r{"eval",
                 {{"p", (long long)a.p},
                  {"k", (long long)a.k},
                  {"start", a.start},
                  {"stop", a.stop},
                  {"count", (long long)a.count},
                  {"mode", a.mode}},
                 {"x", "value_re", "value_im"},
                 {},
                 {}};
  const bool trig = a.mode == "trigonometric";
  for (double x : grid(a.start, a.stop, a.count)) {
    const PFunQuery q{a.p, a.k, x};
    const cplx v = trig ? eval_c(q) : eval_s(q);
    r.rows.push_back({x, v.real(), v.imag()});
  }
  return r;
}

struct ZerosArgs {
  int k = 0, count = 20;
};

OutputRecord cmd_zeros(const ZerosArgs& a) {
  const ZeroTable t = find_zeros(a.k, a.count);
  OutputRecord r{"zeros",
                 {{"k", (long long)a.k}, {"count", (long long)a.count}},
                 {"j", "x", "residual", "asymptotic_seed", "simple"},
                 {},
                 {}};
  for (std::size_t j = 0; j < t.zeros.size(); ++j)
    r.rows.push_back({(long long)(j + 1), t.zeros[j], t.residuals[j], t.seeds[j], (long long)t.simple[j]});
  return r;
}

struct EigenArgs {
  double phi = 0, l = 1;
  int nMax = 5, gridCount = 101;
  std::string emit = "values";
};

const char* branch_name(Branch b) { return b == Branch::Positive ? "+" : "-"; }

OutputRecord cmd_eigen(const EigenArgs& a) {
  const OperatorSpec3 spec = OperatorSpec3::from_phi(a.phi, a.l);
  const auto recs = eigen_zeros(spec, a.nMax);
  OutputRecord r{"eigen",
                 {{"phi", a.phi}, {"l", a.l}, {"n_max", (long long)a.nMax}, {"emit", a.emit}},
                 {},
                 {},
                 {}};
  if (a.emit == "values") {
    r.columns = {"branch", "n", "mu", "eigenvalue", "abs_delta", "rel_delta", "a_n"};
    for (const auto& e : recs)
      r.rows.push_back(
          {branch_name(e.branch), (long long)e.n, e.mu, e.eigenvalue, e.absDelta, e.relDelta, e.aNorm});
    return r;
  }
  r.params.push_back({"grid_count", (long long)a.gridCount});
  r.columns = {"branch", "n", "x", "u_re", "u_im"};
  const auto xs = grid(0.0, a.l, a.gridCount);
  for (const auto& e : recs)
    for (double x : xs) {
      const cplx u = eigenfunction(spec, e, x);
      r.rows.push_back({branch_name(e.branch), (long long)e.n, x, u.real(), u.imag()});
    }
  return r;
}

struct ResolveArgs {
  double phi = 0, l = 1, lambdaRe = 0.5, lambdaIm = 0;
  std::string forcing = "const:1";
  int gridCount = 101;
};

cplx parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("cannot parse number '" + s + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("cannot parse complex value '" + s + "'");
  }
  return {re, im};
}

struct Samples {
  std::vector<double> x;
  std::vector<cplx> f;

  cplx operator()(double t) const {
    auto it = std::upper_bound(x.begin(), x.end(), t);
    if (it == x.begin()) return f.front();
    if (it == x.end()) return f.back();
    const std::size_t i = it - x.begin();
    const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
    return (1 - w) * f[i - 1] + w * f[i];
  }
};

Samples read_samples(const std::string& path, double l) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read forcing file '" + path + "'");
  Samples s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, re, im = 0;
    if (!(ls >> x >> re)) {
      if (s.x.empty()) continue;  // header
      throw UsageError("malformed line in forcing file: '" + line + "'");
    }
    ls >> im;
    if (!s.x.empty() && !(x > s.x.back())) throw UsageError("forcing file: x must be strictly increasing");
    s.x.push_back(x);
    s.f.push_back({re, im});
  }
  if (s.x.size() < 2) throw UsageError("forcing file needs at least two samples");
  if (s.x.front() > 0 || s.x.back() < l) throw UsageError("forcing samples must cover [0, l]");
  return s;
}

OutputRecord cmd_resolve(const ResolveArgs& a) {
  const OperatorSpec3 spec = OperatorSpec3::from_phi(a.phi, a.l);
  const cplx lambda(a.lambdaRe, a.lambdaIm);
  CFunc f;
  QuadraturePolicy quad;
  if (a.forcing.rfind("const:", 0) == 0) {
    const cplx v = parse_complex(a.forcing.substr(6));
    f = [v](double) { return v; };
  } else if (a.forcing.rfind("csv:", 0) == 0) {
    Samples samples = read_samples(a.forcing.substr(4), a.l);
    quad.breakpoints = samples.x;  // one panel per linear piece
    quad.nodesPerPanel = 4;
    f = std::move(samples);
  } else {
    throw UsageError("--f must be const:<value> or csv:<path>");
  }
  OutputRecord r{"resolve",
                 {{"phi", a.phi},
                  {"l", a.l},
                  {"lambda_re", lambda.real()},
                  {"lambda_im", lambda.imag()},
                  {"f", a.forcing},
                  {"grid_count", (long long)a.gridCount}},
                 {"x", "y_re", "y_im"},
                 {},
                 {}};
  const auto xs = grid(0.0, a.l, a.gridCount);
  std::vector<cplx> ys;
  for (double x : xs) {
    const cplx y = resolvent_apply(spec, lambda, f, x, 0, quad);
    ys.push_back(y);
    r.rows.push_back({x, y.real(), y.imag()});
  }
  const cplx d0 = resolvent_apply(spec, lambda, f, 0.0, 1, quad);
  const cplx dl = resolvent_apply(spec, lambda, f, a.l, 1, quad);
  // i y''' = lambda^3 y + f, with y''' from a difference of the closed-form y''
  auto y2 = [&](double x) { return resolvent_apply(spec, lambda, f, x, 2, quad); };
  const cplx l3 = lambda * lambda * lambda;
  // at most about 10 interior points; each costs a difference stencil of solves
  const std::size_t stride = std::max<std::size_t>(1, xs.size() / 10);
  double ode = 0;
  long long odePoints = 0;
  for (std::size_t i = 0; i < xs.size(); i += stride) {
    cplx d3;
    try {
      d3 = derivative(y2, 1, xs[i], 0.0, Stencil::Central, {0.0, a.l});
    } catch (const DomainError&) {
      continue;
    }
    const cplx rhs = l3 * ys[i] + f(xs[i]);
    ode = std::max(ode, std::abs(cplx(0, 1) * d3 - rhs) / std::max(1.0, std::abs(rhs)));
    ++odePoints;
  }
  r.footer = {{"bc_y0", std::abs(ys.front())},
              {"bc_yl", std::abs(ys.back())},
              {"bc_derivative", std::abs(d0 - spec.theta * dl)},
              {"ode_residual", ode},
              {"ode_points", odePoints},
              {"abs_delta", std::abs(char_fn(spec, lambda))}};
  return r;
}

struct CheckArgs {
  std::string suite = "all";
  std::uint64_t seed = 7;
};

OutputRecord cmd_check(const CheckArgs& a, bool& allPass) {
  const auto& names = check_suite_names();
  if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("unknown suite '" + a.suite + "'");
  OutputRecord r{"check",
                 {{"suite", a.suite}, {"seed", (long long)a.seed}},
                 {"name", "samples", "max_residual", "threshold", "pass"},
                 {},
                 {}};
  allPass = true;
  for (const auto& row : run_check_suite(a.suite, a.seed)) {
    allPass = allPass && row.pass;
    r.rows.push_back({row.name, (long long)row.samples, row.maxResidual, row.threshold, (long long)row.pass});
  }
  return r;
}

}  // namespace

void write_csv(const OutputRecord& rec, std::ostream& out) {
  for (std::size_t i = 0; i < rec.columns.size(); ++i) out << (i ? "," : "") << rec.columns[i];
  out << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
  for (const auto& [k, v] : rec.footer) out << "# " << k << '=' << cell_text(v) << '\n';
}

void write_json(const OutputRecord& rec, std::ostream& out) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = "1";
  j["command"] = rec.command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rec.params) j["params"][k] = cell_json(v);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < row.size(); ++i) o[rec.columns[i]] = cell_json(row[i]);
    j["rows"].push_back(o);
  }
  if (!rec.footer.empty()) {
    j["footer"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.footer) j["footer"][k] = cell_json(v);
  }
  out << j.dump(2) << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-hyperbolic functions: evaluation, zeros, spectra and resolvents"};
  app.require_subcommand(1);
  std::string format = "csv", outPath;
  app.add_option("--format", format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", outPath, "Output file (default standard output)");

  EvalArgs ev;
  auto* sEval = app.add_subcommand("eval", "Tabulate s_k or c_k on a uniform grid");
  sEval->add_option("--p", ev.p, "Order p")->check(CLI::Range(1, 64));
  sEval->add_option("--k", ev.k, "Index k, 0 <= k < p")->check(CLI::NonNegativeNumber);
  sEval->add_option("--start", ev.start);
  sEval->add_option("--stop", ev.stop);
  sEval->add_option("--count", ev.count, "Grid points")->check(CLI::PositiveNumber);
  sEval->add_option("--mode", ev.mode, "s_k (hyperbolic) or c_k (trigonometric)")->check(CLI::IsMember({"hyperbolic", "trigonometric"}));

  ZerosArgs zs;
  auto* sZeros = app.add_subcommand("zeros", "Real zeros of s_k for p = 3");
  sZeros->add_option("--k", zs.k, "Index k in 0..2")->check(CLI::Range(0, 2));
  sZeros->add_option("--count", zs.count, "Number of zeros")->check(CLI::PositiveNumber);

  EigenArgs eg;
  auto* sEigen = app.add_subcommand("eigen", "Eigenvalues or eigenfunctions of L_theta, theta = exp(i phi)");
  sEigen->add_option("--phi", eg.phi, "theta = exp(i phi)")->check(CLI::Range(-M_PI, M_PI));
  sEigen->add_option("--l", eg.l, "Interval length")->check(CLI::PositiveNumber);
  sEigen->add_option("--n-max", eg.nMax, "Roots per branch")->check(CLI::PositiveNumber);
  sEigen->add_option("--emit", eg.emit, "Eigenvalue table or sampled eigenfunctions")->check(CLI::IsMember({"values", "functions"}));
  sEigen->add_option("--grid-count", eg.gridCount, "Uniform grid points on [0, l]")->check(CLI::Range(2, 1000000));

  ResolveArgs rs;
  auto* sResolve = app.add_subcommand("resolve", "Apply the resolvent of L_theta to a forcing");
  sResolve->add_option("--phi", rs.phi, "theta = exp(i phi)")->check(CLI::Range(-M_PI, M_PI));
  sResolve->add_option("--l", rs.l, "Interval length")->check(CLI::PositiveNumber);
  sResolve->add_option("--lambda", rs.lambdaRe, "Real part of lambda");
  sResolve->add_option("--lambda-im", rs.lambdaIm, "Imaginary part of lambda");
  sResolve->add_option("--f", rs.forcing, "const:<re>[,<im>] or csv:<path> (x,f_re[,f_im])");
  sResolve->add_option("--grid-count", rs.gridCount, "Uniform grid points on [0, l]")->check(CLI::Range(2, 1000000));

  CheckArgs ck;
  auto* sCheck = app.add_subcommand("check", "Run the property suites");
  sCheck->add_option("--suite", ck.suite, "cyclo, pfun, zeros, cauchy, sabc, spectral or all");
  sCheck->add_option("--seed", ck.seed, "Random seed");

  for (auto* s : {sEval, sZeros, sEigen, sResolve, sCheck}) {
    s->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", outPath, "Output file (default standard output)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  OutputRecord rec;
  int status = kOk;
  try {
    if (*sEval) rec = cmd_eval(ev);
    else if (*sZeros) rec = cmd_zeros(zs);
    else if (*sEigen) rec = cmd_eigen(eg);
    else if (*sResolve) rec = cmd_resolve(rs);
    else {
      bool allPass = false;
      rec = cmd_check(ck, allPass);
      if (!allPass) status = kFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  std::ostringstream buf;
  if (format == "json") write_json(rec, buf);
  else write_csv(rec, buf);
  if (outPath.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(outPath, std::ios::binary);
    if (!(file << buf.str())) {
      err << "error: cannot write '" << outPath << "'\n";
      return kFailure;
    }
  }
  return status;
}

}  // namespace phyp::cli
