#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultrafid/certificate.hpp"
#include "ultrafid/errors.hpp"
#include "ultrafid/inversion.hpp"
#include "ultrafid/measures.hpp"
#include "ultrafid/output.hpp"
#include "ultrafid/transforms.hpp"

namespace ultrafid::cli {

namespace {

using std::numbers::pi;
using Json = nlohmann::ordered_json;

// A rectangular result: header plus rows of numbers, rendered as CSV or JSON.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << '\n';
    }
    return os.str();
  }

  // Cells are stored pre-formatted; numeric cells are re-emitted as JSON numbers.
  std::string json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::string& cell = r[i];
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (!cell.empty() && end == cell.c_str() + cell.size() && std::isfinite(v))
          obj[header[i]] = Json::parse(cell);
        else
          obj[header[i]] = cell;
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  std::string render(Format f) const { return f == Format::json ? json() : csv(); }
};

std::string num(double v) { return format_double(v); }

std::vector<double> log_radii(const RunConfig& c) {
  std::vector<double> r(static_cast<std::size_t>(c.nr));
  for (int i = 0; i < c.nr; ++i)
    r[i] = std::exp(std::log(c.r_min) + (std::log(c.r_max) - std::log(c.r_min)) * i / (c.nr - 1));
  return r;
}

// Polar grid with angles offset by half a cell, over (0, span) * sign.
std::vector<Complex> polar_grid(const RunConfig& c, double span, double sign) {
  std::vector<Complex> out;
  for (double r : log_radii(c))
    for (int j = 0; j < c.ntheta; ++j) out.push_back(std::polar(r, sign * span * (j + 0.5) / c.ntheta));
  return out;
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.out.empty())
    out << content;
  else
    write_file_atomic(c.out, content);
}

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const UltraIndex n(c.n);
  Table t{{"re", "im", "re_g", "im_g"}, {}};
  for (Complex z : polar_grid(c, 2.0 * pi, 1.0)) {
    const Complex g = gn_closed(n, SlitPlanePoint(z));
    t.add({num(z.real()), num(z.imag()), num(g.real()), num(g.imag())});
  }
  emit(c, t.render(format_or(c, Format::csv)), out);
  return kExitOk;
}

int cmd_invert(const RunConfig& c, std::ostream& out) {
  const UltraIndex n(c.n);
  const double tol = c.tol.value_or(1e-12);
  Table t{{"w_re", "w_im", "z_re", "z_im", "residual", "steps"}, {}};
  bool ok = true;
  for (Complex w : polar_grid(c, pi, -1.0)) {
    const InversionResult r = g_inverse(n, w);
    ok = ok && r.final_residual <= tol * std::max(1.0, std::abs(w));
    t.add({num(w.real()), num(w.imag()), num(r.preimage.real()), num(r.preimage.imag()),
           num(r.final_residual), std::to_string(r.steps)});
  }
  emit(c, t.render(format_or(c, Format::csv)), out);
  return ok ? kExitOk : kExitFailed;
}

int cmd_phi(const RunConfig& c, std::ostream& out) {
  const UltraIndex n(c.n);
  Table t{{"re", "im", "phi_re", "phi_im"}, {}};
  for (Complex z : polar_grid(c, pi, 1.0)) {
    const Complex phi = voiculescu(n, z);
    t.add({num(z.real()), num(z.imag()), num(phi.real()), num(phi.imag())});
  }
  emit(c, t.render(format_or(c, Format::csv)), out);
  return kExitOk;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  Tolerances tol;
  tol.certificate = c.tol.value_or(kDefaultTolerances.certificate);
  const Certificate cert =
      fid_certificate(UltraIndex(c.n), GridSpec{c.r_min, c.r_max, c.nr, c.ntheta}, tol);
  if (format_or(c, Format::json) == Format::json) {
    emit(c, to_json(cert), out);
  } else {
    Table t{{"re", "im", "im_phi"}, {}};
    for (std::size_t i = 0; i < cert.grid.size(); ++i)
      t.add({num(cert.grid[i].real()), num(cert.grid[i].imag()), num(cert.im_phi[i])});
    emit(c, t.csv(), out);
  }
  return cert.pass ? kExitOk : kExitFailed;
}

// Residual suite for one n. Residuals of growing quantities are scaled by
// max(1, |reference|).
struct SuiteRow {
  std::string name;
  double residual;
};

std::vector<SuiteRow> identity_suite(UltraIndex n) {
  std::vector<Complex> upper;
  std::vector<Complex> slit;
  for (double re : linspace(-2.5, 2.5, 11)) {
    for (double im : {0.25, 0.5, 1.0, 2.0}) upper.emplace_back(re, im);
    for (double im : {-0.25, -0.5, -1.0, 0.25, 1.0}) slit.emplace_back(re, im);
    if (std::abs(re) < 2.0) slit.emplace_back(re, 0.0);
  }

  auto scaled = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  std::vector<SuiteRow> rows;

  double moment_exp = 0.0;
  for (unsigned k = 0; k <= 5; ++k)
    for (Complex z : upper) moment_exp = std::max(moment_exp, check_moment_expansion(k, z).residual);
  rows.push_back({"moment-expansion", moment_exp});

  const RecurrencePair lifted = build_QP_recurrence(n);
  const bool exact = lifted.q == build_Q(n) && lifted.p == build_P(n) &&
                     build_Q(n) == build_Q_binomial(n) &&
                     build_uniformized(n) == build_uniformized_binomial(n);
  rows.push_back({"exact-polynomials", exact ? 0.0 : 1.0});

  double rec = 0.0;
  double qp = 0.0;
  double deriv = 0.0;
  for (Complex z : slit) {
    const SlitPlanePoint p(z);
    const Complex closed = gn_closed(n, p);
    rec = std::max(rec, scaled(gn_recurrence(n, p), closed));
    if (std::abs(z) <= 2.5) qp = std::max(qp, scaled(gn_closed_qp(n, p), closed));
    const IdentityResidual d = check_derivative_identity(n, p);
    deriv = std::max(deriv, d.residual / std::max(1.0, std::abs(gn_derivative(n.next(), p))));
  }
  rows.push_back({"recurrence-vs-closed", rec});
  rows.push_back({"qp-form-vs-closed", qp});
  rows.push_back({"derivative-identity", deriv});

  double quad = 0.0;
  for (Complex z : upper)
    quad = std::max(quad, std::abs(gn_quadrature(n, z).value - gn_closed(n, SlitPlanePoint(z))));
  rows.push_back({"quadrature-vs-closed", quad});

  std::vector<SlitPlanePoint> sample;
  for (Complex z : slit)
    if (distance_to_cut(z) >= 0.2) sample.emplace_back(z);
  const PowerConstantEstimate pc = estimate_power_constant(n, sample);
  rows.push_back({"power-constant-spread", pc.spread / std::abs(pc.value)});

  const double edge = n.value() / (2.0 * n.value() - 1.0);
  const double bv = std::max(std::abs(gn_closed(n, SlitPlanePoint(2.0, 0.0)) - edge),
                             std::abs(gn_closed(n, SlitPlanePoint(-2.0, 0.0)) + edge));
  rows.push_back({"boundary-values", bv});
  return rows;
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  const double tol = c.tol.value_or(1e-9);
  Table t{{"identity", "max_residual", "tolerance", "status"}, {}};
  bool ok = true;
  for (const auto& row : identity_suite(UltraIndex(c.n))) {
    const bool pass = row.residual < tol;
    ok = ok && pass;
    t.add({row.name, num(row.residual), num(tol), pass ? "pass" : "fail"});
  }
  emit(c, t.render(format_or(c, Format::csv)), out);
  return ok ? kExitOk : kExitFailed;
}

int cmd_density(const RunConfig& c, std::ostream& out) {
  const auto xs = linspace(c.x_min.value_or(-2.0), c.x_max.value_or(2.0), c.nx.value_or(401));
  const DensityGrid grid = density_grid(UltraIndex(c.n), xs);
  if (format_or(c, Format::csv) == Format::csv) {
    emit(c, to_csv(grid), out);
  } else {
    Table t{{"x", "value"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) t.add({num(xs[i]), num(grid.values()[i])});
    emit(c, t.json(), out);
  }
  return kExitOk;
}

int cmd_beta_check(const RunConfig& c, std::ostream& out) {
  const UltraIndex n(c.n);
  const double tol = c.tol.value_or(1e-12);
  const int count = c.nx.value_or(200);
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid[i] = (i + 0.5) / count;

  const BetaSquareResidual sq = check_beta_square(n, grid);
  const std::vector<SuiteRow> rows{{"symmetric", check_beta_symmetric(n, grid)},
                                   {"square", sq.square},
                                   {"complement", sq.complement}};
  Table t{{"check", "max_residual", "tolerance", "status"}, {}};
  bool ok = true;
  for (const auto& row : rows) {
    const bool pass = row.residual < tol;
    ok = ok && pass;
    t.add({row.name, num(row.residual), num(tol), pass ? "pass" : "fail"});
  }
  emit(c, t.render(format_or(c, Format::csv)), out);
  return ok ? kExitOk : kExitFailed;
}

int cmd_converge(const RunConfig& c, std::ostream& out) {
  std::vector<UltraIndex> ns;
  for (int n : c.n_list) ns.emplace_back(n);
  const auto xs = linspace(c.x_min.value_or(-6.0), c.x_max.value_or(6.0), c.nx.value_or(2401));
  const ConvergenceReport report = poincare_report(ns, xs);
  if (format_or(c, Format::csv) == Format::csv) {
    emit(c, to_csv(report), out);
  } else {
    Table t{{"n", "sup_distance"}, {}};
    for (const auto& e : report.entries) t.add({std::to_string(e.n), num(e.sup_distance)});
    emit(c, t.json(), out);
  }
  return report.strictly_decreasing() ? kExitOk : kExitFailed;
}

}  // namespace

std::optional<std::string> validate(const RunConfig& c) {
  if (c.n < 1) return "--n must be >= 1";
  if (!(c.r_min > 0.0) || !(c.r_max > c.r_min)) return "radii must satisfy 0 < r_min < r_max";
  if (c.nr < 2 || c.ntheta < 2) return "--nr and --ntheta must be >= 2";
  if (c.nx && *c.nx < 2) return "--nx must be >= 2";
  if (c.x_min && c.x_max && !(*c.x_max > *c.x_min)) return "x_max must exceed x_min";
  if (!(c.eps > 0.0)) return "--eps must be positive";
  if (c.tol && !(*c.tol > 0.0)) return "--tol must be positive";
  if (c.n_list.empty()) return "--n-list must be nonempty";
  for (int n : c.n_list)
    if (n < 1) return "--n-list entries must be >= 1";
  return std::nullopt;
}

ParseOutcome parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cauchy transforms, inversion and free infinite divisibility certificates for "
               "ultraspherical laws"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  double x_min = 0.0, x_max = 0.0;
  int nx = 0;
  double tol = 0.0;
  std::string format;
  app.add_option("--n", c.n, "ultraspherical index n >= 1");
  app.add_option("--r-min", c.r_min, "smallest grid radius");
  app.add_option("--r-max", c.r_max, "largest grid radius");
  app.add_option("--nr", c.nr, "number of log-spaced radii");
  app.add_option("--ntheta", c.ntheta, "number of angles");
  auto* ox_min = app.add_option("--x-min", x_min, "left end of the real grid");
  auto* ox_max = app.add_option("--x-max", x_max, "right end of the real grid");
  auto* onx = app.add_option("--nx", nx, "number of real grid points");
  app.add_option("--eps", c.eps, "distance above the real axis");
  auto* otol = app.add_option("--tol", tol, "pass/fail tolerance");
  app.add_option("--n-list", c.n_list, "indices for the convergence report")->delimiter(',');
  app.add_option("--out", c.out, "output file (default: standard output)");
  auto* oformat =
      app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  const std::vector<std::pair<std::string, Command>> commands{
      {"eval", Command::eval},           {"invert", Command::invert},
      {"phi", Command::phi},             {"certify", Command::certify},
      {"identities", Command::identities}, {"density", Command::density},
      {"beta-check", Command::beta_check}, {"converge", Command::converge}};
  const std::vector<std::pair<std::string, std::string>> help{
      {"eval", "evaluate G_n on a polar grid: re,im,re_g,im_g"},
      {"invert", "invert G_n on a polar grid of the lower half-plane with roundtrip residuals"},
      {"phi", "Voiculescu transform on a polar grid of the upper half-plane"},
      {"certify", "free infinite divisibility certificate (JSON); exit 1 on fail"},
      {"identities", "max-residual table of the transform identities"},
      {"density", "density samples x,value"},
      {"beta-check", "Beta push-forward residuals"},
      {"converge", "sup distance of normalised densities to the Gaussian"}};
  for (std::size_t i = 0; i < commands.size(); ++i) app.add_subcommand(commands[i].first, help[i].second);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& [name, cmd] : commands)
    if (app.got_subcommand(name)) c.command = cmd;
  if (ox_min->count()) c.x_min = x_min;
  if (ox_max->count()) c.x_max = x_max;
  if (onx->count()) c.nx = nx;
  if (otol->count()) c.tol = tol;
  if (oformat->count()) c.format = format == "json" ? Format::json : Format::csv;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(config)) {
    err << "error: " << *problem << '\n';
    return kExitUsage;
  }
  try {
    switch (config.command) {
      case Command::eval:
        return cmd_eval(config, out);
      case Command::invert:
        return cmd_invert(config, out);
      case Command::phi:
        return cmd_phi(config, out);
      case Command::certify:
        return cmd_certify(config, out);
      case Command::identities:
        return cmd_identities(config, out);
      case Command::density:
        return cmd_density(config, out);
      case Command::beta_check:
        return cmd_beta_check(config, out);
      case Command::converge:
        return cmd_converge(config, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace ultrafid::cli
