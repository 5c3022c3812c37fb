#include "guinand/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "guinand/atoms.hpp"
#include "guinand/coeffs.hpp"
#include "guinand/errors.hpp"
#include "guinand/formulas.hpp"
#include "guinand/parse.hpp"
#include "guinand/radial.hpp"
#include "guinand/sumsq.hpp"
#include "guinand/work_caps.hpp"

namespace guinand::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json cplx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) return parse_real(text.substr(0, slash)) / parse_real(text.substr(slash + 1));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("not a number: '" + text + "'");
  return v;
}

// "a,b,c" with components like 0.5 or 1/3.
std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw UsageError("empty vector");
  return out;
}

// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("grid must be a:b:step");
  const double a = parse_real(parts[0]);
  const double b = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0) || b < a) throw UsageError("grid needs step > 0 and a <= b");
  const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
  if (count > 10'000'000) throw UsageError("grid too large");
  std::vector<double> out;
  for (long i = 0; i <= count; ++i) out.push_back(a + static_cast<double>(i) * step);
  return out;
}

std::vector<double> t_values(const std::optional<double>& t, const std::string& grid) {
  if (t && !grid.empty()) throw UsageError("--t and --t-grid are exclusive");
  if (t) return {*t};
  if (!grid.empty()) return parse_grid(grid);
  throw UsageError("one of --t or --t-grid is required");
}

// Odd-normalizes with a notice when the expression is not odd.
GaussPoly odd_test_function(const std::string& text, std::ostream& err) {
  GaussPoly phi = parse(text).value;
  if (!phi.is_odd()) {
    err << "notice: --phi is not odd; using its odd part (f(t) - f(-t))\n";
    phi = odd_part(phi);
  }
  return phi;
}

void check_k(int k) {
  if (k < 3 || k % 2 == 0) throw UsageError("--k must be odd and >= 3");
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd-dimensional summation formulas: evaluation and verification"};
  app.name("guinand");
  app.require_subcommand(1);

  auto caps = [] {
    try {
      return WorkCaps::from_environment();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  };

  std::function<int()> action;

  // rk
  int rk_k = 3;
  std::int64_t rk_n = 0;
  std::string rk_format = "csv";
  auto* rk = app.add_subcommand("rk", "Table of r_k(n) for n = 0..N");
  rk->add_option("--k", rk_k, "Number of squares")->required()->check(CLI::PositiveNumber);
  rk->add_option("--nmax", rk_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  rk->add_option("--format", rk_format)->check(CLI::IsMember({"csv", "json"}));
  rk->callback([&] {
    action = [&] {
      const RepTable table = rk_table(rk_k, rk_n);
      if (rk_format == "csv") {
        out << "n,r\n";
        for (std::int64_t n = 0; n <= rk_n; ++n) out << n << ',' << table[n].str() << '\n';
      } else {
        json counts = json::array();
        for (std::int64_t n = 0; n <= rk_n; ++n) counts.push_back(table[n].str());
        out << json{{"k", rk_k}, {"counts", counts}}.dump(2) << '\n';
      }
      return kOk;
    };
  });

  // coeffs
  int co_k = 3;
  std::string co_format = "exact";
  auto* co = app.add_subcommand("coeffs", "alpha_k and beta_jk");
  co->add_option("--k", co_k)->required();
  co->add_option("--format", co_format)->check(CLI::IsMember({"exact", "json"}));
  co->callback([&] {
    action = [&] {
      check_k(co_k);
      const ScaledRational a = alpha(co_k);
      const auto betas = beta_row(co_k);
      if (co_format == "exact") {
        out << "alpha_" << co_k << " = " << a.to_string() << '\n';
        for (std::size_t j = 0; j < betas.size(); ++j) {
          out << "beta_" << j << ',' << co_k << " = " << betas[j].to_string() << '\n';
        }
      } else {
        auto entry = [](const ScaledRational& v) {
          return json{{"num", v.num().str()}, {"den", v.den().str()}, {"pi_power", v.pi_power()},
                      {"exact", v.to_string()}, {"value", v.to_double()}};
        };
        json list = json::array();
        for (const auto& b : betas) list.push_back(entry(b));
        out << json{{"k", co_k}, {"alpha", entry(a)}, {"beta", list}}.dump(2) << '\n';
      }
      return kOk;
    };
  });

  // verify
  int v_k = 3;
  std::string v_phi;
  std::int64_t v_n = 400;
  double v_tol = 1e-10;
  std::string v_format = "json";
  std::string v_output;
  auto* ve = app.add_subcommand("verify", "Both sides of the odd-k summation formula");
  ve->add_option("--k", v_k)->required();
  ve->add_option("--phi", v_phi, "Test function")->required();
  ve->add_option("--nmax", v_n)->check(CLI::PositiveNumber);
  ve->add_option("--tol", v_tol)->check(CLI::PositiveNumber);
  ve->add_option("--format", v_format)->check(CLI::IsMember({"json", "csv"}));
  ve->add_option("--output", v_output);
  ve->callback([&] {
    action = [&] {
      check_k(v_k);
      const GaussPoly phi = odd_test_function(v_phi, err);
      const VerificationReport report = verify(v_k, phi, v_n, v_tol);
      Sink sink(v_output, out);
      if (v_format == "json") {
        sink.stream() << to_json(report).dump(2) << '\n';
      } else {
        write_shell_csv(sink.stream(), shell_partial_sums(v_k, phi, v_n));
      }
      return report.passed ? kOk : kResidual;
    };
  });

  // verify-shifted
  int s_k = 3;
  std::string s_eta;
  std::string s_xi;
  std::string s_phi;
  std::optional<double> s_radius;
  double s_rt = 6.0;
  double s_rf = 6.0;
  double s_tol = 1e-8;
  std::string s_output;
  auto* sh = app.add_subcommand("verify-shifted", "Shifted-lattice summation formula");
  sh->add_option("--k", s_k)->required();
  sh->add_option("--eta", s_eta, "Comma-separated shift")->required();
  sh->add_option("--xi", s_xi, "Comma-separated modulation")->required();
  sh->add_option("--phi", s_phi)->required();
  sh->add_option("--radius", s_radius, "Sets both radii");
  sh->add_option("--r-time", s_rt);
  sh->add_option("--r-freq", s_rf);
  sh->add_option("--tol", s_tol)->check(CLI::PositiveNumber);
  sh->add_option("--output", s_output);
  sh->callback([&] {
    action = [&] {
      check_k(s_k);
      if (s_radius) s_rt = s_rf = *s_radius;
      const auto eta = parse_vector(s_eta);
      const auto xi = parse_vector(s_xi);
      const GaussPoly phi = odd_test_function(s_phi, err);
      const VerificationReport report = verify_shifted(s_k, eta, xi, phi, s_rt, s_rf, s_tol, caps());
      Sink sink(s_output, out);
      sink.stream() << to_json(report).dump(2) << '\n';
      return report.passed ? kOk : kResidual;
    };
  });

  // duality
  int d_k = 3;
  std::string d_phi;
  std::int64_t d_n = 400;
  double d_tol = 1e-9;
  std::string d_output;
  auto* du = app.add_subcommand("duality", "<sigma_k_hat, phi> against <sigma_k, phi_hat>");
  du->add_option("--k", d_k)->required();
  du->add_option("--phi", d_phi)->required();
  du->add_option("--nmax", d_n)->check(CLI::PositiveNumber);
  du->add_option("--tol", d_tol)->check(CLI::PositiveNumber);
  du->add_option("--output", d_output);
  du->callback([&] {
    action = [&] {
      check_k(d_k);
      const VerificationReport report = verify_duality(d_k, parse(d_phi).value, d_n, d_tol);
      Sink sink(d_output, out);
      sink.stream() << to_json(report).dump(2) << '\n';
      return report.passed ? kOk : kResidual;
    };
  });

  // radial-ft
  int r_k = 3;
  std::string r_f;
  std::optional<double> r_t;
  std::string r_grid;
  double r_tol = 1e-8;
  std::string r_format = "json";
  std::string r_output;
  auto* ra = app.add_subcommand("radial-ft", "Radial Fourier transform: closed form against quadrature");
  ra->add_option("--k", r_k)->required();
  ra->add_option("--f", r_f, "Even profile")->required();
  ra->add_option("--t", r_t);
  ra->add_option("--t-grid", r_grid, "a:b:step");
  ra->add_option("--tol", r_tol)->check(CLI::PositiveNumber);
  ra->add_option("--format", r_format)->check(CLI::IsMember({"json", "csv"}));
  ra->add_option("--output", r_output);
  ra->callback([&] {
    action = [&] {
      check_k(r_k);
      const GaussPoly f = parse(r_f).value;
      if (!f.is_even()) throw UsageError("--f must be even");
      const double quad_tol = std::max(r_tol * 1e-2, 1e-12);
      bool passed = true;
      json rows = json::array();
      std::ostringstream csv;
      csv << "k,t,method,re,im\n";
      for (double t : t_values(r_t, r_grid)) {
        const std::complex<double> closed = t == 0.0 ? radial_ft_zero(f, r_k) : radial_ft_closed(f, r_k, t);
        const std::complex<double> quad = radial_ft_quadrature(f, r_k, std::abs(t), quad_tol);
        const double diff = std::abs(closed - quad);
        passed = passed && diff <= r_tol;
        rows.push_back({{"k", r_k}, {"t", t}, {"closed", cplx(closed)}, {"quadrature", cplx(quad)}, {"abs_diff", diff}});
        for (auto [name, v] : {std::pair{"closed", closed}, std::pair{"quadrature", quad}}) {
          csv << r_k << ',' << fmt17(t) << ',' << name << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
        }
      }
      Sink sink(r_output, out);
      if (r_format == "json") {
        sink.stream() << json{{"tol", r_tol}, {"passed", passed}, {"values", rows}}.dump(2) << '\n';
      } else {
        sink.stream() << csv.str();
      }
      return passed ? kOk : kResidual;
    };
  });

  // sphere-ft
  int p_k = 3;
  std::optional<double> p_t;
  std::string p_grid;
  std::string p_methods = "closed,bessel,recurrence,besselpoly";
  double p_tol = 1e-12;
  std::string p_format = "csv";
  std::string p_output;
  auto* sp = app.add_subcommand("sphere-ft", "Fourier transform of the unit-sphere surface measure");
  sp->add_option("--k", p_k)->required();
  sp->add_option("--t", p_t);
  sp->add_option("--t-grid", p_grid, "a:b:step");
  sp->add_option("--methods", p_methods);
  sp->add_option("--tol", p_tol)->check(CLI::PositiveNumber);
  sp->add_option("--format", p_format)->check(CLI::IsMember({"json", "csv"}));
  sp->add_option("--output", p_output);
  sp->callback([&] {
    action = [&] {
      check_k(p_k);
      std::vector<SphereMethod> methods;
      std::stringstream ss(p_methods);
      std::string name;
      while (std::getline(ss, name, ',')) {
        try {
          methods.push_back(sphere_method_from_string(name));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (methods.empty()) throw UsageError("--methods is empty");
      std::vector<SphereFTValue> rows;
      double worst = 0.0;
      for (double t : t_values(p_t, p_grid)) {
        const std::size_t first = rows.size();
        for (auto m : methods) rows.push_back({p_k, t, sphere_ft(m, p_k, t), m});
        for (std::size_t a = first; a < rows.size(); ++a) {
          for (std::size_t b = a + 1; b < rows.size(); ++b) {
            worst = std::max(worst, relative_residual(rows[a].value, rows[b].value));
          }
        }
      }
      Sink sink(p_output, out);
      if (p_format == "csv") {
        write_sphere_csv(sink.stream(), rows);
      } else {
        json list = json::array();
        for (const auto& r : rows) list.push_back({{"k", r.k}, {"t", r.t}, {"method", to_string(r.method)}, {"value", r.value}});
        sink.stream() << json{{"tol", p_tol}, {"max_rel_diff", worst}, {"passed", worst <= p_tol}, {"values", list}}.dump(2)
                      << '\n';
      }
      return worst <= p_tol ? kOk : kResidual;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: parse error " << e.what() << '\n';
  } catch (const WorkCapExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace guinand::cli
