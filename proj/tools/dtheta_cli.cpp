// dtheta: command-line front end for the theta-relation checkers.
//
// stdout carries TSV (header line first), stderr diagnostics.
// Exit status: 0 all checks pass, 1 a check exceeded its tolerance,
// 2 bad input or usage.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dtheta/critical_line.hpp"
#include "dtheta/error.hpp"
#include "dtheta/field.hpp"
#include "dtheta/inverse_theta.hpp"
#include "dtheta/theta.hpp"

using dtheta::cplx;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + text + "'");
    }
    if (used != tok.size() || !std::isfinite(v)) throw UsageError("not a number: '" + text + "'");
    return v;
  };
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

std::pair<double, double> parse_range(const std::string& text) {
  const cplx r = parse_complex(text);
  if (text.find(',') == std::string::npos || !(r.imag() > r.real()))
    throw UsageError("--range expects a,b with a < b");
  return {r.real(), r.imag()};
}

void print_row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) std::printf(i ? "\t%.14e" : "%.14e", values[i]);
  std::printf("\n");
}

void print_header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) std::printf(i ? "\t%s" : "%s", names[i].c_str());
  std::printf("\n");
}

dtheta::ZeroList zeros_from(const std::string& path, int count) {
  dtheta::ZeroList z = dtheta::load_zeros(path);
  if (z.empty()) throw UsageError("zeros file " + path + " contains no zeros");
  if (count > 0) z = z.prefix(static_cast<std::size_t>(count));
  return z;
}

bool report_inverse(const std::vector<dtheta::InverseReport>& reports, double tol) {
  print_header({"x", "lhs", "rhs", "residual", "rel_error", "zeros", "zero_tail"});
  bool ok = true;
  for (const auto& r : reports) {
    print_row({r.x.real(), r.lhs.real(), r.rhs.real(), r.residual, r.rel_error,
               static_cast<double>(r.zeros_used), r.zero_tail_estimate});
    if (!(r.residual <= tol)) ok = false;
  }
  return ok;
}

std::vector<double> real_points(const std::vector<std::string>& xs) {
  std::vector<double> out;
  for (const auto& s : xs) {
    const cplx x = parse_complex(s);
    if (x.imag() != 0.0 || !(x.real() > 0.0)) throw UsageError("--x must be a positive real here: " + s);
    out.push_back(x.real());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Dedekind-zeta theta relations"};
  app.require_subcommand(1);

  std::string field_spec = "Q";
  int k = 1;
  std::vector<std::string> xs;
  std::string zeros_path;
  int zero_count = 0;
  // One per subcommand: default_val writes through at registration.
  double theta_tol = 0.0, inverse_tol = 0.0, hlr_tol = 0.0, dgv_tol = 0.0, scan_tol = 0.0, phi_tol = 0.0;

  auto* info = app.add_subcommand("field-info", "Signature, discriminant and class-number constants");
  info->add_option("field", field_spec, "Character file or builtin name")->required();

  auto* theta = app.add_subcommand("theta-check", "W(1/x) against sqrt(x) W(x); x = -1 runs the exact evaluation");
  theta->add_option("--field", field_spec)->required();
  theta->add_option("--k", k)->check(CLI::Range(1, 8));
  theta->add_option("--x", xs, "re[,im], repeatable")->required();
  theta->add_option("--tol", theta_tol)->default_val(1e-10);

  auto* inverse = app.add_subcommand("inverse-check", "U(1/x) against sqrt(x) U(x)");
  inverse->add_option("--field", field_spec)->required();
  inverse->add_option("--k", k)->check(CLI::Range(1, 8));
  inverse->add_option("--x", xs)->required();
  inverse->add_option("--zeros", zeros_path)->required();
  inverse->add_option("--count", zero_count, "Use only the first n zeros");
  inverse->add_option("--tol", inverse_tol)->default_val(1e-5);

  std::size_t cutoff = 1000000;
  bool exact = false;
  auto* hlr = app.add_subcommand("hlr-check", "Moebius exponential sums against the zero sum");
  hlr->add_option("--x", xs)->required();
  hlr->add_option("--zeros", zeros_path)->required();
  hlr->add_option("--count", zero_count);
  hlr->add_option("--cutoff", cutoff)->check(CLI::Range(std::size_t{2}, std::size_t{50000000}));
  hlr->add_flag("--exact", exact, "Subtract sum mu(n)/n = 0 instead of smoothing");
  hlr->add_option("--tol", hlr_tol)->default_val(1e-4);

  auto* dgv = app.add_subcommand("dgv-check", "The alpha/beta form of the inverse relation (degree <= 2)");
  dgv->add_option("--field", field_spec)->required();
  dgv->add_option("--x", xs)->required();
  dgv->add_option("--zeros", zeros_path)->required();
  dgv->add_option("--count", zero_count);
  dgv->add_option("--tol", dgv_tol)->default_val(1e-5);

  std::string range;
  double step = 0.02;
  std::string emit;
  auto* scan = app.add_subcommand("zeros-scan", "Critical-line zeros from sign changes of Xi");
  scan->add_option("--field", field_spec)->required();
  scan->add_option("--range", range, "a,b")->required();
  scan->add_option("--step", step)->check(CLI::PositiveNumber);
  scan->add_option("--emit", emit, "Write refined zeros to this file");
  scan->add_option("--tol", scan_tol)->default_val(1e-9);

  std::string z_text;
  double height = 0.0;
  auto* phi = app.add_subcommand("phi-check", "Integral of Xi(t)/(t^2+1/4) cos(zt) against the theta side");
  phi->add_option("--field", field_spec)->required();
  phi->add_option("--z", z_text, "re[,im]")->required();
  phi->add_option("--height", height, "Truncation height (0: automatic)");
  phi->add_option("--tol", phi_tol)->default_val(1e-6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const dtheta::FieldDescriptor field = dtheta::resolve_field(field_spec);
    bool ok = true;

    if (*info) {
      const auto& c = field.constants();
      print_header({"r1", "r2", "d", "D", "H_F", "C_F"});
      std::printf("%d\t%d\t%d\t%lld\t%.14e\t%.14e\n", field.r1(), field.r2(), field.degree(),
                  static_cast<long long>(field.disc()), c.h, c.c);
    } else if (*theta) {
      std::vector<cplx> points;
      for (const auto& s : xs) points.push_back(parse_complex(s));
      bool header = false;
      for (const cplx x : points) {
        if (x == cplx(-1.0, 0.0)) {
          const auto r = dtheta::exact_eval_check(field);
          print_header({"lhs_re", "lhs_im", "rhs", "residual", "branch_residual"});
          print_row({r.lhs.real(), r.lhs.imag(), r.rhs, r.residual, r.branch_residual});
          if (!(r.residual <= theta_tol)) ok = false;
          continue;
        }
        if (!header) {
          print_header({"x_re", "x_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_error", "terms"});
          header = true;
        }
        const auto r = dtheta::check_theta(field, k, x, 1e-3 * theta_tol);
        print_row({x.real(), x.imag(), r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.rel_error,
                   static_cast<double>(r.terms_used)});
        if (!(r.rel_error <= theta_tol)) ok = false;
      }
    } else if (*inverse) {
      const auto zeros = zeros_from(zeros_path, zero_count);
      std::vector<dtheta::InverseReport> reports;
      for (const auto& s : xs) reports.push_back(dtheta::check_inverse_theta(field, k, parse_complex(s), zeros));
      ok = report_inverse(reports, inverse_tol);
    } else if (*hlr) {
      const auto zeros = zeros_from(zeros_path, zero_count);
      dtheta::HlrOptions options;
      options.cutoff = cutoff;
      options.smooth = !exact;
      std::vector<dtheta::InverseReport> reports;
      for (double x : real_points(xs)) reports.push_back(dtheta::hlr_check(x, zeros, options));
      ok = report_inverse(reports, hlr_tol);
    } else if (*dgv) {
      const auto zeros = zeros_from(zeros_path, zero_count);
      std::vector<dtheta::InverseReport> reports;
      for (double x : real_points(xs)) reports.push_back(dtheta::dgv_check(field, x, zeros));
      ok = report_inverse(reports, dgv_tol);
    } else if (*scan) {
      const auto [a, b] = parse_range(range);
      const auto r = dtheta::scan_zeros(field, a, b, step, scan_tol);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
      print_header({"gamma", "abs_xi"});
      for (std::size_t i = 0; i < r.zeros.size(); ++i) print_row({r.zeros[i], r.residuals[i]});
      if (!emit.empty())
        dtheta::write_zeros(emit, r.zeros, "zeros of " + field_spec + " on [" + std::to_string(a) + ", " +
                                               std::to_string(b) + "], step " + std::to_string(step));
    } else if (*phi) {
      const cplx z = parse_complex(z_text);
      const auto r = dtheta::phi_identity_check(field, z, height);
      print_header({"z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "height"});
      print_row({z.real(), z.imag(), r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.residual, r.height});
      if (!(r.residual <= phi_tol)) ok = false;
    }
    return ok ? 0 : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const dtheta::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitFail;
  } catch (const dtheta::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
