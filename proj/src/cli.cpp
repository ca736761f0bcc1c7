#include "stroud/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "stroud/errors.hpp"
#include "stroud/hex_cell.hpp"
#include "stroud/quadrature.hpp"
#include "stroud/report.hpp"
#include "stroud/rule.hpp"

namespace stroud::cli {

namespace {

constexpr double kResidualTolerance = 1e-12;

std::string sci(double v, int frac) {
  std::ostringstream os;
  os << std::scientific << std::uppercase << std::setprecision(frac) << v;
  return os.str();
}

MonomialExponent parse_monomial(const std::string& text) {
  MonomialExponent e;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> e.a >> c1 >> e.b >> c2 >> e.c) || c1 != ',' || c2 != ',' || (in >> rest) || e.a < 0 ||
      e.b < 0 || e.c < 0) {
    throw DomainError("--monomial expects three non-negative integers `a,b,c`, got '" + text + "'");
  }
  return e;
}

template <class T>
T parse_file(const std::string& path, T (*parser)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return parser(in);
}

struct Options {
  std::string rule = "1";
  std::string format = "plain";
  int digits = -1;
  int max_degree = 5;
  std::optional<double> tolerance;
  std::string monomial;
  std::string poly_file;
  std::string cell_file;
};

int do_emit(const Options& o, std::ostream& out) {
  const QuadratureRule rule = build_rule(parse_rule_id(o.rule));
  out << export_rule(rule, parse_export_format(o.format), o.digits < 0 ? 32 : o.digits);
  return kSuccess;
}

int do_verify(const Options& o, std::ostream& out) {
  const RuleId id = parse_rule_id(o.rule);
  const QuadratureRule rule = build_rule(id);
  const ExactnessReport report = verify_exactness(rule, o.max_degree, o.tolerance.value_or(1e-14));
  const oracle::ResidualVector res = closed_form_residuals(id);
  const ContainmentReport box = containment_report(rule);

  out << to_string(id) << ": " << format_exactness_summary(report) << '\n';
  out << "max relative error (|alpha| <= 5): " << sci(report.max_rel_error_degree5, 3)
      << "  tolerance " << sci(report.tolerance, 1) << '\n';
  if (report.degree6_witness) {
    out << "degree-6 witness " << report.degree6_witness->exponent.str() << " relative error "
        << sci(report.degree6_witness->rel_error, 3) << '\n';
  }
  if (report.worst_degree6) {
    out << "worst degree-6 monomial " << report.worst_degree6->exponent.str() << " relative error "
        << sci(report.worst_degree6->rel_error, 3) << '\n';
  }
  out << "residuals: m1 " << sci(res.r_m1_B, 2) << ' ' << sci(res.r_m1_C, 2) << "  m2 "
      << sci(res.r_m2_B, 2) << ' ' << sci(res.r_m2_C, 2) << "  m3 " << sci(res.r_m3_B, 2) << ' '
      << sci(res.r_m3_C, 2) << "  m4 " << sci(res.r_m4, 2) << "  m5 " << sci(res.r_m5, 2) << '\n';
  out << "points inside [-1,1]^3: " << (box.all_inside ? "yes" : "no") << " (max |coordinate| "
      << sci(box.max_coordinate_magnitude, 6) << ")\n";
  if (o.max_degree > 5) {
    out << "\nmonomial      rule value               exact                    rel error\n";
    for (const auto& r : report.records) {
      out << r.exponent.str() << std::string(12 - r.exponent.str().size(), ' ') << "  "
          << sci(r.rule_value, 15) << "  " << sci(r.exact.get_d(), 15) << "  " << sci(r.rel_error, 2)
          << '\n';
    }
  }
  const bool ok = report.passed() && res.max_abs() <= kResidualTolerance;
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int do_derive(const Options& o, std::ostream& out) {
  const DerivationReport report =
      build_derivation_report(o.tolerance.value_or(oracle::kDefaultTolerance), o.digits < 0 ? 64 : o.digits);
  out << report.text();
  return report.ok() ? kSuccess : kNumericFailure;
}

int do_integrate(const Options& o, std::ostream& out) {
  if (o.monomial.empty() == o.poly_file.empty()) {
    throw DomainError("integrate needs exactly one of --monomial or --poly");
  }
  const QuadratureRule rule = build_rule(parse_rule_id(o.rule));
  const Polynomial3 f = o.monomial.empty() ? parse_file<Polynomial3>(o.poly_file, &Polynomial3::parse)
                                           : Polynomial3::monomial(parse_monomial(o.monomial));
  const int digits = o.digits < 0 ? 15 : o.digits;
  if (o.cell_file.empty()) {
    out << integrate_decimal(rule, f, digits + 1).scientific(digits) << '\n';
  } else {
    const HexCell cell = parse_file<HexCell>(o.cell_file, &HexCell::parse);
    out << sci(integrate_over_hex(rule, cell, f), digits) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stroud's 13-point degree-5 cubature rules for the cube [-1,1]^3", "stroud13"};
  app.require_subcommand(1);
  Options o;

  auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--rule", o.rule, "Rule 1 (all points inside) or 2")->check(CLI::IsMember({"1", "2"}));
  };

  auto* emit = app.add_subcommand("emit", "Print the rule's points and weights");
  add_rule(emit);
  emit->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  emit->add_option("--digits", o.digits, "Digits after the decimal point (default 32)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check monomial exactness and block residuals");
  add_rule(verify);
  verify->add_option("--max-degree", o.max_degree, "Largest total degree in the sweep (>= 5)")
      ->check(CLI::Range(5, 40));
  verify->add_option("--tolerance", o.tolerance, "Relative tolerance for |alpha| <= 5 (default 1e-14)");

  auto* derive = app.add_subcommand("derive", "Re-derive both rules numerically and compare");
  derive->add_option("--tolerance", o.tolerance, "Relative agreement tolerance (default 1e-12)");
  derive->add_option("--digits", o.digits, "Precision of the odd-power residual check (default 64)")
      ->check(CLI::Range(32, 4096));

  auto* integ = app.add_subcommand("integrate", "Apply a rule to a polynomial integrand");
  add_rule(integ);
  integ->add_option("--monomial", o.monomial, "Integrand x^a y^b z^c given as a,b,c");
  integ->add_option("--poly", o.poly_file, "Polynomial file: lines `a b c coefficient`");
  integ->add_option("--cell", o.cell_file, "Hexahedron file: 8 lines `x y z`");
  integ->add_option("--digits", o.digits, "Digits after the decimal point (default 15)")
      ->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*emit) return do_emit(o, out);
    if (*verify) return do_verify(o, out);
    if (*derive) return do_derive(o, out);
    return do_integrate(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace stroud::cli
