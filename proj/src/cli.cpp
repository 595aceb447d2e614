#include "twodir/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twodir/analysis.hpp"
#include "twodir/discrete_moments.hpp"
#include "twodir/doubling.hpp"
#include "twodir/errors.hpp"
#include "twodir/mask_io.hpp"
#include "twodir/separation.hpp"
#include "twodir/spectral.hpp"

namespace twodir {

using nlohmann::json;

namespace {

constexpr int kTableDigits = 7;

std::string fixed(double v, int digits = kTableDigits) {
  // Avoid printing "-0.0000000" for values that round to zero.
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  if (std::abs(z.imag()) < 0.5e-7) return fixed(z.real());
  std::ostringstream os;
  os << fixed(z.real()) << (z.imag() < 0 ? " - " : " + ") << fixed(std::abs(z.imag())) << "i";
  return os.str();
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << std::setw(14) << fixed(v(i));
  return os.str();
}

json vector_json(const Vector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json series_json(const std::vector<Vector>& series) {
  json arr = json::array();
  for (const auto& v : series) arr.push_back(vector_json(v));
  return arr;
}

std::vector<Vector> series_from_json(const json& arr) {
  std::vector<Vector> out;
  for (const auto& row : arr) {
    const auto values = row.get<std::vector<double>>();
    out.push_back(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
  }
  return out;
}

void print_condition(std::ostream& out, const std::string& title, const Matrix& a,
                     const ConditionEReport& rep) {
  out << title << " (" << a.rows() << "x" << a.cols() << ")\n";
  out << "  eigenvalues:";
  for (const auto& l : rep.eigenvalues) out << "  " << format_complex(l);
  out << "\n  simple eigenvalue 1: " << (rep.has_simple_one ? "yes" : "no")
      << "\n  other eigenvalues inside unit disk: " << (rep.spectral_ok ? "yes" : "no")
      << "\n  Condition E: " << (rep.satisfied ? "satisfied" : "NOT satisfied")
      << " (tolerance " << rep.tolerance_used << ")\n";
}

void print_series(std::ostream& out, const std::string& title, const std::string& symbol,
                  const std::vector<Vector>& series) {
  out << title << '\n';
  for (std::size_t j = 0; j < series.size(); ++j) {
    out << "  " << symbol << "_" << j << std::string(j < 10 ? 2 : 1, ' ')
        << format_vector(series[j]) << '\n';
  }
}

struct MomentsArgs {
  std::string mask;
  std::string method = "both";
  int order = kDefaultOrder;
  std::string format = "table";
  double vanishing_tol = 1e-10;
  double eigen_tol = kEigenOneTolerance;
  bool flip = false;
};

int cmd_check(const std::string& spec, double tol, std::ostream& out) {
  const auto bundle = resolve_mask(spec);
  const auto& s = bundle.scaling;
  out << "mask: " << s.name << " (d = " << s.dilation << ", r = " << s.multiplicity << ")\n";
  const Matrix doubled = doubled_mask_at_one(s);
  const auto rep_doubled = condition_e(doubled, tol);
  print_condition(out, "doubled mask symbol at 1", doubled, rep_doubled);
  const Matrix m0 = discrete_moment_phi(s, 0).total;
  const auto rep_m0 = condition_e(m0, tol);
  print_condition(out, "zeroth discrete moment M_0", m0, rep_m0);
  const bool ok = rep_doubled.satisfied && rep_m0.satisfied;
  out << "verdict: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_moments(const MomentsArgs& args, std::ostream& out) {
  const auto bundle = resolve_mask(args.mask);
  const auto& s = bundle.scaling;
  MomentOptions options;
  options.eigen_tolerance = args.eigen_tol;
  options.flip_sign = args.flip;

  const bool want_doubling = args.method == "doubling" || args.method == "both";
  const bool want_separation = args.method == "separation" || args.method == "both";

  json doc;
  doc["mask"] = s.name;
  doc["dilation"] = s.dilation;
  doc["multiplicity"] = s.multiplicity;
  doc["max_order"] = args.order;
  doc["results"] = json::array();

  auto vanishing_of = [&](const MomentTable& t) {
    json v = json::object();
    for (const auto& [branch, series] : t.psi) {
      const auto rep = vanishing_moments(series, args.vanishing_tol);
      v[std::to_string(branch)] = {{"count", rep.count}, {"exhausted", rep.exhausted}};
    }
    return v;
  };

  auto print_table = [&](const MomentTable& t) {
    out << "method: " << to_string(t.method) << "  (" << s.name << ", d = " << s.dilation
        << ", r = " << s.multiplicity << ")\n";
    print_series(out, "phi moments", "m", t.phi);
    for (const auto& [branch, series] : t.psi) {
      print_series(out, "psi(" + std::to_string(branch) + ") moments", "n", series);
      const auto rep = vanishing_moments(series, args.vanishing_tol);
      out << "psi(" << branch << "): " << rep.count << (rep.exhausted ? "+" : "")
          << " vanishing moments observed; approximation order " << rep.count
          << (rep.exhausted ? " or more" : "") << '\n';
    }
  };

  if (want_doubling) {
    const auto d = moments_by_doubling(bundle, args.order, options);
    if (args.format == "json") {
      json entry = moment_table_to_json(d.extracted);
      entry["phi_doubled"] = series_json(d.m_doubled);
      json nd = json::object();
      for (const auto& [branch, series] : d.n_doubled) nd[std::to_string(branch)] = series_json(series);
      entry["psi_doubled"] = nd;
      entry["vanishing"] = vanishing_of(d.extracted);
      doc["results"].push_back(entry);
    } else {
      print_table(d.extracted);
      print_series(out, "Phi moments (doubled)", "m", d.m_doubled);
      for (const auto& [branch, series] : d.n_doubled) {
        print_series(out, "Psi(" + std::to_string(branch) + ") moments (doubled)", "n", series);
      }
      out << '\n';
    }
  }
  if (want_separation) {
    const auto t = moments_by_separation(bundle, args.order, options);
    if (args.format == "json") {
      json entry = moment_table_to_json(t);
      entry["vanishing"] = vanishing_of(t);
      doc["results"].push_back(entry);
    } else {
      print_table(t);
    }
  }
  if (args.format == "json") out << std::setw(2) << doc << '\n';
  return kExitOk;
}

int cmd_compare(const std::string& spec, int order, double tol, std::ostream& out) {
  const auto bundle = resolve_mask(spec);
  const auto rep = compare_methods(bundle, order, tol);
  out << "doubling vs separation  (" << bundle.scaling.name << ")\n";
  for (std::size_t j = 0; j < rep.per_order.size(); ++j) {
    out << "  j = " << j << "  max |diff| = " << std::scientific << std::setprecision(3)
        << rep.per_order[j] << '\n';
  }
  out << "overall max |diff| = " << rep.overall << "  tolerance = " << rep.tolerance
      << std::defaultfloat << '\n';
  out << "verdict: " << (rep.pass ? "PASS" : "FAIL") << '\n';
  return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const std::string& spec, int iterations, int level, int order, double tol,
               const std::string& csv, std::ostream& out) {
  const auto bundle = resolve_mask(spec);
  const auto rep = oracle_check(bundle, iterations, level, order);
  out << "cascade oracle  (" << bundle.scaling.name << ", iterations = " << iterations
      << ", level = " << level << ")\n";
  bool ok = true;
  for (std::size_t j = 0; j < rep.deviation.size(); ++j) {
    out << "  j = " << j << "\n    quadrature " << format_vector(rep.quadrature[j])
        << "\n    recursion  " << format_vector(rep.recursion[j]) << "\n    max |diff| = "
        << std::scientific << std::setprecision(3) << rep.deviation[j] << std::defaultfloat
        << '\n';
    ok = ok && rep.deviation[j] <= tol;
  }
  out << "verdict: " << (ok ? "PASS" : "FAIL") << " (tolerance " << tol << ")\n";
  if (!csv.empty()) {
    write_csv(cascade_samples(bundle.scaling, iterations, level), csv);
    out << "samples written to " << csv << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_examples_export(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& name : bundled_example_names()) {
    const auto path = (std::filesystem::path(dir) / (name + ".json")).string();
    std::ofstream file(path, std::ios::binary);
    file << bundled_example_text(name);
    if (!file) throw MaskFileError(path + ": write failed");
    out << path << '\n';
  }
  return kExitOk;
}

}  // namespace

json moment_table_to_json(const MomentTable& table) {
  json doc;
  doc["method"] = std::string(to_string(table.method));
  doc["max_order"] = table.order_max;
  doc["phi"] = series_json(table.phi);
  json psi = json::object();
  for (const auto& [branch, series] : table.psi) psi[std::to_string(branch)] = series_json(series);
  doc["psi"] = psi;
  return doc;
}

MomentTable moment_table_from_json(const json& doc) {
  MomentTable t;
  const auto method = doc.at("method").get<std::string>();
  if (method == "doubling") {
    t.method = Method::Doubling;
  } else if (method == "separation") {
    t.method = Method::Separation;
  } else {
    throw Error("unknown method '" + method + "'");
  }
  t.order_max = doc.at("max_order").get<int>();
  t.phi = series_from_json(doc.at("phi"));
  for (const auto& [key, series] : doc.at("psi").items()) {
    t.psi[std::stoi(key)] = series_from_json(series);
  }
  return t;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous moments of two-direction multiscaling functions and multiwavelets",
               "twodir-moments"};
  app.require_subcommand(1);

  std::string mask;
  double tol = kEigenOneTolerance;
  auto* check = app.add_subcommand("check", "Test Condition E (doubled 2r x 2r and r x r)");
  check->add_option("mask", mask, "Mask file or bundled example name")->required();
  check->add_option("--tol", tol, "Eigenvalue-1 detection tolerance");

  MomentsArgs margs;
  auto* moments = app.add_subcommand("moments", "Compute continuous moments");
  moments->add_option("mask", margs.mask, "Mask file or bundled example name")->required();
  moments->add_option("--method", margs.method)
      ->check(CLI::IsMember({"doubling", "separation", "both"}));
  moments->add_option("--max-order", margs.order)->check(CLI::Range(0, kDefaultMaxOrder));
  moments->add_option("--format", margs.format)->check(CLI::IsMember({"table", "json"}));
  moments->add_option("--vanishing-tol", margs.vanishing_tol);
  moments->add_option("--tol", margs.eigen_tol, "Eigenvalue-1 detection tolerance");
  moments->add_flag("--flip-sign", margs.flip, "Use the negative zeroth moment");

  int order = kDefaultOrder;
  double compare_tol = 1e-9;
  auto* compare = app.add_subcommand("compare", "Compare doubling and separation results");
  compare->add_option("mask", mask)->required();
  compare->add_option("--max-order", order)->check(CLI::Range(0, kDefaultMaxOrder));
  compare->add_option("--tol", compare_tol);

  int iterations = 12;
  int level = 12;
  int oracle_order = 2;
  double oracle_tol = 1e-3;
  std::string csv;
  auto* oracle = app.add_subcommand("oracle", "Cross-check moments against the cascade algorithm");
  oracle->add_option("mask", mask)->required();
  oracle->add_option("--iterations", iterations)->check(CLI::NonNegativeNumber);
  oracle->add_option("--level", level)->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-order", oracle_order)->check(CLI::Range(0, kDefaultMaxOrder));
  oracle->add_option("--tol", oracle_tol);
  oracle->add_option("--dump-csv", csv, "Write cascade samples as CSV");

  std::string export_dir;
  auto* examples = app.add_subcommand("examples", "Bundled example masks");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list", "List bundled examples");
  auto* exp = examples->add_subcommand("export", "Write bundled examples as JSON files");
  exp->add_option("dir", export_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(mask, tol, out);
    if (*moments) return cmd_moments(margs, out);
    if (*compare) return cmd_compare(mask, order, compare_tol, out);
    if (*oracle) return cmd_oracle(mask, iterations, level, oracle_order, oracle_tol, csv, out);
    if (*list) {
      for (const auto& name : bundled_example_names()) out << name << '\n';
      return kExitOk;
    }
    if (*exp) return cmd_examples_export(export_dir, out);
  } catch (const MaskFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConditionEError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace twodir
