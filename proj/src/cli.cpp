#include "cyclosemi/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cyclosemi/census.hpp"
#include "cyclosemi/cyclotomic.hpp"
#include "cyclosemi/family.hpp"
#include "cyclosemi/rootloc.hpp"
#include "cyclosemi/semigroup.hpp"
#include "cyclosemi/serialize.hpp"

namespace cyclosemi {

unsigned resolve_workers(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("CYCLOSEMI_WORKERS"); env != nullptr && *env != '\0') {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("CYCLOSEMI_WORKERS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<ScanRow> scan_family(std::int64_t t, std::int64_t n_min, std::int64_t n_max, unsigned workers) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (!FamilyParams::valid(n_min, t)) {
    throw std::invalid_argument("n-min = " + std::to_string(n_min) + " is outside the family domain for t = " +
                                std::to_string(t) + " (need n >= " + std::to_string(6 * t + 2) +
                                (t == 0 ? ", n >= 3" : "") + ")");
  }
  if (n_max < n_min) throw std::invalid_argument("n-max must be at least n-min");

  std::vector<ScanRow> rows(static_cast<std::size_t>(n_max - n_min + 1));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const auto params = FamilyParams::make(n_min + static_cast<std::int64_t>(i), t);
      const FamilyVerdict v = family_verdict(params);
      rows[i] = {params.n(), t, v.embedding_dimension, v.expected_embedding_dimension, v.symmetric, v.cyclotomic,
                 v.agrees()};
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return rows;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const std::vector<Element>& gens, const std::string& format, std::ostream& out) {
  const auto s = NumericalSemigroup::from_generators(gens);
  const auto report = cyclotomic_test(semigroup_polynomial(s));
  if (format == "text") {
    out << "minimal generators:";
    for (Element g : s.minimal_generators()) out << ' ' << g;
    out << "\nembedding dimension: " << s.embedding_dimension() << "\nfrobenius: " << s.frobenius()
        << "\ngenus: " << s.genus() << "\npolynomial: " << semigroup_polynomial(s).to_string()
        << "\nsymmetric: " << yes_no(is_symmetric(s)) << "\ncyclotomic: " << yes_no(report.is_cyclotomic) << '\n';
    return kExitOk;
  }
  Json j = analysis_record(s);
  j["cyclotomic_report"] = cyclotomic_report_json(report);
  print_json(out, j);
  return kExitOk;
}

int cmd_family(std::int64_t n, std::int64_t t, std::ostream& out) {
  const auto params = FamilyParams::make(n, t);
  const auto s = family_semigroup(params);
  const IntPoly derived = semigroup_polynomial(s);
  const IntPoly closed = family_polynomial_closed_form(params);
  const auto report = cyclotomic_test(derived);

  Json j;
  j["n"] = std::to_string(n);
  j["t"] = std::to_string(t);
  j["analysis"] = analysis_record(s);
  j["closed_form"] = poly_to_json(closed);
  j["closed_form_agrees"] = closed == derived;
  j["expected_embedding_dimension"] = std::to_string(params.expected_embedding_dimension());
  j["cyclotomic_report"] = cyclotomic_report_json(report);
  j["theorem_threshold"] = std::to_string(theorem_threshold(t));
  j["certificate_threshold"] = std::to_string(certificate_threshold(t));
  print_json(out, j);
  return closed == derived ? kExitOk : kExitAssertionFailed;
}

int cmd_scan(std::int64_t t, std::int64_t n_min, std::int64_t n_max, const std::string& format, int workers,
             std::ostream& out) {
  const auto rows = scan_family(t, n_min, n_max, resolve_workers(workers));
  bool all_agree = true;
  for (const auto& r : rows) all_agree = all_agree && r.agree;

  if (format == "csv") {
    out << "n,t,embedding_dimension,expected_dimension,symmetric,cyclotomic,agree\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.t << ',' << r.embedding_dimension << ',' << r.expected_dimension << ','
          << yes_no(r.symmetric) << ',' << yes_no(r.cyclotomic) << ',' << yes_no(r.agree) << '\n';
    }
  } else {
    Json j;
    j["t"] = std::to_string(t);
    j["n_min"] = std::to_string(n_min);
    j["n_max"] = std::to_string(n_max);
    j["all_agree"] = all_agree;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json rj;
      rj["n"] = std::to_string(r.n);
      rj["t"] = std::to_string(r.t);
      rj["embedding_dimension"] = std::to_string(r.embedding_dimension);
      rj["expected_dimension"] = std::to_string(r.expected_dimension);
      rj["symmetric"] = r.symmetric;
      rj["cyclotomic"] = r.cyclotomic;
      rj["agree"] = r.agree;
      arr.push_back(std::move(rj));
    }
    j["rows"] = std::move(arr);
    print_json(out, j);
  }
  return all_agree ? kExitOk : kExitAssertionFailed;
}

struct RootsOptions {
  std::int64_t n = 0;
  std::int64_t t = 0;
  bool band = false;
  bool count = false;
  bool certificate = false;
  bool exclusion = false;
  std::string samples_csv;
  std::size_t samples = 0;
};

int cmd_roots(const RootsOptions& o, std::ostream& out) {
  const auto params = FamilyParams::make(o.n, o.t);
  const QKernel kernel(o.n, o.t);
  const IntPoly p = family_polynomial_closed_form(params);
  bool ok = true;

  Json j;
  j["n"] = std::to_string(o.n);
  j["t"] = std::to_string(o.t);
  j["degree"] = std::to_string(p.degree());
  const auto roots = complex_roots(p);
  double deviation = 0.0;
  for (const auto& z : roots) deviation = std::max(deviation, std::abs(std::abs(z) - 1.0));
  j["roots"] = roots_to_json(roots);
  j["reconstruction_error"] = reconstruction_error(p, roots);
  j["max_modulus_deviation"] = deviation;

  if (o.count) {
    Json c = unit_circle_roots_to_json(count_unit_circle_roots(kernel));
    const auto report = cyclotomic_test(p);
    c["exact_cyclotomic_degree"] = std::to_string(report.cyclotomic_degree());
    c["exact_cyclotomic"] = report.is_cyclotomic;
    j["unit_circle"] = std::move(c);
  }
  if (o.exclusion) {
    const bool excl = exclusion_check(kernel);
    j["exclusion_ok"] = excl;
    ok = ok && excl;
  }
  if (o.certificate) {
    const auto cert = certificate_check(kernel);
    j["certificate"] = certificate_to_json(cert);
    ok = ok && cert.passed();
  }
  if (o.band) {
    if (o.t != 0) throw std::invalid_argument("--band applies to t = 0 only");
    const auto band = theorem7_band_check(o.n);
    j["band"] = band_report_to_json(band);
    ok = ok && band.pass();
  }
  if (!o.samples_csv.empty()) {
    std::ofstream csv(o.samples_csv);
    if (!csv) throw std::invalid_argument("cannot write " + o.samples_csv);
    csv << "theta,q\n" << std::setprecision(17);
    const std::size_t count = o.samples > 0 ? o.samples : static_cast<std::size_t>(64 * o.n);
    for (const auto& [theta, q] : q_samples(kernel, count)) csv << theta << ',' << q << '\n';
    j["samples_csv"] = o.samples_csv;
  }
  print_json(out, j);
  return ok ? kExitOk : kExitAssertionFailed;
}

int cmd_census(int max_genus, int workers, const std::string& format, const std::string& summary_path,
               std::int64_t node_limit, std::ostream& out) {
  const auto table = run_census({max_genus, resolve_workers(workers), node_limit});

  Json summary;
  summary["max_genus"] = std::to_string(max_genus);
  summary["nodes"] = std::to_string(table.nodes());
  summary["partial"] = table.partial;
  Json totals = Json::array();
  for (auto v : table.totals_by_genus()) totals.push_back(std::to_string(v));
  summary["totals_by_genus"] = std::move(totals);
  summary["symmetry_disagreements"] = std::to_string(table.symmetry_disagreements());
  summary["low_dimension_mismatches"] = std::to_string(table.low_dimension_mismatches());
  summary["low_dimension_equivalence"] = table.low_dimension_mismatches() == 0;
  Json rows = Json::array();
  for (const auto& r : table.rows()) rows.push_back(census_row_to_json(r));
  summary["rows"] = std::move(rows);

  if (format == "json") {
    print_json(out, summary);
  } else {
    out << "genus,e,total,symmetric,cyclotomic,sym_not_cyc\n";
    for (const auto& r : table.rows()) {
      out << r.genus << ',' << r.embedding_dimension << ',' << r.total << ',' << r.symmetric << ',' << r.cyclotomic
          << ',' << r.symmetric_not_cyclotomic() << '\n';
    }
  }
  if (!summary_path.empty()) {
    std::ofstream f(summary_path);
    if (!f) throw std::invalid_argument("cannot write " + summary_path);
    f << summary.dump(2) << '\n';
  }
  const bool ok = table.symmetry_disagreements() == 0 && table.low_dimension_mismatches() == 0 && !table.partial;
  return ok ? kExitOk : kExitAssertionFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry and cyclotomicity of numerical semigroups", "cyclosemi"};
  app.set_version_flag("--version", std::string("cyclosemi ") + kVersion);
  app.require_subcommand(1);

  std::vector<Element> gens;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "Analyze the semigroup generated by the given integers");
  analyze->add_option("generators", gens, "Generators")->required();
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "text"}));

  std::int64_t fam_n = 0;
  std::int64_t fam_t = 0;
  auto* family = app.add_subcommand("family", "Build S_{n,t} and compare with the closed-form polynomial");
  family->add_option("--n", fam_n)->required();
  family->add_option("--t", fam_t)->required();

  std::int64_t scan_t = 0;
  std::int64_t scan_min = 0;
  std::int64_t scan_max = 0;
  std::string scan_format = "json";
  int workers = 0;
  auto* scan = app.add_subcommand("scan", "Check every S_{n,t} for n in a range");
  scan->add_option("--t", scan_t)->required();
  scan->add_option("--n-min", scan_min)->required();
  scan->add_option("--n-max", scan_max)->required();
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--workers", workers, "Worker threads (default: CYCLOSEMI_WORKERS or all cores)");

  RootsOptions roots_opts;
  auto* roots = app.add_subcommand("roots", "Root location analysis of the S_{n,t} polynomial");
  roots->add_option("--n", roots_opts.n)->required();
  roots->add_option("--t", roots_opts.t)->required();
  roots->add_flag("--band", roots_opts.band, "Check the root-modulus band (t = 0)");
  roots->add_flag("--count", roots_opts.count, "Count unit-circle roots");
  roots->add_flag("--certificate", roots_opts.certificate, "Evaluate the interval sign certificate");
  roots->add_flag("--exclusion", roots_opts.exclusion, "Check the root-free window around theta = 0");
  roots->add_option("--samples-csv", roots_opts.samples_csv, "Write (theta, Q(theta)) samples to this file");
  roots->add_option("--samples", roots_opts.samples, "Number of samples for --samples-csv (default 64n)");

  int max_genus = 0;
  std::string census_format = "csv";
  std::string summary_path;
  std::int64_t node_limit = 0;
  auto* census = app.add_subcommand("census", "Classify every numerical semigroup up to a genus");
  census->add_option("--max-genus", max_genus)->required();
  census->add_option("--workers", workers, "Worker threads (default: CYCLOSEMI_WORKERS or all cores)");
  census->add_option("--format", census_format)->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--summary", summary_path, "Also write the JSON summary to this file");
  census->add_option("--node-limit", node_limit, "Stop after this many semigroups (result flagged partial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(gens, analyze_format, out);
    if (*family) return cmd_family(fam_n, fam_t, out);
    if (*scan) return cmd_scan(scan_t, scan_min, scan_max, scan_format, workers, out);
    if (*roots) return cmd_roots(roots_opts, out);
    if (*census) return cmd_census(max_genus, workers, census_format, summary_path, node_limit, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertionFailed;
  }
  return kExitUsage;
}

}  // namespace cyclosemi
