// Command line front end: covering counts, single-configuration
// entanglement, density sweeps and oracle cross-checks.
//
// Exit codes: 0 success, 1 usage error, 2 validation or cross-check failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rvbent/covering.hpp"
#include "rvbent/entanglement.hpp"
#include "rvbent/lattice.hpp"
#include "rvbent/oracle.hpp"
#include "rvbent/transition.hpp"

using nlohmann::ordered_json;

namespace {

struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

rvbent::Lattice parse_lattice_spec(const std::string& spec) {
  std::string dims = spec;
  rvbent::Boundary boundary = rvbent::Boundary::open;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    dims = spec.substr(0, colon);
    boundary = rvbent::boundary_from_string(spec.substr(colon + 1));
  }
  const auto cross = dims.find('x');
  if (cross == std::string::npos)
    throw std::invalid_argument("lattice spec must look like 4x6:open, got '" +
                                spec + "'");
  int rows = 0;
  int cols = 0;
  try {
    std::size_t used = 0;
    rows = std::stoi(dims.substr(0, cross), &used);
    if (used != cross) throw std::invalid_argument(spec);
    const std::string tail = dims.substr(cross + 1);
    cols = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw std::invalid_argument("lattice spec must look like 4x6:open, got '" +
                                spec + "'");
  }
  return rvbent::build_lattice(rows, cols, boundary);
}

std::vector<int> parse_holes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad hole site '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Counts fit in a JSON integer at every supported size; anything larger is
// emitted as a decimal string rather than rounded.
ordered_json big_to_json(const rvbent::BigInt& v) {
  if (v <= rvbent::BigInt(std::numeric_limits<std::uint64_t>::max()))
    return v.convert_to<std::uint64_t>();
  return rvbent::to_string(v);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

ordered_json lattice_json(const rvbent::Lattice& lat) {
  return ordered_json{{"lattice", lat.spec_string()},
                      {"rows", lat.rows()},
                      {"cols", lat.cols()},
                      {"boundary", rvbent::to_string(lat.boundary())}};
}

int cmd_count(const rvbent::Lattice& lat, const std::optional<std::string>& holes_text,
              std::optional<int> num_holes, const std::string& details_path) {
  if (!num_holes) {
    const rvbent::HoleConfig cfg =
        rvbent::make_hole_config(lat, parse_holes(holes_text.value_or("")));
    const rvbent::BigInt count = rvbent::count_coverings(lat, cfg);

    ordered_json checks;
    const int slots = (lat.num_sites() - cfg.num_holes()) / 2;
    if (slots <= 20) {
      const rvbent::BigInt perm = rvbent::permanent_count(lat, cfg);
      checks["permanent"] = (perm == count);
      if (perm != count)
        throw CrossCheckFailure("permanent cross-check failed: " +
                                rvbent::to_string(perm) + " vs " +
                                rvbent::to_string(count));
    } else {
      checks["permanent"] = nullptr;
    }
    if (cfg.num_holes() == 0 && lat.boundary() == rvbent::Boundary::open) {
      const rvbent::BigInt closed = rvbent::fisher_count(lat.rows(), lat.cols());
      checks["closed_form"] = (closed == count);
      if (closed != count)
        throw CrossCheckFailure("closed-form cross-check failed: " +
                                rvbent::to_string(closed) + " vs " +
                                rvbent::to_string(count));
    } else {
      checks["closed_form"] = nullptr;
    }

    ordered_json out = lattice_json(lat);
    out["holes"] = cfg.all_sites();
    out["num_holes"] = cfg.num_holes();
    out["coverable"] = rvbent::is_coverable(lat, cfg);
    out["coverings"] = big_to_json(count);
    out["cross_checks"] = checks;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  const int nh = *num_holes;
  const rvbent::BigInt total = rvbent::hole_config_count(lat, nh);
  if (total > rvbent::BigInt(1'000'000))
    throw std::invalid_argument("refusing to scan " + rvbent::to_string(total) +
                                " configurations; the limit is 1000000");
  const std::uint64_t total_u = total.convert_to<std::uint64_t>();

  std::uint64_t coverable = 0;
  std::ostringstream details;
  for (std::uint64_t i = 0; i < total_u; ++i) {
    const rvbent::HoleConfig cfg = rvbent::hole_config_at(lat, nh, i);
    const bool ok = rvbent::is_coverable(lat, cfg);
    if (ok) ++coverable;
    if (!details_path.empty()) {
      ordered_json line{{"index", i},
                        {"holes", cfg.all_sites()},
                        {"coverable", ok}};
      if (ok) line["coverings"] = big_to_json(rvbent::count_coverings(lat, cfg));
      details << line.dump() << "\n";
    }
  }
  if (!details_path.empty()) write_text(details_path, details.str());

  ordered_json out = lattice_json(lat);
  out["num_holes"] = nh;
  out["config_count"] = total_u;
  out["coverable_count"] = coverable;
  out["noncoverable_count"] = total_u - coverable;
  out["noncoverable_fraction"] =
      total_u ? static_cast<double>(total_u - coverable) / total_u : 0.0;
  if (nh == 4) {
    const rvbent::BigRational est =
        rvbent::pathological_probability_estimate(lat.rows(), lat.cols());
    out["noncoverable_estimate"] = ordered_json{
        {"numerator", big_to_json(boost::multiprecision::numerator(est))},
        {"denominator", big_to_json(boost::multiprecision::denominator(est))},
        {"value", est.convert_to<double>()}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_entangle(const rvbent::Lattice& lat, const std::string& holes_text,
                 bool print_adjacency, bool emit_quad_norm) {
  const rvbent::HoleConfig cfg =
      rvbent::make_hole_config(lat, parse_holes(holes_text));
  const std::vector<rvbent::DimerCovering> coverings =
      rvbent::enumerate_coverings(lat, cfg);
  if (coverings.empty())
    throw std::invalid_argument(
        "configuration is not coverable, so it carries no state");
  const int m = static_cast<int>(coverings.front().dimers.size());
  const rvbent::NormValue nv = rvbent::norm_value(coverings);
  const rvbent::BigRational nsq = rvbent::norm_squared(nv, m);
  const double entanglement =
      rvbent::log2_bigint(nv.kohmoto_sum) -
      2.0 * rvbent::log2_bigint(rvbent::BigInt(coverings.size()));

  ordered_json out = lattice_json(lat);
  out["holes"] = cfg.all_sites();
  out["num_holes"] = cfg.num_holes();
  out["occupied"] = lat.num_sites() - cfg.num_holes();
  out["coverings"] = big_to_json(rvbent::BigInt(coverings.size()));
  out["kohmoto_sum"] = big_to_json(nv.kohmoto_sum);
  out["norm_squared"] = nsq.convert_to<double>();
  out["norm_squared_exact"] = nsq.str();
  out["entanglement"] = entanglement;
  out["separable_overlap"] = std::exp2(-0.5 * entanglement);
  if (emit_quad_norm) {
    out["quad_loop_sum"] = big_to_json(nv.quad_loop_sum);
    out["quad_norm_squared"] =
        (rvbent::BigRational(nv.quad_loop_sum) * rvbent::dyadic_pow(-m))
            .convert_to<double>();
  }
  if (print_adjacency) {
    out["first_covering_matrix"] =
        rvbent::format_adjacency_matrix(lat, coverings.front());
    if (coverings.size() > 1)
      out["first_pair_transition_matrix"] = rvbent::format_transition_matrix(
          lat, coverings[0], coverings[1]);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const rvbent::Lattice& lat, int max_holes,
              const std::string& csv_path, const std::string& json_path,
              int workers, bool include_noncoverable_as_zero) {
  if (max_holes < 0) max_holes = lat.num_sites();
  rvbent::BigInt total = 0;
  for (int nh = 0; nh <= max_holes; nh += 2)
    total += rvbent::hole_config_count(lat, nh);
  if (total > rvbent::BigInt(50'000'000))
    throw std::invalid_argument(
        "sweep would visit " + rvbent::to_string(total) +
        " configurations; the limit is 50000000");

  rvbent::SweepOptions opts;
  opts.workers = workers;
  opts.include_noncoverable_as_zero = include_noncoverable_as_zero;
  const rvbent::EntanglementCurve curve = rvbent::sweep(lat, max_holes, opts);

  std::ostringstream csv;
  csv << "rows,cols,boundary,num_holes,density,avg_entanglement,config_count,"
         "excluded_count\n";
  for (const auto& pt : curve.points) {
    csv << curve.rows << "," << curve.cols << ","
        << rvbent::to_string(curve.boundary) << "," << pt.num_holes << ","
        << fmt_double(pt.density) << "," << fmt_double(pt.avg_entanglement)
        << "," << pt.config_count << "," << pt.excluded_count << "\n";
  }

  const auto& peak = curve.points[curve.peak_index()];
  if (!json_path.empty()) {
    ordered_json out = lattice_json(lat);
    out["max_holes"] = max_holes;
    out["distribution"] = curve.distribution;
    out["points"] = ordered_json::array();
    for (const auto& pt : curve.points) {
      out["points"].push_back(ordered_json{
          {"num_holes", pt.num_holes},
          {"density", pt.density},
          {"avg_entanglement", pt.avg_entanglement},
          {"config_count", pt.config_count},
          {"excluded_count", pt.excluded_count}});
    }
    out["peak"] = ordered_json{{"num_holes", peak.num_holes},
                               {"density", peak.density},
                               {"avg_entanglement", peak.avg_entanglement}};
    write_text(json_path, out.dump(2) + "\n");
  }
  if (!csv_path.empty() || json_path.empty()) {
    write_text(csv_path.empty() ? "-" : csv_path, csv.str());
  }
  std::cerr << "peak: avg_entanglement=" << fmt_double(peak.avg_entanglement)
            << " at num_holes=" << peak.num_holes
            << " (density=" << fmt_double(peak.density) << ")\n";
  return 0;
}

struct CheckAccumulator {
  ordered_json checks = ordered_json::array();
  bool all_passed = true;

  void add(const std::string& name, bool passed, double error,
           std::uint64_t cases) {
    checks.push_back(ordered_json{{"name", name},
                                  {"passed", passed},
                                  {"max_abs_error", error},
                                  {"cases", cases}});
    all_passed = all_passed && passed;
  }
};

void oracle_check_config(const rvbent::Lattice& lat,
                         const rvbent::HoleConfig& cfg, double& count_err,
                         double& norm_err, double& ident_err, double& af_err,
                         double& basis_err) {
  const std::vector<rvbent::DimerCovering> coverings =
      rvbent::enumerate_coverings(lat, cfg);
  const rvbent::BigInt count(coverings.size());
  const rvbent::BigInt perm = rvbent::permanent_count(lat, cfg);
  count_err = std::max(count_err,
                       std::fabs((perm - count).convert_to<double>()));
  if (coverings.empty()) return;

  const int m = static_cast<int>(coverings.front().dimers.size());
  const rvbent::NormValue nv = rvbent::norm_value(coverings);
  const double exact_nsq =
      rvbent::norm_squared(nv, m).convert_to<double>();
  const rvbent::OracleRecord rec = rvbent::statevector_oracle(lat, cfg);
  norm_err = std::max(norm_err, std::fabs(rec.norm * rec.norm - exact_nsq) /
                                    std::max(1.0, exact_nsq));

  const double entanglement =
      rvbent::log2_bigint(nv.kohmoto_sum) - 2.0 * rvbent::log2_bigint(count);
  const double from_oracle = -2.0 * std::log2(rec.af_amplitude / rec.norm);
  ident_err = std::max(ident_err, std::fabs(entanglement - from_oracle));

  const double af_expected =
      count.convert_to<double>() * std::exp2(-0.5 * m);
  af_err = std::max(af_err, std::fabs(rec.af_amplitude - af_expected) /
                                std::max(1.0, af_expected));
  basis_err = std::max(basis_err,
                       std::fabs(rec.basis_max_amplitude - rec.af_amplitude));
}

int cmd_oracle_check(const rvbent::Lattice& lat,
                     const std::optional<std::string>& holes_text,
                     std::optional<int> num_holes, bool with_probe,
                     int restarts) {
  std::vector<rvbent::HoleConfig> configs;
  if (holes_text) {
    configs.push_back(rvbent::make_hole_config(lat, parse_holes(*holes_text)));
  } else {
    const int nh = num_holes.value_or(0);
    const rvbent::BigInt total = rvbent::hole_config_count(lat, nh);
    if (total > rvbent::BigInt(100'000))
      throw std::invalid_argument("refusing to cross-check " +
                                  rvbent::to_string(total) +
                                  " configurations; the limit is 100000");
    configs = rvbent::enumerate_hole_configs(lat, nh);
  }

  double count_err = 0, norm_err = 0, ident_err = 0, af_err = 0, basis_err = 0;
  double probe_err = 0;
  std::uint64_t checked = 0;
  std::uint64_t probed = 0;
  for (const auto& cfg : configs) {
    oracle_check_config(lat, cfg, count_err, norm_err, ident_err, af_err,
                        basis_err);
    ++checked;
    if (with_probe && lat.num_sites() - cfg.num_holes() <= 12 &&
        rvbent::is_coverable(lat, cfg) &&
        cfg.num_holes() < lat.num_sites()) {
      const double probe =
          rvbent::separable_maximizer_probe(lat, cfg, restarts);
      const double entanglement =
          rvbent::geometric_entanglement(lat, cfg).value;
      // The probe must reach at least the alternating basis overlap and
      // never beat a valid normalized overlap.
      const double basis_overlap = std::exp2(-0.5 * entanglement);
      if (probe < basis_overlap - 1e-9)
        probe_err = std::max(probe_err, basis_overlap - probe);
      if (probe > 1.0 + 1e-9) probe_err = std::max(probe_err, probe - 1.0);
      ++probed;
    }
  }

  CheckAccumulator acc;
  acc.add("count_vs_permanent", count_err == 0.0, count_err, checked);
  acc.add("norm_vs_statevector", norm_err <= 1e-10, norm_err, checked);
  acc.add("entanglement_identity", ident_err <= 1e-10, ident_err, checked);
  acc.add("af_amplitude_formula", af_err <= 1e-10, af_err, checked);
  acc.add("af_is_basis_max", basis_err <= 1e-10, basis_err, checked);
  if (with_probe)
    acc.add("separable_probe_bounds", probe_err == 0.0, probe_err, probed);

  ordered_json out = lattice_json(lat);
  out["configs_checked"] = checked;
  out["checks"] = acc.checks;
  out["all_passed"] = acc.all_passed;
  std::cout << out.dump(2) << "\n";
  if (!acc.all_passed) throw CrossCheckFailure("oracle cross-checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact dimer-covering counts, loop-decomposition norms and geometric "
      "entanglement on holed rectangular lattices"};
  app.require_subcommand(1);

  std::string lattice_spec;
  std::optional<std::string> holes_text;
  std::optional<int> num_holes;
  std::string details_path;
  bool print_adjacency = false;
  bool emit_quad_norm = false;
  int max_holes = -1;
  std::string csv_path;
  std::string json_path;
  int workers = 0;
  bool include_noncoverable_as_zero = false;
  bool with_probe = false;
  int restarts = 16;

  auto add_lattice = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", lattice_spec,
                    "Lattice spec, e.g. 4x6:open or 4x4:periodic")
        ->required();
  };

  CLI::App* count = app.add_subcommand(
      "count", "Count dimer coverings, cross-checked against independent "
               "methods");
  add_lattice(count);
  count->add_option("--holes", holes_text,
                    "Comma-separated hole sites, e.g. 0,5,10,15");
  count->add_option("--num-holes", num_holes,
                    "Scan every balanced configuration with this many holes");
  count->add_option("--details", details_path,
                    "Write per-configuration JSON lines here ('-' = stdout)");

  CLI::App* entangle = app.add_subcommand(
      "entangle", "Geometric entanglement of one hole configuration");
  add_lattice(entangle);
  entangle->add_option("--holes", holes_text,
                       "Comma-separated hole sites (default: none)");
  entangle->add_flag("--print-adjacency", print_adjacency,
                     "Include covering and transition matrices in the output");
  entangle->add_flag("--emit-quad-norm", emit_quad_norm,
                     "Also report the pair sum weighting nondegenerate loops "
                     "by 4");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Average entanglement against hole count, CSV or JSON");
  add_lattice(sweep);
  sweep->add_option("--max-holes", max_holes,
                    "Largest hole count to include (default: all sites)");
  sweep->add_option("--csv", csv_path, "CSV output path ('-' = stdout)");
  sweep->add_option("--json", json_path, "JSON output path ('-' = stdout)");
  sweep->add_option("--workers", workers,
                    "Worker threads (default: RVBENT_WORKERS or all cores)");
  sweep->add_flag("--include-pathological-as-zero",
                  include_noncoverable_as_zero,
                  "Average non-coverable configurations as zero instead of "
                  "excluding them");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Cross-check exact results against the state-vector "
                      "oracle");
  add_lattice(oracle);
  oracle->add_option("--holes", holes_text, "Comma-separated hole sites");
  oracle->add_option("--num-holes", num_holes,
                     "Check every configuration with this many holes");
  oracle->add_flag("--with-probe", with_probe,
                   "Also run the separable-state ascent probe");
  oracle->add_option("--restarts", restarts, "Probe restarts (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const rvbent::Lattice lat = parse_lattice_spec(lattice_spec);
    if (count->parsed()) {
      if (holes_text && num_holes)
        throw std::invalid_argument("--holes and --num-holes are exclusive");
      return cmd_count(lat, holes_text, num_holes, details_path);
    }
    if (entangle->parsed())
      return cmd_entangle(lat, holes_text.value_or(""), print_adjacency,
                          emit_quad_norm);
    if (sweep->parsed())
      return cmd_sweep(lat, max_holes, csv_path, json_path, workers,
                       include_noncoverable_as_zero);
    if (oracle->parsed()) {
      if (holes_text && num_holes)
        throw std::invalid_argument("--holes and --num-holes are exclusive");
      return cmd_oracle_check(lat, holes_text, num_holes, with_probe,
                              restarts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
