// coreforms CLI: counting tables, identity verification sweeps, the
// partition -> quadratic form pipeline, series dumps, and the on-disk
// Hurwitz cache. Data rows go to stdout; diagnostics to stderr. Exit codes:
// 0 all-pass, 1 any verification failure, 2 usage error.
#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "coreforms/abacus.hpp"
#include "coreforms/arith.hpp"
#include "coreforms/class_numbers.hpp"
#include "coreforms/other_cores.hpp"
#include "coreforms/partitions.hpp"
#include "coreforms/qseries.hpp"
#include "coreforms/quadform.hpp"
#include "coreforms/sc7.hpp"
#include "coreforms/three_squares.hpp"
#include "coreforms/verify.hpp"

using json = nlohmann::json;
using namespace coreforms;

namespace {

struct RangeArg {
  long long lo = 0, hi = 0;
};

bool parse_range(const std::string& text, RangeArg& out) {
  auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    out.lo = std::stoll(text.substr(0, pos));
    out.hi = std::stoll(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return out.lo <= out.hi && out.lo >= 0;
}

std::string sep_for(const std::string& format) {
  return format == "tsv" ? "\t" : ",";
}

std::string join_ll(const std::vector<long long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

int run_count(long long t, bool sc, const std::string& method,
              const RangeArg& range, const std::string& format,
              long long oracle_bound) {
  using CountFn = std::function<long long(long long)>;
  CountFn fn;
  if (method == "brute") {
    fn = [&](long long n) {
      return sc ? partitions::count_sc_t_cores_brute(n, t, oracle_bound)
                : partitions::count_t_cores_brute(n, t, oracle_bound);
    };
  } else if (method == "lattice") {
    fn = [&](long long n) {
      return sc ? abacus::count_sc_t_cores_lattice(n, t)
                : abacus::count_t_cores_lattice(n, t);
    };
  } else if (method == "formula") {
    if (t == 2 && !sc) {
      fn = [](long long n) { return other_cores::c2_closed(n) ? 1 : 0; };
    } else if (t == 3 && sc) {
      fn = [](long long n) { return other_cores::sc3_closed(n) ? 1 : 0; };
    } else if (t == 5 && !sc) {
      fn = [](long long n) { return other_cores::c5_closed(n); };
    } else if (t == 7 && sc) {
      fn = [](long long n) {
        Rat v = sc7::cor_counting(n);
        if (!rat_is_integer(v))
          throw std::logic_error("sc7 closed form returned a non-integer");
        return static_cast<long long>(v.get_num().get_si());
      };
    } else if (t == 9 && sc) {
      fn = [](long long n) { return other_cores::sc9_closed(n); };
    } else {
      std::cerr << "count: no closed form in scope for t=" << t
                << (sc ? " self-conjugate" : " plain") << "\n";
      return 2;
    }
  } else {
    std::cerr << "count: unknown method " << method << "\n";
    return 2;
  }

  std::vector<long long> values(static_cast<size_t>(range.hi - range.lo + 1));
  try {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long n = range.lo; n <= range.hi; ++n)
      values[static_cast<size_t>(n - range.lo)] = fn(n);
  } catch (const std::exception& ex) {
    std::cerr << "count: " << ex.what() << "\n";
    return 2;
  }

  if (format == "json") {
    json rows = json::array();
    for (long long n = range.lo; n <= range.hi; ++n)
      rows.push_back({{"n", n}, {"count", values[static_cast<size_t>(n - range.lo)]}});
    std::cout << rows.dump(2) << "\n";
  } else {
    std::string sep = sep_for(format);
    std::cout << "n" << sep << "count\n";
    for (long long n = range.lo; n <= range.hi; ++n)
      std::cout << n << sep << values[static_cast<size_t>(n - range.lo)] << "\n";
  }
  return 0;
}

int run_verify(const std::string& id, const RangeArg* range, long long precision,
               const std::string& format) {
  verify::Options opts;
  if (range) {
    opts.range_lo = range->lo;
    opts.range_hi = range->hi;
  }
  if (precision > 0) opts.precision = precision;
  verify::Result res;
  try {
    res = verify::run_id(id, opts);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "verify: " << ex.what() << "\n";
    return 2;
  }

  if (format == "json") {
    json out{{"id", res.id},
             {"description", res.description},
             {"pass", res.pass},
             {"instances", res.instances},
             {"failures", res.failures},
             {"skipped", res.skipped},
             {"detail", res.detail}};
    out["flagged"] = res.flagged;
    json rows = json::array();
    for (const auto& r : res.rows)
      rows.push_back({{"n", r.n},
                      {"status", r.skipped ? "skip" : (r.pass ? "pass" : "fail")}});
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  } else {
    std::string sep = sep_for(format);
    std::cout << "n" << sep << "status\n";
    for (const auto& r : res.rows)
      std::cout << r.n << sep << (r.skipped ? "skip" : (r.pass ? "pass" : "fail"))
                << "\n";
  }
  std::cerr << res.id << ": " << (res.pass ? "PASS" : "FAIL") << " ("
            << res.detail << ")\n";
  for (const auto& f : res.flagged) std::cerr << "  note: " << f << "\n";
  return res.pass ? 0 : 1;
}

int run_phi(long long n, const std::string& format) {
  auto records = quadform::phi_records(n);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"partition", r.partition.parts()},
                      {"abacus", r.abacus_counts.counts},
                      {"list", r.list.entries},
                      {"triple", {r.triple.x, r.triple.y, r.triple.z}},
                      {"form", {r.form.a, r.form.b, r.form.c}},
                      {"disc", r.form.disc()}});
    }
    std::cout << json{{"n", n}, {"records", rows}}.dump(2) << "\n";
  } else {
    std::string sep = sep_for(format);
    std::cout << "partition" << sep << "abacus" << sep << "list" << sep
              << "triple" << sep << "form\n";
    for (const auto& r : records) {
      std::cout << join_ll(r.partition.parts()) << sep
                << join_ll(r.abacus_counts.counts) << sep
                << join_ll(r.list.entries) << sep
                << r.triple.x << ' ' << r.triple.y << ' ' << r.triple.z << sep
                << r.form.a << ' ' << r.form.b << ' ' << r.form.c << "\n";
    }
  }
  std::cerr << "phi " << n << ": " << records.size() << " record(s)\n";
  return 0;
}

int run_table(const std::string& series, long long precision) {
  using class_numbers::HurwitzTable;
  qseries::QSeries s;
  if (series == "theta") {
    s = qseries::theta(precision);
  } else if (series == "theta3") {
    s = qseries::theta_cubed(precision);
  } else if (series == "hseries") {
    s = qseries::hseries(precision, HurwitzTable::build(precision));
  } else if (series == "h12") {
    s = qseries::h_one_two(precision, HurwitzTable::build(2 * precision));
  } else if (series == "S") {
    s = qseries::sc7_series(precision);
  } else if (series == "c2eta") {
    s = qseries::eta_expand(qseries::c2_eta_quotient(), precision);
  } else if (series == "sc3eta") {
    s = qseries::eta_expand(qseries::sc3_eta_quotient(), precision);
  } else {
    std::cerr << "table: unknown series " << series << "\n";
    return 2;
  }
  std::cout << qseries::dump(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and verification for t-core partitions, "
               "class numbers, three squares, q-series and quadratic forms"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "number of worker threads (default: all)");

  // count
  auto* count = app.add_subcommand("count", "counting tables for c_t / sc_t");
  long long count_t = 7;
  bool count_sc = false;
  std::string count_method = "lattice";
  std::string count_range = "0..20";
  std::string count_format = "csv";
  long long oracle_bound = partitions::kDefaultOracleBound;
  count->add_option("--t", count_t, "core parameter t")->required();
  count->add_flag("--sc", count_sc, "count self-conjugate cores");
  count->add_option("--method", count_method, "brute | lattice | formula");
  count->add_option("--range", count_range, "inclusive range A..B");
  count->add_option("--format", count_format, "csv | json | tsv");
  count->add_option("--oracle-bound", oracle_bound,
                    "size bound for the brute-force oracle");

  // verify
  auto* ver = app.add_subcommand("verify", "identity verification sweeps");
  std::string verify_id;
  std::string verify_range;
  long long verify_precision = 0;
  std::string verify_format = "csv";
  ver->add_option("id", verify_id, "identity id (see --list)")->required();
  ver->add_option("--range", verify_range, "inclusive range A..B");
  ver->add_option("--precision", verify_precision, "series precision");
  ver->add_option("--format", verify_format, "csv | json | tsv");

  auto* lst = app.add_subcommand("list", "list registered identity ids");

  // phi
  auto* phi = app.add_subcommand("phi",
                                 "self-conjugate 7-cores of n with abacus, "
                                 "list, triple and quadratic form");
  long long phi_n = 0;
  std::string phi_format = "csv";
  phi->add_option("n", phi_n, "partition size")->required();
  phi->add_option("--format", phi_format, "csv | json | tsv");

  // table
  auto* tab = app.add_subcommand("table", "dump a q-series as exponent<TAB>num/den");
  std::string table_series;
  long long table_precision = 100;
  tab->add_option("--series", table_series,
                  "theta | theta3 | hseries | h12 | S | c2eta | sc3eta")
      ->required();
  tab->add_option("--precision", table_precision, "truncation exponent");

  // hcache
  auto* hc = app.add_subcommand("hcache", "on-disk cache of 12 H(D) values");
  auto* hc_build = hc->add_subcommand("build", "build and save a cache");
  long long hc_maxd = 1000000;
  std::string hc_out;
  hc_build->add_option("--max-d", hc_maxd, "largest D");
  hc_build->add_option("--out", hc_out, "output file")->required();
  auto* hc_info = hc->add_subcommand("info", "print cache header");
  std::string hc_file;
  hc_info->add_option("file", hc_file, "cache file")->required();
  auto* hc_check = hc->add_subcommand("check", "validate sampled entries");
  std::string hc_check_file;
  long long hc_samples = 200;
  hc_check->add_option("file", hc_check_file, "cache file")->required();
  hc_check->add_option("--samples", hc_samples, "number of sampled D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (count->parsed()) {
      RangeArg range;
      if (!parse_range(count_range, range)) {
        std::cerr << "count: bad range " << count_range << "\n";
        return 2;
      }
      return run_count(count_t, count_sc, count_method, range, count_format,
                       oracle_bound);
    }
    if (ver->parsed()) {
      RangeArg range;
      bool has_range = !verify_range.empty();
      if (has_range && !parse_range(verify_range, range)) {
        std::cerr << "verify: bad range " << verify_range << "\n";
        return 2;
      }
      return run_verify(verify_id, has_range ? &range : nullptr,
                        verify_precision, verify_format);
    }
    if (lst->parsed()) {
      for (const auto& e : verify::registry())
        std::cout << e.id << "\t" << e.description << "\n";
      return 0;
    }
    if (phi->parsed()) return run_phi(phi_n, phi_format);
    if (tab->parsed()) return run_table(table_series, table_precision);
    if (hc->parsed()) {
      if (hc_build->parsed()) {
        auto t = class_numbers::HurwitzTable::build(hc_maxd);
        t.save(hc_out);
        std::cerr << "hcache: wrote 12H(0.." << hc_maxd << ") to " << hc_out
                  << "\n";
        return 0;
      }
      if (hc_info->parsed()) {
        auto t = class_numbers::HurwitzTable::load(hc_file);
        std::cout << "max_d" << "\t" << t.max_d << "\n";
        std::cout << "entries" << "\t" << t.twelve_h.size() << "\n";
        return 0;
      }
      if (hc_check->parsed()) {
        auto t = class_numbers::HurwitzTable::load(hc_check_file);
        long long step = std::max<long long>(1, t.max_d / hc_samples);
        long long bad = 0;
        for (long long D = 0; D <= t.max_d; D += step)
          if (t.twelve(D) != class_numbers::twelve_hurwitz(D)) ++bad;
        std::cerr << "hcache: " << (bad == 0 ? "OK" : "CORRUPT") << "\n";
        return bad == 0 ? 0 : 1;
      }
      std::cerr << "hcache: expected a subcommand (build | info | check)\n";
      return 2;
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
