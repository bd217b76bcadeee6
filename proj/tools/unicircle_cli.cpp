// Command-line front end for libunicircle. Talks to the core exclusively
// through the extern-C API in unicircle/unicircle.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unicircle/unicircle.h"

namespace {

struct RunConfig {
  long precision_bits = 256;
  long tol_exponent = 0;  // 0: derive from precision (2^-prec/3)
  long samples = 0;       // 0: library default
  long parallelism = 1;
  std::string output_format = "json";
};

struct CString {
  char* s = nullptr;
  ~CString() { uc_string_free(s); }
};

struct PolyHandle {
  uc_poly* p = nullptr;
  ~PolyHandle() { uc_poly_free(p); }
};

[[noreturn]] void die(const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

void check(uc_status st) {
  if (st != UC_OK) die(uc_last_error(), 1);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) die("cannot open " + path, 2);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) die("cannot open " + path, 2);
  out << text << "\n";
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"precision_bits", cfg.precision_bits},
          {"tol_exponent", cfg.tol_exponent > 0 ? cfg.tol_exponent : cfg.precision_bits / 3},
          {"samples", cfg.samples > 0 ? cfg.samples : (1L << 18)},
          {"parallelism", cfg.parallelism}};
}

// Attaches the reproducibility header to a JSON report.
std::string with_config(const RunConfig& cfg, nlohmann::json j) {
  j["config"] = config_json(cfg);
  return j.dump(2);
}

std::pair<long, long> parse_k_range(const std::string& spec) {
  size_t dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      long k = std::stol(spec);
      return {k, k};
    }
    long lo = std::stol(spec.substr(0, dots));
    long hi = std::stol(spec.substr(dots + 2));
    if (lo > hi) die("empty k range: " + spec, 2);
    return {lo, hi};
  } catch (const std::exception&) {
    die("bad k range (expected K or K1..K2): " + spec, 2);
  }
}

void load_config_file(const std::string& path, RunConfig* cfg) {
  std::ifstream in(path);
  if (!in) die("cannot open config file " + path, 2);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    die(std::string("bad config file: ") + ex.what(), 2);
  }
  if (j.contains("precision_bits")) cfg->precision_bits = j["precision_bits"].get<long>();
  if (j.contains("tol_exponent")) cfg->tol_exponent = j["tol_exponent"].get<long>();
  if (j.contains("samples")) cfg->samples = j["samples"].get<long>();
  if (j.contains("parallelism")) cfg->parallelism = j["parallelism"].get<long>();
  if (j.contains("output_format")) cfg->output_format = j["output_format"].get<std::string>();
}

int run_verify_family(const RunConfig& cfg, const std::string& family, const std::string& range,
                      long verify_cap) {
  auto [k_lo, k_hi] = parse_k_range(range);
  const size_t count = static_cast<size_t>(k_hi - k_lo + 1);
  std::vector<nlohmann::json> rows(count);
  std::vector<int> pass(count, 0);
  std::vector<uc_status> status(count, UC_OK);
  std::vector<std::string> errors(count);

  long workers = std::max(1L, cfg.parallelism);
  std::vector<std::thread> threads;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      CString out;
      int ok = 0;
      uc_status st =
          uc_verify_family_k(family.c_str(), k_lo + static_cast<long>(i), cfg.precision_bits,
                             cfg.tol_exponent, cfg.samples, verify_cap, &ok, &out.s);
      status[i] = st;
      if (st == UC_OK) {
        rows[i] = nlohmann::json::parse(out.s);
        pass[i] = ok;
      } else {
        errors[i] = uc_last_error();
      }
    }
  };
  for (long t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  bool all_pass = true;
  std::string first_failure;
  // Human-oriented table on stderr, ordered by k.
  std::fprintf(stderr, "%-8s %-6s %-8s %-22s %-6s %-6s\n", "family", "k", "direct", "max|‖root‖-1|",
               "cert", "pass");
  for (size_t i = 0; i < count; ++i) {
    long k = k_lo + static_cast<long>(i);
    if (status[i] != UC_OK) {
      all_pass = false;
      if (first_failure.empty())
        first_failure = family + " k=" + std::to_string(k) + ": " + errors[i];
      std::fprintf(stderr, "%-8s %-6ld error: %s\n", family.c_str(), k, errors[i].c_str());
      continue;
    }
    const auto& r = rows[i];
    std::string dev = r.value("max_modulus_deviation", "?");
    if (dev.size() > 20) dev = dev.substr(0, 20);
    std::string cert = r.value("cert_checked", false) ? (r.value("cert_ok", false) ? "ok" : "FAIL")
                                                      : "-";
    std::string direct = r.value("direct_ok", false) ? "ok" : "FAIL";
    std::fprintf(stderr, "%-8s %-6ld %-8s %-22s %-6s %-6s\n", family.c_str(), k, direct.c_str(),
                 dev.c_str(), cert.c_str(), pass[i] ? "ok" : "FAIL");
    if (!pass[i]) {
      all_pass = false;
      if (first_failure.empty()) {
        std::string check = !r.value("direct_ok", false) ? "direct root check" : "certificate";
        first_failure = family + " k=" + std::to_string(k) + ": " + check + " failed";
      }
    }
  }

  if (cfg.output_format == "csv") {
    std::ostringstream out;
    out << "family,k,direct_ok,max_modulus_deviation,origin_multiplicity,cert_checked,cert_ok,"
           "pass\n";
    for (size_t i = 0; i < count; ++i) {
      if (status[i] != UC_OK) continue;
      const auto& r = rows[i];
      out << family << ',' << (k_lo + static_cast<long>(i)) << ','
          << r.value("direct_ok", false) << ',' << r.value("max_modulus_deviation", "") << ','
          << r.value("origin_multiplicity", 0) << ',' << r.value("cert_checked", false) << ','
          << r.value("cert_ok", false) << ',' << (pass[i] ? 1 : 0) << '\n';
    }
    std::cout << out.str();
  } else {
    nlohmann::json doc;
    doc["schema"] = "unicircle/1";
    doc["family"] = family;
    doc["k_min"] = k_lo;
    doc["k_max"] = k_hi;
    doc["rows"] = rows;
    doc["all_pass"] = all_pass;
    std::cout << with_config(cfg, doc) << "\n";
  }
  if (!all_pass) {
    std::cerr << "FAILED: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unicircle: self-inversive polynomials with unimodular zeros"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verification failure, 2 usage error.");

  RunConfig cfg;
  if (const char* env = std::getenv("UNICIRCLE_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64) cfg.precision_bits = v;
  }
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (same keys as the global flags)");
  auto* opt_prec =
      app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits (>= 64)");
  auto* opt_tol = app.add_option("--tol-exponent", cfg.tol_exponent,
                                 "unimodularity tolerance 2^-e (default prec/3)");
  auto* opt_samples = app.add_option("--samples", cfg.samples, "grid cap for certified bounds");
  auto* opt_par = app.add_option("--parallelism", cfg.parallelism, "worker threads for sweeps");
  auto* opt_fmt =
      app.add_option("--output-format", cfg.output_format, "json or csv")
          ->check(CLI::IsMember({"json", "csv"}));

  // roots
  auto* sc_roots = app.add_subcommand("roots", "all roots of a polynomial (JSON in, JSON out)");
  std::string in_path = "-";
  std::string out_path;
  long max_iter = 0;
  sc_roots->add_option("--input,-i", in_path, "polynomial JSON file, - for stdin");
  sc_roots->add_option("--output,-o", out_path, "output file, - for stdout");
  sc_roots->add_option("--max-iter", max_iter, "iteration budget");

  // criteria
  auto* sc_criteria = app.add_subcommand("criteria", "run unimodularity criteria");
  std::string only_ids;
  long grid = 0;
  bool all_flag = false;
  sc_criteria->add_option("--input,-i", in_path, "polynomial JSON file, - for stdin");
  sc_criteria->add_flag("--all", all_flag, "run every criterion (default)");
  sc_criteria->add_option("--only", only_ids, "comma-separated criterion ids");
  sc_criteria->add_option("--grid", grid, "mu grid size (default 4096)");

  // certify
  auto* sc_certify = app.add_subcommand("certify", "Lemma-2 certificate");
  std::string family, h_path, e_path, c_value, lambda_re = "1", lambda_im = "0";
  long k = 0, r = 0, verify_cap = 80;
  sc_certify->add_option("--family", family, "family P, Q or W (uses h_r, e_r)");
  sc_certify->add_option("--k", k, "family index / Lemma-2 k")->required();
  sc_certify->add_option("--r", r, "main-polynomial order r (default per family)");
  sc_certify->add_option("--c", c_value, "circle separation constant c");
  sc_certify->add_option("--h", h_path, "explicit h polynomial JSON");
  sc_certify->add_option("--e", e_path, "explicit e polynomial JSON");
  sc_certify->add_option("--lambda-re", lambda_re, "Re lambda (explicit mode)");
  sc_certify->add_option("--lambda-im", lambda_im, "Im lambda (explicit mode)");
  sc_certify->add_option("--verify-cap", verify_cap,
                         "cross-check assembled polynomial by root finding up to this degree");

  // families
  auto* sc_families = app.add_subcommand("families", "family constructors, scans, identities");
  sc_families->require_subcommand(1);
  auto* fb = sc_families->add_subcommand("build", "build a family polynomial");
  std::string fam2;
  long fk = 0, fr = 0;
  fb->add_option("--family", fam2, "P, Q, W, Y or S")->required();
  fb->add_option("--k", fk)->required();
  fb->add_option("--output,-o", out_path);
  bool monic_base = false;
  fb->add_flag("--monic-base", monic_base, "emit M_k / N_k / V_k instead of the raw family");
  auto* fd = sc_families->add_subcommand("decompose", "h_r/e_r split of the monic base");
  fd->add_option("--family", fam2)->required();
  fd->add_option("--k", fk)->required();
  fd->add_option("--r", fr, "default per family");
  long k_min = 2, k_max = 20, terms = 64;
  auto* f3 = sc_families->add_subcommand("scan-lemma3", "zeta / q / delta inequality scan");
  f3->add_option("--k-min", k_min);
  f3->add_option("--k-max", k_max);
  auto* f5 = sc_families->add_subcommand("scan-lemma5", "eta / eta0 inequality scan");
  f5->add_option("--k-min", k_min);
  f5->add_option("--k-max", k_max);
  auto* f6 = sc_families->add_subcommand("scan-lemma6", "certified |e_4| <= 0.019 scan");
  f6->add_option("--k-min", k_min);
  f6->add_option("--k-max", k_max);
  auto* fram = sc_families->add_subcommand("ramanujan", "series-identity residual");
  std::string z_re = "1", z_im = "0";
  fram->add_option("--k", fk)->required();
  fram->add_option("--z-re", z_re);
  fram->add_option("--z-im", z_im);
  fram->add_option("--terms", terms);

  // special
  auto* sc_special = app.add_subcommand("special", "special values with error bounds");
  std::string sp_name, sp_arg;
  sc_special->add_option("name", sp_name,
                         "bernoulli | euler | zeta | zeta-even | eta | eta0 | l-chi4")
      ->required();
  sc_special->add_option("arg", sp_arg, "integer index or decimal s").required();

  // verify-family
  auto* sc_verify = app.add_subcommand("verify-family", "per-k build + root check + certificate");
  std::string vf_family, vf_range;
  long vf_cap = 0;
  sc_verify->add_option("--family", vf_family, "P, Q, W, Y or S")->required();
  sc_verify->add_option("--k", vf_range, "K or K1..K2")->required();
  sc_verify->add_option("--verify-cap", vf_cap,
                        "also root-check assembled certificates up to this degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!config_path.empty()) {
    RunConfig file_cfg = cfg;
    load_config_file(config_path, &file_cfg);
    // Flags beat the config file.
    if (opt_prec->count() == 0) cfg.precision_bits = file_cfg.precision_bits;
    if (opt_tol->count() == 0) cfg.tol_exponent = file_cfg.tol_exponent;
    if (opt_samples->count() == 0) cfg.samples = file_cfg.samples;
    if (opt_par->count() == 0) cfg.parallelism = file_cfg.parallelism;
    if (opt_fmt->count() == 0) cfg.output_format = file_cfg.output_format;
  }
  if (cfg.precision_bits < 64) die("precision-bits must be >= 64", 2);

  if (*sc_roots) {
    PolyHandle p;
    check(uc_poly_from_json(read_input(in_path).c_str(), &p.p));
    CString out;
    check(uc_roots(p.p, cfg.precision_bits, max_iter, &out.s));
    write_output(out_path, with_config(cfg, nlohmann::json::parse(out.s)));
    return 0;
  }

  if (*sc_criteria) {
    PolyHandle p;
    check(uc_poly_from_json(read_input(in_path).c_str(), &p.p));
    CString out;
    const char* ids = only_ids.empty() ? "all" : only_ids.c_str();
    check(uc_criteria(p.p, ids, grid, cfg.precision_bits, &out.s));
    nlohmann::json doc;
    doc["schema"] = "unicircle/1";
    doc["verdicts"] = nlohmann::json::parse(out.s);
    write_output(out_path, with_config(cfg, doc));
    return 0;
  }

  if (*sc_certify) {
    CString out;
    int valid = 0;
    if (!family.empty()) {
      check(uc_certify_family(family.c_str(), k, r, c_value.empty() ? nullptr : c_value.c_str(),
                              cfg.samples, cfg.precision_bits, verify_cap, &valid, &out.s));
    } else {
      if (h_path.empty()) die("need --family or --h", 2);
      if (c_value.empty()) die("explicit mode needs --c", 2);
      PolyHandle h;
      check(uc_poly_from_json(read_input(h_path).c_str(), &h.p));
      PolyHandle e;
      if (!e_path.empty()) check(uc_poly_from_json(read_input(e_path).c_str(), &e.p));
      check(uc_certify(h.p, e.p, lambda_re.c_str(), lambda_im.c_str(), k, c_value.c_str(),
                       cfg.samples, verify_cap, &valid, &out.s));
    }
    write_output(out_path, with_config(cfg, nlohmann::json::parse(out.s)));
    return valid ? 0 : 1;
  }

  if (*sc_families) {
    CString out;
    if (*fb) {
      PolyHandle p;
      if (monic_base) {
        check(uc_family_monic_base(fam2.c_str(), fk, cfg.precision_bits, &p.p));
      } else {
        check(uc_family_build(fam2.c_str(), fk, cfg.precision_bits, &p.p));
      }
      check(uc_poly_to_json(p.p, &out.s));
      write_output(out_path, out.s);
      return 0;
    }
    if (*fd) {
      if (fr <= 0) {
        fr = fam2 == "P" || fam2 == "p" ? 4 : (fam2 == "Q" || fam2 == "q" ? 2 : 3);
      }
      check(uc_family_decompose(fam2.c_str(), fk, fr, cfg.precision_bits, &out.s));
      write_output(out_path, with_config(cfg, nlohmann::json::parse(out.s)));
      return 0;
    }
    int violations = 0;
    const char* fmt = cfg.output_format.c_str();
    if (*f3) {
      check(uc_scan_lemma3(k_min, k_max, cfg.precision_bits, fmt, &violations, &out.s));
    } else if (*f5) {
      check(uc_scan_lemma5(k_min, k_max, cfg.precision_bits, fmt, &violations, &out.s));
    } else if (*f6) {
      check(uc_scan_lemma6(k_min, k_max, cfg.samples, cfg.precision_bits, fmt, &violations,
                           &out.s));
    } else if (*fram) {
      check(uc_ramanujan_residual(fk, z_re.c_str(), z_im.c_str(), terms, cfg.precision_bits,
                                  &out.s));
      write_output(out_path, with_config(cfg, nlohmann::json::parse(out.s)));
      return 0;
    }
    write_output(out_path, out.s);
    return violations == 0 ? 0 : 1;
  }

  if (*sc_special) {
    CString out;
    check(uc_special(sp_name.c_str(), sp_arg.c_str(), cfg.precision_bits, &out.s));
    write_output(out_path, out.s);
    return 0;
  }

  if (*sc_verify) {
    return run_verify_family(cfg, vf_family, vf_range, vf_cap);
  }

  return 2;
}
