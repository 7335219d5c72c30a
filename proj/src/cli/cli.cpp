#include "pmzv/cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "pmzv/verify/suites.hpp"

namespace pmzv::cli {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (!is_prime(p)) {
    throw std::invalid_argument("--p must be prime, got " + std::to_string(p));
  }
  if (precision < 1 || precision > 64) {
    throw std::invalid_argument("--prec must be in [1, 64], got " + std::to_string(precision));
  }
  if (n_max != 0 && (n_max < 2 || n_max > 8)) {
    throw std::invalid_argument("--nmax must be in [2, 8], got " + std::to_string(n_max));
  }
  if (weight < 1 || weight > 8) {
    throw std::invalid_argument("--weight must be in [1, 8], got " + std::to_string(weight));
  }
  if (sign != "mahler" && sign != "literal" && sign != "auto") {
    throw std::invalid_argument("--sign must be mahler, literal or auto, got '" + sign + "'");
  }
  parse_sampling_grid(grid);
}

TableOptions RunConfig::table_options() const {
  TableOptions o;
  o.p = p;
  o.weight = weight;
  o.target_precision = precision;
  o.n_max = n_max;
  o.grid = parse_sampling_grid(grid);
  o.threads = threads;
  if (sign == "auto") {
    o.sign = resolve_sign(o);
  } else {
    o.sign = parse_sign_convention(sign);
  }
  return o;
}

json padic_json(const Padic& x) {
  json j;
  j["valuation"] = x.valuation();
  j["digits"] = x.is_zero() ? std::vector<long>{} : x.unit_digits();
  j["precision"] = x.absolute_precision();
  return j;
}

json report_json(const LimitReport& r) {
  json v = padic_json(r.value);
  json j;
  j["p"] = r.p;
  j["index"] = r.index;
  j["valuation"] = v["valuation"];
  j["digits"] = v["digits"];
  j["precision"] = r.certified_precision;
  j["levels"] = json::array();
  for (const auto& level : r.levels) {
    json l = padic_json(level.value);
    j["levels"].push_back({{"N", level.N}, {"valuation", l["valuation"]}, {"digits", l["digits"]}});
  }
  return j;
}

std::string render_plain(const LimitReport& r, bool verbose) {
  std::ostringstream os;
  if (r.value.prime() != 0) {
    os << "zeta_" << r.p << "(" << format_index(r.index) << ") = " << r.value.to_string() << "\n";
    os << "  valuation " << r.value.valuation() << ", certified precision " << r.certified_precision << "\n";
    os << "  digits";
    if (!r.value.is_zero()) {
      for (long d : r.value.unit_digits()) {
        os << ' ' << d;
      }
    }
    os << "\n";
  } else {
    os << "zeta_" << r.p << "(" << format_index(r.index) << "): no certified value\n";
  }
  if (verbose) {
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      const auto& level = r.levels[i];
      os << "  level N=" << level.N << ": v_p(S) = " << level.value.valuation();
      if (i < r.convergence.size()) {
        os << ", v_p(S(p^" << level.N + 1 << ") - S(p^" << level.N << ")) = " << r.convergence[i];
      }
      os << "\n";
    }
    os << "  extrapolant agreements";
    for (long a : r.agreements) {
      os << ' ' << a;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string render_suite(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.identity << " [" << r.checks << " checks, "
     << r.seconds << " s]\n";
  if (!r.detail.empty()) {
    os << (r.passed ? "  " : "  first counterexample: ") << r.detail << "\n";
  }
  return os.str();
}

json suite_json(const SuiteResult& r) {
  return {{"name", r.name},     {"identity", r.identity}, {"passed", r.passed},
          {"checks", r.checks}, {"seconds", r.seconds},   {"detail", r.detail}};
}

int run_suites(const std::vector<std::string>& names, const RunConfig& cfg, std::ostream& out) {
  SuiteConfig sc;
  sc.p = cfg.p;
  sc.precision = cfg.precision;
  sc.n_max = cfg.n_max;
  sc.weight = cfg.weight;
  sc.seed = cfg.seed;
  sc.sign = cfg.sign == "literal" ? SignConvention::literal : SignConvention::mahler;
  sc.threads = cfg.threads;
  bool all = true;
  json arr = json::array();
  if (cfg.format == Format::plain) {
    out << "seed " << cfg.seed << "\n";
  }
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, sc);
    all = all && r.passed;
    if (cfg.format == Format::json) {
      arr.push_back(suite_json(r));
    } else {
      out << render_suite(r) << std::flush;
    }
  }
  if (cfg.format == Format::json) {
    out << json{{"seed", cfg.seed}, {"suites", arr}, {"passed", all}}.dump(2) << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_zeta(const std::string& index_text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Index idx = parse_index(index_text);
  if (cfg.backend == Backend::rational) {
    if (idx.size() != 1) {
      throw std::invalid_argument("the rational backend computes exact partial sums for depth-one indices only");
    }
    MzvTable<RationalField> empty(RationalField{}, cfg.p);
    AdjointCache<RationalField> ad(empty);
    TriangleEvaluator<RationalField> ev(RationalField{}, cfg.p, [&](const Word& w) { return ad(w); });
    SignConvention s = cfg.sign == "literal" ? SignConvention::literal : SignConvention::mahler;
    long n_max = cfg.n_max > 0 ? cfg.n_max : default_n_max(cfg.p);
    json levels = json::array();
    std::size_t m = 1;
    for (long N = 1; N <= n_max; ++N) {
      m *= static_cast<std::size_t>(cfg.p);
      Rational v = theorem_partial_sum(ev, idx, m, s);
      if (cfg.format == Format::json) {
        levels.push_back({{"N", N}, {"value", to_string(v)}});
      } else {
        out << "S(" << cfg.p << "^" << N << ") = " << to_string(v) << "\n";
      }
    }
    if (cfg.format == Format::json) {
      out << json{{"p", cfg.p}, {"index", idx}, {"backend", "rational"}, {"levels", levels}}.dump(2) << "\n";
    }
    return kOk;
  }
  TableOptions o = cfg.table_options();
  LimitReport r = compute_mzv(idx, o);
  if (cfg.format == Format::json) {
    out << report_json(r).dump(2) << "\n";
  } else {
    out << render_plain(r, cfg.verbose);
  }
  if (r.certified_precision < cfg.precision) {
    err << "insufficient precision: certified " << r.certified_precision << " of " << cfg.precision
        << " requested digits (lower --prec or try another --nmax)\n";
    return kConvergence;
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  TableOptions o = cfg.table_options();
  TableResult t = build_table(o);
  std::vector<Index> short_of_target;
  json arr = json::array();
  for (const Index& idx : indices_up_to_weight(cfg.weight)) {
    const LimitReport& r = t.reports.at(idx);
    if (r.certified_precision < cfg.precision) {
      short_of_target.push_back(idx);
    }
    if (cfg.format == Format::json) {
      json v = padic_json(r.value);
      arr.push_back(
          {{"index", idx}, {"valuation", v["valuation"]}, {"digits", v["digits"]}, {"precision", r.certified_precision}});
    } else {
      out << "zeta_" << cfg.p << "(" << format_index(idx) << ") = " << r.value.to_string() << "  [certified "
          << r.certified_precision << "]\n";
    }
  }
  if (cfg.format == Format::json) {
    out << arr.dump(2) << "\n";
  } else if (cfg.verbose) {
    out << "sign " << to_string(t.sign) << ", working precision " << t.working_precision << ", " << t.seconds
        << " s\n";
  }
  if (!short_of_target.empty()) {
    err << "insufficient precision for";
    for (const auto& idx : short_of_target) {
      err << " (" << format_index(idx) << ")";
    }
    err << " (lower --prec or try another --nmax)\n";
    return kConvergence;
  }
  return kOk;
}

int cmd_bmhs(const std::string& word_text, long M, const RunConfig& cfg, std::ostream& out) {
  Word w = Word::parse(word_text);
  if (M < 0) {
    throw std::invalid_argument("--M must be >= 0");
  }
  json arr = json::array();
  if (cfg.backend == Backend::rational) {
    auto t = bmhs_table(RationalField{}, w, static_cast<std::size_t>(M));
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (cfg.format == Format::json) {
        arr.push_back(to_string(t[m]));
      } else {
        out << m << ' ' << to_string(t[m]) << "\n";
      }
    }
  } else {
    auto t = bmhs_table(PadicField{cfg.p, cfg.precision}, w, static_cast<std::size_t>(M));
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (cfg.format == Format::json) {
        arr.push_back(padic_json(t[m]));
      } else {
        out << m << ' ' << t[m].to_string() << "\n";
      }
    }
  }
  if (cfg.format == Format::json) {
    json j{{"word", word_text},
           {"backend", cfg.backend == Backend::rational ? "rational" : "padic"},
           {"values", arr}};
    if (cfg.backend == Backend::padic) {
      j["p"] = cfg.p;
    }
    out << j.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic multiple zeta values from binomial multiple harmonic sums"};
  app.name("pmzv");
  RunConfig cfg;
  std::string backend = "padic";
  std::string format = "plain";

  app.add_option("--p", cfg.p, "prime")->capture_default_str();
  app.add_option("--prec", cfg.precision, "target p-adic digits (1..64)")->capture_default_str();
  app.add_option("--nmax", cfg.n_max, "levels N_max (2..8); 0 picks the default for p")->capture_default_str();
  app.add_option("--weight,--W", cfg.weight, "weight cap (table, verify)")->capture_default_str();
  app.add_option("--backend", backend, "padic or rational")
      ->check(CLI::IsMember({"padic", "rational"}))
      ->capture_default_str();
  app.add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the verification suites")->capture_default_str();
  app.add_option("--sign", cfg.sign, "overall sign: mahler, literal or auto")->capture_default_str();
  app.add_option("--grid", cfg.grid, "sampling grid: dense or geometric")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();
  app.add_flag("--verbose,-v", cfg.verbose, "print per-level tables");
  app.set_config("--config", "", "key=value file mirroring the flags; flags win");

  std::string index_text;
  auto* zeta = app.add_subcommand("zeta", "compute one value");
  zeta->add_option("--index", index_text, "comma-separated index, e.g. 1,2")->required();

  auto* table = app.add_subcommand("table", "all values of weight <= --weight");

  std::string word_text;
  long M = 10;
  auto* bmhs_cmd = app.add_subcommand("bmhs", "dump h^B_w(0..M)");
  bmhs_cmd->add_option("--word", word_text, "word in 0/1 letters, e.g. 01")->required();
  bmhs_cmd->add_option("--M", M, "last argument")->capture_default_str();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a named property suite, or all");
  verify->add_option("suite", suite, "suite name or 'all'")->required();

  auto* selftest = app.add_subcommand("selftest", "run every suite");

  for (auto* sub : {zeta, table, bmhs_cmd, verify, selftest}) {
    sub->fallthrough();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.backend = backend == "rational" ? Backend::rational : Backend::padic;
    cfg.format = format == "json" ? Format::json : Format::plain;
    cfg.validate();
    if (*zeta) {
      return cmd_zeta(index_text, cfg, out, err);
    }
    if (*table) {
      return cmd_table(cfg, out, err);
    }
    if (*bmhs_cmd) {
      return cmd_bmhs(word_text, M, cfg, out);
    }
    std::vector<std::string> names;
    if (*verify && suite != "all") {
      names.push_back(suite);
    } else {
      for (const auto& s : suite_registry()) {
        names.push_back(s.name);
      }
    }
    return run_suites(names, cfg, out);
  } catch (const DivergenceError& e) {
    err << "convergence failure: " << e.what() << "\n" << render_plain(e.report(), true);
    return kConvergence;
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << "\n";
    return kConvergence;
  } catch (const InsufficientTable& e) {
    err << e.what() << "\n";
    return kConvergence;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("pmzv");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pmzv::cli
