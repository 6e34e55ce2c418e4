#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "weylkit/characters.hpp"
#include "weylkit/golden.hpp"
#include "weylkit/render.hpp"
#include "weylkit/suites.hpp"

namespace wk {

namespace cli_detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed integer list: " + s);
    }
  }
  return out;
}

// weights arrive as comma-separated omega-coordinates, or as partition
// parts when as_partition is set
inline Weight parse_weight(const std::string& s, int n, bool as_partition, const char* flag) {
  if (s.empty()) return Weight::zero(n);
  std::vector<int> v = parse_int_list(s);
  if (as_partition) {
    try {
      return from_partition(n, v);
    } catch (const std::exception& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  if (static_cast<int>(v.size()) != n)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(n) +
                     " omega-coordinates, got " + std::to_string(v.size()));
  return Weight(v);
}

inline int thread_budget() {
  if (const char* env = std::getenv("WK_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot open output file: " + out_path);
  f << text;
}

}  // namespace cli_detail

/* Command-line front end; returns the process exit code.
 * 0 success, 1 verification failure, 2 usage error. */
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli_detail::UsageError;

  CLI::App app{"exact q-Whittaker / Demazure character toolkit"};
  app.require_subcommand(1);

  int n = 2;
  std::string nu_arg, lam_arg, top_arg, format = "json", out_path, what, kind = "p";
  bool as_partition = false;
  std::vector<std::string> suites_arg;
  int n_max = 3, ht_max = 5;

  CLI::App* expand = app.add_subcommand("expand", "expand P, G or Gpair in the Schur basis");
  expand->add_option("what", what, "one of P, G, Gpair")->required();
  expand->add_option("--n", n, "rank");
  expand->add_option("--nu", nu_arg, "omega-coordinates of nu");
  expand->add_option("--lam", lam_arg, "omega-coordinates of lambda");
  expand->add_flag("--partition", as_partition, "read --nu/--lam as partitions");
  expand->add_option("--format", format, "json, latex or text");
  expand->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* matrix = app.add_subcommand("matrix", "dump a transition table");
  matrix->add_option("--kind", kind, "p, a, g0 or h");
  matrix->add_option("--n", n, "rank");
  matrix->add_option("--top", top_arg, "omega-coordinates of the top weight")->required();
  matrix->add_flag("--partition", as_partition, "read --top as a partition");
  matrix->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* sigma_cmd = app.add_subcommand("sigma", "dump the Sigma_s^r sets of lambda");
  sigma_cmd->add_option("--n", n, "rank");
  sigma_cmd->add_option("--lam", lam_arg, "omega-coordinates of lambda (in P^+(1))")->required();
  sigma_cmd->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run exhaustive identity suites");
  verify->add_option("--suite", suites_arg, "suite name, repeatable; 'all' runs everything");
  verify->add_option("--n-max", n_max, "largest rank to sweep");
  verify->add_option("--ht-max", ht_max, "largest height to sweep");
  verify->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* dims = app.add_subcommand("dims", "graded dimensions of M(nu,lambda)");
  dims->add_option("--n", n, "rank");
  dims->add_option("--nu", nu_arg, "omega-coordinates of nu");
  dims->add_option("--lam", lam_arg, "omega-coordinates of lambda");
  dims->add_flag("--partition", as_partition, "read --nu/--lam as partitions");
  dims->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* golden = app.add_subcommand("golden", "regression-check the fixture expansions");
  golden->add_option("--out", out_path, "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("wk");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(expand) || app.got_subcommand(matrix) ||
        app.got_subcommand(sigma_cmd) || app.got_subcommand(dims)) {
      if (n < 1) throw UsageError("rank must be at least 1");
    }

    if (app.got_subcommand(expand)) {
      if (what != "P" && what != "G" && what != "Gpair")
        throw UsageError("expand expects P, G or Gpair");
      Weight nu = cli_detail::parse_weight(nu_arg, n, as_partition, "--nu");
      Weight lam = cli_detail::parse_weight(lam_arg, n, as_partition, "--lam");
      if (!nu.dominant() || !lam.dominant()) throw UsageError("weights must be dominant");
      Characters eng(n);
      SchurSeries s;
      std::string name;
      if (what == "P") {
        s = eng.macdonald_q0(nu);
        name = "P_{" + weight_latex(nu) + "}(z,q,0)";
      } else if (what == "G") {
        s = eng.G_series(lam);
        name = "G_{0," + weight_latex(lam) + "}";
      } else {
        s = eng.G_pair_series(nu, lam);
        name = "G_{" + weight_latex(nu) + "," + weight_latex(lam) + "}";
      }
      if (format == "json") {
        json doc = series_json(s);
        // the formula is total; the flag records where its module-theoretic
        // reading is guaranteed
        if (what == "Gpair") doc["admissible"] = is_admissible(nu, lam);
        cli_detail::emit(doc.dump(2) + "\n", out_path, out);
      } else if (format == "latex")
        cli_detail::emit(series_latex(name, s) + "\n", out_path, out);
      else if (format == "text")
        cli_detail::emit(series_text(s) + "\n", out_path, out);
      else
        throw UsageError("unknown format: " + format);
      return 0;
    }

    if (app.got_subcommand(matrix)) {
      Weight top = cli_detail::parse_weight(top_arg, n, as_partition, "--top");
      if (!top.dominant()) throw UsageError("top weight must be dominant");
      Tables tb(n);
      TransitionTable t;
      if (kind == "p")
        t = tb.p_table(top);
      else if (kind == "a")
        t = tb.a_table(top);
      else if (kind == "g0")
        t = tb.g0_table(top);
      else if (kind == "h")
        t = tb.h_table(top);
      else
        throw UsageError("unknown table kind: " + kind);
      cli_detail::emit(table_json(t).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (app.got_subcommand(sigma_cmd)) {
      Weight lam = cli_detail::parse_weight(lam_arg, n, false, "--lam");
      if (!lam.in_pplus1()) throw UsageError("--lam must lie in P^+(1)");
      cli_detail::emit(sigma_json(sigma_family(lam)).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (app.got_subcommand(verify)) {
      std::vector<std::string> names = suites_arg;
      if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end())
        names = suite_names();
      for (const auto& s : names)
        if (detail::suite_registry().find(s) == detail::suite_registry().end())
          throw UsageError("unknown identity suite: " + s);
      if (n_max < 1 || ht_max < 0) throw UsageError("bounds must be positive");
      SuiteBounds bounds{n_max, ht_max};
      std::vector<IdentityReport> reports =
          run_suites(names, bounds, cli_detail::thread_budget());
      bool pass = true;
      json o;
      o["bounds"] = json{{"n_max", n_max}, {"ht_max", ht_max}};
      json arr = json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass();
        arr.push_back(report_json(r));
      }
      o["suites"] = arr;
      o["pass"] = pass;
      cli_detail::emit(o.dump(2) + "\n", out_path, out);
      return pass ? 0 : 1;
    }

    if (app.got_subcommand(dims)) {
      Weight nu = cli_detail::parse_weight(nu_arg, n, as_partition, "--nu");
      Weight lam = cli_detail::parse_weight(lam_arg, n, as_partition, "--lam");
      if (!nu.dominant() || !lam.dominant()) throw UsageError("weights must be dominant");
      Characters eng(n);
      Int d = eng.dim_M(nu, lam);
      Int dn = eng.dim_M(nu, Weight::zero(n));
      Int dl = eng.dim_M(Weight::zero(n), lam);
      json o;
      o["n"] = n;
      o["nu"] = weight_json(nu);
      o["lam"] = weight_json(lam);
      o["admissible"] = is_admissible(nu, lam);
      o["dim"] = to_i64(d);
      o["dim_nu_0"] = to_i64(dn);
      o["dim_0_lam"] = to_i64(dl);
      o["product_matches"] = (d == dn * dl);
      cli_detail::emit(o.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (app.got_subcommand(golden)) {
      std::vector<GoldenOutcome> res = run_golden();
      bool pass = true;
      json arr = json::array();
      for (const auto& r : res) {
        pass = pass && r.pass;
        arr.push_back(json{{"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
      }
      json o;
      o["cases"] = arr;
      o["pass"] = pass;
      cli_detail::emit(o.dump(2) + "\n", out_path, out);
      return pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace wk
