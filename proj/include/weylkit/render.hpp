#pragma once

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylkit/qpoly.hpp"
#include "weylkit/schur.hpp"
#include "weylkit/sigma.hpp"
#include "weylkit/suites.hpp"
#include "weylkit/transition.hpp"
#include "weylkit/weight.hpp"

namespace wk {

using json = nlohmann::ordered_json;

inline long long to_i64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("coefficient does not fit in 64 bits");
  return static_cast<long long>(v);
}

inline json weight_json(const Weight& w) {
  json a = json::array();
  for (int x : w.c) a.push_back(x);
  return a;
}

// {"0":1,"1":2,...}: exponent strings to integer coefficients
inline json qpoly_json(const QPoly& p) {
  json o = json::object();
  for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = to_i64(c);
  return o;
}

inline std::vector<std::pair<Weight, QPoly>> series_sorted(const SchurSeries& s) {
  std::vector<std::pair<Weight, QPoly>> terms(s.terms.begin(), s.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    long ha = ht(a.first), hb = ht(b.first);
    if (ha != hb) return ha > hb;
    return a.first.c > b.first.c;
  });
  return terms;
}

inline json series_json(const SchurSeries& s) {
  json o;
  o["n"] = s.n;
  o["basis"] = "schur";
  json terms = json::array();
  for (const auto& [w, p] : series_sorted(s))
    terms.push_back(json{{"weight", weight_json(w)}, {"poly", qpoly_json(p)}});
  o["terms"] = terms;
  return o;
}

inline json table_json(const TransitionTable& t) {
  json o;
  o["kind"] = table_kind_name(t.kind);
  o["top"] = weight_json(t.top);
  json rows = json::array();
  for (const auto& [mu, p] : t.rows)
    rows.push_back(json{{"mu", weight_json(mu)}, {"poly", qpoly_json(p)}});
  o["rows"] = rows;
  return o;
}

inline json sigma_json(const SigmaFamily& f) {
  json o;
  o["lambda"] = weight_json(f.source);
  json sets = json::array();
  for (const auto& [sr, weights] : f.entries) {
    json ws = json::array();
    for (const Weight& w : weights) ws.push_back(weight_json(w));
    sets.push_back(json{{"s", sr.first}, {"r", sr.second}, {"weights", ws}});
  }
  o["sets"] = sets;
  return o;
}

inline json report_json(const IdentityReport& r) {
  json o;
  o["suite"] = r.suite;
  o["instances"] = r.instances;
  o["skipped"] = r.skipped;
  o["pass"] = r.pass();
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back(json{{"params", f.params}, {"lhs", qpoly_json(f.lhs)}, {"rhs", qpoly_json(f.rhs)}});
  o["failures"] = fails;
  return o;
}

/* ---- LaTeX rendering in the style of the tables: coefficients written as
 * powers of q times q-integers where they factor that way ---------------- */

inline std::string weight_latex(const Weight& w) {
  std::string s;
  for (int i = 1; i <= w.rank(); ++i) {
    int c = w.at(i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += "\\omega_" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

inline std::string qpower_latex(long e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return "q^" + (e < 10 && e >= 0 ? std::to_string(e) : "{" + std::to_string(e) + "}");
}

inline std::string raw_poly_latex(const QPoly& p) {
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (!s.empty()) {
      s += a < 0 ? "-" : "+";
      if (a < 0) a = -a;
    } else if (a < 0) {
      s += "-";
      a = -a;
    }
    std::ostringstream os;
    if (a != 1 || e == 0) os << a;
    os << qpower_latex(e);
    s += os.str();
  }
  return s.empty() ? "0" : s;
}

/* q^v, m q^v, q^v [k]_q, q^v [k]_q^2, else a parenthesized raw polynomial */
inline std::string coeff_latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  const long v = p.min_exp();
  const QPoly u = p.shifted(-v);
  if (u.terms().size() == 1) {
    const Int c = u.coeff(0);
    std::string s;
    if (c != 1) {
      std::ostringstream os;
      os << c;
      s += os.str();
    }
    s += qpower_latex(v);
    return s;
  }
  const long d = u.max_exp();
  if (u == qint(d + 1)) return qpower_latex(v) + "[" + std::to_string(d + 1) + "]_q";
  for (long k = 2; 2 * (k - 1) <= d; ++k)
    if (u == qint(k) * qint(k))
      return qpower_latex(v) + "[" + std::to_string(k) + "]_q^2";
  return "(" + raw_poly_latex(p) + ")";
}

inline std::string series_latex(const std::string& name, const SchurSeries& s) {
  std::string out = name + "=";
  bool first = true;
  for (const auto& [w, p] : series_sorted(s)) {
    std::string c = coeff_latex(p);
    if (!first) out += "+";
    first = false;
    if (c == "1")
      out += "s_{" + weight_latex(w) + "}";
    else
      out += c + "s_{" + weight_latex(w) + "}";
  }
  if (first) out += "0";
  return out;
}

inline std::string series_text(const SchurSeries& s) {
  std::string out;
  bool first = true;
  for (const auto& [w, p] : series_sorted(s)) {
    if (!first) out += " + ";
    first = false;
    out += "(" + p.str() + ")*s" + w.str();
  }
  return first ? "0" : out;
}

}  // namespace wk
