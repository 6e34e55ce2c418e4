#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "weylkit/weight.hpp"

namespace wk {

/* Sparse Laurent polynomial in q with exact integer coefficients.  Zero
 * coefficients are never stored, so equality is map equality.  Negative
 * exponents are allowed internally; published coefficient polynomials are
 * expected to end up in Z[q] and callers assert that where it matters. */
class QPoly {
 public:
  QPoly() = default;

  static QPoly q_power(long e, Int c = Int(1)) {
    QPoly p;
    if (c != 0) p.t_[e] = std::move(c);
    return p;
  }
  static QPoly one() { return q_power(0); }

  bool is_zero() const { return t_.empty(); }
  const std::map<long, Int>& terms() const { return t_; }

  Int coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Int(0) : it->second;
  }

  long min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return t_.begin()->first;
  }
  long max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return t_.rbegin()->first;
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend QPoly operator*(const Int& k, const QPoly& a) {
    QPoly r;
    if (k == 0) return r;
    for (const auto& [e, c] : a.t_) r.t_[e] = k * c;
    return r;
  }

  QPoly operator-() const { return Int(-1) * *this; }

  // multiply by q^e
  QPoly shifted(long e) const {
    QPoly r;
    for (const auto& [ex, c] : t_) r.t_[ex + e] = c;
    return r;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
  }

  bool nonneg_coeffs() const {
    for (const auto& [e, c] : t_)
      if (c < 0) return false;
    return true;
  }
  bool nonneg_exps() const { return is_zero() || min_exp() >= 0; }

  bool operator==(const QPoly&) const = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || e == 0) os << a;
      if (e != 0) {
        if (a != 1) os << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  void add_term(long e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

 private:
  std::map<long, Int> t_;
};

// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0
inline QPoly qint(long k) {
  if (k < 0) throw std::invalid_argument("qint of a negative integer");
  QPoly p;
  for (long e = 0; e < k; ++e) p.add_term(e, 1);
  return p;
}

/* Exact division; throws when the division leaves a remainder.  Used for
 * q-binomials, where divisibility failure would mean a formula was misread,
 * not a data problem. */
inline QPoly exact_div(QPoly num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  QPoly quot;
  const long de = den.max_exp();
  const Int dc = den.coeff(de);
  while (!num.is_zero()) {
    const long ne = num.max_exp();
    const Int nc = num.coeff(ne);
    if (ne < de || nc % dc != 0) throw std::logic_error("inexact polynomial division");
    const long e = ne - de;
    const Int c = nc / dc;
    quot.add_term(e, c);
    num -= Int(c) * den.shifted(e);
  }
  return quot;
}

/* Gaussian binomial; zero unless 0 <= r <= n, computed by iterated exact
 * division of products of q-integers. */
inline QPoly qbinom(long n, long r) {
  if (r < 0 || n < 0 || r > n) return QPoly();
  r = std::min(r, n - r);
  QPoly p = QPoly::one();
  for (long i = 1; i <= r; ++i) {
    p *= qint(n - r + i);
    p = exact_div(p, qint(i));
  }
  return p;
}

}  // namespace wk
