#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/qpoly.hpp"
#include "weylkit/sigma.hpp"
#include "weylkit/weight.hpp"

namespace wk {

/* p_lambda^mu = q^{(lambda + mu1, lambda - mu)/2}
 *               prod_j qbinom[(lambda-mu, omega_j) + (mu0, alpha_j), (lambda-mu, omega_j)]
 * with mu = 2 mu0 + mu1; zero when either weight is non-dominant or
 * lambda - mu is outside Q^+. */
inline QPoly p_coeff(const Weight& la, const Weight& mu) {
  la.check_rank(mu);
  if (!la.dominant() || !mu.dominant()) return QPoly();
  const int n = la.rank();
  RootVector diff = to_root_coords(la - mu);
  if (!diff.in_qplus()) return QPoly();
  Decomposition dm = decompose(mu);
  QPoly prod = QPoly::one();
  for (int j = 1; j <= n; ++j) {
    long lower = static_cast<long>(boost::multiprecision::numerator(diff.a[j - 1]));
    long upper = lower + dm.lambda0.at(j);
    prod *= qbinom(upper, lower);
    if (prod.is_zero()) return prod;
  }
  Rat e = pairing(la + dm.lambda1, la - mu) / 2;
  long ee = require_int(e, "exponent of p_lambda^mu");
  if (ee < 0) throw std::logic_error("negative exponent in p_lambda^mu");
  return prod.shifted(ee);
}

/* g_{0,2 lambda0}^mu, the signed q-binomial product
 *   (-1)^{ht_r eta} q^{(eta, mu + rho + eta~)/2} prod_i qbinom[lambda0(h_i), eta_i]
 * where eta = 2 lambda0 - mu and eta~ rewrites alpha-coordinates as
 * omega-coordinates.  Zero off the support eta in Q^+. */
inline QPoly g0_two_lambda0(const Weight& la0, const Weight& mu) {
  la0.check_rank(mu);
  if (!la0.dominant() || !mu.dominant()) return QPoly();
  const int n = la0.rank();
  const Weight eta = 2 * la0 - mu;
  RootVector rv = to_root_coords(eta);
  if (!rv.in_qplus()) return QPoly();
  std::vector<long> s(n);
  long htr = 0;
  for (int j = 0; j < n; ++j) {
    s[j] = static_cast<long>(boost::multiprecision::numerator(rv.a[j]));
    htr += s[j];
  }
  QPoly prod = QPoly::one();
  for (int i = 1; i <= n; ++i) {
    prod *= qbinom(la0.at(i), s[i - 1]);
    if (prod.is_zero()) return prod;
  }
  long twice = htr;  // (eta, rho)
  for (int i = 1; i <= n; ++i) twice += s[i - 1] * (mu.at(i) + s[i - 1]);
  if (twice % 2 != 0) throw std::logic_error("odd exponent in g_{0,2lambda0}^mu");
  QPoly out = prod.shifted(twice / 2);
  return (htr % 2 == 0) ? out : -out;
}

enum class TableKind { p, a, g0, h };

inline std::string table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::p: return "p";
    case TableKind::a: return "a";
    case TableKind::g0: return "g0";
    case TableKind::h: return "h";
  }
  return "?";
}

/* One coefficient family over a finite order interval: rows indexed by the
 * dominant weights below `top`, in interval order (top first). */
struct TransitionTable {
  TableKind kind = TableKind::p;
  Weight top;
  std::vector<std::pair<Weight, QPoly>> rows;

  QPoly at(const Weight& mu) const {
    for (const auto& [w, p] : rows)
      if (w == mu) return p;
    return QPoly();
  }
};

/* Per-rank computation context.  All caches live here, so independent
 * instances can be used from different threads without coordination. */
class Tables {
 public:
  explicit Tables(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
  }

  int rank() const { return n_; }

  const std::vector<Weight>& interval_of(const Weight& la) {
    auto it = interval_.find(la);
    if (it != interval_.end()) return it->second;
    return interval_.emplace(la, interval(la)).first->second;
  }

  const SigmaFamily& sigma(const Weight& la1) {
    auto it = sigma_.find(la1);
    if (it != sigma_.end()) return it->second;
    return sigma_.emplace(la1, sigma_family(la1)).first->second;
  }

  /* Closed formula for g_{0,lambda}^mu: the signed q-binomial product when
   * lambda1 = 0, otherwise the alternating sum
   *   q^{(lambda1,lambda)/2} sum_s (-1)^s sum_{nu in Sigma_s(lambda1)}
   *     q^{(2 lambda0 - 2 mu + nu, nu)/2} g_{0,2 lambda0}^{mu - nu}. */
  const QPoly& g0(const Weight& la, const Weight& mu) {
    auto key = std::make_pair(la, mu);
    auto it = g0_.find(key);
    if (it != g0_.end()) return it->second;
    QPoly val;
    if (la.dominant() && mu.dominant()) {
      Decomposition d = decompose(la);
      if (d.lambda1.is_zero()) {
        val = g0_two_lambda0(d.lambda0, mu);
      } else {
        const Rat base = pairing(d.lambda1, la) / 2;
        for (const auto& [sr, weights] : sigma(d.lambda1).entries) {
          const int s = sr.first;
          for (const Weight& nu : weights) {
            const Weight rest = mu - nu;
            if (!rest.dominant()) continue;
            QPoly f = g0_two_lambda0(d.lambda0, rest);
            if (f.is_zero()) continue;
            Rat e = base + pairing(2 * d.lambda0 - 2 * mu + nu, nu) / 2;
            long ee = require_int(e, "exponent in the Sigma-set sum for g0");
            QPoly term = f.shifted(ee);
            if (s % 2 == 0)
              val += term;
            else
              val -= term;
          }
        }
      }
    }
    return g0_.emplace(std::move(key), std::move(val)).first->second;
  }

  /* a_lambda^mu over the interval below lambda, from unitriangular
   * back-substitution against p: a_lambda^nu = -sum_{nu < mu <= lambda}
   * a_lambda^mu p_mu^nu. */
  const TransitionTable& a_table(const Weight& la) {
    auto it = a_.find(la);
    if (it != a_.end()) return it->second;
    TransitionTable t;
    t.kind = TableKind::a;
    t.top = la;
    const auto& ivl = interval_of(la);
    for (size_t i = 0; i < ivl.size(); ++i) {
      const Weight& nu = ivl[i];
      QPoly v = QPoly::one();
      if (i > 0) {
        v = QPoly();
        for (size_t j = 0; j < i; ++j) v -= t.rows[j].second * p_coeff(ivl[j], nu);
      }
      t.rows.emplace_back(nu, std::move(v));
    }
    return a_.emplace(la, std::move(t)).first->second;
  }

  /* h_{nu,0}^mu from the triangular system sum_{mu'} h_{nu,0}^{mu'}
   * g_{0,mu'}^mu = delta_{nu,mu}. */
  const TransitionTable& h_table(const Weight& nu) {
    auto it = h_.find(nu);
    if (it != h_.end()) return it->second;
    TransitionTable t;
    t.kind = TableKind::h;
    t.top = nu;
    const auto& ivl = interval_of(nu);
    for (size_t i = 0; i < ivl.size(); ++i) {
      const Weight& mu = ivl[i];
      QPoly v = QPoly::one();
      if (i > 0) {
        v = QPoly();
        for (size_t j = 0; j < i; ++j) v -= t.rows[j].second * g0(ivl[j], mu);
      }
      t.rows.emplace_back(mu, std::move(v));
    }
    return h_.emplace(nu, std::move(t)).first->second;
  }

  // g_{nu,lambda}^mu = q^{(lambda + nu - mu, nu)} g_{0,lambda}^{mu - nu};
  // zero when any of the three weights leaves P^+
  QPoly g_pair(const Weight& nu, const Weight& la, const Weight& mu) {
    if (!nu.dominant() || !la.dominant() || !mu.dominant()) return QPoly();
    const Weight rest = mu - nu;
    if (!rest.dominant()) return QPoly();
    const QPoly& f = g0(la, rest);
    if (f.is_zero()) return QPoly();
    long e = require_int(pairing(la + nu - mu, nu), "exponent of g_{nu,lambda}^mu");
    return f.shifted(e);
  }

  // h_{nu,lambda}^mu = sum_{mu'} g_{nu,lambda}^{mu'} h_{mu',0}^mu
  QPoly h_pair(const Weight& nu, const Weight& la, const Weight& mu) {
    if (!nu.dominant() || !la.dominant() || !mu.dominant()) return QPoly();
    QPoly out;
    for (const Weight& kappa : interval_of(la)) {
      const Weight mup = nu + kappa;
      if (!leq(mu, mup)) continue;
      QPoly g = g_pair(nu, la, mup);
      if (g.is_zero()) continue;
      out += g * h_table(mup).at(mu);
    }
    return out;
  }

  // table views used by the CLI
  TransitionTable p_table(const Weight& la) {
    TransitionTable t;
    t.kind = TableKind::p;
    t.top = la;
    for (const Weight& mu : interval_of(la)) t.rows.emplace_back(mu, p_coeff(la, mu));
    return t;
  }

  TransitionTable g0_table(const Weight& la) {
    TransitionTable t;
    t.kind = TableKind::g0;
    t.top = la;
    for (const Weight& mu : interval_of(la)) t.rows.emplace_back(mu, g0(la, mu));
    return t;
  }

 private:
  int n_;
  std::map<Weight, std::vector<Weight>> interval_;
  std::map<Weight, SigmaFamily> sigma_;
  std::map<std::pair<Weight, Weight>, QPoly> g0_;
  std::map<Weight, TransitionTable> a_;
  std::map<Weight, TransitionTable> h_;
};

}  // namespace wk
