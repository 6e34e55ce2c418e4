#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "weylkit/qpoly.hpp"
#include "weylkit/transition.hpp"
#include "weylkit/weight.hpp"

namespace wk {

struct SuiteBounds {
  int n_max = 3;
  int ht_max = 5;
};

struct IdentityFailure {
  std::string params;
  QPoly lhs;
  QPoly rhs;
};

/* Outcome of one exhaustive identity sweep.  `instances` counts equations
 * actually compared, `skipped` counts enumerated parameter tuples rejected
 * by the identity's hypotheses, so vacuous passes are visible. */
struct IdentityReport {
  std::string suite;
  long instances = 0;
  long skipped = 0;
  std::vector<IdentityFailure> failures;

  bool pass() const { return failures.empty(); }

  void check(std::string params, const QPoly& lhs, const QPoly& rhs) {
    ++instances;
    if (!(lhs == rhs)) failures.push_back({std::move(params), lhs, rhs});
  }
};

namespace detail {

inline std::string tuple_str(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " ";
    s += p;
  }
  return s;
}

// coset representative index: the unique r in [0,n] with nu - omega_r in Q
inline int coset_index(const Weight& nu) {
  long s = 0;
  for (int i = 1; i <= nu.rank(); ++i) s += static_cast<long>(i) * nu.at(i);
  return static_cast<int>(s % (nu.rank() + 1));
}

using SuiteFn = std::function<void(IdentityReport&, const SuiteBounds&)>;

/* sum_mu a_lambda^mu p_mu^nu = delta = sum_mu p_lambda^mu a_mu^nu */
inline void suite_inverse(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      const auto& ivl = tb.interval_of(la);
      const TransitionTable& a = tb.a_table(la);
      for (const Weight& nu : ivl) {
        QPoly delta = (nu == la) ? QPoly::one() : QPoly();
        QPoly left, right;
        for (const Weight& mu : ivl) {
          left += a.at(mu) * p_coeff(mu, nu);
          right += p_coeff(la, mu) * tb.a_table(mu).at(nu);
        }
        rep.check(tuple_str({"n=" + std::to_string(n), "a*p", la.str(), nu.str()}), left, delta);
        rep.check(tuple_str({"n=" + std::to_string(n), "p*a", la.str(), nu.str()}), right, delta);
      }
    }
  }
}

/* a_lambda^mu = g_{0,lambda}^mu */
inline void suite_a_equals_g(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      const TransitionTable& a = tb.a_table(la);
      for (const auto& [mu, av] : a.rows)
        rep.check(tuple_str({"n=" + std::to_string(n), la.str(), mu.str()}), av, tb.g0(la, mu));
    }
  }
}

/* sum_mu q^{(mu,mu)/2} g_{0,lambda}^mu = 0, exponents normalized by the
 * coset representative omega_r so that every power is an honest integer */
inline void suite_gprop(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      if (ht(la) < 2) {
        ++rep.skipped;
        continue;
      }
      const Weight om = Weight::fundamental(n, coset_index(la));
      QPoly sum;
      for (const Weight& mu : tb.interval_of(la)) {
        const QPoly& g = tb.g0(la, mu);
        if (g.is_zero()) continue;
        long e = require_int(pairing(mu + om, mu - om) / 2, "exponent in gprop");
        sum += g.shifted(e);
      }
      rep.check(tuple_str({"n=" + std::to_string(n), la.str()}), sum, QPoly());
    }
  }
}

/* g_{0,lambda}^mu != 0 implies (lambda-mu, omega_s) <= (lambda, alpha_s)
 * for s below min lambda1 */
inline void suite_support(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      Decomposition d = decompose(la);
      if (d.lambda1.is_zero()) {
        ++rep.skipped;
        continue;
      }
      const int m = min_supp(d.lambda1);
      for (const Weight& mu : tb.interval_of(la)) {
        if (tb.g0(la, mu).is_zero()) continue;
        ++rep.instances;
        RootVector diff = to_root_coords(la - mu);
        for (int s = 1; s < m; ++s) {
          long lhs = require_int(diff.a[s - 1], "support coordinate");
          if (lhs > la.at(s))
            rep.failures.push_back({tuple_str({"n=" + std::to_string(n), la.str(), mu.str(),
                                               "s=" + std::to_string(s)}),
                                    QPoly::q_power(0, lhs), QPoly::q_power(0, la.at(s))});
        }
      }
    }
  }
}

/* g_{0,lambda}^mu = g_{0,lambda-omega_m}^{mu-omega_m}
 *                   - q (1-delta_{p,0}) g_{0,lambda-alpha_{m,p}-omega_{m-1}}^{mu-omega_{m-1}}
 * for lambda in P^+(1) */
inline void suite_g_rec_ht2(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      if (!la.in_pplus1() || la.is_zero()) {
        ++rep.skipped;
        continue;
      }
      const int m = min_supp(la);
      const Weight la_m = la - Weight::fundamental(n, m);
      const int p = min_supp(la_m);
      Weight second = la;  // placeholder
      if (p > 0) second = la - root_range(n, m, p) - Weight::fundamental(n, m - 1);
      for (const Weight& mu : tb.interval_of(la)) {
        QPoly rhs = tb.g0(la_m, mu - Weight::fundamental(n, m));
        if (p > 0)
          rhs -= tb.g0(second, mu - Weight::fundamental(n, m - 1)).shifted(1);
        rep.check(tuple_str({"n=" + std::to_string(n), la.str(), mu.str()}), tb.g0(la, mu), rhs);
      }
    }
  }
}

/* g_{0,lambda}^mu = g_{0,lambda-2omega_j}^{mu-2omega_j}
 *                   - q g_{0,lambda-2omega_j}^{mu-2omega_j+alpha_j}
 * for lambda0 = omega_j with j+1 below min lambda1 */
inline void suite_g_rec_2l0(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      Decomposition d = decompose(la);
      if (ht(d.lambda0) != 1 || !lt_min(min_supp(d.lambda0) + 1, d.lambda1)) {
        ++rep.skipped;
        continue;
      }
      const int j = min_supp(d.lambda0);
      const Weight two_oj = 2 * Weight::fundamental(n, j);
      const Weight aj = simple_root(n, j);
      for (const Weight& mu : tb.interval_of(la)) {
        QPoly rhs = tb.g0(d.lambda1, mu - two_oj) - tb.g0(d.lambda1, mu - two_oj + aj).shifted(1);
        rep.check(tuple_str({"n=" + std::to_string(n), la.str(), mu.str()}), tb.g0(la, mu), rhs);
      }
    }
  }
}

/* the full q-power versions of both recursions */
inline void suite_g_rec_full(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
      Decomposition d = decompose(la);
      bool used = false;
      if (!d.lambda1.is_zero()) {
        used = true;
        const int m = min_supp(d.lambda1);
        const Weight om = Weight::fundamental(n, m);
        const int p = min_supp(d.lambda1 - om);
        Weight second = la;
        Rat half_amp = 0;
        if (p > 0) {
          const Weight amp = root_range(n, m, p);
          second = la - amp - Weight::fundamental(n, m - 1);
          half_amp = pairing(la, amp) / 2;
        }
        for (const Weight& mu : tb.interval_of(la)) {
          QPoly rhs;
          const QPoly& t1 = tb.g0(la - om, mu - om);
          if (!t1.is_zero())
            rhs += t1.shifted(require_int(pairing(om, la - mu), "ht2 exponent"));
          if (p > 0) {
            const QPoly& t2 = tb.g0(second, mu - Weight::fundamental(n, m - 1));
            if (!t2.is_zero()) {
              Rat e = half_amp + pairing(Weight::fundamental(n, m - 1), la - mu);
              rhs -= t2.shifted(require_int(e, "ht2 second exponent"));
            }
          }
          rep.check(tuple_str({"n=" + std::to_string(n), "ht2", la.str(), mu.str()}),
                    tb.g0(la, mu), rhs);
        }
      }
      for (int j = 1; j <= n; ++j) {
        if (la.at(j) < 2 || !(d.lambda1.is_zero() || j + 1 < min_supp(d.lambda1))) continue;
        used = true;
        const Weight two_oj = 2 * Weight::fundamental(n, j);
        const Weight aj = simple_root(n, j);
        const Weight la2 = la - two_oj;
        for (const Weight& mu : tb.interval_of(la)) {
          QPoly rhs;
          const QPoly& t1 = tb.g0(la2, mu - two_oj);
          if (!t1.is_zero())
            rhs += t1.shifted(require_int(pairing(two_oj, la - mu), "2l0 exponent"));
          const QPoly& t2 = tb.g0(la2, mu - two_oj + aj);
          if (!t2.is_zero()) {
            Rat e = Rat(d.lambda0.at(j)) + pairing(two_oj - aj, la - aj - mu);
            rhs -= t2.shifted(require_int(e, "2l0 second exponent"));
          }
          rep.check(tuple_str({"n=" + std::to_string(n), "2l0", "j=" + std::to_string(j),
                               la.str(), mu.str()}),
                    tb.g0(la, mu), rhs);
        }
      }
      if (!used) ++rep.skipped;
    }
  }
}

/* the three graded-character recursions, each compared for b in {g, h} */
inline void suite_sescon(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    auto bval = [&](int which, const Weight& nu, const Weight& la, const Weight& mu) {
      return which == 0 ? tb.g_pair(nu, la, mu) : tb.h_pair(nu, la, mu);
    };
    const char* bname[2] = {"g", "h"};
    for (const Weight& nu : dominant_weights(n, 0, b.ht_max)) {
      for (const Weight& la : dominant_weights(n, 0, b.ht_max - static_cast<int>(ht(nu)))) {
        if (!is_admissible(nu, la)) {
          ++rep.skipped;
          continue;
        }
        Decomposition dl = decompose(la);
        const std::string base =
            tuple_str({"n=" + std::to_string(n), nu.str(), la.str()});
        for (int j = 1; j <= n; ++j) {
          if (nu.at(j) < 2) continue;
          const long e = dl.lambda0.at(j) + nu.at(j) - 1;
          const Weight nu2 = nu - 2 * Weight::fundamental(n, j);
          const Weight la2 = la + 2 * Weight::fundamental(n, j);
          const Weight nua = nu - simple_root(n, j);
          for (int w = 0; w < 2; ++w)
            for (const Weight& mu : tb.interval_of(nu + la))
              rep.check(tuple_str({base, bname[w], "peel2 j=" + std::to_string(j), mu.str()}),
                        bval(w, nu, la, mu),
                        bval(w, nu2, la2, mu) + bval(w, nua, la, mu).shifted(e));
        }
        if (nu.in_pplus1() && !dl.lambda1.is_zero() && max_supp(nu) < min_supp(dl.lambda1) &&
            ht(dl.lambda1) >= 2) {
          const int m = min_supp(dl.lambda1);
          const int p = min_supp(dl.lambda1 - Weight::fundamental(n, m));
          const Weight amp = root_range(n, m, p);
          const long e = require_int(pairing(la, amp) / 2, "sescon strip exponent");
          const Weight lhs_nu = nu + Weight::fundamental(n, m);
          const Weight lhs_la = la - Weight::fundamental(n, m);
          const Weight rhs_nu = nu + Weight::fundamental(n, m - 1);
          const Weight rhs_la = la - amp - Weight::fundamental(n, m - 1);
          for (int w = 0; w < 2; ++w)
            for (const Weight& mu : tb.interval_of(nu + la))
              rep.check(tuple_str({base, bname[w], "strip", mu.str()}),
                        bval(w, lhs_nu, lhs_la, mu),
                        bval(w, nu, la, mu) + bval(w, rhs_nu, rhs_la, mu).shifted(e));
        }
      }
    }
    // b_{omega_m, lambda+omega_m} = b_{0, lambda+2omega_m} + q b_{omega_{m-1}, lambda+omega_{m+1}}
    for (int m = 1; m <= n; ++m) {
      for (const Weight& la : dominant_weights(n, 0, b.ht_max - 2)) {
        if (!la.in_pplus1() || !lt_min(m, la)) {
          ++rep.skipped;
          continue;
        }
        const Weight om = Weight::fundamental(n, m);
        const std::string base = tuple_str(
            {"n=" + std::to_string(n), "level m=" + std::to_string(m), la.str()});
        for (int w = 0; w < 2; ++w)
          for (const Weight& mu : tb.interval_of(la + 2 * om))
            rep.check(tuple_str({base, bname[w], mu.str()}), bval(w, om, la + om, mu),
                      bval(w, Weight::zero(n), la + 2 * om, mu) +
                          bval(w, Weight::fundamental(n, m - 1),
                               la + Weight::fundamental(n, m + 1), mu)
                              .shifted(1));
      }
    }
  }
}

/* q^{(lambda+2omega_m-mu, omega_m)} g_{0,lambda+omega_m}^{mu-omega_m}
 *   = g_{0,lambda+2omega_m}^mu + q g_{0,lambda+omega_{m+1}}^{mu-omega_{m-1}} */
inline void suite_crux(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (int m = 1; m <= n; ++m) {
      for (const Weight& la : dominant_weights(n, 0, b.ht_max - 2)) {
        if (!la.in_pplus1() || !lt_min(m, la)) {
          ++rep.skipped;
          continue;
        }
        const Weight om = Weight::fundamental(n, m);
        for (const Weight& mu : tb.interval_of(la + 2 * om)) {
          QPoly lhs;
          const QPoly& f = tb.g0(la + om, mu - om);
          if (!f.is_zero())
            lhs = f.shifted(require_int(pairing(la + 2 * om - mu, om), "crux exponent"));
          QPoly rhs = tb.g0(la + 2 * om, mu) +
                      tb.g0(la + Weight::fundamental(n, m + 1),
                            mu - Weight::fundamental(n, m - 1))
                          .shifted(1);
          rep.check(tuple_str({"n=" + std::to_string(n), "m=" + std::to_string(m), la.str(),
                               mu.str()}),
                    lhs, rhs);
        }
      }
    }
  }
}

/* h_{nu,0}^mu = p_nu^mu */
inline void suite_h_equals_p(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& nu : dominant_weights(n, 0, b.ht_max)) {
      const TransitionTable& h = tb.h_table(nu);
      for (const auto& [mu, hv] : h.rows)
        rep.check(tuple_str({"n=" + std::to_string(n), nu.str(), mu.str()}), hv,
                  p_coeff(nu, mu));
    }
  }
}

/* p_nu^mu = q^{(omega_j, nu-mu)} p_{nu-2omega_j}^{mu-2omega_j}
 *           + q^{(nu,alpha_j)-1} p_{nu-alpha_j}^mu,            nu(h_j) >= 2,
 * p_{nu+omega_m}^{mu+omega_m} = q^{(nu-mu, omega_m)} p_nu^mu,  mu(h_m) even */
inline void suite_p_rec(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& nu : dominant_weights(n, 0, b.ht_max)) {
      for (const Weight& mu : tb.interval_of(nu)) {
        RootVector diff = to_root_coords(nu - mu);
        for (int j = 1; j <= n; ++j) {
          if (nu.at(j) < 2) continue;
          const Weight oj = Weight::fundamental(n, j);
          long e1 = require_int(diff.a[j - 1], "p-rec exponent");
          QPoly rhs = p_coeff(nu - 2 * oj, mu - 2 * oj).shifted(e1) +
                      p_coeff(nu - simple_root(n, j), mu).shifted(nu.at(j) - 1);
          rep.check(tuple_str({"n=" + std::to_string(n), "peel j=" + std::to_string(j),
                               nu.str(), mu.str()}),
                    p_coeff(nu, mu), rhs);
        }
        for (int m = 1; m <= n; ++m) {
          if (mu.at(m) % 2 != 0) continue;
          const Weight om = Weight::fundamental(n, m);
          long e = require_int(pairing(nu - mu, om), "p-shift exponent");
          rep.check(tuple_str({"n=" + std::to_string(n), "shift m=" + std::to_string(m),
                               nu.str(), mu.str()}),
                    p_coeff(nu + om, mu + om), p_coeff(nu, mu).shifted(e));
        }
      }
    }
  }
}

/* h_{nu,0}^{omega_k} = q^{(nu+omega_r, nu-omega_r)/2} delta_{k,r} where
 * omega_r represents the coset of nu in P/Q */
inline void suite_hinit(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (const Weight& nu : dominant_weights(n, 0, b.ht_max)) {
      const int r = coset_index(nu);
      const Weight omr = Weight::fundamental(n, r);
      const TransitionTable& h = tb.h_table(nu);
      for (int k = 0; k <= n; ++k) {
        QPoly expected;
        if (k == r)
          expected = QPoly::q_power(
              require_int(pairing(nu + omr, nu - omr) / 2, "hinit exponent"));
        rep.check(tuple_str({"n=" + std::to_string(n), nu.str(), "k=" + std::to_string(k)}),
                  h.at(Weight::fundamental(n, k)), expected);
      }
    }
  }
}

/* h_{omega_m,lambda}^mu = 0 when mu(h_m) is odd and mu != lambda + omega_m */
inline void suite_h_vanish(IdentityReport& rep, const SuiteBounds& b) {
  for (int n = 1; n <= b.n_max; ++n) {
    Tables tb(n);
    for (int m = 1; m <= n; ++m) {
      for (const Weight& la : dominant_weights(n, 0, b.ht_max)) {
        Decomposition d = decompose(la);
        bool ok = !d.lambda1.is_zero() &&
                  (d.lambda0.is_zero() ? m <= min_supp(d.lambda1) : m < min_supp(d.lambda1));
        if (!ok) {
          ++rep.skipped;
          continue;
        }
        const Weight om = Weight::fundamental(n, m);
        const Weight top = la + om;
        for (const Weight& mu : tb.interval_of(top)) {
          if (mu.at(m) % 2 == 0 || mu == top) continue;
          rep.check(tuple_str({"n=" + std::to_string(n), "m=" + std::to_string(m), la.str(),
                               mu.str()}),
                    tb.h_pair(om, la, mu), QPoly());
        }
      }
    }
  }
}

inline const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"inverse", suite_inverse},
      {"a-equals-g", suite_a_equals_g},
      {"gprop", suite_gprop},
      {"support", suite_support},
      {"g-rec-ht2", suite_g_rec_ht2},
      {"g-rec-2l0", suite_g_rec_2l0},
      {"g-rec-full", suite_g_rec_full},
      {"sescon", suite_sescon},
      {"crux", suite_crux},
      {"h-equals-p", suite_h_equals_p},
      {"p-rec", suite_p_rec},
      {"hinit", suite_hinit},
      {"h-vanish", suite_h_vanish},
  };
  return reg;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : detail::suite_registry()) names.push_back(name);
  return names;
}

inline IdentityReport run_identity_suite(const std::string& suite, const SuiteBounds& bounds) {
  const auto& reg = detail::suite_registry();
  auto it = reg.find(suite);
  if (it == reg.end()) throw std::invalid_argument("unknown identity suite: " + suite);
  IdentityReport rep;
  rep.suite = suite;
  it->second(rep, bounds);
  return rep;
}

/* Run several suites, fanning out across a bounded number of worker threads;
 * each worker builds its own computation context.  Reports come back in the
 * order the names were given. */
inline std::vector<IdentityReport> run_suites(const std::vector<std::string>& names,
                                              const SuiteBounds& bounds, int threads) {
  std::vector<IdentityReport> out(names.size());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(names.size()));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
      out[i] = run_identity_suite(names[i], bounds);
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace wk
