#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylkit/charge.hpp"
#include "weylkit/qpoly.hpp"
#include "weylkit/schur.hpp"
#include "weylkit/transition.hpp"
#include "weylkit/weight.hpp"

namespace wk {

/* Assembles the polynomial families in the Schur basis: P_nu(z,q,0), the
 * G_lambda, and the interpolating G_{nu,lambda}.  Owns a Tables instance and
 * the tableau-level caches; confine one instance per thread. */
class Characters {
 public:
  explicit Characters(int n) : n_(n), tables_(n) {}

  int rank() const { return n_; }
  Tables& tables() { return tables_; }

  const MonomialPoly& schur(const Partition& p) {
    auto it = schur_.find(p);
    if (it != schur_.end()) return it->second;
    return schur_.emplace(p, schur_expand(n_, p)).first->second;
  }

  const QPoly& kostka(const Partition& shape, const Partition& content) {
    auto key = std::make_pair(shape, content);
    auto it = kostka_.find(key);
    if (it != kostka_.end()) return it->second;
    return kostka_.emplace(std::move(key), kostka_foulkes(shape, content)).first->second;
  }

  /* P_nu(z,q,0) in the Schur basis: the coefficient of s_kappa is the
   * Kostka-Foulkes polynomial of the conjugate shapes,
   *   P_mu(z,q,0) = sum_kappa K_{kappa', mu'}(q) s_kappa(z),
   * summed over partitions kappa of |mu| with at most n+1 rows. */
  const SchurSeries& macdonald_q0(const Weight& nu) {
    auto it = macdonald_.find(nu);
    if (it != macdonald_.end()) return it->second;
    if (!nu.dominant()) throw std::invalid_argument("macdonald_q0 requires a dominant weight");
    SchurSeries s;
    s.n = n_;
    const Partition mup = to_partition(nu);
    const Partition muc = conjugate(mup);
    const int N = static_cast<int>(part_size(mup));
    for (const Partition& kappa : partitions_of(N, n_ + 1)) {
      if (!dominates(mup, kappa)) continue;  // K vanishes unless kappa <= mu
      const QPoly& k = kostka(conjugate(kappa), muc);
      if (!k.is_zero()) s.add_term(from_partition(n_, kappa), k);
    }
    return macdonald_.emplace(nu, std::move(s)).first->second;
  }

  // G_lambda = sum_mu a_lambda^mu P_mu(z,q,0)
  SchurSeries G_series(const Weight& la) {
    SchurSeries out;
    out.n = n_;
    const TransitionTable& a = tables_.a_table(la);
    for (const auto& [mu, c] : a.rows) {
      if (c.is_zero()) continue;
      for (const auto& [w, p] : macdonald_q0(mu).terms) out.add_term(w, c * p);
    }
    return out;
  }

  // G_{nu,lambda} = sum_mu q^{(lambda+nu-mu,nu)} a_lambda^{mu-nu} P_mu(z,q,0)
  SchurSeries G_pair_series(const Weight& nu, const Weight& la) {
    SchurSeries out;
    out.n = n_;
    for (const Weight& kappa : tables_.interval_of(la)) {
      const Weight mu = nu + kappa;
      QPoly c = tables_.g_pair(nu, la, mu);
      if (c.is_zero()) continue;
      for (const auto& [w, p] : macdonald_q0(mu).terms) out.add_term(w, c * p);
    }
    return out;
  }

  const std::map<Weight, Int>& tensor(const Weight& a, const Weight& b) {
    auto key = a.c <= b.c ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = tensor_.find(key);
    if (it != tensor_.end()) return it->second;
    return tensor_.emplace(std::move(key), tensor_decompose(n_, a, b)).first->second;
  }

  /* Weight-multiplicity comparison of G_{nu,lambda}(z,1) against
   * G_{nu,0}(z,1) G_{0,lambda}(z,1), products routed through tensor
   * decompositions. */
  bool check_factorization(const Weight& nu, const Weight& la) {
    std::map<Weight, Int> lhs = G_pair_series(nu, la).at_q1();
    std::map<Weight, Int> fa = macdonald_q0(nu).at_q1();
    std::map<Weight, Int> fb = G_series(la).at_q1();
    std::map<Weight, Int> rhs;
    for (const auto& [w1, m1] : fa)
      for (const auto& [w2, m2] : fb)
        for (const auto& [w, m] : tensor(w1, w2)) {
          Int add = m1 * m2 * m;
          auto [it, inserted] = rhs.try_emplace(w, add);
          if (!inserted) {
            it->second += add;
            if (it->second == 0) rhs.erase(it);
          }
        }
    return lhs == rhs;
  }

  /* sum_mu p_nu^mu G_mu(z,q) must reproduce P_nu(z,q,0); this closes the
   * loop between the charge-based expansion and the transition layer. */
  bool check_P_roundtrip(const Weight& nu) {
    SchurSeries acc;
    acc.n = n_;
    for (const Weight& mu : tables_.interval_of(nu)) {
      QPoly c = p_coeff(nu, mu);
      if (c.is_zero()) continue;
      SchurSeries g = G_series(mu);
      for (const auto& [w, p] : g.terms) acc.add_term(w, c * p);
    }
    acc -= macdonald_q0(nu);
    return acc.is_zero();
  }

  // graded dimension of M(nu,lambda) read off G_{nu,lambda} at q = 1
  Int dim_M(const Weight& nu, const Weight& la) {
    Int d = 0;
    for (const auto& [w, m] : G_pair_series(nu, la).at_q1()) d += m * weyl_dim(w);
    return d;
  }

 private:
  int n_;
  Tables tables_;
  std::map<Partition, MonomialPoly> schur_;
  std::map<std::pair<Partition, Partition>, QPoly> kostka_;
  std::map<Weight, SchurSeries> macdonald_;
  std::map<std::pair<Weight, Weight>, std::map<Weight, Int>> tensor_;
};

}  // namespace wk
