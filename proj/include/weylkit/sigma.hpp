#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylkit/weight.hpp"

namespace wk {

/* The doubly indexed families Sigma_s(lambda) = Sigma_s^0 u Sigma_s^1 of
 * dominant weights attached to lambda in P^+(1).  Only nonempty entries are
 * stored; Sigma_0^0 = {lambda} always. */
struct SigmaFamily {
  Weight source;
  std::map<std::pair<int, int>, std::vector<Weight>> entries;  // (s, r) -> sorted weights

  static const std::vector<Weight>& empty_set() {
    static const std::vector<Weight> e;
    return e;
  }

  const std::vector<Weight>& set(int s, int r) const {
    auto it = entries.find({s, r});
    return it == entries.end() ? empty_set() : it->second;
  }

  // Sigma_s = Sigma_s^0 u Sigma_s^1
  std::vector<Weight> united(int s) const {
    std::vector<Weight> out = set(s, 0);
    const auto& b = set(s, 1);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  int max_s() const {
    int m = 0;
    for (const auto& [key, v] : entries) m = std::max(m, key.first);
    return m;
  }
};

namespace detail {

using SigmaEntries = std::map<std::pair<int, int>, std::vector<Weight>>;

inline void sigma_insert(SigmaEntries& dst, int s, int r, Weight w) {
  if (!w.dominant()) throw std::logic_error("sigma recursion produced a non-dominant weight");
  auto& v = dst[{s, r}];
  v.push_back(std::move(w));
}

inline void sigma_finalize(SigmaEntries& e) {
  for (auto& [key, v] : e) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::logic_error("sigma recursion produced a repeated weight");
  }
}

/* Recursion on Ht lambda.  With m = min lambda and p = min(lambda - omega_m):
 *   Sigma_s^0(lambda) = omega_m + Sigma_s(lambda - omega_m)
 *   Sigma_s^1(lambda) = omega_{m-1} + Sigma_{s-1}(lambda - alpha_{m,p} - omega_{m-1})
 *                                                          when lambda(h_{p+1}) = 0
 * and when lambda(h_{p+1}) = 1, writing
 * kappa = lambda - 2 omega_{p+1} - alpha_{m,p} - omega_{m-1}:
 *   Sigma_1^1(lambda) = {lambda - alpha_{m,p}}
 *   Sigma_s^1(lambda) = (omega_{m-1} + 2 omega_{p+1} + Sigma_{s-1}(kappa))
 *                     u (omega_{m-1} + 2 omega_{p+1} - alpha_{p+1} + Sigma_{s-2}(kappa))
 * for s >= 2.  A shift of an empty set is empty.  The sets subtracted from
 * always land back in P^+(1): lambda - alpha_{m,p} has a single new
 * coordinate at m-1, and peeling omega_{m-1} off before recursing keeps the
 * m = 1 case (where omega_0 = 0 carries no marker) consistent with the
 * reference families and with triangular inversion. */
inline const SigmaEntries& sigma_rec(const Weight& la, std::map<Weight, SigmaEntries>& memo) {
  auto it = memo.find(la);
  if (it != memo.end()) return it->second;

  const int n = la.rank();
  SigmaEntries e;
  e[{0, 0}] = {la};
  if (ht(la) >= 2) {
    const int m = min_supp(la);
    const Weight om = Weight::fundamental(n, m);
    const Weight om_prev = Weight::fundamental(n, m - 1);
    const Weight rest = la - om;
    const int p = min_supp(rest);

    const SigmaEntries& sub = sigma_rec(rest, memo);
    for (const auto& [key, v] : sub) {
      if (key.first == 0 && key.second == 0) continue;  // s=0 handled above
      for (const Weight& w : v) sigma_insert(e, key.first, 0, om + w);
    }

    const Weight amp = root_range(n, m, p);
    if (la.at(p + 1) == 0) {
      const SigmaEntries& shifted = sigma_rec(la - amp - om_prev, memo);
      for (const auto& [key, v] : shifted)
        for (const Weight& w : v) sigma_insert(e, key.first + 1, 1, om_prev + w);
    } else {
      sigma_insert(e, 1, 1, la - amp);
      const Weight two_op1 = 2 * Weight::fundamental(n, p + 1);
      const Weight kappa = la - two_op1 - amp - om_prev;
      const Weight shift_a = om_prev + two_op1;
      const Weight shift_b = shift_a - simple_root(n, p + 1);
      const SigmaEntries& sk = sigma_rec(kappa, memo);
      for (const auto& [key, v] : sk) {
        for (const Weight& w : v) {
          // s = 1 is the explicit singleton above; the union formula starts at s = 2
          if (key.first >= 1 || key.second == 1) sigma_insert(e, key.first + 1, 1, shift_a + w);
          sigma_insert(e, key.first + 2, 1, shift_b + w);
        }
      }
    }
  }
  sigma_finalize(e);
  return memo.emplace(la, std::move(e)).first->second;
}

}  // namespace detail

inline SigmaFamily sigma_family(const Weight& la) {
  if (!la.in_pplus1()) throw std::invalid_argument("sigma_family requires lambda in P^+(1)");
  std::map<Weight, detail::SigmaEntries> memo;
  SigmaFamily f;
  f.source = la;
  f.entries = detail::sigma_rec(la, memo);
  return f;
}

}  // namespace wk
