#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Integral weight of sl_{n+1} written in the basis of fundamental weights:
 * c[i-1] is the coefficient of omega_i.  The rank is the length of the
 * coordinate vector.  Reads outside [1,n] return 0, so omega_0 and
 * omega_{n+1} act as the zero weight. */
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}

  static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }

  // omega_i; indices 0 and n+1 give the zero weight.
  static Weight fundamental(int n, int i) {
    Weight w = zero(n);
    if (i >= 1 && i <= n) w.c[i - 1] = 1;
    return w;
  }

  int rank() const { return static_cast<int>(c.size()); }

  // lambda(h_i)
  int at(int i) const { return (i >= 1 && i <= rank()) ? c[i - 1] : 0; }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  }
  bool dominant() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  }
  // member of P^+(1): all coordinates 0 or 1
  bool in_pplus1() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0 || x == 1; });
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& x : a.c) x *= k;
    return a;
  }

  auto operator<=>(const Weight&) const = default;

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }

  void check_rank(const Weight& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("weight rank mismatch");
  }
};

// alpha_j in omega-coordinates: 2 omega_j - omega_{j-1} - omega_{j+1}
inline Weight simple_root(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("simple root index out of range");
  Weight w = Weight::zero(n);
  w.c[j - 1] = 2;
  if (j - 2 >= 0) w.c[j - 2] -= 1;
  if (j < n) w.c[j] -= 1;
  return w;
}

// alpha_{i,j} = alpha_i + ... + alpha_j = omega_i + omega_j - omega_{i-1} - omega_{j+1}
inline Weight root_range(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("root range out of bounds");
  Weight w = Weight::fundamental(n, i) + Weight::fundamental(n, j) -
             Weight::fundamental(n, i - 1) - Weight::fundamental(n, j + 1);
  return w;
}

// rho = sum of all fundamental weights
inline Weight rho(int n) { return Weight(std::vector<int>(n, 1)); }

/* Element of the rational span of the simple roots, stored by
 * alpha-coordinates. */
struct RootVector {
  std::vector<Rat> a;

  bool integral() const {
    return std::all_of(a.begin(), a.end(),
                       [](const Rat& x) { return boost::multiprecision::denominator(x) == 1; });
  }
  bool nonneg() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x >= 0; });
  }
  bool in_qplus() const { return integral() && nonneg(); }
};

/* Change of basis omega -> alpha via the inverse Cartan matrix of A_n:
 * (C^{-1})_{jk} = min(j,k) - jk/(n+1). */
inline RootVector to_root_coords(const Weight& w) {
  const int n = w.rank();
  RootVector rv;
  rv.a.resize(n);
  for (int j = 1; j <= n; ++j) {
    long long num = 0;
    for (int k = 1; k <= n; ++k)
      num += static_cast<long long>(w.c[k - 1]) *
             (static_cast<long long>(std::min(j, k)) * (n + 1) - static_cast<long long>(j) * k);
    rv.a[j - 1] = Rat(Int(num), Int(n + 1));
  }
  return rv;
}

/* Symmetric bilinear form with (omega_i, alpha_j) = delta_{ij}: expand the
 * first argument in alpha-coordinates and pair against omega-coordinates. */
inline Rat pairing(const Weight& x, const Weight& y) {
  x.check_rank(y);
  RootVector rx = to_root_coords(x);
  Rat s = 0;
  for (int j = 0; j < x.rank(); ++j) s += rx.a[j] * y.c[j];
  return s;
}

inline Rat pairing(const RootVector& x, const Weight& y) {
  if (static_cast<int>(x.a.size()) != y.rank())
    throw std::invalid_argument("weight rank mismatch");
  Rat s = 0;
  for (size_t j = 0; j < x.a.size(); ++j) s += x.a[j] * y.c[j];
  return s;
}

inline Rat pairing(const Weight& x, const RootVector& y) { return pairing(y, x); }

// (sum x_i alpha_i, sum y_j alpha_j) through the Cartan matrix rows
inline Rat pairing(const RootVector& x, const RootVector& y) {
  if (x.a.size() != y.a.size()) throw std::invalid_argument("weight rank mismatch");
  const int n = static_cast<int>(x.a.size());
  Rat s = 0;
  for (int i = 0; i < n; ++i) {
    Rat row = 2 * y.a[i];
    if (i > 0) row -= y.a[i - 1];
    if (i + 1 < n) row -= y.a[i + 1];
    s += x.a[i] * row;
  }
  return s;
}

inline long require_int(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error(std::string("non-integral value in ") + what);
  return static_cast<long>(boost::multiprecision::numerator(r));
}

// mu <= lambda iff lambda - mu lies in Q^+
inline bool leq(const Weight& mu, const Weight& la) {
  return to_root_coords(la - mu).in_qplus();
}

inline long ht(const Weight& la) {
  return std::accumulate(la.c.begin(), la.c.end(), 0L);
}

// height of an element of Q: the sum of its alpha-coordinates
inline long ht_r(const Weight& eta) {
  RootVector rv = to_root_coords(eta);
  Rat s = 0;
  for (const Rat& x : rv.a) s += x;
  return require_int(s, "ht_r of a weight outside the root lattice");
}

/* lambda = 2*lambda0 + lambda1 with lambda0 dominant and lambda1 in P^+(1);
 * quotient and remainder by 2 in each coordinate. */
struct Decomposition {
  Weight lambda0;
  Weight lambda1;
};

inline Decomposition decompose(const Weight& la) {
  if (!la.dominant()) throw std::invalid_argument("decompose requires a dominant weight");
  Decomposition d{Weight::zero(la.rank()), Weight::zero(la.rank())};
  for (int i = 0; i < la.rank(); ++i) {
    d.lambda0.c[i] = la.c[i] / 2;
    d.lambda1.c[i] = la.c[i] % 2;
  }
  return d;
}

// (min supp, max supp) over indices with positive coordinate; (0,0) for the zero weight
inline std::pair<int, int> support_bounds(const Weight& mu) {
  int lo = 0, hi = 0;
  for (int i = 1; i <= mu.rank(); ++i)
    if (mu.at(i) > 0) {
      if (lo == 0) lo = i;
      hi = i;
    }
  return {lo, hi};
}

inline int min_supp(const Weight& mu) { return support_bounds(mu).first; }
inline int max_supp(const Weight& mu) { return support_bounds(mu).second; }

// lambda == 0, or m < min supp lambda
inline bool lt_min(int m, const Weight& la) {
  return la.is_zero() || m < min_supp(la);
}

/* Admissibility of a pair (nu, lambda): either lambda1 = 0, or lambda1 != 0,
 * nu0 in {0, omega_i}, max nu1 < min lambda1, and when nu0 = omega_i with
 * i in [1,n] additionally i < min lambda1 - 1 and nu1(h_i) = nu1(h_{i+1}) = 0. */
inline bool is_admissible(const Weight& nu, const Weight& la) {
  if (!nu.dominant() || !la.dominant()) return false;
  Decomposition dl = decompose(la);
  if (dl.lambda1.is_zero()) return true;
  Decomposition dn = decompose(nu);
  const int m = min_supp(dl.lambda1);
  if (max_supp(dn.lambda1) >= m) return false;
  if (dn.lambda0.is_zero()) return true;
  int i = 0;
  for (int k = 1; k <= nu.rank(); ++k) {
    if (dn.lambda0.at(k) == 0) continue;
    if (dn.lambda0.at(k) > 1 || i != 0) return false;  // nu0 must be a single omega_i
    i = k;
  }
  if (!(i < m - 1)) return false;
  return dn.lambda1.at(i) == 0 && dn.lambda1.at(i + 1) == 0;
}

/* ---- bridge to partition conventions -------------------------------- */

using Partition = std::vector<int>;  // weakly decreasing, nonnegative entries

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 0;
}

inline long part_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0L);
}

inline Partition conjugate(const Partition& p) {
  Partition q;
  int m = p.empty() ? 0 : p[0];
  for (int j = 1; j <= m; ++j)
    q.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
  return q;
}

// a >= b in dominance order; both partitions of the same size
inline bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  size_t m = std::max(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

inline void partitions_of_rec(int rem, int maxpart, int maxparts, Partition& cur,
                              std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == maxparts) return;
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_of_rec(rem - p, p, maxparts, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int N, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  partitions_of_rec(N, N, max_parts, cur, out);
  return out;
}

/* to_partition(mu)_j = sum_{i >= j} mu(h_i) for j in [1, n+1]; the last part
 * is always 0.  from_partition strips columns of height n+1 and is the left
 * inverse. */
inline Partition to_partition(const Weight& mu) {
  const int n = mu.rank();
  Partition p(n + 1, 0);
  for (int j = n; j >= 1; --j) p[j - 1] = p[j] + mu.at(j);
  return p;
}

inline Weight from_partition(int n, Partition parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > n + 1)
    throw std::invalid_argument("partition has more than n+1 parts");
  if (!is_partition(parts)) throw std::invalid_argument("parts not weakly decreasing");
  parts.resize(n + 1, 0);
  Weight w = Weight::zero(n);
  for (int i = 1; i <= n; ++i) w.c[i - 1] = parts[i - 1] - parts[i];
  return w;
}

/* All dominant mu <= lambda, listed so that mu < mu' puts mu' first.
 * Same-size partitions dominated by to_partition(lambda) classify the
 * interval exactly, so we enumerate those rather than walking the weight
 * diagram through non-dominant intermediates. */
inline std::vector<Weight> interval(const Weight& la) {
  if (!la.dominant()) throw std::invalid_argument("interval requires a dominant weight");
  const int n = la.rank();
  Partition top = to_partition(la);
  const int N = static_cast<int>(part_size(top));
  std::vector<Weight> out;
  for (const Partition& p : partitions_of(N, n + 1))
    if (dominates(top, p)) out.push_back(from_partition(n, p));
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    long hx = ht_r(la - x), hy = ht_r(la - y);
    if (hx != hy) return hx < hy;
    return x.c > y.c;
  });
  return out;
}

// all dominant weights of rank n with ht in [ht_min, ht_max]
inline std::vector<Weight> dominant_weights(int n, int ht_min, int ht_max) {
  std::vector<Weight> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n) {
      int h = ht_max - rem;
      if (h >= ht_min) out.push_back(Weight(cur));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[i] = v;
      self(self, i + 1, rem - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, ht_max);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wk
