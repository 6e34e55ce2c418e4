#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "weylkit/qpoly.hpp"
#include "weylkit/weight.hpp"

namespace wk {

/* Semistandard tableaux are walked as chains of horizontal strips: the cells
 * holding values <= v form a partition shape, and consecutive shapes differ
 * by a horizontal strip.  visit() receives the chain of shapes
 * shape^0 = empty, ..., shape^{nvalues} = target.  When content is given,
 * the strip of value v must have exactly content[v-1] cells. */
inline void for_each_ssyt(const Partition& shape, int nvalues, const Partition* content,
                          const std::function<void(const std::vector<Partition>&)>& visit) {
  std::vector<Partition> chain;
  chain.reserve(nvalues + 1);
  chain.push_back(Partition(shape.size(), 0));
  auto strip = [&](auto&& self, int v) -> void {
    if (v > nvalues) {
      if (chain.back() == shape) visit(chain);
      return;
    }
    const Partition& prev = chain.back();
    long budget = -1;  // unconstrained
    if (content)
      budget = (v - 1 < static_cast<int>(content->size())) ? (*content)[v - 1] : 0;
    Partition next(shape.size(), 0);
    auto rec = [&](auto&& self2, size_t row, long used) -> void {
      if (row == shape.size()) {
        if (budget >= 0 && used != budget) return;
        chain.push_back(next);
        self(self, v + 1);
        chain.pop_back();
        return;
      }
      int lo = prev[row];
      int hi = shape[row];
      if (row > 0) hi = std::min({hi, prev[row - 1], next[row - 1]});
      // row `row` holds entries > row, so it stays empty until v > row
      if (static_cast<int>(row) >= v) hi = lo;
      if (budget >= 0) hi = std::min<long>(hi, lo + (budget - used));
      for (int x = lo; x <= hi; ++x) {
        next[row] = x;
        self2(self2, row + 1, used + (x - lo));
      }
      next[row] = 0;
    };
    rec(rec, 0, 0);
  };
  strip(strip, 1);
}

// row content of the tableau encoded by a strip chain: cells of value v in row i
inline std::vector<std::vector<int>> chain_rows(const std::vector<Partition>& chain) {
  const size_t rows = chain.front().size();
  std::vector<std::vector<int>> tab(rows);
  for (size_t v = 1; v < chain.size(); ++v)
    for (size_t i = 0; i < rows; ++i)
      for (int k = chain[v - 1][i]; k < chain[v][i]; ++k) tab[i].push_back(static_cast<int>(v));
  return tab;
}

/* Homogeneous polynomial in z_1..z_{nvars} with QPoly coefficients, stored by
 * exponent vector. */
struct MonomialPoly {
  int nvars = 0;
  long degree = 0;
  std::map<std::vector<int>, QPoly> terms;

  void add_term(const std::vector<int>& mono, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  MonomialPoly& operator-=(const MonomialPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }

  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
    MonomialPoly r;
    r.nvars = a.nvars;
    r.degree = a.degree + b.degree;
    std::vector<int> m(a.nvars);
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  // coefficients constant on symmetric-group orbits of the exponent vector;
  // adjacent transpositions generate the group, so checking them suffices
  bool is_symmetric() const {
    for (const auto& [m, c] : terms) {
      std::vector<int> s = m;
      for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) continue;
        std::swap(s[i], s[i + 1]);
        auto it = terms.find(s);
        if (it == terms.end() || !(it->second == c)) return false;
        std::swap(s[i], s[i + 1]);
      }
    }
    return true;
  }
};

// Schur polynomial s_p(z_1..z_{n+1}) as a sum over SSYT with entries in [1, n+1]
inline MonomialPoly schur_expand(int n, const Partition& p) {
  if (static_cast<int>(p.size()) > n + 1)
    throw std::invalid_argument("partition has more than n+1 parts");
  if (!is_partition(p)) throw std::invalid_argument("parts not weakly decreasing");
  MonomialPoly out;
  out.nvars = n + 1;
  out.degree = part_size(p);
  Partition shape = p;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) {
    out.add_term(std::vector<int>(n + 1, 0), QPoly::one());
    return out;
  }
  if (static_cast<int>(shape.size()) > n + 1) return out;  // no fillings
  for_each_ssyt(shape, n + 1, nullptr, [&](const std::vector<Partition>& chain) {
    std::vector<int> content(n + 1, 0);
    for (size_t v = 1; v < chain.size(); ++v)
      content[v - 1] = static_cast<int>(part_size(chain[v]) - part_size(chain[v - 1]));
    out.add_term(content, QPoly::one());
  });
  return out;
}

/* Symmetric-polynomial map dominant weight -> QPoly.  Used for every series
 * expanded in the Schur basis. */
struct SchurSeries {
  int n = 0;
  std::map<Weight, QPoly> terms;

  void add_term(const Weight& w, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  QPoly coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? QPoly() : it->second;
  }

  SchurSeries& operator+=(const SchurSeries& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  SchurSeries& operator-=(const SchurSeries& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SchurSeries&) const = default;

  // weight -> coefficient sum at q = 1, zeros dropped
  std::map<Weight, Int> at_q1() const {
    std::map<Weight, Int> out;
    for (const auto& [w, c] : terms) {
      Int v = c.eval_at_one();
      if (v != 0) out[w] = v;
    }
    return out;
  }

  // specialization q = 0: constant terms only
  std::map<Weight, Int> at_q0() const {
    std::map<Weight, Int> out;
    for (const auto& [w, c] : terms) {
      Int v = c.coeff(0);
      if (v != 0) out[w] = v;
    }
    return out;
  }
};

// every coefficient in Z_+[q]
inline bool is_schur_positive(const SchurSeries& s) {
  for (const auto& [w, c] : s.terms)
    if (!c.nonneg_coeffs() || !c.nonneg_exps()) return false;
  return true;
}

/* Unique Schur-basis expansion of a symmetric homogeneous polynomial by
 * peeling the dominance-maximal term; that term is found as the
 * lexicographically largest sorted exponent vector. */
inline SchurSeries to_schur(int n, MonomialPoly m) {
  if (!m.is_symmetric()) throw std::invalid_argument("to_schur requires a symmetric polynomial");
  SchurSeries out;
  out.n = n;
  long guard = static_cast<long>(m.terms.size()) + 16;
  while (!m.is_zero()) {
    if (--guard < 0) throw std::logic_error("schur peeling failed to terminate");
    Partition lead;
    for (const auto& [mono, c] : m.terms) {
      Partition s = mono;
      std::sort(s.begin(), s.end(), std::greater<int>());
      if (lead.empty() || s > lead) lead = s;
    }
    QPoly c = m.terms.at(lead);
    out.add_term(from_partition(n, lead), c);
    MonomialPoly sp = schur_expand(n, lead);
    for (auto& [mono, cc] : sp.terms) m.add_term(mono, -(c * cc));
  }
  return out;
}

/* Multiplicities of V(kappa) in V(a) (x) V(b), through products of padded
 * Schur expansions; weights determine monomials only up to the determinant
 * monomial, which from_partition strips again. */
inline std::map<Weight, Int> tensor_decompose(int n, const Weight& a, const Weight& b) {
  MonomialPoly pa = schur_expand(n, to_partition(a));
  MonomialPoly pb = schur_expand(n, to_partition(b));
  SchurSeries s = to_schur(n, pa * pb);
  std::map<Weight, Int> out;
  for (const auto& [w, c] : s.terms) {
    if (c.min_exp() != 0 || c.max_exp() != 0)
      throw std::logic_error("tensor product coefficient not constant");
    out[w] = c.coeff(0);
  }
  return out;
}

// Weyl dimension: prod over positive roots of (mu + rho, alpha) / (rho, alpha)
inline Int weyl_dim(const Weight& mu) {
  if (!mu.dominant()) throw std::invalid_argument("weyl_dim requires a dominant weight");
  const int n = mu.rank();
  Int num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    long s = 0;
    for (int j = i; j <= n; ++j) {
      s += mu.at(j) + 1;
      num *= s;
      den *= (j - i + 1);
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return num / den;
}

// dimension by direct tableau count; an independent route for cross-checks
inline Int ssyt_dim(const Weight& mu) {
  MonomialPoly m = schur_expand(mu.rank(), to_partition(mu));
  Int s = 0;
  for (const auto& [mono, c] : m.terms) s += c.coeff(0);
  return s;
}

}  // namespace wk
