// Acceptance runner: executes the eight acceptance checks end to end and
// prints one pass/fail line per criterion.  All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sigma_families.hpp"
#include "weylkit/weylkit.hpp"

using namespace wk;

namespace {

struct Outcome {
  bool pass = true;
  long instances = 0;
  std::string detail;

  void fail(const std::string& d) {
    pass = false;
    if (detail.empty()) detail = d;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::pair<Weight, Weight>> admissible_pairs(int n, int ht_max) {
  std::vector<std::pair<Weight, Weight>> out;
  for (const Weight& nu : dominant_weights(n, 0, ht_max))
    for (const Weight& la : dominant_weights(n, 0, ht_max - static_cast<int>(ht(nu))))
      if (is_admissible(nu, la)) out.emplace_back(nu, la);
  return out;
}

Outcome criterion_golden() {
  Outcome o;
  for (const GoldenOutcome& g : run_golden()) {
    ++o.instances;
    if (!g.pass) o.fail(g.label + ": " + g.detail);
  }
  return o;
}

Outcome criterion_matrix_duality() {
  Outcome o;
  for (const char* name : {"inverse", "a-equals-g"}) {
    IdentityReport rep = run_identity_suite(name, {4, 5});
    o.instances += rep.instances;
    if (!rep.pass() || rep.instances == 0)
      o.fail(std::string(name) + (rep.instances ? ": " + rep.failures[0].params : ": vacuous"));
  }
  return o;
}

Outcome criterion_schur_positivity(std::map<int, std::unique_ptr<Characters>>& engines) {
  Outcome o;
  long explored = 0, explored_positive = 0;
  for (int n = 1; n <= 4; ++n) {
    auto& eng = engines[n];
    if (!eng) eng = std::make_unique<Characters>(n);
    for (const Weight& nu : dominant_weights(n, 0, 6))
      for (const Weight& la : dominant_weights(n, 0, 6 - static_cast<int>(ht(nu)))) {
        bool positive = is_schur_positive(eng->G_pair_series(nu, la));
        if (is_admissible(nu, la)) {
          ++o.instances;
          if (!positive) o.fail("n=" + std::to_string(n) + " " + nu.str() + " " + la.str());
        } else {
          // positivity beyond the admissible range is conjectural; observed,
          // never asserted
          ++explored;
          explored_positive += positive ? 1 : 0;
        }
      }
  }
  std::printf("  note: non-admissible pairs explored: %ld, schur-positive: %ld\n", explored,
              explored_positive);
  return o;
}

Outcome criterion_factorization(std::map<int, std::unique_ptr<Characters>>& engines) {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    auto& eng = engines[n];
    if (!eng) eng = std::make_unique<Characters>(n);
    for (const auto& [nu, la] : admissible_pairs(n, 6)) {
      ++o.instances;
      if (!eng->check_factorization(nu, la))
        o.fail("n=" + std::to_string(n) + " " + nu.str() + " " + la.str());
    }
  }
  return o;
}

Outcome criterion_identity_suites() {
  Outcome o;
  const std::vector<std::string> names = {"gprop",  "support",    "g-rec-ht2", "g-rec-2l0",
                                          "g-rec-full", "sescon", "crux",      "p-rec",
                                          "hinit",  "h-equals-p", "h-vanish"};
  std::vector<IdentityReport> reports = run_suites(names, {3, 5}, 4);
  for (const IdentityReport& rep : reports) {
    o.instances += rep.instances;
    if (!rep.pass())
      o.fail(rep.suite + ": " + rep.failures[0].params);
    else if (rep.instances == 0)
      o.fail(rep.suite + ": vacuous pass");
  }
  return o;
}

Outcome criterion_roundtrip() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    Characters eng(n);
    for (const Weight& nu : dominant_weights(n, 0, 5)) {
      ++o.instances;
      if (!eng.check_P_roundtrip(nu)) o.fail("n=" + std::to_string(n) + " " + nu.str());
    }
  }
  return o;
}

Outcome criterion_dimensions() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    Characters eng(n);
    const Weight zero = Weight::zero(n);
    for (const auto& [nu, la] : admissible_pairs(n, 5)) {
      ++o.instances;
      Int total = eng.dim_M(nu, la);
      if (total != eng.dim_M(nu, zero) * eng.dim_M(zero, la)) {
        o.fail("product n=" + std::to_string(n) + " " + nu.str() + " " + la.str());
        continue;
      }
      for (int j = 1; j <= n; ++j) {
        if (nu.at(j) < 2) continue;
        ++o.instances;
        Weight oj = Weight::fundamental(n, j);
        if (total !=
            eng.dim_M(nu - 2 * oj, la + 2 * oj) + eng.dim_M(nu - simple_root(n, j), la))
          o.fail("peel n=" + std::to_string(n) + " j=" + std::to_string(j) + " " + nu.str() +
                 " " + la.str());
      }
      Decomposition dl = decompose(la);
      if (!nu.is_zero() && nu.in_pplus1() && !dl.lambda1.is_zero() &&
          max_supp(nu) < min_supp(dl.lambda1)) {
        ++o.instances;
        const int m = max_supp(nu);
        const int p = min_supp(dl.lambda1);
        Weight om = Weight::fundamental(n, m);
        Int rhs = eng.dim_M(nu - om, la + om) +
                  eng.dim_M(nu - om + Weight::fundamental(n, m - 1),
                            la - Weight::fundamental(n, p) + Weight::fundamental(n, p + 1));
        if (total != rhs)
          o.fail("strip n=" + std::to_string(n) + " " + nu.str() + " " + la.str());
      }
    }
  }
  return o;
}

Outcome criterion_sigma() {
  Outcome o;
  // disjointness and the support constraints over every lambda in P^+(1), n <= 5
  for (int n = 1; n <= 5; ++n)
    for (const Weight& la : dominant_weights(n, 0, n)) {
      if (!la.in_pplus1()) continue;
      ++o.instances;
      SigmaFamily f = sigma_family(la);
      std::set<Weight> seen;
      for (const auto& [key, v] : f.entries)
        for (const Weight& mu : v) {
          if (!seen.insert(mu).second) o.fail("overlap at " + la.str());
          if (la.is_zero()) continue;
          const int m = min_supp(la);
          for (int k = 1; k < m - 1; ++k)
            if (mu.at(k) != 0) o.fail("support low coord " + la.str() + mu.str());
          if (m >= 2 && mu.at(m - 1) > 1) o.fail("support edge coord " + la.str() + mu.str());
          RootVector diff = to_root_coords(la - mu);
          if (!diff.in_qplus()) o.fail("difference outside Q^+ " + la.str() + mu.str());
          for (int k = 1; k < m; ++k)
            if (diff.a[k - 1] != 0) o.fail("difference uses alpha_k below min " + la.str());
        }
    }
  // exact match of the reference pair/triple/quadruple families
  auto check = [&o](const Weight& la, wk_test::SigmaSpec expect) {
    ++o.instances;
    for (auto it = expect.begin(); it != expect.end();) {
      std::sort(it->second.begin(), it->second.end());
      it->second.erase(std::unique(it->second.begin(), it->second.end()), it->second.end());
      it = it->second.empty() ? expect.erase(it) : std::next(it);
    }
    SigmaFamily f = sigma_family(la);
    wk_test::SigmaSpec got(f.entries.begin(), f.entries.end());
    if (got != expect) o.fail("reference family mismatch at " + la.str());
  };
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m < n; ++m)
      for (int p = m + 1; p <= n; ++p) {
        check(wk_test::om(n, m) + wk_test::om(n, p), wk_test::expected_pair(n, m, p));
        for (int r = p + 1; r <= n; ++r) {
          check(wk_test::om(n, m) + wk_test::om(n, p) + wk_test::om(n, r),
                wk_test::expected_triple(n, m, p, r));
          for (int s = r + 1; s <= n; ++s)
            check(wk_test::om(n, m) + wk_test::om(n, p) + wk_test::om(n, r) + wk_test::om(n, s),
                  wk_test::expected_quadruple(n, m, p, r, s));
        }
      }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*fn)();
  };

  std::map<int, std::unique_ptr<Characters>> engines;  // shared by criteria 3 and 4

  int failures = 0;
  auto report = [&](int index, const char* label, const Outcome& o, double secs) {
    std::printf("criterion %d (%s): %s (%ld instances, %.1fs)%s%s\n", index, label,
                o.pass ? "PASS" : "FAIL", o.instances, secs, o.pass ? "" : " first: ",
                o.pass ? "" : o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  auto timed = [&](int index, const char* label, auto&& fn) {
    auto t0 = Clock::now();
    Outcome o = fn();
    report(index, label, o, seconds_since(t0));
  };

  timed(1, "golden tables", [] { return criterion_golden(); });
  timed(2, "matrix duality", [] { return criterion_matrix_duality(); });
  timed(3, "schur positivity", [&] { return criterion_schur_positivity(engines); });
  timed(4, "q=1 factorization", [&] { return criterion_factorization(engines); });
  timed(5, "identity suites", [] { return criterion_identity_suites(); });
  timed(6, "P roundtrip", [] { return criterion_roundtrip(); });
  timed(7, "dimension identities", [] { return criterion_dimensions(); });
  timed(8, "sigma sets", [] { return criterion_sigma(); });

  if (failures == 0)
    std::printf("acceptance: all 8 criteria PASS\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
