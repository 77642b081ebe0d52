// One PASS/FAIL line per acceptance criterion.  All comparisons are exact;
// runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "spectra/spectra.hpp"

using namespace spectra;

namespace {

using Q = mpq_class;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) out.fail("over time limit");
  char timing[64];
  if (limit_s > 0) std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit_s);
  else std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::printf("%s %d %s (%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, timing, out.ok ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "report --c2-max 21 flags (1,2,2,4,2) and (1,2,2,3,3) as Violated", 5, [](Outcome& o) {
    Report r = build_report(21);
    auto violated = [&](std::vector<std::int64_t> t) {
      for (auto& row : r.excluded)
        if (row.spectrum.values() == t) return row.verdict == ExcessVerdict::Violated;
      return false;
    };
    if (!violated({1, 2, 2, 4, 2})) o.fail("(1,2,2,4,2) not flagged");
    if (!violated({1, 2, 2, 3, 3})) o.fail("(1,2,2,3,3) not flagged");
    if (!r.all_hold()) o.fail("a labeled report assertion does not hold");
  });

  criterion(2, "no spectrum with c2 <= 20 is Violated; (1,2,2,4) is ExceptionCase", 30, [](Outcome& o) {
    for (std::int64_t c2 = 1; c2 <= 20; ++c2)
      for (auto& s : enumerate(c2))
        if (excess_bound(s) == ExcessVerdict::Violated) o.fail("violated: " + s.to_string());
    if (excess_bound(validate({1, 2, 2, 4}).value()) != ExcessVerdict::ExceptionCase)
      o.fail("(1,2,2,4) is not ExceptionCase");
  });

  criterion(3, "enumerate(c2) equals the brute-force filter for c2 <= 6", 0, [](Outcome& o) {
    const std::size_t counts[] = {0, 1, 1, 2, 2, 4, 4};
    for (std::int64_t c2 = 1; c2 <= 6; ++c2) {
      std::vector<std::vector<std::int64_t>> got;
      for (auto& s : enumerate(c2)) got.push_back(s.values());
      auto want = oracle::spectra_by_filter(c2);
      if (got != want) o.fail("mismatch at c2 = " + std::to_string(c2));
      if (want.size() != counts[c2]) o.fail("count at c2 = " + std::to_string(c2));
    }
  });

  criterion(4, "h1 - h2 = c2 at -1 and h1(-m-1) = s(m) for c2 <= 20", 0, [](Outcome& o) {
    for (std::int64_t c2 = 1; c2 <= 20; ++c2)
      for (auto& s : enumerate(c2)) {
        if (h1_table(s, -1) - h2_table(s, -1) != c2) o.fail("h1 - h2 at " + s.to_string());
        if (h1_table(s, -s.m() - 1) != s(s.m())) o.fail("h1(-m-1) at " + s.to_string());
      }
  });

  criterion(5, "monad rank and c1 identities and the s(i) = 2 consequences for c2 <= 12", 60, [](Outcome& o) {
    std::size_t pairs = 0;
    for (std::int64_t c2 = 1; c2 <= 12; ++c2)
      for (auto& s : enumerate(c2)) {
        const std::int64_t m = s.m();
        for (auto& p : enumerate_admissible(s)) {
          ++pairs;
          const auto& rho = p.rho;
          const auto& b = p.shape;
          if (!rank_degree_identities(s, rho, b).empty()) o.fail("identity at " + s.to_string());
          if (s(0) == 1 && s(1) >= 2 && (rho(-1) != 0 || rho(0) != s(1) - 2 || b.b0() != 0))
            o.fail("(a) at " + s.to_string());
          if (s(0) == 2 && s(1) == 2 && s(2) >= 2 &&
              (rho(-2) != 0 || rho(0) != 0 || b.b0() != 2 || b(1) > rho(-1)))
            o.fail("(b) at " + s.to_string());
          for (std::int64_t i = 2; i <= m - 1; ++i)
            if (s(i) == 2 && s(i + 1) >= 2 && (b(i) != 0 || rho(-i) != s(i - 1) - 2 || rho(i) != s(i + 1) - 2))
              o.fail("(c) at " + s.to_string() + " i = " + std::to_string(i));
        }
      }
    if (pairs == 0) o.fail("no admissible pairs");
  });

  criterion(6, "mass(delta2_h0) = degree for every family with parameters <= 12", 0, [](Outcome& o) {
    const std::int64_t N = 12;
    auto check = [&](const CurveFamily& f) {
      if (mass(delta2_h0(f)) != degree(f)) o.fail(family_json(f).dump());
    };
    for (std::int64_t a = 1; a <= N; ++a)
      for (std::int64_t b = a; b <= N; ++b) check(QuadricDivisor{a, b});
    for (std::int64_t d = 1; d <= N; ++d) check(ConeCurve{d});
    for (std::int64_t d0 = 1; d0 <= N; ++d0)
      for (std::int64_t d1 = d0; d1 <= N; ++d1)
        for (std::int64_t r = 1; r <= d0; ++r) check(TwoPlanesNoLine{d0, d1, r});
    for (std::int64_t r0 = 0; r0 <= N; ++r0)
      for (std::int64_t d0 = 1; d0 <= N; ++d0)
        for (std::int64_t r1 = 0; r1 <= N; ++r1)
          for (std::int64_t d1 = 1; d1 <= N; ++d1) {
            if (r0 + d0 > r1 + d1) continue;
            check(TwoPlanesWithLine{r0, d0, r1, d1, Xpp{}});
            if (r0 < 1 || r1 < 1) continue;
            for (std::int64_t mneg = 1; mneg <= N; ++mneg)
              if (mneg == r1 + d1 || mneg <= r0 + d0) check(TwoPlanesWithLine{r0, d0, r1, d1, XprimePlusLine{mneg}});
          }
    for (std::int64_t r0 = 2; r0 <= N; ++r0)
      for (std::int64_t r = r0; r <= N; ++r)
        for (std::int64_t sigma = 1; sigma < r0; ++sigma)
          for (auto& lam : oracle::increasing_sequences(sigma, r0)) check(DoublePlane{sigma, lam, r0, r});
  });

  criterion(7, "double-plane closed form equals the binomial sum on [0, r+r0+3] for r0, r <= 12", 0, [](Outcome& o) {
    for (std::int64_t r0 = 2; r0 <= 12; ++r0)
      for (std::int64_t r = r0; r <= 12; ++r)
        for (std::int64_t sigma = 1; sigma < r0; ++sigma)
          for (auto& lam : oracle::increasing_sequences(sigma, r0)) {
            DoublePlane x{sigma, lam, r0, r};
            auto w = oracle::second_difference(
                [&](std::int64_t i) { return oracle::double_plane_h0(sigma, lam, r0, r, i); }, 0, r + r0 + 3);
            if (FinSuppSeq(0, w) != delta2_h0(x)) o.fail(family_json(x).dump());
          }
  });

  criterion(8, "gin of 50 random point sets over Q; gin of a generic CI(2,2)", 300, [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> coord(-30, 30);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = static_cast<std::size_t>(k % 10 + 1);
      std::vector<gb::PlanePoint> pts;
      while (pts.size() < n) {
        gb::PlanePoint p{coord(rng), coord(rng), coord(rng)};
        if (p == gb::PlanePoint{0, 0, 0}) continue;
        bool dup = false;
        for (auto& q : pts) dup = dup || gb::proportional(p, q);
        if (!dup) pts.push_back(p);
      }
      const std::string tag = "set " + std::to_string(k) + " (n = " + std::to_string(n) + ")";
      auto I = gb::points_ideal<Q>(pts, static_cast<std::uint64_t>(k) + 1);
      auto g = gb::gin(I, 3, static_cast<std::uint64_t>(k) + 100);
      if (!g.is_strongly_stable()) o.fail(tag + ": gin not strongly stable");
      if (!g.last_variable_regular()) o.fail(tag + ": T2 not regular");
      auto res = gb::standard_resolution(g);
      if (res.degGamma != static_cast<std::int64_t>(n)) o.fail(tag + ": degGamma");
      int top = 0;
      for (auto& f : I.gens) top = std::max(top, f.degree());
      for (int d = 0; d <= 2 * top + 2; ++d)
        if (I.initial_ideal().hilbert(d) != gb::hilbert_by_rank(I.gens, 3, d) || g.hilbert(d) != I.hilbert(d))
          o.fail(tag + ": Hilbert function at degree " + std::to_string(d));
    }
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<gb::Poly<Q>> ci;
    for (int j = 0; j < 2; ++j) {
      std::vector<gb::Term<Q>> t;
      for (auto& m : gb::monomials_of_degree(3, 2)) t.push_back({m, Q(coef(rng))});
      ci.push_back(gb::Poly<Q>::from_terms(3, std::move(t)));
    }
    auto g = gb::gin(ci, 3, 7);
    gb::MonomialIdeal want(3, {gb::Monomial{2, 0, 0}, gb::Monomial{1, 1, 0}, gb::Monomial{0, 3, 0}});
    if (!(g == want)) o.fail("CI(2,2) gin is " + g.to_json().dump());
  });

  criterion(9, "Groebner Hilbert value at r0+r+5 equals cumsum2 of the closed form (double plane)", 600, [](Outcome& o) {
    int instances = 0;
    for (std::int64_t r0 = 2; r0 <= 5; ++r0)
      for (std::int64_t e = 1; e < r0; ++e)
        for (std::int64_t r = r0; r <= 5; ++r) {
          auto X = gb::double_plane_ideal<Q>(r0, e, r, static_cast<std::uint64_t>(1000 * r0 + 100 * e + r));
          // Gamma = CI(e, r0 - e) has gin (T0^s, ..., T1^lambda_s) with s = min(e, b)
          std::vector<gb::Poly<Q>> gamma = X.gamma;
          auto res = gb::standard_resolution(gb::gin(gamma, 2, static_cast<std::uint64_t>(instances) + 1));
          DoublePlane dp{res.sigma, res.lambdas, r0, r};
          const std::int64_t D = r0 + r + 5;
          const std::int64_t closed = cumsum2(delta2_h0(dp), D, D)(D);
          const std::int64_t computed = X.basis.hilbert(static_cast<int>(D));
          if (closed != computed)
            o.fail("r0 = " + std::to_string(r0) + ", e = " + std::to_string(e) + ", r = " + std::to_string(r) + ": " +
                   std::to_string(computed) + " vs " + std::to_string(closed));
          ++instances;
        }
    if (instances < 20) o.fail("only " + std::to_string(instances) + " instances");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
