#pragma once

// Constraints tying a spectrum to the generator degrees rho of H^1_*(E) and
// to the splitting type b of the middle term of the minimal monad.  The
// module is an exclusion engine: a (rho, b) pair that survives every check is
// "not excluded", which says nothing about existence of a bundle.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/seqcalc.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

// rho(i) = number of minimal generators of degree i of H^1_*(E).
struct RhoSeq {
  FinSuppSeq rho;

  std::int64_t operator()(std::int64_t i) const { return rho(i); }
  friend bool operator==(const RhoSeq&, const RhoSeq&) = default;
};

// b(0) = rank of the trivial summand, b(i) for i >= 1 the multiplicity of the
// pair O(i) + O(-i) in the middle term.
struct MonadShape {
  FinSuppSeq b;

  std::int64_t b0() const { return b(0); }
  std::int64_t operator()(std::int64_t i) const { return b(i); }
  friend bool operator==(const MonadShape&, const MonadShape&) = default;
};

class NegativeRank : public std::runtime_error {
 public:
  explicit NegativeRank(std::int64_t index)
      : std::runtime_error("negative monad rank b(" + std::to_string(index) + ")"), index_(index) {}
  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Allowed range of rho(i) for each degree where it may be nonzero.  Degrees
// absent from the map are forced to 0.
//   rho(-m-1) = s(m)
//   rho(i) <= s(-i-1) - 1           for -m <= i <= -1
//   rho(i) <= max(s(-i-1) - 2, 0)   for 0 <= i <= m-1
inline std::map<std::int64_t, Interval> rho_bounds(const Spectrum& s) {
  const std::int64_t m = s.m();
  std::map<std::int64_t, Interval> bounds;
  bounds[-m - 1] = {s(m), s(m)};
  for (std::int64_t i = -m; i <= -1; ++i) bounds[i] = {0, s(-i - 1) - 1};
  for (std::int64_t i = 0; i <= m - 1; ++i) bounds[i] = {0, std::max<std::int64_t>(s(-i - 1) - 2, 0)};
  return bounds;
}

inline bool within_bounds(const Spectrum& s, const RhoSeq& rho) {
  auto bounds = rho_bounds(s);
  if (!rho.rho.is_zero()) {
    for (std::int64_t i = rho.rho.first(); i <= rho.rho.last(); ++i)
      if (rho(i) != 0 && !bounds.count(i)) return false;
  }
  for (auto& [i, iv] : bounds)
    if (!iv.contains(rho(i))) return false;
  return true;
}

// If rho(i) reaches its upper bound s(-i-1) - 1 for some -m <= i <= -2, then
// s(j) = 1 for -i <= j <= m.  Returns the first degree i where that
// implication fails.
inline std::optional<std::int64_t> check_maximal_rho_implication(const Spectrum& s, const RhoSeq& rho) {
  const std::int64_t m = s.m();
  for (std::int64_t i = -m; i <= -2; ++i) {
    if (rho(i) != s(-i - 1) - 1) continue;
    for (std::int64_t j = -i; j <= m; ++j)
      if (s(j) != 1) return i;
  }
  return std::nullopt;
}

// Ranks from s and rho without the sign check:
//   b(i)   = 2 s(i) - (s(i-1) - rho(-i)) - (s(i+1) - rho(i)),  i >= 1
//   b(0)/2 = s(0) - (s(1) - rho(0)) + 1
inline MonadShape monad_ranks(const Spectrum& s, const RhoSeq& rho) {
  const std::int64_t m = s.m();
  std::vector<std::int64_t> b(static_cast<std::size_t>(m + 2), 0);
  b[0] = 2 * (s(0) - (s(1) - rho(0)) + 1);
  for (std::int64_t i = 1; i <= m + 1; ++i)
    b[static_cast<std::size_t>(i)] = 2 * s(i) - (s(i - 1) - rho(-i)) - (s(i + 1) - rho(i));
  return {FinSuppSeq(0, std::move(b))};
}

// Throws NegativeRank when some b(i) < 0, i.e. rho cannot come from a bundle.
inline MonadShape b_from(const Spectrum& s, const RhoSeq& rho) {
  MonadShape shape = monad_ranks(s, rho);
  if (!shape.b.is_zero())
    for (std::int64_t i = shape.b.first(); i <= shape.b.last(); ++i)
      if (shape(i) < 0) throw NegativeRank(i);
  return shape;
}

// The rank identity  sum_{i>=1} b(i) + b(0)/2 = sum rho + 1  and the first
// Chern class identity  c1(A_-^dual) - c1(reduced B_+) = s(0), with
//   c1(A_-) = sum_{i<0} i rho(i),
//   c1(reduced B_+) = sum_{i>=1} i b(i) - sum_{i>=0} i rho(i).
// Returns a description of each identity that fails.
inline std::vector<std::string> rank_degree_identities(const Spectrum& s, const RhoSeq& rho,
                                                       const MonadShape& shape) {
  std::vector<std::string> failures;
  std::int64_t b_sum = 0, b_weighted = 0;
  if (!shape.b.is_zero())
    for (std::int64_t i = std::max<std::int64_t>(1, shape.b.first()); i <= shape.b.last(); ++i) {
      b_sum += shape(i);
      b_weighted += i * shape(i);
    }
  std::int64_t rho_sum = 0, c1_a_minus = 0, rho_nonneg_weighted = 0;
  if (!rho.rho.is_zero())
    for (std::int64_t i = rho.rho.first(); i <= rho.rho.last(); ++i) {
      rho_sum += rho(i);
      if (i < 0) c1_a_minus += i * rho(i);
      if (i >= 0) rho_nonneg_weighted += i * rho(i);
    }
  if (shape.b0() % 2 != 0) failures.push_back("b(0) is odd");
  if (b_sum + shape.b0() / 2 != rho_sum + 1)
    failures.push_back("rank: sum b(i) + b(0)/2 = " + std::to_string(b_sum + shape.b0() / 2) +
                       " but sum rho + 1 = " + std::to_string(rho_sum + 1));
  const std::int64_t c1_reduced_b = b_weighted - rho_nonneg_weighted;
  if (-c1_a_minus - c1_reduced_b != s(0))
    failures.push_back("c1: c1(A_-^dual) - c1(B_+) = " + std::to_string(-c1_a_minus - c1_reduced_b) +
                       " but s(0) = " + std::to_string(s(0)));
  return failures;
}

struct AdmissiblePair {
  RhoSeq rho;
  MonadShape shape;
};

// Every rho inside rho_bounds that passes the maximal-rho implication and
// yields nonnegative ranks, in lexicographic order of (rho(-m-1), ..., rho(m-1)).
inline std::vector<AdmissiblePair> enumerate_admissible(const Spectrum& s) {
  auto bounds = rho_bounds(s);
  std::vector<std::int64_t> degrees;
  std::vector<Interval> ranges;
  for (auto& [i, iv] : bounds) {
    degrees.push_back(i);
    ranges.push_back(iv);
  }
  const std::int64_t lo = degrees.front();
  std::vector<std::int64_t> cur;
  for (auto& r : ranges) cur.push_back(r.lo);

  std::vector<AdmissiblePair> out;
  for (;;) {
    RhoSeq rho{FinSuppSeq(lo, cur)};
    if (!check_maximal_rho_implication(s, rho)) {
      MonadShape shape = monad_ranks(s, rho);
      bool nonneg = true;
      for (auto v : shape.b.values()) nonneg = nonneg && v >= 0;
      if (nonneg) out.push_back({std::move(rho), std::move(shape)});
    }
    // odometer, last degree fastest
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      if (cur[k] < ranges[k].hi) {
        ++cur[k];
        break;
      }
      cur[k] = ranges[k].lo;
      if (k == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

inline nlohmann::json monad_json(const AdmissiblePair& p) {
  FinSuppSeq positive = p.shape.b.is_zero() ? FinSuppSeq{}
                                            : FinSuppSeq::tabulate(1, std::max<std::int64_t>(1, p.shape.b.last()),
                                                                   [&](std::int64_t i) { return p.shape(i); });
  return {{"rho", p.rho.rho}, {"b0", p.shape.b0()}, {"b", positive}};
}

}  // namespace spectra
