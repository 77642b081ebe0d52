#pragma once

// Generic initial ideals in degrevlex and the standard resolution of a
// zero-dimensional scheme in P^2 read off from its gin.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "spectra/groebner/groebner.hpp"
#include "spectra/groebner/linalg.hpp"

namespace spectra::gb {

class UnstableAcrossTrials : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotStronglyStable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kGinEntryBound = 10000;

// Dense invertible matrix with entries uniform in [-kGinEntryBound, kGinEntryBound].
template <class K>
Matrix<K> random_invertible(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-kGinEntryBound, kGinEntryBound);
  for (;;) {
    Matrix<K> g(n, std::vector<K>(n));
    for (auto& row : g)
      for (auto& x : row) x = K(dist(rng));
    if (rank(g) == static_cast<std::size_t>(n)) return g;
  }
}

template <class K>
std::vector<Poly<K>> change_coordinates(const std::vector<Poly<K>>& gens, const Matrix<K>& gamma) {
  std::vector<Poly<K>> out;
  out.reserve(gens.size());
  for (auto& g : gens) out.push_back(substitute_linear(g, gamma));
  return out;
}

// in(gamma . I) for `trials` independent random gamma drawn from `seed`.
// All draws must give the same monomial ideal, which must be strongly stable.
template <class K>
MonomialIdeal gin(const std::vector<Poly<K>>& gens, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("gin: trials must be >= 1");
  if (gens.empty()) throw std::invalid_argument("gin: no generators");
  for (auto& g : gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("gin: generators must be homogeneous");
  const int n = gens.front().nvars();
  std::mt19937_64 rng(seed);
  MonomialIdeal first;
  for (int t = 0; t < trials; ++t) {
    auto gamma = random_invertible<K>(n, rng);
    MonomialIdeal in = buchberger(change_coordinates(gens, gamma)).initial_ideal();
    if (t == 0) first = in;
    else if (!(in == first)) throw UnstableAcrossTrials("gin: initial ideals differ across random coordinate changes");
  }
  if (!first.is_strongly_stable()) throw NotStronglyStable("gin: result is not strongly stable");
  return first;
}

template <class K>
MonomialIdeal gin(const GroebnerBasis<K>& I, int trials, std::uint64_t seed) {
  return gin(I.gens, trials, seed);
}

struct StandardResolution {
  std::int64_t sigma = 0;
  std::vector<std::int64_t> lambdas;      // lambda_1 < ... < lambda_sigma
  std::vector<std::int64_t> d;            // d_i = sigma - i + lambda_i
  std::vector<std::int64_t> gen_degrees;  // sigma, d_1, ..., d_sigma
  std::vector<std::int64_t> syz_degrees;  // d_1 + 1, ..., d_sigma + 1
  std::int64_t degGamma = 0;
};

namespace detail {
inline std::int64_t plane_monomials(std::int64_t k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }
}  // namespace detail

// For a saturated strongly stable ideal of a zero-dimensional scheme in P^2,
// i.e. M = (T0^sigma, T0^(sigma-1) T1^lambda_1, ..., T1^lambda_sigma).
// The free resolution
//   0 -> sum_j S(-d_j - 1) -> S(-sigma) + sum_j S(-d_j) -> M -> 0
// is checked against the Hilbert function of S/M by alternating sums.
inline StandardResolution standard_resolution(const MonomialIdeal& M) {
  if (M.nvars() != 3) throw ShapeMismatch("standard_resolution: need an ideal in 3 variables");
  if (!M.last_variable_regular()) throw ShapeMismatch("standard_resolution: T2 divides a generator (not saturated)");
  if (!M.is_strongly_stable()) throw ShapeMismatch("standard_resolution: ideal is not strongly stable");
  auto gens = M.gens();
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a[0] > b[0]; });
  if (gens.empty() || gens.front()[1] != 0) throw ShapeMismatch("standard_resolution: no pure power of T0");
  StandardResolution res;
  res.sigma = gens.front()[0];
  if (static_cast<std::int64_t>(gens.size()) != res.sigma + 1)
    throw ShapeMismatch("standard_resolution: expected sigma + 1 generators");
  for (std::int64_t i = 1; i <= res.sigma; ++i) {
    const Monomial& g = gens[static_cast<std::size_t>(i)];
    if (g[0] != res.sigma - i) throw ShapeMismatch("standard_resolution: T0 exponents must drop by one");
    res.lambdas.push_back(g[1]);
    res.d.push_back(res.sigma - i + g[1]);
  }
  res.gen_degrees.push_back(res.sigma);
  std::int64_t dsum = 0;
  for (auto x : res.d) {
    res.gen_degrees.push_back(x);
    res.syz_degrees.push_back(x + 1);
    dsum += x;
  }
  res.degGamma = dsum - res.sigma * (res.sigma - 1) / 2;

  const std::int64_t top = res.d.empty() ? res.sigma : *std::max_element(res.d.begin(), res.d.end());
  for (std::int64_t k = 0; k <= top + 3; ++k) {
    std::int64_t h = detail::plane_monomials(k);
    for (auto g : res.gen_degrees) h -= detail::plane_monomials(k - g);
    for (auto y : res.syz_degrees) h += detail::plane_monomials(k - y);
    if (h != M.hilbert(static_cast<int>(k)))
      throw std::logic_error("standard_resolution: resolution does not match the Hilbert function");
  }
  return res;
}

}  // namespace spectra::gb
