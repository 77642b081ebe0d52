#pragma once

// Ideals of curves on the double plane 2H, H = {T3 = 0}, with Gamma a
// complete intersection in H.  Used as an independent check of the closed
// Hilbert-function formula for double-plane curves.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "spectra/groebner/groebner.hpp"

namespace spectra::gb {

class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
struct DoublePlaneIdeal {
  std::int64_t r0 = 0, e = 0, b = 0, r = 0;
  std::vector<Poly<K>> gamma;  // g1, g2 in k[T0, T1, T2]
  std::vector<Poly<K>> gens;   // ideal of X in k[T0, ..., T3]
  GroebnerBasis<K> basis;      // Groebner basis of gens
};

inline constexpr std::int64_t kDoublePlaneCoeffBound = 9;

// Random form of degree d in T0, T1, T2 (inside a ring with nvars variables).
template <class K>
Poly<K> random_plane_form(int nvars, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-kDoublePlaneCoeffBound, kDoublePlaneCoeffBound);
  std::vector<Term<K>> t;
  for (auto& m : monomials_of_degree(3, d)) t.push_back({m, K(dist(rng))});
  return Poly<K>::from_terms(nvars, std::move(t));
}

namespace detail {
template <class K>
Poly<K> lift(const Poly<K>& p, int nvars) {
  std::vector<Term<K>> t(p.terms().begin(), p.terms().end());
  return Poly<K>::from_terms(nvars, std::move(t));
}
}  // namespace detail

// Gamma = V(g1, g2) with deg g1 = e, deg g2 = b = r0 - e, so the plane curve
// C0 = V(f0), f0 = alpha g1 + beta g2 of degree r0, contains Gamma and
// r0 > d_sigma holds for Gamma.  C = V(f), f = f0 f1 of degree r >= r0.  With
// h = T3 and u a random form of degree r - 1 the ideal is
//   (h^2, h f0, f0 f, g1 f - h beta u, g2 f + h alpha u).
// Its restriction to H is f I_Gamma and its h-torsion part is h f0.
// Random data is redrawn until Gamma has length e b, f0 and f1 are nonzero,
// and the Hilbert polynomial of S/I has slope r0 + r; after max_tries draws
// GenericityFailure is thrown.
template <class K>
DoublePlaneIdeal<K> double_plane_ideal(std::int64_t r0, std::int64_t e, std::int64_t r, std::uint64_t seed,
                                       int max_tries = 8) {
  if (e < 1 || e >= r0) throw std::invalid_argument("double_plane_ideal: need 1 <= e < r0 (Gamma must be zero-dimensional)");
  if (r < r0) throw std::invalid_argument("double_plane_ideal: need r >= r0");
  const std::int64_t b = r0 - e;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    auto g1 = random_plane_form<K>(3, static_cast<int>(e), rng);
    auto g2 = random_plane_form<K>(3, static_cast<int>(b), rng);
    auto alpha = random_plane_form<K>(3, static_cast<int>(b), rng);
    auto beta = random_plane_form<K>(3, static_cast<int>(e), rng);
    auto f1 = random_plane_form<K>(3, static_cast<int>(r - r0), rng);
    auto u = random_plane_form<K>(3, static_cast<int>(r - 1), rng);
    auto f0 = alpha * g1 + beta * g2;
    if (g1.is_zero() || g2.is_zero() || f0.is_zero() || f1.is_zero()) continue;

    // Gamma zero-dimensional of length e*b: check past its regularity e + b - 2.
    auto gamma_basis = buchberger(std::vector<Poly<K>>{g1, g2});
    const int past = static_cast<int>(e + b);
    if (gamma_basis.hilbert(past) != e * b || gamma_basis.hilbert(past + 1) != e * b) continue;

    const int n = 4;
    auto h = Poly<K>::var(n, 3);
    auto F0 = detail::lift(f0, n), F = detail::lift(f0 * f1, n);
    auto G1 = detail::lift(g1, n), G2 = detail::lift(g2, n);
    auto A = detail::lift(alpha, n), B = detail::lift(beta, n), U = detail::lift(u, n);
    std::vector<Poly<K>> gens{h * h, h * F0, F0 * F, G1 * F - h * B * U, G2 * F + h * A * U};

    auto basis = buchberger(gens);
    const int D = static_cast<int>(r0 + r + 5);
    if (basis.hilbert(D + 1) - basis.hilbert(D) != r0 + r) continue;
    return {r0, e, b, r, {g1, g2}, std::move(gens), std::move(basis)};
  }
  throw GenericityFailure("double_plane_ideal: no generic draw after bounded retries");
}

}  // namespace spectra::gb
