#pragma once

// Ideals of finite sets of points in P^2 by degreewise linear algebra.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "spectra/groebner/gin.hpp"
#include "spectra/groebner/groebner.hpp"
#include "spectra/groebner/linalg.hpp"

namespace spectra::gb {

using PlanePoint = std::array<std::int64_t, 3>;

inline bool proportional(const PlanePoint& p, const PlanePoint& q) {
  return p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1];
}

// Forms of degree d vanishing at every point, as a basis of the kernel of
// evaluation S_d -> k^n.  Also reports the rank of the evaluation map.
template <class K>
std::vector<Poly<K>> vanishing_forms(const std::vector<PlanePoint>& pts, int d, std::size_t* eval_rank = nullptr) {
  auto monos = monomials_of_degree(3, d);
  Matrix<K> ev;
  for (auto& p : pts) {
    std::vector<K> row;
    for (auto& m : monos) {
      K v(1);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < m[i]; ++k) v *= K(p[static_cast<std::size_t>(i)]);
      row.push_back(v);
    }
    ev.push_back(std::move(row));
  }
  if (eval_rank) *eval_rank = rank(ev);
  std::vector<Poly<K>> out;
  for (auto& v : kernel(std::move(ev), monos.size())) {
    std::vector<Term<K>> t;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!is_zero(v[j])) t.push_back({monos[j], v[j]});
    out.push_back(Poly<K>::from_terms(3, std::move(t)));
  }
  return out;
}

// Groebner basis of the (saturated) ideal of the given points.  Generators
// are collected up to one past the first degree where the points impose
// independent conditions, which bounds the generator degrees.  Saturation is
// confirmed in random coordinates by checking T2 is regular on S/in(I).
template <class K>
GroebnerBasis<K> points_ideal(const std::vector<PlanePoint>& pts, std::uint64_t seed = 1) {
  if (pts.empty()) throw std::invalid_argument("points_ideal: no points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i][0] == 0 && pts[i][1] == 0 && pts[i][2] == 0)
      throw std::invalid_argument("points_ideal: (0:0:0) is not a point");
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(pts[i], pts[j])) throw std::invalid_argument("points_ideal: duplicate point");
  }
  std::vector<Poly<K>> gens;
  std::size_t r = 0;
  int d = 1;
  for (;; ++d) {
    auto forms = vanishing_forms<K>(pts, d, &r);
    gens.insert(gens.end(), forms.begin(), forms.end());
    if (r == pts.size()) break;
  }
  auto extra = vanishing_forms<K>(pts, d + 1);
  gens.insert(gens.end(), extra.begin(), extra.end());
  GroebnerBasis<K> G = buchberger(gens);

  std::mt19937_64 rng(seed);
  auto moved = buchberger(change_coordinates(G.gens, random_invertible<K>(3, rng)));
  if (!moved.initial_ideal().last_variable_regular())
    throw std::logic_error("points_ideal: ideal is not saturated");
  return G;
}

}  // namespace spectra::gb
