#pragma once

// Buchberger's algorithm, normal forms, and the division algorithm of
// Eliahou-Kervaire type for ideals with stable initial ideal.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spectra/groebner/linalg.hpp"
#include "spectra/groebner/monomial_ideal.hpp"
#include "spectra/groebner/poly.hpp"

namespace spectra::gb {

template <class K>
struct GroebnerBasis {
  int nvars = 1;
  std::vector<Poly<K>> gens;  // reduced, monic, ascending leading monomials

  MonomialIdeal initial_ideal() const {
    std::vector<Monomial> lms;
    for (auto& g : gens) lms.push_back(g.lm());
    return MonomialIdeal(nvars, std::move(lms));
  }
  std::int64_t hilbert(int d) const { return initial_ideal().hilbert(d); }
};

namespace detail {

// t[from..] - c * q * g[1..], where c * q * lt(g) cancelled t[from - 1].
template <class K>
void subtract_tail(std::vector<Term<K>>& t, std::size_t from, const K& c, const Monomial& q, const Poly<K>& g) {
  const auto& gt = g.terms();
  std::vector<Term<K>> out;
  out.reserve(t.size() - from + gt.size());
  std::size_t i = from, j = 1;
  while (i < t.size() || j < gt.size()) {
    if (j == gt.size()) {
      out.push_back(std::move(t[i++]));
      continue;
    }
    Monomial gm = gt[j].m * q;
    int cmp = i == t.size() ? -1 : compare(t[i].m, gm);
    if (cmp > 0) {
      out.push_back(std::move(t[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, K(-(c * gt[j++].c))});
    } else {
      K v = t[i++].c - c * gt[j++].c;
      if (!is_zero(v)) out.push_back({gm, std::move(v)});
    }
  }
  t.resize(from - 1);
  for (auto& x : out) t.push_back(std::move(x));
}

template <class K>
const Poly<K>* find_reducer(const Monomial& m, const std::vector<Poly<K>>& G) {
  for (auto& g : G)
    if (!g.is_zero() && g.lm().divides(m)) return &g;
  return nullptr;
}

}  // namespace detail

// Fully reduced remainder of f modulo G (any reducer choice).
template <class K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& G) {
  auto& t = f.mutable_terms();
  std::size_t p = 0;
  while (p < t.size()) {
    const Poly<K>* g = detail::find_reducer(t[p].m, G);
    if (!g) {
      ++p;
      continue;
    }
    Monomial q = t[p].m / g->lm();
    K c = t[p].c / g->lc();
    detail::subtract_tail(t, p + 1, c, q, *g);
  }
  return f;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
  Monomial l = lcm(f.lm(), g.lm());
  Poly<K> a = f.times(l / f.lm(), K(K(1) / f.lc()));
  return Poly<K>::combine(a, K(K(-1) / g.lc()), l / g.lm(), g);
}

namespace detail {

template <class K>
std::vector<Poly<K>> reduce_basis(std::vector<Poly<K>> G) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm()) && (!(G[j].lm() == G[i].lm()) || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // lm(minimal[i]) is not divisible by the others' leading monomials, so
    // reduction only touches the tail.
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly<K>& a, const Poly<K>& b) { return compare(a.lm(), b.lm()) < 0; });
  return minimal;
}

}  // namespace detail

// Reduced Groebner basis.  Pairs are processed lowest lcm degree first; the
// coprime and chain criteria discard pairs known to reduce to zero.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  const int n = gens.front().nvars();
  std::vector<Poly<K>> G;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Poly<K> h) {
    h = h.monic();
    const std::size_t k = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
  };

  std::vector<Poly<K>> sorted = gens;
  for (auto& g : sorted)
    if (g.nvars() != n) throw std::invalid_argument("buchberger: variable count mismatch");
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly<K>& a, const Poly<K>& b) { return a.degree() < b.degree(); });
  for (auto& g : sorted) {
    if (g.is_zero()) continue;
    Poly<K> h = normal_form(g, G);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pending.empty()) {
    auto best = pending.begin();
    int best_deg = lcm(G[best->first].lm(), G[best->second].lm()).deg;
    for (auto it = std::next(best); it != pending.end(); ++it) {
      int d = lcm(G[it->first].lm(), G[it->second].lm()).deg;
      if (d < best_deg) best = it, best_deg = d;
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& a = G[i].lm();
    const Monomial& b = G[j].lm();
    if (coprime(a, b)) continue;
    const Monomial l = lcm(a, b);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || !G[k].lm().divides(l)) continue;
      auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;

    Poly<K> h = normal_form(s_polynomial(G[i], G[j]), G);
    if (!h.is_zero()) add(std::move(h));
  }
  return {n, detail::reduce_basis(std::move(G))};
}

// True iff every S-pair of G reduces to zero modulo G.
template <class K>
bool s_pairs_reduce_to_zero(const GroebnerBasis<K>& G) {
  for (std::size_t i = 0; i < G.gens.size(); ++i)
    for (std::size_t j = i + 1; j < G.gens.size(); ++j)
      if (!normal_form(s_polynomial(G.gens[i], G.gens[j]), G.gens).is_zero()) return false;
  return true;
}

template <class K>
struct Division {
  std::vector<Poly<K>> quotients;
  Poly<K> remainder;
};

class NotStable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// f = sum q_u f_u + r where q_u only involves T_max(u), ..., T_n (max(u) the
// last variable dividing in(f_u)) and no term of r lies in in(I).  Each
// monomial w of in(I) is written uniquely as w = u * v with u a minimal
// generator and max(u) <= min(v), which needs in(I) stable; otherwise throws
// NotStable.
template <class K>
Division<K> divide(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
  if (!f.is_homogeneous()) throw std::invalid_argument("divide: f is not homogeneous");
  for (auto& g : basis)
    if (g.is_zero() || !g.is_homogeneous()) throw std::invalid_argument("divide: basis must be nonzero homogeneous");

  const int n = f.nvars();
  Division<K> out;
  out.quotients.assign(basis.size(), Poly<K>(n));
  std::vector<std::vector<Term<K>>> qterms(basis.size());
  Poly<K> work = f;
  auto& t = work.mutable_terms();
  std::size_t p = 0;
  while (p < t.size()) {
    const Monomial w = t[p].m;
    std::optional<std::size_t> pick;
    bool in_initial = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Monomial& u = basis[k].lm();
      if (!u.divides(w)) continue;
      in_initial = true;
      if (u.max_var() <= (w / u).min_var()) {
        pick = k;
        break;
      }
    }
    if (!in_initial) {
      ++p;
      continue;
    }
    if (!pick) throw NotStable("divide: initial ideal is not stable");
    const Poly<K>& g = basis[*pick];
    Monomial q = w / g.lm();
    K c = t[p].c / g.lc();
    qterms[*pick].push_back({q, c});
    detail::subtract_tail(t, p + 1, c, q, g);
  }
  for (std::size_t k = 0; k < basis.size(); ++k)
    out.quotients[k] = Poly<K>::from_terms(n, std::move(qterms[k]));
  out.remainder = std::move(work);
  return out;
}

// dim (S/I)_d computed from the rank of the degree-d part of the ideal
// generated by gens.  Independent of any Groebner basis.
template <class K>
std::int64_t hilbert_by_rank(const std::vector<Poly<K>>& gens, int nvars, int d) {
  auto cols = monomials_of_degree(nvars, d);
  auto index = [&](const Monomial& m) {
    auto it = std::lower_bound(cols.begin(), cols.end(), m, MonomialGreater{});
    return static_cast<std::size_t>(it - cols.begin());
  };
  Matrix<K> rows;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_by_rank: generators must be homogeneous");
    if (g.degree() > d) continue;
    for (auto& mu : monomials_of_degree(nvars, d - g.degree())) {
      std::vector<K> row(cols.size(), K(0));
      for (auto& t : g.terms()) row[index(t.m * mu)] = t.c;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(cols.size()) - static_cast<std::int64_t>(rank(std::move(rows)));
}

}  // namespace spectra::gb
