#pragma once

// Second differences of Hilbert functions of space curves lying on a quadric,
// on two planes, or on a double plane, and the bridge from such a profile to
// a spectrum tail.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spectra/seqcalc.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

// Divisor of type (a, b) on a smooth quadric.
struct QuadricDivisor {
  std::int64_t a = 1, b = 1;
  friend bool operator==(const QuadricDivisor&, const QuadricDivisor&) = default;
};

// Curve of degree d on a quadric cone.
struct ConeCurve {
  std::int64_t d = 1;
  friend bool operator==(const ConeCurve&, const ConeCurve&) = default;
};

// C0 u C1 in two planes, deg C0 = d0 <= d1 = deg C1, meeting in length r.
struct TwoPlanesNoLine {
  std::int64_t d0 = 1, d1 = 1, r = 1;
  friend bool operator==(const TwoPlanesNoLine&, const TwoPlanesNoLine&) = default;
};

// Curves in H0 u H1 containing the line L = H0 n H1.  With I(C0) = (T0, T1^r0 f0)
// and I(C1) = (T1, T0^r1 f1), deg f_i = d_i:
//   Xpp       the largest such curve X'' = (T1^(r0+1) f0, T0 T1, T0^(r1+1) f1)
//   XprimePlusLine  an extension 0 -> O_L(-mneg) -> O_X -> O_X' -> 0 of the smaller
//             curve X' = (T1^r0 f0, T0 T1, T0^r1 f1) by a line bundle on L.
struct Xpp {
  friend bool operator==(const Xpp&, const Xpp&) = default;
};
struct XprimePlusLine {
  std::int64_t mneg = 1;
  friend bool operator==(const XprimePlusLine&, const XprimePlusLine&) = default;
};

struct TwoPlanesWithLine {
  std::int64_t r0 = 0, d0 = 1, r1 = 0, d1 = 1;
  std::variant<Xpp, XprimePlusLine> variant;
  friend bool operator==(const TwoPlanesWithLine&, const TwoPlanesWithLine&) = default;
};

// Curve on the double plane 2H built from plane curves C0 (degree r0) inside
// C (degree r) and a zero-dimensional Gamma in C0 whose ideal has generic
// initial ideal (T0^sigma, T0^(sigma-1) T1^lambda_1, ..., T1^lambda_sigma).
struct DoublePlane {
  std::int64_t sigma = 1;
  std::vector<std::int64_t> lambdas{1};
  std::int64_t r0 = 2, r = 2;

  // d_i = sigma - i + lambda_i, i = 1..sigma
  std::vector<std::int64_t> d() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      out.push_back(sigma - static_cast<std::int64_t>(i + 1) + lambdas[i]);
    return out;
  }
  friend bool operator==(const DoublePlane&, const DoublePlane&) = default;
};

using CurveFamily = std::variant<QuadricDivisor, ConeCurve, TwoPlanesNoLine, TwoPlanesWithLine, DoublePlane>;

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidFamily(what);
}

inline FinSuppSeq quadric_profile(std::int64_t a, std::int64_t b) {
  return FinSuppSeq::tabulate(0, a, [&](std::int64_t i) -> std::int64_t {
    if (i == 0) return 1;
    if (i < a) return 2;
    return b - a + 1;
  });
}

// 1 at 0, 2 on [1, p], 1 on (p, q].
inline FinSuppSeq two_step_profile(std::int64_t p, std::int64_t q) {
  return FinSuppSeq::tabulate(0, q, [&](std::int64_t i) -> std::int64_t {
    if (i == 0) return 1;
    return i <= p ? 2 : 1;
  });
}

}  // namespace detail

// Throws InvalidFamily if the parameters are outside the family's domain.
inline void check_family(const CurveFamily& f) {
  using detail::require;
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuadricDivisor>) {
          require(x.a >= 1, "quadric: a must be >= 1");
          require(x.b >= x.a, "quadric: b must be >= a");
        } else if constexpr (std::is_same_v<T, ConeCurve>) {
          require(x.d >= 1, "cone: d must be >= 1");
        } else if constexpr (std::is_same_v<T, TwoPlanesNoLine>) {
          require(x.d0 >= 1 && x.d1 >= x.d0, "two planes: need 1 <= d0 <= d1");
          require(x.r >= 1 && x.r <= x.d0, "two planes: need 1 <= r <= d0");
        } else if constexpr (std::is_same_v<T, TwoPlanesWithLine>) {
          require(x.d0 >= 1 && x.d1 >= 1, "two planes with line: need d0, d1 >= 1");
          require(x.r0 >= 0 && x.r1 >= 0, "two planes with line: need r0, r1 >= 0");
          require(x.r0 + x.d0 <= x.r1 + x.d1, "two planes with line: need r0 + d0 <= r1 + d1");
          if (auto* v = std::get_if<XprimePlusLine>(&x.variant)) {
            require(x.r0 >= 1 && x.r1 >= 1, "X' + line: L must lie on X', need r0, r1 >= 1");
            require(v->mneg >= 1, "X' + line: need mneg >= 1 for H^1(I_X) = 0");
            require(v->mneg == x.r1 + x.d1 || v->mneg <= x.r0 + x.d0,
                    "X' + line: need mneg = r1 + d1 or mneg <= r0 + d0");
          }
        } else {
          require(x.sigma >= 1, "double plane: sigma must be >= 1");
          require(static_cast<std::int64_t>(x.lambdas.size()) == x.sigma,
                  "double plane: need exactly sigma lambdas");
          for (std::size_t i = 0; i < x.lambdas.size(); ++i)
            require(x.lambdas[i] >= 1 && (i == 0 || x.lambdas[i] > x.lambdas[i - 1]),
                    "double plane: lambdas must be positive and strictly increasing");
          require(x.r0 >= x.sigma, "double plane: need r0 >= sigma");
          require(x.r0 > x.d().back(), "double plane: need r0 > d_sigma, otherwise H^1(I_X) != 0");
          require(x.r >= x.r0, "double plane: need r >= r0");
        }
      },
      f);
}

inline std::int64_t degree(const CurveFamily& f) {
  check_family(f);
  return std::visit(
      [](const auto& x) -> std::int64_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuadricDivisor>) return x.a + x.b;
        else if constexpr (std::is_same_v<T, ConeCurve>) return x.d;
        else if constexpr (std::is_same_v<T, TwoPlanesNoLine>) return x.d0 + x.d1;
        else if constexpr (std::is_same_v<T, TwoPlanesWithLine>) {
          // X'' = C0 u C1 u L; X' drops one from each r_i and the line comes back.
          std::int64_t total = x.r0 + x.d0 + x.r1 + x.d1;
          return std::holds_alternative<Xpp>(x.variant) ? total + 1 : total;
        } else return x.r0 + x.r;
      },
      f);
}

inline FinSuppSeq delta2_h0(const CurveFamily& f) {
  check_family(f);
  return std::visit(
      [](const auto& x) -> FinSuppSeq {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuadricDivisor>) {
          return detail::quadric_profile(x.a, x.b);
        } else if constexpr (std::is_same_v<T, ConeCurve>) {
          if (x.d == 1) return indicator(0);
          const std::int64_t m = (x.d + 1) / 2;
          return x.d % 2 == 0 ? detail::quadric_profile(m, m) : detail::quadric_profile(m - 1, m);
        } else if constexpr (std::is_same_v<T, TwoPlanesNoLine>) {
          FinSuppSeq base = FinSuppSeq::tabulate(0, x.d1 - 1, [&](std::int64_t i) -> std::int64_t {
            if (i == 0) return 1;
            return i < x.d0 ? 2 : 1;
          });
          return add(base, indicator(x.r));
        } else if constexpr (std::is_same_v<T, TwoPlanesWithLine>) {
          if (std::holds_alternative<Xpp>(x.variant))
            return detail::two_step_profile(x.r0 + x.d0, x.r1 + x.d1);
          const auto& v = std::get<XprimePlusLine>(x.variant);
          return add(detail::two_step_profile(x.r0 - 1 + x.d0, x.r1 - 1 + x.d1), indicator(v.mneg));
        } else {
          const auto d = x.d();
          return FinSuppSeq::tabulate(0, x.r - 1, [&](std::int64_t i) -> std::int64_t {
            if (i == 0) return 1;
            if (i <= x.r0 - x.sigma) {
              std::int64_t hits = 0;
              for (auto dj : d) hits += dj == x.r0 - i;
              return 2 + hits;
            }
            return 1;
          });
        }
      },
      f);
}

// Second difference of h^0(O_X(i)) for an arithmetically Cohen-Macaulay curve
// with ideal resolution 0 -> sum S(-y) -> sum S(-g) -> I_X -> 0, read off a
// general plane section: h0_L(i) - sum_g h0_L(i-g) + sum_y h0_L(i-y), where
// h0_L(d) = max(d+1, 0).
inline FinSuppSeq delta2_from_acm(const std::vector<std::int64_t>& gens, const std::vector<std::int64_t>& syz) {
  if (syz.size() + 1 != gens.size())
    throw std::invalid_argument("delta2_from_acm: need one fewer syzygy than generators");
  std::int64_t sg = 0, sy = 0, top = 0;
  for (auto g : gens) sg += g, top = std::max(top, g);
  for (auto y : syz) sy += y, top = std::max(top, y);
  if (sg != sy) throw std::invalid_argument("delta2_from_acm: degrees of generators and syzygies must balance");
  auto hl = [](std::int64_t d) { return std::max<std::int64_t>(d + 1, 0); };
  return FinSuppSeq::tabulate(0, top, [&](std::int64_t i) {
    std::int64_t v = hl(i);
    for (auto g : gens) v -= hl(i - g);
    for (auto y : syz) v += hl(i - y);
    return v;
  });
}

// Union of curves X0, X1 meeting in length r, when the H^1 vanishing needed
// for additivity holds: f0 + f1 - [0] + [r].
inline FinSuppSeq glue(const FinSuppSeq& f0, const FinSuppSeq& f1, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("glue: r must be >= 1");
  return add(add(add(f0, f1), scale(indicator(0), -1)), indicator(r));
}

// If E(c) has a section vanishing on X (with H^1(I_X) = 0), the spectrum is
// s(i) = Delta^2 h^0_X(i + c - 1) for i >= 0.
inline Validation spectrum_from_curve(std::int64_t c, const FinSuppSeq& d2) {
  if (!d2.is_zero() && d2.first() < 0) throw std::invalid_argument("spectrum_from_curve: d2 must vanish on i < 0");
  if (d2.is_zero() || d2.last() < c - 1) return validate(FinSuppSeq{});
  return validate(FinSuppSeq::tabulate(0, d2.last() - (c - 1), [&](std::int64_t i) { return d2(i + c - 1); }));
}

// Variant where s(0) = 2 and s(i) = Delta^2 h^0_X'(i) for i >= 1.
inline Validation spectrum_from_xprime(const FinSuppSeq& d2) {
  if (!d2.is_zero() && d2.first() < 0) throw std::invalid_argument("spectrum_from_xprime: d2 must vanish on i < 0");
  const std::int64_t hi = d2.is_zero() ? 0 : std::max<std::int64_t>(d2.last(), 0);
  return validate(FinSuppSeq::tabulate(0, hi, [&](std::int64_t i) { return i == 0 ? 2 : d2(i); }));
}

enum class TailRoute { Twist1, Twist2, Xprime };

inline const char* route_name(TailRoute r) {
  switch (r) {
    case TailRoute::Twist1: return "c=1";
    case TailRoute::Twist2: return "c=2";
    case TailRoute::Xprime: return "xprime";
  }
  return "?";
}

struct TailMatch {
  CurveFamily family;
  TailRoute route;
};

namespace detail {

// Calls fn on every family instance of degree D: kinds in canonical order,
// parameters lexicographic within a kind.
template <class Fn>
void families_of_degree(std::int64_t D, Fn&& fn) {
  // quadric
  for (std::int64_t a = 1; 2 * a <= D; ++a) fn(CurveFamily{QuadricDivisor{a, D - a}});
  // cone
  if (D >= 1) fn(CurveFamily{ConeCurve{D}});
  // two planes, no line
  for (std::int64_t d0 = 1; 2 * d0 <= D; ++d0)
    for (std::int64_t r = 1; r <= d0; ++r) fn(CurveFamily{TwoPlanesNoLine{d0, D - d0, r}});
  // two planes with line, X''
  for (std::int64_t r0 = 0; r0 <= D; ++r0)
    for (std::int64_t d0 = 1; r0 + d0 <= D; ++d0)
      for (std::int64_t r1 = 0; r0 + d0 + r1 <= D; ++r1) {
        const std::int64_t d1 = D - 1 - r0 - d0 - r1;
        if (d1 >= 1 && r0 + d0 <= r1 + d1) fn(CurveFamily{TwoPlanesWithLine{r0, d0, r1, d1, Xpp{}}});
      }
  // two planes with line, X' + line
  for (std::int64_t r0 = 1; r0 <= D; ++r0)
    for (std::int64_t d0 = 1; r0 + d0 <= D; ++d0)
      for (std::int64_t r1 = 1; r0 + d0 + r1 <= D; ++r1) {
        const std::int64_t d1 = D - r0 - d0 - r1;
        if (d1 < 1 || r0 + d0 > r1 + d1) continue;
        for (std::int64_t mneg = 1; mneg <= r1 + d1; ++mneg)
          if (mneg == r1 + d1 || mneg <= r0 + d0)
            fn(CurveFamily{TwoPlanesWithLine{r0, d0, r1, d1, XprimePlusLine{mneg}}});
      }
  // double plane: r0 + r = D with r >= r0 > d_sigma >= sigma
  for (std::int64_t r0 = 2; 2 * r0 <= D; ++r0) {
    const std::int64_t r = D - r0;
    for (std::int64_t sigma = 1; sigma < r0; ++sigma) {
      // lambda_j < r0 - sigma + j, strictly increasing, lambda_1 >= 1
      std::vector<std::int64_t> lam(static_cast<std::size_t>(sigma));
      auto rec = [&](auto&& self, std::size_t j, std::int64_t lo) -> void {
        if (j == lam.size()) {
          fn(CurveFamily{DoublePlane{sigma, lam, r0, r}});
          return;
        }
        const std::int64_t hi = r0 - sigma + static_cast<std::int64_t>(j + 1) - 1;
        for (std::int64_t v = lo; v <= hi; ++v) {
          lam[j] = v;
          self(self, j + 1, v + 1);
        }
      };
      rec(rec, 0, 1);
    }
  }
}

}  // namespace detail

// Every family instance of degree <= max_c2 and route (c = 1, c = 2, or the
// X' variant with s(0) = 2) whose spectrum tail equals t.  Matching is only a
// necessary condition; an empty result excludes t.
inline std::vector<TailMatch> tail_search(const FinSuppSeq& t, std::int64_t max_c2) {
  if (t.is_zero() || t.first() < 0) throw std::invalid_argument("tail_search: t must be a tail starting at 0");
  if (t(0) != 1 && t(0) != 2) throw std::invalid_argument("tail_search: t(0) must be 1 or 2");

  // Degree of the curve each route needs: mass(d2) is pinned by t.
  const std::int64_t M = mass(t);
  struct Want {
    TailRoute route;
    std::int64_t degree;
  };
  std::vector<Want> wants;
  if (t(0) == 1) wants.push_back({TailRoute::Twist1, M});
  wants.push_back({TailRoute::Twist2, M + 1});
  if (t(0) == 2) wants.push_back({TailRoute::Xprime, M - 1});

  std::vector<std::int64_t> degrees;
  for (auto& w : wants)
    if (w.degree >= 1 && w.degree <= max_c2 &&
        std::find(degrees.begin(), degrees.end(), w.degree) == degrees.end())
      degrees.push_back(w.degree);
  std::sort(degrees.begin(), degrees.end());

  std::vector<TailMatch> hits;
  for (auto D : degrees) {
    detail::families_of_degree(D, [&](const CurveFamily& f) {
      const FinSuppSeq d2 = delta2_h0(f);
      for (auto& w : wants) {
        if (w.degree != D) continue;
        Validation v = w.route == TailRoute::Twist1   ? spectrum_from_curve(1, d2)
                       : w.route == TailRoute::Twist2 ? spectrum_from_curve(2, d2)
                                                      : spectrum_from_xprime(d2);
        if (v.ok() && v.value().tail() == t) hits.push_back({f, w.route});
      }
    });
  }
  // canonical order: family kind, then parameters (already lexicographic per kind)
  std::stable_sort(hits.begin(), hits.end(),
                   [](const TailMatch& a, const TailMatch& b) { return a.family.index() < b.family.index(); });
  return hits;
}

inline nlohmann::json family_json(const CurveFamily& f) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuadricDivisor>) return {{"kind", "quadric"}, {"a", x.a}, {"b", x.b}};
        else if constexpr (std::is_same_v<T, ConeCurve>) return {{"kind", "cone"}, {"d", x.d}};
        else if constexpr (std::is_same_v<T, TwoPlanesNoLine>)
          return {{"kind", "twoplanes"}, {"d0", x.d0}, {"d1", x.d1}, {"r", x.r}};
        else if constexpr (std::is_same_v<T, TwoPlanesWithLine>) {
          nlohmann::json j{{"kind", "twoplanes-line"}, {"r0", x.r0}, {"d0", x.d0}, {"r1", x.r1}, {"d1", x.d1}};
          if (auto* v = std::get_if<XprimePlusLine>(&x.variant)) {
            j["variant"] = "xprime+line";
            j["mneg"] = v->mneg;
          } else {
            j["variant"] = "xpp";
          }
          return j;
        } else
          return {{"kind", "doubleplane"}, {"sigma", x.sigma}, {"lambdas", x.lambdas}, {"r0", x.r0}, {"r", x.r}};
      },
      f);
}

}  // namespace spectra
