#pragma once

// Spectra of stable rank-2 bundles with c1 = 0 on P^3: the axioms, the
// cohomology table they determine, enumeration by c2, and the necessary
// condition relating the number of ones to the excess over two.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/seqcalc.hpp"

namespace spectra {

namespace detail {
struct SpectrumFactory;
}

// A spectrum, stored as its tail s(0), ..., s(m).  The values at negative
// indices are s(-i) = s(i).  Instances are only produced by validate() and
// enumerate(), so every Spectrum satisfies connectedness and the
// ones-propagate rule.
class Spectrum {
 public:
  const FinSuppSeq& tail() const { return tail_; }

  // s(i) for any i in Z.
  std::int64_t operator()(std::int64_t i) const { return tail_(i < 0 ? -i : i); }

  std::int64_t m() const { return tail_.last(); }

  std::int64_t c2() const {
    std::int64_t total = tail_(0);
    for (std::int64_t i = 1; i <= m(); ++i) total += 2 * tail_(i);
    return total;
  }

  std::vector<std::int64_t> values() const { return tail_.window(0, m()); }

  std::string to_string() const {
    std::ostringstream os;
    for (std::int64_t i = 0; i <= m(); ++i) os << (i ? "," : "") << tail_(i);
    return os.str();
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
  friend auto operator<=>(const Spectrum& a, const Spectrum& b) {
    return a.values() <=> b.values();
  }

 private:
  explicit Spectrum(FinSuppSeq tail) : tail_(std::move(tail)) {}
  friend struct detail::SpectrumFactory;

  FinSuppSeq tail_;
};

enum class Axiom {
  Connectedness,   // s(i) >= 1 for 0 <= i <= m
  OnesPropagate,   // s(i) = 1 for some i >= 1 forces s(j) = 1 for i <= j <= m
};

inline const char* axiom_name(Axiom a) {
  return a == Axiom::Connectedness ? "S2" : "S3";
}

struct AxiomViolation {
  Axiom axiom;
  std::int64_t index;
  std::string detail;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct Validation {
  std::optional<Spectrum> spectrum;
  std::vector<AxiomViolation> violations;

  bool ok() const { return spectrum.has_value(); }
  const Spectrum& value() const {
    if (!spectrum) throw std::logic_error("Validation: no spectrum, axioms violated");
    return *spectrum;
  }
};

namespace detail {
struct SpectrumFactory {
  static Spectrum make(FinSuppSeq tail) { return Spectrum(std::move(tail)); }
};
}  // namespace detail

// Symmetry is structural; this checks the other two axioms.  Throws
// std::invalid_argument on negative values or support at negative indices.
inline Validation validate(const FinSuppSeq& tail) {
  if (!tail.is_zero() && tail.first() < 0)
    throw std::invalid_argument("spectrum tail must be supported in i >= 0");
  for (auto v : tail.values())
    if (v < 0) throw std::invalid_argument("spectrum values must be nonnegative");

  Validation out;
  if (tail.is_zero()) {
    out.violations.push_back({Axiom::Connectedness, 0, "s(0) = 0"});
    return out;
  }
  const std::int64_t m = tail.last();
  for (std::int64_t i = 0; i <= m; ++i) {
    if (tail(i) == 0) {
      out.violations.push_back(
          {Axiom::Connectedness, i, "s(" + std::to_string(i) + ") = 0 inside the support"});
    }
  }
  for (std::int64_t i = 1; i <= m; ++i) {
    if (tail(i) != 1) continue;
    for (std::int64_t j = i + 1; j <= m; ++j) {
      if (tail(j) > 1) {
        out.violations.push_back({Axiom::OnesPropagate, i,
                                  "s(" + std::to_string(i) + ") = 1 but s(" + std::to_string(j) +
                                      ") = " + std::to_string(tail(j))});
        break;
      }
    }
  }
  if (out.violations.empty()) out.spectrum = detail::SpectrumFactory::make(tail);
  return out;
}

inline Validation validate(const std::vector<std::int64_t>& tail) {
  return validate(FinSuppSeq(0, tail));
}

inline std::int64_t c2(const Spectrum& s) { return s.c2(); }

// h^1(E(l)) for l <= -1: sum over the symmetric spectrum of s(i) * h^0(O_P1(i+l+1)).
inline std::int64_t h1_table(const Spectrum& s, std::int64_t l) {
  if (l > -1) throw std::domain_error("h1_table: defined only for l <= -1");
  std::int64_t total = 0;
  for (std::int64_t i = -s.m(); i <= s.m(); ++i) total += s(i) * std::max<std::int64_t>(i + l + 2, 0);
  return total;
}

// h^2(E(l)) for l >= -3: sum of s(i) * h^1(O_P1(i+l+1)).
inline std::int64_t h2_table(const Spectrum& s, std::int64_t l) {
  if (l < -3) throw std::domain_error("h2_table: defined only for l >= -3");
  std::int64_t total = 0;
  for (std::int64_t i = -s.m(); i <= s.m(); ++i) total += s(i) * std::max<std::int64_t>(-i - l - 2, 0);
  return total;
}

namespace detail {

// Appends all tails s(1..) with the given sum, each entry >= 1, in which a
// 1 is only ever followed by 1s.
inline void extend_tails(std::int64_t budget, bool seen_one, std::vector<std::int64_t>& cur,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (budget == 0) {
    out.push_back(cur);
    return;
  }
  const std::int64_t top = seen_one ? 1 : budget;
  for (std::int64_t v = 1; v <= top; ++v) {
    cur.push_back(v);
    extend_tails(budget - v, seen_one || v == 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All spectra with the given c2, ordered lexicographically by tail.
inline std::vector<Spectrum> enumerate(std::int64_t c2) {
  if (c2 < 1) throw std::invalid_argument("enumerate: c2 must be >= 1");
  std::vector<std::vector<std::int64_t>> tails;
  for (std::int64_t s0 = c2; s0 >= 1; s0 -= 2) {
    std::vector<std::int64_t> cur{s0};
    // s(0) is not subject to the ones rule; only indices >= 1 are.
    detail::extend_tails((c2 - s0) / 2, false, cur, tails);
  }
  std::sort(tails.begin(), tails.end());
  std::vector<Spectrum> out;
  out.reserve(tails.size());
  for (auto& t : tails) out.push_back(detail::SpectrumFactory::make(FinSuppSeq(0, std::move(t))));
  return out;
}

enum class ExcessVerdict { NotApplicable, ExceptionCase, Satisfied, Violated };

inline const char* verdict_name(ExcessVerdict v) {
  switch (v) {
    case ExcessVerdict::NotApplicable: return "NotApplicable";
    case ExcessVerdict::ExceptionCase: return "ExceptionCase";
    case ExcessVerdict::Satisfied: return "Satisfied";
    case ExcessVerdict::Violated: return "Violated";
  }
  return "?";
}

// Necessary condition for spectra starting (1, 2, 2, ...):
//   #{i >= 1 : s(i) = 1}  >=  sum_{i >= 1} max(s(i) - 2, 0) - 1,
// except for the family (1, 2, ..., 2, s(m)) with m >= 3 and s(m) >= 4,
// which is exempt.
inline ExcessVerdict excess_bound(const Spectrum& s) {
  if (s(0) != 1 || s(1) != 2 || s(2) != 2) return ExcessVerdict::NotApplicable;
  const std::int64_t m = s.m();
  if (m >= 3 && s(m) >= 4) {
    bool all_two = true;
    for (std::int64_t i = 1; i < m; ++i) all_two = all_two && s(i) == 2;
    if (all_two) return ExcessVerdict::ExceptionCase;
  }
  std::int64_t ones = 0, excess = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    ones += s(i) == 1;
    excess += std::max<std::int64_t>(s(i) - 2, 0);
  }
  return ones >= excess - 1 ? ExcessVerdict::Satisfied : ExcessVerdict::Violated;
}

struct ExcludedSpectrum {
  std::int64_t c2;
  Spectrum spectrum;
  ExcessVerdict verdict;
};

// Every spectrum with c2 <= c2_max that fails the excess bound.
inline std::vector<ExcludedSpectrum> counterexample_report(std::int64_t c2_max) {
  if (c2_max < 1) throw std::invalid_argument("counterexample_report: c2_max must be >= 1");
  std::vector<ExcludedSpectrum> rows;
  for (std::int64_t c = 1; c <= c2_max; ++c)
    for (auto& s : enumerate(c))
      if (auto v = excess_bound(s); v == ExcessVerdict::Violated) rows.push_back({c, s, v});
  return rows;
}

inline nlohmann::json axioms_json(const Validation& v) {
  if (v.ok()) return "ok";
  nlohmann::json arr = nlohmann::json::array();
  for (auto& x : v.violations)
    arr.push_back({{"axiom", axiom_name(x.axiom)}, {"index", x.index}, {"detail", x.detail}});
  return arr;
}

inline nlohmann::json spectrum_record(const Spectrum& s) {
  return {{"tail", s.values()},
          {"c2", s.c2()},
          {"m", s.m()},
          {"verdicts", {{"axioms", "ok"}, {"excess_bound", verdict_name(excess_bound(s))}}}};
}

}  // namespace spectra
