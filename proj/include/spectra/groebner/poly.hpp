#pragma once

// Monomials and homogeneous-friendly sparse polynomials in T0, ..., Tn under
// degree reverse lexicographic order with T0 > T1 > ... > Tn.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/groebner/field.hpp"

namespace spectra::gb {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    int i = 0;
    for (int x : exps) {
      if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
      e[i++] = static_cast<std::uint16_t>(x);
      deg = static_cast<std::uint16_t>(deg + x);
    }
  }
  explicit Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      e[i] = static_cast<std::uint16_t>(exps[i]);
      deg = static_cast<std::uint16_t>(deg + exps[i]);
    }
  }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  int operator[](int i) const { return e[i]; }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return m;
  }

  // a / b, requires b | a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg = static_cast<std::uint16_t>(m.deg + m.e[i]);
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  // Largest / smallest index of a variable dividing the monomial; -1 for 1.
  int max_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e[i]) return i;
    return -1;
  }
  int min_var() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) return i;
    return kMaxVars;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(int nvars) const {
    if (deg == 0) return "1";
    std::string s;
    for (int i = 0; i < nvars; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += "T" + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
};

// degrevlex: higher degree first; in equal degree, the monomial with the
// smaller exponent at the last differing variable is larger.
inline int compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// All monomials of degree d in nvars variables, descending.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      cur.e[i] = static_cast<std::uint16_t>(left);
      cur.deg = static_cast<std::uint16_t>(d);
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur.e[i] = static_cast<std::uint16_t>(x);
      self(self, i + 1, left - x);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonomialGreater{});
  return out;
}

template <class K>
struct Term {
  Monomial m;
  K c;
};

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) { check_nvars(); }

  static Poly monomial(int nvars, const Monomial& m, K c = K(1)) {
    Poly p(nvars);
    if (!gb::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Poly constant(int nvars, K c) { return monomial(nvars, Monomial{}, c); }
  static Poly var(int nvars, int i) { return monomial(nvars, Monomial::var(i)); }

  // From unsorted terms; like monomials are combined.
  static Poly from_terms(int nvars, std::vector<Term<K>> terms) {
    std::map<Monomial, K, MonomialGreater> acc;
    for (auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(t.m, t.c);
      if (!fresh) it->second += t.c;
    }
    Poly p(nvars);
    for (auto& [m, c] : acc)
      if (!gb::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Monomial& lm() const { return terms_.front().m; }
  const K& lc() const { return terms_.front().c; }
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }

  bool is_homogeneous() const {
    for (auto& t : terms_)
      if (t.m.deg != terms_.front().m.deg) return false;
    return true;
  }

  K coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term<K>& t, const Monomial& x) { return compare(t.m, x) > 0; });
    if (it != terms_.end() && it->m == m) return it->c;
    return K(0);
  }

  Poly monic() const {
    if (terms_.empty()) return *this;
    Poly p = *this;
    K inv = K(1) / lc();
    for (auto& t : p.terms_) t.c *= inv;
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, K(1), Monomial{}, b); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, K(-1), Monomial{}, b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    same_ring(a, b);
    std::vector<Term<K>> raw;
    raw.reserve(a.size() * b.size());
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) raw.push_back({s.m * t.m, K(s.c * t.c)});
    return from_terms(a.nvars_, std::move(raw));
  }

  friend Poly operator*(const K& c, const Poly& a) {
    if (gb::is_zero(c)) return Poly(a.nvars_);
    Poly p = a;
    for (auto& t : p.terms_) t.c *= c;
    return p;
  }

  // m * c * a; monomial multiplication preserves the order.
  Poly times(const Monomial& m, const K& c) const {
    if (gb::is_zero(c)) return Poly(nvars_);
    Poly p = *this;
    for (auto& t : p.terms_) {
      t.m = t.m * m;
      t.c *= c;
    }
    return p;
  }

  // a + c * m * b, one merge pass.
  static Poly combine(const Poly& a, const K& c, const Monomial& m, const Poly& b) {
    same_ring(a, b);
    Poly out(a.nvars_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Monomial bm = b.terms_[j].m * m;
      int cmp = i == a.size() ? -1 : compare(a.terms_[i].m, bm);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({bm, K(c * b.terms_[j++].c)});
      } else {
        K v = a.terms_[i++].c + c * b.terms_[j++].c;
        if (!gb::is_zero(v)) out.terms_.push_back({bm, v});
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(t.c) << ")";
      if (t.m.deg) os << "*" << t.m.to_string(nvars_);
    }
    return os.str();
  }

  // Direct access for reduction loops that keep the order invariant.
  std::vector<Term<K>>& mutable_terms() { return terms_; }

 private:
  void check_nvars() const {
    if (nvars_ < 1 || nvars_ > kMaxVars) throw std::invalid_argument("Poly: unsupported number of variables");
  }
  static void same_ring(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  }

  int nvars_ = 1;
  std::vector<Term<K>> terms_;
};

// f(T gamma): each variable T_j is replaced by sum_i gamma[i][j] T_i.
template <class K>
Poly<K> substitute_linear(const Poly<K>& f, const std::vector<std::vector<K>>& gamma) {
  const int n = f.nvars();
  std::vector<Poly<K>> image;
  for (int j = 0; j < n; ++j) {
    std::vector<Term<K>> t;
    for (int i = 0; i < n; ++i) t.push_back({Monomial::var(i), gamma[i][j]});
    image.push_back(Poly<K>::from_terms(n, std::move(t)));
  }
  // powers[j][k] = image_j^k, built lazily
  std::vector<std::vector<Poly<K>>> powers(n, {Poly<K>::constant(n, K(1))});
  auto power = [&](int j, int k) -> const Poly<K>& {
    while (static_cast<int>(powers[j].size()) <= k) powers[j].push_back(powers[j].back() * image[j]);
    return powers[j][k];
  };
  Poly<K> out(n);
  for (auto& t : f.terms()) {
    Poly<K> prod = Poly<K>::constant(n, t.c);
    for (int j = 0; j < n; ++j)
      if (t.m[j]) prod = prod * power(j, t.m[j]);
    out = out + prod;
  }
  return out;
}

}  // namespace spectra::gb
