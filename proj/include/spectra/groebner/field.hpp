#pragma once

// Coefficient fields: exact rationals via GMP, and Z/p for a word-size prime.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace spectra::gb {

template <std::uint32_t P>
class Fp {
  static_assert(P > 2 && P < (1u << 31), "Fp: modulus must be an odd prime below 2^31");

 public:
  static constexpr std::uint32_t modulus = P;

  Fp() = default;
  Fp(std::int64_t v) {  // NOLINT: implicit from integers, like mpq_class
    std::int64_t r = v % static_cast<std::int64_t>(P);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t value() const { return v_; }

  Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // Fermat
    Fp base = *this, out = 1;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1) out *= base;
      base *= base;
    }
    return out;
  }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const { return Fp() - *this; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

 private:
  std::uint32_t v_ = 0;
};

using F32003 = Fp<32003>;

inline std::string coeff_string(const mpq_class& q) { return q.get_str(); }

template <std::uint32_t P>
std::string coeff_string(Fp<P> x) {
  return std::to_string(x.value());
}

template <class K>
bool is_zero(const K& x) {
  return x == K(0);
}

}  // namespace spectra::gb
