#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "spectra/groebner/poly.hpp"

namespace spectra::gb {

// A monomial ideal, kept as its minimal generators in descending order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a.deg != b.deg ? a.deg < b.deg : compare(a, b) > 0;
    });
    for (auto& g : gens) {
      bool redundant = false;
      for (auto& h : gens_) redundant = redundant || h.divides(g);
      if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), MonomialGreater{});
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool contains(const Monomial& m) const {
    for (auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  // dim of the degree-d part of S / M
  std::int64_t hilbert(int d) const {
    std::int64_t count = 0;
    for (auto& m : monomials_of_degree(nvars_, d)) count += !contains(m);
    return count;
  }

  std::vector<std::int64_t> hilbert_range(int lo, int hi) const {
    std::vector<std::int64_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(hilbert(d));
    return out;
  }

  // T_j / T_i * u in M for every generator u, every i with u_i > 0 and j < i.
  bool is_strongly_stable() const {
    for (auto& u : gens_)
      for (int i = 1; i < nvars_; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < i; ++j) {
          Monomial v = u;
          --v.e[i];
          ++v.e[j];
          if (!contains(v)) return false;
        }
      }
    return true;
  }

  // The last variable is a nonzerodivisor on S / M iff no minimal generator uses it.
  bool last_variable_regular() const {
    for (auto& g : gens_)
      if (g[nvars_ - 1]) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& g : gens_) {
      std::vector<int> e(g.e.begin(), g.e.begin() + nvars_);
      arr.push_back(e);
    }
    return arr;
  }

 private:
  int nvars_ = 1;
  std::vector<Monomial> gens_;
};

}  // namespace spectra::gb
