#pragma once

// Finitely supported integer sequences Z -> Z and their difference calculus.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace spectra {

// A function Z -> Z with finite support, stored densely over its support.
//
// Canonical form: the first and last stored values are nonzero, and the zero
// sequence has no stored values (offset 0).  Every constructor canonicalizes,
// so structural equality is pointwise equality.
class FinSuppSeq {
 public:
  FinSuppSeq() = default;

  FinSuppSeq(std::int64_t offset, std::vector<std::int64_t> values)
      : offset_(offset), values_(std::move(values)) {
    canonicalize();
  }

  template <class Fn>
  static FinSuppSeq tabulate(std::int64_t lo, std::int64_t hi, Fn&& fn) {
    std::vector<std::int64_t> v;
    if (hi >= lo) v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) v.push_back(fn(i));
    return FinSuppSeq(lo, std::move(v));
  }

  std::int64_t operator()(std::int64_t i) const {
    if (i < offset_ || i >= offset_ + size()) return 0;
    return values_[static_cast<std::size_t>(i - offset_)];
  }

  bool is_zero() const { return values_.empty(); }

  // Smallest / largest index of the support.  Only meaningful if !is_zero().
  std::int64_t offset() const { return offset_; }
  std::int64_t first() const { return offset_; }
  std::int64_t last() const { return offset_ + size() - 1; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  std::span<const std::int64_t> values() const { return values_; }

  // Values on [lo, hi], zeros included.
  std::vector<std::int64_t> window(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t i = lo; i <= hi; ++i) out.push_back((*this)(i));
    return out;
  }

  friend bool operator==(const FinSuppSeq&, const FinSuppSeq&) = default;

 private:
  void canonicalize() {
    auto nz = [](std::int64_t v) { return v != 0; };
    auto b = std::find_if(values_.begin(), values_.end(), nz);
    if (b == values_.end()) {
      values_.clear();
      offset_ = 0;
      return;
    }
    auto e = std::find_if(values_.rbegin(), values_.rend(), nz).base();
    offset_ += b - values_.begin();
    values_ = std::vector<std::int64_t>(b, e);
  }

  std::int64_t offset_ = 0;
  std::vector<std::int64_t> values_;
};

// Values of a sequence that is not finitely supported, on a window [lo, hi].
struct SeqWindow {
  std::int64_t lo = 0;
  std::vector<std::int64_t> values;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }

  std::int64_t operator()(std::int64_t i) const {
    if (i < lo || i > hi()) throw std::out_of_range("SeqWindow: index outside window");
    return values[static_cast<std::size_t>(i - lo)];
  }
};

// (delta f)(i) = f(i) - f(i-1)
inline FinSuppSeq delta(const FinSuppSeq& f) {
  if (f.is_zero()) return {};
  return FinSuppSeq::tabulate(f.first(), f.last() + 1,
                              [&](std::int64_t i) { return f(i) - f(i - 1); });
}

inline FinSuppSeq delta2(const FinSuppSeq& f) { return delta(delta(f)); }

// f(i) = sum_{j <= i} g(j), evaluated on [lo, hi].
inline SeqWindow cumsum(const FinSuppSeq& g, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("cumsum: empty window");
  SeqWindow out{lo, {}};
  std::int64_t acc = 0;
  std::int64_t start = g.is_zero() ? lo : std::min(lo, g.first());
  for (std::int64_t i = start; i <= hi; ++i) {
    acc += g(i);
    if (i >= lo) out.values.push_back(acc);
  }
  return out;
}

// The unique f with delta2(f) = g and f(i) = 0 left of the support of g,
// evaluated on [lo, hi].
inline SeqWindow cumsum2(const FinSuppSeq& g, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("cumsum2: empty window");
  SeqWindow out{lo, {}};
  std::int64_t slope = 0, value = 0;
  std::int64_t start = g.is_zero() ? lo : std::min(lo, g.first());
  for (std::int64_t i = start; i <= hi; ++i) {
    slope += g(i);
    value += slope;
    if (i >= lo) out.values.push_back(value);
  }
  return out;
}

inline std::int64_t mass(const FinSuppSeq& f) {
  auto v = f.values();
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// shift(f, k)(i) = f(i - k)
inline FinSuppSeq shift(const FinSuppSeq& f, std::int64_t k) {
  if (f.is_zero()) return {};
  auto v = f.values();
  return FinSuppSeq(f.first() + k, {v.begin(), v.end()});
}

inline FinSuppSeq add(const FinSuppSeq& f, const FinSuppSeq& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  return FinSuppSeq::tabulate(std::min(f.first(), g.first()), std::max(f.last(), g.last()),
                              [&](std::int64_t i) { return f(i) + g(i); });
}

inline FinSuppSeq scale(const FinSuppSeq& f, std::int64_t k) {
  auto v = f.values();
  std::vector<std::int64_t> out(v.begin(), v.end());
  for (auto& x : out) x *= k;
  return FinSuppSeq(f.first(), std::move(out));
}

inline FinSuppSeq indicator(std::int64_t i) { return FinSuppSeq(i, {1}); }

// Reflects the positive part to negative indices: result(-i) = f(i) for
// i > 0, result(i) = f(i) for i >= 0.  Requires f to vanish on i < 0.
inline FinSuppSeq symmetrize(const FinSuppSeq& f) {
  if (f.is_zero()) return {};
  if (f.first() < 0) throw std::invalid_argument("symmetrize: sequence has support at negative indices");
  return FinSuppSeq::tabulate(-f.last(), f.last(),
                              [&](std::int64_t i) { return f(i < 0 ? -i : i); });
}

inline void to_json(nlohmann::json& j, const FinSuppSeq& f) {
  auto v = f.values();
  j = nlohmann::json{{"offset", f.offset()},
                     {"values", std::vector<std::int64_t>(v.begin(), v.end())}};
}

inline void from_json(const nlohmann::json& j, FinSuppSeq& f) {
  f = FinSuppSeq(j.at("offset").get<std::int64_t>(),
                 j.at("values").get<std::vector<std::int64_t>>());
}

}  // namespace spectra
