#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace superpbw {

/// A lattice point / monomial exponent: one non-negative integer per
/// coordinate, with coordinates flagged odd capped at 1.
using MultiExponent = std::vector<int>;

/// Sum-inequality over a set of coordinates (all coefficients are 1).
struct Inequality {
  std::vector<int> support;  // strictly increasing coordinate positions
  long long bound = 0;
};

/// An inequality-defined polytope over root-indexed coordinates. coord_roots
/// records which external root each coordinate refers to; enumeration and
/// membership never look at it.
struct PolytopeSpec {
  std::vector<int> coord_roots;
  std::vector<std::uint8_t> odd;  // 1 = coordinate capped at 1
  std::vector<Inequality> ineqs;

  std::size_t size() const { return odd.size(); }

  /// Finiteness: every coordinate must lie in some inequality or carry the
  /// 0/1 cap. Violation is a construction error.
  void validate() const {
    if (coord_roots.size() != odd.size())
      throw std::invalid_argument("polytope: coordinate bookkeeping out of sync");
    std::vector<char> bounded(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) bounded[i] = odd[i] ? 1 : 0;
    for (const auto& q : ineqs) {
      if (q.support.empty()) throw std::invalid_argument("polytope: empty inequality support");
      if (q.bound < 0) throw std::invalid_argument("polytope: negative bound");
      int prev = -1;
      for (int c : q.support) {
        if (c <= prev || c >= static_cast<int>(size()))
          throw std::invalid_argument("polytope: bad inequality support");
        prev = c;
        bounded[c] = 1;
      }
    }
    for (std::size_t i = 0; i < size(); ++i)
      if (!bounded[i])
        throw std::invalid_argument("polytope: coordinate " + std::to_string(i) +
                                    " is unbounded");
  }
};

inline bool contains(const PolytopeSpec& spec, const MultiExponent& s) {
  if (s.size() != spec.size()) throw std::invalid_argument("contains: coordinate count mismatch");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (spec.odd[i] && s[i] > 1) return false;
  }
  for (const auto& q : spec.ineqs) {
    long long sum = 0;
    for (int c : q.support) sum += s[c];
    if (sum > q.bound) return false;
  }
  return true;
}

/// Enumerates the integral points by recursive descent with running slacks,
/// pruning as soon as a partial sum exhausts a bound. Emission order is
/// lexicographic in the coordinate order.
template <class F>
inline void for_each_lattice_point(const PolytopeSpec& spec, F&& emit) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<std::vector<int>> ineqs_at(n);
  for (std::size_t i = 0; i < spec.ineqs.size(); ++i)
    for (int c : spec.ineqs[i].support) ineqs_at[c].push_back(static_cast<int>(i));
  std::vector<long long> slack(spec.ineqs.size());
  for (std::size_t i = 0; i < spec.ineqs.size(); ++i) slack[i] = spec.ineqs[i].bound;
  MultiExponent s(n, 0);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      emit(const_cast<const MultiExponent&>(s));
      return;
    }
    long long hi = spec.odd[k] ? 1 : LLONG_MAX;
    for (int qi : ineqs_at[k]) hi = std::min(hi, slack[qi]);
    for (long long v = 0;; ++v) {
      self(self, k + 1);
      if (v == hi) break;
      ++s[k];
      for (int qi : ineqs_at[k]) --slack[qi];
    }
    for (int qi : ineqs_at[k]) slack[qi] += s[k];
    s[k] = 0;
  };
  rec(rec, 0);
}

inline std::vector<MultiExponent> lattice_points(const PolytopeSpec& spec) {
  std::vector<MultiExponent> out;
  for_each_lattice_point(spec, [&](const MultiExponent& s) { out.push_back(s); });
  return out;
}

inline long long count_lattice_points(const PolytopeSpec& spec) {
  long long n = 0;
  for_each_lattice_point(spec, [&](const MultiExponent&) { ++n; });
  return n;
}

/// Raw vector sums {a+b}; odd coordinates may exceed 1 here. Intersecting
/// with the 0/1 box is a separate step (cap_filter).
inline std::vector<MultiExponent> minkowski_sum(const std::vector<MultiExponent>& a,
                                                const std::vector<MultiExponent>& b) {
  std::vector<MultiExponent> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.size() != y.size()) throw std::invalid_argument("minkowski_sum: incompatible indexing");
      MultiExponent z(x);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
      out.push_back(std::move(z));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<MultiExponent> cap_filter(std::vector<MultiExponent> pts,
                                             const std::vector<std::uint8_t>& odd) {
  std::vector<MultiExponent> out;
  for (auto& p : pts) {
    bool ok = p.size() == odd.size();
    for (std::size_t i = 0; ok && i < p.size(); ++i)
      if (odd[i] && p[i] > 1) ok = false;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

inline std::string format_point(const MultiExponent& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace superpbw
