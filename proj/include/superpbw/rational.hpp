#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superpbw {

/// Exact arbitrary-precision integer / rational scalars. Every computation in
/// this library is exact; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Rational vector in the ambient coordinates of a root system.
using Vec = std::vector<Rat>;

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::string format_rat(const Rat& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (!is_integer(r)) s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

/// Fixed "p/q" form used in JSON output (reduced, q > 0, always with slash).
inline std::string format_rat_pq(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline long long to_integer(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + format_rat(r));
  Int n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer out of 64-bit range: " + n.str());
  return n.convert_to<long long>();
}

/// Parses "p" or "p/q" with optional sign.
inline Rat parse_rat(const std::string& text) {
  auto parse_int = [&](const std::string& t) -> Int {
    if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("bad rational '" + text + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational '" + text + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad rational '" + text + "'");
    return Int(t);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rat(num, den);
}

// ---- small exact-vector helpers ----

inline Vec zero_vec(std::size_t dim) { return Vec(dim, Rat(0)); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline void check_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

inline Vec operator+(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline Vec operator*(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// Solves sum_j x_j * cols[j] = target exactly. Free coordinates are set to
/// zero; the candidate is re-verified so inconsistent systems yield nullopt.
inline std::optional<Vec> solve_in_span(const std::vector<Vec>& cols, const Vec& target) {
  const std::size_t rows = target.size();
  const std::size_t k = cols.size();
  for (const auto& c : cols) check_same_dim(c, target);

  std::vector<Vec> a(rows, zero_vec(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = target[i];
  }

  std::vector<std::size_t> pivot_row(k, rows);  // rows == "no pivot"
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    Rat inv = Rat(1) / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[col] = r;
    ++r;
  }

  Vec x = zero_vec(k);
  for (std::size_t col = 0; col < k; ++col)
    if (pivot_row[col] != rows) x[col] = a[pivot_row[col]][k];

  Vec check = zero_vec(rows);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < rows; ++i) check[i] += x[j] * cols[j][i];
  if (check != target) return std::nullopt;
  return x;
}

/// Solves the linear system rows[i] . x = rhs[i]; throws if no solution exists.
inline Vec solve_linear(const std::vector<Vec>& rows, const Vec& rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("system shape mismatch");
  if (rows.empty()) return Vec{};
  const std::size_t dim = rows.front().size();
  std::vector<Vec> cols(dim, zero_vec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_same_dim(rows[i], rows.front());
    for (std::size_t j = 0; j < dim; ++j) cols[j][i] = rows[i][j];
  }
  auto x = solve_in_span(cols, rhs);
  if (!x) throw std::domain_error("linear system has no solution");
  return x.value();
}

}  // namespace superpbw
