#pragma once

#include "superpbw/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace superpbw {

enum class Family { A, C, B0, D21, F4, G3 };

/// Identifies one supported basic classical Lie superalgebra.
///
/// A(m,n) = sl(m+1|n+1) with m > n >= 0 (ambient symbols d1..d{n+1}, e1..e{m+1});
/// C(n) = osp(2|2n-2) with n >= 2 (symbols e, d1..d{n-1});
/// B(0,n) = osp(1|2n) with n >= 1 (symbols d1..dn);
/// D(2,1;a) with rational a not in {0,-1}; F(4); G(3).
struct AlgebraId {
  Family family = Family::B0;
  int m = 0;  // A(m,n) only
  int n = 0;  // A(m,n), C(n), B(0,n)
  Rat alpha;  // D(2,1;alpha) only

  static AlgebraId A(int m, int n) {
    if (!(m > n && n >= 0)) throw std::invalid_argument("A(m,n) requires m > n >= 0");
    AlgebraId a;
    a.family = Family::A;
    a.m = m;
    a.n = n;
    return a;
  }
  static AlgebraId C(int n) {
    if (n < 2) throw std::invalid_argument("C(n) requires n >= 2");
    AlgebraId a;
    a.family = Family::C;
    a.n = n;
    return a;
  }
  static AlgebraId B0(int n) {
    if (n < 1) throw std::invalid_argument("B(0,n) requires n >= 1");
    AlgebraId a;
    a.family = Family::B0;
    a.n = n;
    return a;
  }
  static AlgebraId D21(const Rat& alpha) {
    if (alpha == 0 || alpha == -1)
      throw std::invalid_argument("D(2,1;alpha) requires alpha not in {0,-1}");
    AlgebraId a;
    a.family = Family::D21;
    a.alpha = alpha;
    return a;
  }
  static AlgebraId F4() {
    AlgebraId a;
    a.family = Family::F4;
    return a;
  }
  static AlgebraId G3() {
    AlgebraId a;
    a.family = Family::G3;
    return a;
  }

  bool type_two() const {
    return family == Family::B0 || family == Family::D21 || family == Family::F4 ||
           family == Family::G3;
  }

  std::string str() const {
    switch (family) {
      case Family::A:
        return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Family::C:
        return "C(" + std::to_string(n) + ")";
      case Family::B0:
        return "B(0," + std::to_string(n) + ")";
      case Family::D21:
        return "D(2,1;" + format_rat(alpha) + ")";
      case Family::F4:
        return "F(4)";
      case Family::G3:
        return "G(3)";
    }
    return "?";
  }

  /// Accepts "A(m,n)", "C(n)", "B(0,n)", "D(2,1;p/q)", "F(4)", "G(3)".
  static AlgebraId parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto args_of = [&](std::size_t prefix_len) {
      if (s.empty() || s.back() != ')') throw std::invalid_argument("bad algebra spec '" + spec + "'");
      return s.substr(prefix_len, s.size() - prefix_len - 1);
    };
    auto int_arg = [&](const std::string& t) {
      Rat r = parse_rat(t);
      if (!is_integer(r)) throw std::invalid_argument("bad algebra spec '" + spec + "'");
      return static_cast<int>(to_integer(r));
    };
    if (s == "F(4)") return F4();
    if (s == "G(3)") return G3();
    if (s.rfind("D(2,1;", 0) == 0) return D21(parse_rat(args_of(6)));
    if (s.rfind("B(0,", 0) == 0) return B0(int_arg(args_of(4)));
    if (s.rfind("A(", 0) == 0) {
      std::string a = args_of(2);
      auto comma = a.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad algebra spec '" + spec + "'");
      return A(int_arg(a.substr(0, comma)), int_arg(a.substr(comma + 1)));
    }
    if (s.rfind("C(", 0) == 0) return C(int_arg(args_of(2)));
    throw std::invalid_argument("unknown algebra spec '" + spec + "'");
  }
};

struct Root {
  Vec coords;
  bool odd = false;
};

/// One simple ideal of the even part, with its simple roots in node order and
/// the indices of its positive roots inside RootSystem::positive.
struct EvenFactor {
  std::string name;
  std::vector<Vec> simple;
  std::vector<int> roots;
};

/// Immutable root datum of one algebra; build with build_root_system().
///
/// Positive roots are stored in a fixed canonical order: the even roots factor
/// by factor (within a factor by height, ties broken lexicographically by
/// coordinates), followed by the odd roots in their fixed enumeration. For
/// type II algebras the factor containing gamma comes first.
struct RootSystem {
  AlgebraId algebra;
  int dim = 0;
  std::vector<std::string> basis;  // coordinate names: "d1", "e2", "d", ...
  std::vector<Vec> gram;
  std::vector<Root> positive;  // even roots first, then odd roots
  int n_even = 0;
  int n_odd = 0;
  std::vector<Root> simple;  // distinguished simple system
  int odd_node = -1;         // 0-based index of the unique odd simple root
  std::vector<EvenFactor> factors;
  Vec gamma;  // type II only; empty for type I
  Vec rho0, rho1, rho;
  std::vector<std::vector<long long>> simple_expansion;  // positive[i] over simple
  std::map<Vec, int> index_of;

  bool type_two() const { return algebra.type_two(); }
  int total_roots() const { return n_even + n_odd; }
  int odd_begin() const { return n_even; }
  int root_index(const Vec& coords) const {
    auto it = index_of.find(coords);
    return it == index_of.end() ? -1 : it->second;
  }
  int even_rank() const {
    int r = 0;
    for (const auto& f : factors) r += static_cast<int>(f.simple.size());
    return r;
  }
};

inline Rat pairing(const RootSystem& rs, const Vec& v, const Vec& w) {
  if (static_cast<int>(v.size()) != rs.dim || static_cast<int>(w.size()) != rs.dim)
    throw std::invalid_argument("pairing: vector dimension mismatch");
  Rat acc(0);
  for (int i = 0; i < rs.dim; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rs.dim; ++j) acc += v[i] * rs.gram[i][j] * w[j];
  }
  return acc;
}

/// lambda(h_alpha) = 2(lambda,alpha)/(alpha,alpha) for non-isotropic alpha.
inline Rat coroot_value(const RootSystem& rs, const Vec& lambda, const Vec& alpha) {
  Rat norm = pairing(rs, alpha, alpha);
  if (norm == 0)
    throw std::domain_error("coroot_value: isotropic root has no implemented coroot");
  return Rat(2) * pairing(rs, lambda, alpha) / norm;
}

namespace detail {

inline long long height_in(const std::vector<Vec>& simples, const Vec& root,
                           std::vector<long long>* expansion_out = nullptr) {
  auto sol = solve_in_span(simples, root);
  if (!sol) throw std::logic_error("root is not in the span of the given simple roots");
  long long h = 0;
  std::vector<long long> exp;
  for (const auto& c : *sol) {
    if (!is_integer(c) || c < 0)
      throw std::logic_error("root expansion has a non-integral or negative coefficient");
    long long ci = to_integer(c);
    h += ci;
    exp.push_back(ci);
  }
  if (expansion_out) *expansion_out = std::move(exp);
  return h;
}

inline int expected_odd_count(const AlgebraId& alg) {
  switch (alg.family) {
    case Family::A:
      return (alg.m + 1) * (alg.n + 1);
    case Family::C:
      return 2 * (alg.n - 1);
    case Family::B0:
      return alg.n;
    case Family::D21:
      return 4;
    case Family::F4:
      return 8;
    case Family::G3:
      return 7;
  }
  return -1;
}

}  // namespace detail

inline RootSystem build_root_system(const AlgebraId& alg) {
  RootSystem rs;
  rs.algebra = alg;

  auto unit = [&](int i) {
    Vec v = zero_vec(rs.dim);
    v[i] = 1;
    return v;
  };

  std::vector<std::vector<Vec>> factor_roots;  // even roots per factor, pre-sort
  std::vector<Vec> odd_roots;                  // fixed enumeration beta_1..beta_d

  switch (alg.family) {
    case Family::A: {
      const int N = alg.n + 1, M = alg.m + 1;
      rs.dim = N + M;
      rs.gram.assign(rs.dim, zero_vec(rs.dim));
      for (int i = 0; i < N; ++i) {
        rs.basis.push_back("d" + std::to_string(i + 1));
        rs.gram[i][i] = -1;
      }
      for (int i = 0; i < M; ++i) {
        rs.basis.push_back("e" + std::to_string(i + 1));
        rs.gram[N + i][N + i] = 1;
      }
      EvenFactor fd, fe;
      fd.name = "A" + std::to_string(alg.n);
      fe.name = "A" + std::to_string(alg.m);
      for (int i = 0; i + 1 < N; ++i) fd.simple.push_back(unit(i) - unit(i + 1));
      for (int i = 0; i + 1 < M; ++i) fe.simple.push_back(unit(N + i) - unit(N + i + 1));
      for (const auto& a : fd.simple) rs.simple.push_back({a, false});
      rs.odd_node = static_cast<int>(rs.simple.size());
      rs.simple.push_back({unit(N - 1) - unit(N), true});
      for (const auto& a : fe.simple) rs.simple.push_back({a, false});
      std::vector<Vec> dr, er;
      for (int r = 0; r < N; ++r)
        for (int t = r + 1; t < N; ++t) dr.push_back(unit(r) - unit(t));
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) er.push_back(unit(N + i) - unit(N + j));
      for (int r = 0; r < N; ++r)
        for (int i = 0; i < M; ++i) odd_roots.push_back(unit(r) - unit(N + i));
      if (alg.n >= 1) {
        rs.factors.push_back(fd);
        factor_roots.push_back(dr);
      }
      rs.factors.push_back(fe);
      factor_roots.push_back(er);
      break;
    }
    case Family::C: {
      const int N = alg.n - 1;
      rs.dim = 1 + N;
      rs.gram.assign(rs.dim, zero_vec(rs.dim));
      rs.basis.push_back("e");
      rs.gram[0][0] = 1;
      for (int i = 0; i < N; ++i) {
        rs.basis.push_back("d" + std::to_string(i + 1));
        rs.gram[1 + i][1 + i] = -1;
      }
      auto d = [&](int i) { return unit(1 + i); };  // 0-based
      EvenFactor fc;
      fc.name = "C" + std::to_string(N);
      for (int i = 0; i + 1 < N; ++i) fc.simple.push_back(d(i) - d(i + 1));
      fc.simple.push_back(Rat(2) * d(N - 1));
      rs.odd_node = 0;
      rs.simple.push_back({unit(0) - d(0), true});
      for (const auto& a : fc.simple) rs.simple.push_back({a, false});
      std::vector<Vec> cr;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          cr.push_back(d(i) - d(j));
          cr.push_back(d(i) + d(j));
        }
      for (int i = 0; i < N; ++i) cr.push_back(Rat(2) * d(i));
      for (int i = 0; i < N; ++i) odd_roots.push_back(unit(0) - d(i));
      for (int i = 0; i < N; ++i) odd_roots.push_back(unit(0) + d(i));
      rs.factors.push_back(fc);
      factor_roots.push_back(cr);
      break;
    }
    case Family::B0: {
      const int n = alg.n;
      rs.dim = n;
      rs.gram.assign(rs.dim, zero_vec(rs.dim));
      for (int i = 0; i < n; ++i) {
        rs.basis.push_back("d" + std::to_string(i + 1));
        rs.gram[i][i] = 1;
      }
      EvenFactor fc;
      fc.name = "C" + std::to_string(n);
      for (int i = 0; i + 1 < n; ++i) fc.simple.push_back(unit(i) - unit(i + 1));
      fc.simple.push_back(Rat(2) * unit(n - 1));
      for (int i = 0; i + 1 < n; ++i) rs.simple.push_back({unit(i) - unit(i + 1), false});
      rs.odd_node = n - 1;
      rs.simple.push_back({unit(n - 1), true});
      rs.gamma = Rat(2) * unit(n - 1);
      std::vector<Vec> cr;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          cr.push_back(unit(i) - unit(j));
          cr.push_back(unit(i) + unit(j));
        }
      for (int i = 0; i < n; ++i) cr.push_back(Rat(2) * unit(i));
      for (int i = 0; i < n; ++i) odd_roots.push_back(unit(i));
      rs.factors.push_back(fc);
      factor_roots.push_back(cr);
      break;
    }
    case Family::D21: {
      rs.dim = 3;
      rs.basis = {"e1", "e2", "e3"};
      rs.gram.assign(3, zero_vec(3));
      rs.gram[0][0] = -(Rat(1) + alg.alpha) / 2;
      rs.gram[1][1] = Rat(1, 2);
      rs.gram[2][2] = alg.alpha / 2;
      rs.odd_node = 0;
      rs.simple.push_back({unit(0) - unit(1) - unit(2), true});
      rs.simple.push_back({Rat(2) * unit(1), false});
      rs.simple.push_back({Rat(2) * unit(2), false});
      rs.gamma = Rat(2) * unit(0);
      for (int i = 0; i < 3; ++i) {
        EvenFactor f;
        f.name = "A1";
        f.simple.push_back(Rat(2) * unit(i));
        rs.factors.push_back(f);
        factor_roots.push_back({Rat(2) * unit(i)});
      }
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) odd_roots.push_back(unit(0) + Rat(s2) * unit(1) + Rat(s3) * unit(2));
      break;
    }
    case Family::F4: {
      rs.dim = 4;
      rs.basis = {"d", "e1", "e2", "e3"};
      rs.gram.assign(4, zero_vec(4));
      rs.gram[0][0] = -3;
      for (int i = 1; i < 4; ++i) rs.gram[i][i] = 1;
      auto e = [&](int i) { return unit(i); };  // e(0) = d
      rs.odd_node = 0;
      rs.simple.push_back({Rat(1, 2) * (e(0) - e(1) - e(2) - e(3)), true});
      rs.simple.push_back({e(3), false});
      rs.simple.push_back({e(2) - e(3), false});
      rs.simple.push_back({e(1) - e(2), false});
      rs.gamma = e(0);
      EvenFactor fa;
      fa.name = "A1";
      fa.simple.push_back(e(0));
      EvenFactor fb;
      fb.name = "B3";
      fb.simple = {e(3), e(2) - e(3), e(1) - e(2)};
      rs.factors = {fa, fb};
      std::vector<Vec> br;
      for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          br.push_back(e(i) - e(j));
          br.push_back(e(i) + e(j));
        }
      for (int i = 1; i < 4; ++i) br.push_back(e(i));
      factor_roots.push_back({e(0)});
      factor_roots.push_back(br);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1})
            odd_roots.push_back(Rat(1, 2) *
                                (e(0) + Rat(s1) * e(1) + Rat(s2) * e(2) + Rat(s3) * e(3)));
      break;
    }
    case Family::G3: {
      // Reduced basis (d, e1, e2) with e3 := -e1-e2 eliminated.
      rs.dim = 3;
      rs.basis = {"d", "e1", "e2"};
      rs.gram = {{Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(-2), Rat(1)}, {Rat(0), Rat(1), Rat(-2)}};
      auto d = unit(0);
      auto e1 = unit(1), e2 = unit(2);
      Vec e3 = -(e1 + e2);
      rs.odd_node = 0;
      rs.simple.push_back({d + e3, true});
      rs.simple.push_back({e1, false});
      rs.simple.push_back({e2 - e1, false});
      rs.gamma = Rat(2) * d;
      EvenFactor fa;
      fa.name = "A1";
      fa.simple.push_back(Rat(2) * d);
      EvenFactor fg;
      fg.name = "G2";
      fg.simple = {e1, e2 - e1};
      rs.factors = {fa, fg};
      factor_roots.push_back({Rat(2) * d});
      factor_roots.push_back({e1, e2 - e1, e2, e1 + e2, Rat(2) * e1 + e2, e1 + Rat(2) * e2});
      odd_roots = {d, d + e1, d - e1, d + e2, d - e2, d + e3, d - e3};
      break;
    }
  }

  // Canonical order within each factor: by height, then lexicographic coords.
  for (std::size_t f = 0; f < rs.factors.size(); ++f) {
    auto& roots = factor_roots[f];
    std::vector<std::pair<long long, Vec>> keyed;
    keyed.reserve(roots.size());
    for (const auto& r : roots) keyed.emplace_back(detail::height_in(rs.factors[f].simple, r), r);
    std::sort(keyed.begin(), keyed.end());
    roots.clear();
    for (auto& kv : keyed) roots.push_back(std::move(kv.second));
  }

  for (std::size_t f = 0; f < rs.factors.size(); ++f)
    for (const auto& r : factor_roots[f]) {
      rs.factors[f].roots.push_back(static_cast<int>(rs.positive.size()));
      rs.positive.push_back({r, false});
    }
  rs.n_even = static_cast<int>(rs.positive.size());
  for (const auto& r : odd_roots) rs.positive.push_back({r, true});
  rs.n_odd = static_cast<int>(odd_roots.size());

  for (int i = 0; i < rs.total_roots(); ++i) {
    if (is_zero(rs.positive[i].coords)) throw std::logic_error("zero vector listed as a root");
    if (!rs.index_of.emplace(rs.positive[i].coords, i).second)
      throw std::logic_error("duplicate positive root");
  }

  rs.rho0 = zero_vec(rs.dim);
  rs.rho1 = zero_vec(rs.dim);
  for (int i = 0; i < rs.n_even; ++i) rs.rho0 = rs.rho0 + rs.positive[i].coords;
  for (int i = rs.n_even; i < rs.total_roots(); ++i) rs.rho1 = rs.rho1 + rs.positive[i].coords;
  rs.rho0 = Rat(1, 2) * rs.rho0;
  rs.rho1 = Rat(1, 2) * rs.rho1;
  rs.rho = rs.rho0 - rs.rho1;

  // Every positive root must be a non-negative integral combination of the
  // distinguished simple roots.
  std::vector<Vec> simple_vecs;
  for (const auto& s : rs.simple) simple_vecs.push_back(s.coords);
  for (int i = 0; i < rs.total_roots(); ++i) {
    std::vector<long long> exp;
    detail::height_in(simple_vecs, rs.positive[i].coords, &exp);
    rs.simple_expansion.push_back(std::move(exp));
  }

  int odd_simples = 0;
  for (const auto& s : rs.simple) odd_simples += s.odd ? 1 : 0;
  if (odd_simples != 1 || !rs.simple[rs.odd_node].odd)
    throw std::logic_error("distinguished simple system must contain exactly one odd root");
  if (rs.n_odd != detail::expected_odd_count(alg))
    throw std::logic_error("positive odd root count disagrees with the classification table");
  if (rs.type_two()) {
    bool found = false;
    for (int idx : rs.factors.front().roots)
      if (rs.positive[idx].coords == rs.gamma) found = true;
    if (!found) throw std::logic_error("gamma must lie in the first even factor");
  }
  return rs;
}

// ---- root formatting and parsing in the e/d symbols ----

inline std::string format_root(const RootSystem& rs, const Vec& v) {
  if (static_cast<int>(v.size()) != rs.dim) throw std::invalid_argument("format_root: bad dimension");
  bool half = false;
  for (const auto& c : v) {
    auto den = boost::multiprecision::denominator(c);
    if (den == 2)
      half = true;
    else if (den != 1)
      throw std::invalid_argument("format_root: entries must be integers or half-integers");
  }
  Vec w = half ? Rat(2) * v : v;
  std::string s;
  for (int i = 0; i < rs.dim; ++i) {
    if (w[i] == 0) continue;
    long long c = to_integer(w[i]);
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0)
      s += "-";
    long long a = c > 0 ? c : -c;
    if (a != 1) s += std::to_string(a);
    s += rs.basis[i];
  }
  if (s.empty()) s = "0";
  return half ? "(" + s + ")/2" : s;
}

/// Parses a linear combination of basis symbols, e.g. "d1-d2", "2d1",
/// "(d-e1-e2-e3)/2", "e1+e2+e3". For G(3) the symbol e3 is accepted and
/// resolved as -e1-e2.
inline Vec parse_root(const RootSystem& rs, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Rat global(1);
  if (!s.empty() && s.front() == '(') {
    auto close = s.find(')');
    if (close == std::string::npos || close + 2 > s.size() || s[close + 1] != '/')
      throw std::invalid_argument("bad root expression '" + text + "'");
    global = Rat(1) / parse_rat(s.substr(close + 2));
    s = s.substr(1, close - 1);
  }
  Vec v = zero_vec(rs.dim);
  std::size_t pos = 0;
  auto fail = [&]() -> void { throw std::invalid_argument("bad root expression '" + text + "'"); };
  while (pos < s.size()) {
    Rat sign(1);
    if (s[pos] == '+') ++pos;
    else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= s.size()) fail();
    Rat coef(1);
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      std::string num = s.substr(start, pos - start);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t ds = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == ds) fail();
        coef = parse_rat(num + "/" + s.substr(ds, pos - ds));
      } else {
        coef = parse_rat(num);
      }
    }
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) fail();
    std::size_t ns = pos++;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(ns, pos - ns);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t ds = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ds) fail();
      coef /= parse_rat(s.substr(ds, pos - ds));
    }
    coef *= sign;
    auto it = std::find(rs.basis.begin(), rs.basis.end(), name);
    if (it != rs.basis.end()) {
      v[it - rs.basis.begin()] += coef;
    } else if (rs.algebra.family == Family::G3 && name == "e3") {
      v[1] -= coef;
      v[2] -= coef;
    } else {
      throw std::invalid_argument("unknown symbol '" + name + "' in root expression");
    }
  }
  return global * v;
}

}  // namespace superpbw
