#pragma once

#include "superpbw/polytopes.hpp"
#include "superpbw/rootdata.hpp"

#include <map>

namespace superpbw {

/// A monomial in S(n-_0) (x) Lambda(n-_1): exponents over the positive roots
/// in canonical order, odd exponents 0/1. The normal form keeps the odd
/// generators first, in their fixed enumeration order.
using SuperMonomial = MultiExponent;

/// Finitely supported integer combination of monomials; zero coefficients are
/// never stored. Coefficients depend on the fixed odd-generator order and are
/// meaningful at support level only.
using SuperPolynomial = std::map<SuperMonomial, long long>;

inline SuperPolynomial monomial(const RootSystem& rs, int root_index, int power) {
  if (root_index < 0 || root_index >= rs.total_roots())
    throw std::invalid_argument("monomial: no such positive root");
  if (power < 0 || (rs.positive[root_index].odd && power > 1))
    throw std::invalid_argument("monomial: odd exponents are capped at 1");
  SuperMonomial m(rs.total_roots(), 0);
  m[root_index] = power;
  return {{m, 1}};
}

inline Vec weight_of(const RootSystem& rs, const SuperMonomial& m) {
  if (static_cast<int>(m.size()) != rs.total_roots())
    throw std::invalid_argument("weight_of: exponent size mismatch");
  Vec w = zero_vec(rs.dim);
  for (int j = 0; j < rs.total_roots(); ++j)
    if (m[j]) w = w - Rat(m[j]) * rs.positive[j].coords;
  return w;
}

/// The coefficient-free operator for a positive root alpha, extended as a
/// super-derivation: on a generator x_{-beta} it yields x_{-beta+alpha} when
/// beta - alpha is again a positive root and zero otherwise. Monomials whose
/// odd exponent would reach 2 are dropped.
inline SuperPolynomial apply_op(const RootSystem& rs, const Vec& alpha,
                                const SuperPolynomial& p) {
  int ai = rs.root_index(alpha);
  if (ai < 0) throw std::invalid_argument("apply_op: operator root must be a positive root");
  const bool alpha_odd = rs.positive[ai].odd;
  SuperPolynomial out;

  for (const auto& [mono, coeff] : p) {
    std::vector<int> odd_present;
    for (int j = rs.odd_begin(); j < rs.total_roots(); ++j)
      if (mono[j]) odd_present.push_back(j);

    for (int j = 0; j < rs.total_roots(); ++j) {
      if (!mono[j]) continue;
      Vec target = rs.positive[j].coords - alpha;
      int g = rs.root_index(target);
      if (g < 0) continue;

      const bool j_odd = rs.positive[j].odd;
      const bool g_odd = rs.positive[g].odd;
      long long mult = j_odd ? 1 : mono[j];

      // Crossing signs: the derivation passes the odd generators to the left
      // of the hit factor; the produced generator then moves back to its slot
      // in the fixed odd order. Even generators commute with everything.
      int crossings = 0;
      int pos_j = 0;  // rank of j within the odd block (odd j only)
      if (j_odd) {
        while (odd_present[pos_j] != j) ++pos_j;
        if (alpha_odd) crossings += pos_j;
      } else if (alpha_odd) {
        crossings += static_cast<int>(odd_present.size());
      }
      if (g_odd) {
        if (mono[g] && g != j) continue;  // odd square vanishes
        if (j_odd) {
          for (int o : odd_present)
            if (o != j && ((j < o && o < g) || (g < o && o < j))) ++crossings;
        } else {
          for (int o : odd_present)
            if (o > g) ++crossings;
        }
      }

      SuperMonomial m2(mono);
      --m2[j];
      ++m2[g];
      long long term = coeff * mult * ((crossings & 1) ? -1 : 1);
      auto it = out.find(m2);
      if (it == out.end()) {
        out.emplace(std::move(m2), term);
      } else {
        it->second += term;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

inline std::vector<SuperMonomial> support(const SuperPolynomial& p) {
  std::vector<SuperMonomial> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p) out.push_back(m);
  return out;
}

/// Support of (ops_k ... ops_1 applied in listed order) x_{-tau}^power.
inline std::vector<SuperMonomial> straightening_support(const RootSystem& rs, const Vec& tau,
                                                        int power,
                                                        const std::vector<Vec>& ops) {
  int ti = rs.root_index(tau);
  if (ti < 0) throw std::invalid_argument("straightening_support: tau must be a positive root");
  SuperPolynomial p = monomial(rs, ti, power);
  for (const auto& op : ops) p = apply_op(rs, op, p);
  return support(p);
}

inline std::string format_monomial(const RootSystem& rs, const SuperMonomial& m) {
  std::string out;
  for (int j = 0; j < rs.total_roots(); ++j) {
    if (!m[j]) continue;
    if (!out.empty()) out += " ";
    std::string name = format_root(rs, rs.positive[j].coords);
    bool composite = name.find_first_of("+-", 1) != std::string::npos;
    out += "x_{-" + (composite && name.front() != '(' ? "(" + name + ")" : name) + "}";
    if (m[j] > 1) out += "^" + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace superpbw
