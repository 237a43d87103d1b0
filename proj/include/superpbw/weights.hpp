#pragma once

#include "superpbw/rootdata.hpp"

#include <optional>

namespace superpbw {

/// Labels on the even-factor fundamental weights, concatenated in factor
/// order, plus the free rational charge on the odd node for type I algebras.
struct DynkinLabels {
  std::vector<Rat> even;
  std::optional<Rat> charge;
};

namespace detail {

// For A(m,n) the ambient space is one dimension larger than the rank; the
// direction below is orthogonal to every root, so weights are pinned by an
// extra gauge equation against it.
inline Vec a_gauge_direction(const RootSystem& rs) {
  Vec v = zero_vec(rs.dim);
  const int N = rs.algebra.n + 1;
  for (int i = 0; i < N; ++i) v[i] = -1;
  for (int i = N; i < rs.dim; ++i) v[i] = 1;
  return v;
}

inline Vec pairing_row(const RootSystem& rs, const Vec& u) {
  Vec row = zero_vec(rs.dim);
  for (int k = 0; k < rs.dim; ++k)
    for (int j = 0; j < rs.dim; ++j) row[k] += rs.gram[k][j] * u[j];
  return row;
}

}  // namespace detail

/// Solves for the ambient weight with the given even Dynkin labels (and, for
/// type I, the given charge (lambda, alpha_s) on the odd node).
inline Vec to_ambient(const RootSystem& rs, const DynkinLabels& labels) {
  if (static_cast<int>(labels.even.size()) != rs.even_rank())
    throw std::invalid_argument("to_ambient: expected " + std::to_string(rs.even_rank()) +
                                " even labels, got " + std::to_string(labels.even.size()));
  std::vector<Vec> rows;
  Vec rhs;
  std::size_t k = 0;
  for (const auto& f : rs.factors)
    for (const auto& g : f.simple) {
      Rat norm = pairing(rs, g, g);
      rows.push_back((Rat(2) / norm) * detail::pairing_row(rs, g));
      rhs.push_back(labels.even[k++]);
    }
  if (!rs.type_two()) {
    rows.push_back(detail::pairing_row(rs, rs.simple[rs.odd_node].coords));
    rhs.push_back(labels.charge.value_or(Rat(0)));
  } else if (labels.charge) {
    throw std::invalid_argument("to_ambient: charge is only meaningful for type I algebras");
  }
  if (rs.algebra.family == Family::A) {
    rows.push_back(detail::pairing_row(rs, detail::a_gauge_direction(rs)));
    rhs.push_back(0);
  }
  Vec lambda = solve_linear(rows, rhs);

  std::size_t r = 0;
  for (const auto& f : rs.factors)
    for (const auto& g : f.simple)
      if (coroot_value(rs, lambda, g) != labels.even[r++])
        throw std::logic_error("to_ambient: label round-trip failed");
  return lambda;
}

/// Even Dynkin labels of a weight, in factor order.
inline std::vector<Rat> even_labels(const RootSystem& rs, const Vec& lambda) {
  std::vector<Rat> out;
  for (const auto& f : rs.factors)
    for (const auto& g : f.simple) out.push_back(coroot_value(rs, lambda, g));
  return out;
}

/// Type I only: the pairing of the weight with the odd simple root.
inline Rat charge_of(const RootSystem& rs, const Vec& lambda) {
  if (rs.type_two()) throw std::invalid_argument("charge_of: type I algebras only");
  return pairing(rs, lambda, rs.simple[rs.odd_node].coords);
}

inline Vec ambient_weight(const RootSystem& rs, const std::vector<long long>& labels,
                          std::optional<Rat> charge = std::nullopt) {
  DynkinLabels dl;
  for (long long v : labels) dl.even.emplace_back(v);
  dl.charge = charge;
  return to_ambient(rs, dl);
}

inline Vec fundamental_weight(const RootSystem& rs, int node) {
  DynkinLabels dl;
  dl.even.assign(rs.even_rank(), Rat(0));
  dl.even.at(node) = 1;
  return to_ambient(rs, dl);
}

inline bool is_dominant_integral(const RootSystem& rs, const Vec& lambda) {
  for (const auto& v : even_labels(rs, lambda))
    if (!is_integer(v) || v < 0) return false;
  return true;
}

struct TypicalityWitness {
  bool typical = false;
  int vanishing_odd = -1;  // index into positive (valid when !typical)
};

inline TypicalityWitness check_typical(const RootSystem& rs, const Vec& lambda) {
  Vec shifted = lambda + rs.rho;
  for (int i = rs.odd_begin(); i < rs.total_roots(); ++i)
    if (pairing(rs, shifted, rs.positive[i].coords) == 0) return {false, i};
  return {true, -1};
}

inline bool is_typical(const RootSystem& rs, const Vec& lambda) {
  return check_typical(rs, lambda).typical;
}

/// Value of the factorized Weyl-type dimension expression
/// 2^{#odd} * prod_{even alpha > 0} (lambda+rho, alpha) / (rho0, alpha),
/// as an exact rational. Callers wanting the representation dimension should
/// use dim_typical(), which also enforces the preconditions.
inline Rat dim_formula(const RootSystem& rs, const Vec& lambda) {
  if (rs.n_odd >= 62) throw std::overflow_error("algebra too large for 64-bit counts");
  Rat acc(1LL << rs.n_odd);
  Vec shifted = lambda + rs.rho;
  for (int i = 0; i < rs.n_even; ++i) {
    const Vec& a = rs.positive[i].coords;
    acc *= pairing(rs, shifted, a) / pairing(rs, rs.rho0, a);
  }
  return acc;
}

inline long long dim_typical(const RootSystem& rs, const Vec& lambda) {
  if (!is_dominant_integral(rs, lambda))
    throw std::domain_error("dim_typical: weight is not dominant integral");
  auto t = check_typical(rs, lambda);
  if (!t.typical)
    throw std::domain_error("dim_typical: weight is atypical, (lambda+rho, " +
                            format_root(rs, rs.positive[t.vanishing_odd].coords) + ") = 0");
  Rat v = dim_formula(rs, lambda);
  if (!is_integer(v) || v <= 0)
    throw std::logic_error("dim_typical: formula value " + format_rat(v) +
                           " is not a positive integer (inconsistent root data)");
  return to_integer(v);
}

/// Weight of one even factor, given by labels on that factor's nodes.
struct FactorWeight {
  int factor = 0;
  std::vector<Rat> labels;
};

/// Classical Weyl dimension of the simple even factor at the given highest
/// weight: prod over the factor's positive roots of (w+rho_f, a)/(rho_f, a).
inline long long weyl_dim(const RootSystem& rs, const FactorWeight& fw) {
  if (fw.factor < 0 || fw.factor >= static_cast<int>(rs.factors.size()))
    throw std::invalid_argument("weyl_dim: no such factor");
  const auto& f = rs.factors[fw.factor];
  if (fw.labels.size() != f.simple.size())
    throw std::invalid_argument("weyl_dim: label count mismatch");
  for (const auto& l : fw.labels)
    if (!is_integer(l) || l < 0)
      throw std::domain_error("weyl_dim: labels must be non-negative integers");

  DynkinLabels dl;
  dl.even.assign(rs.even_rank(), Rat(0));
  int base = 0;
  for (int i = 0; i < fw.factor; ++i) base += static_cast<int>(rs.factors[i].simple.size());
  for (std::size_t j = 0; j < fw.labels.size(); ++j) dl.even[base + j] = fw.labels[j];
  Vec w = to_ambient(rs, dl);

  Vec rho_f = zero_vec(rs.dim);
  for (int idx : f.roots) rho_f = rho_f + rs.positive[idx].coords;
  rho_f = Rat(1, 2) * rho_f;

  Rat acc(1);
  Vec shifted = w + rho_f;
  for (int idx : f.roots) {
    const Vec& a = rs.positive[idx].coords;
    acc *= pairing(rs, shifted, a) / pairing(rs, rho_f, a);
  }
  if (!is_integer(acc) || acc <= 0)
    throw std::logic_error("weyl_dim: non-integral value (inconsistent root data)");
  return to_integer(acc);
}

/// Splits the labels of lambda along the even factors.
inline std::vector<std::vector<Rat>> factor_labels(const RootSystem& rs, const Vec& lambda) {
  std::vector<std::vector<Rat>> out;
  for (const auto& f : rs.factors) {
    std::vector<Rat> l;
    for (const auto& g : f.simple) l.push_back(coroot_value(rs, lambda, g));
    out.push_back(std::move(l));
  }
  return out;
}

/// Type II: the dimension expression factors as (gamma-factor part) times the
/// classical Weyl dimensions of the remaining factors.
inline bool factorization_check(const RootSystem& rs, const Vec& lambda) {
  if (!rs.type_two()) throw std::invalid_argument("factorization_check: type II algebras only");
  if (!is_typical(rs, lambda)) throw std::domain_error("factorization_check: weight is atypical");
  auto labels = factor_labels(rs, lambda);
  DynkinLabels first_only;
  std::size_t k = 0;
  for (std::size_t f = 0; f < rs.factors.size(); ++f)
    for (const auto& l : labels[f]) first_only.even.push_back(f == 0 ? l : Rat(0)), ++k;
  Rat lhs = dim_formula(rs, lambda);
  Rat rhs = dim_formula(rs, to_ambient(rs, first_only));
  for (std::size_t f = 1; f < rs.factors.size(); ++f)
    rhs *= weyl_dim(rs, {static_cast<int>(f), labels[f]});
  return lhs == rhs;
}

/// Typical weights whose gamma-factor label is at least #odd - 1; only this
/// class is supported by the closed exceptional polytopes.
inline bool in_desk_class(const RootSystem& rs, const Vec& lambda) {
  auto fam = rs.algebra.family;
  if (fam != Family::D21 && fam != Family::F4 && fam != Family::G3)
    throw std::invalid_argument("in_desk_class: defined for D(2,1;a), F(4), G(3) only");
  if (!is_typical(rs, lambda)) return false;
  Rat m1 = coroot_value(rs, lambda, rs.gamma);
  return is_integer(m1) && m1 >= rs.n_odd - 1;
}

/// Type I: smallest positive integer charge making the weight typical. Each
/// positive odd root excludes at most one charge, so the scan terminates.
inline Rat find_typical_charge(const RootSystem& rs, const std::vector<long long>& labels) {
  if (rs.type_two()) throw std::invalid_argument("find_typical_charge: type I algebras only");
  for (long long c = 1; c <= rs.n_odd + 1; ++c) {
    Vec lambda = ambient_weight(rs, labels, Rat(c));
    if (is_typical(rs, lambda)) return Rat(c);
  }
  throw std::logic_error("find_typical_charge: no typical charge found (unreachable)");
}

}  // namespace superpbw
