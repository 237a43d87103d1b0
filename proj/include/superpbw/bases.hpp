#pragma once

#include "superpbw/dyckpaths.hpp"
#include "superpbw/weights.hpp"

#include <optional>

namespace superpbw {

/// B(0,n): the polytope cut out by all orthosymplectic Dyck path inequalities
/// plus the odd 0/1 caps.
inline PolytopeSpec osp_polytope(const RootSystem& rs, const std::vector<long long>& labels) {
  if (rs.algebra.family != Family::B0) throw std::invalid_argument("osp_polytope: B(0,n) only");
  if (static_cast<int>(labels.size()) != rs.algebra.n)
    throw std::invalid_argument("osp_polytope: expected " + std::to_string(rs.algebra.n) +
                                " labels");
  return compile_polytope(rs, dyck_paths_osp(rs), labels);
}

/// Type I (A(m,n) and C(n)): the product of the classical factor polytopes
/// with a free 0/1 cube on the odd coordinates. No inequality couples even
/// and odd coordinates.
inline PolytopeSpec type_one_polytope(const RootSystem& rs, const std::vector<long long>& labels) {
  if (rs.type_two()) throw std::invalid_argument("type_one_polytope: type I algebras only");
  if (static_cast<int>(labels.size()) != rs.even_rank())
    throw std::invalid_argument("type_one_polytope: expected " + std::to_string(rs.even_rank()) +
                                " labels");
  PolytopeSpec spec = full_coordinate_spec(rs);
  std::size_t base = 0;
  for (std::size_t f = 0; f < rs.factors.size(); ++f) {
    const auto& fac = rs.factors[f];
    std::vector<long long> fl(labels.begin() + base, labels.begin() + base + fac.simple.size());
    base += fac.simple.size();
    auto paths = fac.name[0] == 'C' ? dyck_paths_C(rs, static_cast<int>(f))
                                    : dyck_paths_A(rs, static_cast<int>(f));
    add_path_inequalities(spec, paths, fl);
  }
  spec.validate();
  return spec;
}

struct ExceptionalPolytope {
  PolytopeSpec spec;               // coordinates: gamma, then the odd roots (D(2,1;a): all roots)
  long long even_factor_dim = 1;   // F(4)/G(3): Weyl dimension of the second factor
};

/// D(2,1;a), F(4), G(3) for weights in the desk class. D(2,1;a) yields the
/// full polytope; for F(4) and G(3) the even factor enters only through its
/// cardinality, so the spec covers gamma and the odd roots and the remaining
/// factor contributes a multiplicative count.
inline ExceptionalPolytope exceptional_polytope(const RootSystem& rs,
                                                const std::vector<long long>& labels) {
  auto fam = rs.algebra.family;
  if (fam != Family::D21 && fam != Family::F4 && fam != Family::G3)
    throw std::invalid_argument("exceptional_polytope: D(2,1;a), F(4), G(3) only");
  Vec lambda = ambient_weight(rs, labels);
  if (!in_desk_class(rs, lambda))
    throw std::invalid_argument(
        "exceptional_polytope: weight is outside the desk class (need typicality and a "
        "gamma-factor label >= " +
        std::to_string(rs.n_odd - 1) + ")");

  int gamma_idx = rs.root_index(rs.gamma);
  ExceptionalPolytope out;
  if (fam == Family::D21) {
    out.spec = full_coordinate_spec(rs);
    Inequality main;
    main.support.push_back(gamma_idx);
    for (int i = rs.odd_begin(); i < rs.total_roots(); ++i) main.support.push_back(i);
    std::sort(main.support.begin(), main.support.end());
    main.bound = labels[0];
    out.spec.ineqs.push_back(std::move(main));
    for (int f = 1; f <= 2; ++f) {
      int idx = rs.factors[f].roots.front();
      out.spec.ineqs.push_back({{idx}, labels[f]});
    }
  } else {
    PolytopeSpec spec;
    spec.coord_roots.push_back(gamma_idx);
    spec.odd.push_back(0);
    for (int i = rs.odd_begin(); i < rs.total_roots(); ++i) {
      spec.coord_roots.push_back(i);
      spec.odd.push_back(1);
    }
    Inequality main;
    for (int c = 0; c < static_cast<int>(spec.size()); ++c) main.support.push_back(c);
    main.bound = labels[0];
    spec.ineqs.push_back(std::move(main));
    out.spec = std::move(spec);
    std::vector<Rat> rest(labels.begin() + 1, labels.end());
    out.even_factor_dim = weyl_dim(rs, {1, rest});
  }
  out.spec.validate();
  return out;
}

struct CombCount {
  long long value = 0;
  bool closed_form = true;  // false: precondition m >= l-1 failed, value enumerated instead
};

namespace detail {
inline long long comb_enumerate(long long m, int ell) {
  // |{(a_0, a) in Z_+ x {0,1}^ell : a_0 + sum a_i <= m}| by summing over the
  // number of odd slots used.
  long long total = 0;
  long long binom = 1;  // C(ell, j)
  for (int j = 0; j <= ell && j <= m; ++j) {
    total += binom * (m - j + 1);
    binom = binom * (ell - j) / (j + 1);
  }
  return total;
}
}  // namespace detail

/// Cardinality of {(a_0,...,a_ell) in Z_+ x {0,1}^ell : sum <= m}. The closed
/// form 2^{ell-1} (2m - ell + 2) requires m >= ell-1; below that the count is
/// enumerated and flagged.
inline CombCount comb_count(long long m, int ell) {
  if (ell < 1 || ell > 62 || m < 0) throw std::invalid_argument("comb_count: need ell >= 1, m >= 0");
  if (m >= ell - 1) return {(1LL << (ell - 1)) * (2 * m - ell + 2), true};
  return {detail::comb_enumerate(m, ell), false};
}

struct SplitResult {
  MultiExponent part;       // in S(w_i)
  MultiExponent remainder;  // in S(lambda - w_i)
};

/// Fundamental split for B(0,n): for s in S(lambda) and i the largest index
/// with a non-zero label, part is the ord1-lexicographically largest point of
/// S(w_i) dominated by s whose remainder s - part lies in S(lambda - w_i).
///
/// Plain dominated-point maximization is not sound: at n=3, lambda = w2+w3,
/// the point with s_{d2-d3} = s_{2d1} = s_{delta_1} = 1 has lex-max dominated
/// part e_{2d1}, whose remainder pairs delta_1 with d2-d3 on one case-(b)
/// path and escapes S(w2); reading the order backwards instead breaks at
/// n=2, lambda = w1+w2, s = e_{2d2} + e_{delta_1}. Scanning the dominated
/// points in decreasing order for the first valid remainder keeps the
/// selection deterministic and agrees with the plain maximum whenever that
/// maximum is itself valid.
class MinkowskiSplitter {
 public:
  MinkowskiSplitter(const RootSystem& rs, std::vector<long long> labels)
      : rs_(&rs), labels_(std::move(labels)) {
    if (rs.algebra.family != Family::B0)
      throw std::invalid_argument("minkowski_split: B(0,n) only");
    split_index_ = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] > 0) split_index_ = static_cast<int>(i) + 1;
    if (split_index_ == 0) throw std::invalid_argument("minkowski_split: lambda must be non-zero");
    spec_full_ = osp_polytope(rs, labels_);
    std::vector<long long> unit(labels_.size(), 0);
    unit[split_index_ - 1] = 1;
    fundamental_points_ = lattice_points(osp_polytope(rs, unit));
    auto order = ord1_descending(rs);
    std::sort(fundamental_points_.begin(), fundamental_points_.end(),
              [&](const MultiExponent& a, const MultiExponent& b) {
                for (int idx : order)
                  if (a[idx] != b[idx]) return a[idx] > b[idx];
                return false;
              });
    auto rem_labels = labels_;
    rem_labels[split_index_ - 1] -= 1;
    spec_rem_ = osp_polytope(rs, rem_labels);
  }

  int split_index() const { return split_index_; }

  SplitResult split(const MultiExponent& s) const {
    if (!contains(spec_full_, s))
      throw std::invalid_argument("minkowski_split: point is outside S(lambda)");
    for (const auto& t : fundamental_points_) {
      bool dominated = true;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (t[k] > s[k]) {
          dominated = false;
          break;
        }
      if (!dominated) continue;
      MultiExponent rem(s);
      for (std::size_t k = 0; k < s.size(); ++k) rem[k] -= t[k];
      if (contains(spec_rem_, rem)) return {t, rem};
    }
    // would falsify S(lambda) <= S(lambda - w_i) + S(w_i)
    throw std::logic_error("minkowski_split: no valid split at " + format_point(s));
  }

 private:
  const RootSystem* rs_;
  std::vector<long long> labels_;
  int split_index_ = 0;
  PolytopeSpec spec_full_, spec_rem_;
  std::vector<MultiExponent> fundamental_points_;
};

inline SplitResult minkowski_split(const RootSystem& rs, const std::vector<long long>& labels,
                                   const MultiExponent& s) {
  return MinkowskiSplitter(rs, labels).split(s);
}

// ---- Kashiwara-Tanisaki style one-column tableaux ----
//
// Alphabet #_1 < 1 < 1bar < #_2 < 2 < 2bar < ... encoded as 3(r-1) + {0,1,2}.

struct KTTableau {
  std::vector<int> entries;  // strictly increasing codes, top to bottom
  bool operator==(const KTTableau& o) const { return entries == o.entries; }
  bool operator<(const KTTableau& o) const { return entries < o.entries; }
};

inline std::string kt_entry_name(int v) {
  int r = v / 3 + 1;
  switch (v % 3) {
    case 0:
      return "#" + std::to_string(r);
    case 1:
      return std::to_string(r);
    default:
      return std::to_string(r) + "b";
  }
}

inline std::string kt_tableau_str(const KTTableau& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) s += ",";
    s += kt_entry_name(t.entries[i]);
  }
  return s + "]";
}

/// All columns of length i over the 3n-letter alphabet with strictly
/// increasing entries, the row-r entry at least #_r, and #_j allowed in row j
/// only.
inline std::vector<KTTableau> kt_tableaux(int n, int i) {
  if (!(1 <= i && i <= n)) throw std::invalid_argument("kt_tableaux: need 1 <= i <= n");
  std::vector<KTTableau> out;
  std::vector<int> col;
  auto rec = [&](auto&& self, int row, int min_next) -> void {
    if (row == i) {
      out.push_back({col});
      return;
    }
    for (int v = std::max(3 * row, min_next); v < 3 * n; ++v) {
      if (v % 3 == 0 && v != 3 * row) continue;  // #_j only in row j
      col.push_back(v);
      self(self, row + 1, v + 1);
      col.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// The tableau T(s) of a point s in S(w_i): start from the column (1,...,i),
/// replace r by b+1 for a nonzero entry at alpha_{r,b} (n+1 meaning nbar), by
/// bbar at alpha_{r,bbar}, then replace j by #_j where s_{delta_j} = 1, and
/// sort. Any failure signals a support violation in s.
///
/// The result is validated against the stated column invariants (strict
/// increase, row-r entry >= #_r) but not against the #-placement rule of
/// kt_tableaux: sorting can move a #_j above row j (already at n=2, i=2 the
/// point with s_{d1+d2} = s_{delta_2} = 1 maps to the column (#2, 2bar)), so
/// that rule is a counting model for the codomain, not an image invariant.
inline KTTableau kt_map(const RootSystem& rs, int i, const MultiExponent& s) {
  if (rs.algebra.family != Family::B0) throw std::invalid_argument("kt_map: B(0,n) only");
  const int n = rs.algebra.n;
  if (!(1 <= i && i <= n)) throw std::invalid_argument("kt_map: need 1 <= i <= n");
  std::vector<long long> unit(n, 0);
  unit[i - 1] = 1;
  if (!contains(osp_polytope(rs, unit), s))
    throw std::invalid_argument("kt_map: multi-exponent is outside S(w_" + std::to_string(i) + ")");

  CnGrid grid = make_cn_grid(rs, 0);
  std::vector<int> col(i);
  for (int r = 0; r < i; ++r) col[r] = 3 * r + 1;  // the letter "r+1"

  auto replace_letter = [&](int from, int to) {
    auto it = std::find(col.begin(), col.end(), from);
    if (it == col.end())
      throw std::domain_error("kt_map: support violation (letter " + kt_entry_name(from) +
                              " already consumed)");
    *it = to;
  };

  for (int idx = 0; idx < rs.n_even; ++idx) {
    if (!s[idx]) continue;
    if (s[idx] != 1) throw std::domain_error("kt_map: support violation (even exponent > 1)");
    auto cell = grid.cell_of.at(idx);
    int from = 3 * (cell.row - 1) + 1;
    int to = cell.barred ? 3 * (cell.b - 1) + 2
                         : (cell.b + 1 <= n ? 3 * cell.b + 1 : 3 * (n - 1) + 2);
    replace_letter(from, to);
  }
  for (int j = 1; j <= n; ++j)
    if (s[rs.odd_begin() + (j - 1)]) replace_letter(3 * (j - 1) + 1, 3 * (j - 1));

  std::sort(col.begin(), col.end());
  for (int r = 0; r < i; ++r) {
    if (r > 0 && col[r] == col[r - 1])
      throw std::domain_error("kt_map: support violation (duplicate letter)");
    if (col[r] < 3 * r) throw std::domain_error("kt_map: support violation (row bound)");
  }
  return {col};
}

// ---- assembled monomial bases ----

struct MonomialBasis {
  AlgebraId algebra;
  std::vector<long long> labels;
  std::optional<Rat> charge;  // type I only
  PolytopeSpec spec;
  std::vector<MultiExponent> points;
  long long even_factor_dim = 1;  // F(4)/G(3) multiplicative plugin

  long long size() const { return static_cast<long long>(points.size()) * even_factor_dim; }
};

/// Builds the basis parametrization for any supported algebra and checks its
/// cardinality against the typical dimension.
inline MonomialBasis monomial_basis(const RootSystem& rs, const std::vector<long long>& labels,
                                    std::optional<Rat> charge = std::nullopt) {
  MonomialBasis basis;
  basis.algebra = rs.algebra;
  basis.labels = labels;
  Vec lambda;
  switch (rs.algebra.family) {
    case Family::B0:
      basis.spec = osp_polytope(rs, labels);
      lambda = ambient_weight(rs, labels);
      break;
    case Family::A:
    case Family::C: {
      Rat c = charge ? *charge : find_typical_charge(rs, labels);
      lambda = ambient_weight(rs, labels, c);
      if (!is_typical(rs, lambda))
        throw std::domain_error("monomial_basis: weight is atypical at charge " + format_rat(c));
      basis.charge = c;
      basis.spec = type_one_polytope(rs, labels);
      break;
    }
    default: {
      auto ep = exceptional_polytope(rs, labels);
      basis.spec = std::move(ep.spec);
      basis.even_factor_dim = ep.even_factor_dim;
      lambda = ambient_weight(rs, labels);
      break;
    }
  }
  basis.points = lattice_points(basis.spec);
  long long expected = dim_typical(rs, lambda);
  if (basis.size() != expected)
    throw std::logic_error("monomial_basis: cardinality " + std::to_string(basis.size()) +
                           " does not match the dimension " + std::to_string(expected));
  return basis;
}

}  // namespace superpbw
