#pragma once

#include "superpbw/polytopes.hpp"
#include "superpbw/rootdata.hpp"

#include <map>
#include <optional>

namespace superpbw {

enum class PathKind {
  even_end,  // ends at a simple root alpha_j; bound window i..j
  long_end,  // symplectic path ending at 2*delta_j; bound window i..n
  odd_end,   // symplectic 2*delta_j path with the odd root delta_i appended; window i..n
};

struct DyckPath {
  std::vector<int> roots;  // indices into RootSystem::positive, in path order
  PathKind kind = PathKind::even_end;
  int start = 1, end = 1;            // factor node indices (1-based)
  int window_lo = 1, window_hi = 1;  // label window of the bound M_p
};

/// Triangular grid of the positive roots of a rank-n symplectic factor. Row a
/// holds, left to right, the columns a, a+1, ..., n, (n-1)bar, ..., abar; the
/// unbarred diagonal cell is the simple root alpha_a and the barred diagonal
/// cell is 2*delta_a.
struct CnGrid {
  const RootSystem* rs = nullptr;
  int factor = 0;
  int n = 0;
  std::vector<std::vector<int>> cell_root;  // [a-1][c] -> index into rs->positive

  struct Cell {
    int row = 0;     // 1-based
    int col = 0;     // 0-based within the row
    bool barred = false;
    int b = 0;  // column label
  };
  std::map<int, Cell> cell_of;

  int rowlen(int a) const { return 2 * (n - a) + 1; }
  bool is_unbarred(int a, int c) const { return c <= n - a; }
  int blabel(int a, int c) const { return is_unbarred(a, c) ? a + c : 2 * n - a - c; }
  int root_at(int a, int c) const { return cell_root[a - 1][c]; }
};

inline CnGrid make_cn_grid(const RootSystem& rs, int factor) {
  const auto& f = rs.factors.at(factor);
  if (f.name.empty() || f.name[0] != 'C')
    throw std::invalid_argument("make_cn_grid: factor is not symplectic");
  CnGrid g;
  g.rs = &rs;
  g.factor = factor;
  g.n = static_cast<int>(f.simple.size());
  g.cell_root.assign(g.n, {});
  for (int a = 1; a <= g.n; ++a) {
    for (int c = 0; c < g.rowlen(a); ++c) {
      int b = g.blabel(a, c);
      Vec coords = zero_vec(rs.dim);
      for (int t = a; t <= g.n; ++t) coords = coords + f.simple[t - 1];
      if (g.is_unbarred(a, c)) {
        // alpha_a + ... + alpha_b
        coords = zero_vec(rs.dim);
        for (int t = a; t <= b; ++t) coords = coords + f.simple[t - 1];
      } else {
        // alpha_a + ... + alpha_n + alpha_{n-1} + ... + alpha_b
        for (int t = b; t <= g.n - 1; ++t) coords = coords + f.simple[t - 1];
      }
      int idx = rs.root_index(coords);
      if (idx < 0) throw std::logic_error("make_cn_grid: cell is not a positive root");
      g.cell_root[a - 1].push_back(idx);
      g.cell_of[idx] = {a, c, !g.is_unbarred(a, c), b};
    }
  }
  return g;
}

namespace detail {

// Depth-first, right step before down step; start rows in increasing order.
// Endpoints are recorded and the walk continues past them, so every path
// following the step rules appears exactly once.
inline void walk_cn(const CnGrid& g, int a, int c, std::vector<int>& roots, int start,
                    std::vector<DyckPath>& out) {
  roots.push_back(g.root_at(a, c));
  if (c == g.rowlen(a) - 1) {  // barred diagonal (or the single cell of row n): 2*delta_a
    out.push_back({roots, PathKind::long_end, start, a, start, g.n});
  } else if (c == 0) {  // unbarred diagonal: alpha_a with a < n
    out.push_back({roots, PathKind::even_end, start, a, start, a});
  }
  if (c + 1 < g.rowlen(a)) walk_cn(g, a, c + 1, roots, start, out);
  int b = g.blabel(a, c);
  if (a + 1 <= g.n && b >= a + 1) {
    int c2 = g.is_unbarred(a, c) ? b - (a + 1) : 2 * g.n - (a + 1) - b;
    walk_cn(g, a + 1, c2, roots, start, out);
  }
  roots.pop_back();
}

inline void walk_a(const RootSystem& rs, const EvenFactor& f, int rank, int a, int b,
                   std::vector<int>& roots, int start, std::vector<DyckPath>& out) {
  Vec coords = zero_vec(rs.dim);
  for (int t = a; t <= b; ++t) coords = coords + f.simple[t - 1];
  int idx = rs.root_index(coords);
  if (idx < 0) throw std::logic_error("dyck_paths_A: cell is not a positive root");
  roots.push_back(idx);
  if (a == b) out.push_back({roots, PathKind::even_end, start, a, start, a});
  if (b + 1 <= rank) walk_a(rs, f, rank, a, b + 1, roots, start, out);
  if (a + 1 <= b) walk_a(rs, f, rank, a + 1, b, roots, start, out);
  roots.pop_back();
}

}  // namespace detail

/// All Dyck paths on a type A even factor: p(0) = alpha_i, p(k) = alpha_j,
/// steps alpha_{a,b} -> alpha_{a,b+1} or alpha_{a+1,b}.
inline std::vector<DyckPath> dyck_paths_A(const RootSystem& rs, int factor) {
  const auto& f = rs.factors.at(factor);
  if (f.name.empty() || f.name[0] != 'A')
    throw std::invalid_argument("dyck_paths_A: factor is not of type A");
  int rank = static_cast<int>(f.simple.size());
  std::vector<DyckPath> out;
  std::vector<int> roots;
  for (int i = 1; i <= rank; ++i) detail::walk_a(rs, f, rank, i, i, roots, i, out);
  return out;
}

/// All symplectic Dyck paths on a type C even factor, ending either at a
/// simple root alpha_j or at 2*delta_j.
inline std::vector<DyckPath> dyck_paths_C(const RootSystem& rs, int factor) {
  CnGrid g = make_cn_grid(rs, factor);
  std::vector<DyckPath> out;
  std::vector<int> roots;
  for (int i = 1; i <= g.n; ++i) detail::walk_cn(g, i, 0, roots, i, out);
  return out;
}

/// Orthosymplectic Dyck paths for B(0,n): symplectic paths ending at alpha_j
/// with j < n, plus every symplectic path ending at 2*delta_j with the odd
/// root delta_i appended (i = the path's start index).
inline std::vector<DyckPath> dyck_paths_osp(const RootSystem& rs) {
  if (rs.algebra.family != Family::B0)
    throw std::invalid_argument("dyck_paths_osp: B(0,n) only");
  std::vector<DyckPath> out = dyck_paths_C(rs, 0);
  for (auto& p : out) {
    if (p.kind == PathKind::long_end) {
      p.roots.push_back(rs.odd_begin() + (p.start - 1));  // delta_{start}
      p.kind = PathKind::odd_end;
    }
  }
  return out;
}

/// A spec over every positive root with the odd 0/1 caps and no inequalities.
inline PolytopeSpec full_coordinate_spec(const RootSystem& rs) {
  PolytopeSpec spec;
  for (int i = 0; i < rs.total_roots(); ++i) {
    spec.coord_roots.push_back(i);
    spec.odd.push_back(rs.positive[i].odd ? 1 : 0);
  }
  return spec;
}

/// Adds one inequality per path, bounded by the label sum over the path's
/// window. Coordinates are assumed to be indexed by rs positions.
inline void add_path_inequalities(PolytopeSpec& spec, const std::vector<DyckPath>& paths,
                                  const std::vector<long long>& labels) {
  for (const auto& p : paths) {
    Inequality q;
    q.support = p.roots;
    std::sort(q.support.begin(), q.support.end());
    for (int t = p.window_lo; t <= p.window_hi; ++t) {
      long long l = labels.at(t - 1);
      if (l < 0) throw std::invalid_argument("labels must be non-negative integers");
      q.bound += l;
    }
    spec.ineqs.push_back(std::move(q));
  }
}

inline PolytopeSpec compile_polytope(const RootSystem& rs, const std::vector<DyckPath>& paths,
                                     const std::vector<long long>& labels) {
  PolytopeSpec spec = full_coordinate_spec(rs);
  add_path_inequalities(spec, paths, labels);
  spec.validate();
  return spec;
}

/// The total coordinate order used by the fundamental split, most significant
/// first: for r = n down to 1, the row-r roots in reverse column order
/// (2*delta_r first, alpha_r last), then delta_r.
inline std::vector<int> ord1_descending(const RootSystem& rs) {
  if (rs.algebra.family != Family::B0)
    throw std::invalid_argument("ord1_descending: B(0,n) only");
  CnGrid g = make_cn_grid(rs, 0);
  std::vector<int> order;
  for (int r = g.n; r >= 1; --r) {
    for (int c = g.rowlen(r) - 1; c >= 0; --c) order.push_back(g.root_at(r, c));
    order.push_back(rs.odd_begin() + (r - 1));
  }
  return order;
}

}  // namespace superpbw
