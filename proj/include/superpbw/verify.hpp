#pragma once

#include "superpbw/bases.hpp"
#include "superpbw/gradedops.hpp"

#include <atomic>
#include <cstdlib>
#include <future>
#include <set>

namespace superpbw {

struct VerifyReport {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string got;
  bool pass = false;
};

namespace detail {

inline std::string labels_str(const std::vector<long long>& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

inline void all_labels_rec(int k, long long budget, bool budget_is_sum, std::vector<long long>& cur,
                           std::vector<std::vector<long long>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (long long v = 0; v <= budget; ++v) {
    cur.push_back(v);
    all_labels_rec(k - 1, budget_is_sum ? budget - v : budget, budget_is_sum, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<long long>> labels_with_sum_le(int k, long long max_sum) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  all_labels_rec(k, max_sum, true, cur, out);
  return out;
}

inline std::vector<std::vector<long long>> labels_with_each_le(int k, long long max_label) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  all_labels_rec(k, max_label, false, cur, out);
  return out;
}

inline int env_thread_cap() {
  const char* v = std::getenv("SUPERPBW_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n > 0 ? n : 1;
}

/// Applies fn to every item, possibly on a small worker pool (capped by
/// SUPERPBW_THREADS); reports are concatenated in item order.
template <class Item, class Fn>
inline std::vector<VerifyReport> map_reports(const std::vector<Item>& items, Fn&& fn,
                                             int max_threads = 0) {
  int threads = max_threads > 0 ? max_threads : env_thread_cap();
  threads = std::min<int>(threads, static_cast<int>(items.size()));
  std::vector<std::vector<VerifyReport>> partial(items.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) partial[i] = fn(items[i]);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next++; i < items.size(); i = next++) partial[i] = fn(items[i]);
      }));
    for (auto& f : futs) f.get();
  }
  std::vector<VerifyReport> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

/// B(0,n): |S(lambda)| against the typical dimension over all label vectors
/// with sum at most max_sum.
inline std::vector<VerifyReport> verify_count_b0(int n, long long max_sum) {
  RootSystem rs = build_root_system(AlgebraId::B0(n));
  auto paths = dyck_paths_osp(rs);
  auto labels = detail::labels_with_sum_le(n, max_sum);
  return detail::map_reports(labels, [&](const std::vector<long long>& m) {
    VerifyReport r;
    r.claim = "count";
    r.instance = rs.algebra.str() + " m=" + detail::labels_str(m);
    r.expected = std::to_string(dim_typical(rs, ambient_weight(rs, m)));
    r.got = std::to_string(count_lattice_points(compile_polytope(rs, paths, m)));
    r.pass = r.expected == r.got;
    return std::vector<VerifyReport>{r};
  });
}

/// Type I: |S(lambda)| = 2^d * prod weyl_dim = dim at a verified-typical
/// charge, over all label vectors with each label at most max_label.
inline std::vector<VerifyReport> verify_count_type_one(const AlgebraId& alg, long long max_label) {
  RootSystem rs = build_root_system(alg);
  auto labels = detail::labels_with_each_le(rs.even_rank(), max_label);
  return detail::map_reports(labels, [&](const std::vector<long long>& m) {
    Rat charge = find_typical_charge(rs, m);
    Vec lambda = ambient_weight(rs, m, charge);
    long long dim = dim_typical(rs, lambda);
    long long product = 1LL << rs.n_odd;
    std::size_t base = 0;
    for (std::size_t f = 0; f < rs.factors.size(); ++f) {
      std::vector<Rat> fl;
      for (std::size_t j = 0; j < rs.factors[f].simple.size(); ++j)
        fl.emplace_back(m[base + j]);
      base += rs.factors[f].simple.size();
      product *= weyl_dim(rs, {static_cast<int>(f), fl});
    }
    VerifyReport r;
    r.claim = "count";
    r.instance =
        rs.algebra.str() + " m=" + detail::labels_str(m) + " charge=" + format_rat(charge);
    r.expected = std::to_string(dim);
    long long got = count_lattice_points(type_one_polytope(rs, m));
    r.got = std::to_string(got);
    r.pass = got == dim && product == dim;
    if (product != dim) r.got += " (factor product " + std::to_string(product) + ")";
    return std::vector<VerifyReport>{r};
  });
}

/// D(2,1;alpha): |S(lambda)| against both the closed product
/// 16 (m1-1)(m2+1)(m3+1) and the dimension formula, for typical weights.
inline std::vector<VerifyReport> verify_count_d21(const Rat& alpha, long long m1_min,
                                                  long long m1_max, long long max_label) {
  RootSystem rs = build_root_system(AlgebraId::D21(alpha));
  std::vector<VerifyReport> out;
  for (long long m1 = m1_min; m1 <= m1_max; ++m1)
    for (long long m2 = 0; m2 <= max_label; ++m2)
      for (long long m3 = 0; m3 <= max_label; ++m3) {
        std::vector<long long> m{m1, m2, m3};
        Vec lambda = ambient_weight(rs, m);
        if (!in_desk_class(rs, lambda)) continue;
        VerifyReport r;
        r.claim = "count";
        r.instance = rs.algebra.str() + " m=" + detail::labels_str(m);
        long long closed = 16 * (m1 - 1) * (m2 + 1) * (m3 + 1);
        long long dim = dim_typical(rs, lambda);
        long long got = count_lattice_points(exceptional_polytope(rs, m).spec);
        r.expected = std::to_string(closed);
        r.got = std::to_string(got);
        r.pass = got == closed && closed == dim;
        if (closed != dim) r.got += " (dim " + std::to_string(dim) + ")";
        out.push_back(r);
      }
  return out;
}

/// F(4)/G(3): odd-factor count = comb_count = the closed form, and the total
/// dimension factors as odd count times the even-factor Weyl dimension.
inline std::vector<VerifyReport> verify_count_exceptional(const AlgebraId& alg, long long m1_min,
                                                          long long m1_max, long long max_label) {
  RootSystem rs = build_root_system(alg);
  bool f4 = alg.family == Family::F4;
  if (!f4 && alg.family != Family::G3)
    throw std::invalid_argument("verify_count_exceptional: F(4) or G(3)");
  int rest = rs.even_rank() - 1;
  std::vector<VerifyReport> out;
  for (long long m1 = m1_min; m1 <= m1_max; ++m1)
    for (const auto& lp : detail::labels_with_each_le(rest, max_label)) {
      std::vector<long long> m{m1};
      m.insert(m.end(), lp.begin(), lp.end());
      Vec lambda = ambient_weight(rs, m);
      if (!in_desk_class(rs, lambda)) continue;
      VerifyReport r;
      r.claim = "count";
      r.instance = rs.algebra.str() + " m=" + detail::labels_str(m);
      long long closed = f4 ? 256 * (m1 - 3) : 64 * (2 * m1 - 5);
      auto cc = comb_count(m1, rs.n_odd);
      auto ep = exceptional_polytope(rs, m);
      long long odd_got = count_lattice_points(ep.spec);
      long long dim = dim_typical(rs, lambda);
      r.expected = std::to_string(closed) + " * " + std::to_string(ep.even_factor_dim);
      r.got = std::to_string(odd_got) + " * " + std::to_string(ep.even_factor_dim);
      r.pass = odd_got == closed && cc.value == closed && cc.closed_form &&
               odd_got * ep.even_factor_dim == dim;
      if (odd_got * ep.even_factor_dim != dim) r.got += " (dim " + std::to_string(dim) + ")";
      out.push_back(r);
    }
  return out;
}

/// B(0,n): S(lambda+mu) equals the capped Minkowski sum S(lambda)+S(mu), as
/// sets, over all label pairs with each label at most max_label.
inline std::vector<VerifyReport> verify_minkowski(int n, long long max_label) {
  RootSystem rs = build_root_system(AlgebraId::B0(n));
  auto paths = dyck_paths_osp(rs);
  auto all = detail::labels_with_each_le(n, max_label);
  std::vector<std::vector<MultiExponent>> points;
  points.reserve(all.size());
  for (const auto& m : all) points.push_back(lattice_points(compile_polytope(rs, paths, m)));
  std::vector<std::uint8_t> odd;
  for (int i = 0; i < rs.total_roots(); ++i) odd.push_back(rs.positive[i].odd ? 1 : 0);

  std::vector<VerifyReport> out;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      std::vector<long long> sum_labels(all[a]);
      for (int k = 0; k < n; ++k) sum_labels[k] += all[b][k];
      auto lhs = lattice_points(compile_polytope(rs, paths, sum_labels));
      auto rhs = cap_filter(minkowski_sum(points[a], points[b]), odd);
      VerifyReport r;
      r.claim = "minkowski";
      r.instance = rs.algebra.str() + " lambda=" + detail::labels_str(all[a]) +
                   " mu=" + detail::labels_str(all[b]);
      r.expected = "|S(lambda+mu)| = " + std::to_string(lhs.size());
      r.got = "|capped sum| = " + std::to_string(rhs.size());
      r.pass = lhs == rhs;  // both sorted: set equality
      out.push_back(r);
    }
  return out;
}

/// B(0,n): every point of S(lambda) splits as a fundamental point plus a
/// point of S(lambda - w_i).
inline std::vector<VerifyReport> verify_split(int max_n, long long max_label) {
  std::vector<std::pair<int, std::vector<long long>>> instances;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& m : detail::labels_with_each_le(n, max_label))
      if (!std::all_of(m.begin(), m.end(), [](long long v) { return v == 0; }))
        instances.emplace_back(n, m);

  return detail::map_reports(instances, [&](const std::pair<int, std::vector<long long>>& inst) {
    RootSystem rs = build_root_system(AlgebraId::B0(inst.first));
    const auto& m = inst.second;
    MinkowskiSplitter splitter(rs, m);
    long long total = 0, good = 0;
    std::string first_bad;
    for_each_lattice_point(osp_polytope(rs, m), [&](const MultiExponent& s) {
      ++total;
      try {
        splitter.split(s);
        ++good;
      } catch (const std::exception&) {
        if (first_bad.empty()) first_bad = format_point(s);
      }
    });
    VerifyReport r;
    r.claim = "split";
    r.instance = rs.algebra.str() + " m=" + detail::labels_str(m);
    r.expected = std::to_string(total) + " valid splits";
    r.got = std::to_string(good) + (first_bad.empty() ? "" : " (first failure at " + first_bad + ")");
    r.pass = total == good;
    return std::vector<VerifyReport>{r};
  });
}

/// B(0,n): the tableau map is injective on S(w_i) and the tableau count
/// matches both |S(w_i)| and the typical dimension.
inline std::vector<VerifyReport> verify_kt(int max_n) {
  std::vector<VerifyReport> out;
  for (int n = 1; n <= max_n; ++n) {
    RootSystem rs = build_root_system(AlgebraId::B0(n));
    for (int i = 1; i <= n; ++i) {
      std::vector<long long> unit(n, 0);
      unit[i - 1] = 1;
      auto pts = lattice_points(osp_polytope(rs, unit));
      std::set<KTTableau> images;
      bool ok = true;
      std::string note;
      for (const auto& s : pts) {
        try {
          if (!images.insert(kt_map(rs, i, s)).second) {
            ok = false;
            note = " (collision at " + format_point(s) + ")";
            break;
          }
        } catch (const std::exception& e) {
          ok = false;
          note = std::string(" (") + e.what() + ")";
          break;
        }
      }
      long long tableaux = static_cast<long long>(kt_tableaux(n, i).size());
      long long dim = dim_typical(rs, ambient_weight(rs, unit));
      VerifyReport r;
      r.claim = "kt";
      r.instance = rs.algebra.str() + " i=" + std::to_string(i);
      r.expected = std::to_string(dim) + " distinct tableaux";
      r.got = std::to_string(images.size()) + " of " + std::to_string(pts.size()) +
              " points, |KT| = " + std::to_string(tableaux) + note;
      r.pass = ok && static_cast<long long>(pts.size()) == dim && tableaux == dim &&
               static_cast<long long>(images.size()) == dim;
      out.push_back(r);
    }
  }
  return out;
}

/// Closed form of the box-with-cube count against direct enumeration.
inline std::vector<VerifyReport> verify_comb(long long max_m, int max_l) {
  std::vector<VerifyReport> out;
  for (int l = 1; l <= max_l; ++l)
    for (long long m = l - 1; m <= max_m; ++m) {
      auto cc = comb_count(m, l);
      long long brute = detail::comb_enumerate(m, l);
      VerifyReport r;
      r.claim = "comb";
      r.instance = "m=" + std::to_string(m) + " l=" + std::to_string(l);
      r.expected = std::to_string(brute);
      r.got = std::to_string(cc.value);
      r.pass = cc.closed_form && cc.value == brute;
      out.push_back(r);
    }
  return out;
}

/// Weight additivity of the graded operators: every term of the image of a
/// single generator has weight (source weight) + alpha.
inline std::vector<VerifyReport> verify_weight_additivity(const AlgebraId& alg) {
  RootSystem rs = build_root_system(alg);
  long long pairs = 0, good = 0;
  std::string note;
  for (int a = 0; a < rs.total_roots(); ++a)
    for (int b = 0; b < rs.total_roots(); ++b) {
      ++pairs;
      auto image = apply_op(rs, rs.positive[a].coords, monomial(rs, b, 1));
      Vec want = weight_of(rs, {monomial(rs, b, 1).begin()->first}) + rs.positive[a].coords;
      bool ok = true;
      for (const auto& [m, c] : image)
        if (weight_of(rs, m) != want) ok = false;
      if (ok)
        ++good;
      else if (note.empty())
        note = " (first failure at alpha=" + format_root(rs, rs.positive[a].coords) +
               ", beta=" + format_root(rs, rs.positive[b].coords) + ")";
    }
  VerifyReport r;
  r.claim = "gradedops";
  r.instance = alg.str() + " weight additivity over all root pairs";
  r.expected = std::to_string(pairs);
  r.got = std::to_string(good) + note;
  r.pass = pairs == good;
  return {r};
}

/// D(2,1;alpha): applying the four odd operators to the gamma-power monomial
/// stays inside the expected three-monomial support and is non-zero.
inline std::vector<VerifyReport> verify_d21_straightening(long long m1_min, long long m1_max) {
  RootSystem rs = build_root_system(AlgebraId::D21(Rat(1)));
  auto root = [&](const std::string& s) { return parse_root(rs, s); };
  std::vector<Vec> ops = {root("e1+e2+e3"), root("e1+e2-e3"), root("e1-e2+e3"),
                          root("e1-e2-e3")};
  auto e = [&](const std::string& s, int power) {
    SuperMonomial m(rs.total_roots(), 0);
    m[rs.root_index(root(s))] = power;
    return m;
  };
  std::vector<VerifyReport> out;
  for (long long m1 = m1_min; m1 <= m1_max; ++m1) {
    auto got = straightening_support(rs, root("2e1"), static_cast<int>(m1) + 1, ops);
    SuperMonomial all_odd = e("2e1", static_cast<int>(m1) - 3);
    for (int i = rs.odd_begin(); i < rs.total_roots(); ++i) all_odd[i] = 1;
    SuperMonomial t2 = e("2e1", static_cast<int>(m1) - 2);
    t2[rs.root_index(root("2e2"))] = 1;
    t2[rs.root_index(root("e1-e2+e3"))] = 1;
    t2[rs.root_index(root("e1-e2-e3"))] = 1;
    SuperMonomial t3 = e("2e1", static_cast<int>(m1) - 2);
    t3[rs.root_index(root("2e3"))] = 1;
    t3[rs.root_index(root("e1+e2-e3"))] = 1;
    t3[rs.root_index(root("e1-e2-e3"))] = 1;
    std::set<SuperMonomial> allowed{all_odd, t2, t3};
    bool inside = true;
    for (const auto& m : got)
      if (!allowed.count(m)) inside = false;
    bool has_all_odd = std::find(got.begin(), got.end(), all_odd) != got.end();
    VerifyReport r;
    r.claim = "straightening";
    r.instance = "D(2,1;1) m1=" + std::to_string(m1);
    r.expected = "non-zero, support within the 3 expected monomials, all-odd term present";
    r.got = std::to_string(got.size()) + " monomials";
    r.pass = !got.empty() && inside && has_all_odd;
    out.push_back(r);
  }
  return out;
}

/// Path-set goldens and regeneration determinism.
inline std::vector<VerifyReport> verify_dyck_goldens() {
  std::vector<VerifyReport> out;
  auto count_for = [&](int n) {
    RootSystem rs = build_root_system(AlgebraId::B0(n));
    return dyck_paths_osp(rs);
  };
  {
    VerifyReport r;
    r.claim = "dyck";
    r.instance = "|osp paths| for n=1,2";
    r.expected = "1, 4";
    r.got = std::to_string(count_for(1).size()) + ", " + std::to_string(count_for(2).size());
    r.pass = count_for(1).size() == 1 && count_for(2).size() == 4;
    out.push_back(r);
  }
  {
    RootSystem rs = build_root_system(AlgebraId::B0(3));
    auto a = dyck_paths_osp(rs);
    auto b = dyck_paths_osp(rs);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].roots == b[i].roots;
    VerifyReport r;
    r.claim = "dyck";
    r.instance = "regeneration determinism (n=3)";
    r.expected = "identical path sets";
    r.got = same ? "identical" : "different";
    r.pass = same;
    out.push_back(r);
  }
  return out;
}

}  // namespace superpbw
