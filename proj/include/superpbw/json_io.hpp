#pragma once

#include "superpbw/bases.hpp"
#include "superpbw/verify.hpp"

#include <json.hpp>

namespace superpbw {

using json = nlohmann::ordered_json;

namespace detail {
inline json coords_json(const Vec& v) {
  json row = json::array();
  for (const auto& c : v) row.push_back(format_rat_pq(c));
  return row;
}
}  // namespace detail

inline json root_system_json(const RootSystem& rs) {
  json j;
  j["algebra"] = rs.algebra.str();
  json gram = json::array();
  for (const auto& row : rs.gram) gram.push_back(detail::coords_json(row));
  j["gram"] = gram;
  json even = json::array(), odd = json::array(), simple = json::array();
  for (int i = 0; i < rs.n_even; ++i) even.push_back(detail::coords_json(rs.positive[i].coords));
  for (int i = rs.odd_begin(); i < rs.total_roots(); ++i)
    odd.push_back(detail::coords_json(rs.positive[i].coords));
  for (const auto& s : rs.simple) simple.push_back(detail::coords_json(s.coords));
  j["positive_even"] = even;
  j["positive_odd"] = odd;
  j["simple"] = simple;
  j["odd_node"] = rs.odd_node + 1;  // 1-based node index
  return j;
}

inline json polytope_json(const RootSystem& rs, const PolytopeSpec& spec,
                          const std::vector<MultiExponent>& points, long long even_factor_dim = 1) {
  json j;
  json roots = json::array();
  for (int idx : spec.coord_roots) roots.push_back(format_root(rs, rs.positive[idx].coords));
  j["roots"] = roots;
  json pts = json::array();
  for (const auto& p : points) pts.push_back(p);
  j["points"] = pts;
  j["count"] = points.size();
  if (even_factor_dim != 1) {
    j["even_factor_dim"] = even_factor_dim;
    j["total_count"] = static_cast<long long>(points.size()) * even_factor_dim;
  }
  return j;
}

inline json basis_json(const RootSystem& rs, const MonomialBasis& b) {
  json j;
  j["algebra"] = b.algebra.str();
  j["labels"] = b.labels;
  if (b.charge) j["charge"] = format_rat_pq(*b.charge);
  json inner = polytope_json(rs, b.spec, b.points, b.even_factor_dim);
  for (auto& [k, v] : inner.items()) j[k] = v;
  j["dimension"] = b.size();
  return j;
}

inline json report_json(const VerifyReport& r) {
  json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["expected"] = r.expected;
  j["got"] = r.got;
  j["pass"] = r.pass;
  return j;
}

inline json reports_json(const std::vector<VerifyReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr;
}

}  // namespace superpbw
