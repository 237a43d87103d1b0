// Command-line front end: root data, typicality and dimension queries,
// polytope/basis enumeration, Dyck path listings, graded operators, and the
// batch verification sweeps.

#include "superpbw/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace superpbw;

namespace {

struct LabelArg {
  std::vector<long long> labels;
  std::optional<Rat> charge;
};

LabelArg parse_labels(const RootSystem& rs, const std::string& text) {
  LabelArg out;
  std::string cur;
  std::vector<std::string> parts;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts) {
    if (p.rfind("charge=", 0) == 0) {
      if (rs.type_two()) throw std::invalid_argument("charge is only accepted for type I algebras");
      out.charge = parse_rat(p.substr(7));
      continue;
    }
    Rat v = parse_rat(p);
    if (!is_integer(v) || v < 0)
      throw std::invalid_argument("labels must be non-negative integers, got '" + p + "'");
    out.labels.push_back(to_integer(v));
  }
  if (static_cast<int>(out.labels.size()) != rs.even_rank())
    throw std::invalid_argument("expected " + std::to_string(rs.even_rank()) + " labels for " +
                                rs.algebra.str() + ", got " + std::to_string(out.labels.size()));
  return out;
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << j.dump(2) << "\n";
}

int run_verify(const std::string& claim, const std::vector<VerifyReport>& reports,
               const std::string& json_path) {
  if (!json_path.empty()) write_json(reports_json(reports), json_path);
  for (const auto& r : reports) {
    if (!r.pass) {
      std::cout << report_json(r).dump() << "\n";
      return 1;
    }
  }
  std::cout << "ok: " << reports.size() << " " << claim << " check"
            << (reports.size() == 1 ? "" : "s") << " passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root data, PBW polytopes and monomial bases for basic classical Lie superalgebras"};
  app.require_subcommand(1);

  std::string algebra, labels_text, json_path, out_path;
  std::string generator_text, ops_text;
  int power = 1;

  auto* roots_cmd = app.add_subcommand("roots", "print the root datum as JSON");
  roots_cmd->add_option("--algebra", algebra, "algebra spec, e.g. B(0,2)")->required();
  roots_cmd->add_option("--json", json_path, "write to a file instead of stdout");

  auto* dim_cmd = app.add_subcommand("dim", "typical dimension for the given labels");
  dim_cmd->add_option("--algebra", algebra)->required();
  dim_cmd->add_option("--labels", labels_text, "m1,m2,...[,charge=p/q]")->required();

  auto* typ_cmd = app.add_subcommand("typical", "typicality of the given weight");
  typ_cmd->add_option("--algebra", algebra)->required();
  typ_cmd->add_option("--labels", labels_text)->required();

  auto* poly_cmd = app.add_subcommand("polytope", "lattice points of the basis polytope");
  poly_cmd->add_option("--algebra", algebra)->required();
  poly_cmd->add_option("--labels", labels_text)->required();
  bool poly_count = false, poly_list = false;
  poly_cmd->add_flag("--count", poly_count, "print only the cardinality");
  poly_cmd->add_flag("--list", poly_list, "print the points");
  poly_cmd->add_option("--json", json_path, "write the point dump as JSON");

  auto* basis_cmd = app.add_subcommand("basis", "monomial basis parametrization as JSON");
  basis_cmd->add_option("--algebra", algebra)->required();
  basis_cmd->add_option("--labels", labels_text)->required();
  basis_cmd->add_option("--out", out_path, "output file")->required();

  auto* dyck_cmd = app.add_subcommand("dyck", "Dyck paths of the algebra");
  dyck_cmd->add_option("--algebra", algebra)->required();
  bool dyck_list = false;
  dyck_cmd->add_flag("--list", dyck_list, "print the paths as root sequences");

  auto* ops_cmd = app.add_subcommand("apply-ops", "apply graded operators to a generator power");
  ops_cmd->add_option("--algebra", algebra)->required();
  ops_cmd->add_option("--generator", generator_text, "positive root, e.g. 2d1")->required();
  ops_cmd->add_option("--power", power, "exponent of the generator")->required();
  ops_cmd->add_option("--ops", ops_text, "comma-separated positive roots, applied left to right")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "batch verification sweeps");
  verify_cmd->require_subcommand(1);
  long long max_sum = 4, max_label = -1, m1_min = -1, m1_max = -1, max_m = 10;
  int nval = 2, max_n = 3, kt_max_n = 4, max_l = 8;
  auto* v_count = verify_cmd->add_subcommand("count", "|S(lambda)| against the dimension formula");
  v_count->add_option("--algebra", algebra)->required();
  v_count->add_option("--max-sum", max_sum, "B(0,n): label sum bound (default 4)");
  v_count->add_option("--max-label", max_label, "per-label bound (family-dependent default)");
  v_count->add_option("--m1-min", m1_min, "exceptional: smallest gamma-factor label");
  v_count->add_option("--m1-max", m1_max, "exceptional: largest gamma-factor label");
  v_count->add_option("--json", json_path);
  auto* v_mink = verify_cmd->add_subcommand("minkowski", "capped Minkowski sum equality");
  v_mink->add_option("--n", nval, "rank of B(0,n) (default 2)");
  v_mink->add_option("--max-label", max_label, "per-label bound (default 2)");
  v_mink->add_option("--json", json_path);
  auto* v_split = verify_cmd->add_subcommand("split", "fundamental split of every lattice point");
  v_split->add_option("--max-n", max_n, "largest rank (default 3)");
  v_split->add_option("--max-label", max_label, "per-label bound (default 3)");
  v_split->add_option("--json", json_path);
  auto* v_kt = verify_cmd->add_subcommand("kt", "tableau injection and counts");
  v_kt->add_option("--max-n", kt_max_n, "largest rank (default 4)");
  v_kt->add_option("--json", json_path);
  auto* v_comb = verify_cmd->add_subcommand("comb", "counting lemma closed form");
  v_comb->add_option("--max-m", max_m, "largest m (default 10)");
  v_comb->add_option("--max-l", max_l, "largest l (default 8)");
  v_comb->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (roots_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      write_json(root_system_json(rs), json_path);
      return 0;
    }

    if (dim_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      LabelArg args = parse_labels(rs, labels_text);
      std::optional<Rat> charge = args.charge;
      if (!rs.type_two() && !charge) charge = find_typical_charge(rs, args.labels);
      Vec lambda = rs.type_two() ? ambient_weight(rs, args.labels)
                                 : ambient_weight(rs, args.labels, charge);
      std::cout << dim_typical(rs, lambda) << "\n";
      return 0;
    }

    if (typ_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      LabelArg args = parse_labels(rs, labels_text);
      if (!rs.type_two() && !args.charge)
        throw std::invalid_argument("typicality of a type I weight needs charge=p/q in --labels");
      Vec lambda = rs.type_two() ? ambient_weight(rs, args.labels)
                                 : ambient_weight(rs, args.labels, args.charge);
      auto t = check_typical(rs, lambda);
      if (t.typical) {
        std::cout << "yes\n";
      } else {
        std::cout << "no ((lambda+rho, beta) = 0 for beta = "
                  << format_root(rs, rs.positive[t.vanishing_odd].coords) << ")\n";
      }
      return 0;
    }

    if (poly_cmd->parsed() || basis_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      LabelArg args = parse_labels(rs, labels_text);
      MonomialBasis b = monomial_basis(rs, args.labels, args.charge);
      if (basis_cmd->parsed()) {
        write_json(basis_json(rs, b), out_path);
        return 0;
      }
      if (poly_count) {
        std::cout << b.size() << "\n";
      } else if (poly_list) {
        std::cout << "# coordinates:";
        for (int idx : b.spec.coord_roots)
          std::cout << " " << format_root(rs, rs.positive[idx].coords);
        std::cout << "\n";
        for (const auto& p : b.points) {
          for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
          std::cout << "\n";
        }
        if (b.even_factor_dim != 1)
          std::cout << "# even factor contributes a factor of " << b.even_factor_dim << "\n";
      } else {
        write_json(polytope_json(rs, b.spec, b.points, b.even_factor_dim), json_path);
      }
      return 0;
    }

    if (dyck_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      std::vector<DyckPath> paths;
      switch (rs.algebra.family) {
        case Family::B0:
          paths = dyck_paths_osp(rs);
          break;
        case Family::C:
          paths = dyck_paths_C(rs, 0);
          break;
        case Family::A:
          for (std::size_t f = 0; f < rs.factors.size(); ++f) {
            auto fp = dyck_paths_A(rs, static_cast<int>(f));
            paths.insert(paths.end(), fp.begin(), fp.end());
          }
          break;
        default:
          throw std::invalid_argument("dyck: no Dyck path model for " + rs.algebra.str());
      }
      if (dyck_list) {
        for (const auto& p : paths) {
          for (std::size_t i = 0; i < p.roots.size(); ++i)
            std::cout << (i ? " -> " : "") << format_root(rs, rs.positive[p.roots[i]].coords);
          std::cout << "\n";
        }
      } else {
        std::cout << paths.size() << "\n";
      }
      return 0;
    }

    if (ops_cmd->parsed()) {
      RootSystem rs = build_root_system(AlgebraId::parse(algebra));
      Vec gen = parse_root(rs, generator_text);
      int gi = rs.root_index(gen);
      if (gi < 0) throw std::invalid_argument("--generator must name a positive root");
      std::vector<Vec> ops;
      std::string cur;
      for (char c : ops_text + ",") {
        if (c == ',') {
          if (!cur.empty()) {
            Vec r = parse_root(rs, cur);
            if (rs.root_index(r) < 0)
              throw std::invalid_argument("--ops entries must be positive roots ('" + cur + "')");
            ops.push_back(r);
            cur.clear();
          }
        } else {
          cur += c;
        }
      }
      SuperPolynomial p = monomial(rs, gi, power);
      for (const auto& op : ops) p = apply_op(rs, op, p);
      std::cout << "# coefficients are convention-dependent (fixed odd-generator order)\n";
      if (p.empty()) {
        std::cout << "0\n";
      } else {
        for (const auto& [m, c] : p)
          std::cout << (c >= 0 ? "+" : "") << c << "  " << format_monomial(rs, m) << "\n";
      }
      return 0;
    }

    if (v_count->parsed()) {
      AlgebraId alg = AlgebraId::parse(algebra);
      std::vector<VerifyReport> reports;
      switch (alg.family) {
        case Family::B0:
          reports = verify_count_b0(alg.n, max_sum);
          break;
        case Family::A:
        case Family::C:
          reports = verify_count_type_one(alg, max_label < 0 ? 3 : max_label);
          break;
        case Family::D21: {
          RootSystem rs = build_root_system(alg);
          long long lo = m1_min < 0 ? rs.n_odd - 1 : m1_min;
          long long hi = m1_max < 0 ? lo + 3 : m1_max;
          reports = verify_count_d21(alg.alpha, lo, hi, max_label < 0 ? 2 : max_label);
          break;
        }
        case Family::F4:
        case Family::G3: {
          RootSystem rs = build_root_system(alg);
          long long lo = m1_min < 0 ? rs.n_odd - 1 : m1_min;
          long long hi = m1_max < 0 ? lo + 2 : m1_max;
          reports = verify_count_exceptional(alg, lo, hi, max_label < 0 ? 1 : max_label);
          break;
        }
      }
      return run_verify("count", reports, json_path);
    }
    if (v_mink->parsed())
      return run_verify("minkowski", verify_minkowski(nval, max_label < 0 ? 2 : max_label),
                        json_path);
    if (v_split->parsed())
      return run_verify("split", verify_split(max_n, max_label < 0 ? 3 : max_label), json_path);
    if (v_kt->parsed()) return run_verify("kt", verify_kt(kt_max_n), json_path);
    if (v_comb->parsed()) return run_verify("comb", verify_comb(max_m, max_l), json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
