#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toruschar/census.hpp"
#include "toruschar/kclass.hpp"
#include "toruschar/knotpoly.hpp"
#include "toruschar/latquot.hpp"
#include "toruschar/oracle.hpp"
#include "toruschar/repnum.hpp"
#include "toruschar/serialize.hpp"
#include "toruschar/verify.hpp"

namespace tc = toruschar;
using tc::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Settings that can come from flags, a key=value file, or TORUSCHAR_* env
/// variables, in that order of precedence.
struct Settings {
  std::map<std::string, std::string> values = {
      {"budget", "1000000"}, {"seed", "24301"},       {"samples", "5"},
      {"fd_step", "1e-5"},   {"rank_tol", "1e-6"},   {"zero_tol", "1e-9"},
      {"format", "json"}};

  void load_env() {
    for (auto& [key, val] : values) {
      std::string var = "TORUSCHAR_" + key;
      for (auto& ch : var) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (const char* v = std::getenv(var.c_str())) val = v;
    }
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      if (!values.count(key)) throw CLI::ValidationError("--config", "unknown key '" + key + "'");
      values[key] = trim(line.substr(eq + 1));
    }
  }

  std::uint64_t u64(const std::string& k) const { return std::stoull(values.at(k), nullptr, 0); }
  double real(const std::string& k) const { return std::stod(values.at(k)); }
  const std::string& str(const std::string& k) const { return values.at(k); }
};

tc::Group parse_group(const std::string& s) {
  if (s == "sl") return tc::Group::SL;
  if (s == "gl") return tc::Group::GL;
  if (s == "pgl") return tc::Group::PGL;
  throw CLI::ValidationError("--group", "expected sl, gl or pgl");
}

std::vector<long> parse_list(const std::string& s, const std::string& flag) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

void print_census_table(const std::vector<tc::ComponentDescriptor>& ds) {
  std::cout << pad("kind", 18) << pad("variant", 17) << pad("dim", 5) << pad("class", 26)
            << "label\n";
  for (const auto& d : ds) {
    std::string label = "-";
    if (d.eigen_label) label = tc::to_string(*d.eigen_label);
    std::cout << pad(tc::to_string(d.kind.tag), 18) << pad(tc::to_string(d.kind.variant), 17)
              << pad(std::to_string(d.dimension), 5) << pad(d.kclass.str(), 26) << label << "\n";
  }
  std::map<std::string, int> totals;
  for (const auto& d : ds) ++totals[tc::to_string(d.kind.tag) + "/" + tc::to_string(d.kind.variant)];
  std::cout << "\n";
  for (const auto& [k, v] : totals) std::cout << pad(k, 36) << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties of torus knots: strata, classes and checks"};
  app.require_subcommand(1);

  Settings settings;
  std::string config_path, format_flag;
  std::uint64_t budget_flag = 0, seed_flag = 0;
  int samples_flag = 0;
  app.add_option("--config", config_path, "key=value settings file");
  auto* fmt_opt = app.add_option("--format", format_flag, "json or table")
                      ->check(CLI::IsMember({"json", "table"}));

  long m = 0, n = 0;
  int rank = 3;
  std::string group = "sl";

  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("--m", m, "first torus knot parameter")->required();
    sub->add_option("--n", n, "second torus knot parameter")->required();
  };
  auto add_fmt = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* census_cmd = app.add_subcommand("census", "list strata with classes and labels");
  add_mn(census_cmd);
  census_cmd->add_option("--rank", rank)->check(CLI::IsMember({2, 3}));
  census_cmd->add_option("--group", group)->check(CLI::IsMember({"sl", "gl", "pgl"}));
  add_fmt(census_cmd);

  auto* kclass_cmd = app.add_subcommand("kclass", "closed-form class in K(Var_C)");
  add_mn(kclass_cmd);
  kclass_cmd->add_option("--rank", rank)->check(CLI::IsMember({2, 3}));
  kclass_cmd->add_option("--group", group)->check(CLI::IsMember({"sl", "gl", "pgl"}));
  add_fmt(kclass_cmd);

  std::string kclass_file;
  auto* recover_cmd = app.add_subcommand("recover", "recover (m,n) from an SL(3) class");
  recover_cmd->add_option("--kclass-file", kclass_file, "KClass JSON")->required();
  add_fmt(recover_cmd);

  long grid = 0;
  std::string ranks_str = "2,3", out_path;
  auto* verify_cmd = app.add_subcommand("verify", "run every identity over a grid of pairs");
  verify_cmd->add_option("--grid", grid, "largest parameter")->required()->check(CLI::Range(3L, 1000L));
  verify_cmd->add_option("--rank", ranks_str, "comma-separated ranks");
  auto* budget_opt = verify_cmd->add_option("--budget", budget_flag, "oracle budget");
  verify_cmd->add_option("--out", out_path, "JSON report path");
  add_fmt(verify_cmd);

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial");
  add_mn(alex_cmd);
  add_fmt(alex_cmd);

  long k_opt = 0;
  auto* curves_cmd = app.add_subcommand("curves", "boundary curves of partially reducible strata");
  add_mn(curves_cmd);
  auto* k_flag = curves_cmd->add_option("--k", k_opt);
  add_fmt(curves_cmd);

  std::string weights_str;
  long r_opt = 0;
  auto* qb_cmd = app.add_subcommand("quotient-basis", "monomial coordinates on (C*)^k / mu_r");
  qb_cmd->add_option("--weights", weights_str, "a1,a2,...")->required();
  qb_cmd->add_option("--r", r_opt)->required()->check(CLI::PositiveNumber);
  add_fmt(qb_cmd);

  auto* rep_cmd = app.add_subcommand("rep-check", "numeric checks of representations");
  add_mn(rep_cmd);
  auto* seed_opt = rep_cmd->add_option("--seed", seed_flag);
  auto* samples_opt = rep_cmd->add_option("--samples", samples_flag)->check(CLI::PositiveNumber);
  add_fmt(rep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  bool json_mode = true;
  auto fail = [&](const std::string& code, const std::string& msg, int exit_code) {
    if (json_mode)
      std::cout << json{{"error", msg}, {"code", code}}.dump() << "\n";
    else
      std::cerr << "error: " << msg << "\n";
    return exit_code;
  };

  try {
    settings.load_env();
    if (!config_path.empty()) settings.load_file(config_path);
    if (!format_flag.empty()) settings.values["format"] = format_flag;
    if (*budget_opt) settings.values["budget"] = std::to_string(budget_flag);
    if (*seed_opt) settings.values["seed"] = std::to_string(seed_flag);
    if (*samples_opt) settings.values["samples"] = std::to_string(samples_flag);
    (void)fmt_opt;
    json_mode = settings.str("format") != "table";
    tc::OracleConfig ocfg{settings.u64("budget")};

    if (*census_cmd) {
      const auto p = tc::KnotParams::make(m, n);
      const auto ds = tc::census(parse_group(group), rank, p);
      if (json_mode) {
        json arr = json::array();
        for (const auto& d : ds) arr.push_back(tc::descriptor_to_json(d));
        std::cout << json{{"m", p.m()}, {"n", p.n()}, {"rank", rank}, {"group", group},
                          {"components", arr}}
                         .dump(2)
                  << "\n";
      } else {
        print_census_table(ds);
      }
      return kExitOk;
    }
    if (*kclass_cmd) {
      const auto c = tc::kclass(parse_group(group), rank, tc::KnotParams::make(m, n));
      if (json_mode)
        std::cout << tc::poly_to_json(c).dump() << "\n";
      else
        std::cout << c.str() << "\n";
      return kExitOk;
    }
    if (*recover_cmd) {
      std::ifstream in(kclass_file);
      if (!in) return fail("Usage", "cannot open " + kclass_file, kExitUsage);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        return fail("Usage", std::string("bad JSON: ") + e.what(), kExitUsage);
      }
      const auto rp = tc::recover_mn(tc::kclass_from_json(j));
      if (json_mode)
        std::cout << json{{"m", rp.small}, {"n", rp.large}}.dump() << "\n";
      else
        std::cout << "(" << rp.small << "," << rp.large << ")\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      std::vector<int> ranks;
      for (long r : parse_list(ranks_str, "--rank")) {
        if (r != 2 && r != 3) throw CLI::ValidationError("--rank", "ranks must be 2 or 3");
        ranks.push_back(static_cast<int>(r));
      }
      const auto report = tc::verify_grid(grid, ranks, ocfg);
      const json j = tc::grid_report_to_json(report);
      if (!out_path.empty()) write_atomic(out_path, j.dump(2) + "\n");
      if (json_mode) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::size_t total = 0, bad = 0;
        for (const auto& p : report.pairs)
          for (const auto& c : p.checks) {
            ++total;
            if (!c.ok) {
              ++bad;
              std::cout << "FAIL (" << p.m << "," << p.n << ") " << c.name << ": " << c.detail
                        << "\n";
            }
          }
        std::cout << report.pairs.size() << " pairs, " << total << " checks, " << bad
                  << " failures\n";
      }
      return report.ok() ? kExitOk : kExitFail;
    }
    if (*alex_cmd) {
      const auto a = tc::alexander(tc::KnotParams::make(m, n));
      if (json_mode)
        std::cout << tc::poly_to_json(a).dump() << "\n";
      else
        std::cout << a.str() << "\n";
      return kExitOk;
    }
    if (*curves_cmd) {
      const auto p = tc::KnotParams::make(m, n);
      std::vector<tc::CurveSpec> cs;
      if (*k_flag)
        cs.push_back(tc::boundary_curve(p, k_opt));
      else
        cs = tc::boundary_curves(p);
      if (json_mode) {
        json arr = json::array();
        for (const auto& c : cs) arr.push_back(tc::curve_to_json(c));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& c : cs)
          std::cout << "k=" << c.k << " c=" << std::setprecision(12) << c.c
                    << "  x^2y^2 " << std::showpos << c.c_cubes << "(x^3+y^3) " << c.c_xy
                    << "xy " << c.c_const << std::noshowpos << "  component ("
                    << c.component_key.first << "," << c.component_key.second << ")"
                    << (c.type2 ? " type2" : "") << "\n";
      }
      return kExitOk;
    }
    if (*qb_cmd) {
      const auto w = parse_list(weights_str, "--weights");
      const auto q = tc::quotient_basis(w, r_opt);
      const json j = tc::quotient_basis_to_json(w, r_opt, q);
      if (json_mode) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "mu_" << q.r << " acting with weights (";
        for (std::size_t i = 0; i < q.weights.size(); ++i) std::cout << (i ? "," : "") << q.weights[i];
        std::cout << ")\n";
        for (std::size_t row = 0; row < q.matrix.rows(); ++row) {
          std::cout << "u" << row + 1 << " =";
          for (std::size_t c = 0; c < q.matrix.cols(); ++c)
            if (q.matrix(row, c) != 0) std::cout << " t" << c + 1 << "^" << q.matrix(row, c).str();
          std::cout << "\n";
        }
      }
      return kExitOk;
    }
    if (*rep_cmd) {
      const auto p = tc::KnotParams::make(m, n);
      const tc::Orientation o = tc::Orientation::of(p);
      tc::RepConfig rcfg;
      rcfg.seed = settings.u64("seed");
      rcfg.samples = static_cast<int>(settings.u64("samples"));
      rcfg.fd_step = settings.real("fd_step");
      rcfg.rank_rel_tol = settings.real("rank_tol");
      rcfg.zero_tol = settings.real("zero_tol");
      std::mt19937_64 rng(rcfg.seed);
      json reports = json::array();
      auto report = [&](const tc::EigenLabel& l, int expected) {
        const auto M = tc::random_annulus_matrix(static_cast<Eigen::Index>(l.rank()), rng);
        const auto rep = tc::build_representation(l, o, M);
        const auto irr = tc::irreducibility_report(M, rcfg.zero_tol);
        const int dim = tc::component_dimension_estimate(l, o, rcfg);
        reports.push_back({{"label", tc::label_to_json(l)},
                           {"relation_residual", rep.relation_residual},
                           {"varpi_residual", rep.varpi_residual},
                           {"irreducible", irr.irreducible},
                           {"borderline", irr.borderline},
                           {"dim_estimate", dim},
                           {"expected_dim", expected},
                           {"samples", rcfg.samples}});
      };
      for (const auto& l : tc::enumerate_F(2, p, ocfg).labels) report(l, 1);
      for (const auto& l : tc::enumerate_F(3, p, ocfg).labels) report(l, 4);
      for (const auto& l : tc::enumerate_G(p, ocfg).labels) report(l, 2);
      bool ok = true;
      for (const auto& r : reports)
        ok = ok && r["dim_estimate"] == r["expected_dim"] && r["relation_residual"].get<double>() < 1e-9;
      if (json_mode) {
        std::cout << json{{"m", p.m()}, {"n", p.n()}, {"ok", ok}, {"reports", reports}}.dump(2)
                  << "\n";
      } else {
        for (const auto& r : reports)
          std::cout << pad(r["label"].dump(), 60) << " dim " << r["dim_estimate"] << "/"
                    << r["expected_dim"] << " residual " << r["relation_residual"]
                    << (r["irreducible"].get<bool>() ? "" : " reducible-sample") << "\n";
        std::cout << (ok ? "ok" : "MISMATCH") << "\n";
      }
      return ok ? kExitOk : kExitFail;
    }
  } catch (const CLI::ValidationError& e) {
    return fail("Usage", e.what(), kExitUsage);
  } catch (const tc::InvalidKnotParams& e) {
    return fail(e.code(), e.what(), kExitUsage);
  } catch (const tc::UnknotRejected& e) {
    return fail(e.code(), e.what(), kExitUsage);
  } catch (const tc::InvalidK& e) {
    return fail(e.code(), e.what(), kExitUsage);
  } catch (const tc::UnsupportedRank& e) {
    return fail(e.code(), e.what(), kExitUsage);
  } catch (const tc::Error& e) {
    return fail(e.code(), e.what(), kExitFail);
  } catch (const std::exception& e) {
    return fail("Internal", e.what(), kExitFail);
  }
  return kExitUsage;
}
