#pragma once

// Command-line front end. run() is the whole program; tools/bn2.cpp only
// forwards argv and the standard streams.

#include <bn2/basis.hpp>
#include <bn2/enumerative.hpp>
#include <bn2/export.hpp>
#include <bn2/relations.hpp>
#include <bn2/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bn2::cli {

enum ExitCode : int { Ok = 0, CheckFailed = 1, Usage = 2 };

namespace detail {

inline SchubertIndex to_index(const std::vector<int>& v) { return {v.at(0), v.at(1)}; }

/// Writes to --out when given, otherwise to `out`.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for codimension-two Brill-Noether classes", "bn2"};
  app.require_subcommand(1);

  int g = 0, k = 0, d = 0, i = 0, j = 0, k_max = 8;
  std::optional<int> g_opt, k_opt;
  std::vector<int> alpha, beta{0, 0};
  std::string format, path, check;

  const auto add_pair = [](CLI::App* cmd, const std::string& name, std::vector<int>& v, const std::string& help) {
    return cmd->add_option(name, v, help)->delimiter(',')->expected(2);
  };

  auto* counts = app.add_subcommand("counts", "Enumerative counts and relation right-hand-side sums");
  counts->require_subcommand(1);

  auto* c_n = counts->add_subcommand("n", "Pencils with a moving ramification point, n_{g,d,alpha}");
  auto* c_m = counts->add_subcommand("m", "Pencils with a moving ramification point, m_{g,d,alpha}");
  for (auto* c : {c_n, c_m}) {
    c->add_option("--g", g, "genus")->required();
    c->add_option("--d", d, "degree")->required();
    add_pair(c, "--alpha", alpha, "ramification a0,a1")->required();
  }
  auto* c_ell = counts->add_subcommand("ell", "Pencils with a triple ramification point, ell_{g,k}");
  c_ell->add_option("--g", g, "genus")->required();
  c_ell->add_option("--k", k, "degree")->required();
  auto* c_cast = counts->add_subcommand("castelnuovo", "Adjusted Castelnuovo number N_{g,d,alpha,beta}");
  c_cast->add_option("--g", g, "genus")->required();
  c_cast->add_option("--d", d, "degree")->required();
  add_pair(c_cast, "--alpha", alpha, "ramification at p, a0,a1")->required();
  add_pair(c_cast, "--beta", beta, "ramification at q, b0,b1 (default 0,0)");
  auto* c_T = counts->add_subcommand("T", "Sum T_i");
  auto* c_D = counts->add_subcommand("D", "Sum D_ij");
  auto* c_s16 = counts->add_subcommand("s16", "Sum appearing in the S16 relations");
  for (auto* c : {c_T, c_D, c_s16}) {
    c->add_option("--i", i, "index i")->required();
    c->add_option("--g", g, "genus")->required();
    c->add_option("--k", k, "pencil degree")->required();
  }
  c_D->add_option("--j", j, "index j")->required();

  auto* basis_cmd = app.add_subcommand("basis", "List the generators in export order");
  basis_cmd->add_option("--g", g, "genus (>= 5)")->required();
  basis_cmd->add_option("--format", format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
  basis_cmd->add_option("--out", path, "output file");

  auto* matrix_cmd = app.add_subcommand("matrix", "Export the relation system Q_g");
  matrix_cmd->add_option("--g", g, "genus (>= 5)")->required();
  matrix_cmd->add_option("--k", k_opt, "evaluate right-hand sides at this degree (needs g = 2k)");
  matrix_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  matrix_cmd->add_option("--out", path, "output file");

  auto* solve_cmd = app.add_subcommand("solve", "Solve Q_{2k} x = b_k for the class in genus 2k");
  solve_cmd->add_option("--k", k, "pencil degree (>= 3)")->required();
  solve_cmd->add_option("--format", format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
  solve_cmd->add_option("--out", path, "output file");

  auto* tmatrix_cmd = app.add_subcommand("tmatrix", "Export the column matrix T_g");
  tmatrix_cmd->add_option("--g", g, "genus (>= 6)")->required();
  tmatrix_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  tmatrix_cmd->add_option("--out", path, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check and print a JSON report");
  std::vector<std::string> check_choices = check_names();
  check_choices.push_back("all");
  verify_cmd->add_option("check", check, "check name or 'all'")->required()->check(CLI::IsMember(check_choices));
  verify_cmd->add_option("--k-max", k_max, "largest pencil degree for closed-form and pullback (default 8)");
  verify_cmd->add_option("--g", g_opt, "largest genus for nonsingular (default 2 * k-max)");
  verify_cmd->add_option("--out", path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "bn2: " << e.what() << "\n";
    return Usage;
  }

  try {
    if (counts->parsed()) {
      std::string value;
      if (c_n->parsed()) value = to_string(count_n(g, d, detail::to_index(alpha)));
      else if (c_m->parsed()) value = to_string(count_m(g, d, detail::to_index(alpha)));
      else if (c_ell->parsed()) value = to_string(count_ell(g, k));
      else if (c_cast->parsed())
        value = to_string(castelnuovo_N(g, d, detail::to_index(alpha), detail::to_index(beta)));
      else if (c_T->parsed()) value = to_string(sum_T(i, g, k));
      else if (c_D->parsed()) value = to_string(sum_D(i, j, g, k));
      else value = to_string(sum_S16(i, g, k));
      out << value << "\n";
      return Ok;
    }

    if (basis_cmd->parsed()) {
      const Basis b(g);
      std::string text;
      if (format == "json") {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& l : b.labels()) labels.push_back(to_string(l));
        text = nlohmann::json{{"g", g}, {"dimension", b.size()}, {"labels", labels}}.dump(2) + "\n";
      } else if (format == "csv") {
        text = csv_line({"index", "label"});
        for (std::size_t n = 0; n < b.size(); ++n) text += csv_line({std::to_string(n), to_string(b[n])});
      } else {
        for (const auto& l : b.labels()) text += to_string(l) + "\n";
      }
      detail::emit(text, path, out);
      return Ok;
    }

    if (matrix_cmd->parsed()) {
      const auto sys = build_relations(g);
      if (k_opt && g != 2 * *k_opt) {
        err << "bn2: --k " << *k_opt << " needs --g " << 2 * *k_opt << ", got " << g << "\n";
        return Usage;
      }
      detail::emit(format == "json" ? relations_json(sys, k_opt).dump(2) + "\n" : relations_csv(sys, k_opt), path, out);
      return Ok;
    }

    if (solve_cmd->parsed()) {
      if (k < 3) {
        err << "bn2: --k must be at least 3, got " << k << "\n";
        return Usage;
      }
      const auto cls = solve_class(k);
      std::string text;
      if (format == "json") text = class_json(cls).dump(2) + "\n";
      else if (format == "csv") text = class_csv(cls);
      else text = class_text(cls);
      detail::emit(text, path, out);
      return Ok;
    }

    if (tmatrix_cmd->parsed()) {
      const Basis b(g);
      const auto t = build_T(g);
      detail::emit(format == "json" ? labelled_matrix_json(b, t).dump(2) + "\n" : labelled_matrix_csv(b, t), path, out);
      return Ok;
    }

    if (verify_cmd->parsed()) {
      if (k_max < 3) {
        err << "bn2: --k-max must be at least 3, got " << k_max << "\n";
        return Usage;
      }
      const VerifyOptions opt{k_max, g_opt.value_or(std::max(6, 2 * k_max))};
      if (opt.g_max < 6) {
        err << "bn2: --g must be at least 6, got " << opt.g_max << "\n";
        return Usage;
      }
      nlohmann::json report;
      bool passed = true;
      if (check == "all") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : run_all_checks(opt)) {
          passed = passed && r.passed;
          checks.push_back(to_json(r));
        }
        report = {{"status", passed ? "pass" : "fail"}, {"checks", checks}};
      } else {
        const auto r = run_check(check, opt);
        passed = r.passed;
        report = to_json(r);
      }
      detail::emit(report.dump(2) + "\n", path, out);
      return passed ? Ok : CheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "bn2: " << e.what() << "\n";
    return Usage;
  } catch (const std::domain_error& e) {
    err << "bn2: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "bn2: " << e.what() << "\n";
    return CheckFailed;
  }
  return Usage;
}

}  // namespace bn2::cli
