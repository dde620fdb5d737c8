// Command-line front end: amplitudes, operator sets, the property suite,
// the printed-table comparison, limit reductions, and the measurement
// simulator. Every subcommand prints either JSON (--output json) or a
// plain-text table, and exits 0 on success, 1 on usage or config errors,
// 2 when a verification or comparison fails, 3 on internal errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinphase/spinphase.hpp"

namespace sp = spinphase;

namespace {

sp::direction parse_direction_arg(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw sp::invalid_config_error("expected 'theta,phi' but got '" + text + "'");
  }
  return sp::direction(sp::parse_angle(text.substr(0, comma)),
                       sp::parse_angle(text.substr(comma + 1)));
}

std::vector<sp::direction> parse_chain_arg(const std::string& text) {
  std::vector<sp::direction> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(start, end - start);
    if (!part.empty()) out.push_back(parse_direction_arg(part));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (out.empty()) {
    throw sp::invalid_config_error("chain is empty");
  }
  return out;
}

sp::angle_grid parse_grid_arg(const std::string& text) {
  if (text == "default") return sp::default_grid();
  if (text == "uniform") return sp::uniform_grid();
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      const unsigned long n = std::stoul(text.substr(prefix.size()));
      if (n > 0) return sp::random_grid(n);
    } catch (const std::logic_error&) {
    }
  }
  throw sp::invalid_config_error("unknown grid '" + text +
                                 "' (expected default, uniform, or random:<n>)");
}

std::string fmt_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt_res(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fmt_c(const sp::cplx& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%+.9g%+.9gi", z.real(), z.imag());
  return buf;
}

std::string fmt_dir(const sp::direction& d) {
  return "(theta=" + fmt_num(d.theta) + ", phi=" + fmt_num(d.phi) + ")";
}

void print_matrix(std::ostream& os, const std::string& name, const sp::mat2c& m) {
  os << name << ":\n";
  os << "  [ " << fmt_c(m.m11) << "  " << fmt_c(m.m12) << " ]\n";
  os << "  [ " << fmt_c(m.m21) << "  " << fmt_c(m.m22) << " ]\n";
}

void print_vector(std::ostream& os, const std::string& name, const sp::vec2c& v) {
  os << name << ": ( " << fmt_c(v.x) << ", " << fmt_c(v.y) << " )\n";
}

void print_amplitudes_table(std::ostream& os, const sp::amplitude_matrix& m) {
  os << "amplitudes from " << fmt_dir(m.from) << " to " << fmt_dir(m.to)
     << " under the " << m.convention.name() << " convention\n";
  print_matrix(os, "psi", m.psi);
  const auto p = probabilities(m);
  os << "probabilities:\n";
  os << "  [ " << fmt_num(p[0][0]) << "  " << fmt_num(p[0][1]) << " ]\n";
  os << "  [ " << fmt_num(p[1][0]) << "  " << fmt_num(p[1][1]) << " ]\n";
}

void print_operator_table(std::ostream& os, const sp::operator_set& ops,
                          const std::string& component) {
  os << "operators for b " << fmt_dir(ops.b) << ", c " << fmt_dir(ops.c)
     << " under the " << ops.convention.name() << " convention\n";
  const bool all = component == "all";
  if (all || component == "z") {
    print_matrix(os, "sigma_c", ops.sigma_c);
    print_vector(os, "eig_c_plus", ops.eig_c_plus);
    print_vector(os, "eig_c_minus", ops.eig_c_minus);
  }
  if (all || component == "x") {
    print_matrix(os, "sigma_x", ops.sigma_x);
    print_vector(os, "eig_x_plus", ops.eig_x_plus);
    print_vector(os, "eig_x_minus", ops.eig_x_minus);
  }
  if (all || component == "y") {
    print_matrix(os, "sigma_y", ops.sigma_y);
    print_vector(os, "eig_y_plus", ops.eig_y_plus);
    print_vector(os, "eig_y_minus", ops.eig_y_minus);
  }
  if (all || component == "ladder") {
    print_matrix(os, "sigma_plus", ops.sigma_plus);
    print_matrix(os, "sigma_minus", ops.sigma_minus);
  }
}

void print_verify_table(std::ostream& os, const sp::verify_report& rep) {
  os << "property suite: seed " << rep.config.seed << ", " << rep.config.samples
     << " samples, tolerance " << fmt_res(rep.config.tolerance) << "\n";
  for (const auto& r : rep.results) {
    os << "  [" << (r.passed ? "PASS" : "FAIL") << "] " << r.name << " (value "
       << fmt_res(r.value) << (r.lower_bound ? " >= floor " : " <= tol ")
       << fmt_res(r.bound) << ", " << r.cases << " cases)\n";
    if (!r.witness.empty()) {
      os << "         worst at " << r.witness << "\n";
    }
  }
  os << (rep.all_passed() ? "all invariants hold\n" : "INVARIANT FAILURE\n");
}

void print_compare_table(std::ostream& os, const sp::comparison_report& rep) {
  os << "printed-table comparison on grid '" << rep.grid_label << "' at tolerance "
     << fmt_res(rep.tolerance) << "\n";
  for (const auto& e : rep.entries) {
    os << "  " << (e.verdict == sp::formula_verdict::match ? "Match    " : "Mismatch ")
       << e.formula_id << " (max residual " << fmt_res(e.max_residual);
    if (e.has_correction) {
      os << ", corrected " << fmt_res(e.corrected_max_residual);
    }
    os << ")\n";
  }
  const auto mismatches = rep.mismatch_ids();
  os << mismatches.size() << " mismatches across " << rep.entries.size()
     << " formulas\n";
}

void print_limit_table(std::ostream& os, const sp::limit_report& rep) {
  os << rep.limit << " limit under the " << rep.convention << " convention over "
     << rep.points << " directions\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.name << ": " << fmt_res(c.max_residual) << "\n";
  }
  os << "max residual " << fmt_res(rep.max_residual()) << " (tolerance "
     << fmt_res(rep.tolerance) << "): " << (rep.passed() ? "pass" : "FAIL") << "\n";
}

void print_azimuth_table(std::ostream& os, const sp::azimuth_scan& scan) {
  os << "pole azimuth scan under the " << scan.convention << " convention ("
     << scan.scan_points << " points)\n";
  os << "  best phi " << fmt_num(scan.best_phi) << " with residual "
     << fmt_res(scan.best_residual) << "\n";
  os << "  predicted phi " << fmt_num(scan.predicted_phi) << " with residual "
     << fmt_res(scan.predicted_residual) << "\n";
  os << "  shared phase " << fmt_c(scan.global_phase) << " (spread "
     << fmt_res(scan.phase_spread) << ")\n";
}

void print_sim_table(std::ostream& os, const sp::sim_result& res) {
  os << "simulation: " << res.config.shots << " shots, seed " << res.config.seed
     << ", " << res.config.convention.name() << " convention\n";
  os << "prepare " << fmt_dir(res.config.prepare) << " as "
     << (res.config.initial == sp::outcome::up ? "up" : "down") << ", chain of "
     << res.config.chain.size() << " steps\n";
  for (const auto& p : res.paths) {
    os << "  " << p.path << "  count " << p.count << "  predicted "
       << fmt_num(p.predicted) << "  empirical " << fmt_num(p.empirical) << "\n";
  }
  os << "max |empirical - predicted| " << fmt_res(res.max_abs_error) << " ("
     << fmt_num(res.max_sigma) << " sigma)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized spin-1/2 amplitudes, operators, and checks"};
  app.require_subcommand(1);
  // Global options may appear before or after the subcommand name.
  app.fallthrough();

  std::string output = "table";
  double tol = sp::default_tolerance;
  std::string conv_name = "new";
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--tol", tol, "numeric tolerance");
  app.add_option("--convention", conv_name, "old, new, or custom:<a>,<b>");

  int rc = 0;
  const auto json_mode = [&output] { return output == "json"; };

  auto* cmd_amp = app.add_subcommand("amplitudes", "transition amplitude matrix");
  std::string amp_from, amp_to;
  cmd_amp->add_option("--from", amp_from, "initial direction theta,phi")->required();
  cmd_amp->add_option("--to", amp_to, "final direction theta,phi")->required();
  cmd_amp->callback([&] {
    const sp::amplitude_matrix m = sp::transition_amplitudes(
        parse_direction_arg(amp_from), parse_direction_arg(amp_to),
        sp::parse_convention(conv_name));
    if (json_mode()) {
      std::cout << sp::to_json_text(m);
    } else {
      print_amplitudes_table(std::cout, m);
    }
  });

  auto* cmd_op = app.add_subcommand("operator", "spin component operators");
  std::string op_b, op_c, op_component = "all";
  cmd_op->add_option("--b", op_b, "reference direction theta,phi")->required();
  cmd_op->add_option("--c", op_c, "component direction theta,phi")->required();
  cmd_op->add_option("--component", op_component, "z, x, y, ladder, or all")
      ->check(CLI::IsMember({"z", "x", "y", "ladder", "all"}));
  cmd_op->callback([&] {
    const sp::operator_set ops = sp::build_operator_set(
        parse_direction_arg(op_b), parse_direction_arg(op_c),
        sp::parse_convention(conv_name), tol);
    if (json_mode()) {
      std::cout << sp::to_json_text(ops);
    } else {
      print_operator_table(std::cout, ops, op_component);
    }
  });

  auto* cmd_verify = app.add_subcommand("verify", "run the property suite");
  sp::verify_config vcfg;
  std::string verify_report_path;
  cmd_verify->add_option("--seed", vcfg.seed, "generator seed")
      ->envname("SPINPHASE_SEED");
  cmd_verify->add_option("--samples", vcfg.samples, "random samples per invariant");
  cmd_verify->add_option("--report", verify_report_path,
                         "also write the JSON report to this path");
  cmd_verify->callback([&] {
    vcfg.tolerance = tol;
    const sp::verify_report rep = sp::run_suite(vcfg);
    if (!verify_report_path.empty()) {
      std::ofstream out(verify_report_path);
      if (!out) {
        throw sp::invalid_config_error("cannot write report to '" +
                                       verify_report_path + "'");
      }
      out << sp::to_json_text(rep);
    }
    if (json_mode()) {
      std::cout << sp::to_json_text(rep);
    } else {
      print_verify_table(std::cout, rep);
    }
    if (!rep.all_passed()) rc = 2;
  });

  auto* cmd_cmp = app.add_subcommand("compare-paper",
                                     "score the printed tables against the construction");
  std::string grid_name = "default";
  cmd_cmp->add_option("--grid", grid_name, "default, uniform, or random:<n>");
  cmd_cmp->callback([&] {
    const sp::comparison_report rep = sp::compare_all(parse_grid_arg(grid_name), tol);
    if (json_mode()) {
      std::cout << sp::to_json_text(rep);
    } else {
      print_compare_table(std::cout, rep);
    }
    if (rep.mismatch_ids() != sp::documented_typos()) rc = 2;
  });

  auto* cmd_reduce = app.add_subcommand("reduce", "limit reductions");
  std::string limit_name;
  cmd_reduce->add_option("--limit", limit_name, "pauli, standard, or azimuth")
      ->required()
      ->check(CLI::IsMember({"pauli", "standard", "azimuth"}));
  cmd_reduce->callback([&] {
    if (limit_name == "azimuth") {
      const sp::azimuth_scan scan =
          sp::best_standard_azimuth(sp::parse_convention(conv_name));
      if (json_mode()) {
        std::cout << sp::to_json_text(scan);
      } else {
        print_azimuth_table(std::cout, scan);
      }
      if (scan.predicted_residual > tol) rc = 2;
      return;
    }
    const sp::limit_report rep =
        limit_name == "pauli"
            ? sp::pauli_limit(sp::parse_convention(conv_name), tol)
            : sp::standard_generalized_limit(tol);
    if (json_mode()) {
      std::cout << sp::to_json_text(rep);
    } else {
      print_limit_table(std::cout, rep);
    }
    if (!rep.passed()) rc = 2;
  });

  auto* cmd_sim = app.add_subcommand("simulate", "measurement chain sampler");
  std::string sim_file, sim_prepare, sim_chain;
  sp::sim_config scfg;
  auto* opt_file = cmd_sim->add_option("--config", sim_file, "JSON config file");
  auto* opt_prep =
      cmd_sim->add_option("--prepare", sim_prepare, "preparation direction theta,phi");
  auto* opt_chain = cmd_sim->add_option(
      "--chain", sim_chain, "measurement directions theta,phi;theta,phi;...");
  std::string sim_initial = "up";
  cmd_sim->add_option("--initial", sim_initial, "prepared outcome, up or down")
      ->check(CLI::IsMember({"up", "down"}));
  cmd_sim->add_option("--shots", scfg.shots, "shots to draw");
  cmd_sim->add_option("--seed", scfg.seed, "generator seed")->envname("SPINPHASE_SEED");
  opt_file->excludes(opt_prep);
  opt_file->excludes(opt_chain);
  cmd_sim->callback([&] {
    sp::sim_config cfg;
    if (!sim_file.empty()) {
      std::ifstream in(sim_file);
      if (!in) {
        throw sp::invalid_config_error("cannot open config file '" + sim_file + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      cfg = sp::sim_config_from_json(buffer.str());
      if (cmd_sim->count("--shots") > 0) cfg.shots = scfg.shots;
      if (cmd_sim->count("--seed") > 0) cfg.seed = scfg.seed;
      if (cmd_sim->count("--initial") > 0) cfg.initial = sp::parse_outcome(sim_initial);
    } else {
      if (sim_prepare.empty() || sim_chain.empty()) {
        throw sp::invalid_config_error("simulate needs --config or --prepare and --chain");
      }
      cfg = scfg;
      cfg.prepare = parse_direction_arg(sim_prepare);
      cfg.initial = sp::parse_outcome(sim_initial);
      cfg.chain = parse_chain_arg(sim_chain);
      cfg.convention = sp::parse_convention(conv_name);
    }
    const sp::sim_result res = sp::run_simulation(cfg);
    if (json_mode()) {
      std::cout << sp::to_json_text(res);
    } else {
      print_sim_table(std::cout, res);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const sp::invalid_config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
