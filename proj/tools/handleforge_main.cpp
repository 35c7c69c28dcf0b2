// handleforge: sweep-verify the bending-handle estimates and emit CSV/JSON
// reports.  Exit codes: 0 all requested checks pass, 1 a check failed,
// 2 bad flags/domain.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "handleforge/acceptance.hpp"
#include "handleforge/conformal.hpp"
#include "handleforge/estimates.hpp"
#include "handleforge/flow.hpp"
#include "handleforge/mass.hpp"
#include "handleforge/monotonicity.hpp"

namespace {

struct Options {
  double rho = 0.01;
  std::vector<double> rho_grid;
  int k = 3;
  int n = 5;
  double alpha = 1.0 / 3.0;
  double kappa = 0.0;
  double R = 0.5;
  double tol = 1e-9;
  std::string out;
  std::string format = "csv";
  int jobs = 0;
};

int default_jobs() {
  if (const char* env = std::getenv("HANDLE_FORGE_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return int(std::thread::hardware_concurrency());
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
  }
}

void fail_report(const std::string& what) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["error"] = what;
  std::cerr << j.dump() << std::endl;
}

std::vector<double> grid_or(const Options& opt, std::vector<double> fallback) {
  return opt.rho_grid.empty() ? fallback : opt.rho_grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"handleforge: curvature toolkit for bending-handle hypersurfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  opt.jobs = default_jobs();
  app.add_option("--rho", opt.rho, "handle scale in (0, 1/10]");
  app.add_option("--rho-grid", opt.rho_grid, "explicit rho grid")->delimiter(',');
  app.add_option("--k", opt.k, "codimension (>= 2)");
  app.add_option("--n", opt.n, "ambient dimension (>= 3)");
  app.add_option("--alpha", opt.alpha, "conformal cutoff width in (0, 1/3]");
  app.add_option("--kappa", opt.kappa, "boundary mean-curvature target");
  app.add_option("--R", opt.R, "tube radius in (0, 2/sqrt(10)]");
  app.add_option("--tol", opt.tol, "tolerance override");
  app.add_option("--out", opt.out, "output file (default: stdout)");
  app.add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", opt.jobs, "parallelism degree (default: HANDLE_FORGE_JOBS or hw)");

  auto* cmd_profile = app.add_subcommand("profile", "sample xi/f/curvatures along a handle");
  auto* cmd_verify = app.add_subcommand("verify-prop", "sweep the five handle estimates");
  auto* cmd_lengths = app.add_subcommand("lengths", "d_rho bounds and derivative margins");
  auto* cmd_monotone = app.add_subcommand("monotone", "Euclidean monotonicity FD sweep");
  auto* cmd_conformal = app.add_subcommand("conformal", "flat-model conformal estimates");
  auto* cmd_flow = app.add_subcommand("flow", "quasi-spherical flow trajectory");
  auto* cmd_mass = app.add_subcommand("mass", "constant stack and DEC jump margins");
  auto* cmd_pimple = app.add_subcommand("pimple", "many-tiny-spheres example bounds");
  auto* cmd_accept = app.add_subcommand("accept", "run the full acceptance suite");

  double flow_u0 = 0.5, flow_s = 0.0, pimple_K = 1.0;
  std::string accept_grid = "default";
  cmd_flow->add_option("--u0", flow_u0, "initial lapse (> 0)");
  cmd_flow->add_option("--s", flow_s, "prescribed scalar curvature bound");
  cmd_pimple->add_option("--K", pimple_K, "target total mean curvature");
  cmd_accept->add_option("--grid", accept_grid, "grid preset (default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_profile->parsed()) {
      hf::HandleParams p{opt.rho, opt.k, std::max(opt.n, opt.k), opt.alpha, opt.kappa, opt.R};
      hf::Handle handle = hf::Handle::build(p);
      if (opt.format == "json") {
        emit(opt, handle.to_json());
      } else {
        std::string csv = "tau,r,t,segment,lambda1,lambda2,H,normA,scal,nu_t,nu_tan\n";
        for (const auto& s : handle.sample()) {
          csv += hf::format_float(s.tau) + "," + hf::format_float(s.r) + "," +
                 hf::format_float(s.t) + "," + hf::segment_tag_name(s.tag) + "," +
                 hf::format_float(s.point.lambda1) + "," + hf::format_float(s.point.lambda2) +
                 "," + hf::format_float(s.point.H) + "," + hf::format_float(s.point.normA) +
                 "," + hf::format_float(s.point.scal) + "," + hf::format_float(s.point.nu_t) +
                 "," + hf::format_float(s.point.nu_tan) + "\n";
        }
        emit(opt, csv);
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      const auto grid = grid_or(opt, {0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001});
      std::vector<hf::HandleParams> cells;
      for (double rho : grid) {
        for (int k = 2; k <= 7; ++k) {
          hf::HandleParams p;
          p.rho = rho;
          p.k = k;
          p.n = std::max(k, 3);
          p.R = std::min(opt.R, 2.0 / std::sqrt(10.0));
          cells.push_back(p);
        }
      }
      // worker pool over parameter cells; merge stays in cell order
      std::vector<std::array<hf::MarginReport, 5>> results(cells.size());
      const int jobs = std::max(1, opt.jobs);
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
          for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            results[i] = hf::check_prop_euclidean(cells[i]);
        });
      for (auto& th : pool) th.join();
      std::vector<hf::MarginReport> reports;
      bool all = true;
      for (const auto& cell : results)
        for (const auto& r : cell) {
          reports.push_back(r);
          all = all && r.pass;
        }
      emit(opt, opt.format == "json" ? hf::margin_reports_json(reports)
                                     : hf::margin_reports_csv(reports));
      if (!all) fail_report("verify-prop: at least one margin non-positive");
      return all ? 0 : 1;
    }

    if (cmd_lengths->parsed()) {
      const auto grid = grid_or(opt, {0.05, 0.02, 0.01, 0.005, 0.002, 0.001});
      const auto reports = hf::check_length_bounds(grid, opt.R);
      std::vector<hf::MarginReport> v(reports.begin(), reports.end());
      emit(opt, opt.format == "json" ? hf::margin_reports_json(v) : hf::margin_reports_csv(v));
      const bool all = reports[0].pass && reports[1].pass;
      if (!all) fail_report("lengths: bound failed (see report)");
      return all ? 0 : 1;
    }

    if (cmd_monotone->parsed()) {
      const double rho1 = opt.rho;
      const auto grid = grid_or(opt, {rho1, 0.8 * rho1, 0.6 * rho1, 0.4 * rho1, 0.25 * rho1});
      hf::MonoReport rep = hf::check_monotone_euclidean(rho1, grid, 400, opt.R, 0.5, true);
      std::string csv = "rho,tau,entry,margin\n";
      for (const auto& row : rep.rows)
        csv += hf::format_float(row[0]) + "," + hf::format_float(row[1]) + "," +
               (row[2] == 0.0 ? "dtau2" : "warp") + "," + hf::format_float(row[3]) + "\n";
      emit(opt, csv);
      if (!rep.pass) fail_report("monotone: FD check failed (min " + std::to_string(rep.min_fd) + ")");
      return rep.pass ? 0 : 1;
    }

    if (cmd_conformal->parsed()) {
      hf::HandleParams p{opt.rho, opt.k, std::max(opt.n, opt.k), opt.alpha,
                         opt.kappa > 0.0 ? opt.kappa : 0.05, opt.R};
      const hf::FlatTheoremReport rep = hf::theorem_flat_check(p);
      std::vector<hf::MarginReport> v = {rep.H_margin, rep.scal_margin, rep.inner_H};
      emit(opt, opt.format == "json" ? hf::margin_reports_json(v) : hf::margin_reports_csv(v));
      const bool all = rep.H_margin.pass && rep.scal_margin.pass && rep.inner_H.pass;
      if (!all) fail_report("conformal: margin failed");
      return all ? 0 : 1;
    }

    if (cmd_flow->parsed()) {
      hf::RoundPath path{std::max(opt.n, 2), [](double t) { return 1.0 + t; },
                         [](double) { return 1.0; }, [](double) { return 0.0; }, flow_s};
      const hf::FlowTrajectory traj = hf::solve_u(path, flow_u0, opt.tol);
      emit(opt, hf::flow_csv(path, traj));
      const auto rep = hf::check_monotone(path, traj);
      if (!rep.pass) fail_report("flow: TMC not strictly increasing");
      return rep.pass ? 0 : 1;
    }

    if (cmd_mass->parsed()) {
      const double kap = opt.kappa != 0.0 ? opt.kappa : -1.0;
      const hf::MassConstants mc = hf::build_constants(opt.n, -6.0, -6.0, kap);
      std::vector<double> grid(401);
      for (int i = 0; i <= 400; ++i) grid[i] = kap + (10.0 - kap) * i / 400.0;
      const hf::MarginReport dec = hf::dec_jump_check(kap, grid);
      nlohmann::json j;
      j["schema_version"] = 1;
      j["inputs"] = {{"n", opt.n}, {"sigma0", -6.0}, {"sigma1", -6.0}, {"kappa", kap}};
      j["constants"] = {{"c0", mc.c0}, {"c1", mc.c1}, {"c2", mc.c2},
                        {"sigma2", mc.sigma2}, {"K", mc.K}};
      j["bounds"] = {{"hyp_sphere_H_r0_1", hf::hyp_sphere_H(opt.n, mc.sigma2, 1.0)},
                     {"dec_min_margin", dec.min_margin}};
      j["pass"] = dec.pass;
      emit(opt, j.dump(2));
      if (!dec.pass) fail_report("mass: DEC jump margin non-positive");
      return dec.pass ? 0 : 1;
    }

    if (cmd_pimple->parsed()) {
      const hf::PimpleConfig cfg = hf::pimple(opt.n, pimple_K);
      nlohmann::json j;
      j["schema_version"] = 1;
      j["inputs"] = {{"n", cfg.n}, {"K", cfg.K}};
      j["constants"] = {{"c_n", cfg.c_n}, {"ell", cfg.ell}, {"r", cfg.r}};
      j["bounds"] = {{"tmc_lb", cfg.tmc_lb}, {"vol_ub", cfg.vol_ub}, {"diam_ub", cfg.diam_ub}};
      j["pass"] = true;  // pimple() asserts the bounds
      emit(opt, j.dump(2));
      return 0;
    }

    if (cmd_accept->parsed()) {
      const auto results = hf::run_acceptance();
      const int rc = hf::print_acceptance(results);
      if (!opt.out.empty()) emit(opt, hf::acceptance_json(results));
      if (rc != 0) fail_report("accept: at least one criterion failed");
      return rc;
    }
  } catch (const std::domain_error& e) {
    fail_report(e.what());
    return 2;
  } catch (const std::exception& e) {
    fail_report(e.what());
    return 1;
  }
  return 2;
}
