#include "CLI11.hpp"

#include "ahg/frobenius.hpp"
#include "ahg/groebner.hpp"
#include "ahg/report.hpp"

#include <fstream>
#include <iostream>

namespace {

struct GlobalOpts {
  std::string output = "text";
  long radius = -1;
  std::string weight_cap;
  long degree_cap = -1;
  std::uint64_t seed = 0;
};

ahg::ProblemConfig load_with_overrides(const std::string& path,
                                       const GlobalOpts& g) {
  ahg::ProblemConfig cfg = ahg::load_config(path);
  if (g.radius >= 1) cfg.radius = static_cast<int>(g.radius);
  if (!g.weight_cap.empty()) cfg.weight_cap = ahg::parse_rat(g.weight_cap);
  if (g.degree_cap >= 0) cfg.degree_cap = static_cast<int>(g.degree_cap);
  return cfg;
}

void emit(const ahg::Json& report, const GlobalOpts& g) {
  if (g.output == "structured")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << ahg::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius-method solver for A-hypergeometric systems"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--output", g.output, "Report form: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--radius", g.radius, "Lattice enumeration radius");
  app.add_option("--weight-cap", g.weight_cap,
                 "Series truncation weight W_max (rational)");
  app.add_option("--degree-cap", g.degree_cap, "Dual-space degree cap");
  app.add_option("--seed", g.seed, "Random seed for search/selftest");

  std::string config_path;
  ahg::SolveOptions solve_opts;
  ahg::SufficiencyOptions suff_opts;
  ahg::SearchBounds bounds;
  int plot_exponent = -1;
  std::string plot_out;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Groebner basis, standard pairs, fake exponents, supports, "
                 "ideals and indicial data");
  analyze->add_option("config", config_path, "Problem config file")
      ->required();

  CLI::App* solve = app.add_subcommand(
      "solve", "Construct truncated logarithmic series solutions");
  solve->add_option("config", config_path, "Problem config file")->required();
  solve->add_option("--exponent", solve_opts.exponent,
                    "1-based fake-exponent index (default: all class "
                    "representatives)");
  solve->add_option("--method", solve_opts.method,
                    "extended (t-perturbation) or lperturb (s-perturbation)")
      ->check(CLI::IsMember({"extended", "lperturb"}));
  solve->add_option("--q", solve_opts.q,
                    "Perturbation polynomial, or \"spanning\"");
  solve->add_option("--nprime", solve_opts.nprime,
                    "Support family N': nv, n, i0, or explicit \"1,3;2,4\"");

  CLI::App* verify = app.add_subcommand(
      "verify", "Construct series and check the coefficient system exactly");
  verify->add_option("config", config_path, "Problem config file")->required();
  verify->add_option("--exponent", solve_opts.exponent,
                     "1-based fake-exponent index");
  verify->add_option("--method", solve_opts.method, "extended or lperturb")
      ->check(CLI::IsMember({"extended", "lperturb"}));
  verify->add_option("--q", solve_opts.q,
                     "Perturbation polynomial, or \"spanning\"");
  verify->add_option("--nprime", solve_opts.nprime, "Support family N'");

  CLI::App* suff = app.add_subcommand("check-sufficiency",
                                      "Sufficiency tests for the "
                                      "lattice-perturbation method");
  suff->add_option("config", config_path, "Problem config file")->required();
  suff->add_option("--exponent", suff_opts.exponent,
                   "1-based fake-exponent index");
  suff->add_option("--nprime", suff_opts.nprime, "Support family N'");
  suff->add_option("--nsecond", suff_opts.nsecond,
                   "Support family N'' (default: N')");

  CLI::App* search = app.add_subcommand(
      "search", "Random sweep hunting for sufficiency counterexamples");
  search->add_option("--count", bounds.count, "Number of instances");
  search->add_option("--max-d", bounds.max_d, "Maximum number of rows of A");
  search->add_option("--max-n", bounds.max_n,
                     "Maximum number of columns of A");
  search->add_option("--entry-bound", bounds.entry_bound,
                     "Bound on |A| entries below the all-ones row");
  search->add_option("--beta-bound", bounds.beta_bound,
                     "Bound on |beta| entries");

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the module property suites");

  CLI::App* plot = app.add_subcommand(
      "plot", "SVG picture of the rank-2 lattice regions");
  plot->add_option("config", config_path, "Problem config file")->required();
  plot->add_option("--exponent", plot_exponent, "1-based fake-exponent index");
  plot->add_option("--out", plot_out, "Output file (default: stdout)");

  for (CLI::App* sub : {analyze, solve, verify, suff, search, selftest, plot})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      emit(ahg::run_analyze(load_with_overrides(config_path, g)), g);
    } else if (solve->parsed() || verify->parsed()) {
      ahg::Json rep =
          ahg::run_solve(load_with_overrides(config_path, g), solve_opts);
      if (verify->parsed()) rep["command"] = "verify";
      emit(rep, g);
      if (rep["violations_total"].get<int>() > 0) {
        std::cerr << "error: series verification found violations\n";
        return 2;
      }
    } else if (suff->parsed()) {
      emit(ahg::run_check_sufficiency(load_with_overrides(config_path, g),
                                      suff_opts),
           g);
    } else if (search->parsed()) {
      if (g.radius >= 1) bounds.radius = static_cast<int>(g.radius);
      emit(ahg::run_search(g.seed, bounds), g);
    } else if (selftest->parsed()) {
      ahg::Json rep = ahg::run_selftest(g.seed);
      emit(rep, g);
      if (!rep["passed"].get<bool>()) {
        std::cerr << "error: selftest failed\n";
        return 2;
      }
    } else if (plot->parsed()) {
      std::string svg = ahg::emit_region_plot(
          load_with_overrides(config_path, g), plot_exponent);
      if (plot_out.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(plot_out);
        if (!out) throw ahg::config_error("cannot write: " + plot_out);
        out << svg;
      }
    }
  } catch (const ahg::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
