// Command-line workbench: per-function analysis, table sweeps, and the
// self-verification suite (fixtures, builtin algorithms, star placement,
// the five-bit search).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "exactq/boolfn.hpp"
#include "exactq/complexity.hpp"
#include "exactq/extract.hpp"
#include "exactq/nonadaptive.hpp"
#include "exactq/refdata.hpp"
#include "exactq/sdp.hpp"
#include "exactq/simulate.hpp"
#include "exactq/table.hpp"

namespace {

using exactq::boolfn::BooleanFunction;

int failures = 0;

void report(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

BooleanFunction function_from_flags(int n, std::uint64_t id, const std::string& family, int k) {
  using exactq::boolfn::Family;
  using exactq::boolfn::from_family;
  if (family.empty()) return BooleanFunction::from_id(n, id);
  if (family == "parity") return from_family({Family::kParity, 0, {}}, n);
  if (family == "maj") return from_family({Family::kMaj, 0, {}}, n);
  if (family == "exact") return from_family({Family::kExact, k, {}}, n);
  if (family == "nae") return from_family({Family::kNae, 0, {}}, n);
  if (family == "th") return from_family({Family::kThreshold, k, {}}, n);
  if (family == "sel") return from_family({Family::kSel, 0, {}}, n);
  throw exactq::ParameterError("unknown family: " + family);
}

void run_fixture_checks() {
  for (auto [label, fixture] :
       {std::pair{std::string("function 7"), exactq::sdp::fixture_function7()},
        std::pair{std::string("function 67"), exactq::sdp::fixture_function67()}}) {
    auto f = BooleanFunction::from_id(3, std::stoull(fixture.function_id));
    auto inst = exactq::sdp::build_instance(f, fixture.t);
    auto rep = exactq::sdp::verify_solution(inst, fixture, 1e-9);
    report(rep.passes(1e-9) && fixture.eps == 0.0,
           label + " satisfies the program at 1e-9 (" + rep.summary() + ")");
    auto alg = exactq::extract::extract_algorithm(fixture, false);
    double worst = exactq::extract::success_profile(alg, f).minCoeff();
    report(worst >= 1.0 - 1e-8,
           label + " extracted algorithm exact on all inputs (min " + std::to_string(worst) + ")");
    auto reduced = exactq::extract::extract_algorithm(fixture, true);
    double worst_r = exactq::extract::success_profile(reduced, f).minCoeff();
    report(worst_r >= 1.0 - 1e-8, label + " rank-reduced extraction exact (workspace dim " +
                                      std::to_string(reduced.dim_work) + ")");
  }
}

void run_builtin_checks() {
  auto exact2 = exactq::sim::exact2_algorithm();
  auto f = exactq::boolfn::from_family({exactq::boolfn::Family::kExact, 2, {}}, 4);
  double worst = exactq::sim::min_success(exact2, f);
  report(worst >= 1.0 - 1e-12, "EXACT_2 builtin exact on all 16 inputs");
  for (int n : {4, 6, 8}) {
    auto pa = exactq::sim::balanced_algorithm(n);
    double w = exactq::sim::min_success(pa);
    report(w >= 1.0 - 1e-10, "balanced builtin exact on promise inputs, n=" + std::to_string(n));
  }
  auto parity2 = exactq::sim::parity2_algorithm();
  auto xor2 = BooleanFunction::from_id(2, 6);
  report(exactq::sim::min_success(parity2, xor2) >= 1.0 - 1e-12, "two-bit parity builtin exact");
}

void run_star_checks(int n) {
  const std::vector<exactq::refdata::TableTarget>* targets = nullptr;
  if (n == 2) targets = &exactq::refdata::two_bit_table();
  if (n == 3) targets = &exactq::refdata::three_bit_table();
  if (n == 4) targets = &exactq::refdata::four_bit_table();
  if (!targets) throw exactq::ParameterError("star cross-check available for n in {2,3,4}");
  bool all_ok = true;
  for (const auto& row : *targets) {
    auto f = BooleanFunction::from_id(n, row.id);
    int qna = exactq::na::q_na(f);
    for (std::size_t t = 1; t <= row.starred.size(); ++t) {
      bool expect = row.starred[t - 1];
      bool got = qna <= static_cast<int>(t);
      if (expect != got) {
        all_ok = false;
        std::printf("  star mismatch id=%llu t=%zu: table %d, q_na %d\n",
                    static_cast<unsigned long long>(row.id), t, int(expect), qna);
      }
    }
  }
  report(all_ok, "star placement matches q_na on the " + std::to_string(n) + "-bit table");
}

void run_five_bit_search(bool count_only, const exactq::sdp::SolverConfig& cfg, int jobs) {
  auto classes = exactq::complexity::two_query_four_bit_classes();
  std::printf("two-query classes: %zu\n", classes.size());
  auto candidates = exactq::complexity::five_bit_candidates(classes);
  std::printf("%zu candidates\n", candidates.size());
  report(candidates.size() == 13608, "candidate count equals 13608");
  if (count_only) return;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> hits{0};
  std::atomic<std::size_t> done{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= candidates.size()) return;
      try {
        auto sol =
            exactq::sdp::solve_min_error(exactq::sdp::build_instance(candidates[k], 2), cfg);
        if (1.0 - sol.eps > 0.999) {
          hits.fetch_add(1);
          std::printf("  two-query success above 0.999 for id %s\n",
                      candidates[k].id_string().c_str());
        }
      } catch (const exactq::SolverFailure& e) {
        std::printf("  solver failure on id %s: %s\n", candidates[k].id_string().c_str(),
                    e.what());
        hits.fetch_add(1);
      }
      std::size_t d = done.fetch_add(1) + 1;
      if (d % 500 == 0) std::fprintf(stderr, "  [%zu/%zu]\n", d, candidates.size());
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  report(hits.load() == 0, "no five-bit candidate reaches success above 0.999 with two queries");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum query complexity workbench"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyse a single function");
  int an_n = 3;
  std::uint64_t an_id = 0;
  std::string an_family;
  int an_k = 0, an_tmax = 0, an_jobs = 1;
  double an_tol = 0.0;
  std::string an_emit, an_format = "text";
  analyze->add_option("--n", an_n, "number of input bits")->required();
  analyze->add_option("--id", an_id, "function id (truth table read MSB-first)");
  analyze->add_option("--family", an_family, "parity|maj|exact|nae|th|sel");
  analyze->add_option("--k", an_k, "family parameter");
  analyze->add_option("--t", an_tmax, "largest query count (default n-1)");
  analyze->add_option("--tol", an_tol, "solver optimality tolerance");
  analyze->add_option("--emit", an_emit, "write the extracted algorithm JSON here");
  analyze->add_option("--format", an_format, "text|csv|md|json");

  auto* sweep = app.add_subcommand("sweep", "tabulate whole families of functions");
  int sw_n = 3, sw_jobs = 1, sw_tmax = 0;
  bool sw_sym = false, sw_progress = false;
  double sw_tol = 0.0, sw_time_limit = 600.0;
  std::string sw_format = "md";
  sweep->add_option("--n", sw_n, "number of input bits")->required();
  sweep->add_flag("--symmetric-only", sw_sym, "sweep symmetric classes only (n up to 6)");
  sweep->add_option("--t", sw_tmax, "largest query count (default n-1)");
  sweep->add_option("--format", sw_format, "csv|md|json");
  sweep->add_option("--jobs", sw_jobs, "parallel solves");
  sweep->add_option("--tol", sw_tol, "solver optimality tolerance");
  sweep->add_option("--time-limit", sw_time_limit, "per-instance seconds");
  sweep->add_flag("--progress", sw_progress, "progress lines on stderr");

  auto* verify = app.add_subcommand("verify", "run the self-checks");
  bool vf_fixtures = false, vf_builtins = false, vf_search = false, vf_count_only = false;
  int vf_stars = 0, vf_jobs = 1;
  double vf_tol = 0.0;
  verify->add_flag("--fixtures", vf_fixtures, "verify the shipped exact solutions");
  verify->add_flag("--builtins", vf_builtins, "check the builtin algorithms");
  verify->add_option("--stars", vf_stars, "cross-check stars against q_na for this n");
  verify->add_flag("--search-5bit", vf_search, "run the five-bit candidate pipeline");
  verify->add_flag("--count-only", vf_count_only, "stop after counting candidates");
  verify->add_option("--jobs", vf_jobs, "parallel solves");
  verify->add_option("--tol", vf_tol, "solver optimality tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    exactq::sdp::SolverConfig cfg = exactq::sdp::SolverConfig::from_environment();

    if (analyze->parsed()) {
      if (an_tol > 0) cfg.opt_tol = an_tol;
      auto f = function_from_flags(an_n, an_id, an_family, an_k);
      exactq::table::SweepOptions opt;
      opt.t_max = an_tmax;
      opt.solver = cfg;
      auto row = exactq::table::analyze_row(f, opt);
      std::vector<exactq::table::TableRow> rows{row};
      if (an_format == "csv")
        std::cout << exactq::table::render_csv(rows);
      else if (an_format == "md")
        std::cout << exactq::table::render_markdown(rows);
      else if (an_format == "json")
        std::cout << exactq::table::render_json(rows) << "\n";
      else {
        std::printf("id %s  n %d", row.id.c_str(), row.n);
        if (!row.name.empty()) std::printf("  (%s)", row.name.c_str());
        std::printf("\nD %d   real-degree/F2-degree via report: F2 %d   q_na %d\n", row.depth,
                    row.f2_degree, row.q_na);
        for (std::size_t t = 0; t < row.success.size(); ++t)
          std::printf("  %zu queries: %s\n", t + 1,
                      exactq::table::format_entry(row.success[t],
                                                  row.q_na <= static_cast<int>(t) + 1)
                          .c_str());
        if (f.is_symmetric()) {
          auto cls = exactq::na::classify_symmetric(f);
          const char* names[] = {"constant", "parity-like", "palindromic", "generic"};
          std::printf("  symmetric class: %s\n", names[static_cast<int>(cls.cls)]);
        }
      }
      if (!an_emit.empty() && !row.success.empty()) {
        int t_big = static_cast<int>(row.success.size());
        auto sol = exactq::sdp::solve_min_error(exactq::sdp::build_instance(f, t_big), cfg);
        auto alg = exactq::extract::extract_algorithm(sol, true);
        std::ofstream out(an_emit);
        out << exactq::to_json(alg) << "\n";
        std::printf("wrote %d-query algorithm to %s\n", t_big, an_emit.c_str());
      }
      return 0;
    }

    if (sweep->parsed()) {
      if (sw_tol > 0) cfg.opt_tol = sw_tol;
      cfg.time_limit_seconds = sw_time_limit;
      exactq::table::SweepOptions opt;
      opt.t_max = sw_tmax;
      opt.solver = cfg;
      opt.jobs = sw_jobs;
      opt.progress = sw_progress;
      auto rows = sw_sym ? exactq::table::sweep_symmetric(sw_n, opt)
                         : exactq::table::sweep_classes(sw_n, opt);
      if (sw_format == "csv")
        std::cout << exactq::table::render_csv(rows);
      else if (sw_format == "json")
        std::cout << exactq::table::render_json(rows) << "\n";
      else
        std::cout << exactq::table::render_markdown(rows);
      return 0;
    }

    if (verify->parsed()) {
      if (vf_tol > 0) cfg.opt_tol = vf_tol;
      if (!vf_fixtures && !vf_builtins && !vf_search && vf_stars == 0) {
        vf_fixtures = vf_builtins = true;
      }
      if (vf_fixtures) run_fixture_checks();
      if (vf_builtins) run_builtin_checks();
      if (vf_stars > 0) run_star_checks(vf_stars);
      if (vf_search) run_five_bit_search(vf_count_only, cfg, vf_jobs);
      if (failures) std::printf("%d check(s) failed\n", failures);
      return failures ? 1 : 0;
    }
  } catch (const exactq::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
