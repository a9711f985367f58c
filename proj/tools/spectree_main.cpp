// Command-line front end: spectra of constructed families and ingested
// graphs, isomorph-free enumeration, and the per-theorem verification
// sweeps. Exit codes: 0 pass, 1 violations found, 2 usage/input error,
// 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "spectree/enumerate.hpp"
#include "spectree/error.hpp"
#include "spectree/graph6.hpp"
#include "spectree/report_io.hpp"
#include "spectree/spectrum.hpp"
#include "spectree/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int default_threads() {
  if (const char* env = std::getenv("SPECTREE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct OutputOptions {
  std::string format = "text";
  bool no_timing = false;
};

void print_report(const spectree::VerificationReport& report,
                  const OutputOptions& out) {
  std::cout << spectree::emit_report(
      report, spectree::parse_report_format(out.format), !out.no_timing);
}

int report_exit(const std::vector<spectree::VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kExitViolations;
  return kExitPass;
}

// Runs tasks across a fixed-size pool; results keep task order, so output
// is byte-identical for every thread count.
std::vector<spectree::VerificationReport> run_tasks(
    const std::vector<std::function<spectree::VerificationReport()>>& tasks,
    int threads) {
  std::vector<spectree::VerificationReport> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::mutex next_mutex;
  size_t next = 0;
  auto worker = [&]() {
    while (true) {
      size_t index;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= tasks.size()) return;
        index = next++;
      }
      try {
        results[index] = tasks[index]();
      } catch (const spectree::Error& e) {
        errors[index] = e.what();
      }
    }
  };
  const int pool = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> workers;
  for (int i = 0; i < pool; ++i) workers.emplace_back(worker);
  for (auto& w : workers) w.join();
  for (const std::string& e : errors)
    if (!e.empty()) spectree::fail(spectree::ErrorKind::kInternal, e);
  return results;
}

void analyze_line(const std::string& line, const OutputOptions& out) {
  const spectree::Graph g = spectree::parse_graph_line(line);
  const bool tree = spectree::is_tree(g);
  spectree::FactoredSpectrum spec =
      tree ? spectree::spectrum(spectree::Tree(g))
           : spectree::spectrum_of_laplacian(spectree::laplacian(g));
  std::string relation = "n/a";
  std::string spider_kind = "no";
  if (g.n >= 2 && spectree::is_connected(g)) {
    const auto mun1 = spectree::second_largest(spec);
    static const std::vector<spectree::RootInterval> theta_roots =
        spectree::isolate_roots(spectree::THETA_POLY());
    const int cmp = spectree::compare_roots(spec.root(mun1), theta_roots[1]);
    relation = cmp < 0 ? "less" : (cmp == 0 ? "equal" : "greater");
  }
  if (tree) {
    const spectree::Tree t(g);
    const std::string code = spectree::canonical_code(t);
    for (int k = 1; 2 * k <= t.order() - 1; ++k) {
      const int s = t.order() - 1 - k;
      if (code == spectree::canonical_code(spectree::spider(s, k))) {
        spider_kind = "T(" + std::to_string(s) + "," + std::to_string(k) + ")";
        break;
      }
    }
  }
  if (out.format == "json") {
    nlohmann::json j = spectree::spectrum_to_json(spec);
    j["input"] = line;
    j["is_tree"] = tree;
    j["graph6"] = spectree::emit_graph6(g);
    j["mu_n1_vs_theta_bar"] = relation;
    j["spider"] = spider_kind;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input " << line << "\n"
              << "  graph6 " << spectree::emit_graph6(g) << "\n"
              << "  tree " << (tree ? "yes" : "no") << ", spider " << spider_kind
              << ", mu_{n-1} vs theta-bar: " << relation << "\n"
              << spectree::spectrum_to_text(spec);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplacian spectra of trees and their verification sweeps"};
  app.require_subcommand(1);
  OutputOptions out;

  // ---- analyze ----
  auto* analyze = app.add_subcommand(
      "analyze", "Spectra of graph6 or edge-list graphs from stdin or a file");
  std::string analyze_file;
  analyze->add_option("--file", analyze_file, "input file (default stdin)");
  analyze->add_option("--format", out.format, "json|csv|text");
  analyze->add_flag("--no-timing", out.no_timing, "omit timing sections");

  // ---- family ----
  auto* family = app.add_subcommand(
      "family", "Construct a named family tree and print its exact spectrum");
  std::vector<int> family_spider, family_h, family_tstar;
  int family_star = -1, family_path = -1;
  bool family_fork = false;
  family->add_option("--spider", family_spider, "T(s,k)")->expected(2);
  family->add_option("--h-tree", family_h, "H(s,r,t)")->expected(3);
  family->add_option("--t-star", family_tstar, "T*(s,k)")->expected(2);
  family->add_option("--star", family_star, "K_{1,m}");
  family->add_option("--path", family_path, "P_n");
  family->add_flag("--fork", family_fork, "the 6-vertex fork");
  family->add_option("--format", out.format, "json|csv|text");
  family->add_flag("--no-timing", out.no_timing, "omit timing sections");

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream all isomorphism classes of trees of order n as graph6");
  int enum_n = 0, enum_shard = 0, enum_shards = 1;
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_option("--shard", enum_shard, "shard index (default 0)");
  enumerate->add_option("--shards", enum_shards, "shard count (default 1)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run one claim and report");
  std::string claim;
  verify->add_option("claim", claim,
                     "spider-spectra|h-tree|km2|uniq-even|uniq-odd|"
                     "counterexamples10|kho2|kho|tstar|n2k|properties|interlacing")
      ->required();
  int v_n = 0, v_j = 0, v_smax = -1, v_tmax = 8, v_samples = 100;
  unsigned long v_seed = 7;
  int v_shard = 0, v_shards = 1;
  verify->add_option("--n", v_n, "tree order");
  verify->add_option("--j", v_j, "distance j from the multiplicity bound");
  verify->add_option("--s-max", v_smax, "family parameter bound");
  verify->add_option("--t-max", v_tmax, "family parameter bound");
  verify->add_option("--samples", v_samples, "random samples");
  verify->add_option("--seed", v_seed, "random seed");
  verify->add_option("--shard", v_shard, "shard index");
  verify->add_option("--shards", v_shards, "shard count");
  verify->add_option("--format", out.format, "json|csv|text");
  verify->add_flag("--no-timing", out.no_timing, "omit timing sections");

  // ---- sweep ----
  auto* sweep = app.add_subcommand(
      "sweep", "Run the full per-order claim bundle over a range of orders");
  int s_min = 0, s_max_order = 0, s_shard = 0, s_shards = 1;
  int s_threads = default_threads();
  bool long_running = false;
  sweep->add_option("--n-min", s_min, "smallest order")->required();
  sweep->add_option("--n-max", s_max_order, "largest order")->required();
  sweep->add_option("--shard", s_shard, "shard index");
  sweep->add_option("--shards", s_shards, "shard count");
  sweep->add_option("--threads", s_threads, "worker threads");
  sweep->add_flag("--long-running", long_running, "allow orders 13 and 14");
  sweep->add_option("--format", out.format, "json|csv|text");
  sweep->add_flag("--no-timing", out.no_timing, "omit timing sections");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      std::istream* in = &std::cin;
      std::ifstream file;
      if (!analyze_file.empty()) {
        file.open(analyze_file);
        if (!file)
          spectree::fail(spectree::ErrorKind::kInvalidArgument,
                         "cannot open " + analyze_file);
        in = &file;
      }
      std::string line;
      while (std::getline(*in, line)) {
        if (line.empty()) continue;
        analyze_line(line, out);
      }
      return kExitPass;
    }

    if (*family) {
      std::optional<spectree::Tree> t;
      if (family_spider.size() == 2)
        t = spectree::spider(family_spider[0], family_spider[1]);
      else if (family_h.size() == 3)
        t = spectree::h_tree(family_h[0], family_h[1], family_h[2]);
      else if (family_tstar.size() == 2)
        t = spectree::t_star(family_tstar[0], family_tstar[1]);
      else if (family_star >= 0)
        t = spectree::star(family_star);
      else if (family_path >= 0)
        t = spectree::path(family_path);
      else if (family_fork)
        t = spectree::fork();
      if (!t)
        spectree::fail(spectree::ErrorKind::kInvalidArgument,
                       "family requires one of --spider/--h-tree/--t-star/"
                       "--star/--path/--fork");
      const spectree::FactoredSpectrum spec = spectree::spectrum(*t);
      if (out.format == "json") {
        nlohmann::json j = spectree::spectrum_to_json(spec);
        j["graph6"] = spectree::emit_graph6(*t);
        j["canonical_code"] = spectree::canonical_code(*t);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "graph6 " << spectree::emit_graph6(*t) << "\n"
                  << spectree::spectrum_to_text(spec);
      }
      return kExitPass;
    }

    if (*enumerate) {
      spectree::TreeStream stream(enum_n, enum_shard, enum_shards);
      while (auto t = stream.next())
        std::cout << spectree::emit_graph6(*t) << "\n";
      return kExitPass;
    }

    if (*verify) {
      const spectree::Shard shard{v_shard, v_shards};
      auto need_n = [&](int minimum) {
        if (v_n < minimum)
          spectree::fail(spectree::ErrorKind::kPrecondition,
                         "claim requires --n >= " + std::to_string(minimum));
      };
      spectree::VerificationReport report;
      if (claim == "spider-spectra") {
        report = spectree::verify_spider_spectra(v_smax < 0 ? 10 : v_smax);
      } else if (claim == "h-tree") {
        report = spectree::verify_h_tree(v_smax < 0 ? 8 : v_smax, v_tmax);
      } else if (claim == "km2") {
        need_n(6);
        report = spectree::verify_bound_km2(v_n, shard);
      } else if (claim == "uniq-even") {
        need_n(8);
        report = spectree::verify_thm_half_minus_2(v_n, shard);
      } else if (claim == "uniq-odd") {
        need_n(9);
        report = spectree::verify_thm_halfm1_minus_2(v_n, shard);
      } else if (claim == "counterexamples10") {
        report = spectree::verify_counterexamples_10(shard);
      } else if (claim == "kho2") {
        need_n(2);
        report = spectree::verify_kho2(v_n, shard);
      } else if (claim == "kho") {
        need_n(2);
        report = spectree::verify_kho_trees(v_n, shard);
      } else if (claim == "tstar") {
        report = spectree::verify_tstar(v_smax < 0 ? 10 : v_smax);
      } else if (claim == "n2k") {
        report = spectree::verify_thm_n2k_witness(v_j, v_n);
      } else if (claim == "properties") {
        need_n(2);
        report = spectree::verify_property_suite(v_n, shard);
      } else if (claim == "interlacing") {
        need_n(3);
        report = spectree::verify_interlacing(v_n, v_samples, v_seed);
      } else {
        spectree::fail(spectree::ErrorKind::kInvalidArgument,
                       "unknown claim: " + claim);
      }
      print_report(report, out);
      return report_exit({report});
    }

    if (*sweep) {
      const int cap = long_running ? 14 : 12;
      if (s_min < 2 || s_max_order < s_min)
        spectree::fail(spectree::ErrorKind::kInvalidArgument,
                       "need 2 <= n-min <= n-max");
      if (s_max_order > cap)
        spectree::fail(spectree::ErrorKind::kInvalidArgument,
                       "orders beyond " + std::to_string(cap) +
                           " need --long-running (and patience)");
      const spectree::Shard shard{s_shard, s_shards};
      std::vector<std::function<spectree::VerificationReport()>> tasks;
      for (int n = s_min; n <= s_max_order; ++n) {
        tasks.push_back([n, shard] { return spectree::verify_property_suite(n, shard); });
        tasks.push_back([n, shard] { return spectree::verify_kho2(n, shard); });
        tasks.push_back([n, shard] { return spectree::verify_kho_trees(n, shard); });
        if (n >= 6)
          tasks.push_back([n, shard] { return spectree::verify_bound_km2(n, shard); });
        if (n >= 8 && n % 2 == 0)
          tasks.push_back([n, shard] { return spectree::verify_thm_half_minus_2(n, shard); });
        if (n >= 9 && n % 2 == 1)
          tasks.push_back([n, shard] { return spectree::verify_thm_halfm1_minus_2(n, shard); });
        if (n == 10)
          tasks.push_back([shard] { return spectree::verify_counterexamples_10(shard); });
      }
      const auto reports = run_tasks(tasks, s_threads);
      if (out.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
          nlohmann::json j = spectree::report_to_json(r);
          if (out.no_timing) j.erase("timing");
          arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : reports) print_report(r, out);
      }
      return report_exit(reports);
    }
  } catch (const spectree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == spectree::ErrorKind::kInternal ? kExitInternal
                                                      : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
