#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vfc/errors.h"
#include "vfc/graph.h"
#include "vfc/index.h"
#include "vfc/tools/bench.h"
#include "vfc/tools/session.h"
#include "vfc/tools/verify.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (item.find_first_not_of(" ", used) != std::string::npos) {
      throw vfc::ContractViolation("bad failure size: " + item);
    }
    sizes.push_back(value);
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity oracle under vertex failures"};
  app.require_subcommand(1);

  std::string graph_path, index_path, out_path;
  int dstar = 0;

  auto* build = app.add_subcommand("build", "Preprocess a graph file into an index");
  build->add_option("graph", graph_path, "Graph file")->required();
  build->add_option("--dstar", dstar, "Failure budget")->required();
  build->add_option("--out", out_path, "Index file to write")->required();

  auto* resize = app.add_subcommand("resize", "Rebuild an index for another budget");
  resize->add_option("index", index_path, "Index file")->required();
  resize->add_option("--dstar", dstar, "New failure budget")->required();
  resize->add_option("--out", out_path, "Index file to write")->required();

  auto* session = app.add_subcommand("session", "Answer U/Q lines from stdin");
  session->add_option("index", index_path, "Index file")->required();

  vfc::tools::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Fuzz the oracle against BFS");
  verify->add_option("--seed", vopt.seed, "RNG seed")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Random graphs")->capture_default_str();
  verify->add_option("--max-n", vopt.max_n, "Largest vertex count")->capture_default_str();
  verify->add_option("--max-dstar", vopt.max_dstar, "Largest budget")->capture_default_str();
  verify->add_option("--repro", vopt.repro_path, "Where to write a failing case")
      ->capture_default_str();
  verify->add_flag("--inject-fault", vopt.inject_fault)->group("");

  vfc::tools::BenchOptions bopt;
  std::string sizes = "1,2,4,8";
  auto* bench = app.add_subcommand("bench", "Time build, update and query");
  bench->add_option("graph", graph_path, "Graph file")->required();
  bench->add_option("--dstar", bopt.dstar, "Failure budget")->capture_default_str();
  bench->add_option("--fail-sizes", sizes, "Comma-separated failure set sizes")
      ->capture_default_str();
  bench->add_option("--queries", bopt.queries_per_update, "Queries per update")
      ->capture_default_str();
  bench->add_option("--seed", bopt.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*build) {
      vfc::RawGraph raw = vfc::LoadGraphFile(graph_path);
      auto start = std::chrono::steady_clock::now();
      vfc::Index index = vfc::Index::Build(vfc::Normalize(raw), dstar);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
      index.Save(out_path);
      std::cerr << "n=" << index.n() << " m=" << index.m() << " dstar=" << dstar
                << " components=" << index.component_count() << " build_ms=" << ms << '\n';
    } else if (*resize) {
      vfc::Index index = vfc::Index::Load(index_path).Resized(dstar);
      index.Save(out_path);
      std::cerr << "n=" << index.n() << " m=" << index.m() << " dstar=" << dstar << '\n';
    } else if (*session) {
      vfc::Index index = vfc::Index::Load(index_path);
      std::ios::sync_with_stdio(false);
      vfc::tools::RunSession(index, std::cin, std::cout);
    } else if (*verify) {
      vfc::tools::VerifyReport report = vfc::tools::RunVerify(vopt);
      vfc::tools::PrintReport(report, std::cout);
      if (!report.ok) {
        std::cerr << "reproduction written to " << vopt.repro_path << '\n';
        return kExitFailure;
      }
    } else if (*bench) {
      bopt.fail_sizes = ParseSizes(sizes);
      vfc::tools::RunBench(vfc::LoadGraphFile(graph_path), bopt, std::cout);
    }
  } catch (const vfc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
