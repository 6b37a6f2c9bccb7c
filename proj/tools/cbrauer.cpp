#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubebr/pipeline.hpp"

namespace fs = std::filesystem;
using namespace cubebr;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw MathError("cannot write " + out);
  f << text;
}

// Every <name>.config.json in dir is run and compared byte for byte with
// <name>.report.json.
int run_golden(const fs::path& dir, std::optional<std::uint64_t> seed, bool update) {
  if (!fs::is_directory(dir)) throw MathError("golden directory " + dir.string() + " not found");
  std::vector<fs::path> configs;
  for (const auto& e : fs::directory_iterator(dir)) {
    auto name = e.path().filename().string();
    if (name.size() > 12 && name.ends_with(".config.json")) configs.push_back(e.path());
  }
  std::sort(configs.begin(), configs.end());
  if (configs.empty()) throw MathError("no *.config.json files in " + dir.string());
  int failed = 0;
  for (const auto& cp : configs) {
    std::string stem = cp.filename().string();
    stem = stem.substr(0, stem.size() - 12);
    fs::path expected = dir / (stem + ".report.json");
    std::string status;
    try {
      JobConfig cfg = load_config(cp.string());
      if (seed) cfg.seed = *seed;
      std::string text = render(run_job(cfg).report);
      if (update) {
        std::ofstream(expected) << text;
        status = "written";
      } else if (!fs::exists(expected)) {
        status = "FAIL (no expected report)";
        ++failed;
      } else if (slurp(expected) != text) {
        status = "FAIL (report differs)";
        ++failed;
      } else {
        status = "ok";
      }
    } catch (const std::exception& e) {
      status = std::string("FAIL (") + e.what() + ")";
      ++failed;
    }
    std::cout << stem << ": " << status << "\n";
  }
  std::cout << configs.size() - failed << "/" << configs.size() << " golden reports reproduced\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Brauer groups of cubic curves Z^3 = f(X, Y)"};
  app.require_subcommand(0, 1);
  std::string golden_dir, output;
  std::optional<std::uint64_t> seed;
  bool update = false;
  app.add_option("--golden", golden_dir, "Reproduce every golden report in this directory");
  app.add_flag("--update-golden", update, "Rewrite the expected reports instead of comparing");
  app.add_option("--seed", seed, "Seed for the Clifford trials (overrides the config)");

  std::string config;
  auto* compute = app.add_subcommand("compute", "Run the Brauer pipeline on a JSON config");
  compute->add_option("config", config, "Config path")->required();
  compute->add_option("-o,--output", output, "Write the report here instead of stdout");
  auto* verify = app.add_subcommand("verify", "Run the Clifford identity suite");
  verify->add_option("config", config, "Config path")->required();
  verify->add_option("-o,--output", output, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  try {
    if (!golden_dir.empty()) return run_golden(golden_dir, seed, update);
    if (compute->parsed() || verify->parsed()) {
      JobConfig cfg = load_config(config);
      if (seed) cfg.seed = *seed;
      JobResult r = compute->parsed() ? run_job(cfg) : run_verify(cfg);
      emit(render(r.report), output);
      std::cerr << "status: " << r.status << "\n";
      return r.exit_code;
    }
    std::cerr << app.help();
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
