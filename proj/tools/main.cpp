#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "darboux/app.hpp"

namespace {

int dispatch(const std::function<int()>& run) {
  using namespace darboux;
  try {
    return run();
  } catch (const ParseError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfigError;
  } catch (const ValidationError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfigError;
  } catch (const SyntaxError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfigError;
  } catch (const UnknownIdentifier& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfigError;
  } catch (const GeometryError& err) {
    std::cerr << "numeric error: " << err.what() << "\n";
    return kExitNumericError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace darboux;

  CLI::App app{"ruled-surface geometry kernel: dual Darboux frames, "
               "invariants, and Bertrand offsets"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  double threshold = 1e-6;
  std::string line_a, line_b;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "invariant table of the base surface as CSV on stdout");
  analyze->add_option("config", config_path, "job config file")->required();

  CLI::App* offset = app.add_subcommand(
      "offset", "invariant tables of every configured offset surface");
  offset->add_option("config", config_path, "job config file")->required();
  offset->add_option("--out", out_dir, "output directory")->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "check every offset relation; exit 0 iff all residuals pass");
  verify->add_option("config", config_path, "job config file")->required();
  verify->add_option("--threshold", threshold,
                     "worst allowed relative residual")->capture_default_str();
  verify->add_option("--out", out_dir, "directory for per-sample report CSVs");

  CLI::App* mesh = app.add_subcommand(
      "mesh", "sample base and offsets into Wavefront OBJ files");
  mesh->add_option("config", config_path, "job config file")->required();
  mesh->add_option("--out", out_dir, "output directory")->required();

  CLI::App* line_angle = app.add_subcommand(
      "line-angle", "dual angle between two lines 'px py pz / dx dy dz'");
  line_angle->add_option("line_a", line_a, "first line")->required();
  line_angle->add_option("line_b", line_b, "second line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (out_dir.empty()) out_dir = ".";

  if (analyze->parsed())
    return dispatch([&] { return cmd_analyze(load_config(config_path), std::cout); });
  if (offset->parsed())
    return dispatch([&] { return cmd_offset(load_config(config_path), out_dir, std::cout); });
  if (verify->parsed())
    return dispatch([&] {
      const JobConfig config = load_config(config_path);
      const double gate = verify->count("--threshold") ? threshold
                                                       : config.verify_threshold;
      return cmd_verify(config, gate,
                        verify->count("--out") ? out_dir : std::string{},
                        std::cout);
    });
  if (mesh->parsed())
    return dispatch([&] { return cmd_mesh(load_config(config_path), out_dir, std::cout); });
  if (line_angle->parsed())
    return dispatch([&] { return cmd_line_angle(line_a, line_b, std::cout); });
  return kExitConfigError;
}
