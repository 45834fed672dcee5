#include "darboux/app.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "darboux/io.hpp"
#include "darboux/line_geometry.hpp"

namespace darboux {

namespace {

std::ofstream open_out(const std::string& dir, const std::string& name) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path);
  if (!out) throw GeometryError("cannot write " + path.string());
  return out;
}

}  // namespace

RuledSurface build_base_surface(const JobConfig& config) {
  return RuledSurface::from_expressions(config.base_path, config.director,
                                        config.surface_options());
}

int cmd_analyze(const JobConfig& config, std::ostream& out) {
  const RuledSurface surface = build_base_surface(config);
  write_csv(out, invariant_table(surface, config.samples));
  return kExitOk;
}

int cmd_offset(const JobConfig& config, const std::string& out_dir,
               std::ostream& log) {
  const RuledSurface base = build_base_surface(config);
  for (std::size_t k = 0; k < config.offsets.size(); ++k) {
    const RuledSurface offset =
        make_offset(base, config.spec_of(config.offsets[k]), config.offset_options());
    auto out = open_out(out_dir, "offset_" + std::to_string(k) + ".csv");
    write_csv(out, invariant_table(offset, config.samples));
    log << "offset_" << k << ".csv: S1 = "
        << format_double(offset.arc_length_total()) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const JobConfig& config, double threshold,
               const std::string& out_dir, std::ostream& log) {
  const RuledSurface base = build_base_surface(config);
  bool all_passed = true;
  for (std::size_t k = 0; k < config.offsets.size(); ++k) {
    const OffsetReport report = full_report(
        base, config.spec_of(config.offsets[k]), config.samples,
        config.offset_options());
    if (!out_dir.empty()) {
      auto out = open_out(out_dir, "report_" + std::to_string(k) + ".csv");
      write_report_csv(out, report);
    }
    write_report_summary(log, report, threshold);
    all_passed = all_passed && report.passed(threshold);
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_mesh(const JobConfig& config, const std::string& out_dir,
             std::ostream& log) {
  const RuledSurface base = build_base_surface(config);
  {
    auto out = open_out(out_dir, "base.obj");
    write_obj(out, base.sample_mesh(config.samples, config.v_range, config.v_count));
    log << "base.obj: " << config.samples << "x" << config.v_count
        << " vertices\n";
  }
  for (std::size_t k = 0; k < config.offsets.size(); ++k) {
    const RuledSurface offset =
        make_offset(base, config.spec_of(config.offsets[k]), config.offset_options());
    auto out = open_out(out_dir, "offset_" + std::to_string(k) + ".obj");
    write_obj(out, offset.sample_mesh(config.samples, config.v_range, config.v_count));
    log << "offset_" << k << ".obj: " << config.samples << "x" << config.v_count
        << " vertices\n";
  }
  return kExitOk;
}

int cmd_line_angle(const std::string& line_a, const std::string& line_b,
                   std::ostream& out) {
  const PlueckerLine a = parse_line_text(line_a);
  const PlueckerLine b = parse_line_text(line_b);
  const DualAngle angle = dual_angle_between(to_dual(a), to_dual(b));
  out << "theta_deg = " << format_double(angle.theta / M_PI * 180.0) << "\n"
      << "theta_star = " << format_double(angle.theta_star) << "\n";
  return kExitOk;
}

}  // namespace darboux
