#include "darboux/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace darboux {

SurfaceOptions JobConfig::surface_options() const {
  SurfaceOptions options;
  options.curve.tol_s = tol_s;
  options.curve.tol_cyl = tol_cyl;
  return options;
}

OffsetOptions JobConfig::offset_options() const {
  OffsetOptions options;
  options.surface = surface_options();
  options.tol_mono = tol_mono;
  return options;
}

namespace {

struct Line {
  int number = 0;
  std::string section;
  std::string key;
  std::vector<std::string> values;  // unquoted tokens or one quoted string
  bool quoted = false;
  int value_col = 1;
};

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_number(const std::string& token, int line, int col) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [next, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || next != end)
    throw ParseError("expected a number, got '" + token + "'", line, col);
  return value;
}

int to_int(const std::string& token, int line, int col) {
  const double v = to_number(token, line, col);
  if (v != std::floor(v))
    throw ParseError("expected an integer, got '" + token + "'", line, col);
  return static_cast<int>(v);
}

}  // namespace

JobConfig parse_config(std::istream& in, const std::string& source_name) {
  JobConfig config;
  bool have_c = false, have_e = false, have_range = false;
  Interval u_range{0.0, 1.0};
  std::string raw;
  std::string section;
  int line_no = 0;

  auto fail = [&](const std::string& what, int col) -> ParseError {
    return ParseError(source_name + ": " + what, line_no, col);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string text = strip(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') throw fail("unterminated section header", 1);
      section = strip(text.substr(1, text.size() - 2));
      if (section != "base" && section != "offsets" && section != "mesh" &&
          section != "tolerances")
        throw fail("unknown section [" + section + "]", 1);
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value'", 1);
    const std::string key = strip(text.substr(0, eq));
    const std::string value = strip(text.substr(eq + 1));
    if (key.empty()) throw fail("missing key before '='", 1);
    if (value.empty()) throw fail("missing value for '" + key + "'", static_cast<int>(eq) + 2);
    const int vcol = static_cast<int>(raw.find(value)) + 1;

    Line line;
    line.number = line_no;
    line.section = section;
    line.key = key;
    line.value_col = vcol;
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"')
        throw fail("unterminated quoted string", vcol);
      line.quoted = true;
      line.values.push_back(value.substr(1, value.size() - 2));
    } else {
      std::istringstream tokens(value);
      std::string token;
      while (tokens >> token) line.values.push_back(token);
    }

    auto expect_numbers = [&](std::size_t count) {
      if (line.quoted || line.values.size() != count)
        throw fail("'" + key + "' expects " + std::to_string(count) +
                       " number(s)",
                   vcol);
    };

    auto parse_curve = [&](const char* field) {
      if (!line.quoted)
        throw fail(std::string("'") + field + "' expects a quoted \"[., ., .]\" triple", vcol);
      try {
        return parse_curve_triple(line.values[0]);
      } catch (const GeometryError& err) {
        throw ParseError(source_name + ": base." + field + ": " + err.what(),
                         line_no, vcol);
      }
    };

    if (section == "base") {
      if (key == "c") {
        config.base_path.components = parse_curve("c");
        have_c = true;
      } else if (key == "e") {
        config.director.components = parse_curve("e");
        have_e = true;
      } else if (key == "u_range") {
        expect_numbers(2);
        u_range = {to_number(line.values[0], line_no, vcol),
                   to_number(line.values[1], line_no, vcol)};
        have_range = true;
      } else if (key == "samples") {
        expect_numbers(1);
        config.samples = to_int(line.values[0], line_no, vcol);
      } else {
        throw fail("unknown key '" + key + "' in [base]", 1);
      }
    } else if (section == "offsets") {
      if (key != "offset") throw fail("unknown key '" + key + "' in [offsets]", 1);
      expect_numbers(2);
      config.offsets.push_back({to_number(line.values[0], line_no, vcol),
                                to_number(line.values[1], line_no, vcol)});
    } else if (section == "mesh") {
      if (key == "v_range") {
        expect_numbers(2);
        config.v_range = {to_number(line.values[0], line_no, vcol),
                          to_number(line.values[1], line_no, vcol)};
      } else if (key == "v_count") {
        expect_numbers(1);
        config.v_count = to_int(line.values[0], line_no, vcol);
      } else {
        throw fail("unknown key '" + key + "' in [mesh]", 1);
      }
    } else if (section == "tolerances") {
      expect_numbers(1);
      const double v = to_number(line.values[0], line_no, vcol);
      if (key == "tol_s") config.tol_s = v;
      else if (key == "tol_cyl") config.tol_cyl = v;
      else if (key == "tol_mono") config.tol_mono = v;
      else if (key == "verify_threshold") config.verify_threshold = v;
      else throw fail("unknown key '" + key + "' in [tolerances]", 1);
    } else {
      throw fail("key '" + key + "' outside any section", 1);
    }
  }

  if (!have_c) throw ValidationError("base.c", "missing");
  if (!have_e) throw ValidationError("base.e", "missing");
  if (!have_range) throw ValidationError("base.u_range", "missing");
  if (!(u_range.lo < u_range.hi))
    throw ValidationError("base.u_range", "must be a nondegenerate interval");
  if (config.samples < 2) throw ValidationError("base.samples", "need at least 2");
  if (config.v_count < 2) throw ValidationError("mesh.v_count", "need at least 2");
  if (!(config.v_range.lo < config.v_range.hi))
    throw ValidationError("mesh.v_range", "must be a nondegenerate interval");
  for (std::size_t i = 0; i < config.offsets.size(); ++i) {
    const OffsetEntry& entry = config.offsets[i];
    if (!(entry.theta_deg >= 0.0 && entry.theta_deg <= 180.0))
      throw ValidationError("offsets[" + std::to_string(i) + "].theta_deg",
                            "must lie in [0, 180]");
    if (!std::isfinite(entry.theta_star))
      throw ValidationError("offsets[" + std::to_string(i) + "].theta_star",
                            "must be finite");
  }
  for (double tol : {config.tol_s, config.tol_cyl, config.tol_mono,
                     config.verify_threshold})
    if (!(tol > 0.0)) throw ValidationError("tolerances", "must be positive");

  config.base_path.domain = u_range;
  config.director.domain = u_range;
  return config;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'", 0, 0);
  return parse_config(in, path);
}

}  // namespace darboux
