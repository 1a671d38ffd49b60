// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "revsurf/curvature.hpp"
#include "revsurf/embeddability.hpp"
#include "revsurf/embedding.hpp"
#include "revsurf/errors.hpp"
#include "revsurf/mesh_io.hpp"
#include "revsurf/profile.hpp"
#include "revsurf/quadrature.hpp"

namespace revsurf::cli {

namespace {

/// Where the profile comes from; exactly one source may be given.
struct ProfileSpec {
  std::optional<std::string> preset;
  std::optional<std::string> expression;
  std::optional<std::string> length;
  std::optional<std::string> csv;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_profile_options(CLI::App* cmd, ProfileSpec& spec) {
  cmd->add_option("--preset", spec.preset,
                  "Built-in profile: sphere, bump:<beta>, dumbbell:<beta>");
  cmd->add_option("--profile", spec.expression, "Closed-form a(s), e.g. \"sin(s)\"");
  cmd->add_option("--length", spec.length, "Meridian length L for --profile (pi, 2pi, decimal)");
  cmd->add_option("--profile-csv", spec.csv, "Sampled profile CSV with header s,a");
}

std::string fmt(double x, int precision = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

Profile resolve(const ProfileSpec& spec) {
  const int sources = int(spec.preset.has_value()) + int(spec.expression.has_value()) +
                      int(spec.csv.has_value());
  if (sources != 1) {
    throw UsageError("give exactly one of --preset, --profile, --profile-csv");
  }
  if (spec.length && !spec.expression) {
    throw UsageError("--length only applies to --profile");
  }
  if (spec.preset) {
    try {
      return make_preset(*spec.preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (spec.expression) {
    if (!spec.length) throw UsageError("--profile requires --length");
    const auto L = parse_length(*spec.length);
    if (!L) throw UsageError("invalid --length '" + *spec.length + "'");
    return Profile::from_expression(parse_expression(*spec.expression), *L);
  }
  std::ifstream in(*spec.csv);
  if (!in) throw UsageError("cannot open '" + *spec.csv + "'");
  try {
    return read_profile_csv(in, *spec.csv);
  } catch (const std::exception& e) {
    throw UsageError(*spec.csv + ": " + e.what());
  }
}

void print_validation(std::ostream& out, const ValidationReport& r) {
  auto line = [&](const char* what, double residual, bool ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-22s residual %-24s %s\n", what, fmt(residual).c_str(),
                  ok ? "ok" : "FAIL");
    out << buf;
  };
  line("a(0) = 0", r.a_begin_residual, r.a_begin_ok);
  line("a(L) = 0", r.a_end_residual, r.a_end_ok);
  line("a'(0) = 1", r.slope_begin_residual, r.slope_begin_ok);
  line("a'(L) = -1", r.slope_end_residual, r.slope_end_ok);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-22s min %s at s = %s  %s\n", "a > 0 on (0, L)",
                fmt(r.interior_min).c_str(), fmt(r.interior_min_at).c_str(),
                r.positive_ok ? "ok" : "FAIL");
  out << buf;
  if (r.evaluation_error) out << "evaluation error: " << *r.evaluation_error << "\n";
}

nlohmann::ordered_json validation_json(const ValidationReport& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["tol"] = r.tol;
  j["conditions"] = nlohmann::ordered_json::array({
      {{"name", "a_begin"}, {"residual", r.a_begin_residual}, {"ok", r.a_begin_ok}},
      {{"name", "a_end"}, {"residual", r.a_end_residual}, {"ok", r.a_end_ok}},
      {{"name", "slope_begin"}, {"residual", r.slope_begin_residual}, {"ok", r.slope_begin_ok}},
      {{"name", "slope_end"}, {"residual", r.slope_end_residual}, {"ok", r.slope_end_ok}},
  });
  j["interior_min"] = {{"value", r.interior_min}, {"at_s", r.interior_min_at}, {"ok", r.positive_ok}};
  if (r.evaluation_error) j["evaluation_error"] = *r.evaluation_error;
  return j;
}

// Validates and reports failures on `err`; true if the profile passed.
bool require_valid(const Profile& p, double tol, std::ostream& err) {
  const ValidationReport r = validate(p, tol);
  if (r.passed()) return true;
  err << "error: profile does not satisfy the closure conditions:\n";
  print_validation(err, r);
  return false;
}

void print_report(std::ostream& out, const EmbeddabilityReport& r) {
  out << "verdict: "
      << (r.verdict == Verdict::embeddable ? "embeddable" : "not embeddable") << "\n";
  out << "sup |a'| = " << fmt(r.sup_a_prime) << " at s = " << fmt(r.sup_a_prime_at) << "\n";
  if (r.result(Criterion::derivative).boundary_case) {
    out << "note: boundary case, sup |a'| exceeds 1 by at most the tolerance\n";
  }
  for (const auto& c : r.criteria) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "  %-17s %-15s witness s = %-12s value = %-14s margin = %s\n",
                  std::string(to_string(c.criterion)).c_str(),
                  std::string(to_string(c.verdict)).c_str(), fmt(c.witness_s, 10).c_str(),
                  fmt(c.witness_value, 10).c_str(), fmt(c.margin, 10).c_str());
    out << buf;
  }
  out << "pole curvature: K(np) = " << fmt(r.pole_curvature_north)
      << ", K(sp) = " << fmt(r.pole_curvature_south) << "\n";
  out << "grid_n = " << r.grid_n << ", tol = " << fmt(r.tol, 6) << "\n";
}

int cmd_validate(const ProfileSpec& spec, double tol, bool json, std::ostream& out) {
  const Profile p = resolve(spec);
  const ValidationReport r = validate(p, tol);
  if (json) {
    out << validation_json(r).dump(2) << "\n";
  } else {
    print_validation(out, r);
    out << (r.passed() ? "valid\n" : "invalid\n");
  }
  return r.passed() ? kExitOk : kExitNegative;
}

int cmd_check(const ProfileSpec& spec, std::size_t grid, double tol, bool json,
              std::ostream& out, std::ostream& err) {
  const Profile p = resolve(spec);
  if (!require_valid(p, tol, err)) return kExitError;
  const EmbeddabilityReport r = full_report(p, grid, tol);
  if (json) {
    out << report_to_json(r) << "\n";
  } else {
    print_report(out, r);
  }
  return r.verdict == Verdict::embeddable ? kExitOk : kExitNegative;
}

int cmd_curvature(const ProfileSpec& spec, std::size_t samples,
                  const std::optional<std::string>& path, double tol, std::ostream& out,
                  std::ostream& err) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const Profile p = resolve(spec);
  if (!require_valid(p, tol, err)) return kExitError;
  const auto rows = sample_curvature(p, samples);
  if (!path) {
    write_curvature_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(*path);
  if (!file) {
    err << "error: cannot open '" << *path << "' for writing\n";
    return kExitError;
  }
  write_curvature_csv(file, rows);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << *path << "'\n";
    return kExitError;
  }
  out << "wrote " << rows.size() << " samples to " << *path << "\n";
  return kExitOk;
}

int cmd_embed(const ProfileSpec& spec, std::size_t ns, std::size_t ntheta, double c,
              const std::string& path, std::size_t grid, double tol, std::ostream& out,
              std::ostream& err) {
  const auto format = mesh_format_for(path);
  if (!format) {
    throw UsageError("unsupported mesh format for '" + path + "' (use .obj or .stl)");
  }
  if (ns < 3 || ntheta < 3) throw UsageError("--ns and --ntheta must be at least 3");
  const Profile p = resolve(spec);
  if (!(c >= 0.0 && c <= p.length())) throw UsageError("--c must lie in [0, L]");
  if (!require_valid(p, tol, err)) return kExitError;

  const CriterionResult d = check_derivative(p, grid, tol);
  if (d.verdict == Verdict::not_embeddable) {
    err << "not embeddable: sup |a'| = " << fmt(d.witness_value, 10)
        << " > 1 at s = " << fmt(d.witness_s, 10) << "\n";
    return kExitNegative;
  }
  try {
    const EmbeddingMap map(p, c);
    const Mesh mesh = generate_mesh(map, ns, ntheta);
    write_mesh_file(mesh, path, *format);
    const MetricCheck m = verify_induced_metric(map, 32, 32, 1e-5);
    out << "wrote " << path << ": " << mesh.vertices.size() << " vertices, "
        << mesh.triangles.size() << " triangles\n";
    out << "induced metric (h = " << fmt(m.step, 6) << ", 32x32 grid, guard band "
        << fmt(m.guard_band, 6) << "): max |E-1| = " << fmt(m.max_E_error, 3)
        << ", max |F| = " << fmt(m.max_F_error, 3) << ", max |G-a^2| = "
        << fmt(m.max_G_error, 3) << "\n";
  } catch (const NotEmbeddableError& e) {
    err << e.what() << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

std::optional<std::size_t> parse_budget(const char* text) {
  std::size_t value = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

}  // namespace

std::optional<double> parse_length(const std::string& text) {
  std::string t;
  std::copy_if(text.begin(), text.end(), std::back_inserter(t),
               [](char ch) { return ch != ' '; });
  double factor = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    t.resize(t.size() - 2);
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty()) t = "1";
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  value *= factor;
  if (!(value > 0.0) || !std::isfinite(value)) return std::nullopt;
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* budget = std::getenv("REVSURF_QUAD_BUDGET")) {
    const auto value = parse_budget(budget);
    if (!value) {
      err << "error: REVSURF_QUAD_BUDGET must be a positive integer\n";
      return kExitError;
    }
    set_default_quadrature_budget(*value);
  }

  CLI::App app{"Isometric embeddability of rotation-invariant spheres in R^3", "revsurf"};
  app.require_subcommand(1);

  ProfileSpec spec;
  double tol = kDefaultTol;
  std::size_t grid = kDefaultGrid;
  bool json = false;
  std::size_t samples = 101;
  std::optional<std::string> csv_out;
  std::size_t ns = 128, ntheta = 64;
  double c = 0.0;
  std::string mesh_out;

  auto* validate_cmd = app.add_subcommand("validate", "Check the pole closure conditions");
  add_profile_options(validate_cmd, spec);
  validate_cmd->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  validate_cmd->add_flag("--json", json, "Print the report as JSON");

  auto* check_cmd = app.add_subcommand("check", "Decide isometric embeddability");
  add_profile_options(check_cmd, spec);
  check_cmd->add_option("--grid", grid, "Grid points for the extremum scans")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  check_cmd->add_option("--tol", tol, "Additive threshold tolerance")->capture_default_str();
  check_cmd->add_flag("--json", json, "Print the report as JSON");

  auto* curvature_cmd = app.add_subcommand("curvature", "Dump s, a, a', K as CSV");
  add_profile_options(curvature_cmd, spec);
  curvature_cmd->add_option("--samples", samples, "Number of uniform samples (>= 2)")
      ->capture_default_str();
  curvature_cmd->add_option("--out", csv_out, "Output CSV file (default stdout)");
  curvature_cmd->add_option("--tol", tol, "Validation tolerance")->capture_default_str();

  auto* embed_cmd = app.add_subcommand("embed", "Build the embedding and export a mesh");
  add_profile_options(embed_cmd, spec);
  embed_cmd->add_option("--ns", ns, "Latitude bands")->capture_default_str();
  embed_cmd->add_option("--ntheta", ntheta, "Meridians")->capture_default_str();
  embed_cmd->add_option("--c", c, "Basepoint of the height integral")->capture_default_str();
  embed_cmd->add_option("--out", mesh_out, "Output mesh (.obj or .stl)")->required();
  embed_cmd->add_option("--grid", grid, "Grid points for the embeddability scan")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  embed_cmd->add_option("--tol", tol, "Additive threshold tolerance")->capture_default_str();

  auto* presets_cmd = app.add_subcommand("presets", "List built-in profiles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*validate_cmd) return cmd_validate(spec, tol, json, out);
    if (*check_cmd) return cmd_check(spec, grid, tol, json, out, err);
    if (*curvature_cmd) return cmd_curvature(spec, samples, csv_out, tol, out, err);
    if (*embed_cmd) return cmd_embed(spec, ns, ntheta, c, mesh_out, grid, tol, out, err);
    if (*presets_cmd) {
      for (const auto& info : list_presets()) {
        out << info.name << "\t" << info.formula << "\t" << info.note << "\n";
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace revsurf::cli
