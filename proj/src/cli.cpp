#include "quatcurve/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatcurve/curve.hpp"
#include "quatcurve/errors.hpp"
#include "quatcurve/frenet.hpp"
#include "quatcurve/involute.hpp"
#include "quatcurve/io.hpp"
#include "quatcurve/spatial.hpp"
#include "quatcurve/verify.hpp"

namespace quatcurve {

namespace {

struct GridFlags {
  std::string curve;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t n = 512;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--curve", g.curve, "built-in name (paper_example, circular4, double_helix) or JSON spec path")
      ->required();
  cmd->add_option("--from", g.from, "first grid value (default: domain start)");
  cmd->add_option("--to", g.to, "last grid value (default: domain end)");
  cmd->add_option("--n", g.n, "number of grid points")->capture_default_str();
}

std::vector<double> make_grid(const GridFlags& g, const CurveDefinition& curve) {
  const double lo = g.from.value_or(curve.domain().lo);
  const double hi = g.to.value_or(curve.domain().hi);
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw GeometryError(ErrorKind::SpecInvalid, "grid needs finite --from <= --to");
  if (g.n == 0) return {};
  return uniform_grid(lo, hi, g.n);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file_atomic(out_path, text);
}

void warn_skipped(const std::vector<SkippedPoint>& skipped, std::ostream& err) {
  for (const SkippedPoint& p : skipped) err << "warning: skipped s = " << format_double(p.s) << ": " << p.reason << '\n';
}

Vec3 parse_anchor(const std::string& text) {
  std::stringstream ss(text);
  std::vector<double> v;
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw GeometryError(ErrorKind::SpecInvalid, "--anchor must be three comma-separated numbers");
    }
  }
  if (v.size() != 3) throw GeometryError(ErrorKind::SpecInvalid, "--anchor must be three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("QUATCURVE_TOL");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used == std::string(raw).size() && v > 0.0) return v;
  } catch (const std::exception&) {
  }
  throw GeometryError(ErrorKind::SpecInvalid, "QUATCURVE_TOL must be a positive number");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Serret-Frenet apparatus, involutes and evolutes of quaternionic curves in R^4"};
  app.require_subcommand(1);
  std::string out_path;

  GridFlags fg;
  CLI::App* frenet = app.add_subcommand("frenet", "apparatus of a curve as CSV");
  add_grid_flags(frenet, fg);
  frenet->add_option("--out", out_path, "output file (default: stdout)");

  GridFlags ig;
  double c = 0.0;
  CLI::App* involute = app.add_subcommand("involute", "apparatus of the involute phi = x + (c - s) T as CSV");
  add_grid_flags(involute, ig);
  involute->add_option("--c", c, "involute constant c")->required();
  involute->add_option("--out", out_path, "output file (default: stdout)");

  std::string suite = "all";
  std::optional<double> tol;
  bool as_json = false;
  bool flip_eta = false;
  CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--suite", suite, "all, algebra, frenet, involute, evolute or spatial")
      ->check(CLI::IsMember({"all", "algebra", "frenet", "involute", "evolute", "spatial"}))
      ->capture_default_str();
  verify->add_option("--tol", tol, "tolerance used for every check (overrides QUATCURVE_TOL)");
  verify->add_flag("--json", as_json, "print the JSON report instead of text");
  verify->add_flag("--inject-flip-eta", flip_eta)->group("");
  verify->add_option("--out", out_path, "output file (default: stdout)");

  GridFlags ag;
  std::string anchor_text = "0,0,0";
  bool with_frames = false;
  CLI::App* associate = app.add_subcommand("associate", "associated spatial curve in R^3 as CSV");
  add_grid_flags(associate, ag);
  associate->add_option("--anchor", anchor_text, "starting point x,y,z")->capture_default_str();
  associate->add_flag("--frames", with_frames, "append t, n, b columns");
  associate->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (frenet->parsed()) {
      const CurveDefinition curve = build_curve(load_curve_spec(fg.curve));
      const ApparatusSeries series = sample_apparatus(curve, make_grid(fg, curve));
      warn_skipped(series.skipped, err);
      std::ostringstream csv;
      write_apparatus_csv(csv, series);
      emit(csv.str(), out_path, out);
      return 0;
    }
    if (involute->parsed()) {
      const CurveDefinition evolute = build_curve(load_curve_spec(ig.curve));
      const CurveDefinition phi = involute_curve(evolute, default_involute_params(evolute, c));
      const ApparatusSeries series = sample_apparatus(phi, make_grid(ig, evolute));
      warn_skipped(series.skipped, err);
      InvoluteColumns extra{c, {}};
      for (const FrenetFrame4& f : series.frames)
        extra.distance.push_back((f.position - evolute.position(f.s)).norm());
      std::ostringstream csv;
      write_apparatus_csv(csv, series, extra);
      emit(csv.str(), out_path, out);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.suite = suite;
      opts.tol = tol ? tol : env_tolerance();
      opts.corrupt_eta = flip_eta;
      const VerifyReport report = run_verify(opts);
      emit(as_json ? report_json(report) : report_text(report), out_path, out);
      return report.overall_pass ? 0 : 1;
    }
    if (associate->parsed()) {
      const CurveDefinition curve = build_curve(load_curve_spec(ag.curve));
      const Vec3 anchor = parse_anchor(anchor_text);
      const std::vector<double> grid = make_grid(ag, curve);
      const std::vector<Vec3> points = associated_spatial_curve(curve, grid, anchor);
      std::vector<SpatialFrame> frames;
      if (with_frames) {
        for (double s : grid) frames.push_back(spatial_frame(frenet_apparatus(curve, s)));
      }
      std::ostringstream csv;
      write_spatial_csv(csv, grid, points, with_frames ? &frames : nullptr);
      emit(csv.str(), out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace quatcurve
