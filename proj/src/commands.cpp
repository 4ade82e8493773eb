#include "harmonica/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "harmonica/error.hpp"
#include "harmonica/gallery.hpp"
#include "harmonica/plot.hpp"
#include "harmonica/radius.hpp"
#include "harmonica/verifier.hpp"

namespace harmonica {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

RadiusResult closed_radius(const std::string& map, Property property, Order alpha) {
  const GalleryId id = parse_gallery_id(map);
  if (id.kind == GalleryId::Kind::harmonic_halfplane)
    return property == Property::starlike ? half_plane_starlike_radius(alpha) : half_plane_convex_radius(alpha);
  if (id.kind == GalleryId::Kind::LL && property == Property::convex && alpha.value() == 0.0)
    return LL_convex_radius();
  throw Error(ErrorCode::invalid_argument, "no closed form for " + map + " (" + to_string(property) + ", alpha " +
                                               fmt(alpha.value()) + "); use --method scan");
}

}  // namespace

std::string cmd_radius(const RadiusCommand& cmd) {
  if (cmd.equation.has_value() == cmd.map.has_value())
    throw Error(ErrorCode::invalid_argument, "radius needs exactly one of --equation or --map");
  if (cmd.format != "json" && cmd.format != "csv")
    throw Error(ErrorCode::invalid_argument, "unknown format '" + cmd.format + "'");
  std::vector<RadiusResult> results;
  for (double a : cmd.alphas) {
    const Order alpha(a);
    if (cmd.equation) {
      if (!cmd.method.empty() && cmd.method != "solve")
        throw Error(ErrorCode::invalid_argument, "--equation only supports --method solve");
      results.push_back(solve_radius(parse_radius_equation(*cmd.equation), alpha));
      continue;
    }
    const Property property = parse_property(cmd.property);
    const std::string method = cmd.method.empty() ? "closed" : cmd.method;
    if (method == "closed") {
      results.push_back(closed_radius(*cmd.map, property, alpha));
    } else if (method == "scan") {
      results.push_back(empirical_radius(gallery(*cmd.map), alpha, property));
    } else {
      throw Error(ErrorCode::invalid_argument, "--map supports --method closed or scan");
    }
  }
  if (cmd.format == "csv") return radius_csv(results);
  std::string out;
  for (const auto& r : results) out += r.to_json() + "\n";
  return out;
}

std::string cmd_table(const TableCommand& cmd) {
  std::vector<RadiusEquationId> ids;
  if (cmd.equations == "all") {
    ids.assign(kAllRadiusEquations.begin(), kAllRadiusEquations.end());
  } else {
    std::stringstream ss(cmd.equations);
    std::string item;
    while (std::getline(ss, item, ',')) ids.push_back(parse_radius_equation(item));
  }
  return table_csv(radius_table(ids, cmd.alphas));
}

std::string cmd_scan(const ScanCommand& cmd) {
  const HarmonicMap f = gallery(cmd.map);
  if (cmd.format == "csv") return scan_csv(f, cmd.r, cmd.samples);
  if (cmd.format == "json") return scan_circle(f, cmd.r, Order(cmd.alpha), cmd.samples).to_json() + "\n";
  throw Error(ErrorCode::invalid_argument, "unknown format '" + cmd.format + "'");
}

std::string cmd_certify(const CertifyCommand& cmd) {
  const Property property = parse_property(cmd.property);
  const Order alpha(cmd.alpha);
  if (cmd.map) {
    if (cmd.h_csv || cmd.g_csv) throw Error(ErrorCode::invalid_argument, "use either --map or --h-csv/--g-csv");
    return certify(gallery(*cmd.map), property, alpha).to_json() + "\n";
  }
  if (!cmd.h_csv || !cmd.g_csv) throw Error(ErrorCode::invalid_argument, "certify needs --map or both --h-csv and --g-csv");
  TruncatedSeries h = read_csv_file(*cmd.h_csv);
  TruncatedSeries g = read_csv_file(*cmd.g_csv);
  // Pad the shorter part with zeros so both share one order.
  const std::size_t n = std::max(h.order(), g.order());
  const auto pad = [n](const TruncatedSeries& s) {
    return TruncatedSeries::generate(n, [&s](std::size_t k) { return s.coefficient(k); }, s.tail());
  };
  return certify(HarmonicMap(pad(h), pad(g)), property, alpha).to_json() + "\n";
}

std::string cmd_convolve(const ConvolveCommand& cmd) {
  const std::size_t terms = cmd.terms ? cmd.terms : default_truncation();
  const HarmonicMap f = convolve(gallery(cmd.lhs, terms), gallery(cmd.rhs, terms));
  std::string out = "n,h_re,h_im,g_re,g_im\n";
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const Complex a = f.h().coefficient(n), b = f.g().coefficient(n);
    out += std::to_string(n) + "," + fmt(a.real()) + "," + fmt(a.imag()) + "," + fmt(b.real()) + "," +
           fmt(b.imag()) + "\n";
  }
  return out;
}

std::string cmd_gallery() {
  std::string out;
  for (const auto& e : gallery_listing()) out += e.name + "\t" + e.description + "\n";
  return out;
}

std::string cmd_plot(const PlotCommand& cmd) {
  PlotOptions options;
  options.r = cmd.r;
  options.circles = cmd.curves;
  options.spokes = cmd.spokes;
  const std::string svg = render_svg(gallery(cmd.map), options);
  if (cmd.out.empty()) return svg;
  std::ofstream file(cmd.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot write " + cmd.out);
  file << svg;
  if (!file) throw Error(ErrorCode::io_error, "failed writing " + cmd.out);
  return {};
}

}  // namespace harmonica
