#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harmonica/commands.hpp"
#include "harmonica/error.hpp"

using namespace harmonica;

int main(int argc, char** argv) {
  CLI::App app{"Planar harmonic mappings: radii, scans, certificates and plots"};
  app.require_subcommand(1);

  RadiusCommand radius;
  std::string equation, map;
  auto* radius_cmd = app.add_subcommand("radius", "Radius of starlikeness or convexity");
  radius_cmd->add_option("--equation", equation, "Radius equation id (Eq3_2 ... Eq4_3)");
  radius_cmd->add_option("--map", map, "Gallery map name");
  radius_cmd->add_option("--property", radius.property, "starlike | convex");
  radius_cmd->add_option("--alpha", radius.alphas, "Order(s) alpha in [0, 1)")->delimiter(',');
  radius_cmd->add_option("--method", radius.method, "closed | solve | scan");
  radius_cmd->add_option("--format", radius.format, "json | csv");

  TableCommand table;
  auto* table_cmd = app.add_subcommand("table", "CSV of every radius equation over a list of orders");
  table_cmd->add_option("--alphas", table.alphas, "Comma-separated orders")->delimiter(',');
  table_cmd->add_option("--equations", table.equations, "all | comma-separated ids");

  ScanCommand scan;
  auto* scan_cmd = app.add_subcommand("scan", "Sample the circle quantities on |z| = r");
  scan_cmd->add_option("--map", scan.map, "Gallery map name")->required();
  scan_cmd->add_option("--r", scan.r, "Circle radius")->required();
  scan_cmd->add_option("--alpha", scan.alpha, "Order alpha");
  scan_cmd->add_option("--samples", scan.samples, "Grid size");
  scan_cmd->add_option("--format", scan.format, "csv | json");

  CertifyCommand certify;
  std::string cert_map, h_csv, g_csv;
  auto* certify_cmd = app.add_subcommand("certify", "Coefficient-sum certificate");
  certify_cmd->add_option("--map", cert_map, "Gallery map name");
  certify_cmd->add_option("--h-csv", h_csv, "Coefficient CSV of the analytic part");
  certify_cmd->add_option("--g-csv", g_csv, "Coefficient CSV of the co-analytic part");
  certify_cmd->add_option("--property", certify.property, "starlike | convex");
  certify_cmd->add_option("--alpha", certify.alpha, "Order alpha");

  ConvolveCommand conv;
  auto* convolve_cmd = app.add_subcommand("convolve", "Coefficients of a convolution");
  convolve_cmd->add_option("--lhs", conv.lhs, "Gallery map name")->required();
  convolve_cmd->add_option("--rhs", conv.rhs, "Gallery map name")->required();
  convolve_cmd->add_option("--terms", conv.terms, "Number of coefficients");

  auto* gallery_cmd = app.add_subcommand("gallery", "List the named maps");

  PlotCommand plot;
  auto* plot_cmd = app.add_subcommand("plot", "SVG of the image of concentric circles and spokes");
  plot_cmd->add_option("--map", plot.map, "Gallery map name")->required();
  plot_cmd->add_option("--r", plot.r, "Outer radius")->required();
  plot_cmd->add_option("--curves", plot.curves, "Number of circles");
  plot_cmd->add_option("--spokes", plot.spokes, "Number of radial segments");
  plot_cmd->add_option("--out", plot.out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::string out;
    if (*radius_cmd) {
      if (!equation.empty()) radius.equation = equation;
      if (!map.empty()) radius.map = map;
      out = cmd_radius(radius);
    } else if (*table_cmd) {
      out = cmd_table(table);
    } else if (*scan_cmd) {
      out = cmd_scan(scan);
    } else if (*certify_cmd) {
      if (!cert_map.empty()) certify.map = cert_map;
      if (!h_csv.empty()) certify.h_csv = h_csv;
      if (!g_csv.empty()) certify.g_csv = g_csv;
      out = cmd_certify(certify);
    } else if (*convolve_cmd) {
      out = cmd_convolve(conv);
    } else if (*gallery_cmd) {
      out = cmd_gallery();
    } else if (*plot_cmd) {
      out = cmd_plot(plot);
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return 0;
  } catch (const Error& e) {
    std::cerr << e.to_json() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Error(ErrorCode::invalid_argument, e.what()).to_json() << "\n";
    return 2;
  }
}
