#pragma once

#include <optional>
#include <string>
#include <vector>

namespace harmonica {

// Entry points behind the CLI verbs. Each returns the text written to stdout
// and throws harmonica::Error on failure.

struct RadiusCommand {
  std::optional<std::string> equation;
  std::optional<std::string> map;
  std::string property = "starlike";
  std::vector<double> alphas{0.0};
  std::string method;  // closed | solve | scan; empty picks per target
  std::string format = "json";
};
std::string cmd_radius(const RadiusCommand& cmd);

struct TableCommand {
  std::vector<double> alphas{0.0};
  std::string equations = "all";  // "all" or a comma-separated list
};
std::string cmd_table(const TableCommand& cmd);

struct ScanCommand {
  std::string map;
  double r = 0.5;
  double alpha = 0.0;
  int samples = 4096;
  std::string format = "csv";  // csv rows or the json report
};
std::string cmd_scan(const ScanCommand& cmd);

struct CertifyCommand {
  std::optional<std::string> map;
  std::optional<std::string> h_csv;
  std::optional<std::string> g_csv;
  std::string property = "starlike";
  double alpha = 0.0;
};
std::string cmd_certify(const CertifyCommand& cmd);

struct ConvolveCommand {
  std::string lhs;
  std::string rhs;
  std::size_t terms = 0;  // 0: default truncation
};
/// Header `n,h_re,h_im,g_re,g_im`.
std::string cmd_convolve(const ConvolveCommand& cmd);

std::string cmd_gallery();

struct PlotCommand {
  std::string map;
  double r = 0.5;
  int curves = 8;
  int spokes = 16;
  std::string out;  // empty: SVG goes to stdout
};
std::string cmd_plot(const PlotCommand& cmd);

}  // namespace harmonica
