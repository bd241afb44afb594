#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cornerspec/face_spectrum.hpp"
#include "cornerspec/spectrum_desc.hpp"

namespace cornerspec::cli {

enum class Format { table, csv };

struct RunConfig {
  std::string command;  // validate | spectrum | threshold | fredholm | compactness | betti | oracle
  std::string input;
  int p = 0;
  bool p_given = false;
  std::complex<double> z{0.0, 0.0};
  bool z_given = false;
  double s = 1.0;
  std::vector<double> lengths{5.0, 10.0, 20.0};
  int grid = 400;
  Resolution resolution;
  Format format = Format::table;
  bool certified_only = false;
  std::string bound_states;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kNumericalFailure = 2;
inline constexpr int kUnsupportedQuery = 3;

// Accepts "a", "a+bi", "a-bi", "bi", "i" with '.' as decimal point.
std::complex<double> parse_shift(const std::string& text);

// Runs one command; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Re-reads the CSV written by `spectrum --format csv`.
SpectrumDesc parse_spectrum_csv(const std::string& text);

}  // namespace cornerspec::cli
