#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cornerspec {

// A spectrum of a positive self-adjoint operator in the shape
//   {finite discrete part} ∪ [threshold, ∞)
// with the ray optional. Discrete points at or above the threshold are
// absorbed by the ray on construction.
class SpectrumDesc {
 public:
  SpectrumDesc() = default;
  SpectrumDesc(std::vector<double> discrete, std::optional<double> threshold);

  static SpectrumDesc discrete_only(std::vector<double> values) { return {std::move(values), std::nullopt}; }
  static SpectrumDesc ray(double threshold) { return {{}, threshold}; }
  static SpectrumDesc empty() { return {}; }

  const std::vector<double>& discrete() const { return discrete_; }
  const std::optional<double>& essential_threshold() const { return threshold_; }
  bool has_ray() const { return threshold_.has_value(); }
  bool is_empty() const { return discrete_.empty() && !threshold_; }

  bool contains(double x) const;

  friend bool operator==(const SpectrumDesc&, const SpectrumDesc&) = default;

 private:
  std::vector<double> discrete_;
  std::optional<double> threshold_;
};

// Minimum of the spectrum; DomainError on the fully empty spectrum.
double min_spectrum(const SpectrumDesc& s);

// σ of the indicial family λ² + (block spectra) swept over λ ∈ ℝ: the ray
// starting at the smallest point of either block. `lower` is the (p-1)-form
// block and must be absent exactly when p = 0. An empty block (degree out of
// range on the face) contributes nothing; both blocks empty is an error.
SpectrumDesc indicial_spectrum(int p, const SpectrumDesc& block_p,
                               const std::optional<SpectrumDesc>& lower);

SpectrumDesc spectrum_union(const SpectrumDesc& a, const SpectrumDesc& b);

// Shortest round-trip decimal for a double ("3", "0.5", "1e-07").
std::string format_real(double v);

// "{v1, v2} ∪ [m, ∞)" style rendering.
std::string render_text(const SpectrumDesc& s);

// CSV row "v1;v2;...,m" (threshold "EMPTY" when there is no ray).
std::string to_csv_row(const SpectrumDesc& s);
SpectrumDesc from_csv_row(const std::string& row);

}  // namespace cornerspec
