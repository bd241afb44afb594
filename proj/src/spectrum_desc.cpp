#include "cornerspec/spectrum_desc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cornerspec/errors.hpp"

namespace cornerspec {

SpectrumDesc::SpectrumDesc(std::vector<double> discrete, std::optional<double> threshold)
    : discrete_(std::move(discrete)), threshold_(threshold) {
  for (double v : discrete_) {
    if (!(v >= 0.0)) throw DomainError("spectrum values must be nonnegative, got " + format_real(v));
  }
  if (threshold_ && !(*threshold_ >= 0.0)) {
    throw DomainError("essential threshold must be nonnegative");
  }
  std::sort(discrete_.begin(), discrete_.end());
  if (threshold_) {
    auto cut = std::lower_bound(discrete_.begin(), discrete_.end(), *threshold_);
    discrete_.erase(cut, discrete_.end());
  }
}

bool SpectrumDesc::contains(double x) const {
  if (threshold_ && x >= *threshold_) return true;
  return std::binary_search(discrete_.begin(), discrete_.end(), x);
}

double min_spectrum(const SpectrumDesc& s) {
  if (s.is_empty()) throw DomainError("min of an empty spectrum");
  double m = std::numeric_limits<double>::infinity();
  if (!s.discrete().empty()) m = s.discrete().front();
  if (s.essential_threshold()) m = std::min(m, *s.essential_threshold());
  return m;
}

SpectrumDesc indicial_spectrum(int p, const SpectrumDesc& block_p,
                               const std::optional<SpectrumDesc>& lower) {
  if (p < 0) throw DomainError("negative form degree");
  if (p == 0 && lower) throw DomainError("p = 0 has no (p-1)-form block");
  if (p > 0 && !lower) throw DomainError("p > 0 requires the (p-1)-form block");

  double m = std::numeric_limits<double>::infinity();
  if (!block_p.is_empty()) m = min_spectrum(block_p);
  if (lower && !lower->is_empty()) m = std::min(m, min_spectrum(*lower));
  if (std::isinf(m)) throw DomainError("indicial operator with no form blocks");
  return SpectrumDesc::ray(m);
}

SpectrumDesc spectrum_union(const SpectrumDesc& a, const SpectrumDesc& b) {
  std::vector<double> merged;
  std::set_union(a.discrete().begin(), a.discrete().end(), b.discrete().begin(),
                 b.discrete().end(), std::back_inserter(merged));
  std::optional<double> t;
  if (a.essential_threshold() && b.essential_threshold()) {
    t = std::min(*a.essential_threshold(), *b.essential_threshold());
  } else if (a.essential_threshold()) {
    t = a.essential_threshold();
  } else {
    t = b.essential_threshold();
  }
  return {std::move(merged), t};
}

std::string format_real(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string render_text(const SpectrumDesc& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.discrete().size(); ++i) {
    if (i) os << ", ";
    os << format_real(s.discrete()[i]);
  }
  os << "}";
  if (s.essential_threshold()) os << " ∪ [" << format_real(*s.essential_threshold()) << ", ∞)";
  return os.str();
}

std::string to_csv_row(const SpectrumDesc& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.discrete().size(); ++i) {
    if (i) os << ';';
    os << format_real(s.discrete()[i]);
  }
  os << ',' << (s.essential_threshold() ? format_real(*s.essential_threshold()) : "EMPTY");
  return os.str();
}

namespace {

double parse_real(std::string_view text) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

SpectrumDesc from_csv_row(const std::string& row) {
  auto comma = row.rfind(',');
  if (comma == std::string::npos) throw ValidationError("spectrum row needs 'discrete,threshold'");
  std::vector<double> discrete;
  std::string_view list(row.data(), comma);
  while (!list.empty()) {
    auto semi = list.find(';');
    discrete.push_back(parse_real(list.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    list.remove_prefix(semi + 1);
  }
  std::string_view tail(row.data() + comma + 1, row.size() - comma - 1);
  std::optional<double> t;
  if (tail != "EMPTY") t = parse_real(tail);
  return {std::move(discrete), t};
}

}  // namespace cornerspec
