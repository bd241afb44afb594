#include "cornerspec/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cornerspec/catalog.hpp"
#include "cornerspec/cochain.hpp"
#include "cornerspec/complex_io.hpp"
#include "cornerspec/cylinder_oracle.hpp"
#include "cornerspec/errors.hpp"
#include "cornerspec/ess_recursion.hpp"

namespace cornerspec::cli {

namespace {

class UnsupportedQuery : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool parse_number(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

std::complex<double> parse_shift(const std::string& text) {
  auto fail = [&]() -> std::complex<double> {
    throw ValidationError("cannot parse complex shift '" + text + "' (expected a, a+bi or a-bi)");
  };
  if (text.empty()) return fail();
  if (text.back() != 'i') {
    double re = 0.0;
    if (!parse_number(text, re)) return fail();
    return {re, 0.0};
  }
  const std::string body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  std::string imag_part = split == std::string::npos ? body : body.substr(split);
  if (split != std::string::npos && !parse_number(body.substr(0, split), re)) return fail();
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else if (!parse_number(imag_part, im)) {
    return fail();
  }
  return {re, im};
}

namespace {

void write_header(std::ostream& out, const RunConfig& cfg, const CornerComplex& cc) {
  out << "# cornerspec " << cfg.command << "\n";
  out << "# input: " << std::filesystem::path(cfg.input).filename().string() << " (complex " << cc.name()
      << ", dim " << cc.dim() << ")\n";
  if (cfg.p_given) out << "# p: " << cfg.p << "\n";
  out << "# resolution: " << describe(cfg.resolution) << "\n";
  out << "# certified_only: " << (cfg.certified_only ? "true" : "false") << "\n";
  out << "# weights:";
  if (cc.weights().weights.empty()) out << " (none)";
  for (const auto& [id, w] : cc.weights().weights) out << ' ' << id << '=' << w;
  out << " (thresholds use face geometry only)\n";
}

std::string threshold_text(const Threshold& t) {
  return t.value ? format_real(*t.value) : "EMPTY";
}

std::string bound_note(bool exact, const RunConfig& cfg) {
  if (exact || !cfg.certified_only) return "";
  return " (upper bound: intermediate faces may carry undetected eigenvalues)";
}

RecursionOptions options_for(const RunConfig& cfg) {
  RecursionOptions opts;
  opts.resolution = cfg.resolution;
  opts.certified_only = cfg.certified_only;
  if (!cfg.bound_states.empty()) opts.bound_states = load_bound_states(cfg.bound_states);
  return opts;
}

void require_p(const RunConfig& cfg, const CornerComplex& cc) {
  if (!cfg.p_given) throw ValidationError(cfg.command + " needs --p");
  if (cfg.p < 0 || cfg.p > cc.dim()) {
    throw UnsupportedQuery("degree " + std::to_string(cfg.p) + " outside [0, " + std::to_string(cc.dim()) + "]");
  }
}

bool has_boundary(const CornerComplex& cc) {
  for (const auto& f : cc.faces())
    if (f.codim == 1) return true;
  return false;
}

int cmd_validate(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  const auto report = validate_complex(cc);
  if (cfg.format == Format::csv) {
    out << "face,rule,detail\n";
    for (const auto& v : report) out << v.face << ',' << v.rule << ",\"" << v.detail << "\"\n";
  } else {
    write_header(out, cfg, cc);
    if (report.empty()) out << "valid: " << cc.faces().size() << " faces, " << hyperfaces(cc).size() << " hyperfaces\n";
    for (const auto& v : report) out << "violation: " << v.face << ": " << v.rule << " (" << v.detail << ")\n";
  }
  return report.empty() ? kOk : kInvalidInput;
}

int cmd_threshold(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_p(cfg, cc);
  const auto opts = options_for(cfg);
  const Threshold t = essential_threshold(cc, cfg.p, opts);
  if (cfg.format == Format::csv) {
    write_header(out, cfg, cc);
    out << "p,essential_threshold,exact\n"
        << cfg.p << ',' << threshold_text(t) << ',' << (t.exact ? "true" : "false") << "\n";
  } else {
    write_header(out, cfg, cc);
    out << "essential threshold: " << threshold_text(t) << bound_note(t.exact, cfg) << "\n";
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_p(cfg, cc);
  const auto opts = options_for(cfg);
  const SpectrumDesc s = full_spectrum(cc, cfg.p, opts);
  const auto& values = s.discrete();
  const auto groups = multiplicity_groups(values);
  const int kernel = static_cast<int>(std::count(values.begin(), values.end(), 0.0));
  write_header(out, cfg, cc);
  if (cfg.format == Format::csv) {
    out << "# kernel_dim=" << kernel << "\n";
    out << "# essential_threshold=" << (s.essential_threshold() ? format_real(*s.essential_threshold()) : "EMPTY")
        << "\n";
    out << "index,eigenvalue,multiplicity_group\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << i << ',' << format_real(values[i]) << ',' << groups[i] << "\n";
    }
  } else {
    out << "spectrum: " << render_text(s) << "\n";
    out << "kernel_dim: " << kernel << "\n";
    if (!values.empty()) {
      out << std::setw(6) << "index" << "  " << std::setw(24) << "eigenvalue" << "  group\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << std::setw(6) << i << "  " << std::setw(24) << format_real(values[i]) << "  " << groups[i] << "\n";
      }
    }
  }
  return kOk;
}

void write_certificate_table(std::ostream& out, const IndicialCertificate& cert, bool compactness,
                             const RunConfig& cfg) {
  out << (compactness ? "compact: " : "fredholm: ") << (cert.verdict ? "true" : "false") << "\n";
  out << "operator: " << cert.operator_label << (compactness ? ", s = " : ", z = ") << cert.shift << "\n";
  out << "elliptic: " << (cert.elliptic ? "true" : "false") << "\n";
  if (compactness) {
    out << "principal symbol vanishes: " << (cert.principal_symbol_vanishes ? "true" : "false") << "\n";
  }
  if (cert.hyperfaces.empty()) {
    out << "no hyperfaces: no indicial conditions\n";
    return;
  }
  out << "hyperface  degree  indicial spectrum  " << (compactness ? "indicial norm" : "verdict") << "\n";
  for (const auto& hc : cert.hyperfaces) {
    out << hc.face << "  " << hc.degree << "  " << render_text(hc.indicial) << "  ";
    if (compactness) {
      out << format_real(hc.indicial_norm) << " (nonvanishing)";
    } else {
      out << (hc.invertible ? "invertible" : "not invertible");
    }
    out << bound_note(hc.exact, cfg) << "\n";
  }
}

int cmd_fredholm(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_p(cfg, cc);
  if (!cfg.z_given) throw ValidationError("fredholm needs --z");
  const auto opts = options_for(cfg);
  const auto [verdict, cert] = is_fredholm({LaplacianShift{cfg.p, cfg.z}, cc}, opts);
  write_header(out, cfg, cc);
  if (cfg.format == Format::csv) out << certificate_csv(cert);
  else write_certificate_table(out, cert, false, cfg);
  return kOk;
}

int cmd_compactness(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_p(cfg, cc);
  const auto opts = options_for(cfg);
  const auto [verdict, cert] = is_compact({ResolventPower{cfg.p, cfg.s}, cc}, opts);
  write_header(out, cfg, cc);
  if (cfg.format == Format::csv) out << certificate_csv(cert);
  else write_certificate_table(out, cert, true, cfg);
  return kOk;
}

int cmd_betti(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_valid(cc);
  if (has_boundary(cc)) throw UnsupportedQuery("betti needs a closed complex (no hyperfaces)");
  const Face& top = cc.face(cc.top_face());
  Mesh mesh;
  try {
    mesh = mesh_for_geometry(top.geometry, cfg.resolution);
  } catch (const DomainError& e) {
    throw UnsupportedQuery(e.what());
  }
  const CochainComplex cx = build_cochain_complex(mesh);
  write_header(out, cfg, cc);
  out << "# mesh: " << mesh.count(0) << " vertices, dim " << mesh.dim() << ", duals "
      << (cx.dual == DualKind::circumcentric ? "circumcentric" : "barycentric (fallback)") << "\n";
  if (cfg.format == Format::csv) {
    out << "p,betti,integer_rank\n";
  } else {
    out << "p  betti  integer_rank\n";
  }
  const char* sep = cfg.format == Format::csv ? "," : "  ";
  for (int p = 0; p <= cx.dim; ++p) {
    out << p << sep << betti(cx, p) << sep << cohomology_rank(cx, p) << "\n";
  }
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, const CornerComplex& cc, std::ostream& out) {
  require_p(cfg, cc);
  require_valid(cc);
  const auto opts = options_for(cfg);
  write_header(out, cfg, cc);
  out << "hyperface,L,grid_n,ground_energy,predicted_threshold,gap\n";
  int rows = 0;
  for (const auto& h : hyperfaces(cc)) {
    if (!is_minimal(cc, h)) {
      out << "# skipped " << h << ": cross-section is not closed\n";
      continue;
    }
    const Face& f = cc.face(h);
    std::vector<double> cross;
    std::optional<SpectrumDesc> lower;
    SpectrumDesc upper = SpectrumDesc::empty();
    if (cfg.p <= f.dim) {
      upper = face_base_spectrum(f.geometry, cfg.p, opts.resolution);
      cross.insert(cross.end(), upper.discrete().begin(), upper.discrete().end());
    }
    if (cfg.p > 0) {
      lower = face_base_spectrum(f.geometry, cfg.p - 1, opts.resolution);
      cross.insert(cross.end(), lower->discrete().begin(), lower->discrete().end());
    }
    const double predicted = min_spectrum(indicial_spectrum(cfg.p, upper, lower));
    for (double length : cfg.lengths) {
      const double e = cylinder_ground_energy(cylinder_from_spectrum(cross, length, cfg.grid));
      out << h << ',' << format_real(length) << ',' << cfg.grid << ',' << format_real(e) << ','
          << format_real(predicted) << ',' << format_real(e - predicted) << "\n";
      ++rows;
    }
  }
  if (rows == 0) throw UnsupportedQuery("oracle needs at least one closed hyperface");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Essential spectra, Fredholm and compactness answers for Hodge Laplacians on manifolds with corners",
               "cornerspec"};
  std::string z_text, format = "table", method = "catalog";
  app.add_option("command", cfg.command, "validate | spectrum | threshold | fredholm | compactness | betti | oracle")
      ->required()
      ->check(CLI::IsMember({"validate", "spectrum", "threshold", "fredholm", "compactness", "betti", "oracle"}));
  app.add_option("--input", cfg.input, "complex description (JSON)")->required();
  auto* p_opt = app.add_option("--p", cfg.p, "form degree");
  app.add_option("--z", z_text, "spectral shift: a, a+bi or a-bi");
  app.add_option("--s", cfg.s, "resolvent power for compactness queries")->capture_default_str();
  app.add_option("--length", cfg.lengths, "cylinder lengths for the oracle")->delimiter(',');
  app.add_option("--grid", cfg.grid, "oracle grid points")->capture_default_str();
  app.add_option("--subdiv", cfg.resolution.sphere_subdivisions, "sphere mesh subdivisions")->capture_default_str();
  app.add_option("--segments", cfg.resolution.circle_segments, "circle mesh segments")->capture_default_str();
  app.add_option("--torus-grid", cfg.resolution.torus_grid, "torus mesh grid size")->capture_default_str();
  app.add_option("--cutoff", cfg.resolution.cutoff, "catalog eigenvalue cutoff")->capture_default_str();
  app.add_option("--tol", cfg.resolution.jacobi_tolerance, "eigensolver tolerance")->capture_default_str();
  app.add_option("--method", method, "catalog | dec")->check(CLI::IsMember({"catalog", "dec"}));
  app.add_flag("--certified", cfg.certified_only, "annotate values that are only upper bounds");
  app.add_option("--format", format, "table | csv")->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--bound-states", cfg.bound_states, "JSON map face -> degree -> eigenvalues");

  std::vector<const char*> argv{"cornerspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  cfg.p_given = p_opt->count() > 0;
  cfg.format = format == "csv" ? Format::csv : Format::table;
  cfg.resolution.method = method == "dec" ? SpectrumMethod::dec : SpectrumMethod::catalog;

  try {
    if (!z_text.empty()) {
      cfg.z = parse_shift(z_text);
      cfg.z_given = true;
    }
    const CornerComplex cc = load_complex(cfg.input);
    if (cfg.command != "validate") require_valid(cc);
    if (cfg.command == "validate") return cmd_validate(cfg, cc, out);
    if (cfg.command == "threshold") return cmd_threshold(cfg, cc, out);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, cc, out);
    if (cfg.command == "fredholm") return cmd_fredholm(cfg, cc, out);
    if (cfg.command == "compactness") return cmd_compactness(cfg, cc, out);
    if (cfg.command == "betti") return cmd_betti(cfg, cc, out);
    return cmd_oracle(cfg, cc, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const UnsupportedQuery& e) {
    err << "unsupported query: " << e.what() << "\n";
    return kUnsupportedQuery;
  } catch (const DomainError& e) {
    err << "unsupported query: " << e.what() << "\n";
    return kUnsupportedQuery;
  } catch (const ResourceError& e) {
    err << "unsupported query: " << e.what() << "\n";
    return kUnsupportedQuery;
  }
}

SpectrumDesc parse_spectrum_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<double> threshold;
  std::vector<double> values;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# essential_threshold=";
      if (line.rfind(key, 0) == 0) {
        const std::string v = line.substr(key.size());
        if (v != "EMPTY") threshold = from_csv_row("," + v).essential_threshold();
      }
      continue;
    }
    if (!header_seen) {
      if (line != "index,eigenvalue,multiplicity_group") throw ValidationError("unexpected spectrum CSV header");
      header_seen = true;
      continue;
    }
    const auto a = line.find(','), b = line.rfind(',');
    if (a == std::string::npos || a == b) throw ValidationError("bad spectrum CSV row: " + line);
    values.push_back(from_csv_row(line.substr(a + 1, b - a - 1) + ",EMPTY").discrete().front());
  }
  return {std::move(values), threshold};
}

}  // namespace cornerspec::cli
