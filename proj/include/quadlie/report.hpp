#ifndef QUADLIE_REPORT_HPP
#define QUADLIE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadlie/forms.hpp"
#include "quadlie/json_io.hpp"
#include "quadlie/linalg.hpp"

namespace quadlie {

/// Full structural analysis of an algebra file: series dimensions, center,
/// invariant-form space, the signature of the chosen form, derivation
/// dimensions, and the oscillator class verdict when metadata is present.
struct AnalysisReport {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lower_central_series_dims;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool abelian = false;
  bool local = false;

  std::size_t invariant_forms_dim = 0;  // the metric dimension
  std::size_t invariant_forms_sym = 0;
  std::size_t invariant_forms_skew = 0;

  /// "metric-key", "phi(t,s)", "form-file", "search", or "none".
  std::string form_source = "none";
  bool form_symmetric = false;
  bool form_invariant = false;
  bool form_nondegenerate = false;
  std::optional<Signature> signature;

  std::optional<std::size_t> der_dim;
  std::optional<std::size_t> inner_dim;
  std::optional<std::size_t> skew_dim;

  std::optional<std::string> oscillator_class;
  bool oscillator_class_matches = true;

  /// Internal cross-checks (inner = dim - center, sym + skew = total, ...).
  bool consistency_ok = false;
};

struct AnalyzeOptions {
  /// An explicitly chosen form takes precedence over the file's metric key.
  std::optional<BilinearForm> form;
  std::string form_source = "none";
  /// The derivation solve is the expensive part on larger inputs.
  bool with_derivations = true;
};

AnalysisReport analyze(const AlgebraFile& file, const AnalyzeOptions& options = {});

std::string report_to_text(const AnalysisReport& r);
nlohmann::json report_to_json(const AnalysisReport& r);

}  // namespace quadlie

#endif  // QUADLIE_REPORT_HPP
