#include "quadlie/report.hpp"

#include <sstream>

#include "quadlie/derivations.hpp"
#include "quadlie/oscillator_analysis.hpp"

namespace quadlie {

AnalysisReport analyze(const AlgebraFile& file, const AnalyzeOptions& options) {
  const LieAlgebra& g = file.algebra;
  AnalysisReport r;
  r.dim = g.dim();
  r.labels = g.labels();
  for (const auto& s : derived_series(g)) r.derived_series_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(g)) r.lower_central_series_dims.push_back(s.dim());
  const auto summary = structure_summary(g);
  r.center_dim = summary.center_dim;
  r.derived_dim = summary.derived_dim;
  r.local = summary.local;
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(g);
  r.abelian = g.is_abelian();

  const InvariantFormSpace forms = invariant_forms(g);
  r.invariant_forms_dim = forms.dim();
  r.invariant_forms_sym = forms.sym_dim();
  r.invariant_forms_skew = forms.skew_dim();

  std::optional<BilinearForm> chosen = options.form;
  r.form_source = options.form_source;
  if (!chosen && file.metric) {
    chosen = BilinearForm(*file.metric);
    r.form_source = "metric-key";
  }
  if (!chosen) {
    chosen = find_nondegenerate_symmetric(forms);
    r.form_source = chosen ? "search" : "none";
  }

  bool ok = true;
  if (chosen) {
    r.form_symmetric = chosen->is_symmetric();
    r.form_invariant = check_invariance(g, *chosen).empty();
    r.form_nondegenerate = chosen->is_nondegenerate();
    if (r.form_symmetric) r.signature = congruence_diagonalize(chosen->gram()).signature;
    if (r.form_invariant) {
      const auto dual = delta_map(g, *chosen);
      ok = ok && dual.module_map_ok && dual.bijective == r.form_nondegenerate;
    }
  }

  if (options.with_derivations) {
    const bool skew_usable =
        chosen && r.form_symmetric && r.form_invariant && r.form_nondegenerate;
    const DerivationProfile profile =
        derivation_profile(g, skew_usable ? std::optional<BilinearForm>(*chosen) : std::nullopt);
    r.der_dim = profile.der.dim();
    r.inner_dim = profile.inner.dim();
    if (profile.skew) r.skew_dim = profile.skew->dim();
    ok = ok && profile.der.contains(profile.inner);
    ok = ok && *r.inner_dim == r.dim - r.center_dim;
    if (profile.skew) ok = ok && profile.der.contains(*profile.skew);
  }

  if (file.oscillator) {
    const auto report = oscillator_class_check(file.oscillator->lambda);
    r.oscillator_class = to_string(report.predicted);
    r.oscillator_class_matches = report.matches_prediction;
    ok = ok && report.matches_prediction;
  }

  ok = ok && r.invariant_forms_sym + r.invariant_forms_skew == r.invariant_forms_dim;
  ok = ok && r.derived_series_dims.front() == r.dim;
  ok = ok && (!r.nilpotent || r.solvable);
  r.consistency_ok = ok;
  return r;
}

namespace {

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? ", " : "") << dims[i];
  return os.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "dimension:            " << r.dim << "\n";
  os << "basis:                ";
  for (std::size_t i = 0; i < r.labels.size(); ++i) os << (i ? " " : "") << r.labels[i];
  os << "\n";
  os << "derived series dims:  " << join_dims(r.derived_series_dims) << "\n";
  os << "lower central dims:   " << join_dims(r.lower_central_series_dims) << "\n";
  os << "center dim:           " << r.center_dim << "\n";
  os << "derived algebra dim:  " << r.derived_dim << "\n";
  os << "abelian / solvable / nilpotent: " << (r.abelian ? "yes" : "no") << " / "
     << (r.solvable ? "yes" : "no") << " / " << (r.nilpotent ? "yes" : "no") << "\n";
  os << "local (g2 unique maximal ideal): " << (r.local ? "yes" : "no") << "\n";
  os << "invariant forms:      dim " << r.invariant_forms_dim << " (sym " << r.invariant_forms_sym
     << ", skew " << r.invariant_forms_skew << "); metric dimension " << r.invariant_forms_dim
     << "\n";
  os << "chosen form:          " << r.form_source;
  if (r.form_source != "none") {
    os << " [symmetric " << (r.form_symmetric ? "yes" : "no") << ", invariant "
       << (r.form_invariant ? "yes" : "no") << ", nondegenerate "
       << (r.form_nondegenerate ? "yes" : "no") << "]";
    if (r.signature)
      os << " signature (" << r.signature->positive << ", " << r.signature->negative << ")";
  }
  os << "\n";
  if (r.der_dim) {
    os << "derivations:          dim " << *r.der_dim << " (inner " << *r.inner_dim;
    if (r.skew_dim) os << ", skew " << *r.skew_dim;
    os << ")\n";
  }
  if (r.oscillator_class)
    os << "oscillator class:     " << *r.oscillator_class
       << (r.oscillator_class_matches ? " (verified)" : " (MISMATCH)") << "\n";
  os << "consistency:          " << (r.consistency_ok ? "ok" : "FAILED") << "\n";
  return os.str();
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["dim"] = r.dim;
  j["labels"] = r.labels;
  j["derived_series_dims"] = r.derived_series_dims;
  j["lower_central_series_dims"] = r.lower_central_series_dims;
  j["center_dim"] = r.center_dim;
  j["derived_dim"] = r.derived_dim;
  j["abelian"] = r.abelian;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["local"] = r.local;
  j["metric_dimension"] = r.invariant_forms_dim;
  j["invariant_forms"] = {{"dim", r.invariant_forms_dim},
                          {"sym", r.invariant_forms_sym},
                          {"skew", r.invariant_forms_skew}};
  j["form"] = {{"source", r.form_source},
               {"symmetric", r.form_symmetric},
               {"invariant", r.form_invariant},
               {"nondegenerate", r.form_nondegenerate}};
  if (r.signature)
    j["form"]["signature"] = {{"positive", r.signature->positive},
                              {"negative", r.signature->negative}};
  if (r.der_dim) {
    j["derivations"] = {{"dim", *r.der_dim}, {"inner", *r.inner_dim}};
    if (r.skew_dim) j["derivations"]["skew"] = *r.skew_dim;
  }
  if (r.oscillator_class) {
    j["oscillator_class"] = *r.oscillator_class;
    j["oscillator_class_matches"] = r.oscillator_class_matches;
  }
  j["consistency_ok"] = r.consistency_ok;
  return j;
}

}  // namespace quadlie
