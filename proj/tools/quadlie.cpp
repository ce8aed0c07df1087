// quadlie: construct, analyze and double-extend metric Lie algebras over
// the rationals, with machine-checkable certificates.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadlie/checks.hpp"
#include "quadlie/constructions.hpp"
#include "quadlie/json_io.hpp"
#include "quadlie/oscillator_analysis.hpp"
#include "quadlie/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::vector<quadlie::Rational> parse_lambda_csv(const std::string& csv) {
  std::vector<quadlie::Rational> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string tok =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) out.push_back(quadlie::Rational::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw quadlie::ParseError("empty lambda list");
  return out;
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string t = "0";
  std::string s = "1";
  std::string output;
};

int run_construct(const ConstructArgs& args) {
  using namespace quadlie;
  AlgebraFile file;
  std::string default_name;

  auto param_size = [&](std::size_t at) -> std::size_t {
    if (at >= args.params.size())
      throw ParseError("missing parameter for construct " + args.kind);
    return static_cast<std::size_t>(std::stoul(args.params[at]));
  };

  if (args.kind == "heisenberg") {
    const std::size_t m = param_size(0);
    file.algebra = heisenberg(m);
    default_name = "heisenberg_" + std::to_string(2 * m + 1) + ".json";
  } else if (args.kind == "oscillator") {
    std::vector<Rational> lambda;
    for (const auto& p : args.params) lambda.push_back(Rational::parse(p));
    const OscillatorSpec spec(lambda, Rational::parse(args.t), Rational::parse(args.s));
    const MetricLieAlgebra d = oscillator(spec);
    file.algebra = d.algebra;
    file.metric = d.form.gram();
    file.oscillator = spec;
    default_name = "oscillator_" + std::to_string(2 * spec.m + 2) + ".json";
  } else if (args.kind == "su" || args.kind == "so") {
    const std::size_t m = param_size(0);
    const MatrixLieAlgebra model = args.kind == "su" ? su_model(m) : so_model(m);
    file.algebra = model.to_abstract(args.kind);
    default_name = args.kind + std::to_string(m) + ".json";
  } else if (args.kind == "mixed") {
    const std::size_t m = param_size(0);
    if (args.params.size() < 2) throw ParseError("construct mixed needs: <m> <su|so>");
    const std::string kind_name = args.params[1];
    if (kind_name != "su" && kind_name != "so") throw ParseError("mixed kind must be su or so");
    const ExtensionResult ext =
        mixed_double_extension(m, kind_name == "su" ? MixedKind::su : MixedKind::so);
    file.algebra = ext.extended.algebra;
    file.metric = ext.extended.form.gram();
    default_name = "mixed_" + kind_name + std::to_string(m) + ".json";
  } else {
    throw ParseError("unknown construct kind: " + args.kind);
  }

  const std::string path = args.output.empty() ? default_name : args.output;
  save_algebra_file(path, file);
  std::cout << "wrote " << path << "\n";
  std::cout << "dim " << file.algebra.dim() << "\n";
  std::cout << "basis";
  for (const auto& l : file.algebra.labels()) std::cout << " " << l;
  std::cout << "\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string input;
  std::string form_ts;
  std::string form_file;
  std::string output;
  bool as_json = false;
  bool no_derivations = false;
};

int run_analyze(const AnalyzeArgs& args) {
  using namespace quadlie;
  const AlgebraFile file = load_algebra_file(args.input);
  AnalyzeOptions options;
  options.with_derivations = !args.no_derivations;
  if (!args.form_ts.empty() && !args.form_file.empty())
    throw ParseError("--form and --form-file are mutually exclusive");
  if (!args.form_ts.empty()) {
    // phi_{t,s} on the oscillator basis convention: first = delta,
    // last = delta*, euclidean block in between.
    const std::size_t comma = args.form_ts.find(',');
    if (comma == std::string::npos) throw ParseError("--form expects t,s");
    const Rational t = Rational::parse(args.form_ts.substr(0, comma));
    const Rational s = Rational::parse(args.form_ts.substr(comma + 1));
    if (file.algebra.dim() < 2 || file.algebra.dim() % 2 != 0)
      throw ValidationError("--form t,s needs an even-dimensional oscillator-basis file");
    options.form = oscillator_form(file.algebra.dim() / 2 - 1, t, s);
    options.form_source = "phi(" + t.str() + "," + s.str() + ")";
  } else if (!args.form_file.empty()) {
    options.form = BilinearForm(rational_matrix_from_json(load_json(args.form_file)));
    if (options.form->dim() != file.algebra.dim())
      throw ValidationError("form file dimension mismatch");
    options.form_source = "form-file";
  }

  const AnalysisReport report = analyze(file, options);
  if (args.as_json)
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  if (!args.output.empty()) save_json(args.output, report_to_json(report));
  return report.consistency_ok ? kExitOk : kExitValidation;
}

struct ExtendArgs {
  std::string base, extender, hom;
  std::string output = "extended.json";
  std::string cert;
};

int run_extend(const ExtendArgs& args) {
  using namespace quadlie;
  const AlgebraFile base = load_algebra_file(args.base);
  if (!base.metric) throw ValidationError("base file needs a metric key");
  const AlgebraFile extender = load_algebra_file(args.extender);
  const std::vector<Matrix> images = hom_images_from_json(load_json(args.hom));

  ExtensionInput input{{base.algebra, BilinearForm(*base.metric)}, extender.algebra, images};
  const ExtensionResult ext = [&] {
    try {
      return double_extension(input);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }();

  AlgebraFile out;
  out.algebra = ext.extended.algebra;
  out.metric = ext.extended.form.gram();
  save_algebra_file(args.output, out);
  std::cout << "wrote " << args.output << " (dim " << out.algebra.dim() << ")\n";
  if (!args.cert.empty()) {
    save_json(args.cert, extension_certificate_to_json(ext.certificate));
    std::cout << "wrote certificate " << args.cert << "\n";
  }
  std::cout << "jacobi triples checked:     " << ext.certificate.jacobi_triples_checked << "\n";
  std::cout << "invariance triples checked: " << ext.certificate.invariance_triples_checked
            << "\n";
  std::cout << "nondegeneracy determinant:  " << ext.certificate.gram_det.str() << "\n";
  return kExitOk;
}

struct ReproduceArgs {
  std::string claim;
  std::optional<std::size_t> m;
  std::string lambda_csv;
  std::string kind;
  unsigned seed = 20250809;
};

int run_reproduce(const ReproduceArgs& args) {
  using namespace quadlie;
  ReproduceOptions options;
  options.m = args.m;
  if (!args.lambda_csv.empty()) options.lambda = parse_lambda_csv(args.lambda_csv);
  if (!args.kind.empty()) options.kind = args.kind;
  options.seed = args.seed;

  std::vector<CheckResult> results;
  if (args.claim == "all") {
    results = run_acceptance_suite();
  } else {
    results.push_back(run_claim(args.claim, options));
  }
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description << "\n";
    std::cout << "       " << r.details << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for metric Lie algebras: oscillator and Heisenberg "
               "constructions, invariant forms, derivations and double extensions"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "build an algebra and write its JSON file");
  construct->add_option("kind", construct_args.kind, "heisenberg|oscillator|su|so|mixed")
      ->required();
  construct->add_option("params", construct_args.params,
                        "heisenberg/su/so: m; oscillator: lambda entries; mixed: m su|so");
  construct->add_option("--t", construct_args.t, "phi_{t,s} parameter t (oscillator)");
  construct->add_option("--s", construct_args.s, "phi_{t,s} parameter s (oscillator)");
  construct->add_option("-o,--output", construct_args.output, "output path");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "full structural report for an algebra file");
  analyze_cmd->add_option("file", analyze_args.input, "algebra JSON file")->required();
  analyze_cmd->add_option("--form", analyze_args.form_ts, "use phi_{t,s} (oscillator basis order)");
  analyze_cmd->add_option("--form-file", analyze_args.form_file, "use the Gram matrix in a file");
  analyze_cmd->add_flag("--json", analyze_args.as_json, "print the report as canonical JSON");
  analyze_cmd->add_flag("--no-derivations", analyze_args.no_derivations,
                        "skip the derivation solve");
  analyze_cmd->add_option("-o,--output", analyze_args.output, "also write the JSON report here");

  ExtendArgs extend_args;
  auto* extend = app.add_subcommand("extend", "double-extend a metric algebra file");
  extend->add_option("base", extend_args.base, "metric algebra JSON file")->required();
  extend->add_option("extender", extend_args.extender, "extending algebra JSON file")->required();
  extend->add_option("hom", extend_args.hom, "hom file: images of the extender basis")->required();
  extend->add_option("-o,--output", extend_args.output, "output algebra file");
  extend->add_option("--cert", extend_args.cert, "write the verification certificate here");

  ReproduceArgs reproduce_args;
  auto* reproduce = app.add_subcommand("reproduce", "run a named reproduction check");
  reproduce->add_option("claim", reproduce_args.claim, "claim id or 'all'")->required();
  std::size_t m_value = 0;
  auto* m_opt = reproduce->add_option("--m", m_value, "restrict to one m");
  reproduce->add_option("--lambda", reproduce_args.lambda_csv, "comma-separated frequencies");
  reproduce->add_option("--kind", reproduce_args.kind, "su or so (mixed extensions)");
  reproduce->add_option("--seed", reproduce_args.seed, "seed for the property suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return run_construct(construct_args);
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*extend) return run_extend(extend_args);
    if (*reproduce) {
      if (m_opt->count() > 0) reproduce_args.m = m_value;
      return run_reproduce(reproduce_args);
    }
  } catch (const quadlie::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const quadlie::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
