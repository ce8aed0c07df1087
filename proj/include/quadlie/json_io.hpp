#ifndef QUADLIE_JSON_IO_HPP
#define QUADLIE_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadlie/constructions.hpp"
#include "quadlie/derivations.hpp"
#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"

namespace quadlie {

/// Malformed file or string content (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Well-formed input that fails mathematical validation (CLI exit code 1).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension guard for loaded files; QUADLIE_MAX_DIM overrides the default 64.
std::size_t max_dim_limit();

/// On-disk algebra description: structure constants for i < j, an optional
/// Gram matrix under "metric", and optional oscillator parameters recorded
/// by the constructors.
struct AlgebraFile {
  LieAlgebra algebra = LieAlgebra::abelian(0);
  std::optional<Matrix> metric;
  std::optional<OscillatorSpec> oscillator;
};

nlohmann::json rational_matrix_to_json(const Matrix& m);
Matrix rational_matrix_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const AlgebraFile& file);
/// Fills antisymmetric counterparts and validates the Jacobi identity;
/// violating triples are listed in the ValidationError message.
AlgebraFile algebra_from_json(const nlohmann::json& j);

nlohmann::json matrix_lie_algebra_to_json(const MatrixLieAlgebra& m);
/// Re-checks the closure certificate on load.
MatrixLieAlgebra matrix_lie_algebra_from_json(const nlohmann::json& j);

/// Hom files for extensions: {"images": [gram-style matrices]}.
nlohmann::json hom_images_to_json(const std::vector<Matrix>& images);
std::vector<Matrix> hom_images_from_json(const nlohmann::json& j);

nlohmann::json extension_certificate_to_json(const ExtensionCertificate& cert);

void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

AlgebraFile load_algebra_file(const std::string& path);
void save_algebra_file(const std::string& path, const AlgebraFile& file);

}  // namespace quadlie

#endif  // QUADLIE_JSON_IO_HPP
