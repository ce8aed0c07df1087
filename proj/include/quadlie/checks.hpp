#ifndef QUADLIE_CHECKS_HPP
#define QUADLIE_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadlie/rational.hpp"

namespace quadlie {

/// One reproduction check: a claim identifier, what was compared, and the
/// expected-versus-computed record.
struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
};

struct ReproduceOptions {
  std::optional<std::size_t> m;
  std::optional<std::vector<Rational>> lambda;
  std::optional<std::string> kind;  // "su" or "so"
  unsigned seed = 20250809;
};

/// Claim identifiers accepted by run_claim, in acceptance order.
std::vector<std::string> known_claims();

/// Runs one named claim; options narrow the parameter grid where they apply.
CheckResult run_claim(const std::string& id, const ReproduceOptions& options = {});

/// The full acceptance suite: every claim on its complete parameter grid.
std::vector<CheckResult> run_acceptance_suite();

}  // namespace quadlie

#endif  // QUADLIE_CHECKS_HPP
