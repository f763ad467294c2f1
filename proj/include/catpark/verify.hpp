#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catpark/parking_seq.hpp"

namespace catpark {

/// Deliberate corruptions of core formulas; each must make `verify` fail.
enum class Mutation {
  none,
  fuss_catalan,     // B coefficient x^3 bumped by one
  r_exponent,       // R series built with B^1 instead of B^m
  gamma_arguments,  // printed argument assignment in the gamma closed form
  tau_shallow,      // tau without recursing into the outer components
  product_literal,  // printed multi-statistic product
};

std::optional<Mutation> parse_mutation(std::string_view name);
std::vector<std::string> mutation_names();

enum class CheckStatus { pass, fail, erratum };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string identity;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json params = nlohmann::json::object();
  std::optional<nlohmann::json> counterexample;
  std::int64_t millis = 0;

  /// {identity, status, params, counterexample?, millis}
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::string scope = "all";
  /// Restricts every check to this m when set.
  std::optional<int> m;
  /// Largest length for enumeration-based checks.
  std::optional<std::size_t> n;
  /// Truncation order for series checks.
  std::optional<std::size_t> order;
  std::uint64_t max_objects = kDefaultMaxObjects;
  Mutation mutation = Mutation::none;
};

/// "all" followed by every individual scope.
const std::vector<std::string>& verify_scopes();

/// Runs the checks of one scope. Throws std::invalid_argument on an unknown
/// scope and ResourceLimitError when a check would exceed max_objects.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// True when no check has status fail.
bool verification_succeeded(const std::vector<CheckResult>& results);

}  // namespace catpark
