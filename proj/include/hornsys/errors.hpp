#pragma once

#include <stdexcept>
#include <string>

namespace hornsys {

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& msg) : std::out_of_range(msg) {}
};

struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& msg) : std::runtime_error(msg) {}
};

// Identity-block / zero-kappa normalization hypothesis failed.
struct NotNormalized : std::runtime_error {
  explicit NotNormalized(const std::string& msg) : std::runtime_error(msg) {}
};

struct ImproperIdeal : std::runtime_error {
  explicit ImproperIdeal(const std::string& msg) : std::runtime_error(msg) {}
};

// The two routes to the normalized Horn generators disagree; indicates a bug,
// never expected on valid input.
struct MismatchWithNHorn : std::logic_error {
  explicit MismatchWithNHorn(const std::string& msg) : std::logic_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonIntegralKappa : std::runtime_error {
  explicit NonIntegralKappa(const std::string& msg) : std::runtime_error(msg) {}
};

// Computation ran out of budget before reaching a definite verdict.
struct Inconclusive : std::runtime_error {
  explicit Inconclusive(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidOrder : std::invalid_argument {
  explicit InvalidOrder(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace hornsys
