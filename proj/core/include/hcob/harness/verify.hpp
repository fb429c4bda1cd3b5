#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcob/bordism.hpp"

namespace hcob::harness {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 500;
    std::size_t max_points = 8;
    std::size_t max_chain_length = 7;
    int degree = 0;
    /// Degree parameter for the U and additivity-style suites.
    std::size_t k = 1;
    /// Swap in a deliberately broken composition (harness self-test).
    bool mutate = false;
};

struct Failure {
    std::size_t trial = 0;
    std::string identity;
    nlohmann::json counterexample;
    nlohmann::json lhs;
    nlohmann::json rhs;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    /// The first few failures in trial order; failure_count has the total.
    std::vector<Failure> failures;
    double seconds = 0.0;

    [[nodiscard]] bool passed() const { return failure_count == 0; }
    [[nodiscard]] nlohmann::json to_json(bool include_timing) const;
    [[nodiscard]] std::string to_text() const;
};

inline constexpr std::size_t kept_failures = 10;

const std::vector<std::string>& suite_names();

/// Throws hcob::Error for an unknown suite.
VerificationReport verify(const std::string& suite, const GeneratorConfig& config);

/// compose with the codomain points of the first two arcs swapped (or one
/// extra circle when there are fewer than two arcs).
Bordism corrupted_compose(const Bordism& w, const Bordism& v);

} // namespace hcob::harness
