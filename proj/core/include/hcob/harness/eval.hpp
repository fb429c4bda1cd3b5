#pragma once

// JSON-in/JSON-out entry points behind `hcob eval` and `hcob gen`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hcob::harness {

const std::vector<std::string>& eval_kinds();

/// Input shapes:
///   alpha                 Chain
///   beta, from-bordism    Bordism
///   gamma                 {"k", "chain"}
///   igusa, lambda-to-u    {"k", "maps"}
///   reduced-sign, averaged-sign   {"word"}
///   compose, compose-reduced      {"first", "second"} or [first, second]
///   to-bordism            cyclic map
/// `k` fills in a missing "k" field. Returns {"what", "result"} plus
/// "details" for gamma.
nlohmann::json evaluate(const std::string& what, const nlohmann::json& input, std::optional<std::size_t> k = {});

struct GenRequest {
    std::uint64_t seed = 1;
    std::size_t max_points = 8;
    std::size_t length = 2;
    std::size_t k = 1;
    std::size_t labels = 3;
    int degree = 0;
    bool endpoints_empty = false;
    bool reduced = false;
};

const std::vector<std::string>& gen_kinds();

/// One random instance of `kind`, drawn from the stream ("gen-" + kind, 0).
nlohmann::json generate(const std::string& kind, const GenRequest& request);

} // namespace hcob::harness
