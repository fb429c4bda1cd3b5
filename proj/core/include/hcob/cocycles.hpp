#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcob/chain.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/rational.hpp"

namespace hcob {

/// (-1)^k k! / (2k)!
Rational kappa_coefficient(std::size_t k);

/// Circles created by gluing a 2-chain of reduced bordisms.
std::int64_t alpha(const Chain& chain);

/// Closed components of a single bordism.
std::int64_t beta_hat(const Bordism& w);

/// Positive crossings of `trace` at the given walls, as a cyclic word whose
/// label l marks wall walls[l]. Empty when some wall is never crossed
/// positively.
std::optional<CyclicConfiguration> circle_config(const CircleTrace& trace, std::span<const std::size_t> walls);

struct GammaTerm {
    CircleTrace trace;
    std::optional<CyclicConfiguration> config; // empty: misses a wall
    Rational reduced_sign;
};

struct GammaResult {
    Rational value;
    std::vector<GammaTerm> terms;
};

/// gamma_k on a (2k+2)-chain with empty ends, with the per-circle breakdown.
GammaResult gamma_details(std::size_t k, const Chain& chain);
Rational gamma(std::size_t k, const Chain& chain);

/// gamma_k after cut_normalize; defined on every (2k+2)-chain of the nerve.
Rational gamma_pullback(std::size_t k, const Chain& chain);

using Cochain = std::function<Rational(const Chain&)>;

/// sum_i (-1)^i c(d_i x)
Rational coboundary(const Cochain& c, const Chain& x, FaceMode mode);

Cochain alpha_cochain();
/// beta_hat of the single morphism of a 1-chain.
Cochain beta_cochain();
Cochain gamma_cochain(std::size_t k);

} // namespace hcob
