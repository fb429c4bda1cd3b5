#pragma once

#include <cstddef>
#include <vector>

#include "hcob/bordism.hpp"
#include "hcob/chain.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/harness/rng.hpp"

namespace hcob::harness {

/// Random sign sequence with signed sum `degree` and at most `size_bound`
/// points (size parity follows the degree).
ZeroManifold gen_object(int degree, std::size_t size_bound, Rng& rng);

/// Uniform bijection source+ u target- -> source- u target+. Non-reduced
/// bordisms get 0..2 extra circles.
Bordism gen_bordism(const ZeroManifold& source, const ZeroManifold& target, Rng& rng, bool reduced);

struct ChainShape {
    std::size_t length = 2;
    bool endpoints_empty = false;
    std::size_t max_points = 8;
    int degree = 0; // ignored when endpoints_empty
    bool reduced = false;
};

Chain gen_chain(const ChainShape& shape, Rng& rng);

/// Random weakly monotone map with the given ends.
CyclicMap gen_cyclic_map(std::size_t n, std::size_t m, Rng& rng);
/// Random ends in 1..max_size.
CyclicMap gen_cyclic_map(std::size_t max_size, Rng& rng);
/// Strictly monotone map; needs n <= m.
CyclicMap gen_injective_map(std::size_t n, std::size_t m, Rng& rng);

/// 2k composable injective maps with 1 <= n_0 <= ... <= n_2k <= max_size.
std::vector<CyclicMap> gen_injective_chain(std::size_t k, std::size_t max_size, Rng& rng);
/// 2k composable maps with every n_l in 1..max_size.
std::vector<CyclicMap> gen_cyclic_chain(std::size_t k, std::size_t max_size, Rng& rng);

/// Word on `labels` classes, all present, of length labels..max(labels, max_points).
CyclicConfiguration gen_config(std::size_t labels, std::size_t max_points, Rng& rng);

/// Uniform permutation of 0..n-1.
std::vector<std::size_t> gen_permutation(std::size_t n, Rng& rng);

} // namespace hcob::harness
