#include "hcob/harness/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "hcob/error.hpp"

namespace hcob::harness {

ZeroManifold gen_object(int degree, std::size_t size_bound, Rng& rng) {
    const auto d = static_cast<std::size_t>(std::abs(degree));
    if (d > size_bound) {
        throw InvariantViolation("gen_object: |degree| " + std::to_string(d) + " exceeds size bound " +
                                 std::to_string(size_bound));
    }
    const std::size_t choices = (size_bound - d) / 2; // extra +/- pairs
    const std::size_t size = d + 2 * static_cast<std::size_t>(rng.below(choices + 1));
    const std::size_t plus = (size + d) / 2 - (degree < 0 ? d : 0);
    std::vector<Sign> signs(size, Sign::minus);
    std::fill(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(plus), Sign::plus);
    rng.shuffle(signs);
    return ZeroManifold(std::move(signs));
}

Bordism gen_bordism(const ZeroManifold& source, const ZeroManifold& target, Rng& rng, bool reduced) {
    if (source.degree() != target.degree()) {
        throw ObjectMismatch("gen_bordism: degrees " + std::to_string(source.degree()) + " and " +
                             std::to_string(target.degree()) + " differ");
    }
    std::vector<BoundaryPoint> domain;
    std::vector<BoundaryPoint> codomain;
    for (std::size_t i = 0; i < source.size(); ++i) {
        (source.is_positive(i) ? domain : codomain).push_back(src(i));
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        (target.is_positive(i) ? codomain : domain).push_back(tgt(i));
    }
    rng.shuffle(codomain);
    std::vector<Bordism::Arc> arcs;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        arcs.emplace_back(domain[i], codomain[i]);
    }
    const std::uint64_t circles = reduced ? 0 : rng.below(3);
    return Bordism(source, target, arcs, circles);
}

Chain gen_chain(const ChainShape& shape, Rng& rng) {
    if (shape.length == 0) {
        return Chain::point(shape.endpoints_empty ? ZeroManifold{}
                                                  : gen_object(shape.degree, shape.max_points, rng));
    }
    const int degree = shape.endpoints_empty ? 0 : shape.degree;
    std::vector<ZeroManifold> objects;
    for (std::size_t l = 0; l <= shape.length; ++l) {
        const bool end = l == 0 || l == shape.length;
        if (end && shape.endpoints_empty) {
            objects.emplace_back();
        } else {
            objects.push_back(gen_object(degree, shape.max_points, rng));
        }
    }
    std::vector<Bordism> morphisms;
    for (std::size_t l = 0; l < shape.length; ++l) {
        morphisms.push_back(gen_bordism(objects[l], objects[l + 1], rng, shape.reduced));
    }
    return Chain(std::move(objects), std::move(morphisms));
}

CyclicMap gen_cyclic_map(std::size_t n, std::size_t m, Rng& rng) {
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t f0 = rng.between(0, mm - 1);
    std::vector<std::int64_t> values(n);
    values[0] = f0;
    for (std::size_t i = 1; i < n; ++i) {
        values[i] = rng.between(f0, f0 + mm);
    }
    std::sort(values.begin() + 1, values.end());
    return CyclicMap(n, m, std::move(values));
}

CyclicMap gen_cyclic_map(std::size_t max_size, Rng& rng) {
    const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size)));
    const auto m = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size)));
    return gen_cyclic_map(n, m, rng);
}

CyclicMap gen_injective_map(std::size_t n, std::size_t m, Rng& rng) {
    if (n == 0 || n > m) {
        throw InvariantViolation("gen_injective_map: need 1 <= n <= m, got n = " + std::to_string(n) +
                                 ", m = " + std::to_string(m));
    }
    // An n-subset of Z/m plus the choice of which element is f(0).
    std::vector<std::int64_t> residues(m);
    std::iota(residues.begin(), residues.end(), 0);
    rng.shuffle(residues);
    residues.resize(n);
    std::sort(residues.begin(), residues.end());
    const std::size_t start = rng.index(n);
    std::vector<std::int64_t> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = start + i;
        values[i] = residues[j % n] + (j >= n ? static_cast<std::int64_t>(m) : 0);
    }
    return lambda_normalize(n, m, std::move(values));
}

std::vector<CyclicMap> gen_injective_chain(std::size_t k, std::size_t max_size, Rng& rng) {
    std::vector<std::size_t> sizes{static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size)))};
    for (std::size_t l = 1; l <= 2 * k; ++l) {
        sizes.push_back(static_cast<std::size_t>(
            rng.between(static_cast<std::int64_t>(sizes.back()), static_cast<std::int64_t>(max_size))));
    }
    std::vector<CyclicMap> maps;
    for (std::size_t l = 0; l < 2 * k; ++l) {
        maps.push_back(gen_injective_map(sizes[l], sizes[l + 1], rng));
    }
    return maps;
}

std::vector<CyclicMap> gen_cyclic_chain(std::size_t k, std::size_t max_size, Rng& rng) {
    std::vector<std::size_t> sizes;
    for (std::size_t l = 0; l <= 2 * k; ++l) {
        sizes.push_back(static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size))));
    }
    std::vector<CyclicMap> maps;
    for (std::size_t l = 0; l < 2 * k; ++l) {
        maps.push_back(gen_cyclic_map(sizes[l], sizes[l + 1], rng));
    }
    return maps;
}

CyclicConfiguration gen_config(std::size_t labels, std::size_t max_points, Rng& rng) {
    if (labels == 0) {
        throw InvariantViolation("gen_config: need at least one label");
    }
    const std::size_t top = std::max(labels, max_points);
    const auto length = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(labels), static_cast<std::int64_t>(top)));
    std::vector<std::size_t> word(length);
    std::iota(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(labels), 0);
    for (std::size_t i = labels; i < length; ++i) {
        word[i] = rng.index(labels);
    }
    rng.shuffle(word);
    return CyclicConfiguration(std::move(word));
}

std::vector<std::size_t> gen_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

} // namespace hcob::harness
