#include "hcob/cocycles.hpp"

#include <string>

#include "hcob/error.hpp"

namespace hcob {

Rational kappa_coefficient(std::size_t k) {
    boost::multiprecision::cpp_int k_fact = 1;
    boost::multiprecision::cpp_int two_k_fact = 1;
    for (std::size_t i = 2; i <= 2 * k; ++i) {
        two_k_fact *= i;
        if (i <= k) {
            k_fact *= i;
        }
    }
    Rational c(Rational::Value(k_fact, two_k_fact));
    return k % 2 == 0 ? c : -c;
}

std::int64_t alpha(const Chain& chain) {
    if (chain.length() != 2) {
        throw InvariantViolation("alpha: expects a 2-chain, got length " + std::to_string(chain.length()));
    }
    if (!chain.all_reduced()) {
        throw InvariantViolation("alpha: morphisms must be reduced (circles = 0)");
    }
    return static_cast<std::int64_t>(trace_chain(chain).circles.size());
}

std::int64_t beta_hat(const Bordism& w) { return static_cast<std::int64_t>(w.circles()); }

std::optional<CyclicConfiguration> circle_config(const CircleTrace& trace, std::span<const std::size_t> walls) {
    std::vector<std::size_t> word;
    std::vector<char> hit(walls.size(), 0);
    for (const auto& x : trace.crossings) {
        if (x.sign != Sign::plus) {
            continue;
        }
        for (std::size_t l = 0; l < walls.size(); ++l) {
            if (walls[l] == x.level) {
                word.push_back(l);
                hit[l] = 1;
                break;
            }
        }
    }
    for (char h : hit) {
        if (h == 0) {
            return std::nullopt;
        }
    }
    if (word.empty()) {
        return std::nullopt;
    }
    return CyclicConfiguration(std::move(word));
}

GammaResult gamma_details(std::size_t k, const Chain& chain) {
    if (chain.length() != 2 * k + 2) {
        throw InvariantViolation("gamma: gamma_" + std::to_string(k) + " needs a " + std::to_string(2 * k + 2) +
                                 "-chain, got length " + std::to_string(chain.length()));
    }
    if (!chain.endpoints_empty()) {
        throw InvariantViolation("gamma: chain endpoints M0 and Mn must be empty");
    }
    std::vector<std::size_t> walls(2 * k + 1);
    for (std::size_t l = 0; l < walls.size(); ++l) {
        walls[l] = l + 1;
    }
    GammaResult res;
    Rational sum;
    for (auto& trace : trace_chain(chain).circles) {
        GammaTerm term{std::move(trace), std::nullopt, Rational(0)};
        term.config = circle_config(term.trace, walls);
        if (term.config) {
            term.reduced_sign = reduced_sign(*term.config);
            sum += term.reduced_sign;
        }
        res.terms.push_back(std::move(term));
    }
    res.value = kappa_coefficient(k) * sum;
    return res;
}

Rational gamma(std::size_t k, const Chain& chain) { return gamma_details(k, chain).value; }

Rational gamma_pullback(std::size_t k, const Chain& chain) { return gamma(k, cut_normalize(chain)); }

Rational coboundary(const Cochain& c, const Chain& x, FaceMode mode) {
    Rational total;
    for (std::size_t i = 0; i <= x.length(); ++i) {
        Rational v = c(chain_face(x, i, mode));
        if (i % 2 == 0) {
            total += v;
        } else {
            total -= v;
        }
    }
    return total;
}

Cochain alpha_cochain() {
    return [](const Chain& x) { return Rational(alpha(x)); };
}

Cochain beta_cochain() {
    return [](const Chain& x) {
        if (x.length() != 1) {
            throw InvariantViolation("beta_hat: expects a 1-chain");
        }
        return Rational(beta_hat(x.morphism(1)));
    };
}

Cochain gamma_cochain(std::size_t k) {
    return [k](const Chain& x) { return gamma_pullback(k, x); };
}

} // namespace hcob
