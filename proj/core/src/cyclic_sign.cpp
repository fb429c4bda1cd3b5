#include "hcob/cyclic_sign.hpp"

#include <algorithm>
#include <string>

#include "hcob/error.hpp"

namespace hcob {

std::vector<std::size_t> least_rotation(std::span<const std::size_t> word) {
    const std::size_t n = word.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t a = word[(r + k) % n];
            std::size_t b = word[(best + k) % n];
            if (a != b) {
                if (a < b) {
                    best = r;
                }
                break;
            }
        }
    }
    std::vector<std::size_t> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = word[(best + k) % n];
    }
    return out;
}

CyclicConfiguration::CyclicConfiguration(std::vector<std::size_t> word) {
    if (word.empty()) {
        throw InvariantViolation("configuration: empty word");
    }
    std::size_t top = *std::max_element(word.begin(), word.end());
    std::vector<char> present(top + 1, 0);
    for (std::size_t l : word) {
        present[l] = 1;
    }
    for (std::size_t l = 0; l <= top; ++l) {
        if (present[l] == 0) {
            throw InvariantViolation("configuration: label class " + std::to_string(l) + " is empty");
        }
    }
    labels_ = top + 1;
    word_ = least_rotation(word);
}

std::vector<std::vector<std::size_t>> CyclicConfiguration::classes() const {
    std::vector<std::vector<std::size_t>> out(labels_);
    for (std::size_t p = 0; p < word_.size(); ++p) {
        out[word_[p]].push_back(p);
    }
    return out;
}

int sign_tuple(std::size_t length, std::span<const std::size_t> positions) {
    if (positions.size() % 2 == 0) {
        throw InvariantViolation("sign_tuple: tuple length must be odd");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= length) {
            throw InvariantViolation("sign_tuple: position out of range");
        }
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            if (positions[i] == positions[j]) {
                throw InvariantViolation("sign_tuple: repeated position " + std::to_string(positions[i]));
            }
        }
    }
    // Rotating the tuple is an even permutation, so anchor at the first entry
    // and count inversions of the remaining cyclic distances.
    const std::size_t anchor = positions[0];
    std::size_t inversions = 0;
    for (std::size_t i = 1; i < positions.size(); ++i) {
        std::size_t di = (positions[i] + length - anchor) % length;
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            std::size_t dj = (positions[j] + length - anchor) % length;
            inversions += di > dj ? 1 : 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

Rational ratio(std::int64_t total, const std::vector<std::vector<std::size_t>>& classes) {
    boost::multiprecision::cpp_int den = 1;
    for (const auto& c : classes) {
        den *= c.size();
    }
    return Rational(Rational::Value(boost::multiprecision::cpp_int(total), den));
}

void require_odd(const CyclicConfiguration& config, const char* who) {
    if (config.label_count() % 2 == 0) {
        throw InvariantViolation(std::string(who) + ": needs an odd number of label classes, got " +
                                 std::to_string(config.label_count()));
    }
}

// Calls f(tuple) for every transversal of `classes`.
template <class F>
void for_each_transversal(const std::vector<std::vector<std::size_t>>& classes, F&& f) {
    const std::size_t k = classes.size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<std::size_t> tuple(k);
    for (std::size_t i = 0; i < k; ++i) {
        tuple[i] = classes[i][0];
    }
    while (true) {
        f(std::span<const std::size_t>(tuple));
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++idx[i] < classes[i].size()) {
                tuple[i] = classes[i][idx[i]];
                break;
            }
            idx[i] = 0;
            tuple[i] = classes[i][0];
            if (i == 0) {
                return;
            }
        }
        if (k == 0) {
            return;
        }
    }
}

} // namespace

Rational averaged_sign(const CyclicConfiguration& config) {
    require_odd(config, "averaged_sign");
    auto classes = config.classes();
    std::int64_t total = 0;
    for_each_transversal(classes, [&](std::span<const std::size_t> t) { total += sign_tuple(config.length(), t); });
    return ratio(total, classes);
}

std::vector<std::vector<char>> neighbour_table(const CyclicConfiguration& config) {
    const std::size_t len = config.length();
    const auto& word = config.word();
    std::vector<std::vector<char>> nb(len, std::vector<char>(len, 0));
    std::vector<std::size_t> count(config.label_count(), 0);
    for (std::size_t s = 0; s < len; ++s) {
        std::fill(count.begin(), count.end(), 0);
        count[word[s]] = 1;
        // Counts only grow along the arc, so stop at the first repeat.
        for (std::size_t step = 1; step < len; ++step) {
            std::size_t e = (s + step) % len;
            if (++count[word[e]] > 1) {
                break;
            }
            if (word[e] > word[s]) {
                nb[s][e] = 1;
                nb[e][s] = 1;
            }
        }
    }
    return nb;
}

bool neighbours(const CyclicConfiguration& config, std::size_t pos_a, std::size_t pos_b) {
    if (pos_a >= config.length() || pos_b >= config.length()) {
        throw InvariantViolation("neighbours: position out of range");
    }
    if (pos_a == pos_b) {
        throw InvariantViolation("neighbours: identical points");
    }
    if (config.label_at(pos_a) == config.label_at(pos_b)) {
        throw InvariantViolation("neighbours: points must lie in different label classes");
    }
    return neighbour_table(config)[pos_a][pos_b] != 0;
}

std::int64_t reduced_sign_total(const CyclicConfiguration& config) {
    require_odd(config, "reduced_sign");
    auto classes = config.classes();
    auto nb = neighbour_table(config);
    std::int64_t total = 0;
    for_each_transversal(classes, [&](std::span<const std::size_t> t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (nb[t[i]][t[j]] != 0) {
                    return;
                }
            }
        }
        total += sign_tuple(config.length(), t);
    });
    return total;
}

Rational reduced_sign(const CyclicConfiguration& config) {
    return ratio(reduced_sign_total(config), config.classes());
}

Rational reduced_sign_relaxed(std::span<const std::size_t> word, std::size_t label_count) {
    std::vector<char> present(label_count, 0);
    for (std::size_t l : word) {
        if (l >= label_count) {
            throw InvariantViolation("reduced_sign: label " + std::to_string(l) + " out of range");
        }
        present[l] = 1;
    }
    if (label_count == 0 || std::find(present.begin(), present.end(), 0) != present.end()) {
        return Rational(0);
    }
    return reduced_sign(CyclicConfiguration(std::vector<std::size_t>(word.begin(), word.end())));
}

CyclicConfiguration u_face(const CyclicConfiguration& config, std::size_t i) {
    if (i >= config.label_count()) {
        throw InvariantViolation("u_face: label " + std::to_string(i) + " out of range");
    }
    if (config.label_count() == 1) {
        throw InvariantViolation("u_face: a 0-simplex has no faces");
    }
    std::vector<std::size_t> out;
    for (std::size_t l : config.word()) {
        if (l != i) {
            out.push_back(l > i ? l - 1 : l);
        }
    }
    return CyclicConfiguration(std::move(out));
}

CyclicConfiguration u_degeneracy(const CyclicConfiguration& config, std::size_t i) {
    if (i >= config.label_count()) {
        throw InvariantViolation("u_degeneracy: label " + std::to_string(i) + " out of range");
    }
    std::vector<std::size_t> out;
    for (std::size_t l : config.word()) {
        if (l == i) {
            out.push_back(i);
            out.push_back(i + 1);
        } else {
            out.push_back(l > i ? l + 1 : l);
        }
    }
    return CyclicConfiguration(std::move(out));
}

} // namespace hcob
