#pragma once

// Simplices of U: tuples (A_0, ..., A_n) of disjoint non-empty finite subsets
// of an oriented circle, up to orientation-preserving diffeomorphism. Only
// the cyclic order matters, so a simplex is a cyclic word whose letter at a
// position is the index of the subset containing that point.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hcob/rational.hpp"

namespace hcob {

class CyclicConfiguration {
  public:
    /// Every label 0..max must occur. Stored as the lexicographically least
    /// rotation; positions used by other functions refer to that rotation.
    explicit CyclicConfiguration(std::vector<std::size_t> word);

    [[nodiscard]] const std::vector<std::size_t>& word() const { return word_; }
    [[nodiscard]] std::size_t length() const { return word_.size(); }
    [[nodiscard]] std::size_t label_count() const { return labels_; }
    /// Simplicial dimension n (labels run over 0..n).
    [[nodiscard]] std::size_t dimension() const { return labels_ - 1; }
    [[nodiscard]] std::size_t label_at(std::size_t pos) const { return word_.at(pos); }
    /// Positions of each label class, in increasing order.
    [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const;

    friend bool operator==(const CyclicConfiguration&, const CyclicConfiguration&) = default;

  private:
    std::vector<std::size_t> word_;
    std::size_t labels_ = 0;
};

std::vector<std::size_t> least_rotation(std::span<const std::size_t> word);

/// Sign of the permutation that puts an odd tuple of distinct positions on a
/// cyclic word of the given length into cyclic order.
int sign_tuple(std::size_t length, std::span<const std::size_t> positions);

/// Mean of sign_tuple over all transversals of a configuration with an odd
/// number of classes.
Rational averaged_sign(const CyclicConfiguration& config);

/// Closed positive arc from the point with the smaller label to the point with
/// the larger one meets every class at most once.
bool neighbours(const CyclicConfiguration& config, std::size_t pos_a, std::size_t pos_b);

/// All-pairs neighbour table, indexed by position.
std::vector<std::vector<char>> neighbour_table(const CyclicConfiguration& config);

/// Same average as averaged_sign but only over transversals that contain no
/// pair of neighbours.
Rational reduced_sign(const CyclicConfiguration& config);

/// Numerator of reduced_sign before dividing by the product of class sizes.
std::int64_t reduced_sign_total(const CyclicConfiguration& config);

/// Entry point for words where some of the `label_count` classes may be
/// empty; such words evaluate to 0.
Rational reduced_sign_relaxed(std::span<const std::size_t> word, std::size_t label_count);

/// d_i forgets A_i.
CyclicConfiguration u_face(const CyclicConfiguration& config, std::size_t i);
/// s_i duplicates A_i by a small positive rotation.
CyclicConfiguration u_degeneracy(const CyclicConfiguration& config, std::size_t i);

} // namespace hcob
