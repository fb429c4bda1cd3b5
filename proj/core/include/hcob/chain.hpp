#pragma once

// Simplices of the nerve: composable strings M0 -W1-> M1 -> ... -Wn-> Mn.
// Tracing follows arcs through every interior object ("wall") at once and
// separates the glued 1-manifold into arc components and circles.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "hcob/bordism.hpp"

namespace hcob {

enum class FaceMode { full, reduced };

class Chain {
  public:
    /// The 0-simplex on the empty object.
    Chain() : objects_(1) {}
    /// Objects are read off the morphisms; at least one morphism is required.
    explicit Chain(std::vector<Bordism> morphisms);
    Chain(std::vector<ZeroManifold> objects, std::vector<Bordism> morphisms);
    static Chain point(ZeroManifold m);

    [[nodiscard]] std::size_t length() const { return morphisms_.size(); }
    [[nodiscard]] const std::vector<ZeroManifold>& objects() const { return objects_; }
    [[nodiscard]] const std::vector<Bordism>& morphisms() const { return morphisms_; }
    [[nodiscard]] const ZeroManifold& object(std::size_t level) const { return objects_.at(level); }
    /// W_i for 1 <= i <= length().
    [[nodiscard]] const Bordism& morphism(std::size_t i) const { return morphisms_.at(i - 1); }
    [[nodiscard]] bool endpoints_empty() const { return objects_.front().empty() && objects_.back().empty(); }
    [[nodiscard]] bool all_reduced() const;

    friend bool operator==(const Chain&, const Chain&) = default;

  private:
    std::vector<ZeroManifold> objects_;
    std::vector<Bordism> morphisms_;
};

struct WallPoint {
    std::size_t level = 0;
    std::size_t index = 0;
    friend auto operator<=>(const WallPoint&, const WallPoint&) = default;
};

/// One passage of a circle through a wall; `sign` is + when travelling
/// rightward (through a point of M_level+) and - when travelling leftward.
struct Crossing {
    std::size_t level = 0;
    std::size_t index = 0;
    Sign sign = Sign::plus;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CircleTrace {
    /// Cyclic; listed in the order the oriented circle meets them, starting
    /// from the smallest (level, index).
    std::vector<Crossing> crossings;
    friend bool operator==(const CircleTrace&, const CircleTrace&) = default;
};

struct ArcComponent {
    WallPoint start; // level 0 or length()
    WallPoint end;   // level 0 or length()
    std::vector<WallPoint> wall_points;
};

struct ChainTrace {
    std::vector<ArcComponent> arcs;
    std::vector<CircleTrace> circles;
};

/// Morphism circle counts are ignored; only glued structure is traced.
ChainTrace trace_chain(const Chain& chain);

struct CutResult {
    Chain chain;
    /// point_map[level][old index] is the new index of a surviving point.
    std::vector<std::vector<std::optional<std::size_t>>> point_map;
};

/// Deletes every component that reaches M0 or Mn, zeroes circle counts and
/// compresses the surviving points of each object in order.
CutResult cut_normalize_with_map(const Chain& chain);
Chain cut_normalize(const Chain& chain);

/// d_i for 0 <= i <= length(); inner faces glue with compose or
/// compose_reduced according to `mode`.
Chain chain_face(const Chain& chain, std::size_t i, FaceMode mode);
/// s_i for 0 <= i <= length(); inserts the identity on M_i.
Chain chain_degeneracy(const Chain& chain, std::size_t i);

/// Levelwise disjoint union of two chains of equal length.
Chain chain_disjoint_union(const Chain& x, const Chain& y);
/// Applies reduce to every morphism.
Chain chain_reduce(const Chain& chain);
/// Renames the points of every object: perms[level][old] = new.
Chain relabel_chain(const Chain& chain, const std::vector<std::vector<std::size_t>>& perms);

} // namespace hcob
