#pragma once

// Objects and morphisms of the homotopy category of oriented 1-dimensional
// bordisms. A morphism M -> N is a perfect matching between the boundary
// points of M and N plus a number of closed circles. Each matched pair is an
// arc, oriented from the point in M+ u N- to the point in M- u N+.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hcob {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
Sign sign_from_int(int v);

/// A closed oriented 0-manifold with a fixed order on its points.
class ZeroManifold {
  public:
    ZeroManifold() = default;
    explicit ZeroManifold(std::vector<Sign> signs) : signs_(std::move(signs)) {}
    static ZeroManifold from_ints(std::span<const int> values);

    [[nodiscard]] std::size_t size() const { return signs_.size(); }
    [[nodiscard]] bool empty() const { return signs_.empty(); }
    [[nodiscard]] Sign operator[](std::size_t i) const { return signs_[i]; }
    [[nodiscard]] bool is_positive(std::size_t i) const { return signs_[i] == Sign::plus; }
    [[nodiscard]] const std::vector<Sign>& signs() const { return signs_; }
    [[nodiscard]] std::vector<int> to_ints() const;

    [[nodiscard]] std::size_t plus_count() const;
    [[nodiscard]] std::size_t minus_count() const { return size() - plus_count(); }
    [[nodiscard]] int degree() const;

    friend bool operator==(const ZeroManifold&, const ZeroManifold&) = default;

  private:
    std::vector<Sign> signs_;
};

/// Concatenation; the points of `b` follow those of `a`.
ZeroManifold concat(const ZeroManifold& a, const ZeroManifold& b);

enum class End : std::uint8_t { source, target };

struct BoundaryPoint {
    End end = End::source;
    std::size_t index = 0;

    friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

constexpr BoundaryPoint src(std::size_t i) { return {End::source, i}; }
constexpr BoundaryPoint tgt(std::size_t i) { return {End::target, i}; }

class Bordism {
  public:
    /// (domain point, codomain point); the domain is source+ u target-.
    using Arc = std::pair<BoundaryPoint, BoundaryPoint>;

    Bordism() = default;

    /// Validates that `arcs` is a total bijection from source+ u target- onto
    /// source- u target+. Throws InvariantViolation otherwise.
    Bordism(ZeroManifold source, ZeroManifold target, std::span<const Arc> arcs,
            std::uint64_t circles = 0);
    Bordism(ZeroManifold source, ZeroManifold target, std::initializer_list<Arc> arcs,
            std::uint64_t circles = 0)
        : Bordism(std::move(source), std::move(target), std::span<const Arc>(arcs.begin(), arcs.size()),
                  circles) {}

    /// Builds from the partner involution on all boundary points.
    static Bordism from_partners(ZeroManifold source, ZeroManifold target,
                                 std::vector<BoundaryPoint> source_partner,
                                 std::vector<BoundaryPoint> target_partner, std::uint64_t circles);

    [[nodiscard]] const ZeroManifold& source() const { return source_; }
    [[nodiscard]] const ZeroManifold& target() const { return target_; }
    [[nodiscard]] std::uint64_t circles() const { return circles_; }
    [[nodiscard]] bool is_reduced() const { return circles_ == 0; }

    [[nodiscard]] bool in_domain(BoundaryPoint p) const;
    /// The other end of the arc through `p`.
    [[nodiscard]] BoundaryPoint partner(BoundaryPoint p) const;
    [[nodiscard]] std::span<const BoundaryPoint> source_partners() const { return source_partner_; }
    [[nodiscard]] std::span<const BoundaryPoint> target_partners() const { return target_partner_; }

    /// Arcs sorted by domain point (source points first, then target).
    [[nodiscard]] std::vector<Arc> arcs() const;
    [[nodiscard]] std::size_t arc_count() const { return (source_.size() + target_.size()) / 2; }

    [[nodiscard]] Bordism with_circles(std::uint64_t circles) const;

    friend bool operator==(const Bordism&, const Bordism&) = default;

  private:
    void validate() const;

    ZeroManifold source_;
    ZeroManifold target_;
    std::vector<BoundaryPoint> source_partner_;
    std::vector<BoundaryPoint> target_partner_;
    std::uint64_t circles_ = 0;
};

/// The cylinder on M.
Bordism identity(const ZeroManifold& m);

/// Gluing along the shared object; closed orbits through the middle object are
/// added to the circle count. Throws ObjectMismatch if w.target() != v.source().
Bordism compose(const Bordism& w, const Bordism& v);

/// Number of closed components created by gluing `w` and `v`.
std::uint64_t created_circles(const Bordism& w, const Bordism& v);

Bordism reduce(const Bordism& w);
Bordism compose_reduced(const Bordism& w, const Bordism& v);

/// Places `v` after `w` on both ends; circle counts add.
Bordism disjoint_union(const Bordism& w, const Bordism& v);

/// Renames points: old source index i becomes source_perm[i], likewise for
/// the target. Both arguments must be permutations of the right length.
Bordism permute_points(const Bordism& w, std::span<const std::size_t> source_perm,
                       std::span<const std::size_t> target_perm);

} // namespace hcob
