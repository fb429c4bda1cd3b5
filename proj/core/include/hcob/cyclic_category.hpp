#pragma once

// Connes' cyclic category and its embedding into bordisms.
//
// A morphism n -> m is a weakly monotone f: Z -> Z with f(x + n) = f(x) + m,
// taken modulo adding multiples of m. The functor H sends n to the circle
// factorisation (M(n), W(n), V(n)), where M(n) = [1]+, [1]-, ..., [n]+, [n]-
// and the arcs of W(n): {} -> M(n) run [i]- -> [i+1]+, those of
// V(n): M(n) -> {} run [i]+ -> [i]-. Gluing W(n) and V(n) gives one circle
// that meets [1]+, [2]+, ..., [n]+ in increasing order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hcob/bordism.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/rational.hpp"

namespace hcob {

class CyclicMap {
  public:
    /// `values` = f(0), ..., f(n-1) in normal form (0 <= f(0) < m) and weakly
    /// monotone with f(n-1) <= f(0) + m.
    CyclicMap(std::size_t n, std::size_t m, std::vector<std::int64_t> values);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return m_; }
    [[nodiscard]] const std::vector<std::int64_t>& values() const { return values_; }

    /// The equivariant extension to all of Z.
    [[nodiscard]] std::int64_t operator()(std::int64_t x) const;

    friend bool operator==(const CyclicMap&, const CyclicMap&) = default;

  private:
    std::size_t n_ = 1;
    std::size_t m_ = 1;
    std::vector<std::int64_t> values_;
};

/// Shifts by the multiple of m that puts f(0) into [0, m).
CyclicMap lambda_normalize(std::size_t n, std::size_t m, std::vector<std::int64_t> raw);
CyclicMap lambda_identity(std::size_t n);
/// x -> x + 1 on n.
CyclicMap lambda_rotation(std::size_t n);
/// x -> x + t on n.
CyclicMap lambda_rotation(std::size_t n, std::int64_t t);
/// g after f. Throws ObjectMismatch unless f.m() == g.n().
CyclicMap lambda_compose(const CyclicMap& g, const CyclicMap& f);
bool lambda_is_injective(const CyclicMap& f);

/// Position of [i]_n^+ and [i]_n^- in M(n), for any integer i.
std::size_t plus_position(std::int64_t i, std::size_t n);
std::size_t minus_position(std::int64_t i, std::size_t n);

ZeroManifold circle_object(std::size_t n);
Bordism w_bordism(std::size_t n);
Bordism v_bordism(std::size_t n);

Bordism to_bordism(const CyclicMap& f);

/// Checks W(n) X = W(m) and X V(m) = V(n) exactly.
bool is_f1_morphism(const Bordism& x);
/// Inverse of to_bordism. Throws InvariantViolation if `x` is not an
/// F1-morphism between circle objects.
CyclicMap from_bordism(const Bordism& x);

/// Trace of the glued circle W(n_0) H(f_1) ... H(f_2k) V(n_2k); label l marks
/// positive crossings of the wall carrying M(n_l). All maps must be injective.
CyclicConfiguration lambda_to_U(std::size_t k, std::span<const CyclicMap> maps);

/// Images A_l of Z/n_l in Z/n_2k under f_2k o ... o f_(l+1).
std::vector<std::vector<std::size_t>> igusa_classes(std::span<const CyclicMap> maps);
/// Sum of sign_tuple over tuples of pairwise distinct points of the A_l.
std::int64_t igusa_distinct_total(std::span<const CyclicMap> maps);
Rational igusa_cocycle(std::size_t k, std::span<const CyclicMap> maps);

} // namespace hcob
