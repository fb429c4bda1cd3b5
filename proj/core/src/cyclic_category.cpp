#include "hcob/cyclic_category.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "hcob/chain.hpp"
#include "hcob/cocycles.hpp"
#include "hcob/error.hpp"

namespace hcob {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

void check_monotone(std::size_t n, std::size_t m, const std::vector<std::int64_t>& v) {
    if (n == 0 || m == 0) {
        throw InvariantViolation("cyclic map: objects must be positive");
    }
    if (v.size() != n) {
        throw InvariantViolation("cyclic map: expected " + std::to_string(n) + " values, got " +
                                 std::to_string(v.size()));
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] < v[i - 1]) {
            throw InvariantViolation("cyclic map: values are not weakly monotone");
        }
    }
    if (v.back() > v.front() + static_cast<std::int64_t>(m)) {
        throw InvariantViolation("cyclic map: f(n-1) exceeds f(0) + m");
    }
}

void check_composable(std::span<const CyclicMap> maps) {
    for (std::size_t i = 1; i < maps.size(); ++i) {
        if (maps[i].n() != maps[i - 1].m()) {
            throw ObjectMismatch("cyclic chain: map " + std::to_string(i + 1) + " does not start where map " +
                                 std::to_string(i) + " ends");
        }
    }
}

} // namespace

CyclicMap::CyclicMap(std::size_t n, std::size_t m, std::vector<std::int64_t> values)
    : n_(n), m_(m), values_(std::move(values)) {
    check_monotone(n_, m_, values_);
    if (values_.front() < 0 || values_.front() >= static_cast<std::int64_t>(m_)) {
        throw InvariantViolation("cyclic map: f(0) must lie in [0, m)");
    }
}

std::int64_t CyclicMap::operator()(std::int64_t x) const {
    const auto n = static_cast<std::int64_t>(n_);
    return values_[static_cast<std::size_t>(mod(x, n))] + floor_div(x, n) * static_cast<std::int64_t>(m_);
}

CyclicMap lambda_normalize(std::size_t n, std::size_t m, std::vector<std::int64_t> raw) {
    check_monotone(n, m, raw);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t shift = floor_div(raw.front(), mm) * mm;
    for (auto& v : raw) {
        v -= shift;
    }
    return CyclicMap(n, m, std::move(raw));
}

CyclicMap lambda_identity(std::size_t n) { return lambda_rotation(n, 0); }

CyclicMap lambda_rotation(std::size_t n) { return lambda_rotation(n, 1); }

CyclicMap lambda_rotation(std::size_t n, std::int64_t t) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<std::int64_t>(i) + t;
    }
    return lambda_normalize(n, n, std::move(v));
}

CyclicMap lambda_compose(const CyclicMap& g, const CyclicMap& f) {
    if (f.m() != g.n()) {
        throw ObjectMismatch("lambda_compose: target " + std::to_string(f.m()) + " of f != source " +
                             std::to_string(g.n()) + " of g");
    }
    std::vector<std::int64_t> v(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) {
        v[i] = g(f(static_cast<std::int64_t>(i)));
    }
    return lambda_normalize(f.n(), g.m(), std::move(v));
}

bool lambda_is_injective(const CyclicMap& f) {
    for (std::size_t i = 0; i + 1 < f.n(); ++i) {
        if (f.values()[i] == f.values()[i + 1]) {
            return false;
        }
    }
    return f.values().back() < f.values().front() + static_cast<std::int64_t>(f.m());
}

std::size_t plus_position(std::int64_t i, std::size_t n) {
    return 2 * static_cast<std::size_t>(mod(i - 1, static_cast<std::int64_t>(n)));
}

std::size_t minus_position(std::int64_t i, std::size_t n) { return plus_position(i, n) + 1; }

ZeroManifold circle_object(std::size_t n) {
    std::vector<Sign> s;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(Sign::plus);
        s.push_back(Sign::minus);
    }
    return ZeroManifold(std::move(s));
}

Bordism w_bordism(std::size_t n) {
    std::vector<Bordism::Arc> arcs;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        arcs.emplace_back(tgt(minus_position(ii, n)), tgt(plus_position(ii + 1, n)));
    }
    return Bordism(ZeroManifold{}, circle_object(n), arcs);
}

Bordism v_bordism(std::size_t n) {
    std::vector<Bordism::Arc> arcs;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        arcs.emplace_back(src(plus_position(ii, n)), src(minus_position(ii, n)));
    }
    return Bordism(circle_object(n), ZeroManifold{}, arcs);
}

Bordism to_bordism(const CyclicMap& f) {
    const std::size_t n = f.n();
    const std::size_t m = f.m();
    const auto nn = static_cast<std::int64_t>(n);
    const auto mm = static_cast<std::int64_t>(m);
    std::vector<Bordism::Arc> arcs;
    for (std::int64_t i = 1; i <= nn; ++i) {
        if (f(i) == f(i + 1)) {
            arcs.emplace_back(src(plus_position(i, n)), src(minus_position(i, n)));
        } else {
            arcs.emplace_back(src(plus_position(i, n)), tgt(plus_position(f(i), m)));
        }
    }
    for (std::int64_t j = 1; j <= mm; ++j) {
        // Smallest x with f(x) = j + 1, if any.
        std::optional<std::int64_t> first;
        for (std::int64_t r = 0; r < nn; ++r) {
            const std::int64_t diff = j + 1 - f.values()[static_cast<std::size_t>(r)];
            if (mod(diff, mm) == 0) {
                const std::int64_t x = r + (diff / mm) * nn;
                if (!first || x < *first) {
                    first = x;
                }
            }
        }
        if (!first) {
            arcs.emplace_back(tgt(minus_position(j, m)), tgt(plus_position(j + 1, m)));
        } else {
            arcs.emplace_back(tgt(minus_position(j, m)), src(minus_position(*first - 1, n)));
        }
    }
    return Bordism(circle_object(n), circle_object(m), arcs);
}

namespace {

std::optional<std::size_t> circle_index(const ZeroManifold& m) {
    if (m.empty() || m.size() % 2 != 0 || m != circle_object(m.size() / 2)) {
        return std::nullopt;
    }
    return m.size() / 2;
}

} // namespace

bool is_f1_morphism(const Bordism& x) {
    auto n = circle_index(x.source());
    auto m = circle_index(x.target());
    if (!n || !m) {
        return false;
    }
    return compose(w_bordism(*n), x) == w_bordism(*m) && compose(x, v_bordism(*m)) == v_bordism(*n);
}

CyclicMap from_bordism(const Bordism& x) {
    if (!is_f1_morphism(x)) {
        throw InvariantViolation("from_bordism: not an F1-morphism between circle objects");
    }
    const std::size_t n = x.source().size() / 2;
    const std::size_t m = x.target().size() / 2;
    const auto nn = static_cast<std::int64_t>(n);
    const auto mm = static_cast<std::int64_t>(m);

    // f on A = {i : the arc from [i]_n^+ ends in M(m)^+}, in increasing i.
    std::vector<std::optional<std::int64_t>> f(n + 1);
    std::optional<std::int64_t> anchor;
    for (std::int64_t i = 1; i <= nn; ++i) {
        BoundaryPoint q = x.partner(src(plus_position(i, n)));
        if (q.end != End::target) {
            continue;
        }
        std::int64_t j = static_cast<std::int64_t>(q.index / 2) + 1;
        if (!anchor) {
            j = mod(j, mm);
            anchor = j;
        } else {
            while (j <= *anchor) {
                j += mm;
            }
            while (j >= *anchor + mm) {
                j -= mm;
            }
        }
        f[static_cast<std::size_t>(i)] = j;
    }
    if (!anchor) {
        throw InvariantViolation("from_bordism: no strand reaches the target");
    }
    // Off A, f(i) = f(i + 1), wrapping past n to f(a_min) + m.
    std::vector<std::int64_t> full(n + 1);
    for (std::int64_t i = nn; i >= 1; --i) {
        const auto ui = static_cast<std::size_t>(i);
        if (f[ui]) {
            full[ui] = *f[ui];
        } else if (i == nn) {
            std::size_t a = 1;
            while (!f[a]) {
                ++a;
            }
            full[ui] = *f[a] + mm;
        } else {
            full[ui] = full[ui + 1];
        }
    }
    std::vector<std::int64_t> values(n);
    values[0] = full[n] - mm;
    for (std::size_t i = 1; i < n; ++i) {
        values[i] = full[i];
    }
    return lambda_normalize(n, m, std::move(values));
}

CyclicConfiguration lambda_to_U(std::size_t k, std::span<const CyclicMap> maps) {
    if (k == 0 || maps.size() != 2 * k) {
        throw InvariantViolation("lambda_to_U: need 2k >= 2 maps for k = " + std::to_string(k));
    }
    check_composable(maps);
    for (const auto& f : maps) {
        if (!lambda_is_injective(f)) {
            throw InvariantViolation("lambda_to_U: chain is not injective");
        }
    }
    std::vector<Bordism> morphisms;
    morphisms.push_back(w_bordism(maps.front().n()));
    for (const auto& f : maps) {
        morphisms.push_back(to_bordism(f));
    }
    morphisms.push_back(v_bordism(maps.back().m()));
    ChainTrace tr = trace_chain(Chain(std::move(morphisms)));
    if (tr.circles.size() != 1 || !tr.arcs.empty()) {
        throw InvariantViolation("lambda_to_U: glued manifold is not a single circle");
    }
    std::vector<std::size_t> walls(2 * k + 1);
    for (std::size_t l = 0; l < walls.size(); ++l) {
        walls[l] = l + 1;
    }
    auto config = circle_config(tr.circles.front(), walls);
    if (!config) {
        throw InvariantViolation("lambda_to_U: circle misses a wall");
    }
    return *config;
}

std::vector<std::vector<std::size_t>> igusa_classes(std::span<const CyclicMap> maps) {
    if (maps.empty()) {
        throw InvariantViolation("igusa: empty chain");
    }
    check_composable(maps);
    const std::size_t last = maps.back().m();
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t l = 0; l <= maps.size(); ++l) {
        const std::size_t nl = l == 0 ? maps.front().n() : maps[l - 1].m();
        std::vector<char> hit(last, 0);
        for (std::size_t x = 0; x < nl; ++x) {
            auto y = static_cast<std::int64_t>(x);
            for (std::size_t i = l; i < maps.size(); ++i) {
                y = maps[i](y);
            }
            hit[static_cast<std::size_t>(mod(y, static_cast<std::int64_t>(last)))] = 1;
        }
        std::vector<std::size_t> cls;
        for (std::size_t p = 0; p < last; ++p) {
            if (hit[p] != 0) {
                cls.push_back(p);
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::int64_t igusa_distinct_total(std::span<const CyclicMap> maps) {
    auto classes = igusa_classes(maps);
    const std::size_t len = maps.back().m();
    const std::size_t k = classes.size();
    std::vector<std::size_t> tuple(k);
    std::int64_t total = 0;
    // Depth-first over transversals, pruning repeated points early.
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            total += sign_tuple(len, tuple);
            return;
        }
        for (std::size_t p : classes[depth]) {
            if (std::find(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(depth), p) !=
                tuple.begin() + static_cast<std::ptrdiff_t>(depth)) {
                continue;
            }
            tuple[depth] = p;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return total;
}

Rational igusa_cocycle(std::size_t k, std::span<const CyclicMap> maps) {
    if (k == 0 || maps.size() != 2 * k) {
        throw InvariantViolation("igusa_cocycle: need 2k >= 2 maps for k = " + std::to_string(k));
    }
    auto classes = igusa_classes(maps);
    boost::multiprecision::cpp_int den = 1;
    for (const auto& c : classes) {
        den *= c.size();
    }
    Rational avg(Rational::Value(boost::multiprecision::cpp_int(igusa_distinct_total(maps)), den));
    return kappa_coefficient(k) * avg;
}

} // namespace hcob
