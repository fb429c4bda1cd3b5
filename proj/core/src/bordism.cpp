#include "hcob/bordism.hpp"

#include <algorithm>
#include <string>

#include "hcob/error.hpp"

namespace hcob {

namespace {

std::string describe(BoundaryPoint p) {
    return std::string(p.end == End::source ? "src" : "tgt") + "[" + std::to_string(p.index) + "]";
}

std::vector<std::size_t> check_permutation(std::span<const std::size_t> perm, std::size_t n) {
    if (perm.size() != n) {
        throw InvariantViolation("permute_points: permutation has length " + std::to_string(perm.size()) +
                                 ", object has " + std::to_string(n) + " points");
    }
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inverse[perm[i]] != n) {
            throw InvariantViolation("permute_points: not a permutation");
        }
        inverse[perm[i]] = i;
    }
    return inverse;
}

} // namespace

Sign sign_from_int(int v) {
    if (v == 1) {
        return Sign::plus;
    }
    if (v == -1) {
        return Sign::minus;
    }
    throw InvariantViolation("sign must be +1 or -1, got " + std::to_string(v));
}

ZeroManifold ZeroManifold::from_ints(std::span<const int> values) {
    std::vector<Sign> signs;
    signs.reserve(values.size());
    for (int v : values) {
        signs.push_back(sign_from_int(v));
    }
    return ZeroManifold(std::move(signs));
}

std::vector<int> ZeroManifold::to_ints() const {
    std::vector<int> out;
    out.reserve(signs_.size());
    for (Sign s : signs_) {
        out.push_back(to_int(s));
    }
    return out;
}

std::size_t ZeroManifold::plus_count() const {
    return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::plus));
}

int ZeroManifold::degree() const {
    int d = 0;
    for (Sign s : signs_) {
        d += to_int(s);
    }
    return d;
}

ZeroManifold concat(const ZeroManifold& a, const ZeroManifold& b) {
    std::vector<Sign> signs = a.signs();
    signs.insert(signs.end(), b.signs().begin(), b.signs().end());
    return ZeroManifold(std::move(signs));
}

Bordism::Bordism(ZeroManifold source, ZeroManifold target, std::span<const Arc> arcs, std::uint64_t circles)
    : source_(std::move(source)), target_(std::move(target)), circles_(circles) {
    const BoundaryPoint unset{End::source, static_cast<std::size_t>(-1)};
    source_partner_.assign(source_.size(), unset);
    target_partner_.assign(target_.size(), unset);
    auto slot = [&](BoundaryPoint p) -> BoundaryPoint& {
        auto& side = p.end == End::source ? source_partner_ : target_partner_;
        if (p.index >= side.size()) {
            throw InvariantViolation("bordism: boundary point " + describe(p) + " out of range");
        }
        return side[p.index];
    };
    for (const auto& [from, to] : arcs) {
        if (!in_domain(from)) {
            throw InvariantViolation("bordism: arc starts at " + describe(from) +
                                     ", which is not in source+ u target-");
        }
        if (in_domain(to)) {
            throw InvariantViolation("bordism: arc ends at " + describe(to) +
                                     ", which is not in source- u target+");
        }
        auto& a = slot(from);
        auto& b = slot(to);
        if (a != unset || b != unset) {
            throw InvariantViolation("bordism: arcs " + describe(from) + " -> " + describe(to) +
                                     " reuse a boundary point");
        }
        a = to;
        b = from;
    }
    validate();
}

Bordism Bordism::from_partners(ZeroManifold source, ZeroManifold target, std::vector<BoundaryPoint> source_partner,
                               std::vector<BoundaryPoint> target_partner, std::uint64_t circles) {
    Bordism b;
    b.source_ = std::move(source);
    b.target_ = std::move(target);
    b.source_partner_ = std::move(source_partner);
    b.target_partner_ = std::move(target_partner);
    b.circles_ = circles;
    b.validate();
    return b;
}

void Bordism::validate() const {
    if (source_partner_.size() != source_.size() || target_partner_.size() != target_.size()) {
        throw InvariantViolation("bordism: partner table size mismatch");
    }
    if (source_.degree() != target_.degree()) {
        throw InvariantViolation("bordism: source degree " + std::to_string(source_.degree()) +
                                 " != target degree " + std::to_string(target_.degree()));
    }
    auto check = [&](BoundaryPoint p, BoundaryPoint q) {
        const auto& side = q.end == End::source ? source_partner_ : target_partner_;
        if (q.index >= side.size()) {
            throw InvariantViolation("bordism: " + describe(p) + " is not matched");
        }
        if (side[q.index] != p || q == p) {
            throw InvariantViolation("bordism: arcs do not form a bijection at " + describe(p));
        }
        if (in_domain(p) == in_domain(q)) {
            throw InvariantViolation("bordism: arc " + describe(p) + " -- " + describe(q) +
                                     " does not join the domain to the codomain");
        }
    };
    for (std::size_t i = 0; i < source_.size(); ++i) {
        check(src(i), source_partner_[i]);
    }
    for (std::size_t j = 0; j < target_.size(); ++j) {
        check(tgt(j), target_partner_[j]);
    }
}

bool Bordism::in_domain(BoundaryPoint p) const {
    if (p.end == End::source) {
        return p.index < source_.size() && source_.is_positive(p.index);
    }
    return p.index < target_.size() && !target_.is_positive(p.index);
}

BoundaryPoint Bordism::partner(BoundaryPoint p) const {
    const auto& side = p.end == End::source ? source_partner_ : target_partner_;
    if (p.index >= side.size()) {
        throw InvariantViolation("bordism: boundary point " + describe(p) + " out of range");
    }
    return side[p.index];
}

std::vector<Bordism::Arc> Bordism::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (std::size_t i = 0; i < source_.size(); ++i) {
        if (source_.is_positive(i)) {
            out.emplace_back(src(i), source_partner_[i]);
        }
    }
    for (std::size_t j = 0; j < target_.size(); ++j) {
        if (!target_.is_positive(j)) {
            out.emplace_back(tgt(j), target_partner_[j]);
        }
    }
    return out;
}

Bordism Bordism::with_circles(std::uint64_t circles) const {
    Bordism b = *this;
    b.circles_ = circles;
    return b;
}

Bordism identity(const ZeroManifold& m) {
    std::vector<BoundaryPoint> s(m.size());
    std::vector<BoundaryPoint> t(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        s[i] = tgt(i);
        t[i] = src(i);
    }
    return Bordism::from_partners(m, m, std::move(s), std::move(t), 0);
}

namespace {

struct Glued {
    std::vector<BoundaryPoint> source_partner;
    std::vector<BoundaryPoint> target_partner;
    std::uint64_t created = 0;
};

// Path-following through the shared object. Orientation never needs to be
// tracked: the partner involutions already encode which way each arc runs.
Glued glue(const Bordism& w, const Bordism& v) {
    if (w.target() != v.source()) {
        throw ObjectMismatch("compose: target of the first bordism does not equal source of the second");
    }
    const std::size_t mid = w.target().size();
    std::vector<char> visited(mid, 0);
    auto w_mid = w.target_partners();
    auto v_mid = v.source_partners();

    // Enter the middle object at index p from the w side; return the exit
    // point on v's target, or on w's source.
    auto run = [&](BoundaryPoint p, bool in_w) -> BoundaryPoint {
        while (true) {
            if (in_w) {
                if (p.end == End::source) {
                    return p;
                }
                visited[p.index] = 1;
                p = v_mid[p.index];
                in_w = false;
            } else {
                if (p.end == End::target) {
                    return p;
                }
                visited[p.index] = 1;
                p = w_mid[p.index];
                in_w = true;
            }
        }
    };

    Glued g;
    g.source_partner.resize(w.source().size());
    g.target_partner.resize(v.target().size());
    for (std::size_t i = 0; i < w.source().size(); ++i) {
        g.source_partner[i] = run(w.source_partners()[i], true);
    }
    for (std::size_t j = 0; j < v.target().size(); ++j) {
        g.target_partner[j] = run(v.target_partners()[j], false);
    }
    for (std::size_t p = 0; p < mid; ++p) {
        if (visited[p] != 0) {
            continue;
        }
        ++g.created;
        std::size_t cur = p;
        do {
            visited[cur] = 1;
            std::size_t across = v_mid[cur].index; // v returns to the middle object
            visited[across] = 1;
            cur = w_mid[across].index;
        } while (cur != p);
    }
    return g;
}

} // namespace

Bordism compose(const Bordism& w, const Bordism& v) {
    Glued g = glue(w, v);
    return Bordism::from_partners(w.source(), v.target(), std::move(g.source_partner), std::move(g.target_partner),
                                  w.circles() + v.circles() + g.created);
}

std::uint64_t created_circles(const Bordism& w, const Bordism& v) { return glue(w, v).created; }

Bordism reduce(const Bordism& w) { return w.with_circles(0); }

Bordism compose_reduced(const Bordism& w, const Bordism& v) {
    Glued g = glue(w, v);
    return Bordism::from_partners(w.source(), v.target(), std::move(g.source_partner), std::move(g.target_partner), 0);
}

Bordism disjoint_union(const Bordism& w, const Bordism& v) {
    const std::size_t s_off = w.source().size();
    const std::size_t t_off = w.target().size();
    auto shift = [&](BoundaryPoint p) {
        return BoundaryPoint{p.end, p.index + (p.end == End::source ? s_off : t_off)};
    };
    std::vector<BoundaryPoint> s(w.source_partners().begin(), w.source_partners().end());
    std::vector<BoundaryPoint> t(w.target_partners().begin(), w.target_partners().end());
    for (auto p : v.source_partners()) {
        s.push_back(shift(p));
    }
    for (auto p : v.target_partners()) {
        t.push_back(shift(p));
    }
    return Bordism::from_partners(concat(w.source(), v.source()), concat(w.target(), v.target()), std::move(s),
                                  std::move(t), w.circles() + v.circles());
}

Bordism permute_points(const Bordism& w, std::span<const std::size_t> source_perm,
                       std::span<const std::size_t> target_perm) {
    auto s_inv = check_permutation(source_perm, w.source().size());
    auto t_inv = check_permutation(target_perm, w.target().size());
    auto rename = [&](BoundaryPoint p) {
        return BoundaryPoint{p.end, p.end == End::source ? source_perm[p.index] : target_perm[p.index]};
    };
    std::vector<Sign> s_signs(w.source().size());
    std::vector<Sign> t_signs(w.target().size());
    std::vector<BoundaryPoint> s(w.source().size());
    std::vector<BoundaryPoint> t(w.target().size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        s_signs[i] = w.source()[s_inv[i]];
        s[i] = rename(w.source_partners()[s_inv[i]]);
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
        t_signs[j] = w.target()[t_inv[j]];
        t[j] = rename(w.target_partners()[t_inv[j]]);
    }
    return Bordism::from_partners(ZeroManifold(std::move(s_signs)), ZeroManifold(std::move(t_signs)), std::move(s),
                                  std::move(t), w.circles());
}

} // namespace hcob
