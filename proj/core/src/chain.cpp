#include "hcob/chain.hpp"

#include <string>

#include "hcob/error.hpp"

namespace hcob {

Chain::Chain(std::vector<Bordism> morphisms) : morphisms_(std::move(morphisms)) {
    if (morphisms_.empty()) {
        throw InvariantViolation("chain: a chain built from morphisms needs at least one");
    }
    objects_.push_back(morphisms_.front().source());
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        if (i > 0 && morphisms_[i].source() != morphisms_[i - 1].target()) {
            throw ObjectMismatch("chain: W" + std::to_string(i + 1) + " does not start where W" +
                                 std::to_string(i) + " ends");
        }
        objects_.push_back(morphisms_[i].target());
    }
}

Chain::Chain(std::vector<ZeroManifold> objects, std::vector<Bordism> morphisms)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
    if (objects_.size() != morphisms_.size() + 1) {
        throw InvariantViolation("chain: need exactly one more object than morphisms");
    }
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        if (morphisms_[i].source() != objects_[i] || morphisms_[i].target() != objects_[i + 1]) {
            throw ObjectMismatch("chain: W" + std::to_string(i + 1) + " is not a morphism M" + std::to_string(i) +
                                 " -> M" + std::to_string(i + 1));
        }
    }
}

Chain Chain::point(ZeroManifold m) { return Chain(std::vector<ZeroManifold>{std::move(m)}, {}); }

bool Chain::all_reduced() const {
    for (const auto& w : morphisms_) {
        if (!w.is_reduced()) {
            return false;
        }
    }
    return true;
}

namespace {

// One step along the orientation from a wall point. The result may lie on
// level 0 or n, which ends an arc component.
WallPoint step(const Chain& chain, WallPoint at) {
    const ZeroManifold& m = chain.object(at.level);
    if (m.is_positive(at.index)) {
        BoundaryPoint q = chain.morphism(at.level + 1).partner(src(at.index));
        return {q.end == End::source ? at.level : at.level + 1, q.index};
    }
    BoundaryPoint q = chain.morphism(at.level).partner(tgt(at.index));
    return {q.end == End::target ? at.level : at.level - 1, q.index};
}

} // namespace

ChainTrace trace_chain(const Chain& chain) {
    ChainTrace out;
    const std::size_t n = chain.length();
    if (n == 0) {
        return out;
    }
    std::vector<std::vector<char>> seen(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        seen[l].assign(chain.object(l).size(), 0);
    }
    auto interior = [n](const WallPoint& p) { return p.level > 0 && p.level < n; };

    auto run_arc = [&](WallPoint start, WallPoint first) {
        ArcComponent arc;
        arc.start = start;
        WallPoint cur = first;
        while (interior(cur)) {
            seen[cur.level][cur.index] = 1;
            arc.wall_points.push_back(cur);
            cur = step(chain, cur);
        }
        arc.end = cur;
        seen[start.level][start.index] = 1;
        seen[cur.level][cur.index] = 1;
        out.arcs.push_back(std::move(arc));
    };

    const ZeroManifold& first = chain.object(0);
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (first.is_positive(i)) {
            BoundaryPoint q = chain.morphism(1).partner(src(i));
            run_arc({0, i}, {q.end == End::source ? 0U : 1U, q.index});
        }
    }
    const ZeroManifold& last = chain.object(n);
    for (std::size_t j = 0; j < last.size(); ++j) {
        if (!last.is_positive(j)) {
            BoundaryPoint q = chain.morphism(n).partner(tgt(j));
            run_arc({n, j}, {q.end == End::target ? n : n - 1, q.index});
        }
    }

    for (std::size_t l = 1; l < n; ++l) {
        const ZeroManifold& m = chain.object(l);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (seen[l][i] != 0) {
                continue;
            }
            CircleTrace trace;
            WallPoint cur{l, i};
            do {
                if (!interior(cur) || seen[cur.level][cur.index] != 0) {
                    throw InvariantViolation("trace_chain: malformed chain");
                }
                seen[cur.level][cur.index] = 1;
                trace.crossings.push_back({cur.level, cur.index, chain.object(cur.level)[cur.index]});
                cur = step(chain, cur);
            } while (cur != WallPoint{l, i});
            out.circles.push_back(std::move(trace));
        }
    }
    return out;
}

CutResult cut_normalize_with_map(const Chain& chain) {
    const std::size_t n = chain.length();
    CutResult res;
    res.point_map.resize(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        res.point_map[l].assign(chain.object(l).size(), std::nullopt);
    }
    if (n == 0) {
        res.chain = Chain::point(ZeroManifold{});
        return res;
    }
    ChainTrace tr = trace_chain(chain);
    std::vector<std::vector<char>> keep(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        keep[l].assign(chain.object(l).size(), 0);
    }
    for (const auto& c : tr.circles) {
        for (const auto& x : c.crossings) {
            keep[x.level][x.index] = 1;
        }
    }
    std::vector<ZeroManifold> objects;
    for (std::size_t l = 0; l <= n; ++l) {
        std::vector<Sign> signs;
        for (std::size_t i = 0; i < keep[l].size(); ++i) {
            if (keep[l][i] != 0) {
                res.point_map[l][i] = signs.size();
                signs.push_back(chain.object(l)[i]);
            }
        }
        objects.emplace_back(std::move(signs));
    }
    std::vector<Bordism> morphisms;
    for (std::size_t w = 1; w <= n; ++w) {
        const Bordism& b = chain.morphism(w);
        auto remap = [&](BoundaryPoint p) {
            std::size_t level = p.end == End::source ? w - 1 : w;
            return BoundaryPoint{p.end, *res.point_map[level][p.index]};
        };
        std::vector<BoundaryPoint> s;
        std::vector<BoundaryPoint> t;
        for (std::size_t i = 0; i < b.source().size(); ++i) {
            if (keep[w - 1][i] != 0) {
                s.push_back(remap(b.source_partners()[i]));
            }
        }
        for (std::size_t j = 0; j < b.target().size(); ++j) {
            if (keep[w][j] != 0) {
                t.push_back(remap(b.target_partners()[j]));
            }
        }
        morphisms.push_back(Bordism::from_partners(objects[w - 1], objects[w], std::move(s), std::move(t), 0));
    }
    res.chain = Chain(std::move(objects), std::move(morphisms));
    return res;
}

Chain cut_normalize(const Chain& chain) { return cut_normalize_with_map(chain).chain; }

Chain chain_face(const Chain& chain, std::size_t i, FaceMode mode) {
    const std::size_t n = chain.length();
    if (n == 0 || i > n) {
        throw InvariantViolation("chain_face: index " + std::to_string(i) + " out of range for a " +
                                 std::to_string(n) + "-chain");
    }
    std::vector<ZeroManifold> objects;
    std::vector<Bordism> morphisms;
    for (std::size_t l = 0; l <= n; ++l) {
        if (l != i) {
            objects.push_back(chain.object(l));
        }
    }
    for (std::size_t w = 1; w <= n; ++w) {
        if (i == 0 && w == 1) {
            continue;
        }
        if (i == n && w == n) {
            continue;
        }
        if (i > 0 && i < n && w == i) {
            const Bordism& a = chain.morphism(i);
            const Bordism& b = chain.morphism(i + 1);
            morphisms.push_back(mode == FaceMode::full ? compose(a, b) : compose_reduced(a, b));
            ++w;
            continue;
        }
        morphisms.push_back(chain.morphism(w));
    }
    return Chain(std::move(objects), std::move(morphisms));
}

Chain chain_degeneracy(const Chain& chain, std::size_t i) {
    const std::size_t n = chain.length();
    if (i > n) {
        throw InvariantViolation("chain_degeneracy: index " + std::to_string(i) + " out of range for a " +
                                 std::to_string(n) + "-chain");
    }
    std::vector<ZeroManifold> objects = chain.objects();
    std::vector<Bordism> morphisms = chain.morphisms();
    objects.insert(objects.begin() + static_cast<std::ptrdiff_t>(i), chain.object(i));
    morphisms.insert(morphisms.begin() + static_cast<std::ptrdiff_t>(i), identity(chain.object(i)));
    return Chain(std::move(objects), std::move(morphisms));
}

Chain chain_disjoint_union(const Chain& x, const Chain& y) {
    if (x.length() != y.length()) {
        throw InvariantViolation("chain_disjoint_union: chains have different lengths");
    }
    std::vector<ZeroManifold> objects;
    std::vector<Bordism> morphisms;
    for (std::size_t l = 0; l <= x.length(); ++l) {
        objects.push_back(concat(x.object(l), y.object(l)));
    }
    for (std::size_t w = 1; w <= x.length(); ++w) {
        morphisms.push_back(disjoint_union(x.morphism(w), y.morphism(w)));
    }
    return Chain(std::move(objects), std::move(morphisms));
}

Chain chain_reduce(const Chain& chain) {
    std::vector<Bordism> morphisms;
    for (const auto& w : chain.morphisms()) {
        morphisms.push_back(reduce(w));
    }
    return Chain(chain.objects(), std::move(morphisms));
}

Chain relabel_chain(const Chain& chain, const std::vector<std::vector<std::size_t>>& perms) {
    const std::size_t n = chain.length();
    if (perms.size() != n + 1) {
        throw InvariantViolation("relabel_chain: need one permutation per object");
    }
    if (n == 0) {
        std::vector<Sign> signs(chain.object(0).size());
        for (std::size_t i = 0; i < signs.size(); ++i) {
            signs.at(perms[0].at(i)) = chain.object(0)[i];
        }
        return Chain::point(ZeroManifold(std::move(signs)));
    }
    std::vector<Bordism> morphisms;
    for (std::size_t w = 1; w <= n; ++w) {
        morphisms.push_back(permute_points(chain.morphism(w), perms[w - 1], perms[w]));
    }
    return Chain(std::move(morphisms));
}

} // namespace hcob
