#include "hcob/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hcob/chain.hpp"
#include "hcob/cocycles.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/error.hpp"
#include "hcob/harness/generators.hpp"
#include "hcob/harness/json_io.hpp"

namespace hcob::harness {

namespace {

using ComposeFn = Bordism (*)(const Bordism&, const Bordism&);

template <class T>
json encode(const T& v) {
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, json>) {
        return json(v);
    } else {
        return to_json(v);
    }
}

struct Trial {
    Rng rng;
    std::size_t index;
    const GeneratorConfig& cfg;
    ComposeFn compose_fn;
    VerificationReport& report;

    Bordism comp(const Bordism& w, const Bordism& v) const { return compose_fn(w, v); }
    Bordism comp_red(const Bordism& w, const Bordism& v) const { return reduce(compose_fn(w, v)); }

    void fail(const std::string& identity, json counterexample, json lhs, json rhs) {
        ++report.failure_count;
        if (report.failures.size() < kept_failures) {
            report.failures.push_back({index, identity, std::move(counterexample), std::move(lhs), std::move(rhs)});
        }
    }

    template <class T>
    bool expect_eq(const std::string& identity, const std::function<json()>& counterexample, const T& lhs,
                   const T& rhs) {
        ++report.checks;
        if (lhs == rhs) {
            return true;
        }
        fail(identity, counterexample(), encode(lhs), encode(rhs));
        return false;
    }
};

json bordisms_json(std::initializer_list<const Bordism*> ws) {
    json out = json::array();
    for (const auto* w : ws) {
        out.push_back(to_json(*w));
    }
    return out;
}

std::string mode_name(FaceMode mode) { return mode == FaceMode::full ? "full" : "reduced"; }

std::size_t gamma_points(const GeneratorConfig& cfg, std::size_t k) {
    return k >= 2 ? std::min<std::size_t>(cfg.max_points, 4) : cfg.max_points;
}

ZeroManifold object(Trial& t) { return gen_object(t.cfg.degree, t.cfg.max_points, t.rng); }

// ---- bordism-core ----------------------------------------------------------

void suite_assoc(Trial& t) {
    auto m = object(t), n = object(t), l = object(t), p = object(t);
    auto w = gen_bordism(m, n, t.rng, false);
    auto v = gen_bordism(n, l, t.rng, false);
    auto x = gen_bordism(l, p, t.rng, false);
    auto ce = [&] { return bordisms_json({&w, &v, &x}); };
    t.expect_eq("(WV)X = W(VX)", ce, t.comp(t.comp(w, v), x), t.comp(w, t.comp(v, x)));
    t.expect_eq("(WV)X = W(VX) reduced", ce, t.comp_red(t.comp_red(w, v), x), t.comp_red(w, t.comp_red(v, x)));
}

void suite_units(Trial& t) {
    auto m = object(t), n = object(t);
    auto w = gen_bordism(m, n, t.rng, false);
    auto ce = [&] { return to_json(w); };
    t.expect_eq("id W = W", ce, t.comp(identity(m), w), w);
    t.expect_eq("W id = W", ce, t.comp(w, identity(n)), w);
    auto r = reduce(w);
    t.expect_eq("id W = W reduced", ce, t.comp_red(identity(m), r), r);
    t.expect_eq("W id = W reduced", ce, t.comp_red(r, identity(n)), r);
}

void suite_reduce_functor(Trial& t) {
    auto m = object(t), n = object(t), l = object(t);
    auto w = gen_bordism(m, n, t.rng, false);
    auto v = gen_bordism(n, l, t.rng, false);
    t.expect_eq("R(WV) = R(W) R(V)", [&] { return bordisms_json({&w, &v}); }, reduce(t.comp(w, v)),
                t.comp_red(reduce(w), reduce(v)));
}

void suite_circle_accounting(Trial& t) {
    auto m = object(t), n = object(t), l = object(t);
    auto w = gen_bordism(m, n, t.rng, false);
    auto v = gen_bordism(n, l, t.rng, false);
    const auto traced = static_cast<std::uint64_t>(trace_chain(Chain({w, v})).circles.size());
    t.expect_eq("c(WV) = c(W) + c(V) + traced circles", [&] { return bordisms_json({&w, &v}); },
                t.comp(w, v).circles(), w.circles() + v.circles() + traced);

    // Every interior wall point lies on exactly one component.
    ChainShape shape;
    shape.length = static_cast<std::size_t>(t.rng.between(1, 4));
    shape.max_points = t.cfg.max_points;
    shape.degree = t.cfg.degree;
    shape.endpoints_empty = t.rng.coin();
    Chain x = gen_chain(shape, t.rng);
    ChainTrace tr = trace_chain(x);
    std::map<WallPoint, std::size_t> seen;
    for (const auto& a : tr.arcs) {
        for (const auto& p : a.wall_points) {
            ++seen[p];
        }
    }
    for (const auto& c : tr.circles) {
        for (const auto& cr : c.crossings) {
            ++seen[{cr.level, cr.index}];
        }
    }
    std::size_t expected = 0;
    bool once = true;
    for (std::size_t l2 = 1; l2 < x.length(); ++l2) {
        expected += x.object(l2).size();
        for (std::size_t i = 0; i < x.object(l2).size(); ++i) {
            auto it = seen.find({l2, i});
            once = once && it != seen.end() && it->second == 1;
        }
    }
    t.expect_eq("trace partitions wall points", [&] { return to_json(x); }, json{once, seen.size()},
                json{true, expected});
}

void suite_interchange(Trial& t) {
    auto m = object(t), n = object(t), l = object(t);
    const int d2 = t.cfg.max_points == 0 ? 0 : static_cast<int>(t.rng.between(-1, 1));
    auto m2 = gen_object(d2, t.cfg.max_points, t.rng);
    auto n2 = gen_object(d2, t.cfg.max_points, t.rng);
    auto l2 = gen_object(d2, t.cfg.max_points, t.rng);
    auto w = gen_bordism(m, n, t.rng, false);
    auto v = gen_bordism(n, l, t.rng, false);
    auto w2 = gen_bordism(m2, n2, t.rng, false);
    auto v2 = gen_bordism(n2, l2, t.rng, false);
    auto ce = [&] { return bordisms_json({&w, &v, &w2, &v2}); };
    auto lhs = t.comp(disjoint_union(w, w2), disjoint_union(v, v2));
    t.expect_eq("(W u W')(V u V') = WV u W'V'", ce, lhs, disjoint_union(t.comp(w, v), t.comp(w2, v2)));
    auto wv = t.comp(w, v);
    t.expect_eq("degree of composite", ce, wv.source().degree(), wv.target().degree());
    t.expect_eq("degree of disjoint union", ce, lhs.source().degree(), lhs.target().degree());
}

// Nerve identities on one chain in one mode.
void nerve_identities(Trial& t, const Chain& x, FaceMode mode) {
    const std::size_t n = x.length();
    const std::string tag = " (" + mode_name(mode) + ")";
    auto ce = [&] { return to_json(x); };
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            t.expect_eq("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                            std::to_string(i) + tag,
                        ce, chain_face(chain_face(x, j, mode), i, mode),
                        chain_face(chain_face(x, i, mode), j - 1, mode));
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        const Chain s = chain_degeneracy(x, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
            const std::string name = "d" + std::to_string(i) + " s" + std::to_string(j) + tag;
            Chain lhs = chain_face(s, i, mode);
            if (i < j) {
                t.expect_eq(name, ce, lhs, chain_degeneracy(chain_face(x, i, mode), j - 1));
            } else if (i == j || i == j + 1) {
                t.expect_eq(name, ce, lhs, x);
            } else {
                t.expect_eq(name, ce, lhs, chain_degeneracy(chain_face(x, i - 1, mode), j));
            }
        }
        for (std::size_t i = 0; i <= j; ++i) {
            t.expect_eq("s" + std::to_string(i) + " s" + std::to_string(j) + tag, ce,
                        chain_degeneracy(chain_degeneracy(x, j), i), chain_degeneracy(chain_degeneracy(x, i), j + 1));
        }
    }
}

void u_identities(Trial& t, const CyclicConfiguration& c) {
    const std::size_t n = c.dimension();
    auto ce = [&] { return to_json(c); };
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            t.expect_eq("U d" + std::to_string(i) + " d" + std::to_string(j), ce, u_face(u_face(c, j), i),
                        u_face(u_face(c, i), j - 1));
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        const auto s = u_degeneracy(c, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
            const std::string name = "U d" + std::to_string(i) + " s" + std::to_string(j);
            if (i < j) {
                t.expect_eq(name, ce, u_face(s, i), u_degeneracy(u_face(c, i), j - 1));
            } else if (i == j || i == j + 1) {
                t.expect_eq(name, ce, u_face(s, i), c);
            } else {
                t.expect_eq(name, ce, u_face(s, i), u_degeneracy(u_face(c, i - 1), j));
            }
        }
        for (std::size_t i = 0; i <= j; ++i) {
            t.expect_eq("U s" + std::to_string(i) + " s" + std::to_string(j), ce, u_degeneracy(u_degeneracy(c, j), i),
                        u_degeneracy(u_degeneracy(c, i), j + 1));
        }
    }
}

void suite_simplicial_ids(Trial& t) {
    ChainShape shape;
    shape.length = static_cast<std::size_t>(
        t.rng.between(2, static_cast<std::int64_t>(std::clamp<std::size_t>(t.cfg.max_chain_length, 2, 5))));
    shape.max_points = t.cfg.max_points;
    shape.degree = t.cfg.degree;
    shape.endpoints_empty = t.rng.coin();
    const Chain x = gen_chain(shape, t.rng);
    nerve_identities(t, x, FaceMode::full);
    const Chain r = chain_reduce(x);
    nerve_identities(t, r, FaceMode::reduced);

    // Cut: idempotent, commutes with faces, invisible to gamma.
    auto ce = [&] { return to_json(x); };
    const Chain cx = cut_normalize(x);
    t.expect_eq("cut cut = cut", ce, cut_normalize(cx), cx);
    for (std::size_t i = 0; i <= x.length(); ++i) {
        t.expect_eq("cut d" + std::to_string(i) + " cut = cut d" + std::to_string(i), ce,
                    cut_normalize(chain_face(cx, i, FaceMode::reduced)),
                    cut_normalize(chain_face(x, i, FaceMode::reduced)));
    }
    for (std::size_t k = 0; k <= 1; ++k) {
        ChainShape gs;
        gs.length = 2 * k + 2;
        gs.endpoints_empty = true;
        gs.max_points = std::min<std::size_t>(t.cfg.max_points, 6);
        const Chain y = gen_chain(gs, t.rng);
        t.expect_eq("gamma_" + std::to_string(k) + " cut = gamma_" + std::to_string(k), [&] { return to_json(y); },
                    gamma(k, cut_normalize(y)), gamma(k, y));
    }

    const auto labels = static_cast<std::size_t>(t.rng.between(3, 6));
    u_identities(t, gen_config(labels, t.cfg.max_points, t.rng));
}

// ---- cyclic-sign ------------------------------------------------------------

Rational u_coboundary(const CyclicConfiguration& c, Rational (*f)(const CyclicConfiguration&)) {
    Rational total(0);
    for (std::size_t i = 0; i <= c.dimension(); ++i) {
        Rational v = f(u_face(c, i));
        total = i % 2 == 0 ? total + v : total - v;
    }
    return total;
}

void suite_sign_cocycle(Trial& t) {
    auto c = gen_config(2 * t.cfg.k + 2, t.cfg.max_points, t.rng);
    t.expect_eq("delta averaged_sign = 0", [&] { return to_json(c); }, u_coboundary(c, averaged_sign), Rational(0));
}

void suite_reduced_sign_cocycle(Trial& t) {
    auto c = gen_config(2 * t.cfg.k + 2, t.cfg.max_points, t.rng);
    t.expect_eq("delta reduced_sign = 0", [&] { return to_json(c); }, u_coboundary(c, reduced_sign), Rational(0));
}

void suite_unique_neighbour(Trial& t) {
    const std::size_t labels = 2 * t.cfg.k + 2;
    // Redraw until the configuration has a tuple with exactly one neighboured pair.
    for (int attempt = 0; attempt < 256; ++attempt) {
        auto c = gen_config(labels, std::max(t.cfg.max_points, 2 * labels + 2), t.rng);
        const auto classes = c.classes();
        const auto table = neighbour_table(c);
        std::vector<std::size_t> tuple(labels);
        std::vector<std::size_t> digits(labels, 0);
        bool found = false;
        while (true) {
            for (std::size_t l = 0; l < labels; ++l) {
                tuple[l] = classes[l][digits[l]];
            }
            std::size_t pairs = 0, pi = 0, pj = 0;
            for (std::size_t i = 0; i < labels; ++i) {
                for (std::size_t j = i + 1; j < labels; ++j) {
                    if (table[tuple[i]][tuple[j]] != 0) {
                        ++pairs;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pairs == 1) {
                found = true;
                auto drop = [&](std::size_t x) {
                    std::vector<std::size_t> r;
                    for (std::size_t l = 0; l < labels; ++l) {
                        if (l != x) {
                            r.push_back(tuple[l]);
                        }
                    }
                    return sign_tuple(c.length(), r);
                };
                const int parity = (pj - pi - 1) % 2 == 0 ? 1 : -1;
                t.expect_eq("sign(drop a_i) = (-1)^(j-i-1) sign(drop a_j)",
                            [&] {
                                return json{{"config", to_json(c)}, {"tuple", tuple}, {"i", pi}, {"j", pj}};
                            },
                            drop(pi), parity * drop(pj));
            }
            std::size_t l = 0;
            while (l < labels && ++digits[l] == classes[l].size()) {
                digits[l] = 0;
                ++l;
            }
            if (l == labels) {
                break;
            }
        }
        if (found) {
            return;
        }
    }
    throw InvariantViolation("unique-neighbour: no instance found");
}

// ---- cocycles ---------------------------------------------------------------

Rational alpha_value(const Chain& x) { return Rational(alpha(x)); }

void suite_alpha_cocycle(Trial& t) {
    ChainShape shape;
    shape.length = 3;
    shape.reduced = true;
    shape.max_points = t.cfg.max_points;
    shape.degree = t.cfg.degree;
    shape.endpoints_empty = t.rng.coin();
    const Chain x = gen_chain(shape, t.rng);
    t.expect_eq("delta alpha = 0", [&] { return to_json(x); }, coboundary(alpha_cochain(), x, FaceMode::reduced),
                Rational(0));
}

void suite_beta_relation(Trial& t) {
    ChainShape shape;
    shape.length = 2;
    shape.max_points = t.cfg.max_points;
    shape.degree = t.cfg.degree;
    shape.endpoints_empty = t.rng.coin();
    const Chain x = gen_chain(shape, t.rng);
    t.expect_eq("delta beta_hat + alpha R = 0", [&] { return to_json(x); },
                coboundary(beta_cochain(), x, FaceMode::full) + alpha_value(chain_reduce(x)), Rational(0));
}

void gamma_cocycle(Trial& t, std::size_t k) {
    ChainShape shape;
    shape.length = 2 * k + 3;
    shape.endpoints_empty = true;
    shape.max_points = gamma_points(t.cfg, k);
    const Chain x = gen_chain(shape, t.rng);
    const Cochain g = gamma_cochain(k);
    auto ce = [&] { return to_json(x); };
    t.expect_eq("delta gamma_" + std::to_string(k) + " = 0 (reduced)", ce, coboundary(g, x, FaceMode::reduced),
                Rational(0));
    t.expect_eq("delta gamma_" + std::to_string(k) + " = 0 (full)", ce, coboundary(g, x, FaceMode::full),
                Rational(0));
}

void suite_gamma0_eq_alpha(Trial& t) {
    ChainShape shape;
    shape.length = 2;
    shape.endpoints_empty = true;
    shape.reduced = true;
    shape.max_points = t.cfg.max_points;
    const Chain x = gen_chain(shape, t.rng);
    t.expect_eq("gamma_0 = alpha", [&] { return to_json(x); }, gamma(0, x), alpha_value(x));
}

void suite_additivity(Trial& t) {
    const std::size_t k = t.cfg.k;
    ChainShape shape;
    shape.length = 2 * k + 2;
    shape.endpoints_empty = true;
    shape.max_points = gamma_points(t.cfg, k);
    const Chain x = gen_chain(shape, t.rng);
    const Chain y = gen_chain(shape, t.rng);
    auto ce = [&] { return json::array({to_json(x), to_json(y)}); };
    t.expect_eq("gamma(x u y) = gamma(x) + gamma(y)", ce, gamma(k, chain_disjoint_union(x, y)),
                gamma(k, x) + gamma(k, y));

    ChainShape as;
    as.length = 2;
    as.reduced = true;
    as.max_points = t.cfg.max_points;
    as.degree = t.cfg.degree;
    const Chain a = gen_chain(as, t.rng);
    const Chain b = gen_chain(as, t.rng);
    t.expect_eq("alpha(x u y) = alpha(x) + alpha(y)", [&] { return json::array({to_json(a), to_json(b)}); },
                alpha(chain_disjoint_union(a, b)), alpha(a) + alpha(b));
}

std::vector<std::vector<std::size_t>> random_perms(const Chain& x, Rng& rng) {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& m : x.objects()) {
        perms.push_back(gen_permutation(m.size(), rng));
    }
    return perms;
}

void suite_relabel_invariance(Trial& t) {
    const std::size_t k = t.cfg.k;
    ChainShape shape;
    shape.length = 2 * k + 2;
    shape.endpoints_empty = true;
    shape.max_points = gamma_points(t.cfg, k);
    const Chain x = gen_chain(shape, t.rng);
    const auto perms = random_perms(x, t.rng);
    t.expect_eq("gamma relabelled = gamma", [&] { return json{{"chain", to_json(x)}, {"perms", perms}}; },
                gamma(k, relabel_chain(x, perms)), gamma(k, x));

    ChainShape as;
    as.length = 2;
    as.reduced = true;
    as.max_points = t.cfg.max_points;
    as.degree = t.cfg.degree;
    const Chain a = gen_chain(as, t.rng);
    const auto ap = random_perms(a, t.rng);
    t.expect_eq("alpha relabelled = alpha", [&] { return json{{"chain", to_json(a)}, {"perms", ap}}; },
                alpha(relabel_chain(a, ap)), alpha(a));
}

void suite_degenerate_vanishing(Trial& t) {
    const std::size_t k = t.cfg.k;
    ChainShape shape;
    shape.length = 2 * k + 1;
    shape.endpoints_empty = true;
    shape.max_points = gamma_points(t.cfg, k);
    const Chain x = gen_chain(shape, t.rng);
    for (std::size_t i = 0; i <= x.length(); ++i) {
        t.expect_eq("gamma s" + std::to_string(i) + " = 0", [&] { return to_json(x); },
                    gamma(k, chain_degeneracy(x, i)), Rational(0));
    }
}

// ---- cyclic-category --------------------------------------------------------

std::size_t lambda_size(const GeneratorConfig& cfg) { return std::clamp<std::size_t>(cfg.max_points, 1, 8); }

void suite_lambda_laws(Trial& t) {
    const std::size_t cap = lambda_size(t.cfg);
    auto f = gen_cyclic_map(cap, t.rng);
    auto g = gen_cyclic_map(f.m(), static_cast<std::size_t>(t.rng.between(1, static_cast<std::int64_t>(cap))), t.rng);
    auto h = gen_cyclic_map(g.m(), static_cast<std::size_t>(t.rng.between(1, static_cast<std::int64_t>(cap))), t.rng);
    auto ce = [&] { return to_json(std::vector<CyclicMap>{f, g, h}); };
    t.expect_eq("h(gf) = (hg)f", ce, lambda_compose(h, lambda_compose(g, f)), lambda_compose(lambda_compose(h, g), f));
    t.expect_eq("id f = f", ce, lambda_compose(lambda_identity(f.m()), f), f);
    t.expect_eq("f id = f", ce, lambda_compose(f, lambda_identity(f.n())), f);

    const std::size_t n = 1 + t.index % 10;
    CyclicMap r = lambda_identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        r = lambda_compose(lambda_rotation(n), r);
    }
    t.expect_eq("r^n = id", [&] { return json{{"n", n}}; }, r, lambda_identity(n));
}

void suite_h_functorial(Trial& t) {
    const std::size_t cap = lambda_size(t.cfg);
    auto f = gen_cyclic_map(cap, t.rng);
    auto g = gen_cyclic_map(f.m(), static_cast<std::size_t>(t.rng.between(1, static_cast<std::int64_t>(cap))), t.rng);
    auto ce = [&] { return to_json(std::vector<CyclicMap>{f, g}); };
    auto glued = t.comp(to_bordism(f), to_bordism(g));
    t.expect_eq("H(gf) = H(f) H(g)", ce, to_bordism(lambda_compose(g, f)), glued);
    t.expect_eq("H(f) H(g) has no circles", ce, glued.circles(), std::uint64_t{0});
}

void suite_h_roundtrip(Trial& t) {
    auto f = gen_cyclic_map(lambda_size(t.cfg), t.rng);
    t.expect_eq("from_bordism(to_bordism(f)) = f", [&] { return to_json(f); }, from_bordism(to_bordism(f)), f);
}

void suite_f1_membership(Trial& t) {
    auto f = gen_cyclic_map(lambda_size(t.cfg), t.rng);
    auto x = to_bordism(f);
    auto ce = [&] { return to_json(f); };
    t.expect_eq("W(n) H(f) = W(m)", ce, t.comp(w_bordism(f.n()), x), w_bordism(f.m()));
    t.expect_eq("H(f) V(m) = V(n)", ce, t.comp(x, v_bordism(f.m())), v_bordism(f.n()));
    auto closed = t.comp(t.comp(w_bordism(f.n()), x), v_bordism(f.m()));
    t.expect_eq("W(n) H(f) V(m) is one circle", ce, closed.circles(), std::uint64_t{1});
}

void chern_compare(Trial& t, std::size_t k) {
    const std::size_t cap = std::min<std::size_t>(k == 1 ? 5 : 3, std::max<std::size_t>(t.cfg.max_points, 1));
    const auto maps = gen_injective_chain(k, cap, t.rng);
    auto ce = [&] { return to_json(maps); };
    const auto config = lambda_to_U(k, maps);
    t.expect_eq("igusa = c_k reduced_sign(q)", ce, igusa_cocycle(k, maps),
                kappa_coefficient(k) * reduced_sign(config));
    t.expect_eq("distinct-tuple sum = no-neighbour sum", ce, igusa_distinct_total(maps), reduced_sign_total(config));
    std::vector<std::size_t> sizes{maps.front().n()};
    for (const auto& f : maps) {
        sizes.push_back(f.m());
    }
    std::vector<std::size_t> image_sizes;
    for (const auto& a : igusa_classes(maps)) {
        image_sizes.push_back(a.size());
    }
    t.expect_eq("|A_l| = n_l", ce, json(image_sizes), json(sizes));
}

void suite_conjugation_invariance(Trial& t) {
    const std::size_t k = t.cfg.k;
    auto maps = gen_cyclic_chain(k, 4, t.rng);
    const std::size_t l = t.rng.index(2 * k + 1);
    const std::size_t nl = l == 0 ? maps.front().n() : maps[l - 1].m();
    const auto shift = t.rng.between(0, static_cast<std::int64_t>(nl) - 1);
    auto conj = maps;
    if (l > 0) {
        conj[l - 1] = lambda_compose(lambda_rotation(nl, shift), conj[l - 1]);
    }
    if (l < 2 * k) {
        conj[l] = lambda_compose(conj[l], lambda_rotation(nl, -shift));
    }
    t.expect_eq("igusa conjugated = igusa",
                [&] { return json{{"maps", to_json(maps)}, {"object", l}, {"shift", shift}}; },
                igusa_cocycle(k, conj), igusa_cocycle(k, maps));
}

using SuiteFn = std::function<void(Trial&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"assoc", suite_assoc},
        {"units", suite_units},
        {"reduce-functor", suite_reduce_functor},
        {"circle-accounting", suite_circle_accounting},
        {"interchange", suite_interchange},
        {"simplicial-ids", suite_simplicial_ids},
        {"sign-cocycle", suite_sign_cocycle},
        {"reduced-sign-cocycle", suite_reduced_sign_cocycle},
        {"unique-neighbour", suite_unique_neighbour},
        {"alpha-cocycle", suite_alpha_cocycle},
        {"beta-relation", suite_beta_relation},
        {"gamma-cocycle-k0", [](Trial& t) { gamma_cocycle(t, 0); }},
        {"gamma-cocycle-k1", [](Trial& t) { gamma_cocycle(t, 1); }},
        {"gamma-cocycle-k2", [](Trial& t) { gamma_cocycle(t, 2); }},
        {"gamma0-eq-alpha", suite_gamma0_eq_alpha},
        {"additivity", suite_additivity},
        {"relabel-invariance", suite_relabel_invariance},
        {"degenerate-vanishing", suite_degenerate_vanishing},
        {"lambda-laws", suite_lambda_laws},
        {"H-functorial", suite_h_functorial},
        {"H-roundtrip", suite_h_roundtrip},
        {"F1-membership", suite_f1_membership},
        {"chern-compare-k1", [](Trial& t) { chern_compare(t, 1); }},
        {"chern-compare-k2", [](Trial& t) { chern_compare(t, 2); }},
        {"conjugation-invariance", suite_conjugation_invariance},
    };
    return table;
}

} // namespace

Bordism corrupted_compose(const Bordism& w, const Bordism& v) {
    Bordism r = compose(w, v);
    auto arcs = r.arcs();
    if (arcs.size() < 2) {
        return r.with_circles(r.circles() + 1);
    }
    std::swap(arcs[0].second, arcs[1].second);
    return Bordism(r.source(), r.target(), arcs, r.circles());
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

VerificationReport verify(const std::string& suite, const GeneratorConfig& config) {
    const auto& table = suite_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == suite; });
    if (it == table.end()) {
        throw Error("unknown suite \"" + suite + "\"");
    }
    VerificationReport report;
    report.suite = suite;
    report.seed = config.seed;
    report.trials = config.trials;
    const auto start = std::chrono::steady_clock::now();
    const ComposeFn fn = config.mutate ? corrupted_compose : static_cast<ComposeFn>(compose);
    for (std::size_t i = 0; i < config.trials; ++i) {
        Trial trial{Rng::for_trial(config.seed, suite, i), i, config, fn, report};
        it->second(trial);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json VerificationReport::to_json(bool include_timing) const {
    json fails = json::array();
    for (const auto& f : failures) {
        fails.push_back({{"trial", f.trial},
                         {"identity", f.identity},
                         {"counterexample", f.counterexample},
                         {"lhs", f.lhs},
                         {"rhs", f.rhs}});
    }
    json out = {{"suite", suite},        {"seed", seed},
                {"trials", trials},      {"checks", checks},
                {"passed", passed()},    {"failure_count", failure_count},
                {"failures", fails}};
    if (include_timing) {
        out["seconds"] = seconds;
    }
    return out;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << suite << ": " << (passed() ? "PASS" : "FAIL") << "  trials=" << trials << " checks=" << checks
       << " failures=" << failure_count << " time=" << seconds << "s\n";
    for (const auto& f : failures) {
        os << "  trial " << f.trial << ": " << f.identity << "\n    lhs " << f.lhs.dump() << "\n    rhs "
           << f.rhs.dump() << "\n    counterexample " << f.counterexample.dump() << "\n";
    }
    if (failure_count > failures.size()) {
        os << "  ... " << failure_count - failures.size() << " more\n";
    }
    return os.str();
}

} // namespace hcob::harness
