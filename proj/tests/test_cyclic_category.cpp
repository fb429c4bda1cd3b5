#include <doctest.h>

#include "hcob/cocycles.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/error.hpp"
#include "hcob/harness/generators.hpp"
#include "oracles.hpp"

using namespace hcob;
using harness::Rng;

namespace {
using V = std::vector<std::int64_t>;
}

TEST_CASE("lambda_normalize") {
    CHECK(lambda_normalize(2, 2, V{2, 3}).values() == V{0, 1});
    CHECK(lambda_normalize(1, 1, V{5}).values() == V{0});
    CHECK(lambda_normalize(3, 2, V{0, 1, 1}).values() == V{0, 1, 1});
    CHECK(lambda_normalize(2, 3, V{-4, -2}).values() == V{2, 4});
    CHECK_THROWS_AS(lambda_normalize(2, 2, V{1, 0}), InvariantViolation);
    CHECK_THROWS_AS(lambda_normalize(2, 2, V{0, 3}), InvariantViolation);
    CHECK_THROWS_AS(CyclicMap(1, 2, V{2}), InvariantViolation);
}

TEST_CASE("lambda_compose") {
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(lambda_compose(lambda_identity(n), lambda_identity(n)) == lambda_identity(n));
        CyclicMap r = lambda_identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            r = lambda_compose(lambda_rotation(n), r);
        }
        CHECK(r == lambda_identity(n));
    }
    CyclicMap h(3, 2, V{0, 1, 1});
    CyclicMap g(2, 3, V{0, 2});
    CHECK(lambda_compose(h, g) == lambda_identity(2));
    CHECK_THROWS_AS(lambda_compose(g, g), ObjectMismatch);

    for (std::uint64_t t = 0; t < 300; ++t) {
        Rng rng = Rng::for_trial(12, "lambda-oracle", t);
        auto f = harness::gen_cyclic_map(6, rng);
        auto k = harness::gen_cyclic_map(f.m(), 1 + rng.index(6), rng);
        CHECK(lambda_compose(k, f).values() == oracle::compose_values(k, f));
    }
}

TEST_CASE("lambda_is_injective") {
    CHECK(lambda_is_injective(lambda_identity(4)));
    CHECK_FALSE(lambda_is_injective(CyclicMap(2, 1, V{0, 0})));
    CHECK(lambda_is_injective(CyclicMap(2, 4, V{1, 2})));
    CHECK_FALSE(lambda_is_injective(CyclicMap(2, 2, V{0, 2})));
}

TEST_CASE("circle objects and W, V") {
    CHECK(circle_object(2).to_ints() == std::vector<int>{1, -1, 1, -1});
    for (std::size_t n = 1; n <= 6; ++n) {
        auto closed = compose(w_bordism(n), v_bordism(n));
        CHECK(closed.circles() == 1);
        CHECK(closed.arcs().empty());
    }
}

TEST_CASE("to_bordism") {
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(to_bordism(lambda_identity(n)) == identity(circle_object(n)));
        CHECK(from_bordism(identity(circle_object(n))) == lambda_identity(n));
    }
    Bordism rot(circle_object(2), circle_object(2),
                {{src(0), tgt(2)}, {src(2), tgt(0)}, {tgt(1), src(3)}, {tgt(3), src(1)}});
    CHECK(to_bordism(lambda_rotation(2)) == rot);

    // Collapsing 2 -> 1: f(2) = f(3), so [2]+ turns back to [2]-.
    auto c = to_bordism(CyclicMap(2, 1, V{0, 0}));
    CHECK(c.partner(src(2)) == src(3));
    CHECK(c.partner(src(0)) == tgt(0));
    CHECK(c.circles() == 0);
}

TEST_CASE("from_bordism rejects non-F1 bordisms") {
    Bordism u(circle_object(1), circle_object(1), {{src(0), src(1)}, {tgt(1), tgt(0)}});
    CHECK_THROWS_AS(from_bordism(u), InvariantViolation);
    CHECK_THROWS_AS(from_bordism(Bordism()), InvariantViolation);
    CHECK_FALSE(is_f1_morphism(u));
}

TEST_CASE("H is a functor and a bijection onto F1") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        Rng rng = Rng::for_trial(13, "H", t);
        auto f = harness::gen_cyclic_map(6, rng);
        auto g = harness::gen_cyclic_map(f.m(), 1 + rng.index(6), rng);
        auto hf = to_bordism(f);
        CHECK(is_f1_morphism(hf));
        CHECK(from_bordism(hf) == f);
        auto glued = compose(hf, to_bordism(g));
        CHECK(glued == to_bordism(lambda_compose(g, f)));
        CHECK(glued.circles() == 0);
    }
}

TEST_CASE("lambda_to_U") {
    std::vector<CyclicMap> ids{lambda_identity(1), lambda_identity(1)};
    auto c = lambda_to_U(1, ids);
    CHECK(c.word() == std::vector<std::size_t>{0, 1, 2});
    CHECK(reduced_sign(c) == Rational(0));

    std::vector<CyclicMap> rots{lambda_rotation(2), lambda_rotation(2)};
    auto r = lambda_to_U(1, rots);
    CHECK(r.length() == 6);
    for (const auto& cls : r.classes()) {
        CHECK(cls.size() == 2);
    }

    std::vector<CyclicMap> collapse{CyclicMap(2, 1, V{0, 0}), lambda_identity(1)};
    CHECK_THROWS_AS(lambda_to_U(1, collapse), InvariantViolation);
    CHECK_THROWS_AS(lambda_to_U(2, ids), InvariantViolation);
}

TEST_CASE("igusa cocycle") {
    std::vector<CyclicMap> ids1{lambda_identity(1), lambda_identity(1)};
    CHECK(igusa_cocycle(1, ids1) == Rational(0));

    std::vector<CyclicMap> ids3{lambda_identity(3), lambda_identity(3)};
    // Six distinct triples on Z/3: three cyclic (+1), three reversed (-1).
    CHECK(oracle::igusa_total(ids3) == 0);
    CHECK(igusa_distinct_total(ids3) == 0);
    CHECK(igusa_cocycle(1, ids3) == Rational(0));

    for (std::uint64_t t = 0; t < 300; ++t) {
        Rng rng = Rng::for_trial(14, "igusa-oracle", t);
        auto maps = harness::gen_cyclic_chain(1 + t % 2, 4, rng);
        CHECK(igusa_distinct_total(maps) == oracle::igusa_total(maps));
    }
    std::vector<CyclicMap> bad{lambda_identity(2), lambda_identity(3)};
    CHECK_THROWS_AS(igusa_cocycle(1, bad), ObjectMismatch);
}

TEST_CASE("Chern comparison on small injective chains") {
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = Rng::for_trial(15, "chern-unit", t);
        const std::size_t k = 1 + t % 2;
        auto maps = harness::gen_injective_chain(k, k == 1 ? 5 : 3, rng);
        auto c = lambda_to_U(k, maps);
        CHECK(igusa_cocycle(k, maps) == kappa_coefficient(k) * reduced_sign(c));
        CHECK(oracle::igusa_total(maps) == oracle::reduced_sign_total(c.word()));
    }
}
