#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hcob/error.hpp"
#include "hcob/harness/eval.hpp"
#include "hcob/harness/generators.hpp"
#include "hcob/harness/json_io.hpp"
#include "hcob/harness/verify.hpp"

using namespace hcob;
using namespace hcob::harness;

TEST_CASE("seed derivation") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(stream_seed(1, "assoc", 0) != stream_seed(1, "assoc", 1));
    CHECK(stream_seed(1, "assoc", 0) != stream_seed(1, "units", 0));
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.below(7) == b.below(7));
    }
}

TEST_CASE("generators at minimal parameters") {
    Rng rng(1);
    CHECK(gen_object(0, 0, rng).empty());
    CHECK(gen_object(1, 1, rng).to_ints() == std::vector<int>{1});
    CHECK(gen_object(-2, 2, rng).to_ints() == std::vector<int>{-1, -1});
    CHECK_THROWS_AS(gen_object(3, 2, rng), InvariantViolation);
    CHECK(gen_bordism({}, {}, rng, true) == Bordism());
    CHECK_THROWS_AS(gen_bordism(fixture::pm(), ZeroManifold({Sign::plus}), rng, false), ObjectMismatch);
    CHECK(gen_cyclic_map(1, 1, rng) == lambda_identity(1));
    CHECK(gen_config(1, 1, rng).word() == std::vector<std::size_t>{0});
    auto inj = gen_injective_chain(1, 1, rng);
    CHECK(inj.size() == 2);
    CHECK(inj[0] == lambda_identity(1));
}

TEST_CASE("generator output invariants") {
    std::set<std::vector<Bordism::Arc>> seen;
    for (std::uint64_t t = 0; t < 200; ++t) {
        Rng rng = Rng::for_trial(2, "gen", t);
        auto m = gen_object(0, 4, rng);
        CHECK(m.degree() == 0);
        CHECK(m.size() <= 4);
        seen.insert(gen_bordism(fixture::pm(), fixture::pm(), rng, true).arcs());
        CHECK(gen_bordism(m, m, rng, true).circles() == 0);
        auto f = gen_cyclic_map(5, rng);
        CHECK(lambda_normalize(f.n(), f.m(), f.values()) == f);
        for (const auto& g : gen_injective_chain(2, 4, rng)) {
            CHECK(lambda_is_injective(g));
        }
        auto c = gen_config(4, 7, rng);
        CHECK(c.label_count() == 4);
        ChainShape shape;
        shape.length = 3;
        shape.endpoints_empty = true;
        auto x = gen_chain(shape, rng);
        CHECK(x.endpoints_empty());
    }
    // [+,-] -> [+,-] has exactly two matchings.
    CHECK(seen.size() == 2);
}

TEST_CASE("json round trips") {
    auto x = fixture::gamma1_chain();
    CHECK(chain_from_json(to_json(x)) == x);
    auto w = fixture::u().with_circles(2);
    CHECK(bordism_from_json(to_json(w)) == w);
    CHECK(to_json(fixture::cap()).dump() ==
          R"({"arcs":[[["tgt",1],["tgt",0]]],"circles":0,"source":[],"target":[1,-1]})");
    CHECK(rational_from_json("-1/4") == Rational(-1, 4));
    CHECK(rational_from_json(json{{"num", 2}, {"den", -4}}) == Rational(-1, 2));
    CHECK(to_json(Rational(1, 8)) == "1/8");
    CHECK(to_json(Rational(3)) == "3");
    CyclicMap f(2, 3, {0, 2});
    CHECK(cyclic_map_from_json(to_json(f)) == f);
    CHECK_THROWS_AS(bordism_from_json(json{{"source", json::array()}}), SchemaError);
    CHECK_THROWS_AS(zero_manifold_from_json(json::array({1, 2})), SchemaError);
    CHECK_THROWS_AS(boundary_point_from_json(json::array({"mid", 0})), SchemaError);
    CHECK_THROWS_AS(cyclic_chain_from_json(json::array({to_json(f), to_json(f)})), ObjectMismatch);
}

TEST_CASE("eval examples") {
    auto rs = evaluate("reduced-sign", json{{"word", {0, 1, 0, 2, 1, 2}}});
    CHECK(rs["result"] == "-1/4");
    auto g0 = evaluate("gamma", json{{"k", 0}, {"chain", to_json(Chain({fixture::cap(), fixture::cup()}))}});
    CHECK(g0["result"] == "1");
    CHECK(g0["details"].size() == 1);
    auto g1 = evaluate("gamma", json{{"chain", to_json(fixture::gamma1_chain())}}, 1);
    CHECK(g1["result"] == "1/8");
    CHECK(g1["details"][0]["configuration"]["word"] == json::array({0, 1, 2, 2, 1}));
    auto cc = evaluate("compose", json::array({to_json(fixture::cap()), to_json(fixture::cup())}));
    CHECK(bordism_from_json(cc["result"]) == Bordism().with_circles(1));
    auto cr = evaluate("compose-reduced", json{{"first", to_json(fixture::u())}, {"second", to_json(fixture::u())}});
    CHECK(bordism_from_json(cr["result"]) == fixture::u());
    CHECK(evaluate("alpha", to_json(Chain({fixture::u(), fixture::u()})))["result"] == 1);
    CHECK(evaluate("beta", to_json(fixture::u().with_circles(2)))["result"] == 2);
    auto tb = evaluate("to-bordism", json{{"n", 2}, {"m", 2}, {"values", {1, 2}}});
    CHECK(evaluate("from-bordism", tb["result"])["result"] == json{{"n", 2}, {"m", 2}, {"values", {1, 2}}});
    auto ig = evaluate("igusa", json{{"k", 1}, {"maps", {to_json(lambda_identity(1)), to_json(lambda_identity(1))}}});
    CHECK(ig["result"] == "0");
    auto lu =
        evaluate("lambda-to-u", json{{"k", 1}, {"maps", {to_json(lambda_identity(1)), to_json(lambda_identity(1))}}});
    CHECK(lu["result"]["word"] == json::array({0, 1, 2}));
    CHECK(evaluate("averaged-sign", json{{"word", {0, 2, 1}}})["result"] == "-1");
    CHECK_THROWS_AS(evaluate("nope", json::object()), SchemaError);
    CHECK_THROWS_AS(evaluate("gamma", json{{"chain", to_json(fixture::gamma1_chain())}}), SchemaError);
    CHECK_THROWS_AS(evaluate("gamma", json{{"k", 0}, {"chain", to_json(Chain({fixture::u(), fixture::u()}))}}),
                    InvariantViolation);
}

TEST_CASE("gen is deterministic") {
    GenRequest r;
    r.seed = 77;
    r.length = 3;
    for (const auto& kind : gen_kinds()) {
        CHECK(generate(kind, r).dump() == generate(kind, r).dump());
    }
    CHECK_THROWS_AS(generate("tree", r), SchemaError);
}

TEST_CASE("verify reports are reproducible") {
    GeneratorConfig cfg;
    cfg.trials = 60;
    for (const auto& s : {"assoc", "simplicial-ids", "gamma-cocycle-k1", "chern-compare-k1"}) {
        CHECK(verify(s, cfg).to_json(false).dump() == verify(s, cfg).to_json(false).dump());
    }
    CHECK_THROWS_AS(verify("no-such-suite", cfg), Error);
    CHECK(suite_names().size() == 25);
}

TEST_CASE("mutation self-test") {
    // The corrupted composition swaps two arc ends of a known composite.
    auto good = compose(fixture::u(), identity(fixture::pm()));
    auto bad = corrupted_compose(fixture::u(), identity(fixture::pm()));
    CHECK(good != bad);
    CHECK(corrupted_compose(fixture::cap(), fixture::cup()).circles() == 2);

    GeneratorConfig cfg;
    cfg.trials = 50;
    cfg.mutate = true;
    for (const auto& s : {"assoc", "units", "interchange", "F1-membership", "H-functorial"}) {
        auto report = verify(s, cfg);
        CHECK_FALSE(report.passed());
        REQUIRE_FALSE(report.failures.empty());
        CHECK_FALSE(report.failures[0].counterexample.is_null());
        CHECK(report.failures[0].lhs != report.failures[0].rhs);
    }
    cfg.mutate = false;
    CHECK(verify("units", cfg).passed());
}

TEST_CASE("gamma vanishes on degenerate chains") {
    GeneratorConfig cfg;
    cfg.trials = 200;
    for (std::size_t k : {0, 1, 2}) {
        cfg.k = k;
        auto r = verify("degenerate-vanishing", cfg);
        CHECK_MESSAGE(r.passed(), r.to_text());
    }
}
