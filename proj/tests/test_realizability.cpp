// Which cyclic configurations can occur as the positive crossings of a
// circle in a chain? Between two consecutive positive crossings a circle
// moves right at most one wall, so wall b following wall a needs b <= a + 1.

#include <doctest.h>

#include "fixtures.hpp"
#include "hcob/cocycles.hpp"
#include "hcob/harness/generators.hpp"

using namespace hcob;
using harness::Rng;

namespace {

bool transitions_ok(const std::vector<std::size_t>& walls) {
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (walls[(i + 1) % walls.size()] > walls[i] + 1) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("positive crossings climb one wall at a time") {
    std::size_t circles = 0;
    for (std::uint64_t t = 0; t < 400; ++t) {
        Rng rng = Rng::for_trial(21, "realizable", t);
        harness::ChainShape shape;
        shape.length = 2 + t % 5;
        shape.endpoints_empty = true;
        shape.max_points = 6;
        for (const auto& c : trace_chain(harness::gen_chain(shape, rng)).circles) {
            std::vector<std::size_t> walls;
            for (const auto& x : c.crossings) {
                if (x.sign == Sign::plus) {
                    walls.push_back(x.level);
                }
            }
            ++circles;
            CHECK(transitions_ok(walls));
        }
    }
    CHECK(circles > 100);
}

TEST_CASE("the 1 2 1 3 2 3 pattern is not realizable, 1 2 3 3 2 is") {
    CHECK_FALSE(transitions_ok({1, 2, 1, 3, 2, 3}));
    CHECK(transitions_ok({1, 2, 3, 3, 2}));
    auto tr = trace_chain(fixture::gamma1_chain());
    REQUIRE(tr.circles.size() == 1);
    std::vector<std::size_t> walls{1, 2, 3};
    CHECK(circle_config(tr.circles[0], walls)->word() == std::vector<std::size_t>{0, 1, 2, 2, 1});
}
