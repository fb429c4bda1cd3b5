#pragma once

#include "hcob/bordism.hpp"
#include "hcob/chain.hpp"

namespace fixture {

using hcob::src;
using hcob::tgt;

inline hcob::ZeroManifold pm() { return hcob::ZeroManifold({hcob::Sign::plus, hcob::Sign::minus}); }

inline hcob::ZeroManifold pmpm() {
    using hcob::Sign;
    return hcob::ZeroManifold({Sign::plus, Sign::minus, Sign::plus, Sign::minus});
}

// {} -> [+,-]
inline hcob::Bordism cap() { return hcob::Bordism({}, pm(), {{tgt(1), tgt(0)}}); }

// [+,-] -> {}
inline hcob::Bordism cup() { return hcob::Bordism(pm(), {}, {{src(0), src(1)}}); }

// [+,-] -> [+,-], a cup stacked under a cap.
inline hcob::Bordism u() { return hcob::Bordism(pm(), pm(), {{src(0), src(1)}, {tgt(1), tgt(0)}}); }

// A 4-chain {} -> [+,-] -> [+,-,+,-] -> [+,-,+,-] -> {} whose only circle
// meets walls 1, 2, 3 positively in the cyclic pattern 1 2 3 3 2.
inline hcob::Chain gamma1_chain() {
    hcob::Bordism w1({}, pm(), {{tgt(1), tgt(0)}});
    hcob::Bordism w2(pm(), pmpm(), {{src(0), tgt(0)}, {tgt(1), tgt(2)}, {tgt(3), src(1)}});
    hcob::Bordism w3(pmpm(), pmpm(), {{src(0), tgt(0)}, {tgt(1), tgt(2)}, {tgt(3), src(1)}, {src(2), src(3)}});
    hcob::Bordism w4(pmpm(), {}, {{src(0), src(1)}, {src(2), src(3)}});
    return hcob::Chain({w1, w2, w3, w4});
}

} // namespace fixture
