#include "hcob/harness/eval.hpp"

#include <algorithm>

#include "hcob/cocycles.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/harness/generators.hpp"
#include "hcob/harness/json_io.hpp"

namespace hcob::harness {

namespace {

std::size_t k_of(const json& input, std::optional<std::size_t> k) {
    if (input.is_object() && input.contains("k")) {
        const json& v = input.at("k");
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
            throw SchemaError("\"k\" must be a non-negative integer");
        }
        return v.get<std::size_t>();
    }
    if (!k) {
        throw SchemaError("missing field \"k\"");
    }
    return *k;
}

const json& member(const json& input, const char* key) {
    if (!input.is_object() || !input.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return input.at(key);
}

std::pair<Bordism, Bordism> pair_of(const json& input) {
    if (input.is_array() && input.size() == 2) {
        return {bordism_from_json(input[0]), bordism_from_json(input[1])};
    }
    return {bordism_from_json(member(input, "first")), bordism_from_json(member(input, "second"))};
}

} // namespace

const std::vector<std::string>& eval_kinds() {
    static const std::vector<std::string> kinds = {"alpha",         "beta",          "gamma",   "igusa",
                                                   "reduced-sign",  "averaged-sign", "compose", "compose-reduced",
                                                   "to-bordism",    "from-bordism",  "lambda-to-u"};
    return kinds;
}

json evaluate(const std::string& what, const json& input, std::optional<std::size_t> k) {
    json out = {{"what", what}};
    if (what == "alpha") {
        out["result"] = alpha(chain_from_json(input));
    } else if (what == "beta") {
        out["result"] = beta_hat(bordism_from_json(input));
    } else if (what == "gamma") {
        auto g = gamma_details(k_of(input, k), chain_from_json(member(input, "chain")));
        json j = to_json(g);
        out["result"] = j["value"];
        out["details"] = j["details"];
    } else if (what == "igusa") {
        out["result"] = to_json(igusa_cocycle(k_of(input, k), cyclic_chain_from_json(member(input, "maps"))));
    } else if (what == "lambda-to-u") {
        out["result"] = to_json(lambda_to_U(k_of(input, k), cyclic_chain_from_json(member(input, "maps"))));
    } else if (what == "reduced-sign") {
        out["result"] = to_json(reduced_sign(config_from_json(input)));
    } else if (what == "averaged-sign") {
        out["result"] = to_json(averaged_sign(config_from_json(input)));
    } else if (what == "compose") {
        auto [w, v] = pair_of(input);
        out["result"] = to_json(compose(w, v));
    } else if (what == "compose-reduced") {
        auto [w, v] = pair_of(input);
        out["result"] = to_json(compose_reduced(w, v));
    } else if (what == "to-bordism") {
        out["result"] = to_json(to_bordism(cyclic_map_from_json(input)));
    } else if (what == "from-bordism") {
        out["result"] = to_json(from_bordism(bordism_from_json(input)));
    } else {
        throw SchemaError("unknown evaluation \"" + what + "\"");
    }
    return out;
}

const std::vector<std::string>& gen_kinds() {
    static const std::vector<std::string> kinds = {"object",     "bordism",         "chain",
                                                   "cyclic-map", "injective-chain", "config"};
    return kinds;
}

json generate(const std::string& kind, const GenRequest& request) {
    Rng rng = Rng::for_trial(request.seed, "gen-" + kind, 0);
    if (kind == "object") {
        return to_json(gen_object(request.degree, request.max_points, rng));
    }
    if (kind == "bordism") {
        auto m = gen_object(request.degree, request.max_points, rng);
        auto n = gen_object(request.degree, request.max_points, rng);
        return to_json(gen_bordism(m, n, rng, request.reduced));
    }
    if (kind == "chain") {
        ChainShape shape;
        shape.length = request.length;
        shape.endpoints_empty = request.endpoints_empty;
        shape.max_points = request.max_points;
        shape.degree = request.degree;
        shape.reduced = request.reduced;
        return to_json(gen_chain(shape, rng));
    }
    if (kind == "cyclic-map") {
        return to_json(gen_cyclic_map(std::max<std::size_t>(request.max_points, 1), rng));
    }
    if (kind == "injective-chain") {
        return to_json(gen_injective_chain(request.k, std::max<std::size_t>(request.max_points, 1), rng));
    }
    if (kind == "config") {
        return to_json(gen_config(request.labels, request.max_points, rng));
    }
    throw SchemaError("unknown generator \"" + kind + "\"");
}

} // namespace hcob::harness
