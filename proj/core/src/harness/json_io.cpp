#include "hcob/harness/json_io.hpp"

#include <string>

namespace hcob::harness {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) {
        throw SchemaError(std::string(what) + " must be an array");
    }
    return j;
}

std::int64_t integer(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw SchemaError(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

std::size_t natural(const json& j, const char* what) {
    const std::int64_t v = integer(j, what);
    if (v < 0) {
        throw SchemaError(std::string(what) + " must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

json to_json(const ZeroManifold& m) { return m.to_ints(); }

json to_json(BoundaryPoint p) { return json::array({p.end == End::source ? "src" : "tgt", p.index}); }

json to_json(const Bordism& w) {
    json arcs = json::array();
    for (const auto& [from, to] : w.arcs()) {
        arcs.push_back(json::array({to_json(from), to_json(to)}));
    }
    return {{"source", to_json(w.source())}, {"target", to_json(w.target())}, {"arcs", arcs}, {"circles", w.circles()}};
}

json to_json(const Chain& c) {
    json objects = json::array();
    for (const auto& m : c.objects()) {
        objects.push_back(to_json(m));
    }
    json morphisms = json::array();
    for (const auto& w : c.morphisms()) {
        morphisms.push_back(to_json(w));
    }
    return {{"objects", objects}, {"morphisms", morphisms}};
}

json to_json(const CyclicConfiguration& c) { return {{"word", c.word()}}; }

json to_json(const Rational& r) { return r.str(); }

json to_json(const CyclicMap& f) { return {{"n", f.n()}, {"m", f.m()}, {"values", f.values()}}; }

json to_json(const std::vector<CyclicMap>& maps) {
    json out = json::array();
    for (const auto& f : maps) {
        out.push_back(to_json(f));
    }
    return out;
}

json to_json(const CircleTrace& t) {
    json out = json::array();
    for (const auto& c : t.crossings) {
        out.push_back(json::array({c.level, c.index, to_int(c.sign)}));
    }
    return out;
}

json to_json(const GammaResult& g) {
    json details = json::array();
    for (const auto& term : g.terms) {
        details.push_back({{"trace", to_json(term.trace)},
                           {"configuration", term.config ? to_json(*term.config) : json(nullptr)},
                           {"reduced_sign", to_json(term.reduced_sign)}});
    }
    return {{"value", to_json(g.value)}, {"details", details}};
}

ZeroManifold zero_manifold_from_json(const json& j) {
    std::vector<int> signs;
    for (const auto& s : array(j, "object")) {
        const std::int64_t v = integer(s, "object sign");
        if (v != 1 && v != -1) {
            throw SchemaError("object signs must be +1 or -1");
        }
        signs.push_back(static_cast<int>(v));
    }
    return ZeroManifold::from_ints(signs);
}

BoundaryPoint boundary_point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string()) {
        throw SchemaError("boundary point must be [\"src\"|\"tgt\", index]");
    }
    const auto end = j[0].get<std::string>();
    if (end != "src" && end != "tgt") {
        throw SchemaError("boundary point end must be \"src\" or \"tgt\", got \"" + end + "\"");
    }
    return {end == "src" ? End::source : End::target, natural(j[1], "boundary point index")};
}

Bordism bordism_from_json(const json& j) {
    std::vector<Bordism::Arc> arcs;
    for (const auto& a : array(field(j, "arcs"), "arcs")) {
        if (!a.is_array() || a.size() != 2) {
            throw SchemaError("each arc must be [from, to]");
        }
        arcs.emplace_back(boundary_point_from_json(a[0]), boundary_point_from_json(a[1]));
    }
    std::uint64_t circles = 0;
    if (j.contains("circles")) {
        circles = natural(j.at("circles"), "circles");
    }
    return Bordism(zero_manifold_from_json(field(j, "source")), zero_manifold_from_json(field(j, "target")),
                   arcs, circles);
}

Chain chain_from_json(const json& j) {
    std::vector<ZeroManifold> objects;
    for (const auto& m : array(field(j, "objects"), "objects")) {
        objects.push_back(zero_manifold_from_json(m));
    }
    std::vector<Bordism> morphisms;
    for (const auto& w : array(field(j, "morphisms"), "morphisms")) {
        morphisms.push_back(bordism_from_json(w));
    }
    return Chain(std::move(objects), std::move(morphisms));
}

CyclicConfiguration config_from_json(const json& j) {
    std::vector<std::size_t> word;
    for (const auto& l : array(field(j, "word"), "word")) {
        word.push_back(natural(l, "word label"));
    }
    return CyclicConfiguration(std::move(word));
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_object()) {
        auto part = [&](const char* key) {
            const json& v = field(j, key);
            return v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(integer(v, key));
        };
        return part("num") / part("den");
    }
    throw SchemaError("rational must be \"n/d\" or {\"num\", \"den\"}");
}

CyclicMap cyclic_map_from_json(const json& j) {
    std::vector<std::int64_t> values;
    for (const auto& v : array(field(j, "values"), "values")) {
        values.push_back(integer(v, "map value"));
    }
    return lambda_normalize(natural(field(j, "n"), "n"), natural(field(j, "m"), "m"), std::move(values));
}

std::vector<CyclicMap> cyclic_chain_from_json(const json& j) {
    std::vector<CyclicMap> maps;
    for (const auto& f : array(j, "maps")) {
        maps.push_back(cyclic_map_from_json(f));
    }
    for (std::size_t i = 1; i < maps.size(); ++i) {
        if (maps[i].n() != maps[i - 1].m()) {
            throw ObjectMismatch("maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                 " are not composable");
        }
    }
    return maps;
}

} // namespace hcob::harness
