#include "sw/json_io.hpp"

namespace sw {

namespace {

std::int64_t get_int(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

BigInt get_big(const Json& v) {
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw InputError("exponent \"" + s + "\" is not a decimal integer");
        return BigInt(s);
    }
    throw InputError("exponent must be an integer or a decimal string");
}

}  // namespace

Json context_json(const Context& ctx) { return Json{{"p", ctx.p}, {"f", ctx.f}, {"e", ctx.e}, {"n", ctx.n}}; }

Context context_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("\"ctx\" must be an object");
    auto narrow = [&](const char* key) {
        const auto v = get_int(j, key);
        if (v < 0 || v > 1'000'000) throw InputError(std::string("field \"") + key + "\" out of range");
        return static_cast<int>(v);
    };
    Context c{narrow("p"), narrow("f"), narrow("e"), narrow("n")};
    c.validate();
    return c;
}

Json weight_json(const SerreWeight& a) { return Json{{"ctx", context_json(a.ctx)}, {"rows", a.rows}}; }

SerreWeight weight_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ctx") || !j.contains("rows"))
        throw InputError("a weight needs \"ctx\" and \"rows\"");
    const Context c = context_from_json(j.at("ctx"));
    Matrix rows;
    try {
        rows = j.at("rows").get<Matrix>();
    } catch (const nlohmann::json::exception&) {
        throw InputError("\"rows\" must be a list of integer lists");
    }
    return canonicalize(rows, c);
}

Json type_json(const TameType& t) {
    Json pieces = Json::array();
    for (const auto& pc : t.pieces) {
        Json e;
        if (pc.exponent <= BigInt(INT64_MAX))
            e = pc.exponent.convert_to<std::int64_t>();
        else
            e = pc.exponent.str();
        pieces.push_back(Json{{"niveau", pc.niveau}, {"exponent", e}});
    }
    return Json{{"ctx", context_json(t.ctx)}, {"pieces", pieces}};
}

TameType type_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ctx") || !j.contains("pieces"))
        throw InputError("a type needs \"ctx\" and \"pieces\"");
    const Context c = context_from_json(j.at("ctx"));
    const auto& ps = j.at("pieces");
    if (!ps.is_array() || ps.empty()) throw InputError("\"pieces\" must be a non-empty list");
    std::vector<std::pair<int, BigInt>> raw;
    int total = 0;
    for (const auto& pc : ps) {
        if (!pc.is_object() || !pc.contains("exponent")) throw InputError("each piece needs \"niveau\" and \"exponent\"");
        const auto d = get_int(pc, "niveau");
        if (d < 1 || d > c.n) throw InputError("piece niveau out of range");
        total += static_cast<int>(d);
        raw.emplace_back(static_cast<int>(d), get_big(pc.at("exponent")));
    }
    if (total != c.n)
        throw InputError("piece niveaus sum to " + std::to_string(total) + " but n = " + std::to_string(c.n));
    return make_type(c, raw);
}

Json weight_set_json(const WeightSet& w) {
    Json out = Json::array();
    for (const auto& a : w) out.push_back(a.rows);
    return out;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(origin + ": malformed JSON: " + e.what());
    }
}

}  // namespace sw
