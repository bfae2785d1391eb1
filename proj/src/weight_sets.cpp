#include "sw/weight_sets.hpp"

#include "sw/engine.hpp"

#include <algorithm>

namespace sw {

namespace {

WeightSet to_set(const IdList& ids, const Engine& en) {
    WeightSet out;
    for (auto i : ids) out.insert(en.index().at(i));
    return out;
}

void require_jh(const Context& c) {
    if (c.n > 3) throw Unsupported("this predictor needs Jordan-Holder factors, available for n <= 3");
}

}  // namespace

WeightSet w_obv(const TameType& t) {
    const Engine& en = Engine::get(t.ctx);
    return to_set(en.obv()[en.type_id(t)], en);
}

WeightSet closure_C(const WeightSet& w, const Context& ctx) {
    require_jh(ctx);
    const Engine& en = Engine::get(ctx);
    IdList seed;
    for (const auto& a : w) {
        if (a.ctx != ctx) throw InputError("weight context does not match " + ctx.str());
        seed.push_back(static_cast<std::uint32_t>(en.index().index_of(a)));
    }
    return to_set(en.closure(seed), en);
}

WeightSet w_expl(const TameType& t) {
    require_jh(t.ctx);
    const Engine& en = Engine::get(t.ctx);
    return to_set(en.expl()[en.type_id(t)], en);
}

WeightSet w_q_gl3(const TameType& t) {
    const Engine& en = Engine::get(t.ctx);
    return to_set(en.wq_gl3()[en.type_id(t)], en);
}

WeightSet w_q_generic(const TameType& t) {
    const Engine& en = Engine::get(t.ctx);
    return to_set(en.wq_generic()[en.type_id(t)], en);
}

WeightSet adp_weights(const TameType& t) {
    const Engine& en = Engine::get(t.ctx);
    return to_set(en.adp()[en.type_id(t)], en);
}

std::int64_t genericity(const TameType& t) {
    const Engine& en = Engine::get(t.ctx);
    return en.generic_depth()[en.type_id(t)];
}

// delta-deep means every root pairing stays more than delta away from the walls.
bool is_delta_generic(const TameType& t, std::int64_t delta) { return genericity(t) > delta; }

bool ShiftReport::closed() const {
    return std::all_of(entries.begin(), entries.end(), [](const ShiftEntry& e) { return e.member; });
}

ShiftReport is_shift_closed(const WeightSet& w) {
    ShiftReport rep;
    for (const auto& a : w)
        for (int i0 = 1; i0 < a.ctx.n; ++i0)
            if (auto s = shift_of(a, i0)) rep.entries.push_back({a, i0, *s, w.count(*s) > 0});
    return rep;
}

WeightSet dual_set(const WeightSet& w) {
    WeightSet out;
    for (const auto& a : w) out.insert(dual_weight(a));
    return out;
}

WeightSet twist_set(const WeightSet& w, std::int64_t c) {
    WeightSet out;
    for (const auto& a : w) out.insert(twist(a, c));
    return out;
}

WeightSet regular_part(const WeightSet& w) {
    WeightSet out;
    for (const auto& a : w)
        if (is_regular(a)) out.insert(a);
    return out;
}

WeightSet a_set(const Row& mu, const Context& ctx) {
    if (ctx.n != 3 || ctx.f != 1 || ctx.e != 1) throw Unsupported("A-sets are defined for GL3 over Q_p");
    if (mu.size() != 3) throw InputError("mu needs three entries");
    const std::int64_t p = ctx.p, m = p - 1;
    const std::int64_t x = mu[0] - 2, y = mu[1] - 1, z = mu[2];
    // reg: the representative with both gaps in [0, p-2]
    const std::int64_t z1 = mod_floor(z, m);
    const std::int64_t y1 = z1 + mod_floor(y - z1, m);
    const std::int64_t x1 = y1 + mod_floor(x - y1, m);
    WeightSet out{canonicalize({{x1, y1, z1}}, ctx)};
    if (x1 - z1 < p - 2) out.insert(canonicalize({{z1 + p - 2, y1, x1 - p + 2}}, ctx));
    return out;
}

}  // namespace sw
