#include "sw/weight_lattice.hpp"

#include <algorithm>

namespace sw {

bool is_restricted(const Matrix& raw, const Context& ctx) {
    if (static_cast<int>(raw.size()) != ctx.f) return false;
    for (const auto& r : raw) {
        if (static_cast<int>(r.size()) != ctx.n) return false;
        for (int i = 0; i + 1 < ctx.n; ++i) {
            auto g = r[i] - r[i + 1];
            if (g < 0 || g > ctx.p - 1) return false;
        }
    }
    return true;
}

SerreWeight canonicalize(const Matrix& raw, const Context& ctx) {
    if (static_cast<int>(raw.size()) != ctx.f)
        throw InputError("weight needs " + std::to_string(ctx.f) + " rows");
    for (const auto& r : raw)
        if (static_cast<int>(r.size()) != ctx.n)
            throw InputError("weight rows need " + std::to_string(ctx.n) + " entries");
    if (!is_restricted(raw, ctx)) throw NotRestricted("weight is not in X_1: gaps must lie in [0, p-1]");

    const std::int64_t q1 = ctx.q() - 1;
    std::int64_t c = 0, pj = 1;
    for (int j = 0; j < ctx.f; ++j) {
        c = mod_floor(c + mod_floor(raw[j][ctx.n - 1], q1) * pj % q1, q1);
        pj = pj * ctx.p % q1;
    }
    SerreWeight out{ctx, raw};
    for (int j = 0; j < ctx.f; ++j) {
        const auto base = raw[j][ctx.n - 1] - (j == 0 ? c : 0);
        for (auto& v : out.rows[j]) v -= base;
    }
    return out;
}

std::vector<HodgeType> lifts_of(const SerreWeight& a) {
    const Context& c = a.ctx;
    std::vector<HodgeType> out;
    std::vector<int> choice(c.f, 0);
    for (;;) {
        HodgeType h{c, Matrix(c.e * c.f, Row(c.n, 0))};
        for (int s = 0; s < c.f; ++s) h.cols[s * c.e + choice[s]] = a.rows[s];
        out.push_back(std::move(h));
        int s = 0;
        while (s < c.f && ++choice[s] == c.e) choice[s++] = 0;
        if (s == c.f) break;
    }
    return out;
}

std::int64_t norm(const SerreWeight& a) {
    std::int64_t s = 0;
    for (const auto& r : a.rows)
        for (int i = 0; i < a.ctx.n; ++i) s += (a.ctx.n - 1 - 2 * i) * r[i];
    return s;
}

SerreWeight dual_weight(const SerreWeight& a) {
    Matrix m = a.rows;
    const int n = a.ctx.n;
    for (auto& r : m) {
        Row d(n);
        for (int i = 0; i < n; ++i) d[i] = -r[n - 1 - i] + (1 - n);
        r = d;
    }
    return canonicalize(m, a.ctx);
}

SerreWeight twist(const SerreWeight& a, std::int64_t c) {
    Matrix m = a.rows;
    for (auto& r : m)
        for (auto& v : r) v += c;
    return canonicalize(m, a.ctx);
}

bool is_regular(const SerreWeight& a) {
    for (const auto& r : a.rows)
        for (int i = 0; i + 1 < a.ctx.n; ++i)
            if (r[i] - r[i + 1] >= a.ctx.p - 1) return false;
    return true;
}

std::optional<SerreWeight> shift_of(const SerreWeight& a, int i0) {
    if (i0 < 1 || i0 >= a.ctx.n) throw ShiftUndefined("shift index must lie in [1, n-1]");
    Matrix m = a.rows;
    for (auto& r : m) {
        if (r[i0 - 1] != r[i0]) return std::nullopt;
        for (int i = 0; i < i0; ++i) r[i] += a.ctx.p - 1;
    }
    return canonicalize(m, a.ctx);
}

WeightIndex::WeightIndex(const Context& ctx) : ctx_(ctx), q1_(ctx.q() - 1) {
    size_ = static_cast<std::size_t>(q1_ * ipow64(ctx.p, ctx.f * (ctx.n - 1)));
}

std::size_t WeightIndex::index_of(const SerreWeight& a) const {
    std::int64_t g = 0;
    for (int j = ctx_.f - 1; j >= 0; --j)
        for (int i = 0; i <= ctx_.n - 2; ++i) g = g * ctx_.p + (a.rows[j][i] - a.rows[j][i + 1]);
    return static_cast<std::size_t>(a.rows[0][ctx_.n - 1] + q1_ * g);
}

SerreWeight WeightIndex::at(std::size_t idx) const {
    std::int64_t v = static_cast<std::int64_t>(idx);
    std::int64_t c = v % q1_;
    std::int64_t g = v / q1_;
    SerreWeight a{ctx_, Matrix(ctx_.f, Row(ctx_.n, 0))};
    for (int j = 0; j < ctx_.f; ++j) {
        a.rows[j][ctx_.n - 1] = (j == 0 ? c : 0);
        for (int i = ctx_.n - 2; i >= 0; --i) {
            a.rows[j][i] = a.rows[j][i + 1] + g % ctx_.p;
            g /= ctx_.p;
        }
    }
    return a;
}

std::vector<SerreWeight> enumerate_all(const Context& ctx) {
    WeightIndex idx(ctx);
    std::vector<SerreWeight> out;
    out.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(idx.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sw
