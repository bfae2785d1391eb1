#include "sw/jordan_holder.hpp"

#include <algorithm>
#include <stdexcept>

namespace sw {

namespace {

// Formal combination of Weyl characters chi(mu), mu dominant.
using WeylComb = std::map<Row, std::int64_t>;
// Weight multiplicities of a module.
using Weights = std::map<Row, std::int64_t>;

void require_supported(std::size_t n) {
    if (n > 3) throw Unsupported("Jordan-Holder constituents are only available for n <= 3");
}

Weights weyl_weights(const Row& lam) {
    require_supported(lam.size());
    Weights out;
    const auto n = lam.size();
    if (n == 1) {
        out[lam] = 1;
    } else if (n == 2) {
        for (auto y = lam[1]; y <= lam[0]; ++y) out[{y, lam[0] + lam[1] - y}] += 1;
    } else {
        const auto s = lam[0] + lam[1] + lam[2];
        for (auto x1 = lam[1]; x1 <= lam[0]; ++x1)
            for (auto x2 = lam[2]; x2 <= lam[1]; ++x2)
                for (auto y = x2; y <= x1; ++y) out[{y, x1 + x2 - y, s - x1 - x2}] += 1;
    }
    return out;
}

// chi(mu) for arbitrary mu is 0 or +-chi(w . mu) with w . mu dominant.
void add_straightened(WeylComb& acc, Row mu, std::int64_t coeff) {
    const int n = static_cast<int>(mu.size());
    for (int i = 0; i < n; ++i) mu[i] += n - 1 - i;
    int sign = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (mu[i] == mu[j]) return;
            if (mu[i] < mu[j]) sign = -sign;
        }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    for (int i = 0; i < n; ++i) mu[i] -= n - 1 - i;
    auto& slot = acc[mu];
    slot += sign * coeff;
    if (slot == 0) acc.erase(mu);
}

// Brauer's formula: chi(lam) * ch V = sum over weights nu of V of chi(lam + nu).
WeylComb brauer(const WeylComb& a, const Weights& v) {
    WeylComb out;
    for (const auto& [lam, c] : a)
        for (const auto& [nu, m] : v) {
            Row mu = lam;
            for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += nu[i];
            add_straightened(out, std::move(mu), c * m);
        }
    return out;
}

Weights weights_of(const WeylComb& a) {
    Weights out;
    for (const auto& [lam, c] : a)
        for (const auto& [mu, m] : weyl_weights(lam)) {
            auto& slot = out[mu];
            slot += c * m;
            if (slot == 0) out.erase(mu);
        }
    return out;
}

bool strictly_upper_gl3(const Row& a, int p) {
    return a[0] - a[2] > p - 2 && a[0] - a[1] < p - 1 && a[1] - a[2] < p - 1;
}

Row gl3_partner(const Row& a, int p) { return {a[2] + p - 2, a[1], a[0] - p + 2}; }

bool row_restricted(const Row& a, int p) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] - a[i + 1] < 0 || a[i] - a[i + 1] > p - 1) return false;
    return true;
}

bool row_constant(const Row& a) { return std::adjacent_find(a.begin(), a.end(), std::not_equal_to<>()) == a.end(); }

WeylComb restricted_simple(const Row& a, int p) {
    require_supported(a.size());
    WeylComb out{{a, 1}};
    if (a.size() == 3 && strictly_upper_gl3(a, p)) out[gl3_partner(a, p)] -= 1;
    return out;
}

// Restricted pieces of mu in the Steinberg tensor product theorem:
// mu = sum_i p^i mu_i, each mu_i restricted, the last one constant.
std::vector<Row> steinberg_digits(Row mu, int p) {
    std::vector<Row> out;
    while (!row_constant(mu)) {
        const auto n = mu.size();
        Row r(n);
        r[n - 1] = mod_floor(mu[n - 1], p);
        for (std::size_t i = n - 1; i-- > 0;) r[i] = r[i + 1] + mod_floor(mu[i] - mu[i + 1], p);
        for (std::size_t i = 0; i < n; ++i) mu[i] = (mu[i] - r[i]) / p;
        out.push_back(std::move(r));
    }
    out.push_back(std::move(mu));
    return out;
}

Row shifted(Row r, std::int64_t c) {
    for (auto& v : r) v += c;
    return r;
}

// Algebraic character of L(mu) as a combination of Weyl characters.
WeylComb simple_char(const Row& mu, int p) {
    const std::int64_t base = mu.back();
    const Row key = shifted(mu, -base);
    thread_local std::map<std::pair<int, Row>, WeylComb> cache;
    auto it = cache.find({p, key});
    if (it == cache.end()) {
        auto digits = steinberg_digits(key, p);
        WeylComb acc = restricted_simple(digits[0], p);
        std::int64_t scale = 1;
        for (std::size_t i = 1; i < digits.size(); ++i) {
            scale *= p;
            Weights twisted;
            if (i + 1 == digits.size()) {
                twisted[Row(key.size(), digits[i][0] * scale)] = 1;
            } else {
                for (const auto& [nu, m] : weights_of(restricted_simple(digits[i], p))) {
                    Row x = nu;
                    for (auto& v : x) v *= scale;
                    twisted[x] = m;
                }
            }
            acc = brauer(acc, twisted);
        }
        it = cache.emplace(std::make_pair(p, key), std::move(acc)).first;
    }
    WeylComb out;
    for (const auto& [lam, c] : it->second) out[shifted(lam, base)] = c;
    return out;
}

// Decompose a genuine character into algebraic simple modules.
std::map<Row, std::int64_t> peel(WeylComb ch, int p) {
    std::map<Row, std::int64_t> out;
    while (!ch.empty()) {
        const auto [top, c] = *ch.rbegin();  // lexicographically largest is dominance-maximal
        if (c <= 0) throw std::logic_error("peeling reached a negative leading coefficient");
        out[top] += c;
        for (const auto& [lam, k] : simple_char(top, p)) {
            auto& slot = ch[lam];
            slot -= c * k;
            if (slot == 0) ch.erase(lam);
        }
    }
    return out;
}

// Simple GL_n(k)-modules written as one tensor factor list per embedding.
struct Config {
    std::vector<std::vector<Row>> factors;  // non-constant restricted rows
    Row det;                                // determinant power per embedding

    auto operator<=>(const Config&) const = default;
};

void place(Config& cfg, int sigma, const Row& mu, int p) {
    const int f = static_cast<int>(cfg.factors.size());
    auto digits = steinberg_digits(mu, p);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const int s = static_cast<int>((sigma + i) % f);
        const Row& r = digits[i];
        cfg.det[s] += r.back();
        if (!row_constant(r)) cfg.factors[s].push_back(shifted(r, -r.back()));
    }
}

void resolve(Config cfg, std::int64_t mult, const Context& ctx, std::map<SerreWeight, std::int64_t>& out) {
    const int f = ctx.f;
    for (auto& fs : cfg.factors) std::sort(fs.begin(), fs.end());
    for (int s = 0; s < f; ++s) {
        if (cfg.factors[s].size() < 2) continue;
        WeylComb ch = restricted_simple(cfg.factors[s][0], ctx.p);
        for (std::size_t k = 1; k < cfg.factors[s].size(); ++k)
            ch = brauer(ch, weights_of(restricted_simple(cfg.factors[s][k], ctx.p)));
        Config rest = cfg;
        rest.factors[s].clear();
        for (const auto& [nu, m] : peel(std::move(ch), ctx.p)) {
            Config next = rest;
            place(next, s, nu, ctx.p);
            resolve(std::move(next), mult * m, ctx, out);
        }
        return;
    }
    Matrix rows(f);
    for (int s = 0; s < f; ++s) {
        rows[s] = cfg.factors[s].empty() ? Row(ctx.n, 0) : cfg.factors[s][0];
        for (auto& v : rows[s]) v += cfg.det[s];
    }
    out[canonicalize(rows, ctx)] += mult;
}

Context single(const Context& ctx) { return Context{ctx.p, 1, 1, ctx.n}; }

}  // namespace

std::int64_t JHList::total_dim() const {
    std::int64_t d = 0;
    for (const auto& [a, m] : entries) d += m * serre_dim(a);
    return d;
}

std::vector<SerreWeight> JHList::weights() const {
    std::vector<SerreWeight> out;
    for (const auto& [a, m] : entries) out.push_back(a);
    return out;
}

std::int64_t weyl_dim(const Row& lambda) {
    const int n = static_cast<int>(lambda.size());
    __int128 num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + (j - i);
            den *= j - i;
        }
    return static_cast<std::int64_t>(num / den);
}

std::int64_t simple_dim(const Row& a, int p) {
    require_supported(a.size());
    if (!row_restricted(a, p)) throw NotRestricted("simple_dim needs a restricted weight");
    std::int64_t d = 0;
    for (const auto& [lam, c] : restricted_simple(a, p)) d += c * weyl_dim(lam);
    return d;
}

std::int64_t serre_dim(const SerreWeight& a) {
    std::int64_t d = 1;
    for (const auto& r : a.rows) d *= simple_dim(r, a.ctx.p);
    return d;
}

JHList jh_weyl_gl2(std::int64_t gap, std::int64_t base, const Context& ctx) {
    if (ctx.n != 2 || ctx.f != 1) throw InputError("jh_weyl_gl2 works over a single embedding with n = 2");
    const std::int64_t p = ctx.p;
    if (gap < 0) throw InputError("negative gap");
    if (gap > 2 * p - 1) throw GapTooLarge("jh_weyl_gl2 supports gaps up to 2p-1");
    JHList out{ctx, {}};
    auto add = [&](std::int64_t a, std::int64_t b, std::int64_t m) { out.entries[canonicalize({{a, b}}, ctx)] += m; };
    if (gap <= p - 1) {
        add(gap + base, base, 1);
        return out;
    }
    // highest weight (x + 1, z)
    const std::int64_t x = gap + base - 1, z = base;
    if (x - z == 2 * p - 2) {
        add(z + p - 1, z + 1, 2);
        add(z + 1, z, 1);
        return out;
    }
    add(x - p + 2, z, 1);
    if (x - z != p - 1) add(x - p + 1, z + 1, 1);
    add(z + p - 1, x - p + 2, 1);
    return out;
}

JHList jh_weyl_gl3_restricted(const Row& a, const Context& ctx) {
    if (ctx.n != 3 || ctx.f != 1 || a.size() != 3)
        throw InputError("jh_weyl_gl3_restricted works over a single embedding with n = 3");
    if (!row_restricted(a, ctx.p)) throw NotRestricted("weight is not restricted");
    JHList out{ctx, {}};
    out.entries[canonicalize({a}, ctx)] += 1;
    if (strictly_upper_gl3(a, ctx.p)) out.entries[canonicalize({gl3_partner(a, ctx.p)}, ctx)] += 1;
    return out;
}

JHList jh_L_lambda(const HodgeType& lam) {
    const Context& ctx = lam.ctx;
    require_supported(ctx.n);
    if (static_cast<int>(lam.cols.size()) != ctx.e * ctx.f) throw InputError("Hodge type has the wrong number of columns");
    for (const auto& col : lam.cols)
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            if (col[i] < col[i + 1]) throw InputError("Hodge type columns must be non-increasing");

    // per embedding: algebraic simple constituents of the tensor product of Weyl modules
    std::vector<std::map<Row, std::int64_t>> per_sigma;
    std::int64_t expected = 1;
    for (int s = 0; s < ctx.f; ++s) {
        WeylComb ch{{Row(ctx.n, 0), 1}};
        for (int r = 0; r < ctx.e; ++r) {
            const Row& col = lam.cols[s * ctx.e + r];
            expected *= weyl_dim(col);
            ch = brauer(ch, weyl_weights(col));
        }
        per_sigma.push_back(peel(std::move(ch), ctx.p));
    }

    JHList out{ctx, {}};
    Config start{std::vector<std::vector<Row>>(ctx.f), Row(ctx.f, 0)};
    auto rec = [&](auto&& self, int s, Config cfg, std::int64_t mult) -> void {
        if (s == ctx.f) {
            resolve(std::move(cfg), mult, ctx, out.entries);
            return;
        }
        for (const auto& [nu, m] : per_sigma[s]) {
            Config next = cfg;
            place(next, s, nu, ctx.p);
            self(self, s + 1, std::move(next), mult * m);
        }
    };
    rec(rec, 0, start, 1);
    if (out.total_dim() != expected) throw std::logic_error("Jordan-Holder dimension bookkeeping failed");
    return out;
}

JHList jh_product(const std::vector<JHList>& per_sigma, const Context& ctx) {
    if (static_cast<int>(per_sigma.size()) != ctx.f) throw InputError("jh_product needs one list per embedding");
    JHList out{ctx, {}};
    Matrix rows(ctx.f);
    auto rec = [&](auto&& self, int s, std::int64_t mult) -> void {
        if (s == ctx.f) {
            out.entries[canonicalize(rows, ctx)] += mult;
            return;
        }
        if (per_sigma[s].ctx != single(ctx)) throw InputError("jh_product inputs must be single-embedding lists");
        for (const auto& [a, m] : per_sigma[s].entries) {
            rows[s] = a.rows[0];
            self(self, s + 1, mult * m);
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace sw
