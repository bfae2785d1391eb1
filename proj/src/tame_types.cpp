#include "sw/tame_types.hpp"

#include <algorithm>
#include <limits>

namespace sw {

namespace {

// Exponent arithmetic either in 64 bits (when every modulus fits comfortably)
// or in arbitrary precision.
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}
inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

inline std::int64_t modp(std::int64_t a, std::int64_t m) { return mod_floor(a, m); }
inline BigInt modp(const BigInt& a, const BigInt& m) { return mod_floor(a, m); }

template <class I>
I power(I b, int k) {
    I r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

template <class I>
void split_impl(int d, I N, I q, std::vector<TamePiece>& out) {
    const I M = power<I>(q, d) - 1;
    N = modp(N, M);
    int dp = d;
    for (int k = 1; k < d; ++k) {
        if (d % k) continue;
        if (mulmod(N, power<I>(q, k) - 1, M) == 0) {
            dp = k;
            break;
        }
    }
    const I Mp = power<I>(q, dp) - 1;
    I Np = N / (M / Mp);
    I best = Np, x = Np;
    for (int i = 1; i < dp; ++i) {
        x = mulmod(x, q, Mp);
        if (x < best) best = x;
    }
    for (int i = 0; i < d / dp; ++i) out.push_back(TamePiece{dp, BigInt(best)});
}

bool fits64(const Context& ctx, int total_f_exponent) {
    // p^k must stay below 2^62 so that products go through __int128 safely.
    long double v = 1;
    for (int i = 0; i < total_f_exponent; ++i) v *= ctx.p;
    return v < static_cast<long double>(std::int64_t{1} << 62);
}

template <class I>
std::vector<TamePiece> tau_impl(const std::vector<Perm>& w, const Matrix& mu, const Context& c) {
    std::vector<TamePiece> out;
    std::vector<char> seen(c.n, 0);
    const I p = c.p, q = power<I>(p, c.f);
    for (int i0 = 0; i0 < c.n; ++i0) {
        if (seen[i0]) continue;
        // walk the slot cycle through (0, i0)
        std::vector<std::int64_t> vals;
        int j = 0, i = i0;
        do {
            if (j == 0) seen[i] = 1;
            vals.push_back(mu[j][i]);
            j = (j + 1) % c.f;
            i = w[j][i];
        } while (!(j == 0 && i == i0));
        const int L = static_cast<int>(vals.size());
        const I mod = power<I>(p, L) - 1;
        I E = 0;
        for (int s = L - 1; s >= 0; --s) E = modp(I(E * p + I(vals[s])), mod);
        split_impl<I>(L / c.f, E, q, out);
    }
    return out;
}

}  // namespace

std::vector<TamePiece> split_piece(int d, const BigInt& N, const Context& ctx) {
    std::vector<TamePiece> out;
    if (fits64(ctx, ctx.f * d)) {
        const std::int64_t M = ipow64(ctx.q(), d) - 1;
        split_impl<std::int64_t>(d, static_cast<std::int64_t>(mod_floor(N, BigInt(M))), ctx.q(), out);
    } else {
        split_impl<BigInt>(d, N, ipow(ctx.p, ctx.f), out);
    }
    return out;
}

TameType make_type(const Context& ctx, const std::vector<std::pair<int, BigInt>>& raw) {
    TameType t{ctx, {}};
    int total = 0;
    for (const auto& [d, N] : raw) {
        if (d < 1) throw InputError("niveau must be positive");
        auto ps = split_piece(d, N, ctx);
        t.pieces.insert(t.pieces.end(), ps.begin(), ps.end());
        total += d;
    }
    t.ctx.n = total;
    std::sort(t.pieces.begin(), t.pieces.end());
    return t;
}

TameType tau_from_pair(const std::vector<Perm>& w, const Matrix& mu, const Context& ctx) {
    if (static_cast<int>(w.size()) != ctx.f || static_cast<int>(mu.size()) != ctx.f)
        throw InputError("tau_from_pair: expected one permutation and one row per residue embedding");
    TameType t{ctx, fits64(ctx, ctx.f * ctx.n + 1) ? tau_impl<std::int64_t>(w, mu, ctx) : tau_impl<BigInt>(w, mu, ctx)};
    std::sort(t.pieces.begin(), t.pieces.end());
    return t;
}

bool is_good(const std::vector<Perm>& w, const Matrix& mu, const Context& ctx) {
    // Each slot cycle through row 0 must give a primitive piece of full niveau.
    auto t = tau_from_pair(w, mu, ctx);
    std::size_t ncycles = 0;
    std::vector<char> seen(ctx.n, 0);
    for (int i0 = 0; i0 < ctx.n; ++i0) {
        if (seen[i0]) continue;
        ++ncycles;
        int j = 0, i = i0;
        do {
            if (j == 0) seen[i] = 1;
            j = (j + 1) % ctx.f;
            i = w[j][i];
        } while (!(j == 0 && i == i0));
    }
    return t.pieces.size() == ncycles;
}

bool equivalent(const TameType& a, const TameType& b) { return a == b; }

TameType dual(const TameType& t) {
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& pc : t.pieces) raw.emplace_back(pc.niveau, -pc.exponent);
    return make_type(t.ctx, raw);
}

TameType twist(const TameType& t, std::int64_t c) {
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& pc : t.pieces) {
        BigInt R = (ipow(t.ctx.p, t.ctx.f * pc.niveau) - 1) / (t.ctx.p - 1);
        raw.emplace_back(pc.niveau, pc.exponent + R * c);
    }
    return make_type(t.ctx, raw);
}

TameType twist_fundamental(const TameType& t, std::int64_t c) {
    const BigInt q = ipow(t.ctx.p, t.ctx.f);
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& pc : t.pieces) raw.emplace_back(pc.niveau, pc.exponent + (ipow(t.ctx.p, t.ctx.f * pc.niveau) - 1) / (q - 1) * c);
    return make_type(t.ctx, raw);
}

TameType direct_sum(const std::vector<TameType>& parts) {
    if (parts.empty()) throw InputError("direct_sum of nothing");
    TameType t{parts[0].ctx, {}};
    t.ctx.n = 0;
    for (const auto& x : parts) {
        t.pieces.insert(t.pieces.end(), x.pieces.begin(), x.pieces.end());
        t.ctx.n += x.ctx.n;
    }
    std::sort(t.pieces.begin(), t.pieces.end());
    return t;
}

Row reduce_crystalline_character(const Row& lambda, const Context& ctx) {
    if (static_cast<int>(lambda.size()) != ctx.e * ctx.f) throw InputError("expected e*f labelled weights");
    Row b(ctx.f, 0);
    for (int k = 0; k < ctx.e * ctx.f; ++k) b[k / ctx.e] += lambda[k];
    return b;
}

TameType reduce_induced(const Row& lambda, int d, const Context& ctx) {
    const int m = ctx.f * d;
    if (static_cast<int>(lambda.size()) != ctx.e * m) throw InputError("expected e*f*d labelled weights");
    BigInt N = 0, pw = 1;
    for (int t = 0; t < m; ++t) {
        std::int64_t b = 0;
        for (int r = 0; r < ctx.e; ++r) b += lambda[t * ctx.e + r];
        N += pw * b;
        pw *= ctx.p;
    }
    return make_type(ctx, {{d, N}});
}

std::vector<BigInt> primitive_exponents(int d, const Context& ctx) {
    const std::int64_t q = ctx.q();
    const std::int64_t M = ipow64(q, d) - 1;
    std::vector<BigInt> out;
    if (M == 0) return out;
    for (std::int64_t N = 0; N < M; ++N) {
        std::int64_t x = N;
        bool ok = true;
        for (int i = 1; i < d && ok; ++i) {
            x = mulmod(x, q, M);
            if (x <= N) ok = false;  // not minimal, or orbit shorter than d
        }
        if (ok) out.emplace_back(N);
    }
    return out;
}

std::vector<TameType> enumerate_types(const Context& ctx) {
    std::vector<TamePiece> pool;
    for (int d = 1; d <= ctx.n; ++d)
        for (auto& N : primitive_exponents(d, ctx)) pool.push_back(TamePiece{d, N});
    std::sort(pool.begin(), pool.end());
    std::vector<TameType> out;
    std::vector<TamePiece> cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            out.push_back(TameType{ctx, cur});
            return;
        }
        for (std::size_t k = start; k < pool.size(); ++k) {
            if (pool[k].niveau > left) break;
            cur.push_back(pool[k]);
            self(self, k, left - pool[k].niveau);
            cur.pop_back();
        }
    };
    rec(rec, 0, ctx.n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sw
