#include "sw/digit_witness.hpp"

#include <algorithm>
#include <numeric>

namespace sw {

namespace {

// Working digit vector together with the original position of each entry, so
// cyclic rotations can be undone at the end.
struct Digits {
    Row x;
    std::vector<int> pos;

    void rotate(int s) {
        const int L = static_cast<int>(x.size());
        Row nx(L);
        std::vector<int> np(L);
        for (int j = 0; j < L; ++j) {
            nx[j] = x[(j + s) % L];
            np[j] = pos[(j + s) % L];
        }
        x = std::move(nx);
        pos = std::move(np);
    }

    Row restore() const {
        Row out(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) out[pos[j]] = x[j];
        return out;
    }
};

Row base_p_digits(const BigInt& N, int p, int len) {
    Row out(len);
    if (N < (BigInt(1) << 62)) {
        auto r = static_cast<std::int64_t>(N);
        for (int i = 0; i < len; ++i, r /= p) out[i] = r % p;
        return out;
    }
    BigInt r = N;
    for (int i = 0; i < len; ++i) {
        out[i] = static_cast<std::int64_t>(r % p);
        r /= p;
    }
    return out;
}

// The unique delta_{i+1} with (a_{i+1} + delta_{i+1} p) - A_i in (0, p].
std::int64_t next_shift(std::int64_t A_prev, std::int64_t a_next, std::int64_t p) {
    return floor_div(A_prev - a_next, p) + 1;
}

// Pairs of residue classes (c0, c0 + 1): a = x_{if+c0}, b = x_{if+c0+1}.
void fix_pair(Row& x, int d, int f, int c0, std::int64_t p) {
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    auto a_of = [&](int i) { return x[i * f + c0]; };
    auto b_of = [&](int i) { return x[i * f + c0 + 1]; };
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        if (b_of(u) != b_of(v)) return b_of(u) > b_of(v);
        return a_of(u) > a_of(v);
    });
    std::vector<std::int64_t> delta(d, 0);
    for (int i = 0; i + 1 < d; ++i)
        delta[i + 1] = next_shift(a_of(order[i]) + delta[i] * p, a_of(order[i + 1]), p);
    for (int i = 0; i < d; ++i) {
        x[order[i] * f + c0] += delta[i] * p;
        x[order[i] * f + c0 + 1] -= delta[i];
    }
}

void case_even(Row& x, int d, int f, std::int64_t p) {
    for (int j0 = 0; 2 * j0 < f; ++j0) fix_pair(x, d, f, 2 * j0, p);
}

void case_odd(Digits& w, int d, int f, std::int64_t p) {
    const int L = d * f;
    // first rotation after which the pairs (x_{if+1}, x_{if+2}) are not all
    // (p-1, p-1) or (0, 0) with both kinds present
    int shift = -1;
    for (int s = 0; s < L && shift < 0; ++s) {
        bool top = false, bottom = false, other = false;
        for (int i = 0; i < d; ++i) {
            const auto b = w.x[(i * f + 1 + s) % L], c = w.x[(i * f + 2 + s) % L];
            if (b == p - 1 && c == p - 1)
                top = true;
            else if (b == 0 && c == 0)
                bottom = true;
            else
                other = true;
        }
        if (other || !(top && bottom)) shift = s;
    }
    if (shift < 0) throw std::logic_error("no admissible rotation");
    w.rotate(shift);
    Row& x = w.x;

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    auto a_of = [&](int i) { return x[i * f]; };
    auto b_of = [&](int i) { return x[i * f + 1]; };
    auto c_of = [&](int i) { return x[i * f + 2]; };
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        if (c_of(u) != c_of(v)) return c_of(u) > c_of(v);
        return b_of(u) > b_of(v);
    });
    std::vector<std::int64_t> delta(d, 0), eps(d, 0);
    for (int i = 0; i + 1 < d; ++i) {
        const int u = order[i], v = order[i + 1];
        delta[i + 1] = next_shift(a_of(u) + delta[i] * p, a_of(v), p);
        const std::int64_t B = b_of(u) + eps[i] * p;
        std::int64_t e1 = next_shift(B, b_of(v), p);
        // lambda = 1 is only allowed when a rises, otherwise take lambda = p + 1
        if (b_of(v) + e1 * p - B == 1 && a_of(v) <= a_of(u)) ++e1;
        eps[i + 1] = e1;
    }
    for (int i = 0; i < d; ++i) {
        const int u = order[i];
        x[u * f] += delta[i] * p;
        x[u * f + 1] += eps[i] * p - delta[i];
        x[u * f + 2] -= eps[i];
    }
    for (int c0 = 3; c0 + 1 < f; c0 += 2) fix_pair(x, d, f, c0, p);
}

void case_one(Digits& w, int d, std::int64_t p) {
    Row& x = w.x;
    std::int64_t lift = 0;  // constant added back at the end
    if (d % 2 == 0) {
        // divisible by (p^d - 1)/(p - 1) exactly when all digits agree
        if (std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v == x[0]; })) {
            lift = x[0];
            const int m = (d - 4) / 2;
            Row s{p, 2 * p - 1, p - 2, -1};
            for (int j = 2; j <= m + 1; ++j) {
                s.push_back(j * p);
                s.push_back(-j);
            }
            for (int j = 0; j < d; ++j) x[j] = s[j] + lift;
            return;
        }
    }
    if (d == 1) return;

    auto first_rotation = [&](auto pred) {
        for (int s = 0; s < d; ++s) {
            Row y(d);
            for (int j = 0; j < d; ++j) y[j] = x[(j + s) % d];
            if (pred(y)) return s;
        }
        throw std::logic_error("no admissible rotation");
    };

    if (d % 2 == 1) {
        const auto mx = *std::max_element(x.begin(), x.end());
        w.rotate(first_rotation([&](const Row& y) { return y[d - 1] == mx; }));
    } else {
        const auto mn = *std::min_element(x.begin(), x.end());
        for (auto& v : x) v -= mn;
        lift = mn;
        w.rotate(first_rotation([](const Row& y) { return y[1] == 0 && y[2 % y.size()] > 0; }));
        bool odd_nonzero = false;
        for (int i = 3; i < d; i += 2) odd_nonzero = odd_nonzero || x[i] != 0;
        if (odd_nonzero) {
            x[1] += p;  // (III)
            x[2] -= 1;
        } else {
            const auto mx = *std::max_element(x.begin(), x.end());
            w.rotate(first_rotation([&](const Row& y) {
                if (y[1] != mx) return false;
                for (int i = 0; i < d; i += 2)
                    if (y[i] != 0) return false;
                return true;
            }));  // (II)
        }
    }

    const int m = d / 2;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        if (x[2 * u + 1] != x[2 * v + 1]) return x[2 * u + 1] > x[2 * v + 1];
        return x[2 * u] > x[2 * v];
    });
    if (d % 2 == 0 && order[0] != 0) throw std::logic_error("leading pair is not (x_0, x_1)");
    std::vector<std::int64_t> delta(m, 0);
    if (m > 0) delta[0] = 1;
    for (int i = 0; i + 1 < m; ++i)
        delta[i + 1] = next_shift(x[2 * order[i]] + delta[i] * p, x[2 * order[i + 1]], p);
    for (int i = 0; i < m; ++i) {
        x[2 * order[i]] += delta[i] * p;
        x[2 * order[i] + 1] -= delta[i];
    }
    for (auto& v : x) v += lift;
}

std::vector<Row> chains_of(const Row& x, int f) {
    std::vector<Row> out(f);
    for (auto& h : out) h.reserve(x.size() / f);
    for (std::size_t i = 0; i < x.size(); ++i) out[i % f].push_back(x[i]);
    for (auto& h : out) std::sort(h.rbegin(), h.rend());
    return out;
}

}  // namespace

bool is_excluded_class(int d, int f, int p, const BigInt& N) {
    return d == 2 && f == 1 && mod_floor(N, BigInt(p + 1)) == 0;
}

DigitWitness construct(int d, int f, int p, const BigInt& N) {
    if (d < 1 || f < 1) throw InputError("d and f must be positive");
    if (!is_prime(p)) throw InputError("p must be prime");
    if (is_excluded_class(d, f, p, N))
        throw ExcludedClass("residue classes divisible by p+1 have no witness when d = 2, f = 1");
    const int L = d * f;
    const BigInt M = ipow(p, L) - 1;
    const BigInt Nr = N >= 0 && N < M ? N : mod_floor(N, M);

    Digits w{base_p_digits(Nr, p, L), std::vector<int>(L)};
    std::iota(w.pos.begin(), w.pos.end(), 0);
    if (f % 2 == 0)
        case_even(w.x, d, f, p);
    else if (f >= 3)
        case_odd(w, d, f, p);
    else
        case_one(w, d, p);

    DigitWitness out{d, f, p, w.restore(), {}};
    out.chains = chains_of(out.x, f);
    return out;
}

bool verify(const DigitWitness& w, const BigInt& N) {
    if (w.d < 1 || w.f < 1 || static_cast<int>(w.x.size()) != w.d * w.f) return false;
    if (w.chains != chains_of(w.x, w.f)) return false;
    for (const auto& h : w.chains)
        for (std::size_t i = 0; i + 1 < h.size(); ++i)
            if (h[i] - h[i + 1] <= 0 || h[i] - h[i + 1] > w.p) return false;
    const BigInt M = ipow(w.p, w.d * w.f) - 1;
    if (M < (BigInt(1) << 60)) {
        const auto m = static_cast<std::int64_t>(M);
        std::int64_t s = 0;
        for (int i = w.d * w.f - 1; i >= 0; --i)
            s = mod_floor(static_cast<std::int64_t>((static_cast<__int128>(s) * w.p + w.x[i]) % m), m);
        return s == static_cast<std::int64_t>(mod_floor(N, M));
    }
    BigInt s = 0;
    for (int i = w.d * w.f - 1; i >= 0; --i) s = s * w.p + w.x[i];
    return mod_floor(BigInt(s - N), M) == 0;
}

ChainResidues::ChainResidues(int d, int f, int p) {
    if (d < 1 || f < 1 || p < 2) throw InputError("bad digit parameters");
    const std::int64_t R64 = (ipow64(p, d * f) - 1) / (ipow64(p, f) - 1);
    if (R64 > (std::int64_t{1} << 28)) throw Unsupported("residue table too large");
    r_ = R64;
    // residues of one class placed at positions 0, f, ..., (d-1) f
    std::vector<bool> seen(static_cast<std::size_t>(R64), false);
    std::vector<std::int64_t> base;
    std::vector<std::int64_t> wt(d);
    for (int t = 0; t < d; ++t) wt[t] = ipow64(p, f * t) % R64;
    Row gaps(std::max(d - 1, 0), 1);
    for (;;) {
        Row h(d, 0);
        for (int k = d - 2; k >= 0; --k) h[k] = h[k + 1] + gaps[k];
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::int64_t s = 0;
            for (int t = 0; t < d; ++t) s = (s + h[perm[t]] * wt[t]) % R64;
            if (!seen[s]) {
                seen[s] = true;
                base.push_back(s);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::size_t k = 0;
        while (k < gaps.size() && ++gaps[k] > p) gaps[k++] = 1;
        if (k == gaps.size()) break;
    }
    // class c contributes p^c times the same residues
    std::vector<std::int64_t> reach{0};
    std::int64_t pc = 1;
    for (int c = 0; c < f; ++c, pc = pc * p % R64) {
        std::vector<bool> mark(static_cast<std::size_t>(R64), false);
        std::vector<std::int64_t> next;
        for (auto r : reach)
            for (auto s : base) {
                const auto v = (r + static_cast<std::int64_t>(static_cast<__int128>(s) * pc % R64)) % R64;
                if (!mark[v]) {
                    mark[v] = true;
                    next.push_back(v);
                }
            }
        reach = std::move(next);
    }
    hit_.assign(static_cast<std::size_t>(R64), false);
    for (auto r : reach) hit_[r] = true;
}

bool ChainResidues::reachable(const BigInt& N) const {
    return hit_[static_cast<std::size_t>(mod_floor(N, r_))];
}

bool brute_force_exists(int d, int f, int p, const BigInt& N) { return ChainResidues(d, f, p).reachable(N); }

namespace {

// Labelled weights of a crystalline character of G_{K_d} whose induction has
// inertial exponent M; index t*e + r for embedding r above sigma'_t.
Row irreducible_block(int d, const BigInt& M, const Context& ctx) {
    const int e = ctx.e, f = ctx.f, p = ctx.p, L = f * d;
    Row lam(static_cast<std::size_t>(e * L), 0);
    // embeddings other than the chosen one above each sigma carry {0, ..., d-1}
    for (int r = 1; r < e; ++r)
        for (int t = 0; t < L; ++t) lam[t * e + r] = d - 1 - t / f;
    auto rest = [&] {
        BigInt C = 0, pw = 1;
        for (int t = 0; t < L; ++t, pw *= p)
            for (int r = 1; r < e; ++r) C += pw * lam[t * e + r];
        return BigInt(M - C);
    };
    BigInt target = rest();
    if (is_excluded_class(d, f, p, target)) {
        if (e == 1) throw std::logic_error("imprimitive niveau-two piece");
        std::swap(lam[0 * e + 1], lam[1 * e + 1]);
        target = rest();
    }
    const auto w = construct(d, f, p, target);
    for (int t = 0; t < L; ++t) lam[t * e] = w.x[t];
    return lam;
}

}  // namespace

ObviousWitness obvious_witness(const TameType& t) {
    const Context& c = t.ctx;
    const int e = c.e, f = c.f, p = c.p;
    std::vector<ObviousBlock> blocks;
    std::vector<Row> ht(f);  // values at the chosen embedding above each sigma
    int dim = 0;
    for (const auto& pc : t.pieces) {
        const int d = pc.niveau, L = f * d;
        const BigInt M = ipow(p, L) - 1;
        // untwist by the cyclotomic character to the power dim
        const BigInt adj = mod_floor(BigInt(pc.exponent - BigInt(dim) * e * (M / (p - 1))), M);
        Row lam = irreducible_block(d, adj, c);
        for (auto& v : lam) v += dim;
        if (dim > 0) {
            Row y(f);
            BigInt Y = 0;
            for (int s = f - 1; s >= 0; --s) {
                std::int64_t h = lam[s * e];
                for (int t2 = s; t2 < L; t2 += f) h = std::min(h, lam[t2 * e]);
                y[s] = *std::max_element(ht[s].begin(), ht[s].end()) + 1 - h;
                Y = Y * p + y[s];
            }
            // x = y + digits, with sum p^s x_s divisible by p^f - 1
            const Row u = base_p_digits(mod_floor(BigInt(-Y), BigInt(ipow(p, f) - 1)), p, f);
            for (int t2 = 0; t2 < L; ++t2) lam[t2 * e] += y[t2 % f] + u[t2 % f];
        }
        for (int t2 = 0; t2 < L; ++t2) ht[t2 % f].push_back(lam[t2 * e]);
        blocks.push_back({d, std::move(lam)});
        dim += d;
    }
    if (dim != c.n) throw InputError("type niveaux do not add up to n");

    const Row et = eta(c.n);
    Matrix rows(f);
    for (int s = 0; s < f; ++s) {
        std::sort(ht[s].rbegin(), ht[s].rend());
        for (int i = 0; i < c.n; ++i) rows[s].push_back(ht[s][i] - et[i]);
    }
    HodgeType lift{c, Matrix(e * f, Row(c.n, 0))};
    for (int s = 0; s < f; ++s) lift.cols[s * e] = rows[s];
    return {canonicalize(rows, c), std::move(lift), std::move(blocks)};
}

bool verify_obvious_witness(const TameType& t, const ObviousWitness& w) {
    const Context& c = t.ctx;
    const int e = c.e, f = c.f, n = c.n;
    if (w.weight.ctx != c || w.lift.ctx != c) return false;
    if (static_cast<int>(w.lift.cols.size()) != e * f) return false;

    // the Hodge type lifts the weight: one column per sigma, the rest zero
    Matrix rows(f, Row(n, 0));
    for (int s = 0; s < f; ++s) {
        int used = 0;
        for (int r = 0; r < e; ++r) {
            const auto& col = w.lift.cols[s * e + r];
            if (static_cast<int>(col.size()) != n) return false;
            if (std::any_of(col.begin(), col.end(), [](std::int64_t v) { return v != 0; })) {
                rows[s] = col;
                ++used;
            }
        }
        if (used > 1) return false;
    }
    if (!is_restricted(rows, c) || canonicalize(rows, c) != w.weight) return false;

    // labelled weights of the blocks assemble to lambda + eta at every embedding
    int dim = 0;
    std::vector<Row> got(e * f);
    std::vector<TameType> parts;
    for (const auto& b : w.blocks) {
        if (b.d < 1 || static_cast<int>(b.lambda.size()) != e * f * b.d) return false;
        for (int t2 = 0; t2 < f * b.d; ++t2)
            for (int r = 0; r < e; ++r) got[(t2 % f) * e + r].push_back(b.lambda[t2 * e + r]);
        parts.push_back(reduce_induced(b.lambda, b.d, c));
        dim += b.d;
    }
    if (dim != n) return false;
    const Row et = eta(n);
    for (int k = 0; k < e * f; ++k) {
        Row want(n);
        for (int i = 0; i < n; ++i) want[i] = w.lift.cols[k][i] + et[i];
        std::sort(got[k].rbegin(), got[k].rend());
        if (got[k] != want) return false;
    }
    return equivalent(direct_sum(parts), t);
}

}  // namespace sw
