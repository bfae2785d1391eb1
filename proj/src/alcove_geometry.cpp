#include "sw/alcove_geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sw {

namespace {

int nrows(const DotWeight& l) { return static_cast<int>(l.rows.size()); }
int width(const DotWeight& l) { return l.rows.empty() ? 0 : static_cast<int>(l.rows[0].size()); }

std::int64_t row_sum(const Row& r) {
    std::int64_t s = 0;
    for (auto v : r) s += v;
    return s;
}

// Move lam by -k alpha_{ij} in one row.
DotWeight shifted(const DotWeight& lam, int r, int i, int j, std::int64_t k) {
    DotWeight out = lam;
    out.rows[r][i] -= k;
    out.rows[r][j] += k;
    return out;
}

// Visit every single-reflection down-step of v: s_{alpha,mp}.v with mp < <v+rho, alpha^vee>.
// The callback returns false to stop lowering m along that root.
template <class F>
void down_steps(const DotWeight& v, bool nonneg_only, F&& visit) {
    const int p = v.ctx.p, n = width(v);
    for (int r = 0; r < nrows(v); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::int64_t P = pairing(v, r, i, j);
                for (std::int64_t m = floor_div(P - 1, p);; --m) {
                    if (nonneg_only && m < 0) break;
                    if (!visit(shifted(v, r, i, j, P - m * p))) break;
                }
            }
}

// Partial sums of every row lie between those of lo (or the dominant floor) and hi.
bool partial_sums_between(const DotWeight& v, const DotWeight& hi) {
    const int n = width(v);
    for (int r = 0; r < nrows(v); ++r) {
        std::int64_t total = row_sum(hi.rows[r]);
        std::int64_t a = 0, b = 0;
        for (int i = 0; i + 1 < n; ++i) {
            a += v.rows[r][i];
            b += hi.rows[r][i];
            if (a > b) return false;
            // a dominant weight with this total has partial sums >= (i+1) total / n
            if (a * n < (i + 1) * total) return false;
        }
    }
    return true;
}

bool search_down(const DotWeight& lam, const DotWeight& mu, bool nonneg_only) {
    if (lam == mu) return true;
    if (!root_leq(lam, mu) || !same_linkage(lam, mu)) return false;
    std::set<DotWeight> seen{mu};
    std::vector<DotWeight> stack{mu};
    bool found = false;
    while (!stack.empty() && !found) {
        DotWeight v = std::move(stack.back());
        stack.pop_back();
        down_steps(v, nonneg_only, [&](DotWeight u) {
            if (found || !root_leq(lam, u)) return false;
            if (u == lam) {
                found = true;
                return false;
            }
            if (seen.insert(u).second) stack.push_back(std::move(u));
            return true;
        });
    }
    return found;
}

}  // namespace

DotWeight dot(const std::vector<Perm>& w, const DotWeight& lam) {
    const int n = width(lam);
    const Row rho = eta(n);
    DotWeight out = lam;
    for (int r = 0; r < nrows(lam); ++r) {
        for (int i = 0; i < n; ++i) out.rows[r][w[r][i]] = lam.rows[r][i] + rho[i];
        for (int i = 0; i < n; ++i) out.rows[r][i] -= rho[i];
    }
    return out;
}

DotWeight dot(const AffineReflection& s, const DotWeight& lam) {
    std::int64_t P = pairing(lam, s.row, s.i, s.j);
    return shifted(lam, s.row, s.i, s.j, P - s.m * lam.ctx.p);
}

std::int64_t pairing(const DotWeight& lam, int row, int i, int j) {
    return lam.rows[row][i] - lam.rows[row][j] + (j - i);
}

bool is_dominant(const DotWeight& lam) {
    for (const auto& r : lam.rows)
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            if (r[i] < r[i + 1]) return false;
    return true;
}

bool is_p_regular(const DotWeight& lam) {
    const int n = width(lam);
    for (int r = 0; r < nrows(lam); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mod_floor(pairing(lam, r, i, j), lam.ctx.p) == 0) return false;
    return true;
}

std::int64_t depth(const DotWeight& lam) {
    if (!is_p_regular(lam)) throw NotPRegular("weight lies on a wall");
    const int p = lam.ctx.p, n = width(lam);
    std::int64_t best = p;
    for (int r = 0; r < nrows(lam); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::int64_t x = mod_floor(pairing(lam, r, i, j), p);
                best = std::min({best, x, p - x});
            }
    return best;
}

std::int64_t alcove_index(const DotWeight& lam) {
    if (!is_p_regular(lam)) throw NotPRegular("weight lies on a wall");
    const int n = width(lam);
    std::int64_t d = 0;
    for (int r = 0; r < nrows(lam); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) d += floor_div(pairing(lam, r, i, j), lam.ctx.p);
    return d;
}

bool in_lowest_alcove(const DotWeight& lam) {
    const int n = width(lam);
    for (int r = 0; r < nrows(lam); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::int64_t P = pairing(lam, r, i, j);
                if (P <= 0 || P >= lam.ctx.p) return false;
            }
    return true;
}

bool same_linkage(const DotWeight& a, const DotWeight& b) {
    if (a.rows.size() != b.rows.size()) return false;
    const int n = width(a);
    const Row rho = eta(n);
    for (int r = 0; r < nrows(a); ++r) {
        if (row_sum(a.rows[r]) != row_sum(b.rows[r])) return false;
        Row x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = mod_floor(a.rows[r][i] + rho[i], a.ctx.p);
            y[i] = mod_floor(b.rows[r][i] + rho[i], a.ctx.p);
        }
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

bool root_leq(const DotWeight& a, const DotWeight& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (int r = 0; r < nrows(a); ++r) {
        std::int64_t s = 0;
        for (int i = 0; i < width(a); ++i) {
            s += b.rows[r][i] - a.rows[r][i];
            if (s < 0) return false;
        }
        if (s != 0) return false;
    }
    return true;
}

bool up(const DotWeight& lam, const DotWeight& mu) { return search_down(lam, mu, false); }

bool double_up(const DotWeight& lam, const DotWeight& mu) { return search_down(lam, mu, true); }

std::vector<DotWeight> dominant_predecessors(const DotWeight& lam) {
    std::set<DotWeight> seen{lam};
    std::vector<DotWeight> stack{lam};
    while (!stack.empty()) {
        DotWeight v = std::move(stack.back());
        stack.pop_back();
        down_steps(v, false, [&](DotWeight u) {
            if (!partial_sums_between(u, lam)) return false;
            if (seen.insert(u).second) stack.push_back(std::move(u));
            return true;
        });
    }
    std::vector<DotWeight> out;
    for (const auto& v : seen)
        if (is_dominant(v)) out.push_back(v);
    return out;
}

std::vector<DotWeight> dominant_predecessors_via_dominant(const DotWeight& lam) {
    std::set<DotWeight> seen{lam};
    std::vector<DotWeight> stack{lam};
    while (!stack.empty()) {
        DotWeight v = std::move(stack.back());
        stack.pop_back();
        down_steps(v, false, [&](DotWeight u) {
            if (!partial_sums_between(u, lam)) return false;
            if (is_dominant(u) && seen.insert(u).second) stack.push_back(std::move(u));
            return true;
        });
    }
    return {seen.begin(), seen.end()};
}

std::optional<std::vector<DotWeight>> yewang_chain(const DotWeight& from, const DotWeight& to) {
    if (from == to) return std::vector<DotWeight>{};
    if (!root_leq(from, to) || !same_linkage(from, to)) return std::nullopt;
    const int p = from.ctx.p, n = width(from);
    std::map<DotWeight, DotWeight> parent;
    std::deque<DotWeight> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
        DotWeight v = queue.front();
        queue.pop_front();
        const std::int64_t dv = alcove_index(v);
        for (int r = 0; r < nrows(v); ++r)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    std::int64_t P = pairing(v, r, i, j);
                    for (std::int64_t m = floor_div(P, p) + 1;; ++m) {
                        DotWeight u = shifted(v, r, i, j, P - m * p);
                        if (!root_leq(u, to)) break;
                        if (!is_dominant(u) || alcove_index(u) != dv + 1) continue;
                        if (!parent.emplace(u, v).second) continue;
                        if (u == to) {
                            std::vector<DotWeight> chain{u};
                            while (chain.back() != from) chain.push_back(parent.at(chain.back()));
                            std::reverse(chain.begin(), chain.end());
                            return chain;
                        }
                        queue.push_back(std::move(u));
                    }
                }
    }
    return std::nullopt;
}

bool x_mu_nu_membership(const DotWeight& lam, const DotWeight& mu, const DotWeight& nu) {
    const int p = lam.ctx.p, n = width(lam), f = nrows(lam);
    const auto preds = dominant_predecessors(mu);
    for (const auto& sigma : all_perm_tuples(n, f)) {
        std::vector<Perm> inv;
        for (const auto& s : sigma) inv.push_back(inverse(s));
        const DotWeight base = dot(inv, lam);
        for (const auto& m : preds) {
            DotWeight eps = base;
            bool ok = true;
            for (int r = 0; r < f && ok; ++r)
                for (int i = 0; i < n && ok; ++i) {
                    std::int64_t diff = base.rows[r][i] - m.rows[r][i];
                    if (mod_floor(diff, p) != 0) ok = false;
                    eps.rows[r][i] = diff / p;
                }
            if (!ok) continue;
            for (auto& r : eps.rows) std::sort(r.begin(), r.end(), std::greater<>());
            if (root_leq(eps, nu)) return true;
        }
    }
    return false;
}

std::vector<DotWeight> dominant_alcove_points(const Context& ctx, std::int64_t max_d) {
    const int n = ctx.n, p = ctx.p;
    const Row rho = eta(n);
    const std::int64_t bound = max_d + 2;
    // per-row dominant points of W_p . 0, keyed by d
    std::map<Row, std::int64_t> row_pts;
    Row g(n, 0);
    auto rec = [&](auto&& self, int i, std::int64_t s) -> void {
        if (i == n - 1) {
            g[i] = -s;
            if (g[i] < -bound || g[i] > bound) return;
            for (const auto& w : all_perms(n)) {
                Row x(n);
                for (int k = 0; k < n; ++k) x[w[k]] = rho[k];
                for (int k = 0; k < n; ++k) x[k] += p * g[k] - rho[k];
                DotWeight dw{ctx.with_n(n), {x}};
                if (!is_dominant(dw) || !is_p_regular(dw)) continue;
                std::int64_t d = alcove_index(dw);
                if (d <= max_d) row_pts.emplace(x, d);
            }
            return;
        }
        for (std::int64_t v = -bound; v <= bound; ++v) {
            g[i] = v;
            self(self, i + 1, s + v);
        }
    };
    rec(rec, 0, 0);
    std::vector<DotWeight> out;
    Matrix cur;
    auto combine = [&](auto&& self, int r, std::int64_t d) -> void {
        if (r == ctx.f) {
            out.push_back(DotWeight{ctx, cur});
            return;
        }
        for (const auto& [x, dx] : row_pts) {
            if (d + dx > max_d) continue;
            cur.push_back(x);
            self(self, r + 1, d + dx);
            cur.pop_back();
        }
    };
    combine(combine, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sw
