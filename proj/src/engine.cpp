#include "sw/engine.hpp"

#include "sw/alcove_geometry.hpp"
#include "sw/jordan_holder.hpp"
#include "sw/parallel.hpp"
#include "sw/weight_sets.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sw {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;
using PerBase = std::vector<std::vector<Pair>>;

void sort_unique(IdList& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rows a + eta + sum_r eta o pi_r over multisets of e - 1 permutations.
std::vector<Row> ramified_shifts(const Row& a, int e) {
    const int n = static_cast<int>(a.size());
    const Row eta_n = eta(n);
    std::set<Row> acc;
    {
        Row b = a;
        for (int i = 0; i < n; ++i) b[i] += eta_n[i];
        acc.insert(b);
    }
    const auto perms = all_perms(n);
    for (int r = 1; r < e; ++r) {
        std::set<Row> next;
        for (const auto& b : acc)
            for (const auto& pi : perms) {
                Row c = b;
                for (int i = 0; i < n; ++i) c[i] += eta_n[pi[i]];
                next.insert(c);
            }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

// Compositions of n into parts listed in non-increasing order, at least two parts.
std::vector<std::vector<int>> proper_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxp) -> void {
        if (left == 0) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::vector<int>> block_labelings(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    std::vector<std::vector<int>> out;
    std::vector<int> lab(n), left = sizes;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(lab);
            return;
        }
        for (std::size_t j = 0; j < left.size(); ++j) {
            if (left[j] == 0) continue;
            --left[j];
            lab[i] = static_cast<int>(j);
            self(self, i + 1);
            ++left[j];
        }
    };
    rec(rec, 0);
    return out;
}

std::mutex g_registry_mu;
std::map<Context, std::unique_ptr<Engine>>& registry() {
    static std::map<Context, std::unique_ptr<Engine>> r;
    return r;
}

}  // namespace

const Engine& Engine::get(const Context& ctx) {
    ctx.validate();
    std::lock_guard<std::mutex> lk(g_registry_mu);
    auto& r = registry();
    auto it = r.find(ctx);
    if (it == r.end()) it = r.emplace(ctx, std::unique_ptr<Engine>(new Engine(ctx))).first;
    return *it->second;
}

Engine::Engine(const Context& ctx) : ctx_(ctx), index_(ctx) {}

const std::vector<TameType>& Engine::types() const {
    std::call_once(types_once_, [this] { types_ = enumerate_types(ctx_); });
    return types_;
}

std::size_t Engine::type_id(const TameType& t) const {
    const auto& ts = types();
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.end() || !(*it == t)) throw InputError("type is not canonical for " + ctx_.str());
    return static_cast<std::size_t>(it - ts.begin());
}

std::size_t Engine::base_count() const { return index_.size() / static_cast<std::size_t>(ctx_.q() - 1); }

std::size_t Engine::twist_index(std::size_t idx, std::int64_t c) const {
    const auto q1 = static_cast<std::size_t>(ctx_.q() - 1);
    return (idx % q1 + static_cast<std::size_t>(mod_floor(c, ctx_.q() - 1))) % q1 + idx / q1 * q1;
}

const std::vector<IdList>& Engine::twist_table() const {
    std::call_once(twist_once_, [this] {
        const auto& ts = types();
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        IdList one(ts.size());
        parallel_for(ts.size(), default_jobs(), [&](std::size_t i, int) {
            one[i] = static_cast<std::uint32_t>(type_id(twist_fundamental(ts[i], 1)));
        });
        tw_.assign(q1, IdList(ts.size()));
        for (std::size_t i = 0; i < ts.size(); ++i) tw_[0][i] = static_cast<std::uint32_t>(i);
        for (std::size_t c = 1; c < q1; ++c)
            for (std::size_t i = 0; i < ts.size(); ++i) tw_[c][i] = one[tw_[c - 1][i]];
    });
    return tw_;
}

// Spreads (type, weight) pairs found for the base weights (last entry of the
// first row zero) over all twists by omega_{sigma_0}^c.
std::vector<IdList> Engine::expand_types(const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& per_base) const {
    const auto& tw = twist_table();
    std::vector<IdList> out(types().size());
    for (const auto& v : per_base)
        for (std::size_t c = 0; c < tw.size(); ++c)
            for (const auto& [t, w] : v) out[tw[c][t]].push_back(static_cast<std::uint32_t>(twist_index(w, c)));
    for (auto& l : out) sort_unique(l);
    return out;
}

const std::vector<IdList>& Engine::obv() const {
    std::call_once(obv_once_, [this] {
        const auto tuples = all_perm_tuples(ctx_.n, ctx_.f);
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            const SerreWeight a = index_.at(widx);
            std::vector<std::vector<Row>> rows;
            for (const auto& r : a.rows) rows.push_back(ramified_shifts(r, ctx_.e));
            std::set<std::uint32_t> found;
            Matrix b(ctx_.f);
            auto rec = [&](auto&& self, int s) -> void {
                if (s == ctx_.f) {
                    for (const auto& w : tuples) found.insert(static_cast<std::uint32_t>(type_id(tau_from_pair(w, b, ctx_))));
                    return;
                }
                for (const auto& r : rows[s]) {
                    b[s] = r;
                    self(self, s + 1);
                }
            };
            rec(rec, 0);
            for (auto t : found) per[g].emplace_back(t, static_cast<std::uint32_t>(widx));
        });
        obv_ = expand_types(per);
    });
    return obv_;
}

const std::vector<IdList>& Engine::closure_edges() const {
    std::call_once(edges_once_, [this] {
        if (ctx_.n > 3) throw Unsupported("Jordan-Holder factors are only available for n <= 3");
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            std::set<std::uint32_t> hit;
            for (const auto& lam : lifts_of(index_.at(widx)))
                for (const auto& [b, m] : jh_L_lambda(lam).entries) hit.insert(static_cast<std::uint32_t>(index_.index_of(b)));
            for (auto b : hit) per[g].emplace_back(b, static_cast<std::uint32_t>(widx));
        });
        edges_.assign(index_.size(), {});
        for (const auto& v : per)
            for (std::size_t c = 0; c < q1; ++c)
                for (const auto& [b, a] : v) edges_[twist_index(b, c)].push_back(static_cast<std::uint32_t>(twist_index(a, c)));
        for (auto& l : edges_) sort_unique(l);
    });
    return edges_;
}

IdList Engine::closure(const IdList& seed) const {
    const auto& edges = closure_edges();
    std::vector<char> in(index_.size(), 0);
    IdList queue;
    for (auto x : seed)
        if (!in[x]) {
            in[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto a : edges[queue[k]])
            if (!in[a]) {
                in[a] = 1;
                queue.push_back(a);
            }
    sort_unique(queue);
    return queue;
}

const std::vector<IdList>& Engine::r2() const {
    std::call_once(r2_once_, [this] {
        if (ctx_.n > 3) throw Unsupported("explicit weights need Jordan-Holder factors, n <= 3");
        const int n = ctx_.n, E = ctx_.e * ctx_.f;
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        const Row eta_n = eta(n);
        struct Shape {
            std::vector<int> sizes;
            std::vector<std::vector<int>> labs;
        };
        std::vector<Shape> shapes;
        for (auto& sz : proper_partitions(n)) shapes.push_back({sz, block_labelings(sz)});
        // smaller engines are finished before the parallel loop starts
        std::map<int, const Engine*> sub;
        for (int m = 1; m < n; ++m) {
            sub[m] = &Engine::get(ctx_.with_n(m));
            sub[m]->expl_types_of_weight();
        }
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            std::map<HodgeType, IdList> sub_types;  // block Hodge type -> sub-type ids
            std::map<std::vector<std::pair<int, std::uint32_t>>, std::uint32_t> sums;
            std::set<std::uint32_t> found;
            auto types_for = [&](const HodgeType& h) -> const IdList& {
                auto it = sub_types.find(h);
                if (it != sub_types.end()) return it->second;
                const Engine& se = *sub[h.ctx.n];
                const auto& inv = se.expl_types_of_weight();
                IdList ts;
                for (const auto& [b, m] : jh_L_lambda(h).entries) {
                    const auto& l = inv[se.index().index_of(b)];
                    ts.insert(ts.end(), l.begin(), l.end());
                }
                sort_unique(ts);
                return sub_types.emplace(h, std::move(ts)).first->second;
            };
            for (const auto& lam : lifts_of(index_.at(widx))) {
                for (const auto& sh : shapes) {
                    const int r = static_cast<int>(sh.sizes.size());
                    std::vector<int> choice(E, 0);
                    for (;;) {
                        std::vector<const IdList*> opts;
                        bool empty = false;
                        for (int j = 0; j < r && !empty; ++j) {
                            const int m = sh.sizes[j];
                            HodgeType hj{ctx_.with_n(m), Matrix(E)};
                            const Row eta_m = eta(m);
                            for (int col = 0; col < E; ++col) {
                                const auto& lab = sh.labs[choice[col]];
                                for (int i = 0; i < n; ++i)
                                    if (lab[i] == j) hj.cols[col].push_back(lam.cols[col][i] + eta_n[i]);
                                for (int i = 0; i < m; ++i) hj.cols[col][i] -= eta_m[i];
                            }
                            opts.push_back(&types_for(hj));
                            empty = opts.back()->empty();
                        }
                        if (!empty) {
                            std::vector<std::size_t> pos(r, 0);
                            for (;;) {
                                std::vector<std::pair<int, std::uint32_t>> key;
                                for (int j = 0; j < r; ++j) key.emplace_back(sh.sizes[j], (*opts[j])[pos[j]]);
                                std::sort(key.begin(), key.end());
                                auto it = sums.find(key);
                                if (it == sums.end()) {
                                    std::vector<TameType> parts;
                                    for (const auto& [m, id] : key) parts.push_back(sub[m]->types()[id]);
                                    it = sums.emplace(key, static_cast<std::uint32_t>(type_id(direct_sum(parts)))).first;
                                }
                                found.insert(it->second);
                                int j = 0;
                                while (j < r && ++pos[j] == opts[j]->size()) pos[j++] = 0;
                                if (j == r) break;
                            }
                        }
                        int col = 0;
                        while (col < E && ++choice[col] == static_cast<int>(sh.labs.size())) choice[col++] = 0;
                        if (col == E) break;
                    }
                }
            }
            for (auto t : found) per[g].emplace_back(t, static_cast<std::uint32_t>(widx));
        });
        r2_ = expand_types(per);
    });
    return r2_;
}

const std::vector<IdList>& Engine::expl() const {
    std::call_once(expl_once_, [this] {
        if (ctx_.n > 3) throw Unsupported("explicit weights need Jordan-Holder factors, n <= 3");
        const auto& o = obv();
        const auto& r = r2();
        closure_edges();
        expl_.assign(types().size(), {});
        parallel_for(expl_.size(), default_jobs(), [&](std::size_t t, int) {
            IdList seed = o[t];
            seed.insert(seed.end(), r[t].begin(), r[t].end());
            expl_[t] = closure(seed);
        });
    });
    return expl_;
}

const std::vector<IdList>& Engine::expl_types_of_weight() const {
    std::call_once(inv_once_, [this] {
        const auto& ex = expl();
        inv_.assign(index_.size(), {});
        for (std::size_t t = 0; t < ex.size(); ++t)
            for (auto a : ex[t]) inv_[a].push_back(static_cast<std::uint32_t>(t));
    });
    return inv_;
}

const std::vector<IdList>& Engine::wq_gl3() const {
    std::call_once(wq_once_, [this] {
        if (ctx_.n != 3 || ctx_.f != 1 || ctx_.e != 1) throw Unsupported("W? for GL3 needs n = 3 and K = Q_p");
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        const auto perms = all_perms(3);
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            const Matrix mu = index_.at(widx).rows;
            std::set<std::uint32_t> ts;
            for (const auto& w : perms)
                if (is_good({w}, mu, ctx_)) ts.insert(static_cast<std::uint32_t>(type_id(tau_from_pair({w}, mu, ctx_))));
            if (ts.empty()) return;
            for (const auto& a : a_set(mu[0], ctx_))
                for (auto t : ts) per[g].emplace_back(t, static_cast<std::uint32_t>(index_.index_of(a)));
        });
        wq_ = expand_types(per);
    });
    return wq_;
}

const std::vector<IdList>& Engine::wq_generic() const {
    std::call_once(wqg_once_, [this] {
        if (ctx_.e != 1) throw Unsupported("the generic W? description needs K/Q_p unramified");
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        const auto tuples = all_perm_tuples(ctx_.n, ctx_.f);
        const Row eta_n = eta(ctx_.n);
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            DotWeight lam{ctx_, index_.at(widx).rows};
            std::set<std::uint32_t> ts;
            for (const auto& lp : dominant_predecessors(lam)) {
                Matrix b = lp.rows;
                for (auto& r : b)
                    for (int i = 0; i < ctx_.n; ++i) r[i] += eta_n[i];
                for (const auto& w : tuples) ts.insert(static_cast<std::uint32_t>(type_id(tau_from_pair(w, b, ctx_))));
            }
            for (auto t : ts) per[g].emplace_back(t, static_cast<std::uint32_t>(widx));
        });
        wqg_ = expand_types(per);
    });
    return wqg_;
}

const std::vector<IdList>& Engine::adp() const {
    std::call_once(adp_once_, [this] {
        if (ctx_.f != 1 || ctx_.e != 1) throw Unsupported("ADP weights are defined for K = Q_p");
        const int n = ctx_.n, p = ctx_.p;
        const std::size_t q1 = static_cast<std::size_t>(ctx_.q() - 1);
        const Row eta_n = eta(n);
        // every ordered composition of n, including the trivial one
        std::vector<std::vector<int>> shapes;
        {
            std::vector<int> cur;
            auto rec = [&](auto&& self, int left) -> void {
                if (left == 0) {
                    shapes.push_back(cur);
                    return;
                }
                for (int k = 1; k <= left; ++k) {
                    cur.push_back(k);
                    self(self, left - k);
                    cur.pop_back();
                }
            };
            rec(rec, n);
        }
        PerBase per(base_count());
        parallel_for(per.size(), default_jobs(), [&](std::size_t g, int) {
            const std::size_t widx = g * q1;
            const Row lam = index_.at(widx).rows[0];
            std::set<std::uint32_t> found;
            for (const auto& sizes : shapes)
                for (const auto& lab : block_labelings(sizes)) {
                    std::vector<std::vector<TameType>> options;
                    for (std::size_t j = 0; j < sizes.size(); ++j) {
                        const int m = sizes[j];
                        const Context cm = ctx_.with_n(m);
                        const Row eta_m = eta(m);
                        Row blk;
                        for (int i = 0; i < n; ++i)
                            if (lab[i] == static_cast<int>(j)) blk.push_back(lam[i] + eta_n[i]);
                        for (int i = 0; i < m; ++i) blk[i] -= eta_m[i];
                        // mu ≡ blk mod (p-1), restricted, spread at most p-1, last entry fixed
                        std::set<TameType> opts;
                        Row mu(m);
                        mu[m - 1] = blk[m - 1];
                        auto rec = [&](auto&& self, int i) -> void {
                            if (i < 0) {
                                if (mu[0] - mu[m - 1] > p - 1) return;
                                Row me = mu;
                                for (int k = 0; k < m; ++k) me[k] += eta_m[k];
                                for (const auto& w : all_perms(m)) {
                                    if (!is_full_cycle(w)) continue;
                                    auto t = tau_from_pair({w}, {me}, cm);
                                    if (t.pieces.size() == 1) opts.insert(std::move(t));
                                }
                                return;
                            }
                            const std::int64_t first = mu[i + 1] + mod_floor(blk[i] - mu[i + 1], p - 1);
                            for (std::int64_t v = first; v <= mu[i + 1] + p - 1; v += p - 1) {
                                mu[i] = v;
                                self(self, i - 1);
                            }
                        };
                        rec(rec, m - 2);
                        options.emplace_back(opts.begin(), opts.end());
                    }
                    std::vector<TameType> acc;
                    auto prod = [&](auto&& self, std::size_t j) -> void {
                        if (j == options.size()) {
                            found.insert(static_cast<std::uint32_t>(type_id(direct_sum(acc))));
                            return;
                        }
                        for (const auto& t : options[j]) {
                            acc.push_back(t);
                            self(self, j + 1);
                            acc.pop_back();
                        }
                    };
                    prod(prod, 0);
                }
            for (auto t : found) per[g].emplace_back(t, static_cast<std::uint32_t>(widx));
        });
        adp_ = expand_types(per);
    });
    return adp_;
}

const std::vector<std::int64_t>& Engine::generic_depth() const {
    std::call_once(gen_once_, [this] {
        const int n = ctx_.n, p = ctx_.p, f = ctx_.f;
        const auto& tw = twist_table();
        const auto tuples = all_perm_tuples(n, f);
        // rows of the lowest alcove with last entry 0: gaps sum to at most p - n
        std::vector<Row> rows;
        {
            Row r(n, 0);
            auto rec = [&](auto&& self, int i, std::int64_t budget) -> void {
                if (i < 0) {
                    rows.push_back(r);
                    return;
                }
                for (std::int64_t g = 0; g <= budget; ++g) {
                    r[i] = r[i + 1] + g;
                    self(self, i - 1, budget - g);
                }
            };
            if (n == 1)
                rows.push_back(r);
            else
                rec(rec, n - 2, p - n);
        }
        std::vector<std::int64_t> base(types().size(), -1);
        if (rows.empty()) {
            gen_ = base;
            return;
        }
        std::vector<std::size_t> choice(f, 0);
        for (;;) {
            Matrix mu(f);
            for (int j = 0; j < f; ++j) mu[j] = rows[choice[j]];
            const std::int64_t d = depth(DotWeight{ctx_, mu});
            for (const auto& w : tuples) {
                auto t = type_id(tau_from_pair(w, mu, ctx_));
                base[t] = std::max(base[t], d);
            }
            int j = 0;
            while (j < f && ++choice[j] == rows.size()) choice[j++] = 0;
            if (j == f) break;
        }
        gen_.assign(base.size(), -1);
        for (std::size_t c = 0; c < tw.size(); ++c)
            for (std::size_t t = 0; t < base.size(); ++t)
                if (base[t] >= 0) gen_[tw[c][t]] = std::max(gen_[tw[c][t]], base[t]);
    });
    return gen_;
}

}  // namespace sw
