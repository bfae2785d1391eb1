#include "sw/scan.hpp"

#include "sw/alcove_geometry.hpp"
#include "sw/corpus.hpp"
#include "sw/digit_witness.hpp"
#include "sw/engine.hpp"
#include "sw/jordan_holder.hpp"
#include "sw/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace sw {

namespace {

constexpr std::size_t kKeep = 50;  // counterexamples kept in the report
constexpr std::size_t kChunk = 2048;

// Rough count of tau evaluations behind the exhaustive W_obv table.
constexpr double kObvTableBudget = 2e6;

struct Emitter {
    ScanReport& rep;
    const CounterexampleSink& sink;

    void add(Json cx) {
        ++rep.violations;
        if (sink) sink(cx);
        if (rep.counterexamples.size() < kKeep) rep.counterexamples.push_back(std::move(cx));
    }
};

// Runs check(i) for i in [0, n) chunk by chunk; whatever order the workers
// finish in, violations leave in index order.
void scan_items(std::size_t n, int jobs, const std::function<std::optional<Json>(std::size_t)>& check,
                Emitter& em) {
    for (std::size_t lo = 0; lo < n; lo += kChunk) {
        const std::size_t hi = std::min(n, lo + kChunk);
        std::vector<std::optional<Json>> out(hi - lo);
        parallel_for(hi - lo, jobs, [&](std::size_t k, int) { out[k] = check(lo + k); });
        for (auto& o : out)
            if (o) em.add(std::move(*o));
        em.rep.checked += hi - lo;
    }
}

Json ids_json(const IdList& ids, const Engine& en) {
    Json out = Json::array();
    WeightSet s;
    for (auto i : ids) s.insert(en.index().at(i));
    for (const auto& a : s) out.push_back(a.rows);
    return out;
}

IdList minus(const IdList& a, const IdList& b) {
    IdList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset(const IdList& a, const IdList& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Json diff_json(const char* name_a, const IdList& a, const char* name_b, const IdList& b, const Engine& en) {
    return Json{{std::string("only_") + name_a, ids_json(minus(a, b), en)},
                {std::string("only_") + name_b, ids_json(minus(b, a), en)}};
}

Json violation(const std::string& check, const Context& c) {
    return Json{{"check", check}, {"ctx", context_json(c)}};
}

IdList map_ids(const IdList& ids, const std::vector<std::uint32_t>& m) {
    IdList out;
    out.reserve(ids.size());
    for (auto i : ids) out.push_back(m[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

void require_ctx(bool ok, const std::string& check, const std::string& what) {
    if (!ok) throw Unsupported("scan " + check + " needs " + what);
}

std::string pkey(int p) { return "p=" + std::to_string(p); }

// ---------------------------------------------------------------------------

void scan_gl3_comparison(int p, int jobs, Emitter& em) {
    const Context c{p, 1, 1, 3};
    const Engine& en = Engine::get(c);
    const auto& expl = en.expl();
    const auto& wq = en.wq_gl3();
    std::vector<char> reg(en.index().size());
    for (std::size_t i = 0; i < reg.size(); ++i) reg[i] = is_regular(en.index().at(i));
    scan_items(en.types().size(), jobs, [&](std::size_t t) -> std::optional<Json> {
        IdList r;
        for (auto i : expl[t])
            if (reg[i]) r.push_back(i);
        if (r == wq[t]) return std::nullopt;
        auto v = violation("gl3-comparison", c);
        v["type"] = type_json(en.types()[t]);
        v["difference"] = diff_json("w_expl_regular", r, "w_q", wq[t], en);
        return v;
    }, em);
    em.rep.info[pkey(p)] = Json{{"types", en.types().size()}};
}

void scan_main_result(int p, const ScanSpec& s, std::int64_t delta, int jobs, Emitter& em) {
    require_ctx(s.e == 1 && s.n <= 3, "main-result", "e = 1 and n <= 3");
    const Context c{p, s.f, 1, s.n};
    const Engine& en = Engine::get(c);
    const auto& expl = en.expl();
    const auto& wqg = en.wq_generic();
    const auto& obv = en.obv();
    const auto& depth = en.generic_depth();
    en.closure_edges();
    const std::size_t nt = en.types().size();
    std::vector<char> holds(nt, 1);
    scan_items(nt, jobs, [&](std::size_t t) -> std::optional<Json> {
        const IdList cl = en.closure(obv[t]);
        holds[t] = wqg[t] == expl[t] && cl == expl[t];
        if (holds[t] || depth[t] <= delta) return std::nullopt;
        auto v = violation("main-result", c);
        v["type"] = type_json(en.types()[t]);
        v["genericity"] = depth[t];
        v["w_q_vs_w_expl"] = diff_json("w_q", wqg[t], "w_expl", expl[t], en);
        v["closure_vs_w_expl"] = diff_json("closure", cl, "w_expl", expl[t], en);
        return v;
    }, em);
    std::int64_t worst = -1;
    std::size_t generic = 0, failing = 0;
    for (std::size_t t = 0; t < nt; ++t) {
        generic += depth[t] > delta;
        if (!holds[t]) {
            ++failing;
            worst = std::max(worst, depth[t]);
        }
    }
    // the identity holds for every type of genericity > minimal_delta
    em.rep.info[pkey(p)] = Json{{"types", nt},
                                {"delta", delta},
                                {"generic_types", generic},
                                {"failing_types_any_genericity", failing},
                                {"minimal_delta", worst}};
}

void scan_adp_subset(int p, std::int64_t delta, int jobs, Emitter& em) {
    const Context c{p, 1, 1, 3};
    const Engine& en = Engine::get(c);
    const auto& expl = en.expl();
    const auto& adp = en.adp();
    const auto& depth = en.generic_depth();
    const std::size_t nt = en.types().size();
    std::vector<char> inside(nt, 1);
    scan_items(nt, jobs, [&](std::size_t t) -> std::optional<Json> {
        inside[t] = subset(adp[t], expl[t]);
        if (inside[t] || depth[t] <= delta) return std::nullopt;
        auto v = violation("adp-subset", c);
        v["type"] = type_json(en.types()[t]);
        v["genericity"] = depth[t];
        v["adp_not_in_w_expl"] = ids_json(minus(adp[t], expl[t]), en);
        return v;
    }, em);
    std::size_t generic = 0, outside = 0;
    for (std::size_t t = 0; t < nt; ++t) {
        generic += depth[t] > delta;
        outside += !inside[t];
    }
    em.rep.info[pkey(p)] =
        Json{{"types", nt}, {"delta", delta}, {"generic_types", generic}, {"not_subset_any_genericity", outside}};
}

void scan_nonempty(int p, const ScanSpec& s, int jobs, Emitter& em) {
    require_ctx(s.n <= 4, "nonempty", "n <= 4");
    const Context c{p, s.f, s.e, s.n};
    c.validate();
    const double cost = static_cast<double>(ipow64(p, s.f * (s.n - 1))) *
                        std::pow(static_cast<double>(factorial(s.n)), s.f * s.e);
    const bool table = cost <= kObvTableBudget;
    const Engine* en = table ? &Engine::get(c) : nullptr;
    const std::vector<TameType> own = table ? std::vector<TameType>{} : enumerate_types(c);
    const auto& types = table ? en->types() : own;
    if (table) en->obv();
    scan_items(types.size(), jobs, [&](std::size_t t) -> std::optional<Json> {
        std::string reason;
        try {
            const auto w = obvious_witness(types[t]);
            if (!verify_obvious_witness(types[t], w))
                reason = "constructed witness fails verification";
            else if (table) {
                const auto& l = en->obv()[t];
                if (l.empty())
                    reason = "obvious weight table is empty";
                else if (!std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(en->index().index_of(w.weight))))
                    reason = "witness weight missing from the obvious weight table";
            }
        } catch (const Error& e) {
            reason = e.what();
        }
        if (reason.empty()) return std::nullopt;
        auto v = violation("nonempty", c);
        v["type"] = type_json(types[t]);
        v["reason"] = reason;
        return v;
    }, em);
    auto& info = em.rep.info[pkey(p)];
    info[c.str()] = Json{{"types", types.size()}, {"mode", table ? "table+witness" : "witness"}};
}

void scan_yewang(int p, const ScanSpec& s, int jobs, Emitter& em) {
    const Context c{p, s.f, 1, s.n};
    c.validate();
    const auto pts = dominant_alcove_points(c, s.max_d);
    std::size_t related = 0;
    std::vector<std::size_t> rel(pts.size(), 0);
    const std::size_t before = em.rep.checked;
    scan_items(pts.size(), jobs, [&](std::size_t i) -> std::optional<Json> {
        Json bad = Json::array();
        const auto& a = pts[i];
        for (const auto& b : pts) {
            const bool u = up(a, b);
            std::string reason;
            if (u != double_up(a, b)) reason = "up and double up disagree";
            if (u && a != b) {
                ++rel[i];
                const auto ch = yewang_chain(a, b);
                if (!ch || ch->empty() || ch->front() != a || ch->back() != b)
                    reason = "no dominant chain";
                else
                    for (std::size_t k = 1; k < ch->size() && reason.empty(); ++k) {
                        const auto& x = (*ch)[k - 1];
                        const auto& y = (*ch)[k];
                        if (!is_dominant(y) || alcove_index(y) != alcove_index(x) + 1 || !up(x, y))
                            reason = "chain step is not a dominant unit up-step";
                    }
            }
            if (!reason.empty()) bad.push_back(Json{{"from", a.rows}, {"to", b.rows}, {"reason", reason}});
        }
        if (bad.empty()) return std::nullopt;
        auto v = violation("yewang", c);
        v["pairs"] = bad;
        return v;
    }, em);
    for (auto r : rel) related += r;
    em.rep.checked = before + pts.size() * pts.size();
    em.rep.info[pkey(p)] = Json{{"points", pts.size()}, {"max_d", s.max_d}, {"related_pairs", related}};
}

void scan_tables(int p, Emitter& em) {
    const auto rep = verify_irregular_tables(p);
    for (const auto& m : rep.mismatches)
        em.add(Json{{"check", "tables"}, {"p", p}, {"where", m.where}, {"detail", m.detail}});
    em.rep.checked += rep.checked;
    em.rep.info[pkey(p)] = Json{{"instances", rep.checked}};
}

void scan_shift_report(int p, const ScanSpec& s, Emitter& em) {
    require_ctx(s.n <= 3, "shift-report", "n <= 3");
    const Context c{p, s.f, s.e, s.n};
    const Engine& en = Engine::get(c);
    const auto& expl = en.expl();
    std::size_t closed = 0, open_red = 0, open_irr = 0, missing = 0;
    Json examples = Json::array();
    for (std::size_t t = 0; t < en.types().size(); ++t) {
        WeightSet w;
        for (auto i : expl[t]) w.insert(en.index().at(i));
        const auto rep = is_shift_closed(w);
        if (rep.closed()) {
            ++closed;
            continue;
        }
        (en.types()[t].pieces.size() == 1 ? open_irr : open_red)++;
        for (const auto& e : rep.entries) {
            if (e.member) continue;
            ++missing;
            if (examples.size() < 20)
                examples.push_back(Json{{"type", type_json(en.types()[t])},
                                        {"weight", e.weight.rows},
                                        {"i0", e.i0},
                                        {"shifted", e.shifted.rows}});
        }
    }
    em.rep.checked += en.types().size();
    // reporting only: an open set is not a violation
    em.rep.info[pkey(p)] = Json{{"types", en.types().size()},
                                {"closed", closed},
                                {"open_reducible", open_red},
                                {"open_irreducible", open_irr},
                                {"missing_shifts", missing},
                                {"examples", examples}};
}

void scan_digits(int p, const ScanSpec& s, int jobs, Emitter& em) {
    Json info = Json::object();
    for (int f = 1; f <= s.f; ++f)
        for (int d = 1; d <= s.n; ++d) {
            const std::int64_t M = ipow64(p, d * f) - 1;
            const ChainResidues cr(d, f, p);
            std::size_t excluded = 0;
            std::vector<char> ex(static_cast<std::size_t>(M), 0);
            scan_items(static_cast<std::size_t>(M), jobs, [&](std::size_t i) -> std::optional<Json> {
                const auto N = static_cast<std::int64_t>(i);
                std::string reason;
                const bool excl = is_excluded_class(d, f, p, N);
                ex[i] = excl;
                if (cr.reachable(N) == excl) reason = "residue oracle disagrees with the excluded classes";
                if (excl) {
                    try {
                        construct(d, f, p, N);
                        reason = "excluded class produced a witness";
                    } catch (const ExcludedClass&) {
                    }
                } else if (!verify(construct(d, f, p, N), N)) {
                    reason = "constructed digits fail verification";
                }
                if (reason.empty()) return std::nullopt;
                return Json{{"check", "digits"}, {"d", d}, {"f", f}, {"p", p}, {"N", N}, {"reason", reason}};
            }, em);
            for (char x : ex) excluded += x;
            info["d=" + std::to_string(d) + " f=" + std::to_string(f)] = Json{{"classes", M}, {"excluded", excluded}};
        }
    em.rep.info[pkey(p)] = info;
}

// --- structural properties -------------------------------------------------

Json prop_violation(const Context& c, const std::string& prop, Json detail) {
    auto v = violation("structural", c);
    v["property"] = prop;
    v["detail"] = std::move(detail);
    return v;
}

void structural_weights(const Context& c, const Engine& en, int jobs, Emitter& em) {
    scan_items(en.index().size(), jobs, [&](std::size_t i) -> std::optional<Json> {
        const auto a = en.index().at(i);
        if (canonicalize(a.rows, c) != a) return prop_violation(c, "canonicalize idempotence", a.rows);
        if (dual_weight(dual_weight(a)) != a) return prop_violation(c, "dual involution on weights", a.rows);
        return std::nullopt;
    }, em);
}

void structural_types(const Context& c, const Engine& en, int jobs, Emitter& em) {
    const std::size_t nw = en.index().size();
    std::vector<std::uint32_t> dual_of(nw), twist_of(nw);
    for (std::size_t i = 0; i < nw; ++i) {
        const auto a = en.index().at(i);
        dual_of[i] = static_cast<std::uint32_t>(en.index().index_of(dual_weight(a)));
        twist_of[i] = static_cast<std::uint32_t>(en.index().index_of(twist(a, 1)));
    }
    const std::int64_t shift = static_cast<std::int64_t>(c.e - 1) * (c.n - 1);
    struct Pred {
        std::string name;
        std::function<IdList(std::size_t)> at;
        bool dual_shifted;  // uses the (e-1)(n-1) twist after dualising
    };
    std::vector<Pred> preds;
    const bool jh = c.n <= 3;
    preds.push_back({"w_obv", [&](std::size_t t) { return en.obv()[t]; }, true});
    if (jh) {
        preds.push_back({"closure", [&](std::size_t t) { return en.closure(en.obv()[t]); }, true});
        preds.push_back({"w_expl", [&](std::size_t t) { return en.expl()[t]; }, true});
    }
    if (c.n == 3 && c.f == 1 && c.e == 1) {
        preds.push_back({"w_q_gl3", [&](std::size_t t) { return en.wq_gl3()[t]; }, false});
        preds.push_back({"adp", [&](std::size_t t) { return en.adp()[t]; }, false});
    }
    if (c.e == 1 && jh) preds.push_back({"w_q_generic", [&](std::size_t t) { return en.wq_generic()[t]; }, false});
    for (auto& pr : preds) pr.at(0);  // build tables before the workers start
    if (c.e == 1) en.generic_depth();
    const auto& types = en.types();
    scan_items(types.size(), jobs, [&](std::size_t t) -> std::optional<Json> {
        const auto& ty = types[t];
        if (dual(dual(ty)) != ty) return prop_violation(c, "dual involution on types", type_json(ty));
        const std::size_t dt = en.type_id(twist(dual(ty), shift));
        const std::size_t d0 = en.type_id(dual(ty));
        const std::size_t tw = en.type_id(twist(ty, 1));
        for (const auto& pr : preds) {
            const IdList base = pr.at(t);
            if (pr.at(pr.dual_shifted ? dt : d0) != map_ids(base, dual_of))
                return prop_violation(c, "dual equivariance of " + pr.name, type_json(ty));
            if (pr.at(tw) != map_ids(base, twist_of))
                return prop_violation(c, "twist equivariance of " + pr.name, type_json(ty));
        }
        if (c.e == 1) {
            const auto& g = en.generic_depth();
            if (g[d0] != g[t] || g[tw] != g[t]) return prop_violation(c, "invariance of genericity", type_json(ty));
        }
        return std::nullopt;
    }, em);
}

void structural_jh(const Context& c, const Engine& en, int jobs, Emitter& em) {
    if (c.n > 3) return;
    const std::size_t q1 = static_cast<std::size_t>(c.q() - 1);
    const std::size_t nb = en.index().size() / q1;
    // twisting commutes with reduction, so the weights with c = 0 suffice
    scan_items(nb, jobs, [&](std::size_t g) -> std::optional<Json> {
        const auto a = en.index().at(g * q1);
        for (const auto& lam : lifts_of(a)) {
            const auto jh = jh_L_lambda(lam);
            std::int64_t dim = 1;
            for (const auto& col : lam.cols) dim *= weyl_dim(col);
            if (jh.total_dim() != dim)
                return prop_violation(c, "JH dimension conservation", Json{{"weight", a.rows}, {"lift", lam.cols}});
            if (!jh.contains(a) || jh.entries.at(a) != 1)
                return prop_violation(c, "lift reduction contains F(a) once", Json{{"weight", a.rows}, {"lift", lam.cols}});
            for (const auto& [b, m] : jh.entries)
                if (b != a && norm(b) >= norm(a))
                    return prop_violation(c, "norm decrease",
                                          Json{{"weight", a.rows}, {"lift", lam.cols}, {"factor", b.rows}});
        }
        return std::nullopt;
    }, em);
}

void structural_tau_orbits(const Context& c, Emitter& em) {
    // (w, mu) -> (sigma w pi sigma^-1 pi^-1, sigma mu + (p - sigma w pi sigma^-1 pi^-1) nu)
    std::mt19937 rng(static_cast<unsigned>(c.p * 1000 + c.f * 100 + c.e * 10 + c.n));
    const int f = c.f, n = c.n;
    auto rand_perm = [&] {
        Perm s = identity_perm(n);
        std::shuffle(s.begin(), s.end(), rng);
        return s;
    };
    auto rand_matrix = [&](int lo, int hi) {
        std::uniform_int_distribution<int> u(lo, hi);
        Matrix m(f, Row(n));
        for (auto& r : m)
            for (auto& x : r) x = u(rng);
        return m;
    };
    auto act = [&](const Perm& s, const Row& x) {
        Row y(n);
        for (int i = 0; i < n; ++i) y[s[i]] = x[i];
        return y;
    };
    for (int it = 0; it < 400; ++it) {
        std::vector<Perm> w(f), sg(f), w2(f);
        for (int j = 0; j < f; ++j) {
            w[j] = rand_perm();
            sg[j] = rand_perm();
        }
        const auto mu = rand_matrix(-12, 12);
        const auto nu = rand_matrix(-4, 4);
        for (int j = 0; j < f; ++j) w2[j] = compose(compose(sg[j], w[j]), inverse(sg[(j - 1 + f) % f]));
        Matrix mu2(f, Row(n));
        for (int j = 0; j < f; ++j) {
            const Row a = act(sg[j], mu[j]);
            const Row b = act(w2[j], nu[(j - 1 + f) % f]);
            for (int i = 0; i < n; ++i) mu2[j][i] = a[i] + c.p * nu[j][i] - b[i];
        }
        ++em.rep.checked;
        if (!equivalent(tau_from_pair(w, mu, c), tau_from_pair(w2, mu2, c)))
            em.add(prop_violation(c, "tau constant on affine Weyl orbits", Json{{"mu", mu}, {"nu", nu}}));
    }
}

std::vector<DotWeight> dominant_box(const Context& c, int lo, int hi) {
    std::vector<DotWeight> out;
    Row r(c.n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == c.n) {
            out.push_back(DotWeight{c, {r}});
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            if (i > 0 && v > r[i - 1]) continue;
            r[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

void structural_x_mu_nu(const Context& c0, int jobs, Emitter& em) {
    if (c0.n < 2 || c0.n > 3) return;
    const Context c{c0.p, 1, 1, c0.n};
    const int n = c.n, p = c.p;
    std::vector<DotWeight> mus;
    for (const auto& b : dominant_box(c, -4, 2 * p))
        if (b.rows[0][n - 1] == 0 && is_p_regular(b) && b.rows[0][0] <= p + 1) mus.push_back(b);
    const auto nus = dominant_box(c, -1, 1);
    const auto lams = dominant_box(c, -6, 2 * p + 2);
    scan_items(lams.size(), jobs, [&](std::size_t i) -> std::optional<Json> {
        for (const auto& mu : mus)
            for (const auto& nu : nus) {
                DotWeight target = mu;
                for (int k = 0; k < n; ++k) target.rows[0][k] += p * nu.rows[0][k];
                if (x_mu_nu_membership(lams[i], mu, nu) != up(lams[i], target))
                    return prop_violation(c, "X(mu, nu) membership equals up(lam, mu + p nu)",
                                          Json{{"lambda", lams[i].rows}, {"mu", mu.rows}, {"nu", nu.rows}});
            }
        return std::nullopt;
    }, em);
}

void scan_structural(int p, const ScanSpec& s, int jobs, Emitter& em) {
    require_ctx(s.n <= 3, "structural", "n <= 3");
    const Context c{p, s.f, s.e, s.n};
    c.validate();
    const Engine& en = Engine::get(c);
    structural_weights(c, en, jobs, em);
    structural_types(c, en, jobs, em);
    structural_jh(c, en, jobs, em);
    structural_tau_orbits(c, em);
    structural_x_mu_nu(c, jobs, em);
    em.rep.info[pkey(p)] = Json{{"weights", en.index().size()}, {"types", en.types().size()}};
}

}  // namespace

Json ScanReport::to_json() const {
    return Json{{"check", check},
                {"checked", checked},
                {"violations", violations},
                {"ok", ok()},
                {"info", info},
                {"counterexamples", counterexamples}};
}

const std::vector<std::string>& scan_checks() {
    static const std::vector<std::string> names{"gl3-comparison", "main-result", "nonempty", "yewang", "tables",
                                                "adp-subset",     "shift-report", "digits",  "structural"};
    return names;
}

ScanReport run_scan(const ScanSpec& s, const CounterexampleSink& sink) {
    const auto& names = scan_checks();
    if (std::find(names.begin(), names.end(), s.check) == names.end())
        throw InputError("unknown check \"" + s.check + "\"");
    if (s.ps.empty()) throw InputError("no primes given");
    if (s.n < 1 || s.f < 1 || s.e < 1) throw InputError("n, f and e must be positive");
    for (int p : s.ps)
        if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    const int jobs = resolve_jobs(s.jobs);
    const std::int64_t delta = s.delta < 0 ? s.n : s.delta;
    const bool gl3_only = s.check == "gl3-comparison" || s.check == "adp-subset";
    if (gl3_only) require_ctx(s.n == 3 && s.f == 1 && s.e == 1, s.check, "n = 3 and f = e = 1");

    ScanReport rep;
    rep.check = s.check;
    Emitter em{rep, sink};
    std::vector<int> ps = s.ps;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (int p : ps) {
        if (s.check == "gl3-comparison")
            scan_gl3_comparison(p, jobs, em);
        else if (s.check == "main-result")
            scan_main_result(p, s, delta, jobs, em);
        else if (s.check == "adp-subset")
            scan_adp_subset(p, delta, jobs, em);
        else if (s.check == "nonempty")
            scan_nonempty(p, s, jobs, em);
        else if (s.check == "yewang")
            scan_yewang(p, s, jobs, em);
        else if (s.check == "tables")
            scan_tables(p, em);
        else if (s.check == "shift-report")
            scan_shift_report(p, s, em);
        else if (s.check == "digits")
            scan_digits(p, s, jobs, em);
        else
            scan_structural(p, s, jobs, em);
    }
    return rep;
}

}  // namespace sw
