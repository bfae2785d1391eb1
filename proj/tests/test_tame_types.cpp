#include "doctest.h"

#include "sw/tame_types.hpp"

#include <algorithm>
#include <random>

using namespace sw;

namespace {

// Multiset of characters of k_M^x (M a common multiple of all niveaux) that a
// type restricts to; two types agree iff these multisets agree.
std::vector<BigInt> signature_of(const TameType& t, int M) {
    const BigInt q = ipow(t.ctx.p, t.ctx.f);
    const BigInt qM1 = ipow(t.ctx.p, t.ctx.f * M) - 1;
    std::vector<BigInt> out;
    for (const auto& pc : t.pieces) {
        BigInt qd1 = ipow(t.ctx.p, t.ctx.f * pc.niveau) - 1;
        BigInt lift = qM1 / qd1;
        BigInt x = pc.exponent;
        for (int i = 0; i < pc.niveau; ++i) {
            out.push_back(mod_floor(x * lift, qM1));
            x = mod_floor(x * q, qd1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Direct computation from (w, mu): for each row-0 slot follow the slot map
// (j, i) -> (j + 1, w_{j+1}(i)) and sum p^s mu along the way.
std::vector<BigInt> signature_of_pair(const std::vector<Perm>& w, const Matrix& mu, const Context& c, int M) {
    const BigInt qM1 = ipow(c.p, c.f * M) - 1;
    std::vector<BigInt> out;
    for (int i0 = 0; i0 < c.n; ++i0) {
        int j = 0, i = i0, L = 0;
        do {
            j = (j + 1) % c.f;
            i = w[j][i];
            ++L;
        } while (!(j == 0 && i == i0));
        BigInt E = 0, pw = 1;
        j = 0;
        i = i0;
        for (int s = 0; s < L; ++s) {
            E += pw * mu[j][i];
            pw *= c.p;
            j = (j + 1) % c.f;
            i = w[j][i];
        }
        BigInt mod = ipow(c.p, L) - 1;
        out.push_back(mod_floor(mod_floor(E, mod) * (qM1 / mod), qM1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int common_multiple(int n) { return n == 1 ? 1 : n == 2 ? 2 : n == 3 ? 6 : 12; }

Matrix random_matrix(std::mt19937& rng, int f, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, Row(n));
    for (auto& r : m)
        for (auto& v : r) v = d(rng);
    return m;
}

std::vector<Perm> random_w(std::mt19937& rng, int f, int n) {
    auto all = all_perms(n);
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    std::vector<Perm> w;
    for (int j = 0; j < f; ++j) w.push_back(all[d(rng)]);
    return w;
}

}  // namespace

TEST_CASE("tau for f = 1 follows the cycle formula") {
    Context c{5, 1, 1, 3};
    auto t = tau_from_pair({identity_perm(3)}, {{7, 3, 2}}, c);
    CHECK(t == make_type(c, {{1, 3}, {1, 3}, {1, 2}}));
    // w = (0 1 2): 0 -> 1 -> 2 -> 0, N = mu_0 + p mu_1 + p^2 mu_2
    auto t3 = tau_from_pair({Perm{1, 2, 0}}, {{4, 2, 0}}, c);
    REQUIRE(t3.pieces.size() == 1);
    CHECK(t3.pieces[0].niveau == 3);
    BigInt N = 4 + 5 * 2;
    BigInt best = N;
    for (int i = 0; i < 3; ++i) {
        N = N * 5 % 124;
        best = std::min(best, N);
    }
    CHECK(t3.pieces[0].exponent == best);
}

TEST_CASE("tau for a transposition") {
    for (int p : {3, 5, 7}) {
        Context c{p, 1, 1, 2};
        for (int m1 = -p; m1 <= 2 * p; ++m1)
            for (int m2 = -p; m2 <= 2 * p; ++m2) {
                auto t = tau_from_pair({Perm{1, 0}}, {{m1, m2}}, c);
                bool split = mod_floor(m1 - m2, p + 1) == 0;
                CHECK(is_good({Perm{1, 0}}, {{m1, m2}}, c) == !split);
                if (split) {
                    CHECK(t.pieces.size() == 2);
                } else {
                    REQUIRE(t.pieces.size() == 1);
                    BigInt N = mod_floor(BigInt(m1 + p * m2), BigInt(p * p - 1));
                    BigInt N2 = N * p % (p * p - 1);
                    CHECK(t.pieces[0].exponent == std::min(N, N2));
                }
            }
    }
}

TEST_CASE("3-cycles on eta-shifted regular weights are good") {
    for (int p : {5, 7}) {
        Context c{p, 1, 1, 3};
        for (int g1 = 0; g1 <= p - 2; ++g1)
            for (int g2 = 0; g2 <= p - 2; ++g2)
                for (const Perm& w : {Perm{1, 2, 0}, Perm{2, 0, 1}}) {
                    Matrix mu{{g1 + g2 + 2, g2 + 1, 0}};
                    CHECK(is_good({w}, mu, c));
                    CHECK(tau_from_pair({w}, mu, c).pieces.size() == 1);
                }
    }
}

TEST_CASE("tau agrees with the slot-walk signature") {
    std::mt19937 rng(7);
    for (Context c : {Context{5, 1, 1, 3}, Context{3, 2, 1, 3}, Context{5, 2, 1, 2}, Context{2, 2, 1, 3},
                      Context{3, 1, 1, 4}}) {
        int M = common_multiple(c.n);
        for (int it = 0; it < 400; ++it) {
            auto w = random_w(rng, c.f, c.n);
            auto mu = random_matrix(rng, c.f, c.n, -30, 30);
            auto t = tau_from_pair(w, mu, c);
            int total = 0;
            for (const auto& pc : t.pieces) total += pc.niveau;
            CHECK(total == c.n);
            CHECK(signature_of(t, M) == signature_of_pair(w, mu, c, M));
            CHECK(make_type(c, [&] {
                      std::vector<std::pair<int, BigInt>> raw;
                      for (const auto& pc : t.pieces) raw.emplace_back(pc.niveau, pc.exponent);
                      return raw;
                  }()) == t);
        }
    }
}

TEST_CASE("goodness matches the cycle type for f = 1") {
    for (int p : {3, 5}) {
        Context c{p, 1, 1, 3};
        for (const auto& w : all_perms(3)) {
            std::vector<int> ct;
            for (const auto& cy : cycles(w)) ct.push_back(static_cast<int>(cy.size()));
            std::sort(ct.begin(), ct.end());
            for (int a = 0; a < p * p; ++a)
                for (int b = 0; b < p * p; b += 2)
                    for (int d = 0; d < p; ++d) {
                        Matrix mu{{a, b, d}};
                        auto t = tau_from_pair({w}, mu, c);
                        std::vector<int> nv;
                        for (const auto& pc : t.pieces) nv.push_back(pc.niveau);
                        std::sort(nv.begin(), nv.end());
                        CHECK(is_good({w}, mu, c) == (nv == ct));
                    }
        }
    }
    CHECK(is_good({identity_perm(3)}, {{1, 1, 1}}, Context{5, 1, 1, 3}));
}

TEST_CASE("tau is constant on orbits of the extended affine Weyl action") {
    // (w, mu) -> (sigma w pi sigma^-1 pi^-1, sigma mu + (p - sigma w pi sigma^-1) nu),
    // with (pi x)_j = x_{j-1} and sigma, w acting row by row.
    std::mt19937 rng(11);
    for (Context c : {Context{5, 1, 1, 2}, Context{5, 1, 1, 3}, Context{5, 2, 1, 2}, Context{5, 2, 1, 3}}) {
        int f = c.f, n = c.n;
        for (int it = 0; it < 300; ++it) {
            auto w = random_w(rng, f, n);
            auto sg = random_w(rng, f, n);
            auto mu = random_matrix(rng, f, n, -12, 12);
            auto nu = random_matrix(rng, f, n, -4, 4);
            std::vector<Perm> w2(f);
            for (int j = 0; j < f; ++j)
                w2[j] = compose(compose(sg[j], w[j]), inverse(sg[(j - 1 + f) % f]));
            auto act = [&](const Perm& s, const Row& x) {
                Row y(n);
                for (int i = 0; i < n; ++i) y[s[i]] = x[i];
                return y;
            };
            Matrix mu2(f);
            for (int j = 0; j < f; ++j) {
                Row a = act(sg[j], mu[j]);
                Row b = act(w2[j], nu[(j - 1 + f) % f]);
                mu2[j] = Row(n);
                for (int i = 0; i < n; ++i) mu2[j][i] = a[i] + c.p * nu[j][i] - b[i];
            }
            CHECK(equivalent(tau_from_pair(w, mu, c), tau_from_pair(w2, mu2, c)));
        }
    }
}

TEST_CASE("dual and twist commute with tau") {
    std::mt19937 rng(3);
    for (Context c : {Context{5, 1, 1, 3}, Context{3, 2, 1, 3}, Context{5, 2, 1, 2}}) {
        for (int it = 0; it < 300; ++it) {
            auto w = random_w(rng, c.f, c.n);
            auto mu = random_matrix(rng, c.f, c.n, -20, 20);
            Matrix neg = mu, sh = mu;
            int k = static_cast<int>(rng() % 17) - 8;
            for (int j = 0; j < c.f; ++j)
                for (int i = 0; i < c.n; ++i) {
                    neg[j][i] = -mu[j][i];
                    sh[j][i] = mu[j][i] + k;
                }
            auto t = tau_from_pair(w, mu, c);
            CHECK(dual(t) == tau_from_pair(w, neg, c));
            CHECK(dual(dual(t)) == t);
            CHECK(twist(t, k) == tau_from_pair(w, sh, c));
            CHECK(twist(t, c.p - 1) == t);
        }
    }
    for (Context c : {Context{3, 2, 1, 3}, Context{5, 2, 1, 2}, Context{2, 3, 1, 2}}) {
        for (int it = 0; it < 200; ++it) {
            auto w = random_w(rng, c.f, c.n);
            auto mu = random_matrix(rng, c.f, c.n, -20, 20);
            int k = static_cast<int>(rng() % 17) - 8;
            Matrix first = mu;
            for (auto& v : first[0]) v += k;
            auto t = tau_from_pair(w, mu, c);
            CHECK(twist_fundamental(t, k) == tau_from_pair(w, first, c));
            CHECK(twist_fundamental(t, c.q() - 1) == t);
        }
    }
    Context c{7, 1, 1, 3};
    CHECK(dual(make_type(c, {{1, 1}, {1, 2}, {1, 4}})) == make_type(c, {{1, -1}, {1, -2}, {1, -4}}));
}

TEST_CASE("crystalline characters and inductions") {
    CHECK(reduce_crystalline_character({3, 1}, Context{5, 1, 2, 1}) == Row{4});
    CHECK(reduce_crystalline_character({5}, Context{5, 1, 1, 1}) == Row{5});
    CHECK(reduce_crystalline_character({0, 0, 0, 0}, Context{5, 2, 2, 1}) == Row{0, 0});
    Context c{5, 1, 1, 2};
    CHECK(reduce_induced({4}, 1, c) == make_type(c.with_n(1), {{1, 4}}));
    CHECK(reduce_induced({3, 1}, 2, c) == make_type(c, {{2, 3 + 5 * 1}}));
    // {-1, p}: exponent -1 + p^2 = 0 mod p^2 - 1, the trivial 2-dimensional type
    CHECK(reduce_induced({-1, 5}, 2, c) == make_type(c, {{1, 0}, {1, 0}}));
    // K_2 over a ramified K: the two embeddings above each sigma' add up
    Context r{5, 1, 2, 2};
    CHECK(reduce_induced({3, 1, 0, 1}, 2, r) == make_type(r, {{2, 4 + 5 * 1}}));
}

TEST_CASE("type enumeration") {
    for (int p : {2, 3, 5})
        for (int f = 1; f <= 2; ++f)
            for (int n = 1; n <= 4; ++n) {
                if (p == 5 && f == 2 && n == 4) continue;
                Context c{p, f, 1, n};
                auto ts = enumerate_types(c);
                // one type per monic degree-n polynomial over F_q with non-zero constant term
                CHECK(static_cast<std::int64_t>(ts.size()) == (ipow64(p, f) - 1) * ipow64(p, f * (n - 1)));
                CHECK(std::is_sorted(ts.begin(), ts.end()));
                CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
            }
    CHECK(enumerate_types(Context{37, 1, 1, 3}).size() == 36u * 37u * 37u);
}
