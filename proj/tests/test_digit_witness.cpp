#include "sw/digit_witness.hpp"
#include "sw/weight_sets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace sw;

namespace {

std::int64_t ip(std::int64_t b, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

// Literal search: every x in [-(d+2)p, (d+2)p]^{df} whose residue classes are
// strict chains with gaps at most p, recorded by sum x_i p^i mod p^{df}-1.
std::vector<bool> box_reachable(int d, int f, int p) {
    const int L = d * f;
    const std::int64_t M = ip(p, L) - 1;
    const std::int64_t B = static_cast<std::int64_t>(d + 2) * p;
    std::vector<bool> hit(static_cast<std::size_t>(M), false);
    std::vector<std::int64_t> x(L, -B);
    auto chain_ok = [&] {
        for (int c = 0; c < f; ++c) {
            std::vector<std::int64_t> h;
            for (int i = c; i < L; i += f) h.push_back(x[i]);
            std::sort(h.rbegin(), h.rend());
            for (std::size_t k = 0; k + 1 < h.size(); ++k)
                if (h[k] - h[k + 1] <= 0 || h[k] - h[k + 1] > p) return false;
        }
        return true;
    };
    for (;;) {
        if (chain_ok()) {
            std::int64_t s = 0;
            for (int i = L - 1; i >= 0; --i) s = s * p + x[i];
            hit[static_cast<std::size_t>(((s % M) + M) % M)] = true;
        }
        int i = 0;
        while (i < L && ++x[i] > B) x[i++] = -B;
        if (i == L) break;
    }
    return hit;
}

struct Grid {
    int d, f, p;
};

std::vector<Grid> sweep_grid() {
    std::vector<Grid> g;
    for (int p : {3, 5, 7})
        for (int f = 1; f <= 2; ++f)
            for (int d = 1; d <= 4; ++d) g.push_back({d, f, p});
    return g;
}

}  // namespace

TEST(DigitWitness, ExcludedClassThrows) {
    EXPECT_TRUE(is_excluded_class(2, 1, 5, 6));
    EXPECT_TRUE(is_excluded_class(2, 1, 5, 0));
    EXPECT_FALSE(is_excluded_class(2, 1, 5, 7));
    EXPECT_FALSE(is_excluded_class(2, 2, 5, 6));
    EXPECT_FALSE(is_excluded_class(4, 1, 5, 0));
    EXPECT_THROW(construct(2, 1, 5, 6), ExcludedClass);
    EXPECT_THROW(construct(2, 1, 3, 8), ExcludedClass);
}

TEST(DigitWitness, NiveauTwoExample) {
    const auto w = construct(2, 1, 5, 7);
    ASSERT_EQ(w.x.size(), 2u);
    EXPECT_EQ(((w.x[0] + 5 * w.x[1]) % 24 + 24) % 24, 7);
    const auto gap = std::abs(w.x[0] - w.x[1]);
    EXPECT_GT(gap, 0);
    EXPECT_LE(gap, 5);
    EXPECT_TRUE(verify(w, 7));
    EXPECT_TRUE(box_reachable(2, 1, 5)[7]);
}

TEST(DigitWitness, NiveauOneGivesDigits) {
    for (int f : {1, 2, 3})
        for (std::int64_t N : {0, 1, 7, 20}) {
            if (N >= ip(3, f) - 1) continue;
            const auto w = construct(1, f, 3, N);
            std::int64_t r = N;
            for (int i = 0; i < f; ++i, r /= 3) EXPECT_EQ(w.x[i], r % 3);
        }
}

TEST(DigitWitness, DivisibleClassUsesFixedSequence) {
    // N = 0 with d = 4 and d = 6 at p = 5
    auto w = construct(4, 1, 5, 0);
    EXPECT_EQ(w.x, (Row{5, 9, 3, -1}));
    w = construct(6, 1, 5, 0);
    EXPECT_EQ(w.x, (Row{5, 9, 3, -1, 10, -2}));
    // a non-zero multiple of (p^d-1)/(p-1) shifts every entry by the quotient
    w = construct(4, 1, 5, 3 * 156);
    EXPECT_EQ(w.x, (Row{8, 12, 6, 2}));
    EXPECT_TRUE(verify(w, 3 * 156));
}

TEST(DigitWitness, ChainsAreSortedClasses) {
    const auto w = construct(3, 2, 5, 12345);
    ASSERT_EQ(w.chains.size(), 2u);
    for (int c = 0; c < 2; ++c) {
        Row h;
        for (int i = c; i < 6; i += 2) h.push_back(w.x[i]);
        std::sort(h.rbegin(), h.rend());
        EXPECT_EQ(w.chains[c], h);
    }
}

TEST(DigitWitness, VerifyRejectsTampering) {
    auto w = construct(3, 1, 5, 77);
    ASSERT_TRUE(verify(w, 77));
    EXPECT_FALSE(verify(w, 78));
    auto bad = w;
    bad.x[0] += 1;
    EXPECT_FALSE(verify(bad, 77));
    bad = w;
    bad.x[1] = bad.x[0];  // breaks strictness, chains now stale as well
    EXPECT_FALSE(verify(bad, 77));
    bad = w;
    bad.x = {0, 6, 12};
    bad.chains = {{12, 6, 0}};
    EXPECT_FALSE(verify(bad, 0 + 6 * 5 + 12 * 25));  // gaps exceed p
}

TEST(DigitWitness, FullSweepConstructsEveryClass) {
    for (const auto& g : sweep_grid()) {
        const std::int64_t M = ip(g.p, g.d * g.f) - 1;
        for (std::int64_t N = 0; N < M; ++N) {
            if (is_excluded_class(g.d, g.f, g.p, N)) {
                EXPECT_THROW(construct(g.d, g.f, g.p, N), ExcludedClass);
                continue;
            }
            const auto w = construct(g.d, g.f, g.p, N);
            ASSERT_TRUE(verify(w, N)) << "d=" << g.d << " f=" << g.f << " p=" << g.p << " N=" << N;
        }
    }
}

TEST(DigitWitness, OddResidueDegreesAboveOne) {
    const std::vector<Grid> grid{{2, 3, 3}, {3, 3, 3}, {2, 3, 5}, {2, 5, 3}, {2, 4, 3}, {3, 4, 2}, {2, 3, 2}};
    for (const auto& g : grid) {
        const std::int64_t M = ip(g.p, g.d * g.f) - 1;
        for (std::int64_t N = 0; N < M; ++N)
            ASSERT_TRUE(verify(construct(g.d, g.f, g.p, N), N))
                << "d=" << g.d << " f=" << g.f << " p=" << g.p << " N=" << N;
    }
}

TEST(DigitWitness, BruteForceMatchesExclusion) {
    for (const auto& g : sweep_grid()) {
        const std::int64_t M = ip(g.p, g.d * g.f) - 1;
        const ChainResidues cr(g.d, g.f, g.p);
        for (std::int64_t N = 0; N < M; ++N)
            ASSERT_EQ(cr.reachable(N), !is_excluded_class(g.d, g.f, g.p, N))
                << "d=" << g.d << " f=" << g.f << " p=" << g.p << " N=" << N;
    }
    EXPECT_TRUE(brute_force_exists(3, 2, 5, 4000));
    EXPECT_FALSE(brute_force_exists(2, 1, 7, 16));
}

TEST(DigitWitness, BoxSearchAgreesWithResidueOracle) {
    const std::vector<Grid> grid{{2, 1, 3}, {2, 1, 5}, {3, 1, 3}, {2, 2, 3}, {2, 1, 7}, {3, 1, 2}, {2, 1, 2}};
    for (const auto& g : grid) {
        const auto hit = box_reachable(g.d, g.f, g.p);
        for (std::size_t N = 0; N < hit.size(); ++N)
            EXPECT_EQ(hit[N], brute_force_exists(g.d, g.f, g.p, static_cast<std::int64_t>(N)))
                << "d=" << g.d << " f=" << g.f << " p=" << g.p << " N=" << N;
    }
}

class ObviousWitnessSweep : public ::testing::TestWithParam<Context> {};

TEST_P(ObviousWitnessSweep, WitnessIsAnObviousWeight) {
    const Context c = GetParam();
    for (const auto& t : enumerate_types(c)) {
        const auto w = obvious_witness(t);
        ASSERT_TRUE(verify_obvious_witness(t, w)) << c.str();
        ASSERT_TRUE(w_obv(t).count(w.weight)) << c.str();
    }
}

INSTANTIATE_TEST_SUITE_P(SmallContexts, ObviousWitnessSweep,
                         ::testing::Values(Context{2, 1, 1, 2}, Context{2, 1, 1, 3}, Context{3, 1, 1, 3},
                                           Context{5, 1, 1, 3}, Context{3, 1, 1, 4}, Context{3, 2, 1, 2},
                                           Context{3, 2, 1, 3}, Context{2, 1, 2, 2}, Context{3, 1, 2, 2},
                                           Context{5, 1, 2, 2}, Context{3, 1, 2, 3}, Context{3, 2, 2, 2},
                                           Context{2, 3, 1, 2}, Context{3, 1, 3, 2}));

TEST(ObviousWitness, RejectsForgedWitness) {
    const Context c{5, 1, 1, 3};
    const auto types = enumerate_types(c);
    const auto& t = types[17];
    auto w = obvious_witness(t);
    ASSERT_TRUE(verify_obvious_witness(t, w));

    auto bad = w;
    bad.weight = twist(w.weight, 1);
    EXPECT_FALSE(verify_obvious_witness(t, bad));

    bad = w;
    bad.blocks.front().lambda.front() += 1;
    EXPECT_FALSE(verify_obvious_witness(t, bad));

    bad = w;
    bad.blocks.pop_back();
    EXPECT_FALSE(verify_obvious_witness(t, bad));

    EXPECT_FALSE(verify_obvious_witness(types[18] == t ? types[19] : types[18], w));
}

TEST(ObviousWitness, RamifiedNiveauTwoNeedsTheSwap) {
    // e = 2, f = 1, n = 2: irreducible pieces whose adjusted exponent is a
    // multiple of p + 1 must still produce a witness
    const Context c{5, 1, 2, 2};
    int irreducible = 0, swapped = 0;
    for (const auto& t : enumerate_types(c)) {
        if (t.pieces.size() != 1) continue;
        ++irreducible;
        const auto w = obvious_witness(t);
        EXPECT_TRUE(verify_obvious_witness(t, w));
        ASSERT_EQ(w.blocks.size(), 1u);
        // the second embedding above sigma_0 carries {1, 0} unless swapped
        if (w.blocks[0].lambda[1] == 0) ++swapped;
    }
    EXPECT_EQ(irreducible, 10);  // (25 - 5) / 2 primitive orbits
    EXPECT_GT(swapped, 0);
}
