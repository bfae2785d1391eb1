#include "doctest.h"

#include "sw/weight_lattice.hpp"

#include <set>

using namespace sw;

namespace {

// Two raw tuples are equivalent iff they differ by row constants x_j with
// sum p^j x_j = 0 mod p^f - 1.
bool oracle_equivalent(const Matrix& a, const Matrix& b, const Context& ctx) {
    std::int64_t s = 0;
    for (int j = 0; j < ctx.f; ++j) {
        std::int64_t x = b[j][ctx.n - 1] - a[j][ctx.n - 1];
        for (int i = 0; i < ctx.n; ++i)
            if (b[j][i] - a[j][i] != x) return false;
        s += x * ipow64(ctx.p, j);
    }
    return mod_floor(s, ctx.q() - 1) == 0;
}

std::vector<Matrix> raw_box(const Context& ctx, int lo, int hi) {
    std::vector<Row> rows;
    Row r(ctx.n);
    std::function<void(int)> rec = [&](int i) {
        if (i == ctx.n) {
            rows.push_back(r);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            if (i > 0 && (v > r[i - 1] || r[i - 1] - v > ctx.p - 1)) continue;
            r[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::vector<Matrix> out{{}};
    for (int j = 0; j < ctx.f; ++j) {
        std::vector<Matrix> next;
        for (const auto& m : out)
            for (const auto& row : rows) {
                auto u = m;
                u.push_back(row);
                next.push_back(u);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalize fixtures") {
    Context c{5, 1, 1, 3};
    CHECK(canonicalize({{7, 4, 4}}, c).rows == Matrix{{3, 0, 0}});
    CHECK(canonicalize({{6, 3, 2}}, c).rows == Matrix{{6, 3, 2}});
    CHECK_THROWS_AS(canonicalize({{9, 3, 2}}, c), NotRestricted);
    CHECK_THROWS_AS(canonicalize({{1, 3, 2}}, c), NotRestricted);

    Context c2{3, 2, 1, 2};
    Matrix a{{2, 0}, {2, 0}};
    Matrix b{{3, 1}, {5, 3}};  // shifted by x = (1, 3), 1 + 3*3 = 10 != 0 mod 8
    CHECK(canonicalize(a, c2) != canonicalize(b, c2));
    Matrix b2{{4, 2}, {5, 3}};  // x = (2, 3): 2 + 9 = 11 != 0 mod 8
    CHECK(canonicalize(a, c2) != canonicalize(b2, c2));
    Matrix b3{{3, 1}, {7, 5}};  // x = (1, 5): 16 = 0 mod 8
    CHECK(canonicalize(a, c2) == canonicalize(b3, c2));
}

TEST_CASE("canonical forms separate exactly the equivalence classes") {
    for (Context c : {Context{3, 1, 1, 2}, Context{3, 2, 1, 2}, Context{2, 2, 1, 2}, Context{5, 1, 1, 3}}) {
        auto box = raw_box(c, -3, 4);
        std::vector<SerreWeight> canon;
        for (const auto& m : box) canon.push_back(canonicalize(m, c));
        for (std::size_t i = 0; i < box.size(); i += 3)
            for (std::size_t k = 0; k < box.size(); k += 5)
                CHECK((canon[i] == canon[k]) == oracle_equivalent(box[i], box[k], c));
    }
}

TEST_CASE("enumerate_all counts, distinctness and idempotence") {
    CHECK(enumerate_all(Context{3, 1, 1, 2}).size() == 6);
    for (int p : {2, 3, 5})
        for (int f = 1; f <= 2; ++f)
            for (int n = 1; n <= 4; ++n) {
                Context c{p, f, 1, n};
                auto all = enumerate_all(c);
                std::int64_t expect = (ipow64(p, f) - 1) * ipow64(p, f * (n - 1));
                CHECK(static_cast<std::int64_t>(all.size()) == expect);
                std::set<SerreWeight> s(all.begin(), all.end());
                CHECK(s.size() == all.size());
                WeightIndex idx(c);
                CHECK(idx.size() == all.size());
                for (std::size_t i = 0; i < all.size(); i += (all.size() > 5000 ? 37 : 1)) {
                    CHECK(canonicalize(all[i].rows, c) == all[i]);
                    CHECK(idx.at(idx.index_of(all[i])) == all[i]);
                }
            }
}

TEST_CASE("norm") {
    Context c{5, 1, 1, 3};
    CHECK(norm(canonicalize({{6, 3, 2}}, c)) == 8);
    CHECK(norm(canonicalize({{4, 1, 0}}, c)) == 8);
    CHECK(norm(canonicalize({{3, 0}}, Context{5, 1, 1, 2})) == 3);
    for (const auto& a : enumerate_all(Context{5, 2, 1, 3})) CHECK(norm(a) >= 0);
}

TEST_CASE("dual weight") {
    Context c{5, 1, 1, 3};
    auto a = canonicalize({{2, 1, 0}}, c);
    CHECK(dual_weight(a) == a);
    CHECK(dual_weight(canonicalize({{3, 1, 0}}, c)).rows == Matrix{{6, 5, 3}});  // (-2,-3,-5) + 8
    for (Context ctx : {Context{5, 1, 1, 3}, Context{3, 2, 1, 3}, Context{2, 2, 1, 2}})
        for (const auto& w : enumerate_all(ctx)) CHECK(dual_weight(dual_weight(w)) == w);
}

TEST_CASE("twist, regularity, shifts") {
    Context c{5, 1, 1, 3};
    for (Context ctx : {Context{5, 1, 1, 3}, Context{3, 2, 1, 2}}) {
        for (const auto& w : enumerate_all(ctx)) {
            CHECK(twist(w, ctx.p - 1) == w);
            CHECK(twist(twist(w, 3), -3) == w);
        }
    }
    Context c2{5, 1, 1, 2};
    CHECK_FALSE(is_regular(canonicalize({{4, 0}}, c2)));
    CHECK(is_regular(canonicalize({{3, 0}}, c2)));
    auto s = shift_of(canonicalize({{2, 2, 0}}, c), 1);
    REQUIRE(s);
    CHECK(*s == canonicalize({{6, 2, 0}}, c));
    CHECK_FALSE(shift_of(canonicalize({{3, 2, 0}}, c), 1));
    CHECK(shift_of(canonicalize({{3, 0, 0}}, c), 2) == canonicalize({{7, 4, 0}}, c));
}

TEST_CASE("lifts") {
    Context c{5, 1, 2, 3};
    auto a = canonicalize({{2, 1, 0}}, c);
    auto ls = lifts_of(a);
    REQUIRE(ls.size() == 2);
    std::set<Matrix> got{ls[0].cols, ls[1].cols};
    CHECK(got == std::set<Matrix>{{{2, 1, 0}, {0, 0, 0}}, {{0, 0, 0}, {2, 1, 0}}});
    CHECK(lifts_of(canonicalize({{2, 1, 0}}, Context{5, 1, 1, 3})).size() == 1);
    Context c4{3, 2, 2, 2};
    auto l4 = lifts_of(canonicalize({{2, 1}, {1, 0}}, c4));
    CHECK(l4.size() == 4);
    CHECK(std::set<HodgeType>(l4.begin(), l4.end()).size() == 4);
    for (const auto& l : l4)
        for (int k = 0; k < 4; ++k) {
            const auto& col = l.cols[k];
            const Row row = canonicalize({{2, 1}, {1, 0}}, c4).rows[residue_of(k, c4)];
            CHECK((col == row || col == Row{0, 0}));
        }
}
