#pragma once

#include "sw/weight_lattice.hpp"

#include <map>
#include <vector>

namespace sw {

struct JHList {
    Context ctx;
    std::map<SerreWeight, std::int64_t> entries;

    std::int64_t total_dim() const;
    std::vector<SerreWeight> weights() const;
    bool contains(const SerreWeight& a) const { return entries.count(a) > 0; }
};

// Dimension of the Weyl module W(lambda) for GL_n.
std::int64_t weyl_dim(const Row& lambda);
// Dimension of the restricted simple module L(a) for GL_n, n <= 3.
std::int64_t simple_dim(const Row& a, int p);
std::int64_t serre_dim(const SerreWeight& a);

// GL_2(F_p) constituents of W(gap + base, base), gap <= 2p - 1.
JHList jh_weyl_gl2(std::int64_t gap, std::int64_t base, const Context& ctx);
// GL_3(F_p) constituents of W(a) for restricted a.
JHList jh_weyl_gl3_restricted(const Row& a, const Context& ctx);
// Constituents of L_lambda over k for a Hodge type lambda, n <= 3.
JHList jh_L_lambda(const HodgeType& lam);
// Cross-sigma product of per-embedding lists (each with f = 1) into ctx.
JHList jh_product(const std::vector<JHList>& per_sigma, const Context& ctx);

}  // namespace sw
