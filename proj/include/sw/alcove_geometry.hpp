#pragma once

#include "sw/context.hpp"
#include "sw/perm.hpp"

#include <optional>
#include <vector>

namespace sw {

// A point of X(T) = (Z^n)^f, not necessarily dominant. rho = eta in each row.
struct DotWeight {
    Context ctx;
    Matrix rows;

    auto operator<=>(const DotWeight&) const = default;
};

// s_{alpha, m p} for alpha = e_i - e_j (i < j) in one row.
struct AffineReflection {
    int row = 0;
    int i = 0;
    int j = 1;
    std::int64_t m = 0;
};

DotWeight dot(const std::vector<Perm>& w, const DotWeight& lam);
DotWeight dot(const AffineReflection& s, const DotWeight& lam);

// <lam + rho, (e_i - e_j)^vee> in the given row.
std::int64_t pairing(const DotWeight& lam, int row, int i, int j);

bool is_dominant(const DotWeight& lam);
bool is_p_regular(const DotWeight& lam);
std::int64_t depth(const DotWeight& lam);         // throws NotPRegular
std::int64_t alcove_index(const DotWeight& lam);  // d(lam), throws NotPRegular
bool in_lowest_alcove(const DotWeight& lam);

bool same_linkage(const DotWeight& a, const DotWeight& b);
bool root_leq(const DotWeight& a, const DotWeight& b);  // b - a in N Phi^+

bool up(const DotWeight& lam, const DotWeight& mu);
// The same relation with only reflections s_{alpha, m p}, m >= 0.
bool double_up(const DotWeight& lam, const DotWeight& mu);

std::vector<DotWeight> dominant_predecessors(const DotWeight& lam);
// Same set computed by walking through dominant weights only.
std::vector<DotWeight> dominant_predecessors_via_dominant(const DotWeight& lam);

// Dominant chain from C_from to C_to with unit steps in d; empty chain when equal.
std::optional<std::vector<DotWeight>> yewang_chain(const DotWeight& from, const DotWeight& to);

bool x_mu_nu_membership(const DotWeight& lam, const DotWeight& mu, const DotWeight& nu);

// Dominant points of W_p . 0 with d <= max_d (one per dominant alcove).
std::vector<DotWeight> dominant_alcove_points(const Context& ctx, std::int64_t max_d);

}  // namespace sw
