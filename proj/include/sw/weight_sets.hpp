#pragma once

#include "sw/tame_types.hpp"
#include "sw/weight_lattice.hpp"

#include <set>
#include <vector>

namespace sw {

using WeightSet = std::set<SerreWeight>;

WeightSet w_obv(const TameType& t);
WeightSet closure_C(const WeightSet& w, const Context& ctx);
WeightSet w_expl(const TameType& t);
WeightSet w_q_gl3(const TameType& t);
WeightSet w_q_generic(const TameType& t);
WeightSet adp_weights(const TameType& t);

// Largest delta for which t is delta-generic, or -1 if none.
std::int64_t genericity(const TameType& t);
bool is_delta_generic(const TameType& t, std::int64_t delta);

struct ShiftEntry {
    SerreWeight weight;
    int i0;
    SerreWeight shifted;
    bool member;
};
struct ShiftReport {
    std::vector<ShiftEntry> entries;
    bool closed() const;
};
ShiftReport is_shift_closed(const WeightSet& w);

WeightSet dual_set(const WeightSet& w);
WeightSet twist_set(const WeightSet& w, std::int64_t c);
WeightSet regular_part(const WeightSet& w);

// A ∈ reg(mu - eta) followed by r, for n = 3, f = e = 1.
WeightSet a_set(const Row& mu, const Context& ctx);

}  // namespace sw
