#pragma once

#include "sw/tame_types.hpp"
#include "sw/weight_lattice.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace sw {

using IdList = std::vector<std::uint32_t>;

/// Exhaustive tables for one context: every canonical weight and type, with
/// the predictor sets stored inverted (type id -> sorted weight indices).
/// Each table is built on first use and shared between threads.
class Engine {
public:
    static const Engine& get(const Context& ctx);

    const Context& ctx() const { return ctx_; }
    const WeightIndex& index() const { return index_; }
    const std::vector<TameType>& types() const;
    std::size_t type_id(const TameType& t) const;  // throws InputError if absent

    const std::vector<IdList>& obv() const;
    const std::vector<IdList>& closure_edges() const;  // b -> weights a with b in JH(L_lift(a))
    const std::vector<IdList>& r2() const;
    const std::vector<IdList>& expl() const;
    const std::vector<IdList>& expl_types_of_weight() const;  // weight -> type ids
    const std::vector<IdList>& wq_gl3() const;
    const std::vector<IdList>& wq_generic() const;
    const std::vector<IdList>& adp() const;
    const std::vector<std::int64_t>& generic_depth() const;

    IdList closure(const IdList& seed) const;

    // Weight index after adding c to the first row.
    std::size_t twist_index(std::size_t idx, std::int64_t c) const;
    // tw[c][t]: id of t twisted by omega_{sigma_0}^c.
    const std::vector<IdList>& twist_table() const;

private:
    explicit Engine(const Context& ctx);

    std::size_t base_count() const;
    std::vector<IdList> expand_types(const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& per_base) const;

    Context ctx_;
    WeightIndex index_;

    mutable std::once_flag types_once_, obv_once_, edges_once_, r2_once_, expl_once_, inv_once_,
        wq_once_, wqg_once_, adp_once_, gen_once_, twist_once_;
    mutable std::vector<TameType> types_;
    mutable std::vector<IdList> tw_, obv_, edges_, r2_, expl_, inv_, wq_, wqg_, adp_;
    mutable std::vector<std::int64_t> gen_;
};

}  // namespace sw
