#pragma once

#include "sw/context.hpp"

#include <optional>
#include <vector>

namespace sw {

/// A Serre weight in canonical form.
///
/// Row j belongs to the embedding sigma_j of k, with sigma_{j+1} = sigma_j^p.
/// The canonical representative has a_{j,n} = 0 for j >= 1 and
/// a_{0,n} in [0, p^f - 2].
struct SerreWeight {
    Context ctx;
    Matrix rows;

    auto operator<=>(const SerreWeight&) const = default;
};

/// lambda in (Z^n_+)^{S_K}; column kappa lies over sigma_{kappa / e}.
struct HodgeType {
    Context ctx;
    Matrix cols;

    auto operator<=>(const HodgeType&) const = default;
};

inline int residue_of(int kappa, const Context& ctx) { return kappa / ctx.e; }

SerreWeight canonicalize(const Matrix& raw, const Context& ctx);
bool is_restricted(const Matrix& raw, const Context& ctx);

std::vector<HodgeType> lifts_of(const SerreWeight& a);
std::int64_t norm(const SerreWeight& a);
SerreWeight dual_weight(const SerreWeight& a);
SerreWeight twist(const SerreWeight& a, std::int64_t c);
bool is_regular(const SerreWeight& a);
std::optional<SerreWeight> shift_of(const SerreWeight& a, int i0);
std::vector<SerreWeight> enumerate_all(const Context& ctx);

// Dense indexing of all canonical weights at a context; used by the
// exhaustive engines. The index order is not the lexicographic order.
class WeightIndex {
public:
    explicit WeightIndex(const Context& ctx);
    std::size_t size() const { return size_; }
    std::size_t index_of(const SerreWeight& a) const;
    SerreWeight at(std::size_t idx) const;
    const Context& ctx() const { return ctx_; }

private:
    Context ctx_;
    std::int64_t q1_;
    std::size_t size_;
};

}  // namespace sw
