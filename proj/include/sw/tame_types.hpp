#pragma once

#include "sw/context.hpp"
#include "sw/perm.hpp"

#include <vector>

namespace sw {

/// A primitive niveau-d piece: the Frobenius orbit of an exponent N mod q^d - 1,
/// stored as its smallest non-negative member.
struct TamePiece {
    int niveau = 1;
    BigInt exponent;

    auto operator<=>(const TamePiece& o) const {
        if (auto c = niveau <=> o.niveau; c != 0) return c;
        if (exponent < o.exponent) return std::strong_ordering::less;
        if (exponent > o.exponent) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const TamePiece& o) const = default;
};

struct TameType {
    Context ctx;
    std::vector<TamePiece> pieces;  // sorted

    auto operator<=>(const TameType& o) const {
        if (auto c = ctx <=> o.ctx; c != 0) return c;
        return pieces <=> o.pieces;
    }
    bool operator==(const TameType& o) const = default;
};

// Canonical decomposition of a (possibly imprimitive) niveau-d exponent class.
std::vector<TamePiece> split_piece(int d, const BigInt& N, const Context& ctx);

// Assembles a type from raw (d, N) data; ctx.n is replaced by the total niveau.
TameType make_type(const Context& ctx, const std::vector<std::pair<int, BigInt>>& raw);

TameType tau_from_pair(const std::vector<Perm>& w, const Matrix& mu, const Context& ctx);
bool is_good(const std::vector<Perm>& w, const Matrix& mu, const Context& ctx);
bool equivalent(const TameType& a, const TameType& b);
TameType dual(const TameType& t);
TameType twist(const TameType& t, std::int64_t c);
// Twist by omega_{sigma_0}^c, matching c added to the first row of a weight.
TameType twist_fundamental(const TameType& t, std::int64_t c);
TameType direct_sum(const std::vector<TameType>& parts);

// b_sigma = sum of lambda_kappa over the e embeddings above sigma.
Row reduce_crystalline_character(const Row& lambda, const Context& ctx);

// Inertial type of Ind from K_d of the crystalline character with labelled
// weights lambda (e*f*d entries, embedding kappa' over sigma'_{kappa'/e}).
TameType reduce_induced(const Row& lambda, int d, const Context& ctx);

// Every canonical type at ctx (multisets of primitive pieces with total niveau n).
std::vector<TameType> enumerate_types(const Context& ctx);
std::vector<BigInt> primitive_exponents(int d, const Context& ctx);

}  // namespace sw
